#include "lct/resolution.hpp"

#include <deque>
#include <sstream>

#include "json.hpp"

#include "lct/error.hpp"
#include "lct/factor.hpp"
#include "lct/localinv.hpp"
#include "lct/parse.hpp"
#include "lct/upoly.hpp"

namespace lct {

std::vector<int> ChartPoint::incident() const {
    std::vector<int> out;
    if (u_div) out.push_back(*u_div);
    if (v_div) out.push_back(*v_div);
    return out;
}

namespace {

int order_at_origin(const BPoly& f) { return static_cast<int>(multiplicity_at_origin(f).value()); }

BPoly chart_x_transform(const BPoly& f, int order) {
    return compose(f, BPoly::x(), BPoly::x() * BPoly::y()).divide_monomial(order, 0);
}

BPoly chart_y_transform(const BPoly& f, int order) {
    return compose(f, BPoly::x() * BPoly::y(), BPoly::y()).divide_monomial(0, order);
}

// Order of g restricted to the axis u = 0 (a function of v) or v = 0.
ExtInt order_on_u_axis(const BPoly& g) { return multiplicity_at_origin(compose(g, BPoly(), BPoly::y())); }
ExtInt order_on_v_axis(const BPoly& g) { return multiplicity_at_origin(compose(g, BPoly::x(), BPoly())); }

bool needs_blowup(const ChartPoint& p) {
    const int mult = order_at_origin(p.equation);
    if (mult >= 2) return true;
    if (mult == 0) return false;
    const auto divs = p.incident();
    if (divs.size() >= 2) return true;
    if (p.u_div && order_on_u_axis(p.equation) != ExtInt(1)) return true;
    if (p.v_div && order_on_v_axis(p.equation) != ExtInt(1)) return true;
    return false;
}

std::string next_label(const std::string& label, int depth) {
    return std::string(1, label.front()) + std::to_string(depth);
}

// t-polynomial whose roots are the slopes v/u picked out by a cone factor.
std::string slope_polynomial(const BPoly& factor) {
    std::vector<Rat> c(static_cast<size_t>(factor.degree().value()) + 1);
    for (const auto& [mono, coeff] : factor.terms()) c[static_cast<size_t>(mono.j)] += coeff;
    return render_univariate(primitive_part(UPoly(c)).second, 't');
}

}  // namespace

BlowupCharts blowup_transform(const BPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "blowup_transform: zero polynomial");
    if (f.constant_term() != 0) throw Error(ErrorCode::not_through_origin, "blowup_transform: f(0,0) != 0");
    const int order = order_at_origin(f);
    return {chart_x_transform(f, order), chart_y_transform(f, order), order};
}

ResolutionTree resolve_over_origin(const BPoly& f, int cap) {
    if (cap < 1) throw Error(ErrorCode::invalid_argument, "cap must be positive");
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "resolve_over_origin: zero polynomial");
    if (f.constant_term() != 0) throw Error(ErrorCode::not_through_origin, "curve does not pass through the origin");
    if (!is_square_free(f)) throw Error(ErrorCode::not_square_free, "curve is not reduced: " + render(f));

    ResolutionTree tree;
    tree.input = f;

    struct Pending {
        ChartPoint point;
        std::optional<int> parent;
        int depth;
    };
    std::deque<Pending> queue;
    queue.push_back({ChartPoint{"x", "y", Point{0, 0}, std::nullopt, std::nullopt, f}, std::nullopt, 0});

    while (!queue.empty()) {
        Pending cur = std::move(queue.front());
        queue.pop_front();
        const ChartPoint& p = cur.point;
        if (!needs_blowup(p)) {
            tree.leaves.push_back(p);
            continue;
        }
        if (static_cast<int>(tree.nodes.size()) >= cap)
            throw Error(ErrorCode::resolution_cap, "more than " + std::to_string(cap) + " blowups needed");

        const int mult = order_at_origin(p.equation);
        ExcDivisor e{static_cast<int>(tree.nodes.size()) + 1, mult, 1};
        for (int id : p.incident()) {
            e.m += tree.divisor(id).m;
            e.a += tree.divisor(id).a;
        }
        tree.nodes.push_back({p, e, cur.parent});

        const int depth = cur.depth + 1;
        const std::string u1 = next_label(p.u_label, depth), v1 = next_label(p.v_label, depth);
        Factorization cone = factor_binary_form(homogeneous_part(p.equation, mult));
        for (const auto& fac : cone.factors) {
            if (fac.poly.degree() != ExtInt(1)) {
                if (fac.exponent >= 2) throw IrrationalCenterError(slope_polynomial(fac.poly));
                continue;  // simple transversal intersection with E
            }
            const Rat alpha = fac.poly.coeff(1, 0), beta = fac.poly.coeff(0, 1);
            if (beta == 0) {
                // the direction u = 0 lives in the chart u = u1*v, v = v
                BPoly g = chart_y_transform(p.equation, mult);
                queue.push_back({ChartPoint{u1, p.v_label, Point{0, 0}, p.u_div, e.id, g}, e.id, depth});
                continue;
            }
            const Rat t = -alpha / beta;
            BPoly g = translate_affine(chart_x_transform(p.equation, mult), Point{0, t});
            std::optional<int> v_div = t == 0 ? p.v_div : std::nullopt;
            queue.push_back({ChartPoint{p.u_label, v1, Point{0, t}, e.id, v_div, g}, e.id, depth});
        }
    }
    tree.complete = true;
    return tree;
}

Rat lct_from_tree(const ResolutionTree& t) {
    if (!t.complete) throw Error(ErrorCode::incomplete_tree, "resolution tree has pending centers");
    Rat best = 1;
    for (const auto& n : t.nodes) best = std::min(best, n.divisor.candidate());
    return best;
}

std::map<int, Rat> log_pullback_coefficients(const ResolutionTree& t, const Rat& lambda) {
    if (!t.complete) throw Error(ErrorCode::incomplete_tree, "resolution tree has pending centers");
    if (lambda <= 0) throw Error(ErrorCode::invalid_argument, "lambda must be positive");
    std::map<int, Rat> out;
    for (const auto& n : t.nodes) out[n.divisor.id] = lambda * n.divisor.m - n.divisor.a;
    return out;
}

std::string export_tree(const ResolutionTree& t, TreeFormat format) {
    if (format == TreeFormat::json) {
        nlohmann::ordered_json j;
        j["input"] = render(t.input);
        j["divisors"] = nlohmann::ordered_json::array();
        for (const auto& n : t.nodes) {
            nlohmann::ordered_json d;
            d["id"] = n.divisor.id;
            d["parent"] = n.parent ? nlohmann::ordered_json(*n.parent) : nlohmann::ordered_json(nullptr);
            d["m"] = n.divisor.m;
            d["a"] = n.divisor.a;
            d["candidate"] = to_string(n.divisor.candidate());
            j["divisors"].push_back(d);
        }
        if (t.complete) j["lct"] = to_string(lct_from_tree(t));
        return j.dump(2);
    }
    std::ostringstream os;
    os << "digraph resolution {\n";
    for (const auto& n : t.nodes) {
        const auto& e = n.divisor;
        os << "  E" << e.id << " [label=\"E" << e.id << " m=" << e.m << " a=" << e.a
           << " cand=" << to_string(e.candidate()) << "\"];\n";
    }
    for (const auto& n : t.nodes)
        if (n.parent) os << "  E" << *n.parent << " -> E" << n.divisor.id << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace lct
