#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lct/acceptance.hpp"
#include "lct/classify.hpp"
#include "lct/error.hpp"
#include "lct/highmult.hpp"
#include "lct/localinv.hpp"
#include "lct/parse.hpp"
#include "lct/resolution.hpp"

namespace lct::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string format = "json";
    std::string point = "0,0";
    std::string projective;
    std::string dot_file;
    std::string weights;
    std::uint64_t seed = 1;
    int cap = default_resolution_cap;
    std::string scope = "fast";
    std::vector<std::string> args;
};

struct Report {
    json payload = json::object();
    std::vector<std::string> diagnostics;
    std::string text;  ///< preformatted text output, if any
    std::optional<Error> failure;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::syntax_error:
        case ErrorCode::non_polynomial:
            return exit_parse_error;
        case ErrorCode::irrational_center:
            return exit_irrational_center;
        case ErrorCode::resolution_cap:
        case ErrorCode::not_classifiable:
        case ErrorCode::incomplete_tree:
        case ErrorCode::internal:
            return exit_internal;
        case ErrorCode::self_test_failure:
            return exit_selftest_failure;
        default:
            return exit_precondition;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

std::pair<Rat, Rat> parse_pair(const std::string& text, const char* what) {
    auto parts = split(text, ',');
    if (parts.size() != 2)
        throw Error(ErrorCode::syntax_error, std::string(what) + " must be two rationals 'A,B', got '" + text + "'");
    return {parse_rat(parts[0]), parse_rat(parts[1])};
}

BPoly read_poly(const Options& o, const std::string& text) {
    return o.projective.empty() ? parse_poly(text) : parse_projective(text, o.projective.at(0));
}

Point read_point(const Options& o) {
    auto [x, y] = parse_pair(o.point, "--point");
    return {x, y};
}

const std::string& arg(const Options& o, size_t i, const char* name) {
    if (i >= o.args.size()) throw Error(ErrorCode::invalid_argument, std::string("missing argument ") + name);
    return o.args[i];
}

json ext_json(const ExtInt& v) { return v.is_finite() ? json(v.value()) : json(v.str()); }

json rat_list(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

json point_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

// The polynomial moved so that the requested point becomes the origin.
BPoly centered(const Options& o, const std::string& text, Point* where = nullptr) {
    Point p = read_point(o);
    if (where) *where = p;
    return translate_affine(read_poly(o, text), p);
}

Report cmd_lct(const Options& o) {
    Point p;
    const BPoly f = centered(o, arg(o, 0, "POLY"), &p);
    Report r;
    r.payload["input"] = arg(o, 0, "POLY");
    r.payload["point"] = point_json(p);
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "zero polynomial");
    if (!is_square_free(f)) throw Error(ErrorCode::not_square_free, "curve is not reduced");
    auto answer = [&](const std::string& value, const char* method) {
        r.payload["lct"] = value;
        r.payload["method"] = method;
    };
    if (f.constant_term() != 0) {
        answer("inf", "off-curve");
        return r;
    }
    const int mult = static_cast<int>(multiplicity_at_origin(f).value());
    const int d = static_cast<int>(f.degree().value());
    if (mult == 1) {
        answer("1", "smooth");
    } else if (d >= 4 && mult == d - 1) {
        answer(to_string(analyze_high_mult(f).lct), "highmult");
    } else if (d <= 5) {
        auto c = classify_singularity(f);
        answer(to_string(c.lct), "classifier");
        r.payload["symbol"] = c.symbol;
    } else {
        answer(to_string(lct_from_tree(resolve_over_origin(f, o.cap))), "resolution");
    }
    r.payload["degree"] = d;
    r.payload["mult"] = mult;
    return r;
}

Report cmd_classify(const Options& o) {
    Point p;
    const BPoly f = centered(o, arg(o, 0, "POLY"), &p);
    auto c = classify_singularity(f);
    Report r;
    r.payload["input"] = arg(o, 0, "POLY");
    r.payload["point"] = point_json(p);
    r.payload["symbol"] = c.symbol;
    r.payload["mult"] = c.mult;
    r.payload["mu"] = c.mu;
    r.payload["cone_pattern"] = c.pattern.entries;
    r.payload["lct"] = to_string(c.lct);
    return r;
}

Report cmd_milnor(const Options& o) {
    Point p;
    const BPoly f = centered(o, arg(o, 0, "POLY"), &p);
    Report r;
    r.payload["input"] = arg(o, 0, "POLY");
    r.payload["point"] = point_json(p);
    r.payload["mu"] = ext_json(milnor_number_origin(f));
    return r;
}

Report cmd_imult(const Options& o) {
    Point p;
    const BPoly f = centered(o, arg(o, 0, "F"), &p);
    const BPoly g = centered(o, arg(o, 1, "G"));
    Report r;
    r.payload["f"] = arg(o, 0, "F");
    r.payload["g"] = arg(o, 1, "G");
    r.payload["point"] = point_json(p);
    r.payload["imult"] = ext_json(intersection_multiplicity_origin(f, g));
    return r;
}

int read_int(const std::string& s, const char* name) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::syntax_error, std::string(name) + " must be an integer, got '" + s + "'");
}

Report cmd_lambda_set(const Options& o) {
    const int d = read_int(arg(o, 0, "D"), "D");
    Report r;
    r.payload["d"] = d;
    r.payload["values"] = rat_list(lambda_set(d));
    return r;
}

Report cmd_witness(const Options& o) {
    const int d = read_int(arg(o, 0, "D"), "D");
    const Rat target = parse_rat(arg(o, 1, "TARGET"));
    const BPoly f = construct_witness(d, target);
    const auto a = analyze_high_mult(f);
    Report r;
    r.payload["d"] = d;
    r.payload["target"] = to_string(target);
    r.payload["polynomial"] = render(f);
    r.payload["lct"] = to_string(a.lct);
    r.payload["line_is_component"] = a.line_is_component;
    return r;
}

Report cmd_resolve(const Options& o) {
    const BPoly f = centered(o, arg(o, 0, "POLY"));
    const ResolutionTree t = resolve_over_origin(f, o.cap);
    Report r;
    r.payload = json::parse(export_tree(t, TreeFormat::json));
    r.payload["input"] = arg(o, 0, "POLY");
    r.text = export_tree(t, TreeFormat::dot);
    if (!o.dot_file.empty()) {
        std::ofstream dot(o.dot_file);
        if (!dot) throw Error(ErrorCode::invalid_argument, "cannot write " + o.dot_file);
        dot << r.text;
        r.diagnostics.push_back("wrote " + o.dot_file);
    }
    return r;
}

Report cmd_wbound(const Options& o) {
    if (o.weights.empty()) throw Error(ErrorCode::invalid_argument, "wbound needs --weights W1,W2");
    const BPoly f = centered(o, arg(o, 0, "POLY"));
    auto [wx, wy] = parse_pair(o.weights, "--weights");
    const auto b = weighted_lct_upper_bound(f, Weights{wx, wy});
    Report r;
    r.payload["input"] = arg(o, 0, "POLY");
    r.payload["weights"] = json::array({to_string(wx), to_string(wy)});
    r.payload["weighted_order"] = to_string(b.wt_f);
    r.payload["bound"] = to_string(b.b);
    r.payload["leading_part"] = render(b.leading_part);
    return r;
}

Report cmd_selftest(const Options& o) {
    if (o.scope != "fast" && o.scope != "full")
        throw Error(ErrorCode::invalid_argument, "scope must be fast or full, got '" + o.scope + "'");
    const auto scope = o.scope == "fast" ? AcceptanceScope::fast : AcceptanceScope::full;
    Report r;
    r.payload["scope"] = o.scope;
    r.payload["seed"] = o.seed;
    json criteria = json::array();
    long total = 0;
    const CriterionResult* first_failure = nullptr;
    const auto results = run_acceptance(scope, o.seed);
    for (const auto& c : results) {
        criteria.push_back({{"id", c.id},
                            {"name", c.name},
                            {"passed", c.passed},
                            {"checked", c.checked},
                            {"seconds", c.seconds},
                            {"detail", c.detail}});
        total += c.checked;
        r.text += format_result_line(c) + "\n";
        if (!c.passed && first_failure == nullptr) first_failure = &c;
    }
    r.payload["criteria"] = criteria;
    r.payload["instances"] = total;
    r.payload["passed"] = first_failure == nullptr;
    if (first_failure != nullptr) {
        r.diagnostics.push_back("criterion " + std::to_string(first_failure->id) + " failed: " + first_failure->detail);
        r.failure = Error(ErrorCode::self_test_failure, r.diagnostics.back());
    }
    return r;
}

void print_text(std::ostream& out, const json& j, const std::string& prefix = "") {
    for (const auto& [k, v] : j.items()) {
        if (v.is_object()) {
            print_text(out, v, prefix + k + ".");
        } else if (v.is_string()) {
            out << prefix << k << ": " << v.get<std::string>() << "\n";
        } else {
            out << prefix << k << ": " << v.dump() << "\n";
        }
    }
}

void emit(std::ostream& out, const Options& o, const std::string& command, const Report& r, bool ok,
          const std::optional<Error>& error) {
    if (o.format == "text") {
        if (!r.text.empty() && (command == "resolve" || command == "selftest")) {
            out << r.text;
        } else if (ok) {
            print_text(out, r.payload);
        }
        return;
    }
    json j;
    j["status"] = ok ? "ok" : "error";
    j["command"] = command;
    j["payload"] = r.payload;
    if (error) j["error"] = {{"code", error_name(error->code())}, {"message", error->what()}};
    j["diagnostics"] = r.diagnostics;
    out << j.dump(2) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Log canonical thresholds of plane curves, computed exactly.", "lct"};
    app.require_subcommand(1);
    Options o;

    struct Command {
        const char* name;
        const char* help;
        std::vector<const char*> positionals;
        Report (*fn)(const Options&);
    };
    const std::vector<Command> commands = {
        {"lct", "threshold at a point, using the fastest applicable method", {"POLY"}, cmd_lct},
        {"classify", "singularity type at a point (curves of degree at most 5)", {"POLY"}, cmd_classify},
        {"milnor", "Milnor number at a point", {"POLY"}, cmd_milnor},
        {"imult", "intersection multiplicity of two curves at a point", {"F", "G"}, cmd_imult},
        {"lambda-set", "all thresholds at multiplicity d-1 points of degree d curves", {"D"}, cmd_lambda_set},
        {"witness", "a degree D curve realizing TARGET at a multiplicity D-1 point", {"D", "TARGET"}, cmd_witness},
        {"resolve", "embedded resolution tree over a point", {"POLY"}, cmd_resolve},
        {"wbound", "weighted upper bound on the threshold", {"POLY"}, cmd_wbound},
        {"selftest", "run the acceptance checks", {}, cmd_selftest},
    };

    const Command* chosen = nullptr;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        if (!c.positionals.empty()) {
            std::string names;
            for (const char* p : c.positionals) names += std::string(names.empty() ? "" : " ") + p;
            sub->add_option("args", o.args, names)->required()->expected(static_cast<int>(c.positionals.size()));
        }
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
        if (c.fn != cmd_lambda_set && c.fn != cmd_witness && c.fn != cmd_selftest) {
            sub->add_option("--point", o.point, "point X,Y with rational coordinates (default 0,0)");
            sub->add_option("--projective", o.projective, "read homogeneous input in x,y,z and set CHART = 1")
                ->check(CLI::IsMember({"x", "y", "z"}));
        }
        if (c.fn == cmd_lct || c.fn == cmd_resolve) sub->add_option("--cap", o.cap, "maximum number of blowups");
        if (c.fn == cmd_resolve) sub->add_option("--dot", o.dot_file, "also write the tree as Graphviz DOT");
        if (c.fn == cmd_wbound) sub->add_option("--weights", o.weights, "positive rational weights W1,W2")->required();
        if (c.fn == cmd_selftest) {
            sub->add_option("--seed", o.seed, "random seed");
            sub->add_option("--scope", o.scope, "fast or full")->check(CLI::IsMember({"fast", "full"}));
        }
        sub->callback([&chosen, &c] { chosen = &c; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_parse_error;
    }

    const std::string command = chosen->name;
    try {
        Report r = chosen->fn(o);
        emit(out, o, command, r, !r.failure, r.failure);
        if (!r.failure) return exit_ok;
        err << "lct: " << r.failure->what() << "\n";
        return exit_code_for(r.failure->code());
    } catch (const Error& e) {
        Report r;
        if (auto* irr = dynamic_cast<const IrrationalCenterError*>(&e))
            r.payload["minimal_polynomial"] = irr->minimal_polynomial();
        emit(out, o, command, r, false, e);
        err << "lct: " << error_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        Error wrapped(ErrorCode::internal, e.what());
        emit(out, o, command, Report{}, false, wrapped);
        err << "lct: internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace lct::cli
