#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lct/bpoly.hpp"

namespace lct {

struct ExcDivisor {
    int id = 0;
    int m = 0;  ///< order of the pulled-back curve along E
    int a = 0;  ///< order of the relative canonical divisor along E
    Rat candidate() const { return make_rat(a + 1, m); }
};

/// A point over the origin in some chart (u, v). The point sits at
/// `location` in those coordinates; `equation` is the local strict transform
/// after recentering it at (0, 0). Exceptional divisors through the point can
/// only be the axes u = 0 and v = 0.
struct ChartPoint {
    std::string u_label = "x";
    std::string v_label = "y";
    Point location;
    std::optional<int> u_div;  ///< divisor along u = 0
    std::optional<int> v_div;  ///< divisor along v = 0
    BPoly equation;

    std::vector<int> incident() const;
};

struct ResolutionNode {
    ChartPoint center;
    ExcDivisor divisor;
    std::optional<int> parent;  ///< divisor on which the center lies
};

struct ResolutionTree {
    BPoly input;
    std::vector<ResolutionNode> nodes;  ///< node i has divisor id i + 1
    std::vector<ChartPoint> leaves;     ///< final points met by the strict transform
    bool complete = false;

    const ExcDivisor& divisor(int id) const { return nodes.at(id - 1).divisor; }
};

struct BlowupCharts {
    BPoly chart_x;  ///< x = x, y = x*y1, divided by x^order
    BPoly chart_y;  ///< x = x1*y, y = y, divided by y^order
    int order = 0;
};

inline constexpr int default_resolution_cap = 64;

/// Throws zero_polynomial, not_through_origin.
BlowupCharts blowup_transform(const BPoly& f);

/// Throws not_through_origin, not_square_free, irrational_center, resolution_cap.
ResolutionTree resolve_over_origin(const BPoly& f, int cap = default_resolution_cap);

/// Throws incomplete_tree.
Rat lct_from_tree(const ResolutionTree& t);
std::map<int, Rat> log_pullback_coefficients(const ResolutionTree& t, const Rat& lambda);

enum class TreeFormat { dot, json };
std::string export_tree(const ResolutionTree& t, TreeFormat format);

}  // namespace lct
