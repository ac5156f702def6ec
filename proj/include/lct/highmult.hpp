#pragma once

#include <optional>
#include <vector>

#include "lct/bpoly.hpp"

namespace lct {

/// Analysis of a reduced degree-d curve at a point (the origin) of
/// multiplicity d - 1.
///
/// After one blowup the strict transform meets the exceptional line E with
/// total multiplicity d - 1. At most one point Q of E can carry more than half
/// of it. Such a point corresponds to a tangent line L_Q of multiplicity m
/// with 2m > d - 1; since m * deg <= d - 1 the corresponding factor of the
/// tangent cone is linear, so Q is always rational.
struct HighMultAnalysis {
    int d = 0;
    bool has_special_q = false;
    int m = 0;                       ///< multiplicity of L_Q in the tangent cone
    bool line_is_component = false;  ///< L_Q divides f
    int k_q = 0;                     ///< m - 1 if L_Q is a component, else m
    std::optional<BPoly> line;       ///< L_Q, normalized linear form
    std::optional<Rat> l_q;
    Rat lct;
};

/// Throws degree_too_small, wrong_multiplicity, not_square_free.
HighMultAnalysis analyze_high_mult(const BPoly& f);

/// All thresholds at multiplicity d - 1 points of reduced degree-d curves,
/// ascending. Throws degree_too_small.
std::vector<Rat> lambda_set(int d);

/// A square-free degree-d curve with multiplicity d - 1 at the origin whose
/// threshold there is `target`. Throws target_not_realizable.
BPoly construct_witness(int d, const Rat& target);

/// True when `lct` can only occur if the special line is a component, so the
/// curve is reducible. Throws not_in_lambda_set.
bool reducibility_hint(const Rat& lct, int d);

}  // namespace lct
