#pragma once

#include <vector>

#include "lct/bpoly.hpp"

namespace lct {

/// Multiplicities of the tangent-cone lines over the algebraic closure,
/// sorted in decreasing order. Entries sum to the multiplicity.
struct TangentConePattern {
    std::vector<int> entries;

    friend bool operator==(const TangentConePattern&, const TangentConePattern&) = default;
};

/// Data of the weighted upper bound lct_0(f) <= b = (w_x + w_y) / wt(f).
struct WeightedBound {
    Weights weights;
    Rat wt_f;
    Rat b;
    BPoly leading_part;
};

/// Local intersection number I_0(f, g) at the origin via Fulton's procedure.
/// Infinite exactly when f and g share a component through the origin.
ExtInt intersection_multiplicity_origin(const BPoly& f, const BPoly& g);

/// mu = I_0(f_x, f_y). Zero at smooth points, infinite at non-isolated ones.
ExtInt milnor_number_origin(const BPoly& f);

TangentConePattern tangent_cone_pattern(const BPoly& f);

bool is_square_free(const BPoly& f);

WeightedBound weighted_lct_upper_bound(const BPoly& f, const Weights& w);

}  // namespace lct
