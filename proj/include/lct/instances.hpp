#pragma once

#include <random>

#include "lct/bpoly.hpp"

namespace lct {

/// Random reduced curve of degree d with multiplicity d - 1 at the origin and
/// only rational tangent lines there.
///
/// The tangent cone is x^(k+1) * (lines) when `component` is set, in which
/// case x divides f; otherwise it is x^k * (lines) and x does not divide f.
/// A random invertible integer linear change is applied last when
/// `change_coordinates` is set.
struct HighMultInstance {
    BPoly f;
    bool component = false;
    int k = 0;
    int d = 0;
};

HighMultInstance random_high_mult_instance(std::mt19937_64& rng, int d, bool component,
                                           bool change_coordinates = true);

/// Component-case instance whose tangent lines other than x are pairwise
/// distinct and different from x, with 2(k+1) > d - 1.
HighMultInstance random_component_chain_instance(std::mt19937_64& rng, int d);

}  // namespace lct
