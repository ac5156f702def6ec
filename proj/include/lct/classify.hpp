#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lct/bpoly.hpp"
#include "lct/localinv.hpp"

namespace lct {

/// One instantiated row of the normal-form table.
struct NormalFormEntry {
    std::string symbol;  ///< "A(3)", "D(5)", "E6", "T(2,3,6)", "Z11", ...
    std::string family;
    std::vector<int> indices;
    std::string normal_form;              ///< template in x, y and the parameters
    std::vector<std::string> parameters;  ///< single letters among a, b, c
    std::string restriction;
    int mult = 0;
    int mu = 0;
    std::vector<int> cone_pattern;
    Rat lct;
};

struct SingularityClass {
    std::string symbol;
    int mult = 0;
    int mu = 0;
    TangentConePattern pattern;
    Rat lct;
};

/// A threshold that may be +infinity (at points off the curve).
struct Threshold {
    bool infinite = false;
    Rat value;

    static Threshold inf() { return {true, 0}; }
    static Threshold of(const Rat& r) { return {false, r}; }
    std::string str() const { return infinite ? "inf" : to_string(value); }
    bool operator==(const Threshold&) const = default;
};

std::string_view embedded_tables_json();
const std::vector<NormalFormEntry>& normal_form_table();

/// Accepts "A3", "A_3", "A(3)", "T_{2,3,6}", "T(2,3,6)", "E_6", ... Throws
/// invalid_argument for anything that is not a table symbol.
std::string canonical_symbol(std::string_view text);
const NormalFormEntry& normal_form_entry(std::string_view symbol);

/// Throws degree_out_of_range unless 1 <= d <= 5.
std::vector<std::string> allowed_types(int d);
std::vector<Rat> table1_values(int d);

/// Throws not_through_origin, not_singular, not_square_free, not_classifiable.
SingularityClass classify_singularity(const BPoly& f);

/// Throws degree_out_of_range (deg f > 5), not_square_free.
Threshold lct_low_degree(const BPoly& f, const Point& p);

bool restriction_holds(const NormalFormEntry& entry, const std::vector<Rat>& params);
BPoly instantiate_normal_form(const NormalFormEntry& entry, const std::vector<Rat>& params);
/// Deterministic in (symbol, seed); parameters satisfy the row restriction
/// and the result is square-free.
BPoly sample_normal_form(std::string_view symbol, std::uint64_t seed);

}  // namespace lct
