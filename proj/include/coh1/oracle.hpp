#pragma once

#include "coh1/families.hpp"
#include "coh1/intlin.hpp"
#include "coh1/torus.hpp"

#include <string>
#include <vector>

// Independent recomputation of every order the family formulas produce, by
// Smith-normal-form lattice arithmetic and element enumeration. Shares only
// the intlin primitives with the formula path.

namespace coh1::oracle {

using intlin::Int;
using intlin::Vec;
using torus::CircleWithFinite;

// |ker(row)/<gens>| with the kernel lattice as ambient; 0 encodes infinite.
// Throws "not a cycle" if a generator is outside the kernel.
Int mv_quotient_order(const Vec& row, const std::vector<Vec>& gens);

// kernel order of the difference-of-surjections map
// Z/m1 + Z/m2 -> Z/delta; enumerated for small moduli
Int im_i4_order(const Int& m1, const Int& m2, const Int& delta);

// oracle value of |H^4| for a valid non-degenerate N7A diagram
Int n7a_h4_oracle(const torus::RhoData& rho, const CircleWithFinite& minus,
                  const CircleWithFinite& plus);

// oracle value of |H^4| for a valid non-degenerate N7E diagram
Int n7e_h4_oracle(const torus::RhoData& rho, const Int& m, const Int& n,
                  const CircleWithFinite& minus, const CircleWithFinite& plus);

// brute-force twins of the torus module, diffed against the lattice path
struct CheckRecord {
    std::string diagram;
    std::string quantity;
    Int lattice_value;
    Int enum_value;
    bool ok;
};

struct CheckReport {
    std::vector<CheckRecord> records;
    int mismatches = 0;

    std::string render() const;  // line-oriented: params, formula, oracle, status
};

// re-derives finite_product_order, circle_intersection_count, finite_index_d
// and lens_order by element enumeration over the given circle pair
void subgroup_enum_check(CheckReport& report, const CircleWithFinite& minus,
                         const CircleWithFinite& plus);

}  // namespace coh1::oracle
