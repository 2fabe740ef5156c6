#pragma once

#include "coh1/intlin.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Finitely generated abelian groups in invariant-factor form, graded
// (co)homology containers, Kunneth products and Poincare duality. Torsion is
// kept as a divisibility chain d1 | d2 | ... with no 1s; "Z/0 = Z" and
// "Z/1 = 0" conventions apply to all order-valued data.

namespace coh1::abgroup {

using intlin::Int;
using intlin::IntMatrix;

struct FgAbelian {
    int rank = 0;
    std::vector<Int> torsion;  // divisibility chain, entries >= 2

    bool operator==(const FgAbelian&) const = default;

    // order of the group; 0 encodes infinite
    Int order() const;
    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool finite() const { return rank == 0; }

    static FgAbelian zero() { return {}; }
    static FgAbelian free(int rank) { return {rank, {}}; }
    // Z/d with the Z/0 = Z and Z/1 = 0 conventions
    static FgAbelian cyclic(const Int& d);
    // canonicalize an arbitrary rank + cyclic-order list
    static FgAbelian make(int rank, std::vector<Int> cyclic_orders);

    FgAbelian direct_sum(const FgAbelian& o) const;
};

FgAbelian tensor(const FgAbelian& a, const FgAbelian& b);
FgAbelian tor(const FgAbelian& a, const FgAbelian& b);

// Rendering grammar (bit-exact, round-trippable): "Z^r + Z/d1 + Z/d2",
// "Z" for rank one, "0" for the trivial group.
std::string render(const FgAbelian& g);
FgAbelian parse_group(const std::string& s);

// An unresolved 0 -> sub -> ? -> quot -> 0 extension.
struct ExtensionDatum {
    FgAbelian sub;
    FgAbelian quot;
    std::optional<FgAbelian> resolved;

    bool operator==(const ExtensionDatum&) const = default;

    // |sub| * |quot| with 0 absorbing
    Int total_order() const;
    bool consistent() const;
};

enum class Kind { cohomology, homology };

struct GradedGroups {
    int dim = 0;
    Kind kind = Kind::cohomology;
    std::vector<FgAbelian> groups;  // H^0 .. H^dim (or H_0 .. H_dim)
    std::optional<std::pair<int, ExtensionDatum>> extension_slot;

    bool operator==(const GradedGroups&) const = default;

    const FgAbelian& at(int k) const { return groups.at(k); }
    int euler_char() const;
    // closed connected orientable profile checks; empty = valid
    std::vector<std::string> profile_violations() const;
};

// cokernel of the relation matrix (rows are relations on `cols` generators)
FgAbelian from_presentation(const IntMatrix& relations);

GradedGroups poincare_homology(const GradedGroups& c);
// same reindexing in the opposite direction
GradedGroups poincare_cohomology(const GradedGroups& h);

GradedGroups kunneth(const GradedGroups& a, const GradedGroups& b);

}  // namespace coh1::abgroup
