#pragma once

#include "coh1/abgroup.hpp"

#include <map>
#include <string>
#include <vector>

// Lookup and Kunneth assembly for the non-formula results: sphere and CP^2
// atoms, low-dimensional profiles, Brieskorn varieties and the P^7 templates.

namespace coh1::catalog {

using abgroup::FgAbelian;
using abgroup::GradedGroups;
using intlin::Int;

struct SpaceAtom {
    std::string name;
    GradedGroups groups;  // homology profile
    std::string citation;
};

class Catalog {
public:
    // sphere and CP^2 atoms plus every atom from the data file; an atom
    // without a citation is rejected at load time
    static Catalog load(const std::string& atom_file);
    static Catalog builtin();  // spheres S2..S7 and CP2 only

    const SpaceAtom& atom(const std::string& name) const;
    bool has(const std::string& name) const;
    std::vector<std::string> names() const;

    // homology of the named space, assembling products on demand
    // (names like "S3 x S2 x S2", plus "N6D-profile")
    GradedGroups low_dim(const std::string& name) const;

    GradedGroups product_profile(const std::vector<std::string>& atoms) const;

    void add(SpaceAtom a);

private:
    std::map<std::string, SpaceAtom> atoms_;
};

// serialization of the atom data file (bit-exact round trip)
std::string render_atom_file(const Catalog& c);
Catalog parse_atom_file(const std::string& text);

// homology of a closed simply connected 7-manifold from H_2 and H_3
GradedGroups dim7_from_h2_h3(const FgAbelian& h2, const FgAbelian& h3);

GradedGroups brieskorn(const Int& d);

enum class PType { A, B, C, D };
enum class PVariant { plain, Z2 };
GradedGroups p_family(PType type, const Int& r, PVariant variant = PVariant::plain);

// homology profile of the n-sphere
GradedGroups sphere(int n);

}  // namespace coh1::catalog
