#pragma once

#include "coh1/abgroup.hpp"
#include "coh1/catalog.hpp"
#include "coh1/torus.hpp"

#include <string>
#include <variant>
#include <vector>

// One validated cohomology calculator per family N7_A .. N7_I.

namespace coh1::families {

using abgroup::ExtensionDatum;
using abgroup::FgAbelian;
using abgroup::GradedGroups;
using intlin::Int;
using torus::BezoutChooser;
using torus::CircleWithFinite;
using torus::RhoData;

struct N7A {
    CircleWithFinite minus, plus;
    bool equal_circles = false;
};
struct N7B {
    Int p, q;
    Int n_minus, n_plus;
};
struct N7C {
    Int p, q;
    Int n;
};
struct N7D {
    Int m, n, mu, nu, p;
    Int a = 1;
};
struct N7E {
    Int m, n, mu, nu;
    CircleWithFinite minus, plus;  // reduced-torus circle data
};
struct N7F {
    Int p, a;
    Int n;
};
struct N7G {};
struct N7H {
    Int m_minus, n_minus, m_plus, n_plus;
    Int b_minus = 1, b_plus = 1;
};
struct N7I {};

using FamilyDiagram = std::variant<N7A, N7B, N7C, N7D, N7E, N7F, N7G, N7H, N7I>;

std::string family_name(const FamilyDiagram& d);

// violations of the per-family simple-connectivity conditions; empty = valid
std::vector<std::string> validate(const FamilyDiagram& d);

// Column vectors feeding the |det(x, y_-, y_+, completion)| formula, together
// with the d2 row whose kernel lattice they generate in.
struct MvVectors {
    intlin::Vec row;                     // [B E A D] or [Am Dm -An -Dn]
    intlin::Vec x, y_minus, y_plus;
    std::vector<intlin::Vec> kernel_w;   // integer basis of ker(row)
    intlin::Vec completion;              // 4th vector completing it to Z^4
    Int delta;                           // delta (N7A) resp. ell (N7E)
};

MvVectors n7a_vectors(const RhoData& rho, const CircleWithFinite& minus,
                      const CircleWithFinite& plus,
                      const BezoutChooser& choose = torus::canonical_chooser());
MvVectors n7e_vectors(const RhoData& rho, const Int& m, const Int& n, const Int& mu, const Int& nu,
                      const CircleWithFinite& minus, const CircleWithFinite& plus,
                      const BezoutChooser& choose = torus::canonical_chooser());

// |det(x, y_-, y_+, completion)|
Int det_order(const MvVectors& v);

// |H^4| along the formula path, for an arbitrary valid rho (used by the
// invariance suites as well as the main calculators)
Int n7a_h4_order(const RhoData& rho, const CircleWithFinite& minus, const CircleWithFinite& plus,
                 const BezoutChooser& choose = torus::canonical_chooser());

GradedGroups homology_n7a(const N7A& d, const catalog::Catalog& cat,
                          const BezoutChooser& choose = torus::canonical_chooser());
GradedGroups homology_n7b(const N7B& d);
GradedGroups homology_n7c(const N7C& d);
GradedGroups homology_n7d(const N7D& d, const catalog::Catalog& cat);
GradedGroups homology_n7e(const N7E& d, const catalog::Catalog& cat,
                          const BezoutChooser& choose = torus::canonical_chooser());
GradedGroups homology_n7f(const N7F& d, const catalog::Catalog& cat);
GradedGroups homology_n7g(const N7G& d, const catalog::Catalog& cat);
GradedGroups homology_n7h(const N7H& d, const catalog::Catalog& cat);
GradedGroups homology_n7i(const N7I& d, const catalog::Catalog& cat);

GradedGroups compute(const FamilyDiagram& d, const catalog::Catalog& cat,
                     const BezoutChooser& choose = torus::canonical_chooser());

}  // namespace coh1::families
