#pragma once

#include "coh1/intlin.hpp"

#include <functional>
#include <set>
#include <utility>
#include <vector>

// Arithmetic of circle subgroups of a 2-torus and the finite cyclic subgroups
// they carry: intersection counts, orders of generated subgroups, the
// 2x2 integer homomorphism rho built from Bezout data, and lens-space orders.

namespace coh1::torus {

using intlin::BezoutCert;
using intlin::Int;
using intlin::IntMatrix;

// The circle {(z^p, z^q)} together with its unique cyclic subgroup of order b.
struct CircleWithFinite {
    Int p, q;   // primitive slope
    Int b = 1;  // order of the finite subgroup, >= 1

    bool operator==(const CircleWithFinite&) const = default;
};

void validate_circle(const CircleWithFinite& c);

// projective slope equality: (p1,q1) = +/-(p2,q2)
bool same_circle(const CircleWithFinite& a, const CircleWithFinite& b);

// a = q2*p1 - q1*p2; the circles meet in |a| points
Int circle_intersection_signed(const CircleWithFinite& minus, const CircleWithFinite& plus);
Int circle_intersection_count(const CircleWithFinite& minus, const CircleWithFinite& plus);

// order h of the subgroup generated by the two finite cyclic subgroups in T^2
Int finite_product_order(const CircleWithFinite& minus, const CircleWithFinite& plus);

// b_+- is by definition |H n K_0^+-| for H = H_- * H_+. The product subgroup
// can meet a circle in more elements than the b the caller prescribed; such
// parameter pairs describe no diagram and are rejected everywhere.
bool finite_parts_consistent(const CircleWithFinite& minus, const CircleWithFinite& plus);

// pluggable certificate choice; canonical = intlin::ext_gcd
using BezoutChooser = std::function<BezoutCert(const Int&, const Int&)>;
BezoutChooser canonical_chooser();

// rho = rho4*rho3*rho2*rho1 as a 2x2 integer matrix [[A,B],[D,E]], built so
// that the kernel of the induced torus map is exactly H = H_- * H_+.
struct RhoData {
    Int A, B, D, E;
    Int c;
    Int h;
    BezoutCert cert_minus;  // certificate for (p_-, q_-), used in rho1 and c
    BezoutCert cert_step3;  // certificate for (hc/b_+, ha/(b_- b_+)), used in rho3

    Int det() const { return A * E - B * D; }
    Int entry_gcd() const;  // gcd(A,B,D,E), the paper's delta
};

RhoData build_rho(const CircleWithFinite& minus, const CircleWithFinite& plus, const Int& h,
                  const BezoutChooser& choose = canonical_chooser());

struct HatCoeffs {
    Int p_hat, q_hat;
};

// (A*p + B*q)/b and (D*p + E*q)/b for the given circle; always coprime
HatCoeffs hat_coeffs(const RhoData& rho, const CircleWithFinite& circle);

// order r = |a*h/(b_- b_+)| of the lens-space fundamental group
Int lens_order(const CircleWithFinite& minus, const CircleWithFinite& plus, const Int& h);

// index of H n K0^- n K0^+ in K0^- n K0^+, by enumeration
Int finite_index_d(const CircleWithFinite& minus, const CircleWithFinite& plus);

// --- enumeration substrate, shared with the brute-force oracle ---

// closure of the given generators inside (1/N)Z^2 / Z^2
std::set<std::pair<long long, long long>> subgroup_closure(
    long long N, const std::vector<std::pair<long long, long long>>& gens);

// elements of the order-b subgroup of the circle (p,q), as numerators mod N
std::vector<std::pair<long long, long long>> finite_subgroup_numerators(
    const CircleWithFinite& c, long long N);

}  // namespace coh1::torus
