#include "coh1/families.hpp"

#include <sstream>
#include <stdexcept>

namespace coh1::families {

using abgroup::Kind;
using intlin::abs;
using intlin::gcd;
using intlin::lcm;
using intlin::Vec;
using torus::circle_intersection_signed;
using torus::finite_index_d;
using torus::finite_product_order;
using torus::hat_coeffs;
using torus::lens_order;
using torus::same_circle;

std::string family_name(const FamilyDiagram& d) {
    static const char* names[] = {"N7A", "N7B", "N7C", "N7D", "N7E", "N7F", "N7G", "N7H", "N7I"};
    return names[d.index()];
}

namespace {

void check_circle(std::vector<std::string>& v, const CircleWithFinite& c, const std::string& which) {
    if (c.p == 0 && c.q == 0)
        v.push_back(which + " slope is zero");
    else if (gcd(c.p, c.q) != 1)
        v.push_back(which + " slope is not primitive");
    if (c.b < 1) v.push_back(which + " finite order is not positive");
}

std::vector<std::string> validate_n7a(const N7A& d) {
    std::vector<std::string> v;
    check_circle(v, d.minus, "minus");
    check_circle(v, d.plus, "plus");
    if (!v.empty()) return v;
    if (d.equal_circles != same_circle(d.minus, d.plus))
        v.push_back(d.equal_circles ? "equal_circles set but the circles differ"
                                    : "circles coincide but equal_circles is not set");
    if (v.empty() && !d.equal_circles && !torus::finite_parts_consistent(d.minus, d.plus))
        v.push_back("product subgroup meets a circle in more than b elements");
    return v;
}

std::vector<std::string> validate_n7b(const N7B& d) {
    std::vector<std::string> v;
    if (gcd(d.p, d.q) != 1) v.push_back("gcd(p,q) != 1");
    if (d.n_plus != 1 && d.n_plus != 2) v.push_back("n_plus must be 1 or 2");
    if (d.n_minus < 4 || d.n_minus % 4 != 0) v.push_back("n_minus must be a positive multiple of 4");
    else {
        Int k = d.n_minus / 4;
        Int r = ((d.p % d.n_minus) + d.n_minus) % d.n_minus;
        if (r != k && r != d.n_minus - k) v.push_back("p is not congruent to +/- n_minus/4 mod n_minus");
    }
    if (d.q % 2 == 0 && d.n_plus != 2) v.push_back("q even forces n_plus = 2");
    return v;
}

std::vector<std::string> validate_n7c(const N7C& d) {
    std::vector<std::string> v;
    if (gcd(d.p, d.q) != 1) v.push_back("gcd(p,q) != 1");
    if (gcd(d.q, d.n) != 1) v.push_back("gcd(q,n) != 1");
    if (d.n < 1) v.push_back("n must be >= 1");
    return v;
}

std::vector<std::string> validate_n7d(const N7D& d) {
    std::vector<std::string> v;
    if (d.m * d.nu - d.n * d.mu != 1) v.push_back("m*nu - n*mu != 1");
    if (d.a < 1) v.push_back("a must be >= 1");
    return v;
}

std::vector<std::string> validate_n7e(const N7E& d) {
    std::vector<std::string> v;
    check_circle(v, d.minus, "minus");
    check_circle(v, d.plus, "plus");
    if (d.m * d.nu - d.n * d.mu != 1) v.push_back("m*nu - n*mu != 1");
    if (!v.empty()) return v;
    if (same_circle(d.minus, d.plus)) {
        v.push_back("K^- and K^+ coincide");
        return v;
    }
    if (!torus::finite_parts_consistent(d.minus, d.plus))
        v.push_back("product subgroup meets a circle in more than b elements");
    Int dd = finite_index_d(d.minus, d.plus);
    if (gcd(gcd(d.minus.q, d.plus.q), dd) != 1) v.push_back("gcd(q_-, q_+, d) != 1");
    return v;
}

std::vector<std::string> validate_n7f(const N7F& d) {
    std::vector<std::string> v;
    if (d.n < 1) v.push_back("n must be >= 1");
    return v;
}

std::vector<std::string> validate_n7h(const N7H& d) {
    std::vector<std::string> v;
    if (gcd(d.m_minus, d.n_minus) != 1) v.push_back("gcd(m_-, n_-) != 1");
    if (gcd(d.m_plus, d.n_plus) != 1) v.push_back("gcd(m_+, n_+) != 1");
    if (d.b_minus < 1 || d.b_plus < 1) v.push_back("b_- and b_+ must be >= 1");
    if (!v.empty()) return v;
    CircleWithFinite cm{d.m_minus, d.n_minus, d.b_minus}, cp{d.m_plus, d.n_plus, d.b_plus};
    if (same_circle(cm, cp)) {
        v.push_back("K^- and K^+ coincide");
        return v;
    }
    if (!torus::finite_parts_consistent(cm, cp))
        v.push_back("product subgroup meets a circle in more than b elements");
    Int dd = finite_index_d(cm, cp);
    if (gcd(gcd(d.n_minus, d.n_plus), dd) != 1) v.push_back("gcd(n_-, n_+, d) != 1");
    return v;
}

}  // namespace

std::vector<std::string> validate(const FamilyDiagram& d) {
    return std::visit(
        [](const auto& x) -> std::vector<std::string> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, N7A>) return validate_n7a(x);
            else if constexpr (std::is_same_v<T, N7B>) return validate_n7b(x);
            else if constexpr (std::is_same_v<T, N7C>) return validate_n7c(x);
            else if constexpr (std::is_same_v<T, N7D>) return validate_n7d(x);
            else if constexpr (std::is_same_v<T, N7E>) return validate_n7e(x);
            else if constexpr (std::is_same_v<T, N7F>) return validate_n7f(x);
            else if constexpr (std::is_same_v<T, N7H>) return validate_n7h(x);
            else return {};
        },
        d);
}

namespace {

void require_valid(const FamilyDiagram& d) {
    auto v = validate(d);
    if (!v.empty()) {
        std::ostringstream os;
        os << "invalid " << family_name(d) << " diagram:";
        for (const auto& s : v) os << " " << s << ";";
        throw std::invalid_argument(os.str());
    }
}

FgAbelian torsion_part(const FgAbelian& g) { return FgAbelian::make(0, g.torsion); }

// Assemble the dim-7 cohomology profile from H^4 and H^5; the lower degrees
// are forced by duality and universal coefficients.
GradedGroups cohomology7(const FgAbelian& h4, const FgAbelian& h5,
                         std::optional<ExtensionDatum> ext4 = std::nullopt) {
    GradedGroups g;
    g.dim = 7;
    g.kind = Kind::cohomology;
    FgAbelian h3 = FgAbelian::free(h4.rank).direct_sum(torsion_part(h5));
    g.groups = {FgAbelian::free(1), FgAbelian::zero(), FgAbelian::free(h5.rank), h3,
                h4, h5, FgAbelian::zero(), FgAbelian::free(1)};
    if (ext4) g.extension_slot = {4, std::move(*ext4)};
    return g;
}

// Resolution policy: report exactly what the computation proves. beta = 0
// encodes an infinite subgroup.
ExtensionDatum make_extension(const Int& beta, const Int& gamma) {
    ExtensionDatum e{FgAbelian::cyclic(beta), FgAbelian::cyclic(gamma), std::nullopt};
    if (gamma == 1)
        e.resolved = FgAbelian::cyclic(beta);
    else if (beta == 1)
        e.resolved = FgAbelian::cyclic(gamma);
    return e;
}

// placeholder group of the extension's total order
FgAbelian placeholder_of(const ExtensionDatum& e) {
    if (e.resolved) return *e.resolved;
    return FgAbelian::cyclic(e.total_order());
}

GradedGroups cohomology_of_product(const catalog::Catalog& cat, const std::vector<std::string>& atoms) {
    return abgroup::poincare_cohomology(cat.product_profile(atoms));
}

}  // namespace

MvVectors n7a_vectors(const RhoData& rho, const CircleWithFinite& minus,
                      const CircleWithFinite& plus, const BezoutChooser& choose) {
    const Int &A = rho.A, &B = rho.B, &D = rho.D, &E = rho.E;
    MvVectors v;
    v.row = {B, E, A, D};
    v.x = {-D, A, -E, B};
    for (auto [c, out] : {std::pair{&minus, &v.y_minus}, std::pair{&plus, &v.y_plus}}) {
        auto h = hat_coeffs(rho, *c);
        *out = {c->q * h.q_hat, -c->q * h.p_hat, c->p * h.q_hat, -c->p * h.p_hat};
    }
    Int gAB = gcd(A, B), gDE = gcd(D, E);
    v.delta = gcd(gAB, gDE);
    Int Ab = A / gAB, Bb = B / gAB, Db = D / gDE, Eb = E / gDE;
    // A~, B~ with Ab*B~ + Bb*A~ = 1, and the same on the D/E side
    auto cab = choose(Ab, -Bb);
    auto cde = choose(Db, -Eb);
    if (cab.g != 1 || cde.g != 1) throw std::logic_error("n7a_vectors: reduced rows not primitive");
    Vec w1{Ab, 0, -Bb, 0}, w2{cab.phi, 0, cab.psi, 0};
    Vec w3{0, Db, 0, -Eb}, w4{0, cde.phi, 0, cde.psi};
    Int mu = gAB / v.delta, nu = gDE / v.delta;
    auto cmn = choose(nu, -mu);  // nu*mu~ + mu*nu~ = 1
    if (cmn.g != 1) throw std::logic_error("n7a_vectors: mu, nu not coprime");
    Int mu_t = cmn.psi, nu_t = cmn.phi;
    Vec mid(4), comp(4);
    for (int i = 0; i < 4; ++i) {
        mid[i] = nu * w2[i] - mu * w4[i];
        comp[i] = nu_t * w2[i] + mu_t * w4[i];
    }
    v.kernel_w = {w1, mid, w3};
    v.completion = comp;
    return v;
}

MvVectors n7e_vectors(const RhoData& rho, const Int& m, const Int& n, const Int& mu, const Int& nu,
                      const CircleWithFinite& minus, const CircleWithFinite& plus,
                      const BezoutChooser& choose) {
    const Int &A = rho.A, &D = rho.D;
    MvVectors v;
    v.row = {A * m, D * m, -A * n, -D * n};
    v.x = {D * n, -A * n, -D * m, A * m};
    for (auto [c, out] : {std::pair{&minus, &v.y_minus}, std::pair{&plus, &v.y_plus}}) {
        auto h = hat_coeffs(rho, *c);
        *out = {n * h.q_hat, -n * h.p_hat, m * h.q_hat, -m * h.p_hat};
    }
    v.delta = gcd(A, D);  // the paper's ell
    Int Ab = A / v.delta, Db = D / v.delta;
    auto c = choose(Ab, -Db);  // Ab*zeta + Db*eta = 1
    if (c.g != 1) throw std::logic_error("n7e_vectors: A/ell, D/ell not coprime");
    Int zeta = c.psi, eta = c.phi;
    Vec w3{nu, 0, mu, 0}, w4{0, nu, 0, mu};
    Vec mid(4), comp(4);
    for (int i = 0; i < 4; ++i) {
        mid[i] = Db * w3[i] - Ab * w4[i];
        comp[i] = zeta * w3[i] + eta * w4[i];
    }
    v.kernel_w = {Vec{n, 0, m, 0}, Vec{0, n, 0, m}, mid};
    v.completion = comp;
    return v;
}

Int det_order(const MvVectors& v) {
    return abs(intlin::det(intlin::IntMatrix::from_columns({v.x, v.y_minus, v.y_plus, v.completion})));
}

Int n7a_h4_order(const RhoData& rho, const CircleWithFinite& minus, const CircleWithFinite& plus,
                 const BezoutChooser& choose) {
    MvVectors v = n7a_vectors(rho, minus, plus, choose);
    return det_order(v) * lcm(rho.h / minus.b, rho.h / plus.b);
}

GradedGroups homology_n7a(const N7A& d, const catalog::Catalog& cat, const BezoutChooser& choose) {
    require_valid(FamilyDiagram{d});
    if (d.equal_circles) return cohomology_of_product(cat, {"S3", "S2", "S2"});

    Int h = finite_product_order(d.minus, d.plus);
    Int gamma = lens_order(d.minus, d.plus, h);
    bool infinite = (d.minus.p == d.plus.p && d.minus.q == -d.plus.q) ||
                    (d.minus.p == -d.plus.p && d.minus.q == d.plus.q);
    Int beta = 0;
    if (!infinite) {
        RhoData rho = torus::build_rho(d.minus, d.plus, h, choose);
        if (rho.entry_gcd() != gcd(h / d.minus.b, h / d.plus.b))
            throw std::logic_error("n7a: delta != gcd(h/b_-, h/b_+)");
        Int h4 = n7a_h4_order(rho, d.minus, d.plus, choose);
        if (h4 == 0 || h4 % gamma != 0) throw std::logic_error("n7a: |H^4| not a multiple of gamma");
        beta = h4 / gamma;
    }
    ExtensionDatum ext = make_extension(beta, gamma);
    return cohomology7(placeholder_of(ext), FgAbelian::free(2), ext);
}

GradedGroups homology_n7b(const N7B& d) {
    require_valid(FamilyDiagram{d});
    if (d.q == 0) throw std::invalid_argument("product action - use catalog");
    Int alpha = (d.n_plus == 1 && d.q % 2 != 0) ? 2 : 1;
    Int s = abs(d.q) / gcd(d.q, Int(2));
    ExtensionDatum ext{FgAbelian::cyclic(s), FgAbelian::cyclic(s), std::nullopt};
    if (s == 1) ext.resolved = FgAbelian::zero();
    FgAbelian h5 = FgAbelian::free(1).direct_sum(FgAbelian::cyclic(alpha));
    return cohomology7(placeholder_of(ext), h5, ext);
}

GradedGroups homology_n7c(const N7C& d) {
    require_valid(FamilyDiagram{d});
    if (d.q == 0) throw std::invalid_argument("product action - use catalog");
    return cohomology7(FgAbelian::cyclic(d.q * d.q), FgAbelian::free(1));
}

GradedGroups homology_n7d(const N7D& d, const catalog::Catalog& cat) {
    require_valid(FamilyDiagram{d});
    return cohomology_of_product(cat, {"S3", "S2", "S2"});
}

GradedGroups homology_n7e(const N7E& d, const catalog::Catalog& cat, const BezoutChooser& choose) {
    (void)cat;
    require_valid(FamilyDiagram{d});
    Int h = finite_product_order(d.minus, d.plus);
    Int a = abs(circle_intersection_signed(d.minus, d.plus));
    Int gamma = lens_order(d.minus, d.plus, h);
    Int beta = 0;
    if (d.minus.q * d.plus.q * d.m * d.n != 0) {
        RhoData rho = torus::build_rho(d.minus, d.plus, h, choose);
        MvVectors v = n7e_vectors(rho, d.m, d.n, d.mu, d.nu, d.minus, d.plus, choose);
        Int num = det_order(v) * h * abs(d.minus.q * d.plus.q);
        Int den = v.delta * a;
        if (num % den != 0) throw std::logic_error("n7e: non-integral beta");
        beta = num / den;
    }
    ExtensionDatum ext = make_extension(beta, gamma);
    return cohomology7(placeholder_of(ext), FgAbelian::free(2), ext);
}

GradedGroups homology_n7f(const N7F& d, const catalog::Catalog& cat) {
    require_valid(FamilyDiagram{d});
    return cohomology_of_product(cat, {"S5", "S2"});
}

GradedGroups homology_n7g(const N7G& d, const catalog::Catalog& cat) {
    require_valid(FamilyDiagram{d});
    return cohomology_of_product(cat, {"CP2", "S3"});
}

GradedGroups homology_n7h(const N7H& d, const catalog::Catalog& cat) {
    require_valid(FamilyDiagram{d});
    if (d.n_minus == 0 && d.n_plus == 0)
        throw std::invalid_argument("invalid N7H diagram: n_- = n_+ = 0 makes K^- = K^+");
    CircleWithFinite cm{d.m_minus, d.n_minus, d.b_minus}, cp{d.m_plus, d.n_plus, d.b_plus};
    if (d.n_minus * d.n_plus == 0) return cohomology_of_product(cat, {"CP2", "S3"});
    Int h = finite_product_order(cm, cp);
    Int a_minus = h / d.b_minus, a_plus = h / d.b_plus;
    FgAbelian h4 = FgAbelian::cyclic(abs(a_minus * a_plus * d.n_minus * d.n_plus));
    return cohomology7(h4, FgAbelian::free(1));
}

GradedGroups homology_n7i(const N7I& d, const catalog::Catalog& cat) {
    require_valid(FamilyDiagram{d});
    return cohomology_of_product(cat, {"S4", "S3"});
}

GradedGroups compute(const FamilyDiagram& d, const catalog::Catalog& cat, const BezoutChooser& choose) {
    return std::visit(
        [&](const auto& x) -> GradedGroups {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, N7A>) return homology_n7a(x, cat, choose);
            else if constexpr (std::is_same_v<T, N7B>) return homology_n7b(x);
            else if constexpr (std::is_same_v<T, N7C>) return homology_n7c(x);
            else if constexpr (std::is_same_v<T, N7D>) return homology_n7d(x, cat);
            else if constexpr (std::is_same_v<T, N7E>) return homology_n7e(x, cat, choose);
            else if constexpr (std::is_same_v<T, N7F>) return homology_n7f(x, cat);
            else if constexpr (std::is_same_v<T, N7G>) return homology_n7g(x, cat);
            else if constexpr (std::is_same_v<T, N7H>) return homology_n7h(x, cat);
            else return homology_n7i(x, cat);
        },
        d);
}

}  // namespace coh1::families
