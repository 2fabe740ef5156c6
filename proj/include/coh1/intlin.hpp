#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer linear algebra: gcd certificates, Smith normal form,
// kernel bases, unimodular completion, determinants and lattice-quotient
// orders. Everything here is total over arbitrary-precision integers.

namespace coh1::intlin {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Certificate for x*psi - y*phi = g = gcd(x,y), with gcd(psi,phi) = 1.
// The choice is canonical: minimal |psi|, ties broken toward psi >= 0.
struct BezoutCert {
    Int x, y;
    Int g;
    Int psi, phi;

    bool valid() const {
        if (g != gcd(x, y) || g < 0) return false;
        if (x * psi - y * phi != g) return false;
        if (g > 0 && gcd(psi, phi) != 1) return false;
        return true;
    }
};

BezoutCert ext_gcd(const Int& x, const Int& y);

// Shift a certificate along the solution line; stays valid for every t.
BezoutCert bezout_shift(const BezoutCert& c, const Int& t);

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> e;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), e(size_t(r) * c) {
        if (r <= 0 || c <= 0) throw std::invalid_argument("IntMatrix: dimensions must be positive");
    }
    IntMatrix(int r, int c, std::initializer_list<long long> init) : IntMatrix(r, c) {
        size_t i = 0;
        for (long long v : init) e.at(i++) = v;
    }

    Int& operator()(int i, int j) { return e[size_t(i) * cols + j]; }
    const Int& operator()(int i, int j) const { return e[size_t(i) * cols + j]; }

    bool operator==(const IntMatrix&) const = default;

    static IntMatrix identity(int n);
    static IntMatrix from_columns(const std::vector<Vec>& cols);
    static IntMatrix from_rows(const std::vector<Vec>& rows);

    Vec column(int j) const;
    Vec row(int i) const;
    IntMatrix mul(const IntMatrix& o) const;
    Vec apply(const Vec& v) const;
};

// U * original * V = diag(d), d1 | d2 | ..., zeros trailing, |det U| = |det V| = 1.
struct SmithDecomposition {
    IntMatrix left;        // U, rows x rows
    std::vector<Int> diag; // length min(rows, cols)
    IntMatrix right;       // V, cols x cols
    IntMatrix original;

    int rank() const {
        int r = 0;
        for (const Int& d : diag)
            if (d != 0) ++r;
        return r;
    }
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

Int det(const IntMatrix& m);

// Basis of the integer kernel lattice of m. The returned vectors extend to
// a basis of Z^cols (they are columns of a unimodular matrix).
std::vector<Vec> kernel_basis(const IntMatrix& m);

// |L/S| where L is spanned by ambient_basis and S by sublattice_gens; 0 means
// infinite. Generators must have integer coordinates in the ambient basis.
Int quotient_order(const std::vector<Vec>& ambient_basis, const std::vector<Vec>& sublattice_gens);

// Extend a primitive family of column vectors to a full unimodular basis of
// Z^n, keeping the input vectors first and in order.
std::vector<Vec> complete_to_unimodular(const std::vector<Vec>& partial);

}  // namespace coh1::intlin
