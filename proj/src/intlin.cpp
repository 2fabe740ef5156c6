#include "coh1/intlin.hpp"

#include <algorithm>

namespace coh1::intlin {

BezoutCert ext_gcd(const Int& x, const Int& y) {
    BezoutCert c;
    c.x = x;
    c.y = y;
    c.g = gcd(x, y);
    if (x == 0 && y == 0) {
        c.psi = c.phi = 0;
        return c;
    }
    if (y == 0) {
        c.psi = x > 0 ? 1 : -1;
        c.phi = 0;
        return c;
    }
    // Solve (x/g)*psi = 1 mod |y/g|, then pick the representative of minimal
    // absolute value, ties toward nonnegative.
    Int m = abs(y / c.g);
    if (m == 1) {
        c.psi = 0;
    } else {
        // extended Euclid for inverse of x/g mod m
        Int a = ((x / c.g) % m + m) % m;
        Int old_r = a, r = m, old_s = 1, s = 0;
        while (r != 0) {
            Int q = old_r / r;
            Int tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
        }
        Int inv = ((old_s % m) + m) % m;  // a*inv = 1 mod m
        Int hi = inv, lo = inv - m;
        c.psi = (abs(lo) < abs(hi) || (abs(lo) == abs(hi) && lo >= 0)) ? lo : hi;
    }
    c.phi = (x * c.psi - c.g) / y;
    return c;
}

BezoutCert bezout_shift(const BezoutCert& c, const Int& t) {
    BezoutCert s = c;
    s.psi = c.psi + c.y * t;
    s.phi = c.phi + c.x * t;
    return s;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty() || cols[0].empty()) throw std::invalid_argument("from_columns: empty input");
    IntMatrix m(int(cols[0].size()), int(cols.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (int(cols[j].size()) != m.rows) throw std::invalid_argument("from_columns: ragged input");
        for (int i = 0; i < m.rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("from_rows: empty input");
    IntMatrix m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (int(rows[i].size()) != m.cols) throw std::invalid_argument("from_rows: ragged input");
        for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec IntMatrix::column(int j) const {
    Vec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec IntMatrix::row(int i) const {
    Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("mul: dimension mismatch");
    IntMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

Vec IntMatrix::apply(const Vec& v) const {
    if (int(v.size()) != cols) throw std::invalid_argument("apply: dimension mismatch");
    Vec r(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

namespace {

// Row/column operation helpers keeping U*A*V in sync with A.
struct SnfWork {
    IntMatrix a, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols; ++c) std::swap(a(i, c), a(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows; ++r) std::swap(a(r, i), a(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v(r, i), v(r, j));
    }
    void add_row(int dst, int src, const Int& k) {  // row_dst += k*row_src
        for (int c = 0; c < a.cols; ++c) a(dst, c) += k * a(src, c);
        for (int c = 0; c < u.cols; ++c) u(dst, c) += k * u(src, c);
    }
    void add_col(int dst, int src, const Int& k) {  // col_dst += k*col_src
        for (int r = 0; r < a.rows; ++r) a(r, dst) += k * a(r, src);
        for (int r = 0; r < v.rows; ++r) v(r, dst) += k * v(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols; ++c) a(i, c) = -a(i, c);
        for (int c = 0; c < u.cols; ++c) u(i, c) = -u(i, c);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    if (m.rows <= 0 || m.cols <= 0) throw std::invalid_argument("smith_normal_form: empty matrix");
    SnfWork w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
    const int n = std::min(m.rows, m.cols);

    for (int t = 0; t < n; ++t) {
        for (;;) {
            // smallest-nonzero-absolute-value pivot in the trailing block
            int pi = -1, pj = -1;
            for (int i = t; i < m.rows; ++i)
                for (int j = t; j < m.cols; ++j)
                    if (w.a(i, j) != 0 &&
                        (pi < 0 || abs(w.a(i, j)) < abs(w.a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) { t = n; break; }  // trailing block is zero
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < m.rows; ++i)
                if (w.a(i, t) != 0) {
                    w.add_row(i, t, -(w.a(i, t) / w.a(t, t)));
                    if (w.a(i, t) != 0) clean = false;
                }
            for (int j = t + 1; j < m.cols; ++j)
                if (w.a(t, j) != 0) {
                    w.add_col(j, t, -(w.a(t, j) / w.a(t, t)));
                    if (w.a(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            // pivot must divide the trailing block for the chain fixup to work
            bool divides = true;
            for (int i = t + 1; i < m.rows && divides; ++i)
                for (int j = t + 1; j < m.cols && divides; ++j)
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (t >= n) break;
    }

    for (int t = 0; t < n; ++t)
        if (w.a(t, t) < 0) w.negate_row(t);

    SmithDecomposition d;
    d.left = std::move(w.u);
    d.right = std::move(w.v);
    d.original = m;
    d.diag.resize(n);
    for (int t = 0; t < n; ++t) d.diag[t] = w.a(t, t);
    return d;
}

Int det(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    IntMatrix a = m;
    const int n = m.rows;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<Vec> kernel_basis(const IntMatrix& m) {
    SmithDecomposition d = smith_normal_form(m);
    std::vector<Vec> basis;
    for (int j = 0; j < m.cols; ++j) {
        bool zero = j >= int(d.diag.size()) || d.diag[j] == 0;
        if (zero) basis.push_back(d.right.column(j));
    }
    return basis;
}

namespace {

// Integer coordinates of v in the given lattice basis, via a precomputed SNF
// of the basis matrix. Throws if v is not in the sublattice.
Vec coords_in_basis(const SmithDecomposition& d, int k, const Vec& v) {
    Vec u = d.left.apply(v);
    Vec y(k);
    for (int i = 0; i < int(u.size()); ++i) {
        if (i < k) {
            if (d.diag[i] == 0) throw std::invalid_argument("quotient_order: ambient vectors are not a basis");
            if (u[i] % d.diag[i] != 0) throw std::invalid_argument("not a sublattice element");
            y[i] = u[i] / d.diag[i];
        } else if (u[i] != 0) {
            throw std::invalid_argument("not a sublattice element");
        }
    }
    return d.right.apply(y);
}

}  // namespace

Int quotient_order(const std::vector<Vec>& ambient_basis, const std::vector<Vec>& sublattice_gens) {
    if (ambient_basis.empty()) throw std::invalid_argument("quotient_order: empty ambient basis");
    const int k = int(ambient_basis.size());
    SmithDecomposition d = smith_normal_form(IntMatrix::from_columns(ambient_basis));
    if (sublattice_gens.empty()) return k == 0 ? Int(1) : Int(0);

    std::vector<Vec> coord_cols;
    for (const Vec& g : sublattice_gens) coord_cols.push_back(coords_in_basis(d, k, g));
    SmithDecomposition c = smith_normal_form(IntMatrix::from_columns(coord_cols));
    if (c.rank() < k) return 0;
    Int order = 1;
    for (const Int& di : c.diag)
        if (di != 0) order *= di;
    return order;
}

namespace {

// Inverse of a unimodular matrix: if U*M*V = I then M^-1 = V*U.
IntMatrix unimodular_inverse(const IntMatrix& m) {
    SmithDecomposition d = smith_normal_form(m);
    for (const Int& di : d.diag)
        if (di != 1) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
    return d.right.mul(d.left);
}

}  // namespace

std::vector<Vec> complete_to_unimodular(const std::vector<Vec>& partial) {
    if (partial.empty()) throw std::invalid_argument("complete_to_unimodular: empty input");
    const int n = int(partial[0].size());
    const int k = int(partial.size());
    if (k > n) throw std::invalid_argument("no unimodular completion");
    SmithDecomposition d = smith_normal_form(IntMatrix::from_columns(partial));
    for (const Int& di : d.diag)
        if (di != 1) throw std::invalid_argument("no unimodular completion");
    // With U*P*V = [I;0]: the first k columns of U^-1 * diag(V^-1, I) are P
    // itself, and the rest complete the basis.
    IntMatrix uinv = unimodular_inverse(d.left);
    std::vector<Vec> basis = partial;
    for (int j = k; j < n; ++j) basis.push_back(uinv.column(j));
    return basis;
}

}  // namespace coh1::intlin
