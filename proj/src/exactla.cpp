#include "selfdual/exactla.hpp"

namespace selfdual {

std::size_t rank(const IntMatrix& input) {
    IntMatrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = divexact(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

namespace {

// Column echelon reduction via unimodular column operations, optionally
// tracking the transform. Returns the number of pivots (the rank) and the
// product of the pivots via out-parameter.
std::size_t column_reduce(IntMatrix& c, IntMatrix* u, Int* pivot_product) {
    const std::size_t rows = c.rows(), cols = c.cols();
    std::size_t lead = 0;
    if (pivot_product) *pivot_product = 1;
    for (std::size_t i = 0; i < rows && lead < cols; ++i) {
        std::size_t p = lead;
        while (p < cols && c(i, p) == 0) ++p;
        if (p == cols) continue;
        c.swap_cols(lead, p);
        if (u) u->swap_cols(lead, p);
        for (std::size_t j = lead + 1; j < cols; ++j) {
            if (c(i, j) == 0) continue;
            Int g, s, t;
            int_gcdext(c(i, lead), c(i, j), g, s, t);
            const Int a = divexact(c(i, lead), g);
            const Int b = divexact(c(i, j), g);
            // [lead j] <- [lead j] * [[s, -b], [t, a]], determinant 1
            for (std::size_t k = 0; k < rows; ++k) {
                Int cl = c(k, lead), cj = c(k, j);
                c(k, lead) = s * cl + t * cj;
                c(k, j) = a * cj - b * cl;
            }
            if (u) {
                for (std::size_t k = 0; k < cols; ++k) {
                    Int ul = (*u)(k, lead), uj = (*u)(k, j);
                    (*u)(k, lead) = s * ul + t * uj;
                    (*u)(k, j) = a * uj - b * ul;
                }
            }
        }
        if (c(i, lead) < 0) {
            for (std::size_t k = 0; k < rows; ++k) c(k, lead) = -c(k, lead);
            if (u)
                for (std::size_t k = 0; k < cols; ++k)
                    (*u)(k, lead) = -(*u)(k, lead);
        }
        if (pivot_product) *pivot_product *= c(i, lead);
        ++lead;
    }
    return lead;
}

}  // namespace

IntMatrix row_hermite_normal_form(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            Int g, s, t;
            int_gcdext(m(r, c), m(i, c), g, s, t);
            const Int a = divexact(m(r, c), g);
            const Int b = divexact(m(i, c), g);
            for (std::size_t j = 0; j < cols; ++j) {
                Int mr = m(r, j), mi = m(i, j);
                m(r, j) = s * mr + t * mi;
                m(i, j) = a * mi - b * mr;
            }
        }
        if (m(r, c) < 0)
            for (std::size_t j = 0; j < cols; ++j) m(r, j) = -m(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = fdiv_q(m(i, c), m(r, c));
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
        }
        ++r;
    }
    return m;
}

KernelBasis right_kernel(const IntMatrix& m) {
    const std::size_t cols = m.cols();
    IntMatrix c = m;
    IntMatrix u = IntMatrix::identity(cols);
    const std::size_t rk = column_reduce(c, &u, nullptr);

    std::vector<IntVec> raw;
    raw.reserve(cols - rk);
    for (std::size_t j = rk; j < cols; ++j) raw.push_back(u.col(j));

    // Canonicalize: the kernel lattice is the row lattice of these vectors;
    // its Hermite normal form is a unique primitive echelon basis.
    IntMatrix h = row_hermite_normal_form(IntMatrix::from_rows(raw));
    KernelBasis basis;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        IntVec v = h.row(i);
        if (is_zero(v)) throw internal_error("right_kernel: dependent basis");
        if (!is_zero(m.mul(v)))
            throw internal_error("right_kernel: M*v != 0");
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

RowspanCertificate in_rowspan(const IntMatrix& m, const IntVec& v) {
    return in_rowspan(m, v, right_kernel(m));
}

RowspanCertificate in_rowspan(const IntMatrix& m, const IntVec& v,
                              const KernelBasis& kernel) {
    if (v.size() != m.cols())
        throw dimension_mismatch("in_rowspan: length mismatch");
    RowspanCertificate cert;
    for (const IntVec& w : kernel.vectors) {
        if (dot(v, w) != 0) {
            cert.member = false;
            cert.witness = w;
            return cert;
        }
    }
    auto x = solve(m.transposed(), v);
    if (!x)
        throw internal_error(
            "in_rowspan: kernel-orthogonal vector failed to solve");
    cert.member = true;
    cert.coefficients = std::move(*x);
    return cert;
}

std::optional<RatVec> solve(const IntMatrix& m, const IntVec& b) {
    return solve(m, to_rat(b));
}

std::optional<RatVec> solve(const IntMatrix& m, const RatVec& b) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (b.size() != rows) throw dimension_mismatch("solve: length mismatch");

    // Rational Gaussian elimination on [M | b], leftmost-lowest pivoting.
    std::vector<RatVec> a(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m(i, j));
        a[i][cols] = b[i];
        for (auto& x : a[i]) x.canonicalize();
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;

    RatVec x(cols, Rat(0));
    for (std::size_t i = r; i-- > 0;) {
        Rat s = a[i][cols];
        for (std::size_t j = pivot_col[i] + 1; j < cols; ++j)
            s -= a[i][j] * x[j];
        x[pivot_col[i]] = s / a[i][pivot_col[i]];
    }
    for (auto& xi : x) xi.canonicalize();
    return x;
}

Int maximal_minor_gcd(const IntMatrix& m) {
    if (m.rows() > m.cols()) return 0;
    IntMatrix c = m;
    Int prod;
    const std::size_t rk = column_reduce(c, nullptr, &prod);
    if (rk < m.rows()) return 0;
    return int_abs(prod);
}

}  // namespace selfdual
