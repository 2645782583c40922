#pragma once

#include <optional>

#include "selfdual/matrix.hpp"

namespace selfdual {

// A Z-basis of the right kernel lattice {v in Z^cols : M v = 0}. The basis
// is saturated (every integer vector of the rational kernel is an integer
// combination of it), each vector is primitive, and the list is in row
// Hermite normal form: echelon order, first nonzero entry positive, entries
// above each pivot reduced. This makes the basis unique for a given matrix.
struct KernelBasis {
    std::vector<IntVec> vectors;

    std::size_t corank() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
};

// Witnessed answer to "is v in the rational rowspan of M?". If yes, the
// coefficients reproduce v exactly as a combination of the rows of M; if
// no, the witness is a kernel vector with nonzero inner product against v.
struct RowspanCertificate {
    bool member = false;
    RatVec coefficients;  // length rows(M), present iff member
    IntVec witness;       // kernel vector with <v, witness> != 0, iff !member

    explicit operator bool() const { return member; }
};

// Exact rank over Q, fraction-free (Bareiss) elimination, deterministic
// leftmost-lowest pivoting.
std::size_t rank(const IntMatrix& m);

// Saturated kernel lattice basis, canonicalized as described above.
KernelBasis right_kernel(const IntMatrix& m);

// Rowspan membership with certificate. The decision is made against the
// kernel (v in rowspan iff v is orthogonal to every kernel vector); the
// coefficients come from an independent rational solve.
RowspanCertificate in_rowspan(const IntMatrix& m, const IntVec& v);
RowspanCertificate in_rowspan(const IntMatrix& m, const IntVec& v,
                              const KernelBasis& kernel);

// One exact solution of M x = b over Q, or nothing when inconsistent. Free
// variables are set to zero in echelon order, so the answer is unique.
std::optional<RatVec> solve(const IntMatrix& m, const RatVec& b);
std::optional<RatVec> solve(const IntMatrix& m, const IntVec& b);

// gcd of all maximal (rows x rows) minors, computed by unimodular column
// reduction rather than minor enumeration. Returns 0 unless rows <= cols
// and M has full row rank.
Int maximal_minor_gcd(const IntMatrix& m);

// Row Hermite normal form (pivots positive, entries above pivots reduced
// into [0, pivot)). Returns the reduced matrix; zero rows sink to the end.
IntMatrix row_hermite_normal_form(IntMatrix m);

}  // namespace selfdual
