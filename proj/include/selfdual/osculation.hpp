#pragma once

#include "selfdual/config.hpp"

namespace selfdual {

// Exponent vector alpha in N^{n+1} of total degree k; the leading entry
// absorbs the homogenizing coordinate, whose evaluation is all ones, so the
// reduced exponents (alpha_1, ..., alpha_n) index the distinct monomials of
// degree at most k.
using MultiIndex = std::vector<int>;

// All alpha in N^{n+1} with |alpha| = k, in descending lexicographic order
// (leftmost coordinate heaviest). That is exactly degree-ascending then
// descending-lex order on the reduced exponents, and it puts the constant
// row first and the coordinate rows right after it. binom(n+k, k) entries.
std::vector<MultiIndex> multiindices(std::size_t n, int k);

// The k-jet evaluation matrix of a configuration together with its exact
// rank data and kernel lattice basis.
struct JetData {
    int k = 0;
    IntMatrix matrix;                     // binom(n+k,k) x (N+1)
    std::vector<MultiIndex> row_indices;  // row labels, multiindices order
    std::size_t rank = 0;
    long d_k = -1;       // rank - 1
    std::size_t c_k = 0; // corank = N - d_k
    KernelBasis kernel;
};

JetData jet_matrix(const LatticeConfiguration& cfg, int k);

// Number of independent conditions the points impose on polynomials of
// degree <= k; equals the rank of the k-jet matrix.
std::size_t hilbert_function(const LatticeConfiguration& cfg, int k);

// True iff the k-jet matrix has the maximal possible rank binom(n+k, k).
bool is_generically_jet_spanned(const LatticeConfiguration& cfg, int k);

// Evaluations of the falling-factorial polynomials
//   m_alpha(x) = prod_i x_i (x_i - 1) ... (x_i - alpha_i + 1) / alpha_i!
// at the lattice points of the size-k standard simplex, rows and columns in
// multiindices order. Upper triangular with unit diagonal.
IntMatrix falling_factorial_matrix(std::size_t n, int k);

// The lattice points of the size-k standard simplex in Z^n, in the same
// order as the rows of the jet matrix. Used by the triangularity checks and
// handy as a generator.
std::vector<IntVec> simplex_points(std::size_t n, int k);

}  // namespace selfdual
