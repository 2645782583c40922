#pragma once

#include <optional>

#include "selfdual/dualdim_report.hpp"
#include "selfdual/osculation.hpp"

namespace selfdual {

struct empty_kernel : error {
    empty_kernel() : error("the k-jet matrix has trivial kernel (c_k = 0)") {}
};

struct zero_b_vector : error {
    std::size_t index;
    explicit zero_b_vector(std::size_t i)
        : error("b-vector at index " + std::to_string(i) +
                " is zero; the configuration is not knap"),
          index(i) {}
};

struct inapplicable : error {
    explicit inapplicable(const std::string& what) : error(what) {}
};

struct too_large : error {
    explicit too_large(const std::string& what) : error(what) {}
};

// "knap" = not a pyramid: no coordinate vector e_i lies in the rowspan of
// the k-jet matrix; equivalently its kernel meets the dual torus.
struct KnapReport {
    bool is_knap = false;
    // J: indices i with e_i in the rowspan, equivalently the coordinates on
    // which the whole kernel vanishes. The two computations must agree.
    std::vector<std::size_t> offending_indices;
    // Integer kernel point with all coordinates nonzero, iff knap. Built as
    // sum_j t^j nu^j for the smallest t >= 1 that avoids all vanishings.
    std::optional<IntVec> torus_witness;

    const std::vector<std::size_t>& J() const { return offending_indices; }
};

// Grouping of the b-vectors by the line through the origin they span.
struct Line {
    IntVec direction;                 // primitive, first nonzero positive
    std::vector<std::size_t> members; // Gamma_j, ascending
    IntVec multipliers;               // b_i = multipliers[pos] * direction
};

struct LinePartition {
    std::vector<Line> lines;  // ordered by smallest member index
    std::size_t line_count() const { return lines.size(); }
};

enum class SubVerdict { NotKnap, Selfdual, PaperContradiction };

struct SelfdualVerdict {
    int k = 0;
    bool selfdual = false;
    std::size_t num_points = 0;   // N + 1
    std::size_t dim = 0;          // n after normalization
    std::size_t jet_rank = 0;     // d_k + 1
    long d_k = -1;
    std::size_t c_k = 0;
    KnapReport knap;
    KernelBasis kernel;                      // kernel lattice basis of A^(k)
    std::vector<IntVec> b_vectors;           // iff c_k >= 1
    std::optional<LinePartition> partition;  // iff knap
    std::vector<RowspanCertificate> el_certificates;  // parallel to lines
    std::optional<std::size_t> cayley_r;     // r, iff selfdual
    bool was_normalized = false;
    std::string reason;  // short human-readable explanation of the verdict
    // Failed theorem-implied invariants are reported here rather than
    // thrown; an exact run should never populate this.
    std::vector<std::string> diagnostics;
    std::optional<DualDimReport> dual_dim_check;
};

// The knap decision with certificates, computed against the normalized
// configuration. Both detection routes (rowspan solves and kernel
// coordinate scan) run and must agree.
KnapReport knap_check(const LatticeConfiguration& cfg, int k);

// The coordinate rows of the kernel basis: b_i = (nu^1_i, ..., nu^c_i).
std::vector<IntVec> b_vectors(const JetData& jet);

// Groups nonzero b-vectors by projective equivalence of their primitive
// normalizations. Throws zero_b_vector on non-knap input.
LinePartition line_partition(const std::vector<IntVec>& bs);

// The full k-selfduality decision: knap plus every line indicator e_L in the
// rowspan of the homogenized matrix. Auto-normalizes (and says so in the
// verdict) when the points do not affinely generate the full lattice.
SelfdualVerdict classify(const LatticeConfiguration& cfg, int k);

// True iff every part's indicator vector lies in the rowspan of the
// homogenized matrix, i.e. the parts define an r-Cayley structure.
bool cayley_with_respect_to(const LatticeConfiguration& cfg,
                            const std::vector<std::vector<std::size_t>>& parts);

// A witnessing proper 2-part Cayley split, if one exists. Works by
// enumerating the 0/1 assignments of an affine functional on an affine
// basis of the points; throws too_large past max_points.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
detect_two_cayley(const LatticeConfiguration& cfg, std::size_t max_points = 24);

// For a non-knap configuration with c_k = 1: the subconfiguration on the
// complement of the kernel's zero-coordinate set, which is k-selfdual.
LatticeConfiguration extract_DJ(const LatticeConfiguration& cfg, int k);

// Classifies a subconfiguration of a k-selfdual configuration. The result
// is NotKnap or Selfdual; any third outcome is reported, with diagnostics,
// as PaperContradiction.
SubVerdict subconfiguration_verdict(const LatticeConfiguration& cfg, int k,
                                    const std::vector<std::size_t>& subset,
                                    std::vector<std::string>* diagnostics = nullptr);

// Interpolation route to the knap decision: i is offending iff removing a_i
// drops the Hilbert function at k. Exists as an independent cross-check of
// knap_check; the two must agree on every input.
std::vector<std::size_t> offending_by_hilbert_drop(
    const LatticeConfiguration& cfg, int k);

}  // namespace selfdual
