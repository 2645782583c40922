#include "selfdual/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace selfdual {

namespace {

std::vector<std::size_t> offending_by_kernel_scan(const JetData& jet) {
    std::vector<std::size_t> out;
    const std::size_t np = jet.matrix.cols();
    for (std::size_t i = 0; i < np; ++i) {
        bool all_zero = true;
        for (const IntVec& v : jet.kernel.vectors)
            if (v[i] != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> offending_by_rowspan_solve(const JetData& jet) {
    std::vector<std::size_t> out;
    const std::size_t np = jet.matrix.cols();
    IntMatrix at = jet.matrix.transposed();
    for (std::size_t i = 0; i < np; ++i) {
        IntVec e(np, Int(0));
        e[i] = 1;
        if (solve(at, e)) out.push_back(i);
    }
    return out;
}

KnapReport knap_from_jet(const JetData& jet) {
    KnapReport rep;
    rep.offending_indices = offending_by_kernel_scan(jet);
    auto via_rowspan = offending_by_rowspan_solve(jet);
    if (rep.offending_indices != via_rowspan)
        throw internal_error("knap: rowspan and kernel routes disagree");
    rep.is_knap = rep.offending_indices.empty();
    if (!rep.is_knap || jet.c_k == 0) return rep;

    // Witness search over lambda = (1, t, t^2, ...). Each coordinate is a
    // nonzero polynomial in t of degree < c_k, so at most (N+1)(c_k - 1)
    // values of t can fail.
    const std::size_t np = jet.matrix.cols();
    for (Int t = 1;; ++t) {
        IntVec p(np, Int(0));
        Int tp = 1;
        for (const IntVec& v : jet.kernel.vectors) {
            for (std::size_t i = 0; i < np; ++i) p[i] += tp * v[i];
            tp *= t;
        }
        bool ok = true;
        for (const Int& x : p)
            if (x == 0) {
                ok = false;
                break;
            }
        if (ok) {
            rep.torus_witness = std::move(p);
            return rep;
        }
    }
}

IntVec indicator(std::size_t len, const std::vector<std::size_t>& idx) {
    IntVec e(len, Int(0));
    for (std::size_t i : idx) e[i] = 1;
    return e;
}

}  // namespace

KnapReport knap_check(const LatticeConfiguration& cfg, int k) {
    auto [norm, rec] = normalize_lattice(cfg);
    return knap_from_jet(jet_matrix(norm, k));
}

std::vector<IntVec> b_vectors(const JetData& jet) {
    if (jet.c_k == 0) throw empty_kernel();
    const std::size_t np = jet.matrix.cols();
    std::vector<IntVec> bs(np, IntVec(jet.c_k));
    for (std::size_t j = 0; j < jet.c_k; ++j)
        for (std::size_t i = 0; i < np; ++i)
            bs[i][j] = jet.kernel.vectors[j][i];
    return bs;
}

LinePartition line_partition(const std::vector<IntVec>& bs) {
    LinePartition part;
    std::map<IntVec, std::size_t> line_of;  // primitive direction -> index
    for (std::size_t i = 0; i < bs.size(); ++i) {
        IntVec dir = bs[i];
        if (!make_primitive(dir)) throw zero_b_vector(i);
        auto [it, inserted] = line_of.emplace(dir, part.lines.size());
        if (inserted) {
            Line l;
            l.direction = dir;
            part.lines.push_back(std::move(l));
        }
        Line& l = part.lines[it->second];
        // b_i = mu * direction; read mu off the first nonzero coordinate.
        std::size_t nz = 0;
        while (l.direction[nz] == 0) ++nz;
        l.members.push_back(i);
        l.multipliers.push_back(divexact(bs[i][nz], l.direction[nz]));
    }
    return part;
}

SelfdualVerdict classify(const LatticeConfiguration& cfg, int k) {
    auto [norm, rec] = normalize_lattice(cfg);

    SelfdualVerdict v;
    v.k = k;
    v.num_points = norm.size();
    v.dim = norm.ambient_dim();
    v.was_normalized = rec.changed;

    JetData jet = jet_matrix(norm, k);
    v.jet_rank = jet.rank;
    v.d_k = jet.d_k;
    v.c_k = jet.c_k;
    v.kernel = jet.kernel;
    v.knap = knap_from_jet(jet);

    if (v.c_k == 0) {
        // The kernel is trivial, every e_i lies in the rowspan, and the k-th
        // dual variety is empty; the configuration cannot be k-selfdual.
        v.selfdual = false;
        v.reason = "c_k = 0: A^(k) has full column rank, the k-th dual is empty";
        return v;
    }
    if (!v.knap.is_knap) {
        v.selfdual = false;
        std::ostringstream os;
        os << "not " << k << "nap: e_i lies in the rowspan of A^(" << k
           << ") for i in {";
        for (std::size_t i = 0; i < v.knap.offending_indices.size(); ++i)
            os << (i ? "," : "") << v.knap.offending_indices[i];
        os << "}";
        v.reason = os.str();
        return v;
    }

    v.b_vectors = b_vectors(jet);
    v.partition = line_partition(v.b_vectors);
    const std::size_t r = v.partition->line_count();

    IntMatrix a = homogenize(norm);
    KernelBasis ka = right_kernel(a);
    bool all_member = true;
    for (const Line& l : v.partition->lines) {
        auto cert = in_rowspan(a, indicator(norm.size(), l.members), ka);
        all_member = all_member && cert.member;
        v.el_certificates.push_back(std::move(cert));
    }
    v.selfdual = all_member;

    if (v.c_k == 1 && !v.selfdual) {
        // With a one-dimensional kernel the single line covers everything
        // and its indicator is the all-ones row of A; failure here would
        // contradict the c_k = 1 criterion.
        v.diagnostics.push_back(
            "contradiction: knap with c_k = 1 must be selfdual, but the e_L "
            "certificate failed");
    }

    if (v.selfdual) {
        v.cayley_r = r;
        v.reason = std::to_string(k) + "-selfdual (" + std::to_string(r) +
                   "-Cayley with respect to the line partition)";
        // Consequences of the characterization, asserted rather than assumed.
        for (const Line& l : v.partition->lines) {
            IntVec sum(v.c_k, Int(0));
            for (std::size_t i : l.members)
                for (std::size_t j = 0; j < v.c_k; ++j)
                    sum[j] += v.b_vectors[i][j];
            if (!is_zero(sum))
                v.diagnostics.push_back(
                    "contradiction: the b-vectors of a line do not sum to zero");
        }
        if (r < v.c_k)
            v.diagnostics.push_back(
                "contradiction: fewer lines than the kernel dimension");
        const long n = static_cast<long>(v.dim);
        const long bign = static_cast<long>(v.num_points) - 1;
        if (v.d_k < bign - n)
            v.diagnostics.push_back(
                "contradiction: d_k < N - n on a selfdual configuration");
    } else {
        std::ostringstream os;
        os << "knap but not " << k << "-selfdual: ";
        std::size_t bad = 0;
        for (std::size_t j = 0; j < v.el_certificates.size(); ++j)
            if (!v.el_certificates[j].member) ++bad;
        os << bad << " of " << r
           << " line indicators lie outside the rowspan of A";
        v.reason = os.str();
    }
    return v;
}

bool cayley_with_respect_to(const LatticeConfiguration& cfg,
                            const std::vector<std::vector<std::size_t>>& parts) {
    const std::size_t np = cfg.size();
    std::vector<bool> seen(np, false);
    std::size_t covered = 0;
    for (const auto& part : parts)
        for (std::size_t i : part) {
            if (i >= np || seen[i])
                throw error("cayley_with_respect_to: not a partition");
            seen[i] = true;
            ++covered;
        }
    if (covered != np) throw error("cayley_with_respect_to: not a partition");

    IntMatrix a = homogenize(cfg);
    KernelBasis ka = right_kernel(a);
    for (const auto& part : parts)
        if (!in_rowspan(a, indicator(np, part), ka).member) return false;
    return true;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
detect_two_cayley(const LatticeConfiguration& cfg, std::size_t max_points) {
    if (cfg.size() > max_points)
        throw too_large("detect_two_cayley: configuration exceeds " +
                        std::to_string(max_points) + " points");
    auto [norm, rec] = normalize_lattice(cfg);
    const std::size_t n = norm.ambient_dim(), np = norm.size();
    if (np < 2) return std::nullopt;

    IntMatrix a = homogenize(norm);

    // Affine basis: point indices whose homogenized columns are independent.
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < np && basis.size() < n + 1; ++i) {
        basis.push_back(i);
        if (rank(a.select_columns(basis)) != basis.size()) basis.pop_back();
    }
    if (basis.size() != n + 1)
        throw internal_error("detect_two_cayley: no affine basis");

    // Every affine functional with 0/1 values on all points restricts to a
    // 0/1 assignment on the basis, so trying all assignments is exhaustive.
    IntMatrix ab = a.select_columns(basis);
    const std::size_t count = std::size_t(1) << (n + 1);
    for (std::size_t mask = 1; mask + 1 < count; ++mask) {
        IntVec values(n + 1);
        for (std::size_t j = 0; j < n + 1; ++j)
            values[j] = (mask >> j) & 1 ? 1 : 0;
        auto coeffs = solve(ab.transposed(), values);
        if (!coeffs) throw internal_error("detect_two_cayley: singular basis");
        std::vector<std::size_t> ones, zeros;
        bool ok = true;
        for (std::size_t i = 0; i < np && ok; ++i) {
            Rat val(0);
            for (std::size_t j = 0; j < n + 1; ++j)
                val += (*coeffs)[j] * Rat(a(j, i));
            val.canonicalize();
            if (val == 1)
                ones.push_back(i);
            else if (val == 0)
                zeros.push_back(i);
            else
                ok = false;
        }
        if (ok && !ones.empty() && !zeros.empty())
            return std::make_pair(std::move(ones), std::move(zeros));
    }
    return std::nullopt;
}

LatticeConfiguration extract_DJ(const LatticeConfiguration& cfg, int k) {
    auto [norm, rec] = normalize_lattice(cfg);
    JetData jet = jet_matrix(norm, k);
    if (jet.c_k != 1)
        throw inapplicable("extract_DJ: requires c_k = 1, got c_k = " +
                           std::to_string(jet.c_k));
    KnapReport rep = knap_from_jet(jet);
    if (rep.is_knap)
        throw inapplicable("extract_DJ: configuration is already knap");

    std::vector<std::size_t> keep;
    const auto& j = rep.offending_indices;
    for (std::size_t i = 0; i < cfg.size(); ++i)
        if (!std::binary_search(j.begin(), j.end(), i)) keep.push_back(i);
    LatticeConfiguration d = cfg.subconfiguration(keep, cfg.label());
    if (!classify(d, k).selfdual)
        throw internal_error("extract_DJ: the extracted subconfiguration "
                             "failed to classify as selfdual");
    return d;
}

SubVerdict subconfiguration_verdict(const LatticeConfiguration& cfg, int k,
                                    const std::vector<std::size_t>& subset,
                                    std::vector<std::string>* diagnostics) {
    SelfdualVerdict parent = classify(cfg, k);
    if (!parent.selfdual)
        throw inapplicable("subconfiguration_verdict: parent is not selfdual");
    LatticeConfiguration sub = cfg.subconfiguration(subset);
    SelfdualVerdict v = classify(sub, k);
    if (!v.knap.is_knap) return SubVerdict::NotKnap;
    if (v.selfdual) return SubVerdict::Selfdual;
    if (diagnostics)
        diagnostics->push_back(
            "contradiction: knap subconfiguration of a selfdual configuration "
            "is not selfdual (" + v.reason + ")");
    return SubVerdict::PaperContradiction;
}

std::vector<std::size_t> offending_by_hilbert_drop(
    const LatticeConfiguration& cfg, int k) {
    auto [norm, rec] = normalize_lattice(cfg);
    const std::size_t h = hilbert_function(norm, k);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < norm.size(); ++i) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < norm.size(); ++j)
            if (j != i) rest.push_back(j);
        if (hilbert_function(norm.subconfiguration(rest), k) != h)
            out.push_back(i);
    }
    return out;
}

}  // namespace selfdual
