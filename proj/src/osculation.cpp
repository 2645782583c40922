#include "selfdual/osculation.hpp"

namespace selfdual {

namespace {

void gen_indices(std::size_t pos, std::size_t last, int remaining,
                 MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos == last) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        gen_indices(pos + 1, last, remaining - v, cur, out);
    }
}

}  // namespace

std::vector<MultiIndex> multiindices(std::size_t n, int k) {
    if (k < 0) throw error("multiindices: negative order");
    std::vector<MultiIndex> out;
    out.reserve(binomial_size(n + static_cast<unsigned long>(k), k));
    MultiIndex cur(n + 1, 0);
    gen_indices(0, n, k, cur, out);
    return out;
}

JetData jet_matrix(const LatticeConfiguration& cfg, int k) {
    const std::size_t n = cfg.ambient_dim(), np = cfg.size();
    JetData jet;
    jet.k = k;
    jet.row_indices = multiindices(n, k);
    jet.matrix = IntMatrix(jet.row_indices.size(), np);
    for (std::size_t r = 0; r < jet.row_indices.size(); ++r) {
        const MultiIndex& alpha = jet.row_indices[r];
        for (std::size_t i = 0; i < np; ++i) {
            Int v = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (alpha[j + 1] > 0)
                    v *= int_pow(cfg.point(i)[j],
                                 static_cast<unsigned long>(alpha[j + 1]));
            jet.matrix(r, i) = v;
        }
    }
    jet.rank = rank(jet.matrix);
    jet.d_k = static_cast<long>(jet.rank) - 1;
    jet.kernel = right_kernel(jet.matrix);
    jet.c_k = np - jet.rank;
    if (jet.kernel.corank() != jet.c_k)
        throw internal_error("jet_matrix: rank/corank mismatch");
    return jet;
}

std::size_t hilbert_function(const LatticeConfiguration& cfg, int k) {
    return jet_matrix(cfg, k).rank;
}

bool is_generically_jet_spanned(const LatticeConfiguration& cfg, int k) {
    return hilbert_function(cfg, k) ==
           binomial_size(cfg.ambient_dim() + static_cast<unsigned long>(k), k);
}

std::vector<IntVec> simplex_points(std::size_t n, int k) {
    auto idx = multiindices(n, k);
    std::vector<IntVec> pts;
    pts.reserve(idx.size());
    for (const MultiIndex& alpha : idx) {
        IntVec p(n);
        for (std::size_t j = 0; j < n; ++j) p[j] = alpha[j + 1];
        pts.push_back(std::move(p));
    }
    return pts;
}

IntMatrix falling_factorial_matrix(std::size_t n, int k) {
    const auto idx = multiindices(n, k);
    const auto pts = simplex_points(n, k);
    IntMatrix m(idx.size(), pts.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < pts.size(); ++c) {
            // m_alpha(beta) = prod_i binom(beta_i, alpha_i); beta >= 0 here.
            Int v = 1;
            for (std::size_t j = 0; j < n; ++j) {
                unsigned long beta = pts[c][j].get_ui();
                v *= binomial(beta, static_cast<unsigned long>(idx[r][j + 1]));
                if (v == 0) break;
            }
            m(r, c) = v;
        }
    }
    return m;
}

}  // namespace selfdual
