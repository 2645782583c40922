#include "selfdual/dualdim.hpp"

#include <algorithm>

namespace selfdual {

namespace {

constexpr long kSampleBound = 101;
constexpr int kMaxRejections = 50;

IntVec sample_vector(Rng& rng, std::size_t len) {
    IntVec v(len);
    for (auto& x : v) x = rng.range(-kSampleBound, kSampleBound);
    return v;
}

IntVec sample_nonzero_vector(Rng& rng, std::size_t len) {
    IntVec v(len);
    for (auto& x : v) {
        long c = rng.range(-kSampleBound, kSampleBound - 1);
        x = c >= 0 ? c + 1 : c;  // skip zero coordinates
    }
    return v;
}

// lambda with <b_i, lambda> != 0 for every i outside the zero set.
IntVec sample_lambda(Rng& rng, const std::vector<IntVec>& bs,
                     std::size_t c_k) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        IntVec lambda = sample_vector(rng, c_k);
        bool ok = true;
        for (const IntVec& b : bs) {
            if (is_zero(b)) continue;
            if (dot(b, lambda) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) return lambda;
    }
    throw sampling_failed("could not sample lambda off the hyperplanes");
}

}  // namespace

DualDimReport dual_dimension(const LatticeConfiguration& cfg, int k,
                             std::size_t trials, std::uint64_t seed) {
    auto [norm, rec] = normalize_lattice(cfg);
    const std::size_t n = norm.ambient_dim(), np = norm.size();

    JetData jet = jet_matrix(norm, k);
    if (jet.c_k == 0) throw empty_kernel();
    const std::vector<IntVec> bs = b_vectors(jet);

    DualDimReport rep;
    rep.expected_dim = static_cast<long>(n) + static_cast<long>(jet.c_k) - 1;
    rep.trials = trials;
    rep.seed = seed;
    for (std::size_t i = 0; i < np; ++i)
        if (is_zero(bs[i])) rep.degenerate_coordinates.push_back(i);

    // Componentwise exponent shift that clears the Laurent denominators:
    // coordinate i becomes <b_i, lambda> t^(amax - a_i).
    IntVec amax(n, Int(0));
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < n; ++j)
            amax[j] = std::max(amax[j], norm.point(i)[j]);

    Rng rng(seed);
    std::size_t max_rank = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        DualSample s;
        s.lambda = sample_lambda(rng, bs, jet.c_k);
        s.t = sample_nonzero_vector(rng, n);

        // Jacobian after scaling row i by t^-(amax - a_i) and the t_l
        // column by t_l, both rank-preserving at torus points:
        //   [ b_i | <b_i, lambda> * (amax - a_i) ].
        IntMatrix g(np, jet.c_k + n);
        for (std::size_t i = 0; i < np; ++i) {
            Int bl = dot(bs[i], s.lambda);
            for (std::size_t j = 0; j < jet.c_k; ++j) g(i, j) = bs[i][j];
            for (std::size_t l = 0; l < n; ++l)
                g(i, jet.c_k + l) = bl * (amax[l] - norm.point(i)[l]);
        }
        max_rank = std::max(max_rank, rank(g));
        rep.samples.push_back(std::move(s));
    }
    rep.computed_dim = static_cast<long>(max_rank) - 1;

    SelfdualVerdict v = classify(norm, k);
    const bool torus_route =
        v.knap.is_knap && rep.computed_dim == static_cast<long>(v.dim);
    rep.agrees_with_verdict = (v.selfdual == torus_route);
    return rep;
}

CrosscheckReport crosscheck_characterizations(const LatticeConfiguration& cfg,
                                              int k, std::size_t trials,
                                              std::uint64_t seed) {
    CrosscheckReport rep;
    rep.verdict = classify(cfg, k);
    if (rep.verdict.c_k == 0) {
        // The k-th dual is empty; both routes call this not selfdual.
        rep.agree = !rep.verdict.selfdual;
        if (!rep.agree)
            rep.diagnostics.push_back("selfdual verdict with empty kernel");
        return rep;
    }
    rep.dual = dual_dimension(cfg, k, trials, seed);
    rep.agree = rep.dual.agrees_with_verdict;
    if (!rep.agree) {
        std::string d = "characterizations disagree: combinatorial verdict ";
        d += rep.verdict.selfdual ? "selfdual" : "not selfdual";
        d += ", torus route: knap=";
        d += rep.verdict.knap.is_knap ? "yes" : "no";
        d += ", dim X^(k) = " + std::to_string(rep.dual.computed_dim) +
             " vs dim X = " + std::to_string(rep.verdict.dim);
        rep.diagnostics.push_back(std::move(d));
    }
    return rep;
}

bool binomial_identity_holds(const IntVec& witness,
                             const std::vector<IntVec>& bs, const IntVec& v,
                             const IntVec& lambda) {
    if (witness.size() != v.size() || bs.size() != v.size())
        throw dimension_mismatch("binomial_identity_holds: length mismatch");
    Int lhs = 1, rhs = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!v[i].fits_slong_p())
            throw error("binomial_identity_holds: exponent too large");
        const long e = v[i].get_si();
        const Int bl = dot(bs[i], lambda);
        if (e > 0) {
            lhs *= int_pow(bl, static_cast<unsigned long>(e));
            rhs *= int_pow(witness[i], static_cast<unsigned long>(e));
        } else {
            lhs *= int_pow(witness[i], static_cast<unsigned long>(-e));
            rhs *= int_pow(bl, static_cast<unsigned long>(-e));
        }
    }
    return lhs == rhs;
}

bool binomial_membership_test(const LatticeConfiguration& cfg, int k,
                              const IntVec& witness, std::size_t trials,
                              std::uint64_t seed) {
    auto [norm, rec] = normalize_lattice(cfg);
    JetData jet = jet_matrix(norm, k);
    if (jet.c_k == 0) throw empty_kernel();
    const std::vector<IntVec> bs = b_vectors(jet);

    KernelBasis ka = right_kernel(homogenize(norm));
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        // Random integer kernel vector of A (small coefficients suffice).
        IntVec v(norm.size(), Int(0));
        for (const IntVec& basis_vec : ka.vectors) {
            long c = rng.range(-3, 3);
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] += c * basis_vec[i];
        }
        IntVec lambda = sample_lambda(rng, bs, jet.c_k);
        if (!binomial_identity_holds(witness, bs, v, lambda)) return false;
    }
    return true;
}

}  // namespace selfdual
