#pragma once

#include "selfdual/classify.hpp"

namespace selfdual {

struct sampling_failed : error {
    explicit sampling_failed(const std::string& what) : error(what) {}
};

// Probes the dimension of the k-th dual variety by exact Jacobian ranks of
// its rational parameterization
//   (lambda, t) -> ( <b_i, lambda> t^{-a_i} )_i
// cleared of denominators, at `trials` random integer points. The result is
// a certified lower bound for dim X^(k), equal to it with high probability,
// and never exceeds the expected dimension n + c_k - 1. Throws empty_kernel
// when c_k = 0. Non-knap input is fine: the parameterization then lives in
// the coordinate subspace where the J-coordinates vanish.
DualDimReport dual_dimension(const LatticeConfiguration& cfg, int k,
                             std::size_t trials, std::uint64_t seed);

struct CrosscheckReport {
    SelfdualVerdict verdict;
    DualDimReport dual;
    // The combinatorial verdict must match "knap and dim X^(k) = dim X".
    bool agree = false;
    std::vector<std::string> diagnostics;
};

// Runs both characterizations of k-selfduality and checks they agree; a
// disagreement is reported with all certificates attached.
CrosscheckReport crosscheck_characterizations(const LatticeConfiguration& cfg,
                                              int k, std::size_t trials,
                                              std::uint64_t seed);

// Exact check of the binomial orbit equations at the torus witness: for v
// in Ker A and any lambda,
//   p^{v-} prod_{v_i>0} <b_i,lambda>^{v_i} = p^{v+} prod_{v_i<0} <b_i,lambda>^{-v_i}.
bool binomial_identity_holds(const IntVec& witness,
                             const std::vector<IntVec>& bs, const IntVec& v,
                             const IntVec& lambda);

// Samples random kernel vectors v of A and random lambda, and verifies the
// identity above for each; true when every sample holds. Requires a
// selfdual verdict's torus witness.
bool binomial_membership_test(const LatticeConfiguration& cfg, int k,
                              const IntVec& witness, std::size_t trials,
                              std::uint64_t seed);

}  // namespace selfdual
