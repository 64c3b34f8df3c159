#ifndef CONFHOM_STABILITY_HPP
#define CONFHOM_STABILITY_HPP

#include <string>
#include <vector>

#include "confhom/homology.hpp"

namespace confhom {

// One failed dimension comparison. For isomorphism-range checks left/right
// are dim H_i(C_k) and dim H_i(C_{k+1}); for the optimality check left is
// dim H_{2k+2}(C_{k+1}) and right the required lower bound.
struct RangeViolation {
    int k = 0;
    int i = 0;
    long long left = 0;
    long long right = 0;

    friend bool operator==(const RangeViolation&, const RangeViolation&) = default;
};

struct RangeReport {
    std::string theorem;
    std::string manifold;
    int k_max = 0;
    int i_max = 0;
    std::vector<RangeViolation> violations;

    bool passed() const { return violations.empty(); }
};

// Stability in the classical range: dim H_i(C_{k+1}) = dim H_i(C_k) for
// i <= k, over every pair the table covers.
RangeReport verify_rw_range(const BettiTable& table);

// Improved range for even-cohomology manifolds of even dimension >= 6:
// equality for even i <= 2k and odd i <= 2k + d - 5. Non-orientable input
// cannot be checked for even cohomology from compactly supported data alone;
// the caller asserts it via assume_even_cohomology.
RangeReport verify_improved_ranges(const BettiTable& table, const ManifoldData& m,
                                   bool assume_even_cohomology = false);

// Optimality of the even bound: strict growth at i = 2k + 2 with increment at
// least C(n + k, k + 1), n = dim U^2. Requires an open manifold with n >= 1
// on top of the improved-range hypotheses.
RangeReport verify_optimality(const BettiTable& table, const ManifoldData& m,
                              bool assume_even_cohomology = false);

// Odd-dimensional closed form: H_*(C_k(M)) = Sym^k(H_*(M)). Returns the row
// of dimensions for degrees 0..max_degree; needs ordinary_betti.
std::vector<long> odd_dim_betti(const ManifoldData& m, int k, int max_degree);
BettiTable odd_betti_table(const ManifoldData& m, int max_k, int max_degree);

// k -> dim H_i(C_k) is constant once k >= max(i, 2); checks consecutive pairs
// from there to the end of the table, which must reach k = max(i, 2) + 1.
RangeReport verify_eventual_constancy(const BettiTable& table, int i);

// Aggregates verify_eventual_constancy over all i <= i_max.
RangeReport verify_constancy_window(const BettiTable& table, int i_max);

// Basis of the span of length-(k+1) products of degree-2 U-generators; these
// weight-0 cycles can never bound (nothing has weight -1), which drives the
// optimality increment.
struct WitnessSet {
    int k = 0;
    int n = 0;
    std::vector<Monomial> monomials;
};

WitnessSet witness_set(const GeneratorSet& gens, int k);

// C(n + k, k + 1), the multiset count of the witness basis.
Int witness_count(int n, int k);

}  // namespace confhom

#endif
