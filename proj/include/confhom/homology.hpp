#ifndef CONFHOM_HOMOLOGY_HPP
#define CONFHOM_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "confhom/ce_complex.hpp"

namespace confhom {

inline constexpr long long kDefaultCap = 2'000'000;

// betti[k][i] = dim H_i(C_k(M); Q) for 0 <= k <= max_k, 0 <= i <= max_degree.
struct BettiTable {
    std::string manifold;
    int max_k = 0;
    int max_degree = 0;
    std::vector<std::vector<long>> betti;

    long at(int k, int i) const { return betti[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// One finite subcomplex: the slices of Θ_k with constant s = degree + weight,
// linked by the differential (degree down one, weight up one).
struct SubcomplexResult {
    int k = 0;
    int s = 0;
    std::vector<long> dims;      // by weight, 0..floor(k/2)
    std::vector<int> ranks;      // rank of the map out of weight w
    std::vector<long> homology;  // contribution to b_{s-w}(C_k) at weight w
};

SubcomplexResult process_subcomplex(const GeneratorSet& gens, const ManifoldData& m, int k,
                                    int s, long long cap = kDefaultCap);

// jobs = 0 uses the runtime default thread count. Both variants return
// identical tables; the serial one is the plain-loop reference.
BettiTable betti_table(const ManifoldData& m, int max_k, int max_degree,
                       long long cap = kDefaultCap, int jobs = 0);
BettiTable betti_table_serial(const ManifoldData& m, int max_k, int max_degree,
                              long long cap = kDefaultCap);

// Single row of the table: betti_numbers(m, k, d)[i] = dim H_i(C_k(M); Q).
std::vector<long> betti_numbers(const ManifoldData& m, int k, int max_degree,
                                long long cap = kDefaultCap);

// All monomials of Θ_k in one degree, weight ascending then lex within weight.
std::vector<Monomial> degree_basis(const GeneratorSet& gens, int k, int degree,
                                   long long cap = 0);

// The full differential out of one degree, assembled over all weights, with
// rows over degree_basis(k, degree-1) and columns over degree_basis(k, degree).
SparseExactMatrix full_differential(const GeneratorSet& gens, const ManifoldData& m, int k,
                                    int degree, long long cap = 0);

// Multiplication by u_0, mapping Θ_k degree i into Θ_{k+1} degree i over the
// same degree_basis orders. Defined for open manifolds only, where it is an
// injective chain map; throws hypothesis_error otherwise.
SparseExactMatrix stabilization_matrix(const GeneratorSet& gens, const ManifoldData& m, int k,
                                       int degree, long long cap = 0);

}  // namespace confhom

#endif
