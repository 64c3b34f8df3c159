#ifndef CONFHOM_CE_COMPLEX_HPP
#define CONFHOM_CE_COMPLEX_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "confhom/errors.hpp"
#include "confhom/graded_algebra.hpp"
#include "confhom/manifold.hpp"
#include "confhom/sparse_matrix.hpp"

namespace confhom {

// Generators of U (desuspended twisted compactly supported classes, degree
// d - p) followed by generators of V (degree 2d - 1 - p). Ids are assigned in
// canonical order: U before V, source degree descending, basis index
// ascending. In particular id 0 is always u_0, the top twisted class.
struct GeneratorSet {
    int dim = 0;
    std::size_t u_count = 0;
    std::vector<Generator> table;
    std::map<std::pair<int, int>, GenId> u_by_source;
    std::map<std::pair<int, int>, GenId> v_by_source;

    std::span<const Generator> U() const { return {table.data(), u_count}; }
    std::span<const Generator> V() const {
        return {table.data() + u_count, table.size() - u_count};
    }
    GenId u_id(int source_degree, int basis_index) const {
        return u_by_source.at({source_degree, basis_index});
    }
    GenId v_id(int source_degree, int basis_index) const {
        return v_by_source.at({source_degree, basis_index});
    }
    std::string name(GenId id) const;
    std::string name(const Monomial& monomial) const;
};

// Requires even dimension and a one-dimensional top twisted group (any
// connected manifold has one); throws hypothesis_error otherwise.
GeneratorSet build_generators(const ManifoldData& m);

// Contraction of the ordered U-pair (a, b): the cup product of the underlying
// classes scaled by (-1)^((d-1) * source_degree(b)), expressed in V.
std::vector<std::pair<GenId, Rational>> pair_contraction(const GeneratorSet& gens,
                                                         const ManifoldData& m, GenId a,
                                                         GenId b);

// Basis of one bigraded piece: monomials of total degree `degree` with
// k - 2*weight U-factors and `weight` V-factors, in lexicographic order.
struct ThetaSlice {
    int k = 0;
    int degree = 0;
    int weight = 0;
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;
};

long long count_theta_slice(const GeneratorSet& gens, int k, int degree, int weight);

// cap > 0 bounds the basis size; overflow throws cap_exceeded.
ThetaSlice build_theta_slice(const GeneratorSet& gens, int k, int degree, int weight,
                             long long cap = 0);

// Matrix of the differential from `source` (columns) to the slice one degree
// down and one weight up (rows).
SparseExactMatrix differential_entries(const GeneratorSet& gens, const ManifoldData& m,
                                       const ThetaSlice& source, const ThetaSlice& target);

struct DifferentialMatrix {
    ThetaSlice source;
    ThetaSlice target;
    SparseExactMatrix entries;
};

DifferentialMatrix assemble_differential(const GeneratorSet& gens, const ManifoldData& m, int k,
                                         int degree, int weight, long long cap = 0);

// Composes consecutive differentials over every bidegree with degree bounded
// by degree_max; returns the first monomial whose image fails to die, or
// nullopt when the square of the differential vanishes everywhere.
std::optional<Monomial> d2_check(const GeneratorSet& gens, const ManifoldData& m, int k,
                                 int degree_max, long long cap = 0);

}  // namespace confhom

#endif
