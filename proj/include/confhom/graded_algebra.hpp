#ifndef CONFHOM_GRADED_ALGEBRA_HPP
#define CONFHOM_GRADED_ALGEBRA_HPP

#include "confhom/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace confhom {

using GenId = std::uint32_t;

enum class Family : std::uint8_t { U, V };

// A generator of the free graded-commutative algebra. Generators are totally
// ordered by id; the id is assigned so that U-generators precede V-generators
// and, within a family, source_degree descends (which makes the algebra degree
// ascend). length/weight are determined by the family: U = (1, 0), V = (2, 1).
struct Generator {
    GenId id = 0;
    int degree = 0;         // algebra degree
    int source_degree = 0;  // compactly supported cohomological degree p
    int basis_index = 0;    // position within the (family, source_degree) block
    Family family = Family::U;

    bool odd() const { return (degree & 1) != 0; }
    int length() const { return family == Family::U ? 1 : 2; }
    int weight() const { return family == Family::U ? 0 : 1; }

    friend bool operator==(const Generator&, const Generator&) = default;
};

// Canonical monomial: factor ids sorted ascending, gradings cached.
// Invariant: no odd generator appears twice (the exterior part squares to zero).
struct Monomial {
    std::vector<GenId> factors;
    int degree = 0;
    int length = 0;
    int weight = 0;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors == b.factors;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.factors < b.factors;
    }
};

// A rational multiple of a canonical monomial. Zero is the distinguished value
// {coefficient 0, empty monomial}; nonzero values never carry coefficient 0.
struct SignedMonomial {
    Rational coefficient;
    Monomial monomial;

    static SignedMonomial zero() { return SignedMonomial{Rational(0), Monomial{}}; }
    bool is_zero() const { return coefficient == 0; }
};

// Sign of a graded permutation: perm[i] is the index in the original list of
// the element placed at position i. Each inverted pair contributes the product
// of the two degrees to the exponent.
int koszul_sign(std::span<const std::size_t> permutation, std::span<const int> degrees);

// Sorts the factor list into canonical order, accumulating the Koszul sign of
// the sorting permutation. Returns the explicit zero when an odd generator
// repeats. `table` maps id -> Generator (table[g.id] == g).
SignedMonomial normalize_monomial(std::span<const GenId> factors,
                                  std::span<const Generator> table);

// Builds the monomial over already-sorted ids, computing the cached gradings.
Monomial make_monomial(std::vector<GenId> sorted_ids, std::span<const Generator> table);

bool monomial_valid(const Monomial& m, std::span<const Generator> table);

// All monomials with exactly `factor_count` factors drawn from `generators`
// (repetition allowed on even generators only), optionally restricted to a
// total algebra degree. Output is duplicate-free, in lexicographic id order.
std::vector<Monomial> enumerate_basis(std::span<const Generator> generators,
                                      int factor_count,
                                      std::optional<int> degree_filter = std::nullopt);

// Number of monomials enumerate_basis would return, without materializing
// them; used for the basis-size cap.
long long count_basis(std::span<const Generator> generators, int factor_count,
                      std::optional<int> degree_filter = std::nullopt);

}  // namespace confhom

#endif
