#include "confhom/graded_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace confhom {

int koszul_sign(std::span<const std::size_t> permutation, std::span<const int> degrees) {
    assert(permutation.size() == degrees.size());
    int exponent = 0;
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        for (std::size_t j = i + 1; j < permutation.size(); ++j) {
            if (permutation[i] > permutation[j]) {
                exponent += degrees[permutation[i]] * degrees[permutation[j]];
            }
        }
    }
    return (exponent & 1) ? -1 : +1;
}

SignedMonomial normalize_monomial(std::span<const GenId> factors,
                                  std::span<const Generator> table) {
    // Insertion sort, one adjacent transposition at a time; each swap of
    // distinct factors x, y contributes (-1)^{deg x * deg y}.
    std::vector<GenId> ids(factors.begin(), factors.end());
    int exponent = 0;
    for (std::size_t i = 1; i < ids.size(); ++i) {
        for (std::size_t j = i; j > 0 && ids[j] < ids[j - 1]; --j) {
            exponent += table[ids[j]].degree * table[ids[j - 1]].degree;
            std::swap(ids[j], ids[j - 1]);
        }
    }
    for (std::size_t i = 1; i < ids.size(); ++i) {
        if (ids[i] == ids[i - 1] && table[ids[i]].odd()) {
            return SignedMonomial::zero();
        }
    }
    return SignedMonomial{(exponent & 1) ? Rational(-1) : Rational(1),
                          make_monomial(std::move(ids), table)};
}

Monomial make_monomial(std::vector<GenId> sorted_ids, std::span<const Generator> table) {
    Monomial m;
    m.factors = std::move(sorted_ids);
    for (GenId id : m.factors) {
        const Generator& g = table[id];
        assert(g.id == id);
        m.degree += g.degree;
        m.length += g.length();
        m.weight += g.weight();
    }
    assert(std::is_sorted(m.factors.begin(), m.factors.end()));
    return m;
}

bool monomial_valid(const Monomial& m, std::span<const Generator> table) {
    if (!std::is_sorted(m.factors.begin(), m.factors.end())) return false;
    int degree = 0, length = 0, weight = 0;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        if (m.factors[i] >= table.size()) return false;
        const Generator& g = table[m.factors[i]];
        if (i > 0 && m.factors[i] == m.factors[i - 1] && g.odd()) return false;
        degree += g.degree;
        length += g.length();
        weight += g.weight();
    }
    return degree == m.degree && length == m.length && weight == m.weight;
}

namespace {

// Multiplicity vectors are emitted with the multiplicity of the earliest
// generator descending, which yields lexicographically ascending id sequences.
template <typename Visit>
void walk_multisets(std::span<const Generator> gens, int remaining, std::size_t from,
                    int degree_so_far, std::vector<GenId>& prefix,
                    std::optional<int> degree_filter, const std::vector<int>& max_deg_suffix,
                    Visit&& visit) {
    if (remaining == 0) {
        if (!degree_filter || degree_so_far == *degree_filter) visit(prefix);
        return;
    }
    if (from == gens.size()) return;
    if (degree_filter) {
        if (degree_so_far > *degree_filter) return;
        if (degree_so_far + remaining * max_deg_suffix[from] < *degree_filter) return;
    }
    const Generator& g = gens[from];
    const int max_mult = g.odd() ? std::min(remaining, 1) : remaining;
    for (int mult = max_mult; mult >= 0; --mult) {
        prefix.insert(prefix.end(), static_cast<std::size_t>(mult), g.id);
        walk_multisets(gens, remaining - mult, from + 1, degree_so_far + mult * g.degree,
                       prefix, degree_filter, max_deg_suffix, visit);
        prefix.resize(prefix.size() - static_cast<std::size_t>(mult));
    }
}

std::vector<int> suffix_degree_bounds(std::span<const Generator> gens) {
    std::vector<int> bound(gens.size() + 1, 0);
    for (std::size_t i = gens.size(); i-- > 0;) {
        bound[i] = std::max(bound[i + 1], gens[i].degree);
    }
    return bound;
}

}  // namespace

std::vector<Monomial> enumerate_basis(std::span<const Generator> generators,
                                      int factor_count,
                                      std::optional<int> degree_filter) {
    assert(factor_count >= 0);
    assert(std::is_sorted(generators.begin(), generators.end(),
                          [](const Generator& a, const Generator& b) { return a.id < b.id; }));
    std::vector<Monomial> out;
    std::vector<GenId> prefix;
    const auto bounds = suffix_degree_bounds(generators);
    std::size_t max_table = 0;
    for (const Generator& g : generators) max_table = std::max<std::size_t>(max_table, g.id + 1);
    std::vector<Generator> table(max_table);
    for (const Generator& g : generators) table[g.id] = g;
    walk_multisets(generators, factor_count, 0, 0, prefix, degree_filter, bounds,
                   [&](const std::vector<GenId>& ids) {
                       out.push_back(make_monomial(ids, table));
                   });
    return out;
}

long long count_basis(std::span<const Generator> generators, int factor_count,
                      std::optional<int> degree_filter) {
    // DP over generators; key = (factors used, degree accumulated). Counts
    // saturate well below the long long range so cap comparisons stay sound.
    constexpr long long kSaturate = 1LL << 62;
    std::map<std::pair<int, int>, long long> state;
    state[{0, 0}] = 1;
    for (const Generator& g : generators) {
        std::map<std::pair<int, int>, long long> next;
        const int max_mult_gen = g.odd() ? 1 : factor_count;
        for (const auto& [key, count] : state) {
            const auto [used, deg] = key;
            for (int mult = 0; mult <= max_mult_gen && used + mult <= factor_count; ++mult) {
                long long& slot = next[{used + mult, deg + mult * g.degree}];
                slot = std::min(kSaturate, slot + count);
            }
        }
        state = std::move(next);
    }
    long long total = 0;
    for (const auto& [key, count] : state) {
        if (key.first != factor_count) continue;
        if (degree_filter && key.second != *degree_filter) continue;
        total = std::min(kSaturate, total + count);
    }
    return total;
}

}  // namespace confhom
