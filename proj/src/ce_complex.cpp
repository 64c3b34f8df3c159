#include "confhom/ce_complex.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace confhom {

namespace {

std::string subscripted(const char* letter, const Generator& g, bool unique_in_degree) {
    std::ostringstream os;
    os << letter << g.degree;
    if (!unique_in_degree) os << "_" << g.basis_index;
    return os.str();
}

}  // namespace

std::string GeneratorSet::name(GenId id) const {
    const Generator& g = table[id];
    const auto& by_source = g.family == Family::U ? u_by_source : v_by_source;
    const bool unique = !by_source.count({g.source_degree, g.basis_index + 1}) &&
                        g.basis_index == 0;
    return subscripted(g.family == Family::U ? "u" : "v", g, unique);
}

std::string GeneratorSet::name(const Monomial& monomial) const {
    if (monomial.factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < monomial.factors.size();) {
        std::size_t j = i;
        while (j < monomial.factors.size() && monomial.factors[j] == monomial.factors[i]) ++j;
        if (i > 0) os << "*";
        os << name(monomial.factors[i]);
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

GeneratorSet build_generators(const ManifoldData& m) {
    if (m.dim % 2 != 0) {
        throw hypothesis_error("manifold '" + m.name +
                               "' has odd dimension; the bigraded complex requires even "
                               "dimension (use the closed-form odd path)");
    }
    if (m.hc_twisted_rank(m.dim) != 1) {
        throw hypothesis_error("manifold '" + m.name +
                               "' needs a one-dimensional top twisted group (is it connected?)");
    }
    GeneratorSet gens;
    gens.dim = m.dim;
    for (int p = m.dim; p >= 0; --p) {
        for (int a = 0; a < m.hc_twisted_rank(p); ++a) {
            const GenId id = static_cast<GenId>(gens.table.size());
            gens.table.push_back(Generator{id, m.dim - p, p, a, Family::U});
            gens.u_by_source[{p, a}] = id;
        }
    }
    gens.u_count = gens.table.size();
    for (int p = m.dim; p >= 0; --p) {
        for (int b = 0; b < m.hc_rank(p); ++b) {
            const GenId id = static_cast<GenId>(gens.table.size());
            gens.table.push_back(Generator{id, 2 * m.dim - 1 - p, p, b, Family::V});
            gens.v_by_source[{p, b}] = id;
        }
    }
    assert(gens.table.front().degree == 0 && gens.table.front().family == Family::U);
    return gens;
}

std::vector<std::pair<GenId, Rational>> pair_contraction(const GeneratorSet& gens,
                                                         const ManifoldData& m, GenId a,
                                                         GenId b) {
    const Generator& ga = gens.table[a];
    const Generator& gb = gens.table[b];
    assert(ga.family == Family::U && gb.family == Family::U);
    const auto product =
        m.cup.lookup(ga.source_degree, ga.basis_index, gb.source_degree, gb.basis_index);
    if (product.empty()) return {};
    const bool negate = (((m.dim - 1) * gb.source_degree) & 1) != 0;
    const int target_degree = ga.source_degree + gb.source_degree;
    std::vector<std::pair<GenId, Rational>> out;
    out.reserve(product.size());
    for (const auto& [index, coefficient] : product) {
        out.emplace_back(gens.v_id(target_degree, index),
                         negate ? Rational(-coefficient) : coefficient);
    }
    return out;
}

long long count_theta_slice(const GeneratorSet& gens, int k, int degree, int weight) {
    assert(weight >= 0 && 2 * weight <= k);
    constexpr long long kSaturate = 1LL << 62;
    long long total = 0;
    for (int u_degree = 0; u_degree <= degree; ++u_degree) {
        const long long u = count_basis(gens.U(), k - 2 * weight, u_degree);
        if (u == 0) continue;
        const long long v = count_basis(gens.V(), weight, degree - u_degree);
        if (v == 0) continue;
        if (u > kSaturate / v) return kSaturate;
        total = std::min(kSaturate, total + u * v);
    }
    return total;
}

ThetaSlice build_theta_slice(const GeneratorSet& gens, int k, int degree, int weight,
                             long long cap) {
    assert(weight >= 0 && 2 * weight <= k);
    if (cap > 0) {
        const long long count = count_theta_slice(gens, k, degree, weight);
        if (count > cap) {
            std::ostringstream os;
            os << "window too large: slice (k=" << k << ", i=" << degree << ", w=" << weight
               << ") has " << count << " monomials, cap " << cap;
            throw cap_exceeded(os.str());
        }
    }
    ThetaSlice slice;
    slice.k = k;
    slice.degree = degree;
    slice.weight = weight;
    // U-ids all precede V-ids, so concatenation in (U part, V part) lex order
    // enumerates the whole slice in lex order on the full factor list.
    for (const Monomial& u_part : enumerate_basis(gens.U(), k - 2 * weight)) {
        const int v_degree = degree - u_part.degree;
        if (v_degree < 0) continue;
        for (const Monomial& v_part : enumerate_basis(gens.V(), weight, v_degree)) {
            std::vector<GenId> ids = u_part.factors;
            ids.insert(ids.end(), v_part.factors.begin(), v_part.factors.end());
            slice.basis.push_back(make_monomial(std::move(ids), gens.table));
        }
    }
    for (std::size_t c = 0; c < slice.basis.size(); ++c) slice.index[slice.basis[c]] = c;
    return slice;
}

SparseExactMatrix differential_entries(const GeneratorSet& gens, const ManifoldData& m,
                                       const ThetaSlice& source, const ThetaSlice& target) {
    assert(target.k == source.k && target.degree == source.degree - 1 &&
           target.weight == source.weight + 1);
    SparseExactMatrix out(static_cast<int>(target.basis.size()),
                          static_cast<int>(source.basis.size()));
    std::vector<int> prefix_degree;
    std::vector<GenId> rest;
    for (std::size_t c = 0; c < source.basis.size(); ++c) {
        const auto& factors = source.basis[c].factors;
        // U-factors form a prefix of the sorted factor list.
        std::size_t nu = 0;
        while (nu < factors.size() && gens.table[factors[nu]].family == Family::U) ++nu;
        prefix_degree.assign(factors.size() + 1, 0);
        for (std::size_t t = 0; t < factors.size(); ++t) {
            prefix_degree[t + 1] = prefix_degree[t] + gens.table[factors[t]].degree;
        }
        for (std::size_t p = 0; p < nu; ++p) {
            const int deg_p = gens.table[factors[p]].degree;
            for (std::size_t q = p + 1; q < nu; ++q) {
                const auto contraction = pair_contraction(gens, m, factors[p], factors[q]);
                if (contraction.empty()) continue;
                const int deg_q = gens.table[factors[q]].degree;
                // Koszul cost of extracting the ordered pair to the front.
                const int exponent =
                    deg_p * prefix_degree[p] + deg_q * (prefix_degree[q] - deg_p);
                const Rational sign = (exponent & 1) ? -1 : 1;
                rest.clear();
                for (std::size_t t = 0; t < factors.size(); ++t) {
                    if (t != p && t != q) rest.push_back(factors[t]);
                }
                for (const auto& [v_gen, coefficient] : contraction) {
                    std::vector<GenId> ids;
                    ids.reserve(rest.size() + 1);
                    ids.push_back(v_gen);
                    ids.insert(ids.end(), rest.begin(), rest.end());
                    const SignedMonomial term = normalize_monomial(ids, gens.table);
                    if (term.is_zero()) continue;
                    const auto row = target.index.find(term.monomial);
                    assert(row != target.index.end());
                    out.add(static_cast<int>(row->second), static_cast<int>(c),
                            sign * coefficient * term.coefficient);
                }
            }
        }
    }
    return out;
}

DifferentialMatrix assemble_differential(const GeneratorSet& gens, const ManifoldData& m, int k,
                                         int degree, int weight, long long cap) {
    DifferentialMatrix out;
    out.source = build_theta_slice(gens, k, degree, weight, cap);
    out.target = build_theta_slice(gens, k, degree - 1, weight + 1, cap);
    out.entries = differential_entries(gens, m, out.source, out.target);
    return out;
}

std::optional<Monomial> d2_check(const GeneratorSet& gens, const ManifoldData& m, int k,
                                 int degree_max, long long cap) {
    for (int weight = 0; 2 * (weight + 2) <= k; ++weight) {
        for (int degree = 0; degree <= degree_max; ++degree) {
            const auto first = assemble_differential(gens, m, k, degree, weight, cap);
            if (first.source.basis.empty()) continue;
            const auto second =
                differential_entries(gens, m, first.target,
                                     build_theta_slice(gens, k, degree - 2, weight + 2, cap));
            const auto composite = multiply(second, first.entries);
            if (composite.is_zero()) continue;
            int column = composite.n_cols();
            for (const auto& [pos, value] : composite.entries()) {
                column = std::min(column, pos.second);
            }
            return first.source.basis[static_cast<std::size_t>(column)];
        }
    }
    return std::nullopt;
}

}  // namespace confhom
