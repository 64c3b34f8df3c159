#include "confhom/stability.hpp"

#include <algorithm>
#include <cassert>

namespace confhom {

namespace {

void require_window(const BettiTable& table, const std::string& theorem) {
    if (table.max_k < 1) {
        throw window_error(theorem + ": window must cover at least k=0 and k=1");
    }
}

void require_even_cohomology(const ManifoldData& m, bool assume) {
    const auto known = has_even_cohomology(m);
    if (known.has_value()) {
        if (!*known) {
            throw hypothesis_error("manifold '" + m.name +
                                   "' has odd-degree cohomology; even cohomology required");
        }
        return;
    }
    if (!assume) {
        throw hypothesis_error(
            "manifold '" + m.name +
            "' is non-orientable: even cohomology is not decidable from compactly "
            "supported data, assert it with --assume-even-cohomology");
    }
}

void require_improved_hypotheses(const ManifoldData& m, bool assume) {
    if (m.dim % 2 != 0 || m.dim < 6) {
        throw hypothesis_error("manifold '" + m.name + "' has dimension " +
                               std::to_string(m.dim) +
                               "; the improved range requires even dimension >= 6");
    }
    require_even_cohomology(m, assume);
}

}  // namespace

RangeReport verify_rw_range(const BettiTable& table) {
    require_window(table, "rw");
    RangeReport report{"rw", table.manifold, table.max_k, table.max_degree, {}};
    for (int k = 0; k + 1 <= table.max_k; ++k) {
        for (int i = 0; i <= std::min(k, table.max_degree); ++i) {
            const long left = table.at(k, i);
            const long right = table.at(k + 1, i);
            if (left != right) report.violations.push_back({k, i, left, right});
        }
    }
    return report;
}

RangeReport verify_improved_ranges(const BettiTable& table, const ManifoldData& m,
                                   bool assume_even_cohomology) {
    require_improved_hypotheses(m, assume_even_cohomology);
    require_window(table, "improved");
    RangeReport report{"improved", table.manifold, table.max_k, table.max_degree, {}};
    for (int k = 0; k + 1 <= table.max_k; ++k) {
        for (int i = 0; i <= table.max_degree; ++i) {
            const int bound = (i % 2 == 0) ? 2 * k : 2 * k + m.dim - 5;
            if (i > bound) continue;
            const long left = table.at(k, i);
            const long right = table.at(k + 1, i);
            if (left != right) report.violations.push_back({k, i, left, right});
        }
    }
    return report;
}

RangeReport verify_optimality(const BettiTable& table, const ManifoldData& m,
                              bool assume_even_cohomology) {
    require_improved_hypotheses(m, assume_even_cohomology);
    if (!m.open) {
        throw hypothesis_error("manifold '" + m.name + "' is closed; optimality requires open");
    }
    const int n = m.hc_twisted_rank(m.dim - 2);  // dim U^2 = dim H^2(M;Q)
    if (n < 1) {
        throw hypothesis_error("manifold '" + m.name +
                               "' has n = dim H^2 = 0; optimality requires n >= 1");
    }
    require_window(table, "optimal");
    RangeReport report{"optimal", table.manifold, table.max_k, table.max_degree, {}};
    bool checked_any = false;
    for (int k = 1; k + 1 <= table.max_k; ++k) {
        const int i = 2 * k + 2;
        if (i > table.max_degree) break;
        checked_any = true;
        const Int required = Int(table.at(k, i)) + witness_count(n, k);
        if (Int(table.at(k + 1, i)) < required) {
            report.violations.push_back(
                {k, i, table.at(k + 1, i), static_cast<long long>(required)});
        }
    }
    if (!checked_any) {
        throw window_error("optimal: window reaches no degree of the form 2k+2 with k >= 1");
    }
    return report;
}

std::vector<long> odd_dim_betti(const ManifoldData& m, int k, int max_degree) {
    if (m.dim % 2 == 0) {
        throw hypothesis_error("manifold '" + m.name +
                               "' has even dimension; the closed form applies to odd dimension");
    }
    if (!m.ordinary_betti) {
        throw hypothesis_error("manifold '" + m.name +
                               "' lacks ordinary Betti numbers (betti field) required by the "
                               "closed form");
    }
    // Sym^k of the graded vector space H_*(M;Q): polynomial on even degrees,
    // exterior on odd.
    std::vector<Generator> gens;
    for (const auto& [degree, rank] : *m.ordinary_betti) {
        for (int a = 0; a < rank; ++a) {
            const GenId id = static_cast<GenId>(gens.size());
            gens.push_back(Generator{id, degree, degree, a, Family::U});
        }
    }
    std::vector<long> row(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const Monomial& monomial : enumerate_basis(gens, k)) {
        if (monomial.degree <= max_degree) ++row[static_cast<std::size_t>(monomial.degree)];
    }
    return row;
}

BettiTable odd_betti_table(const ManifoldData& m, int max_k, int max_degree) {
    BettiTable table;
    table.manifold = m.name;
    table.max_k = max_k;
    table.max_degree = max_degree;
    for (int k = 0; k <= max_k; ++k) table.betti.push_back(odd_dim_betti(m, k, max_degree));
    return table;
}

RangeReport verify_eventual_constancy(const BettiTable& table, int i) {
    if (i > table.max_degree) {
        throw window_error("constancy: degree " + std::to_string(i) + " is outside the table");
    }
    // b_i(C_k) is constant once k >= i, except that b_1 first appears at k = 2,
    // so comparisons start at max(i, 2).
    const int start = std::max(i, 2);
    if (table.max_k < start + 1) {
        throw window_error("constancy: window must reach k = " + std::to_string(start + 1) +
                           " for degree " + std::to_string(i));
    }
    RangeReport report{"constancy", table.manifold, table.max_k, i, {}};
    for (int k = start; k + 1 <= table.max_k; ++k) {
        const long left = table.at(k, i);
        const long right = table.at(k + 1, i);
        if (left != right) report.violations.push_back({k, i, left, right});
    }
    return report;
}

RangeReport verify_constancy_window(const BettiTable& table, int i_max) {
    RangeReport report{"constancy", table.manifold, table.max_k, i_max, {}};
    for (int i = 0; i <= i_max; ++i) {
        const RangeReport one = verify_eventual_constancy(table, i);
        report.violations.insert(report.violations.end(), one.violations.begin(),
                                 one.violations.end());
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const RangeViolation& a, const RangeViolation& b) {
                  return std::pair(a.k, a.i) < std::pair(b.k, b.i);
              });
    return report;
}

WitnessSet witness_set(const GeneratorSet& gens, int k) {
    std::vector<Generator> degree_two;
    for (const Generator& g : gens.U()) {
        if (g.degree == 2) degree_two.push_back(g);
    }
    WitnessSet out;
    out.k = k;
    out.n = static_cast<int>(degree_two.size());
    out.monomials = enumerate_basis(degree_two, k + 1);
    assert(Int(out.monomials.size()) == witness_count(out.n, k));
    return out;
}

Int witness_count(int n, int k) {
    // C(n + k, k + 1)
    if (n < 1) return 0;
    Int result = 1;
    for (int t = 1; t <= k + 1; ++t) {
        result = result * (n + k - (t - 1)) / t;
    }
    return result;
}

}  // namespace confhom
