#include "confhom/homology.hpp"

#include <algorithm>
#include <cassert>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace confhom {

SubcomplexResult process_subcomplex(const GeneratorSet& gens, const ManifoldData& m, int k,
                                    int s, long long cap) {
    const int w_max = k / 2;
    SubcomplexResult out;
    out.k = k;
    out.s = s;
    out.dims.assign(static_cast<std::size_t>(w_max) + 1, 0);
    out.ranks.assign(static_cast<std::size_t>(w_max) + 1, 0);
    out.homology.assign(static_cast<std::size_t>(w_max) + 1, 0);

    std::vector<ThetaSlice> slices;
    slices.reserve(static_cast<std::size_t>(w_max) + 1);
    for (int w = 0; w <= w_max; ++w) {
        slices.push_back(build_theta_slice(gens, k, s - w, w, cap));
        out.dims[static_cast<std::size_t>(w)] = static_cast<long>(slices.back().basis.size());
    }
    for (int w = 0; w < w_max; ++w) {
        const auto entries = differential_entries(gens, m, slices[static_cast<std::size_t>(w)],
                                                  slices[static_cast<std::size_t>(w) + 1]);
        out.ranks[static_cast<std::size_t>(w)] = exact_rank(entries);
    }
    for (int w = 0; w <= w_max; ++w) {
        const int rank_in = w > 0 ? out.ranks[static_cast<std::size_t>(w) - 1] : 0;
        out.homology[static_cast<std::size_t>(w)] =
            out.dims[static_cast<std::size_t>(w)] - out.ranks[static_cast<std::size_t>(w)] -
            rank_in;
        assert(out.homology[static_cast<std::size_t>(w)] >= 0);
    }
    return out;
}

namespace {

void accumulate(BettiTable& table, const SubcomplexResult& piece) {
    for (int w = 0; w < static_cast<int>(piece.homology.size()); ++w) {
        const int degree = piece.s - w;
        if (degree < 0 || degree > table.max_degree) continue;
        table.betti[static_cast<std::size_t>(piece.k)][static_cast<std::size_t>(degree)] +=
            piece.homology[static_cast<std::size_t>(w)];
    }
}

BettiTable empty_table(const ManifoldData& m, int max_k, int max_degree) {
    BettiTable table;
    table.manifold = m.name;
    table.max_k = max_k;
    table.max_degree = max_degree;
    table.betti.assign(static_cast<std::size_t>(max_k) + 1,
                       std::vector<long>(static_cast<std::size_t>(max_degree) + 1, 0));
    return table;
}

struct Task {
    int k;
    int s;
};

std::vector<Task> make_tasks(int max_k, int max_degree) {
    // Degrees above max_degree at weight w still matter: they sit in the same
    // subcomplex as contributing slices, so s runs up to max_degree + floor(k/2).
    std::vector<Task> tasks;
    for (int k = 0; k <= max_k; ++k) {
        for (int s = 0; s <= max_degree + k / 2; ++s) tasks.push_back(Task{k, s});
    }
    return tasks;
}

}  // namespace

BettiTable betti_table(const ManifoldData& m, int max_k, int max_degree, long long cap,
                       int jobs) {
    const GeneratorSet gens = build_generators(m);
    BettiTable table = empty_table(m, max_k, max_degree);
    const std::vector<Task> tasks = make_tasks(max_k, max_degree);
    std::vector<SubcomplexResult> results(tasks.size());
    std::vector<std::exception_ptr> failures(tasks.size());

#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tasks.size()); ++t) {
        try {
            results[static_cast<std::size_t>(t)] =
                process_subcomplex(gens, m, tasks[static_cast<std::size_t>(t)].k,
                                   tasks[static_cast<std::size_t>(t)].s, cap);
        } catch (...) {
            failures[static_cast<std::size_t>(t)] = std::current_exception();
        }
    }
#else
    (void)jobs;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        try {
            results[t] = process_subcomplex(gens, m, tasks[t].k, tasks[t].s, cap);
        } catch (...) {
            failures[t] = std::current_exception();
        }
    }
#endif

    // First failure in task order, so errors are deterministic too.
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }
    for (const auto& piece : results) accumulate(table, piece);
    return table;
}

BettiTable betti_table_serial(const ManifoldData& m, int max_k, int max_degree, long long cap) {
    const GeneratorSet gens = build_generators(m);
    BettiTable table = empty_table(m, max_k, max_degree);
    for (const Task& task : make_tasks(max_k, max_degree)) {
        accumulate(table, process_subcomplex(gens, m, task.k, task.s, cap));
    }
    return table;
}

std::vector<long> betti_numbers(const ManifoldData& m, int k, int max_degree, long long cap) {
    const GeneratorSet gens = build_generators(m);
    BettiTable table = empty_table(m, k, max_degree);
    for (int s = 0; s <= max_degree + k / 2; ++s) {
        accumulate(table, process_subcomplex(gens, m, k, s, cap));
    }
    return table.betti.back();
}

std::vector<Monomial> degree_basis(const GeneratorSet& gens, int k, int degree, long long cap) {
    std::vector<Monomial> out;
    for (int w = 0; 2 * w <= k; ++w) {
        const ThetaSlice slice = build_theta_slice(gens, k, degree, w, cap);
        out.insert(out.end(), slice.basis.begin(), slice.basis.end());
    }
    return out;
}

SparseExactMatrix full_differential(const GeneratorSet& gens, const ManifoldData& m, int k,
                                    int degree, long long cap) {
    std::vector<ThetaSlice> sources, targets;
    for (int w = 0; 2 * w <= k; ++w) {
        sources.push_back(build_theta_slice(gens, k, degree, w, cap));
        targets.push_back(build_theta_slice(gens, k, degree - 1, w, cap));
    }
    int n_rows = 0, n_cols = 0;
    std::vector<int> row_offset, col_offset;
    for (std::size_t w = 0; w < sources.size(); ++w) {
        col_offset.push_back(n_cols);
        row_offset.push_back(n_rows);
        n_cols += static_cast<int>(sources[w].basis.size());
        n_rows += static_cast<int>(targets[w].basis.size());
    }
    SparseExactMatrix out(n_rows, n_cols);
    for (std::size_t w = 0; w + 1 < sources.size(); ++w) {
        const auto block = differential_entries(gens, m, sources[w], targets[w + 1]);
        for (const auto& [pos, value] : block.entries()) {
            out.set(row_offset[w + 1] + pos.first, col_offset[w] + pos.second, value);
        }
    }
    return out;
}

SparseExactMatrix stabilization_matrix(const GeneratorSet& gens, const ManifoldData& m, int k,
                                       int degree, long long cap) {
    if (!m.open) {
        throw hypothesis_error("stabilization by u_0 requires an open manifold; '" + m.name +
                               "' is closed");
    }
    const std::vector<Monomial> source = degree_basis(gens, k, degree, cap);
    const std::vector<Monomial> target = degree_basis(gens, k + 1, degree, cap);
    std::map<Monomial, std::size_t> target_index;
    for (std::size_t r = 0; r < target.size(); ++r) target_index[target[r]] = r;
    SparseExactMatrix out(static_cast<int>(target.size()), static_cast<int>(source.size()));
    for (std::size_t c = 0; c < source.size(); ++c) {
        // u_0 has id 0 and degree 0: prepending keeps the factor list sorted
        // and costs no sign.
        std::vector<GenId> ids;
        ids.reserve(source[c].factors.size() + 1);
        ids.push_back(0);
        ids.insert(ids.end(), source[c].factors.begin(), source[c].factors.end());
        const auto row = target_index.find(make_monomial(std::move(ids), gens.table));
        assert(row != target_index.end());
        out.set(static_cast<int>(row->second), static_cast<int>(c), Rational(1));
    }
    return out;
}

}  // namespace confhom
