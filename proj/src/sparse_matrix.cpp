#include "confhom/sparse_matrix.hpp"

#include <algorithm>
#include <cassert>

namespace confhom {

void SparseExactMatrix::add(int row, int col, const Rational& value) {
    assert(row >= 0 && row < n_rows_ && col >= 0 && col < n_cols_);
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace({row, col}, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

void SparseExactMatrix::set(int row, int col, const Rational& value) {
    assert(row >= 0 && row < n_rows_ && col >= 0 && col < n_cols_);
    if (value == 0) {
        entries_.erase({row, col});
    } else {
        entries_[{row, col}] = value;
    }
}

Rational SparseExactMatrix::at(int row, int col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseExactMatrix multiply(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    assert(a.n_cols() == b.n_rows());
    SparseExactMatrix out(a.n_rows(), b.n_cols());
    // Group b by row for the inner joins.
    std::map<int, std::vector<std::pair<int, Rational>>> b_rows;
    for (const auto& [rc, v] : b.entries()) {
        b_rows[rc.first].emplace_back(rc.second, v);
    }
    for (const auto& [rc, va] : a.entries()) {
        auto it = b_rows.find(rc.second);
        if (it == b_rows.end()) continue;
        for (const auto& [col, vb] : it->second) {
            out.add(rc.first, col, va * vb);
        }
    }
    return out;
}

namespace {

using Row = std::vector<std::pair<int, Int>>;  // (col, value), col ascending

// new_row = (pivot * row - factor * pivot_row) / divisor, all divisions exact.
Row bareiss_update(const Row& row, const Row& pivot_row, const Int& pivot,
                   const Int& factor, const Int& divisor) {
    Row out;
    out.reserve(row.size() + pivot_row.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot_row.size()) {
        int col;
        Int value;
        if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
            col = row[i].first;
            value = pivot * row[i].second;
            ++i;
        } else if (i == row.size() || pivot_row[j].first < row[i].first) {
            col = pivot_row[j].first;
            value = -factor * pivot_row[j].second;
            ++j;
        } else {
            col = row[i].first;
            value = pivot * row[i].second - factor * pivot_row[j].second;
            ++i;
            ++j;
        }
        if (value != 0) {
            assert(value % divisor == 0);
            out.emplace_back(col, value / divisor);
        }
    }
    return out;
}

const Int* row_entry(const Row& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

int exact_rank(const SparseExactMatrix& m) {
    // Clear denominators row by row; scaling rows does not change the rank.
    std::vector<Row> rows(static_cast<std::size_t>(m.n_rows()));
    for (const auto& [rc, v] : m.entries()) {
        rows[static_cast<std::size_t>(rc.first)].emplace_back(rc.second, Int(0));
    }
    {
        std::vector<Int> scale(static_cast<std::size_t>(m.n_rows()), Int(1));
        for (const auto& [rc, v] : m.entries()) {
            scale[static_cast<std::size_t>(rc.first)] =
                lcm(scale[static_cast<std::size_t>(rc.first)], denominator(v));
        }
        std::vector<std::size_t> fill(static_cast<std::size_t>(m.n_rows()), 0);
        for (const auto& [rc, v] : m.entries()) {
            auto r = static_cast<std::size_t>(rc.first);
            Rational scaled = v * scale[r];
            assert(denominator(scaled) == 1);
            rows[r][fill[r]++].second = numerator(scaled);
        }
    }
    std::erase_if(rows, [](const Row& r) { return r.empty(); });

    int rank = 0;
    Int previous_pivot(1);
    std::vector<bool> column_used(static_cast<std::size_t>(m.n_cols()), false);
    while (!rows.empty()) {
        // Sparsest remaining column, ties to the lowest index.
        std::vector<int> column_count(static_cast<std::size_t>(m.n_cols()), 0);
        for (const Row& r : rows) {
            for (const auto& [col, v] : r) ++column_count[static_cast<std::size_t>(col)];
        }
        int pivot_col = -1;
        for (int c = 0; c < m.n_cols(); ++c) {
            if (column_used[static_cast<std::size_t>(c)]) continue;
            const int count = column_count[static_cast<std::size_t>(c)];
            if (count == 0) continue;
            if (pivot_col < 0 || count < column_count[static_cast<std::size_t>(pivot_col)]) {
                pivot_col = c;
            }
        }
        if (pivot_col < 0) break;
        column_used[static_cast<std::size_t>(pivot_col)] = true;

        std::size_t pivot_row_idx = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!row_entry(rows[r], pivot_col)) continue;
            if (pivot_row_idx == rows.size() ||
                rows[r].size() < rows[pivot_row_idx].size()) {
                pivot_row_idx = r;
            }
        }
        Row pivot_row = std::move(rows[pivot_row_idx]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot_row_idx));
        const Int pivot = *row_entry(pivot_row, pivot_col);
        ++rank;

        // Uniform Bareiss step over every remaining row (the divisions stay
        // exact only if rows with a zero in the pivot column are updated too).
        std::vector<Row> next;
        next.reserve(rows.size());
        for (Row& r : rows) {
            const Int* f = row_entry(r, pivot_col);
            Row updated = bareiss_update(r, pivot_row, pivot, f ? *f : Int(0), previous_pivot);
            if (!updated.empty()) next.push_back(std::move(updated));
        }
        rows = std::move(next);
        previous_pivot = pivot;
    }
    return rank;
}

}  // namespace confhom
