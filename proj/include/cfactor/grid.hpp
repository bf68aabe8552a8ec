#pragma once

#include <algorithm>
#include <compare>
#include <iosfwd>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cfactor/errors.hpp"
#include "cfactor/rational.hpp"

namespace cfactor {

/// The known roots rho_1..rho_l of a squarefree target, with exact
/// value-to-index lookup. Indices are 1-based throughout, matching the
/// usual presentation of assignment tables.
class root_list {
public:
    explicit root_list(std::vector<rational> roots) : roots_(std::move(roots)) {
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            if (roots_[i].is_zero()) throw zero_root_error("root_list: zero root");
            auto [it, inserted] = index_.emplace(roots_[i], static_cast<int>(i) + 1);
            if (!inserted) throw invalid_input_error("root_list: duplicate root");
        }
    }

    int size() const { return static_cast<int>(roots_.size()); }

    const rational& value(int index_1based) const {
        return roots_[static_cast<std::size_t>(index_1based - 1)];
    }

    /// 1-based index of an exact value, or 0 when absent.
    int find(const rational& v) const {
        auto it = index_.find(v);
        return it == index_.end() ? 0 : it->second;
    }

    const std::vector<rational>& values() const { return roots_; }

private:
    std::vector<rational> roots_;
    std::map<rational, int> index_;
};

/// An n x m table of 1-based root indices encoding a candidate map from
/// grid positions to roots. Valid grids satisfy the ratio conditions:
/// within a row, entry ratios do not depend on the row; within a column,
/// they do not depend on the column.
struct grid_map {
    int n = 0;
    int m = 0;
    std::vector<int> cells; // row-major, 1-based root indices

    grid_map() = default;
    grid_map(int rows, int cols) : n(rows), m(cols), cells(static_cast<std::size_t>(rows * cols), 0) {}

    static grid_map from_rows(std::initializer_list<std::initializer_list<int>> rows) {
        grid_map g;
        g.n = static_cast<int>(rows.size());
        g.m = g.n ? static_cast<int>(rows.begin()->size()) : 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != g.m)
                throw invalid_input_error("grid_map: ragged rows");
            for (int v : row) g.cells.push_back(v);
        }
        return g;
    }

    int at(int i, int j) const { // 1-based
        return cells[static_cast<std::size_t>((i - 1) * m + (j - 1))];
    }

    int& at(int i, int j) {
        return cells[static_cast<std::size_t>((i - 1) * m + (j - 1))];
    }

    grid_map transposed() const {
        grid_map t(m, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    /// Set of root indices hit by the grid.
    std::vector<bool> image_mask(int l) const {
        std::vector<bool> mask(static_cast<std::size_t>(l) + 1, false);
        for (int v : cells) mask[static_cast<std::size_t>(v)] = true;
        return mask;
    }

    bool covers_all(int l) const {
        const auto mask = image_mask(l);
        for (int i = 1; i <= l; ++i)
            if (!mask[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    friend bool operator==(const grid_map&, const grid_map&) = default;
    friend auto operator<=>(const grid_map& a, const grid_map& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.m <=> b.m; c != 0) return c;
        return std::lexicographical_compare_three_way(a.cells.begin(), a.cells.end(),
                                                      b.cells.begin(), b.cells.end());
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (int i = 1; i <= n; ++i) {
            if (i > 1) os << ' ';
            os << '(';
            for (int j = 1; j <= m; ++j) {
                if (j > 1) os << ',';
                os << at(i, j);
            }
            os << ')';
        }
        os << ']';
        return os.str();
    }
};

inline std::ostream& operator<<(std::ostream& os, const grid_map& g) {
    return os << g.str();
}

/// Canonical presentation of a valid grid: the row/column permutation
/// whose row-major cell vector is lexicographically smallest. Keeps the
/// shape; transposes are considered distinct grids.
inline grid_map canonical_grid(const grid_map& g) {
    grid_map best;
    for (int pivot = 1; pivot <= g.n; ++pivot) {
        // Order columns by the pivot row's entries, then rows
        // lexicographically; entries within a row are distinct.
        std::vector<int> col_order(static_cast<std::size_t>(g.m));
        for (int j = 0; j < g.m; ++j) col_order[static_cast<std::size_t>(j)] = j + 1;
        std::sort(col_order.begin(), col_order.end(),
                  [&](int a, int b) { return g.at(pivot, a) < g.at(pivot, b); });
        std::vector<std::vector<int>> rows;
        rows.reserve(static_cast<std::size_t>(g.n));
        for (int i = 1; i <= g.n; ++i) {
            std::vector<int> row;
            row.reserve(static_cast<std::size_t>(g.m));
            for (int j : col_order) row.push_back(g.at(i, j));
            rows.push_back(std::move(row));
        }
        std::sort(rows.begin(), rows.end());
        grid_map cand(g.n, g.m);
        for (int i = 1; i <= g.n; ++i)
            for (int j = 1; j <= g.m; ++j)
                cand.at(i, j) = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (best.cells.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

/// Checks the defining conditions of a valid grid directly from the
/// ratio displays: every row-pair ratio is independent of the row index
/// and every column-pair ratio is independent of the column index, and
/// no index repeats within a row or within a column.
inline bool satisfies_ratio_conditions(const grid_map& g, const root_list& roots) {
    for (int i = 1; i <= g.n; ++i)
        for (int j1 = 1; j1 <= g.m; ++j1)
            for (int j2 = j1 + 1; j2 <= g.m; ++j2) {
                if (g.at(i, j1) == g.at(i, j2)) return false;
                const rational lhs = roots.value(g.at(1, j1)) / roots.value(g.at(1, j2));
                const rational rhs = roots.value(g.at(i, j1)) / roots.value(g.at(i, j2));
                if (lhs != rhs) return false;
            }
    for (int j = 1; j <= g.m; ++j)
        for (int i1 = 1; i1 <= g.n; ++i1)
            for (int i2 = i1 + 1; i2 <= g.n; ++i2) {
                if (g.at(i1, j) == g.at(i2, j)) return false;
                const rational lhs = roots.value(g.at(i1, 1)) / roots.value(g.at(i2, 1));
                const rational rhs = roots.value(g.at(i1, j)) / roots.value(g.at(i2, j));
                if (lhs != rhs) return false;
            }
    return true;
}

} // namespace cfactor
