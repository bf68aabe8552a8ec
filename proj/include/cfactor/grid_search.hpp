#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "cfactor/errors.hpp"
#include "cfactor/factored_poly.hpp"
#include "cfactor/grid.hpp"
#include "cfactor/rational.hpp"
#include "cfactor/tensor.hpp"

namespace cfactor {

namespace detail {

/// Grid generated by a row index set: the columns are every index that
/// stays inside the root list under all the row ratios, and cell (i, j)
/// holds the index of rho_ri * rho_cj / rho_r1. Row sets are closed in
/// the sense that no further column can be appended.
struct closure_grid_builder {
    const root_list& roots;

    std::vector<int> initial_columns() const {
        std::vector<int> cols(static_cast<std::size_t>(roots.size()));
        for (int j = 0; j < roots.size(); ++j) cols[static_cast<std::size_t>(j)] = j + 1;
        return cols;
    }

    /// Columns of row set (rows + next) given the columns of rows.
    std::vector<int> shrink_columns(const std::vector<int>& cols, int anchor, int next) const {
        std::vector<int> out;
        out.reserve(cols.size());
        const rational ratio = roots.value(next) / roots.value(anchor);
        for (int j : cols) {
            if (roots.find(ratio * roots.value(j)) != 0) out.push_back(j);
        }
        return out;
    }

    grid_map build(const std::vector<int>& row_set, const std::vector<int>& cols) const {
        grid_map g(static_cast<int>(row_set.size()), static_cast<int>(cols.size()));
        const rational anchor = roots.value(row_set.front());
        for (int i = 1; i <= g.n; ++i) {
            const rational scale = roots.value(row_set[static_cast<std::size_t>(i - 1)]) / anchor;
            for (int j = 1; j <= g.m; ++j) {
                const int idx = roots.find(scale * roots.value(cols[static_cast<std::size_t>(j - 1)]));
                g.at(i, j) = idx;
            }
        }
        return g;
    }
};

/// A grid whose columns span the whole root list reads q as the input
/// itself up to a root rescaling; such solutions exist for every input
/// with a multiplicative symmetry and restate r = p (x) r. They are
/// suppressed except in the two-root case, where the full shape is the
/// only admissible one.
inline bool width_admissible(int m, int l) { return m < l || l == 2; }

inline void search_grids_rec(const closure_grid_builder& b,
                             std::vector<int>& row_set,
                             const std::vector<int>& cols,
                             std::set<grid_map>& out) {
    const int l = b.roots.size();
    for (int p = row_set.back() + 1; p <= l; ++p) {
        const auto newcols = b.shrink_columns(cols, row_set.front(), p);
        const int n = static_cast<int>(row_set.size()) + 1;
        const int m = static_cast<int>(newcols.size());
        if (m < n) continue;
        row_set.push_back(p);
        const grid_map g = b.build(row_set, newcols);
        if (g.covers_all(l) && width_admissible(m, l)) out.insert(canonical_grid(g));
        if (m > n) search_grids_rec(b, row_set, newcols, out);
        row_set.pop_back();
    }
}

} // namespace detail

/// All grids certifying a factorization of the squarefree polynomial
/// with the given roots: canonical (lexicographically minimal) n x m
/// index tables with 2 <= n <= m whose entries cover every root, built
/// by backtracking over row sets anchored at the first root. The list is
/// deduplicated and sorted; a size-1 root list yields the empty list.
inline std::vector<grid_map> search_grids(const root_list& roots) {
    std::set<grid_map> out;
    if (roots.size() >= 2) {
        detail::closure_grid_builder b{roots};
        std::vector<int> row_set{1};
        detail::search_grids_rec(b, row_set, b.initial_columns(), out);
    }
    return {out.begin(), out.end()};
}

/// All closed grids on the given roots regardless of coverage, anchored
/// anywhere. Used by the paired decomposition search, where two grids
/// jointly cover the roots.
inline std::vector<grid_map> family_grids(const root_list& roots) {
    std::set<grid_map> out;
    detail::closure_grid_builder b{roots};
    const int l = roots.size();
    for (int a = 1; a <= l; ++a) {
        std::vector<int> row_set{a};
        // Depth-first extension; columns only shrink, so stop a branch
        // once the width cannot stay ahead of the row count.
        auto rec = [&](auto&& self, const std::vector<int>& cols) -> void {
            for (int p = row_set.back() + 1; p <= l; ++p) {
                const auto newcols = b.shrink_columns(cols, a, p);
                const int n = static_cast<int>(row_set.size()) + 1;
                const int m = static_cast<int>(newcols.size());
                if (m < n) continue;
                row_set.push_back(p);
                if (detail::width_admissible(m, l))
                    out.insert(canonical_grid(b.build(row_set, newcols)));
                if (m > n) self(self, newcols);
                row_set.pop_back();
            }
        };
        rec(rec, b.initial_columns());
    }
    return {out.begin(), out.end()};
}

/// Factor reconstruction from a grid: pick phi_1 freely, then the
/// remaining roots are forced by the grid's ratios. Duplicate values
/// collapse, so both factors come out squarefree. With the canonical
/// choice phi_1 = 1 every reconstructed root is a ratio of two roots of
/// the target (times a target root on the q side), so rational targets
/// always factor over the rationals; no larger field can be required.
inline std::pair<factored_poly, factored_poly> reconstruct(const root_list& roots,
                                                           const grid_map& g,
                                                           const rational& phi1) {
    if (phi1.is_zero()) throw invalid_input_error("reconstruct: phi1 must be nonzero");
    const rational anchor = roots.value(g.at(1, 1));
    std::set<rational> phis, psis;
    for (int i = 1; i <= g.n; ++i)
        phis.insert(phi1 * roots.value(g.at(i, 1)) / anchor);
    const rational psi1 = anchor / phi1;
    for (int j = 1; j <= g.m; ++j)
        psis.insert(psi1 * roots.value(g.at(1, j)) / anchor);
    return {factored_poly::from_roots({phis.begin(), phis.end()}),
            factored_poly::from_roots({psis.begin(), psis.end()})};
}

/// Canonical representative of a factorization class modulo swapping the
/// two factors and the gauge freedom (p, q) -> (p scaled by s, q scaled
/// by 1/s): the lexicographically smallest among the finitely many
/// representatives in which the first factor has a root equal to 1.
inline std::pair<factored_poly, factored_poly> canonical_class(const factored_poly& p,
                                                               const factored_poly& q) {
    std::pair<factored_poly, factored_poly> best;
    bool have = false;
    auto consider = [&](const factored_poly& a, const factored_poly& b) {
        for (const auto& [root, mult] : a.factors()) {
            std::pair<factored_poly, factored_poly> cand{a.scaled(root.inverse()),
                                                         b.scaled(root)};
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
        }
    };
    consider(p, q);
    consider(q, p);
    if (!have) throw invalid_input_error("canonical_class: empty factorization");
    return best;
}

/// A verified factorization of a squarefree target, with the grid that
/// produced it.
struct factorization {
    factored_poly p;
    factored_poly q;
    grid_map grid;
};

/// Complete list of factorization classes of the squarefree polynomial
/// on the given roots: one canonical representative per class modulo
/// transposition and gauge, each re-verified through the tensor product.
inline std::vector<factorization> factor_squarefree(const root_list& roots) {
    const factored_poly target = factored_poly::from_roots(roots.values());
    std::set<std::pair<factored_poly, factored_poly>> seen;
    std::vector<factorization> out;
    for (const grid_map& g : search_grids(roots)) {
        auto [p, q] = reconstruct(roots, g, rational(1));
        if (tensor_factored(p, q) != target)
            throw internal_error("factor_squarefree: reconstructed factors fail verification");
        auto canon = canonical_class(p, q);
        if (seen.insert(canon).second) {
            out.push_back({canon.first, canon.second, g});
        }
    }
    return out;
}

} // namespace cfactor
