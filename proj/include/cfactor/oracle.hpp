#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "cfactor/errors.hpp"
#include "cfactor/grid.hpp"
#include "cfactor/lincomb.hpp"
#include "cfactor/multiplicity.hpp"
#include "cfactor/rational.hpp"

namespace cfactor {
namespace oracle {

namespace detail {

/// Filters re-derived from the grid definition, with no reference to the
/// production search: the ratio conditions written out as displays, the
/// ordering restrictions, closedness (no appendable column), and the
/// full-width rule.
inline bool ratio_conditions_hold(const grid_map& g, const root_list& roots) {
    for (int i = 1; i <= g.n; ++i)
        for (int j1 = 1; j1 <= g.m; ++j1)
            for (int j2 = 1; j2 <= g.m; ++j2) {
                if (j1 == j2) continue;
                const rational top = roots.value(g.at(1, j1)) / roots.value(g.at(1, j2));
                const rational here = roots.value(g.at(i, j1)) / roots.value(g.at(i, j2));
                if (top != here) return false;
            }
    for (int j = 1; j <= g.m; ++j)
        for (int i1 = 1; i1 <= g.n; ++i1)
            for (int i2 = 1; i2 <= g.n; ++i2) {
                if (i1 == i2) continue;
                const rational left = roots.value(g.at(i1, 1)) / roots.value(g.at(i2, 1));
                const rational here = roots.value(g.at(i1, j)) / roots.value(g.at(i2, j));
                if (left != here) return false;
            }
    return true;
}

inline bool rows_and_columns_distinct(const grid_map& g) {
    for (int i = 1; i <= g.n; ++i)
        for (int j1 = 1; j1 <= g.m; ++j1)
            for (int j2 = j1 + 1; j2 <= g.m; ++j2)
                if (g.at(i, j1) == g.at(i, j2)) return false;
    for (int j = 1; j <= g.m; ++j)
        for (int i1 = 1; i1 <= g.n; ++i1)
            for (int i2 = i1 + 1; i2 <= g.n; ++i2)
                if (g.at(i1, j) == g.at(i2, j)) return false;
    return true;
}

inline bool ordering_holds(const grid_map& g) {
    for (int j = 2; j <= g.m; ++j)
        if (g.at(1, j - 1) >= g.at(1, j)) return false;
    for (int i = 2; i <= g.n; ++i)
        if (g.at(i - 1, 1) >= g.at(i, 1)) return false;
    return true;
}

/// A column with top index c can be appended iff every row's scaled
/// value lands back in the root list.
inline bool closed(const grid_map& g, const root_list& roots) {
    const rational anchor = roots.value(g.at(1, 1));
    for (int c = 1; c <= roots.size(); ++c) {
        bool present = false;
        for (int j = 1; j <= g.m; ++j) present = present || g.at(1, j) == c;
        if (present) continue;
        bool extends = true;
        for (int i = 1; i <= g.n && extends; ++i) {
            const rational v = roots.value(g.at(i, 1)) * roots.value(c) / anchor;
            extends = roots.find(v) != 0;
        }
        if (extends) return false;
    }
    return true;
}

inline bool full_width_allowed(const grid_map& g, int l) {
    return g.m < l || l == 2;
}

/// Enumerates every n x m index matrix cell by cell; the predicate
/// filters are applied to each completed matrix. Cheap partial checks
/// (orderings, per-row/column distinctness, ratio consistency with the
/// already placed cells) prune branches that no completion could repair.
template <typename Sink>
inline void enumerate_matrices(const root_list& roots, int n, int m, bool pin_top_left,
                               Sink&& sink) {
    const int l = roots.size();
    grid_map g(n, m);
    auto consistent_so_far = [&](int i, int j) {
        const int v = g.at(i, j);
        for (int jj = 1; jj < j; ++jj)
            if (g.at(i, jj) == v) return false;
        for (int ii = 1; ii < i; ++ii)
            if (g.at(ii, j) == v) return false;
        if (i == 1 && j > 1 && g.at(1, j - 1) >= v) return false;
        if (j == 1 && i > 1 && g.at(i - 1, 1) >= v) return false;
        if (i > 1 && j > 1) {
            const rational want =
                roots.value(g.at(i, 1)) * roots.value(g.at(1, j)) / roots.value(g.at(1, 1));
            if (roots.value(v) != want) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == n * m) {
            sink(g);
            return;
        }
        const int i = cell / m + 1;
        const int j = cell % m + 1;
        for (int v = 1; v <= l; ++v) {
            if (pin_top_left && i == 1 && j == 1 && v != 1) continue;
            g.at(i, j) = v;
            if (consistent_so_far(i, j)) self(self, cell + 1);
        }
        g.at(i, j) = 0;
    };
    rec(rec, 0);
}

} // namespace detail

/// Reference implementation of the grid search for one shape: every
/// function from an n x m grid to the root indices is enumerated and
/// filtered by surjectivity, distinctness within rows and columns, the
/// ratio conditions, the ordering restrictions with top-left pinned to
/// the first root, closedness, and the full-width rule. Survivors are
/// canonicalized. Guarded to n*m <= 12 cells.
inline std::vector<grid_map> brute_force_grids(const root_list& roots, int n, int m) {
    if (n < 2 || m < n) throw invalid_input_error("brute_force_grids: need 2 <= n <= m");
    if (n * m > 12) throw too_large_error("brute_force_grids: instance exceeds the n*m <= 12 guard");
    std::set<grid_map> out;
    detail::enumerate_matrices(roots, n, m, /*pin_top_left=*/true, [&](const grid_map& g) {
        if (!g.covers_all(roots.size())) return;
        if (!detail::rows_and_columns_distinct(g)) return;
        if (!detail::ordering_holds(g)) return;
        if (!detail::ratio_conditions_hold(g, roots)) return;
        if (!detail::closed(g, roots)) return;
        if (!detail::full_width_allowed(g, roots.size())) return;
        out.insert(canonical_grid(g));
    });
    return {out.begin(), out.end()};
}

/// Union of brute_force_grids over every admissible shape. Root lists
/// beyond six entries are refused: shapes past the cell guard could hold
/// solutions, and skipping them would make the reference set silently
/// incomplete.
inline std::vector<grid_map> brute_force_all_grids(const root_list& roots) {
    std::set<grid_map> out;
    const int l = roots.size();
    if (l > 6) throw too_large_error("brute_force_all_grids: root list too large");
    for (int n = 2; n <= l; ++n)
        for (int m = n; m <= l; ++m) {
            if (n * m > 12) continue;
            for (const auto& g : brute_force_grids(roots, n, m)) out.insert(g);
        }
    return {out.begin(), out.end()};
}

/// Reference enumeration of the closed-grid family used by the paired
/// search: no surjectivity and no pinned top-left.
inline std::vector<grid_map> brute_force_family(const root_list& roots) {
    std::set<grid_map> out;
    const int l = roots.size();
    if (l > 6) throw too_large_error("brute_force_family: root list too large");
    for (int n = 2; n <= l; ++n)
        for (int m = n; m <= l; ++m) {
            detail::enumerate_matrices(roots, n, m, /*pin_top_left=*/false, [&](const grid_map& g) {
                if (!detail::rows_and_columns_distinct(g)) return;
                if (!detail::ordering_holds(g)) return;
                if (!detail::ratio_conditions_hold(g, roots)) return;
                if (!detail::closed(g, roots)) return;
                if (!detail::full_width_allowed(g, l)) return;
                out.insert(canonical_grid(g));
            });
        }
    return {out.begin(), out.end()};
}

/// Reference pair enumeration: all family pairs whose images jointly
/// cover the roots, deduplicated modulo swapping.
inline std::vector<grid_pair> brute_force_grid_pairs(const root_list& roots) {
    const auto family = brute_force_family(roots);
    const int l = roots.size();
    std::vector<grid_pair> out;
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a; b < family.size(); ++b) {
            const auto ma = family[a].image_mask(l);
            const auto mb = family[b].image_mask(l);
            bool covered = true;
            for (int i = 1; i <= l && covered; ++i)
                covered = ma[static_cast<std::size_t>(i)] || mb[static_cast<std::size_t>(i)];
            if (covered) out.push_back({family[a], family[b]});
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Full enumeration of [1, M]^(n+m) filtered by the max-equations; the
/// definitive reference for multiplicity systems. Guarded to 10^6
/// candidate vectors.
inline std::vector<multiplicity_assignment> brute_force_multiplicities(const clash_system& sys) {
    const int M = sys.max_target();
    const int vars = sys.num_e + sys.num_eps;
    if (vars == 0) return {};
    double budget = 1.0;
    for (int i = 0; i < vars; ++i) {
        budget *= M;
        if (budget > 1e6) throw too_large_error("brute_force_multiplicities: M^(n+m) exceeds 10^6");
    }
    std::vector<multiplicity_assignment> out;
    std::vector<int> v(static_cast<std::size_t>(vars), 1);
    for (;;) {
        multiplicity_assignment a;
        a.e.assign(v.begin(), v.begin() + sys.num_e);
        a.eps.assign(v.begin() + sys.num_e, v.end());
        // Re-verify by direct substitution into every max-equation.
        bool ok = true;
        for (const auto& eq : sys.equations) {
            int best = 0;
            for (const auto& [i, j] : eq.pairs)
                best = std::max(best, a.e[static_cast<std::size_t>(i - 1)] +
                                          a.eps[static_cast<std::size_t>(j - 1)] - 1);
            if (best != eq.target) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::move(a));
        int k = vars - 1;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == M) {
            v[static_cast<std::size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++v[static_cast<std::size_t>(k)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
} // namespace cfactor
