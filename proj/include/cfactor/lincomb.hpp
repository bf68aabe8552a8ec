#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cfactor/errors.hpp"
#include "cfactor/factored_poly.hpp"
#include "cfactor/grid.hpp"
#include "cfactor/grid_search.hpp"
#include "cfactor/multiplicity.hpp"
#include "cfactor/rational.hpp"
#include "cfactor/tensor.hpp"

namespace cfactor {

/// Two grids whose images jointly cover the whole root list; overlap is
/// allowed, and a pair whose first grid already covers everything is a
/// degenerate instance.
struct grid_pair {
    grid_map first;
    grid_map second;

    friend bool operator==(const grid_pair&, const grid_pair&) = default;
    friend auto operator<=>(const grid_pair& a, const grid_pair& b) {
        if (auto c = a.first <=> b.first; c != 0) return c;
        return a.second <=> b.second;
    }
};

/// All pairs of closed grids that jointly cover the root list,
/// deduplicated modulo swapping the two grids.
inline std::vector<grid_pair> search_grid_pairs(const root_list& roots) {
    const int l = roots.size();
    if (l < 2) return {};
    const auto family = family_grids(roots);
    std::vector<grid_pair> out;
    for (std::size_t a = 0; a < family.size(); ++a) {
        const auto mask_a = family[a].image_mask(l);
        for (std::size_t b = a; b < family.size(); ++b) {
            const auto mask_b = family[b].image_mask(l);
            bool covered = true;
            for (int i = 1; i <= l && covered; ++i)
                covered = mask_a[static_cast<std::size_t>(i)] || mask_b[static_cast<std::size_t>(i)];
            if (covered) out.push_back({family[a], family[b]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Four factors with multiplicities applied, the grids behind them, and
/// whether the pair is degenerate (one product already covers the whole
/// target on its own).
struct lincomb_decomposition {
    factored_poly p1, q1, p2, q2;
    grid_pair pair;
    bool degenerate = false;
};

namespace detail {

/// Max-plus system for the pair case: variables are the multiplicities
/// of both factor pairs, and every root's equation takes the max over
/// contributing index pairs from both products (lcm semantics).
struct pair_system {
    // Unified variable order: e1 | eps1 | e2 | eps2.
    std::array<int, 4> counts{};
    struct equation {
        int target = 1;
        std::vector<std::pair<int, int>> var_pairs; // 0-based unified indices
    };
    std::vector<equation> equations;

    int total_vars() const { return counts[0] + counts[1] + counts[2] + counts[3]; }

    int max_target() const {
        int m = 1;
        for (const auto& eq : equations) m = std::max(m, eq.target);
        return m;
    }

    bool satisfied_by(const std::vector<int>& vars) const {
        for (const auto& eq : equations) {
            int best = 0;
            for (const auto& [x, y] : eq.var_pairs)
                best = std::max(best, vars[static_cast<std::size_t>(x)] +
                                          vars[static_cast<std::size_t>(y)] - 1);
            if (best != eq.target) return false;
        }
        return true;
    }
};

inline void pair_tropical_rec(const pair_system& sys, int M, std::vector<int>& vars,
                              std::size_t next, std::vector<std::vector<int>>& out) {
    for (const auto& eq : sys.equations) {
        int decided_max = 0;
        int achievable_max = 0;
        for (const auto& [x, y] : eq.var_pairs) {
            const int vx = vars[static_cast<std::size_t>(x)];
            const int vy = vars[static_cast<std::size_t>(y)];
            const int lo = (vx ? vx : 1) + (vy ? vy : 1) - 1;
            const int hi = (vx ? vx : M) + (vy ? vy : M) - 1;
            if (vx && vy) decided_max = std::max(decided_max, lo);
            if (lo > eq.target) return;
            achievable_max = std::max(achievable_max, hi);
        }
        if (decided_max > eq.target || achievable_max < eq.target) return;
    }
    if (next == static_cast<std::size_t>(sys.total_vars())) {
        if (sys.satisfied_by(vars)) out.push_back(vars);
        return;
    }
    for (int v = 1; v <= M; ++v) {
        vars[next] = v;
        pair_tropical_rec(sys, M, vars, next + 1, out);
    }
    vars[next] = 0;
}

} // namespace detail

/// Decompositions r = lcm(p1 (x) q1, p2 (x) q2) with all four factors of
/// degree at least two. Squarefree factors come from the paired grid
/// search on the support; multiplicities come from the max-plus system
/// whose left side joins the contributing pairs of both products.
inline std::vector<lincomb_decomposition> lincomb_decompose(const factored_poly& r) {
    std::vector<lincomb_decomposition> out;
    const root_list roots(r.roots());
    const int l = roots.size();
    const dense_poly target = expand(r);
    using class_pair = std::pair<factored_poly, factored_poly>;
    std::set<std::pair<class_pair, class_pair>> seen;
    for (const grid_pair& pr : search_grid_pairs(roots)) {
        auto [p1, q1] = reconstruct(roots, pr.first, rational(1));
        auto [p2, q2] = reconstruct(roots, pr.second, rational(1));
        // Unified multiplicity system across both products.
        detail::pair_system sys;
        const auto r1 = p1.roots();
        const auto s1 = q1.roots();
        const auto r2 = p2.roots();
        const auto s2 = q2.roots();
        sys.counts = {static_cast<int>(r1.size()), static_cast<int>(s1.size()),
                      static_cast<int>(r2.size()), static_cast<int>(s2.size())};
        const int off_s1 = sys.counts[0];
        const int off_r2 = off_s1 + sys.counts[1];
        const int off_s2 = off_r2 + sys.counts[2];
        std::map<rational, std::vector<std::pair<int, int>>> classes;
        for (std::size_t i = 0; i < r1.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j)
                classes[r1[i] * s1[j]].push_back(
                    {static_cast<int>(i), off_s1 + static_cast<int>(j)});
        for (std::size_t i = 0; i < r2.size(); ++i)
            for (std::size_t j = 0; j < s2.size(); ++j)
                classes[r2[i] * s2[j]].push_back(
                    {off_r2 + static_cast<int>(i), off_s2 + static_cast<int>(j)});
        for (const auto& [value, var_pairs] : classes) {
            const int target_mult = r.multiplicity_of(value);
            if (target_mult == 0)
                throw internal_error("lincomb_decompose: product outside the target support");
            sys.equations.push_back({target_mult, var_pairs});
        }
        std::vector<std::vector<int>> solutions;
        std::vector<int> vars(static_cast<std::size_t>(sys.total_vars()), 0);
        detail::pair_tropical_rec(sys, sys.max_target(), vars, 0, solutions);
        for (const auto& sol : solutions) {
            auto lift = [&](const std::vector<rational>& base, int offset) {
                std::vector<factored_poly::factor> fs;
                for (std::size_t i = 0; i < base.size(); ++i)
                    fs.push_back({base[i], sol[static_cast<std::size_t>(offset) + i]});
                return factored_poly(std::move(fs));
            };
            lincomb_decomposition d;
            d.p1 = lift(r1, 0);
            d.q1 = lift(s1, off_s1);
            d.p2 = lift(r2, off_r2);
            d.q2 = lift(s2, off_s2);
            d.pair = pr;
            const dense_poly prod1 = expand(tensor_factored(d.p1, d.q1));
            const dense_poly prod2 = expand(tensor_factored(d.p2, d.q2));
            if (lcm(prod1, prod2) != target)
                throw internal_error("lincomb_decompose: decomposition fails verification");
            d.degenerate = pr.first.covers_all(l) || pr.second.covers_all(l);
            class_pair c1 = canonical_class(d.p1, d.q1);
            class_pair c2 = canonical_class(d.p2, d.q2);
            if (c2 < c1) std::swap(c1, c2);
            if (seen.insert({c1, c2}).second) out.push_back(std::move(d));
        }
    }
    return out;
}

inline std::vector<lincomb_decomposition> lincomb_decompose(const dense_poly& r) {
    return lincomb_decompose(rational_roots(r));
}

} // namespace cfactor
