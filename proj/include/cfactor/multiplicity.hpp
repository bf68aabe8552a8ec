#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cfactor/errors.hpp"
#include "cfactor/factored_poly.hpp"
#include "cfactor/grid.hpp"
#include "cfactor/grid_search.hpp"
#include "cfactor/rational.hpp"
#include "cfactor/tensor.hpp"

namespace cfactor {

/// Multiplicity constraints induced by a squarefree factorization: one
/// equation per root of the target, requiring the maximum of
/// e_i + eps_j - 1 over all index pairs producing that root to equal the
/// root's multiplicity. With no product clashes every pair set is a
/// singleton and the system is plain linear.
struct clash_system {
    struct equation {
        rational root;
        int target = 1;
        std::vector<std::pair<int, int>> pairs; // (i, j), 1-based
    };

    int num_e = 0;
    int num_eps = 0;
    std::vector<equation> equations;

    bool all_singletons() const {
        return std::all_of(equations.begin(), equations.end(),
                           [](const equation& eq) { return eq.pairs.size() == 1; });
    }

    int max_target() const {
        int m = 1;
        for (const auto& eq : equations) m = std::max(m, eq.target);
        return m;
    }
};

/// Positive-integer multiplicities for the two factors.
struct multiplicity_assignment {
    std::vector<int> e;
    std::vector<int> eps;

    friend bool operator==(const multiplicity_assignment&, const multiplicity_assignment&) = default;
    friend auto operator<=>(const multiplicity_assignment&, const multiplicity_assignment&) = default;
};

/// Direct re-check of every max-equation.
inline bool satisfies(const clash_system& sys, const multiplicity_assignment& a) {
    if (static_cast<int>(a.e.size()) != sys.num_e) return false;
    if (static_cast<int>(a.eps.size()) != sys.num_eps) return false;
    for (int v : a.e)
        if (v < 1) return false;
    for (int v : a.eps)
        if (v < 1) return false;
    for (const auto& eq : sys.equations) {
        int best = 0;
        for (const auto& [i, j] : eq.pairs)
            best = std::max(best, a.e[static_cast<std::size_t>(i - 1)] +
                                      a.eps[static_cast<std::size_t>(j - 1)] - 1);
        if (best != eq.target) return false;
    }
    return true;
}

/// Groups the root-index pairs of a squarefree factorization (p, q) by
/// their product value and attaches the multiplicity of that value in
/// the full target r. The product set must equal the support of r.
inline clash_system clash_classes(const factored_poly& p, const factored_poly& q,
                                  const factored_poly& r) {
    clash_system sys;
    sys.num_e = static_cast<int>(p.distinct_roots());
    sys.num_eps = static_cast<int>(q.distinct_roots());
    std::map<rational, std::vector<std::pair<int, int>>> classes;
    const auto proots = p.roots();
    const auto qroots = q.roots();
    for (std::size_t i = 0; i < proots.size(); ++i)
        for (std::size_t j = 0; j < qroots.size(); ++j)
            classes[proots[i] * qroots[j]].push_back(
                {static_cast<int>(i) + 1, static_cast<int>(j) + 1});
    if (classes.size() != r.distinct_roots())
        throw invalid_input_error("clash_classes: product set does not match the target support");
    for (const auto& [value, pairs] : classes) {
        const int target = r.multiplicity_of(value);
        if (target == 0)
            throw invalid_input_error("clash_classes: product set does not match the target support");
        sys.equations.push_back({value, target, pairs});
    }
    return sys;
}

/// All positive-integer solutions of a clash-free (singleton) system:
/// e_1 determines every other variable by propagation, so e_1 is
/// enumerated up to the largest target and each forced assignment is
/// checked against all equations.
inline std::vector<multiplicity_assignment> solve_exact_system(const clash_system& sys) {
    if (!sys.all_singletons())
        throw invalid_input_error("solve_exact_system: system has product clashes");
    std::vector<multiplicity_assignment> out;
    const int M = sys.max_target();
    for (int e1 = 1; e1 <= M; ++e1) {
        multiplicity_assignment a;
        a.e.assign(static_cast<std::size_t>(sys.num_e), 0);
        a.eps.assign(static_cast<std::size_t>(sys.num_eps), 0);
        std::vector<bool> e_set(a.e.size(), false), eps_set(a.eps.size(), false);
        a.e[0] = e1;
        e_set[0] = true;
        // Each equation with one side assigned forces the other side.
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& eq : sys.equations) {
                const auto [i, j] = eq.pairs.front();
                const std::size_t ii = static_cast<std::size_t>(i - 1);
                const std::size_t jj = static_cast<std::size_t>(j - 1);
                if (e_set[ii] && !eps_set[jj]) {
                    a.eps[jj] = eq.target + 1 - a.e[ii];
                    eps_set[jj] = true;
                    progress = true;
                } else if (eps_set[jj] && !e_set[ii]) {
                    a.e[ii] = eq.target + 1 - a.eps[jj];
                    e_set[ii] = true;
                    progress = true;
                }
            }
        }
        const bool complete =
            std::all_of(e_set.begin(), e_set.end(), [](bool b) { return b; }) &&
            std::all_of(eps_set.begin(), eps_set.end(), [](bool b) { return b; }) &&
            std::all_of(a.e.begin(), a.e.end(), [](int v) { return v >= 1; }) &&
            std::all_of(a.eps.begin(), a.eps.end(), [](int v) { return v >= 1; });
        if (complete && satisfies(sys, a)) out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

inline void tropical_rec(const clash_system& sys, int M, std::vector<int>& vars,
                         std::size_t next, std::vector<multiplicity_assignment>& out) {
    const std::size_t total = static_cast<std::size_t>(sys.num_e + sys.num_eps);
    // Feasibility: a class may never exceed its target, and must still be
    // able to reach it through some undecided pair (M bounds every
    // variable, since e_i + eps_j - 1 >= max(e_i, eps_j)).
    for (const auto& eq : sys.equations) {
        int decided_max = 0;
        int achievable_max = 0;
        for (const auto& [i, j] : eq.pairs) {
            const int ei = vars[static_cast<std::size_t>(i - 1)];
            const int ej = vars[static_cast<std::size_t>(sys.num_e + j - 1)];
            const int lo = (ei ? ei : 1) + (ej ? ej : 1) - 1;
            const int hi = (ei ? ei : M) + (ej ? ej : M) - 1;
            if (ei && ej) decided_max = std::max(decided_max, lo);
            if (lo > eq.target) return;
            achievable_max = std::max(achievable_max, hi);
        }
        if (decided_max > eq.target || achievable_max < eq.target) return;
    }
    if (next == total) {
        multiplicity_assignment a;
        a.e.assign(vars.begin(), vars.begin() + sys.num_e);
        a.eps.assign(vars.begin() + sys.num_e, vars.end());
        if (satisfies(sys, a)) out.push_back(std::move(a));
        return;
    }
    for (int v = 1; v <= M; ++v) {
        vars[next] = v;
        tropical_rec(sys, M, vars, next + 1, out);
    }
    vars[next] = 0;
}

} // namespace detail

/// All positive-integer solutions of the tropical (max-plus) system by
/// bounded depth-first enumeration with pruning. Every variable lies in
/// [1, M] for M the largest target: e_i + eps_j - 1 >= max(e_i, eps_j),
/// so any larger value would push some class above its target.
inline std::vector<multiplicity_assignment> solve_tropical_system(const clash_system& sys) {
    std::vector<multiplicity_assignment> out;
    const int M = sys.max_target();
    std::vector<int> vars(static_cast<std::size_t>(sys.num_e + sys.num_eps), 0);
    detail::tropical_rec(sys, M, vars, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// A full factorization record: both factors with multiplicities
/// applied, plus the grid and multiplicity vectors that produced it.
struct tensor_decomposition {
    factored_poly p;
    factored_poly q;
    grid_map grid;
    multiplicity_assignment mults;
};

namespace detail {

inline factored_poly apply_mults(const factored_poly& sf, const std::vector<int>& mults) {
    std::vector<factored_poly::factor> fs;
    const auto roots = sf.roots();
    for (std::size_t i = 0; i < roots.size(); ++i)
        fs.push_back({roots[i], mults[i]});
    return factored_poly(std::move(fs));
}

} // namespace detail

/// Complete factorization of an arbitrary target in factored form:
/// factor the squarefree support, then lift each squarefree class by
/// solving its multiplicity system (linear when the grid is injective,
/// tropical under clashes). Every result is verified against the input;
/// an empty list means no factorization exists.
inline std::vector<tensor_decomposition> factor(const factored_poly& r) {
    std::vector<tensor_decomposition> out;
    std::set<std::pair<factored_poly, factored_poly>> seen;
    const root_list roots(r.roots());
    for (const factorization& base : factor_squarefree(roots)) {
        const clash_system sys = clash_classes(base.p, base.q, r);
        const auto assignments =
            sys.all_singletons() ? solve_exact_system(sys) : solve_tropical_system(sys);
        for (const auto& a : assignments) {
            const factored_poly p = detail::apply_mults(base.p, a.e);
            const factored_poly q = detail::apply_mults(base.q, a.eps);
            if (tensor_factored(p, q) != r)
                throw internal_error("factor: lifted factorization fails verification");
            auto canon = canonical_class(p, q);
            if (seen.insert(canon).second)
                out.push_back({canon.first, canon.second, base.grid, a});
        }
    }
    return out;
}

/// Dense-input entry point; the roots must be rational.
inline std::vector<tensor_decomposition> factor(const dense_poly& r) {
    return factor(rational_roots(r));
}

} // namespace cfactor
