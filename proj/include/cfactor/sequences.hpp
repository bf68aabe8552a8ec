#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cfactor/dense_poly.hpp"
#include "cfactor/errors.hpp"
#include "cfactor/rational.hpp"
#include "cfactor/tensor.hpp"

namespace cfactor {

namespace detail {

/// Solution of an exact linear system A x = b: one particular solution
/// (free variables set to zero) plus a basis of the homogeneous space.
struct linear_solution {
    std::vector<rational> particular;
    std::vector<std::vector<rational>> null_basis;
};

inline std::optional<linear_solution> solve_linear(
    std::vector<std::vector<rational>> a, std::vector<rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        const rational inv = a[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const rational f = a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[row][j];
            b[r] -= f * b[row];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt; // inconsistent
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
    linear_solution sol;
    sol.particular.assign(cols, rational(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        sol.particular[static_cast<std::size_t>(pivot_col_of_row[r])] = b[r];
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<rational> h(cols, rational(0));
        h[free_col] = rational(1);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            h[static_cast<std::size_t>(pivot_col_of_row[r])] = -a[r][free_col];
        sol.null_basis.push_back(std::move(h));
    }
    return sol;
}

} // namespace detail

/// A concrete C-finite sequence: a monic recurrence operator with
/// nonzero constant term together with enough initial values.
struct cfinite_seq {
    dense_poly charpoly;
    std::vector<rational> initial_values;

    cfinite_seq(dense_poly p, std::vector<rational> init)
        : charpoly(monic(p)), initial_values(std::move(init)) {
        if (charpoly.constant_term().is_zero())
            throw zero_root_error("cfinite_seq: zero constant term");
        if (static_cast<int>(initial_values.size()) != charpoly.degree())
            throw invalid_input_error("cfinite_seq: need exactly degree-many initial values");
    }
};

/// First N terms of the sequence, exactly.
inline std::vector<rational> unroll(const cfinite_seq& seq, int N) {
    const int d = seq.charpoly.degree();
    std::vector<rational> terms = seq.initial_values;
    while (static_cast<int>(terms.size()) < N) {
        const std::size_t n = terms.size() - static_cast<std::size_t>(d);
        rational next(0);
        for (int i = 0; i < d; ++i)
            next += seq.charpoly[i] * terms[n + static_cast<std::size_t>(i)];
        terms.push_back(-next); // leading coefficient is 1
    }
    terms.resize(static_cast<std::size_t>(N));
    return terms;
}

/// Does the operator annihilate the terms at every full window?
inline bool annihilates(const dense_poly& p, const std::vector<rational>& terms) {
    const int d = p.degree();
    if (d < 0) return false;
    for (std::size_t n = 0; n + static_cast<std::size_t>(d) < terms.size(); ++n) {
        rational s(0);
        for (int i = 0; i <= d; ++i) s += p[i] * terms[n + static_cast<std::size_t>(i)];
        if (!s.is_zero()) return false;
    }
    return true;
}

/// Minimal-order monic recurrence operator with nonzero constant term
/// annihilating all given terms, found by exact linear solving over
/// increasing order. Orders up to floor(len/2) are tried, so every
/// candidate is confirmed on at least as many windows as it has unknowns.
inline dense_poly guess_recurrence(const std::vector<rational>& terms) {
    const int N = static_cast<int>(terms.size());
    if (N < 2) throw no_recurrence_error("guess_recurrence: need at least 2 terms");
    bool degenerate_seen = false;
    for (int d = 1; d <= N / 2; ++d) {
        const int windows = N - d;
        std::vector<std::vector<rational>> a(static_cast<std::size_t>(windows),
                                             std::vector<rational>(static_cast<std::size_t>(d)));
        std::vector<rational> b(static_cast<std::size_t>(windows));
        for (int n = 0; n < windows; ++n) {
            for (int i = 0; i < d; ++i)
                a[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] =
                    terms[static_cast<std::size_t>(n + i)];
            b[static_cast<std::size_t>(n)] = -terms[static_cast<std::size_t>(n + d)];
        }
        auto sol = detail::solve_linear(std::move(a), std::move(b));
        if (!sol) continue;
        std::vector<rational> c = sol->particular;
        if (c[0].is_zero()) {
            // Shift by a homogeneous solution to make the trailing
            // coefficient nonzero when the solution space allows it.
            bool fixed = false;
            for (const auto& h : sol->null_basis) {
                if (!h[0].is_zero()) {
                    for (std::size_t i = 0; i < c.size(); ++i) c[i] += h[i];
                    fixed = true;
                    break;
                }
            }
            if (!fixed) {
                degenerate_seen = true;
                continue;
            }
        }
        std::vector<rational> coeffs = std::move(c);
        coeffs.push_back(rational(1));
        return dense_poly(std::move(coeffs));
    }
    if (degenerate_seen)
        throw degenerate_recurrence_error(
            "guess_recurrence: every fitting recurrence has a zero trailing coefficient");
    throw no_recurrence_error("guess_recurrence: no recurrence of admissible order fits");
}

namespace detail {

/// Deterministic small-rational generator (engine output used directly,
/// so results do not depend on the standard library's distributions).
class value_pool {
public:
    explicit value_pool(std::uint64_t seed) : rng_(seed) {
        for (long n : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) pool_.push_back(rational(n));
        pool_.push_back(rational(1, 2));
        pool_.push_back(rational(-1, 2));
        pool_.push_back(rational(3, 2));
    }

    rational pick() { return pool_[next_index(pool_.size())]; }

    rational pick_nonzero() {
        rational v = pick();
        while (v.is_zero()) v = pick();
        return v;
    }

    std::size_t next_index(std::size_t bound) {
        return static_cast<std::size_t>(rng_() % bound);
    }

private:
    std::mt19937_64 rng_;
    std::vector<rational> pool_;
};

} // namespace detail

/// Randomized witness of the product closure: for each trial draws
/// initial values for p and q, unrolls both, and checks that the tensor
/// product operator annihilates the term-wise product at every window.
inline bool verify_product_closure(const dense_poly& p, const dense_poly& q,
                                   int trials, int N, std::uint64_t seed = 12345) {
    const dense_poly r = dense_tensor(p, q);
    const int len = N + r.degree();
    detail::value_pool pool(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<rational> ia, ib;
        for (int i = 0; i < p.degree(); ++i) ia.push_back(pool.pick());
        for (int i = 0; i < q.degree(); ++i) ib.push_back(pool.pick());
        const auto a = unroll(cfinite_seq(p, ia), len);
        const auto b = unroll(cfinite_seq(q, ib), len);
        std::vector<rational> prod(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
        if (!annihilates(r, prod)) return false;
    }
    return true;
}

/// Randomized witness of the sum closure: term-wise sums are annihilated
/// by lcm(p, q).
inline bool verify_sum_closure(const dense_poly& p, const dense_poly& q,
                               int trials, int N, std::uint64_t seed = 12345) {
    const dense_poly r = lcm(p, q);
    const int len = N + r.degree();
    detail::value_pool pool(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<rational> ia, ib;
        for (int i = 0; i < p.degree(); ++i) ia.push_back(pool.pick());
        for (int i = 0; i < q.degree(); ++i) ib.push_back(pool.pick());
        const auto a = unroll(cfinite_seq(p, ia), len);
        const auto b = unroll(cfinite_seq(q, ib), len);
        std::vector<rational> sum(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
        if (!annihilates(r, sum)) return false;
    }
    return true;
}

} // namespace cfactor
