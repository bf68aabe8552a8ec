#pragma once

#include <iosfwd>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cfactor/dense_poly.hpp"
#include "cfactor/errors.hpp"
#include "cfactor/factored_poly.hpp"
#include "cfactor/rational.hpp"

namespace cfactor {

/// Tensor product of recurrence operators in factored form. The result's
/// roots are the pairwise products phi*psi, and the multiplicity of a
/// value v is max over all pairs producing v of (e_i + eps_j - 1); a
/// least common multiple, not a plain product, so clashing pairs collapse.
inline factored_poly tensor_factored(const factored_poly& p, const factored_poly& q) {
    std::map<rational, int> mult;
    for (const auto& [phi, e] : p.factors()) {
        for (const auto& [psi, eps] : q.factors()) {
            const rational v = phi * psi;
            int& m = mult[v];
            m = std::max(m, e + eps - 1);
        }
    }
    std::vector<factored_poly::factor> fs;
    fs.reserve(mult.size());
    for (const auto& [root, m] : mult) fs.push_back({root, m});
    return factored_poly(std::move(fs));
}

/// First K power sums P_1..P_K of the roots of p, computed from the
/// coefficients alone through the Newton recurrence between elementary
/// symmetric functions and power sums.
inline std::vector<rational> power_sums(const dense_poly& p, int K) {
    if (p.is_zero()) throw invalid_input_error("power_sums: zero polynomial");
    if (p.constant_term().is_zero()) throw zero_root_error("power_sums: zero constant term");
    const dense_poly m = monic(p);
    const int d = m.degree();
    // e_k = (-1)^k * coeff(d-k), e_k = 0 for k > d.
    auto elem = [&](int k) -> rational {
        if (k > d) return rational(0);
        const rational c = m.coeff(d - k);
        return (k % 2 == 0) ? c : -c;
    };
    std::vector<rational> P;
    P.reserve(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) {
        rational s(0);
        for (int i = 1; i < k; ++i) {
            const rational term = elem(i) * P[static_cast<std::size_t>(k - i - 1)];
            s += (i % 2 == 1) ? term : -term;
        }
        if (k <= d) {
            const rational term = rational(k) * elem(k);
            s += (k % 2 == 1) ? term : -term;
        }
        P.push_back(s);
    }
    return P;
}

/// Unique monic degree-d polynomial whose first d power sums match P
/// (inverse Newton recurrence; divisions by 1..d are valid over the
/// rationals).
inline dense_poly poly_from_power_sums(const std::vector<rational>& P, int d) {
    if (d < 0 || static_cast<int>(P.size()) < d)
        throw invalid_input_error("poly_from_power_sums: need at least d power sums");
    std::vector<rational> e(static_cast<std::size_t>(d) + 1, rational(0));
    e[0] = rational(1);
    for (int k = 1; k <= d; ++k) {
        rational s(0);
        for (int i = 1; i <= k; ++i) {
            const rational term = P[static_cast<std::size_t>(i - 1)] * e[static_cast<std::size_t>(k - i)];
            s += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(k)] = s / rational(k);
    }
    std::vector<rational> cs(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        const rational& ek = e[static_cast<std::size_t>(k)];
        cs[static_cast<std::size_t>(d - k)] = (k % 2 == 0) ? ek : -ek;
    }
    return dense_poly(std::move(cs));
}

/// Coefficient-only tensor multiplication: the monic degree-(m*n)
/// polynomial whose root multiset is ALL pairwise products counted with
/// multiplicity (the full product, not the collapsed lcm). Uses the
/// identity P_k(result) = P_k(p) * P_k(q) for k = 1..m*n.
inline dense_poly mul_coeff(const dense_poly& p, const dense_poly& q) {
    if (p.is_zero() || q.is_zero()) throw invalid_input_error("mul_coeff: zero polynomial");
    if (p.constant_term().is_zero() || q.constant_term().is_zero())
        throw zero_root_error("mul_coeff: zero constant term");
    const int K = p.degree() * q.degree();
    if (K == 0) return dense_poly::one();
    const auto Pp = power_sums(p, K);
    const auto Pq = power_sums(q, K);
    std::vector<rational> prod(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) prod[static_cast<std::size_t>(k)] =
        Pp[static_cast<std::size_t>(k)] * Pq[static_cast<std::size_t>(k)];
    return poly_from_power_sums(prod, K);
}

/// Coefficient-only tensor product with lcm semantics for arbitrary (not
/// necessarily squarefree, not necessarily rational-rooted) operators:
/// split both sides into squarefree layers, tensor the layers through
/// power sums, and recombine taking the maximal exponent per factor.
inline dense_poly dense_tensor(const dense_poly& p, const dense_poly& q) {
    if (p.is_zero() || q.is_zero()) throw invalid_input_error("dense_tensor: zero polynomial");
    if (p.constant_term().is_zero() || q.constant_term().is_zero())
        throw zero_root_error("dense_tensor: zero constant term");
    const auto ps = squarefree_decomposition(p);
    const auto qs = squarefree_decomposition(q);
    // result = lcm over layers of sf(p_i (x) q_j)^(i+j-1)
    dense_poly result = dense_poly::one();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].degree() <= 0) continue;
        for (std::size_t j = 0; j < qs.size(); ++j) {
            if (qs[j].degree() <= 0) continue;
            const dense_poly layer = squarefree_part(mul_coeff(ps[i], qs[j]));
            dense_poly powed = dense_poly::one();
            const int exp = static_cast<int>(i + j) + 1; // mults are i+1, j+1
            for (int t = 0; t < exp; ++t) powed = powed * layer;
            result = lcm(result, powed);
        }
    }
    return result;
}

/// How many distinct roots occur with each multiplicity: sorted
/// (multiplicity, count) pairs with positive counts; the weighted sum of
/// entries equals the degree.
struct repetition_profile {
    std::vector<std::pair<int, int>> pairs; // (multiplicity, count), ascending

    friend bool operator==(const repetition_profile&, const repetition_profile&) = default;

    std::string str() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i) os << ", ";
            os << "mult " << pairs[i].first << " x" << pairs[i].second;
        }
        os << '}';
        return os.str();
    }
};

inline std::ostream& operator<<(std::ostream& os, const repetition_profile& p) {
    return os << p.str();
}

/// Repetition profile of r computed by iterated gcds (squarefree
/// decomposition); no root finding.
inline repetition_profile profile_of(const dense_poly& r) {
    repetition_profile prof;
    const auto layers = squarefree_decomposition(r);
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const int count = layers[i].degree();
        if (count > 0) prof.pairs.push_back({static_cast<int>(i) + 1, count});
    }
    return prof;
}

enum class factorability { not_factorable, possibly_factorable };

struct test_fact_result {
    factorability verdict;
    repetition_profile profile;
};

/// Fast factorability screen. Forms R = mul_coeff(r, reverse(r)), whose
/// roots are the pairwise ratios of roots of r; R always carries the
/// factor (x-1)^d from the d self-ratios. If the repetition profile of R
/// is exactly the generic one (one root of multiplicity d and d^2 - d
/// simple roots), no factorization can exist. Excess repetition is
/// necessary but not sufficient, so the positive verdict is only
/// "possibly factorable".
inline test_fact_result test_fact(const dense_poly& r) {
    if (r.is_zero() || r.degree() < 2)
        throw invalid_input_error("test_fact: need degree >= 2");
    if (r.constant_term().is_zero()) throw zero_root_error("test_fact: zero constant term");
    if (!is_squarefree(r))
        throw invalid_input_error("test_fact: input must be squarefree (pass the squarefree part)");
    const dense_poly m = monic(r);
    const int d = m.degree();
    const dense_poly R = mul_coeff(m, reverse(m));
    repetition_profile prof = profile_of(R);
    repetition_profile generic;
    generic.pairs.push_back({1, d * d - d});
    generic.pairs.push_back({d, 1});
    const auto verdict = (prof == generic) ? factorability::not_factorable
                                           : factorability::possibly_factorable;
    return {verdict, std::move(prof)};
}

} // namespace cfactor
