#pragma once

#include <algorithm>
#include <compare>
#include <iosfwd>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cfactor/dense_poly.hpp"
#include "cfactor/errors.hpp"
#include "cfactor/rational.hpp"

namespace cfactor {

/// Multiset of (nonzero root, positive multiplicity) pairs in canonical
/// ascending root order, so equal values compare bit-identically.
class factored_poly {
public:
    struct factor {
        rational root;
        int mult = 1;
        friend bool operator==(const factor&, const factor&) = default;
        friend auto operator<=>(const factor& a, const factor& b) {
            if (auto c = a.root <=> b.root; c != 0) return c;
            return a.mult <=> b.mult;
        }
    };

    factored_poly() = default;

    explicit factored_poly(std::vector<factor> factors) {
        std::map<rational, int> merged;
        for (const auto& f : factors) {
            if (f.root.is_zero()) throw zero_root_error("factored_poly: zero root");
            if (f.mult <= 0) throw invalid_input_error("factored_poly: nonpositive multiplicity");
            merged[f.root] += f.mult;
        }
        for (auto& [root, mult] : merged) factors_.push_back({root, mult});
    }

    static factored_poly from_roots(const std::vector<rational>& roots) {
        std::vector<factor> fs;
        fs.reserve(roots.size());
        for (const auto& r : roots) fs.push_back({r, 1});
        return factored_poly(std::move(fs));
    }

    static factored_poly from_roots(const std::vector<rational>& roots,
                                    const std::vector<int>& mults) {
        if (roots.size() != mults.size())
            throw invalid_input_error("factored_poly: roots/multiplicities length mismatch");
        std::vector<factor> fs;
        fs.reserve(roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) fs.push_back({roots[i], mults[i]});
        return factored_poly(std::move(fs));
    }

    const std::vector<factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t distinct_roots() const { return factors_.size(); }

    int degree() const {
        int d = 0;
        for (const auto& f : factors_) d += f.mult;
        return d;
    }

    int multiplicity_of(const rational& root) const {
        for (const auto& f : factors_)
            if (f.root == root) return f.mult;
        return 0;
    }

    std::vector<rational> roots() const {
        std::vector<rational> rs;
        rs.reserve(factors_.size());
        for (const auto& f : factors_) rs.push_back(f.root);
        return rs;
    }

    /// Same roots, all multiplicities one.
    factored_poly support() const {
        factored_poly s;
        s.factors_ = factors_;
        for (auto& f : s.factors_) f.mult = 1;
        return s;
    }

    bool is_squarefree() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const factor& f) { return f.mult == 1; });
    }

    /// Roots multiplied by a nonzero scale; multiplicities unchanged.
    factored_poly scaled(const rational& scale) const {
        if (scale.is_zero()) throw invalid_input_error("factored_poly: zero scale");
        std::vector<factor> fs = factors_;
        for (auto& f : fs) f.root = f.root * scale;
        return factored_poly(std::move(fs));
    }

    friend bool operator==(const factored_poly&, const factored_poly&) = default;
    friend auto operator<=>(const factored_poly& a, const factored_poly& b) {
        return std::lexicographical_compare_three_way(
            a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end());
    }

    std::string str() const {
        if (factors_.empty()) return "1";
        std::ostringstream os;
        for (const auto& f : factors_) {
            os << "(x";
            if (f.root.sign() >= 0) os << '-' << f.root.str();
            else os << '+' << (-f.root).str();
            os << ')';
            if (f.mult > 1) os << '^' << f.mult;
        }
        return os.str();
    }

private:
    std::vector<factor> factors_;
};

inline std::ostream& operator<<(std::ostream& os, const factored_poly& f) {
    return os << f.str();
}

/// Monic expansion prod (x - root)^mult with exact coefficients.
inline dense_poly expand(const factored_poly& f) {
    dense_poly p = dense_poly::one();
    for (const auto& [root, mult] : f.factors()) {
        const dense_poly lin = dense_poly::linear(root);
        for (int i = 0; i < mult; ++i) p = p * lin;
    }
    return p;
}

namespace detail {

/// All positive divisors of n != 0 by trial division; ascending order.
inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = ::abs(n);
    std::vector<std::pair<mpz_class, int>> primes;
    auto push = [&](const mpz_class& p, int e) { primes.push_back({p, e}); };
    for (mpz_class d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            push(d, e);
        }
    }
    if (n > 1) push(n, 1);
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [p, e] : primes) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Clears denominators and content: a primitive integer-coefficient
/// polynomial that is a scalar multiple of p.
inline std::vector<mpz_class> primitive_integer_form(const dense_poly& p) {
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class den = c.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
        den_lcm = den_lcm / g * den;
    }
    std::vector<mpz_class> ints;
    ints.reserve(p.coeffs().size());
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : ints) v /= content;
    return ints;
}

} // namespace detail

/// Full factorization of r over the rationals, found with the rational
/// root theorem on the primitive integer form and repeated exact
/// division for multiplicities. Throws not_split_over_rationals_error if
/// any root is irrational and zero_root_error if the constant term is 0.
inline factored_poly rational_roots(const dense_poly& r) {
    if (r.is_zero()) throw invalid_input_error("rational_roots: zero polynomial");
    if (r.constant_term().is_zero()) throw zero_root_error("rational_roots: zero constant term");
    std::vector<factored_poly::factor> found;
    dense_poly rem = monic(r);
    if (rem.degree() > 0) {
        const auto ints = detail::primitive_integer_form(rem);
        const auto nums = detail::positive_divisors(ints.front());
        const auto dens = detail::positive_divisors(ints.back());
        for (const auto& a : nums) {
            for (const auto& b : dens) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                if (g != 1) continue; // already covered in lowest terms
                for (int sign : {+1, -1}) {
                    const rational cand(sign > 0 ? a : mpz_class(-a), b);
                    if (!rem.eval(cand).is_zero()) continue;
                    const dense_poly lin = dense_poly::linear(cand);
                    int mult = 0;
                    for (;;) {
                        auto [q, rr] = divrem(rem, lin);
                        if (!rr.is_zero()) break;
                        rem = std::move(q);
                        ++mult;
                    }
                    if (mult > 0) found.push_back({cand, mult});
                }
            }
            if (rem.degree() == 0) break;
        }
    }
    if (rem.degree() != 0)
        throw not_split_over_rationals_error(
            "rational_roots: polynomial does not split over the rationals");
    return factored_poly(std::move(found));
}

} // namespace cfactor
