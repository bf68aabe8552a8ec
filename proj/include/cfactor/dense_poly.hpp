#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfactor/errors.hpp"
#include "cfactor/rational.hpp"

namespace cfactor {

/// Dense univariate polynomial over exact rationals, coefficients in
/// ascending degree order. The zero polynomial has an empty coefficient
/// vector; otherwise the leading coefficient is nonzero.
class dense_poly {
public:
    dense_poly() = default;

    explicit dense_poly(std::vector<rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    dense_poly(std::initializer_list<rational> coeffs)
        : coeffs_(coeffs) {
        trim();
    }

    /// Coefficients given as "a" / "a/b" strings, ascending degree.
    static dense_poly from_strings(std::initializer_list<std::string_view> coeffs) {
        std::vector<rational> cs;
        cs.reserve(coeffs.size());
        for (auto s : coeffs) cs.push_back(rational::parse(s));
        return dense_poly(std::move(cs));
    }

    static dense_poly zero() { return dense_poly(); }
    static dense_poly one() { return dense_poly({rational(1)}); }

    /// x - root
    static dense_poly linear(const rational& root) {
        return dense_poly({-root, rational(1)});
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<rational>& coeffs() const { return coeffs_; }

    const rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    rational coeff(int k) const {
        if (k < 0 || k > degree()) return rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    rational leading() const {
        if (is_zero()) throw invalid_input_error("dense_poly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    rational constant_term() const { return coeff(0); }

    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

    rational eval(const rational& x) const {
        rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const dense_poly& a, const dense_poly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend dense_poly operator+(const dense_poly& a, const dense_poly& b) {
        std::vector<rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            cs[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        }
        return dense_poly(std::move(cs));
    }

    friend dense_poly operator-(const dense_poly& a, const dense_poly& b) {
        std::vector<rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            cs[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        }
        return dense_poly(std::move(cs));
    }

    friend dense_poly operator*(const dense_poly& a, const dense_poly& b) {
        if (a.is_zero() || b.is_zero()) return dense_poly();
        std::vector<rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return dense_poly(std::move(cs));
    }

    friend dense_poly operator*(const rational& s, const dense_poly& p) {
        if (s.is_zero()) return dense_poly();
        std::vector<rational> cs = p.coeffs_;
        for (auto& c : cs) c *= s;
        return dense_poly(std::move(cs));
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ',';
            os << coeffs_[i].str();
        }
        os << ']';
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const dense_poly& p) {
    return os << p.str();
}

inline dense_poly monic(const dense_poly& p) {
    if (p.is_zero()) throw invalid_input_error("monic: zero polynomial");
    if (p.is_monic()) return p;
    return p.leading().inverse() * p;
}

/// Quotient and remainder of exact polynomial division.
inline std::pair<dense_poly, dense_poly> divrem(const dense_poly& a, const dense_poly& b) {
    if (b.is_zero()) throw invalid_input_error("divrem: division by zero polynomial");
    std::vector<rational> rem(a.coeffs());
    const int db = b.degree();
    const rational lead_inv = b.leading().inverse();
    if (a.degree() < db) return {dense_poly(), a};
    std::vector<rational> quot(static_cast<std::size_t>(a.degree() - db + 1), rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        rational c = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        quot[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(k + i)] -= c * b.coeff(i);
        }
    }
    return {dense_poly(std::move(quot)), dense_poly(std::move(rem))};
}

/// Exact division; throws if b does not divide a.
inline dense_poly divexact(const dense_poly& a, const dense_poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw internal_error("divexact: division not exact");
    return q;
}

inline bool divides(const dense_poly& b, const dense_poly& a) {
    if (b.is_zero()) return a.is_zero();
    return divrem(a, b).second.is_zero();
}

inline dense_poly derivative(const dense_poly& p) {
    if (p.degree() <= 0) return dense_poly();
    std::vector<rational> cs(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k) {
        cs[static_cast<std::size_t>(k - 1)] = rational(k) * p[k];
    }
    return dense_poly(std::move(cs));
}

namespace detail {

// Integer polynomials, ascending order, for the primitive remainder
// sequence; keeps coefficient growth tame where rational Euclid blows up.
using zpoly = std::vector<mpz_class>;

inline void ztrim(zpoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

/// Strips the content and normalizes the leading coefficient positive.
inline void zprimitive(zpoly& v) {
    ztrim(v);
    if (v.empty()) return;
    mpz_class content = 0;
    for (const auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (v.back() < 0) content = -content;
    if (content != 1)
        for (auto& c : v) c /= content;
}

/// Clears denominators and strips the content.
inline zpoly zform(const dense_poly& p) {
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class den = c.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
        den_lcm = den_lcm / g * den;
    }
    zpoly v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.numerator() * (den_lcm / c.denominator()));
    zprimitive(v);
    return v;
}

/// Pseudo-remainder: a scalar multiple of (a mod b) staying integral.
inline zpoly zpseudo_rem(zpoly a, const zpoly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const mpz_class lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] *= b.back();
        for (std::size_t i = 0; i < db; ++i) a[shift + i] -= lead * b[i];
        a.pop_back();
        ztrim(a);
    }
    return a;
}

/// Does b divide a over the integers? Exact long division that bails on
/// the first non-integral quotient coefficient.
inline bool zdivides(const zpoly& b, zpoly a) {
    if (b.empty()) return a.empty();
    while (!a.empty() && a.size() >= b.size()) {
        if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
        const mpz_class q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        ztrim(a);
    }
    return a.empty();
}

// Word-size modular arithmetic for the modular gcd images.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

using modpoly = std::vector<std::uint64_t>;

inline void mtrim(modpoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline modpoly zreduce(const zpoly& v, std::uint64_t p) {
    modpoly out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t r = mpz_fdiv_ui(v[i].get_mpz_t(), p);
        out[i] = r;
    }
    mtrim(out);
    return out;
}

/// Monic gcd over GF(p).
inline modpoly modgcd(modpoly a, modpoly b, std::uint64_t p) {
    while (!b.empty()) {
        // a mod b
        const std::uint64_t inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            const std::uint64_t q = mulmod(a.back(), inv, p);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                const std::uint64_t t = mulmod(q, b[i], p);
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
            mtrim(a);
        }
        std::swap(a, b);
    }
    const std::uint64_t inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

/// Primitive gcd of primitive integer polynomials by modular images with
/// coefficient recovery and an exact division check; falls back to the
/// primitive pseudo-remainder sequence if the images keep failing.
inline zpoly zgcd(const zpoly& a, const zpoly& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() == 1 || b.size() == 1) return {mpz_class(1)};
    mpz_class lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

    mpz_class prime_cursor = (mpz_class(1) << 62);
    mpz_class modulus = 0;
    zpoly candidate;
    std::size_t best_deg = 0;
    for (int attempts = 0; attempts < 200; ++attempts) {
        mpz_nextprime(prime_cursor.get_mpz_t(), prime_cursor.get_mpz_t());
        const std::uint64_t p = prime_cursor.get_ui();
        if (mpz_divisible_ui_p(a.back().get_mpz_t(), p) ||
            mpz_divisible_ui_p(b.back().get_mpz_t(), p))
            continue;
        const modpoly gp = modgcd(zreduce(a, p), zreduce(b, p), p);
        if (gp.size() == 1) return {mpz_class(1)}; // coprime image => coprime
        if (!candidate.empty() && gp.size() - 1 > best_deg) continue; // unlucky prime
        // Scale the monic image so its leading coefficient matches the
        // recoverable leading coefficient gcd(lc a, lc b).
        const std::uint64_t scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
        zpoly image(gp.size());
        for (std::size_t i = 0; i < gp.size(); ++i)
            image[i] = mpz_class(static_cast<unsigned long>(mulmod(gp[i], scale, p)));
        if (candidate.empty() || gp.size() - 1 < best_deg) {
            best_deg = gp.size() - 1;
            modulus = p;
            candidate = std::move(image);
        } else {
            // Coefficient-wise Chinese remaindering into (-Mp/2, Mp/2].
            mpz_class minv;
            mpz_class pz(static_cast<unsigned long>(p));
            mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            const mpz_class new_modulus = modulus * pz;
            for (std::size_t i = 0; i < candidate.size(); ++i) {
                mpz_class delta = (image[i] - candidate[i]) * minv;
                mpz_class t = delta % pz;
                if (t < 0) t += pz;
                candidate[i] += modulus * t;
                if (2 * candidate[i] > new_modulus) candidate[i] -= new_modulus;
            }
            modulus = new_modulus;
        }
        zpoly trial = candidate;
        zprimitive(trial);
        if (!trial.empty() && zdivides(trial, a) && zdivides(trial, b)) return trial;
    }
    // Fallback: primitive pseudo-remainder sequence.
    zpoly x = a, y = b;
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        zpoly r = zpseudo_rem(std::move(x), y);
        zprimitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

} // namespace detail

/// Monic greatest common divisor, computed over the integers through
/// modular images (with an exact division check on the recovered
/// candidate, so the result is always certified).
inline dense_poly gcd(const dense_poly& a, const dense_poly& b) {
    if (a.is_zero() && b.is_zero())
        throw invalid_input_error("gcd: both polynomials are zero");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    const detail::zpoly g = detail::zgcd(detail::zform(a), detail::zform(b));
    std::vector<rational> cs;
    cs.reserve(g.size());
    for (const auto& c : g) cs.push_back(rational(c, g.back()));
    return dense_poly(std::move(cs));
}

/// Monic least common multiple; lcm * gcd = a * b up to a scalar.
inline dense_poly lcm(const dense_poly& a, const dense_poly& b) {
    if (a.is_zero() || b.is_zero())
        throw invalid_input_error("lcm: zero polynomial");
    return monic(divexact(a * b, gcd(a, b)));
}

/// Monic product of all distinct irreducible factors: r / gcd(r, r').
/// No root finding involved.
inline dense_poly squarefree_part(const dense_poly& r) {
    if (r.is_zero()) throw invalid_input_error("squarefree_part: zero polynomial");
    if (r.degree() == 0) return dense_poly::one();
    return monic(divexact(r, gcd(r, derivative(r))));
}

inline bool is_squarefree(const dense_poly& r) {
    if (r.is_zero()) return false;
    if (r.degree() == 0) return true;
    return gcd(r, derivative(r)).degree() == 0;
}

/// Squarefree decomposition by iterated gcd: returns monic s_1, s_2, ...
/// with r = lc * prod s_i^i and each s_i squarefree (s_i collects the
/// roots of multiplicity exactly i). Trailing entries may be constant 1.
inline std::vector<dense_poly> squarefree_decomposition(const dense_poly& r) {
    if (r.is_zero()) throw invalid_input_error("squarefree_decomposition: zero polynomial");
    std::vector<dense_poly> result;
    if (r.degree() == 0) return result;
    // g_0 = monic r, g_i = gcd(g_{i-1}, g_{i-1}'); h_i = g_{i-1} / g_i is
    // the product of roots with multiplicity >= i, so s_i = h_i / h_{i+1}.
    std::vector<dense_poly> g;
    g.push_back(monic(r));
    while (g.back().degree() > 0) {
        g.push_back(gcd(g.back(), derivative(g.back())));
    }
    std::vector<dense_poly> h;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) h.push_back(divexact(g[i], g[i + 1]));
    h.push_back(dense_poly::one());
    for (std::size_t i = 0; i + 1 < h.size(); ++i) result.push_back(divexact(h[i], h[i + 1]));
    return result;
}

/// Reversal x^d p(1/x), normalized to monic. Requires a nonzero constant
/// term; the result's roots are the inverses of p's roots.
inline dense_poly reverse(const dense_poly& p) {
    if (p.is_zero() || p.constant_term().is_zero())
        throw zero_root_error("reverse: zero constant term");
    std::vector<rational> cs(p.coeffs().rbegin(), p.coeffs().rend());
    return monic(dense_poly(std::move(cs)));
}

} // namespace cfactor
