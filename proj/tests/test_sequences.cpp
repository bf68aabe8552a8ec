#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <cfactor/factored_poly.hpp>
#include <cfactor/sequences.hpp>
#include <cfactor/tensor.hpp>

using cfactor::cfinite_seq;
using cfactor::dense_poly;
using cfactor::factored_poly;
using cfactor::rational;

namespace {

std::vector<rational> rats(std::initializer_list<long> xs) {
    std::vector<rational> out;
    for (long x : xs) out.push_back(rational(x));
    return out;
}

} // namespace

TEST_CASE("unroll reproduces known sequences") {
    const cfinite_seq fib(dense_poly::from_strings({"-1", "-1", "1"}), rats({0, 1}));
    CHECK(cfactor::unroll(fib, 7) == rats({0, 1, 1, 2, 3, 5, 8}));

    const cfinite_seq doubling(dense_poly::from_strings({"-2", "1"}), rats({1}));
    CHECK(cfactor::unroll(doubling, 4) == rats({1, 2, 4, 8}));

    // 3^n + 4^n + 6^n + 8^n
    const cfinite_seq quartic(dense_poly::from_strings({"576", "-504", "158", "-21", "1"}),
                              rats({4, 21, 125, 819}));
    CHECK(cfactor::unroll(quartic, 6) == rats({4, 21, 125, 819, 5729, 41811}));

    // Truncation below the initial segment.
    CHECK(cfactor::unroll(fib, 1) == rats({0}));
}

TEST_CASE("sequence construction validates the operator") {
    CHECK_THROWS_AS(cfinite_seq(dense_poly::from_strings({"0", "1"}), rats({1})),
                    cfactor::zero_root_error);
    CHECK_THROWS_AS(cfinite_seq(dense_poly::from_strings({"-1", "1"}), rats({1, 2})),
                    cfactor::invalid_input_error);
}

TEST_CASE("guess recovers known recurrences") {
    CHECK(cfactor::guess_recurrence(rats({0, 1, 1, 2, 3, 5, 8, 13, 21, 34})) ==
          dense_poly::from_strings({"-1", "-1", "1"}));
    CHECK(cfactor::guess_recurrence(rats({1, 2, 4, 8, 16, 32})) ==
          dense_poly::from_strings({"-2", "1"}));
    CHECK(cfactor::guess_recurrence(
              rats({4, 21, 125, 819, 5729, 41811, 313625, 2395659})) ==
          dense_poly::from_strings({"576", "-504", "158", "-21", "1"}));
}

TEST_CASE("guess error paths") {
    // No admissible order fits a spike.
    CHECK_THROWS_AS(cfactor::guess_recurrence(rats({0, 0, 0, 1, 0, 0})),
                    cfactor::no_recurrence_error);
    // Every fit has a zero trailing coefficient: terms follow 2^n only
    // from n = 1 on, so the minimal annihilator is x^2 - 2x.
    CHECK_THROWS_AS(cfactor::guess_recurrence(rats({5, 2, 4, 8})),
                    cfactor::degenerate_recurrence_error);
}

TEST_CASE("guess of an unrolled sequence divides its operator") {
    std::mt19937_64 rng(47);
    const std::vector<rational> pool = {rational(1),  rational(-1),   rational(2),
                                        rational(-2), rational(1, 2), rational(3)};
    for (int trial = 0; trial < 40; ++trial) {
        std::set<rational> roots;
        const int deg = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(roots.size()) < deg) roots.insert(pool[rng() % pool.size()]);
        const dense_poly p = cfactor::expand(
            factored_poly::from_roots({roots.begin(), roots.end()}));
        std::vector<rational> init;
        for (int i = 0; i < deg; ++i) init.push_back(rational(static_cast<long>(rng() % 7) - 3));
        const auto terms = cfactor::unroll(cfinite_seq(p, init), 2 * deg + 4);
        const bool all_zero = std::all_of(terms.begin(), terms.end(),
                                          [](const rational& t) { return t.is_zero(); });
        if (all_zero) continue; // any operator annihilates the zero sequence
        try {
            const dense_poly guessed = cfactor::guess_recurrence(terms);
            CHECK(cfactor::annihilates(guessed, terms));
            CHECK(cfactor::divides(guessed, p));
        } catch (const cfactor::degenerate_recurrence_error&) {
            // A degenerate start can force a zero trailing coefficient on
            // every admissible fit; nothing to check.
        }
    }
}

TEST_CASE("product closure witness") {
    // 2^n * 3^n = 6^n.
    CHECK(cfactor::verify_product_closure(dense_poly::from_strings({"-2", "1"}),
                                          dense_poly::from_strings({"-3", "1"}), 5, 10));
    // Fibonacci squared satisfies the degree-3 tensor product operator.
    const dense_poly fib = dense_poly::from_strings({"-1", "-1", "1"});
    CHECK(cfactor::verify_product_closure(fib, fib, 5, 20));
    // Negative control: x-5 does not annihilate 6^n.
    const auto a = cfactor::unroll(cfinite_seq(dense_poly::from_strings({"-6", "1"}), rats({1})), 10);
    CHECK_FALSE(cfactor::annihilates(dense_poly::from_strings({"-5", "1"}), a));
}

TEST_CASE("sum closure witness") {
    CHECK(cfactor::verify_sum_closure(dense_poly::from_strings({"-2", "1"}),
                                      dense_poly::from_strings({"-3", "1"}), 5, 10));
    const dense_poly fib = dense_poly::from_strings({"-1", "-1", "1"});
    CHECK(cfactor::verify_sum_closure(fib, dense_poly::from_strings({"-2", "1"}), 5, 15));
}

TEST_CASE("closure witnesses over random operator pairs") {
    std::mt19937_64 rng(53);
    const std::vector<rational> pool = {rational(1),  rational(-1), rational(2), rational(-2),
                                        rational(3),  rational(1, 2), rational(-3)};
    for (int trial = 0; trial < 25; ++trial) {
        std::set<rational> ra, rb;
        while (static_cast<int>(ra.size()) < 1 + static_cast<int>(rng() % 3))
            ra.insert(pool[rng() % pool.size()]);
        while (static_cast<int>(rb.size()) < 1 + static_cast<int>(rng() % 3))
            rb.insert(pool[rng() % pool.size()]);
        const dense_poly p = cfactor::expand(factored_poly::from_roots({ra.begin(), ra.end()}));
        const dense_poly q = cfactor::expand(factored_poly::from_roots({rb.begin(), rb.end()}));
        CHECK(cfactor::verify_product_closure(p, q, 3, 12, 1000 + trial));
        CHECK(cfactor::verify_sum_closure(p, q, 3, 12, 2000 + trial));
    }
}
