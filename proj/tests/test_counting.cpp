#include <doctest.h>

#include "oracles.hpp"
#include "peakmod/counting.hpp"
#include "peakmod/enumeration.hpp"

using namespace peakmod;

namespace {

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

oracle::Tally terms(const Polynomial& p) {
    oracle::Tally t;
    for (const auto& [e, c] : p.terms()) t[e] = static_cast<long>(c);
    return t;
}

const FamilySpec motzkin = FamilySpec::make(1, {{1, 1}}, 0);
const FamilySpec schroeder = FamilySpec::make(1, {{2, 1}}, 0);

}  // namespace

TEST_CASE("binomials and integrality") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(60, 30) == oracle::binom(60, 30));
    CHECK(require_integer(Rational(6, 3), "x") == 2);
    CHECK_THROWS_AS(require_integer(Rational(1, 2), "x"), Error);
}

TEST_CASE("joint counts") {
    CHECK(count_joint(2, 3, v({0, 1, 1})) == 3);
    CHECK(count_joint(2, 3, v({2, 0, 0})) == 1);
    CHECK(count_joint(1, 4, v({1, 2})) == 6);
    CHECK(count_joint(2, 3, v({1, 1, 1})) == 0);
    CHECK_THROWS_AS(count_joint(2, 3, v({1, 1})), Error);
    CHECK_THROWS_AS(count_joint(2, 0, v({0, 0, 0})), Error);
}

TEST_CASE("marginal and peak counts") {
    CHECK(count_marginal(2, 3, 0) == 5);
    CHECK(count_marginal(2, 3, 1) == 6);
    CHECK(count_marginal(2, 3, 2) == 1);
    for (int k = 1; k <= 4; ++k) {
        for (int n = 1; n <= 8; ++n) {
            BigCount total = 0;
            for (int r = 0; r < n; ++r) {
                total += count_marginal(k, n, r);
                CHECK(count_marginal(k, n, r) == count_pk(k, n, n - 1 - r));
            }
            CHECK(total == fuss_catalan(k, n));
        }
    }
}

TEST_CASE("Fuss-Catalan") {
    CHECK(fuss_catalan(1, 4) == 14);
    CHECK(fuss_catalan(2, 3) == 12);
    CHECK(fuss_catalan(3, 0) == 1);
    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n <= 10; ++n) CHECK(fuss_catalan(k, n) == oracle::dyck_count(k, n));
}

TEST_CASE("Narayana numbers") {
    CHECK(narayana(4, 2) == 6);
    CHECK(narayana(3, 2) == 3);
    CHECK_THROWS_AS(narayana(3, 0), Error);
    CHECK_THROWS_AS(narayana(3, 4), Error);
    CHECK_THROWS_AS(narayana(0, 0), Error);
    for (int n = 1; n <= 12; ++n) {
        CHECK(narayana(n, 1) == 1);
        for (int r = 1; r <= n; ++r) CHECK(narayana(n, r) == narayana(n, n + 1 - r));
    }
    // against total peak counts on Dyck paths
    for (int n = 1; n <= 8; ++n) {
        std::map<int, long> peaks;
        for (const auto& s : oracle::all_paths(1, {}, 0, false, n)) ++peaks[oracle::stats(s, 1, false, true)[0]];
        for (int r = 1; r <= n; ++r) CHECK(narayana(n, r) == peaks[r]);
    }
}

TEST_CASE("closed forms against brute force") {
    for (int k = 1; k <= 3; ++k) {
        for (int n = 1; n <= 4; ++n) {
            auto tally = oracle::tally(oracle::all_paths(k, {}, 0, false, n), k, false, false);
            for (const auto& [r, count] : tally) {
                CHECK(count_joint(k, n, r) == count);
                CHECK(lagrange_coefficient(k, n, r) == count);
            }
            std::map<int, long> pk;
            for (const auto& [r, count] : tally) {
                int s = 0;
                for (int i = 0; i < k; ++i) s += r[static_cast<std::size_t>(i)];
                pk[s] += count;
            }
            for (int r = 0; r < n; ++r) CHECK(count_pk(k, n, r) == pk[r]);
        }
    }
    CHECK(lagrange_coefficient(2, 3, v({0, 1, 1})) == 3);
    CHECK(lagrange_coefficient(1, 2, v({1, 0})) == 1);
    CHECK(lagrange_coefficient(2, 3, v({1, 1, 1})) == 0);
}

TEST_CASE("ballot closed form") {
    CHECK(count_ballot_joint(2, 0, 1, 2, v({1, 1, 0})) == 3);
    CHECK(count_ballot_joint(2, 0, 1, 2, v({0, 0, 2})) == 0);
    CHECK(count_ballot_joint(2, 0, 1, 2, v({1, 1, 1})) == 0);
    for (int k = 1; k <= 3; ++k) {
        for (int n = 1; n <= 5; ++n) {
            auto tally = oracle::tally(oracle::all_paths(k, {}, 0, false, n), k, false, false);
            for (const auto& [r, count] : tally) {
                auto s = r;
                ++s[0];
                CHECK(count_ballot_joint(k, 0, 0, n, s) == count);
            }
        }
        for (int m = 1; m <= 3; ++m) {
            for (int n = 1; n <= 3; ++n) {
                auto tally = oracle::tally(oracle::all_paths(k, {}, m, false, n), k, false, true);
                BigCount total = 0;
                for (const auto& [s, count] : tally) {
                    CHECK(count_ballot_joint(k, m / k, m % k, n, s) == count);
                    total += count_ballot_joint(k, m / k, m % k, n, s);
                }
                CHECK(total == static_cast<long>(oracle::all_paths(k, {}, m, false, n).size()));
            }
        }
    }
}

TEST_CASE("solve_f") {
    auto f = solve_f(2, 4);
    CHECK(f[0].is_zero());
    CHECK(f[1].to_string() == "1");
    CHECK(f[3].to_string() == "1*q0^2 + 3*q0*q1 + 3*q0*q2 + 1*q1^2 + 3*q1*q2 + 1*q2^2");
    for (int k = 1; k <= 2; ++k) {
        auto g = solve_f(k, 5);
        auto plain = solve_f(k, 5, false);
        for (int n = 1; n <= 5; ++n) {
            CHECK(terms(g[n]) == oracle::tally(oracle::all_paths(k, {}, 0, false, n), k, false, false));
            CHECK(plain[n].sum() == fuss_catalan(k, n));
            CHECK(plain[n].terms().size() == 1);
            for (const auto& sigma : all_permutations(k + 1)) CHECK(g[n].permuted(sigma) == g[n]);
        }
    }
}

TEST_CASE("solve_f_kac") {
    auto m = solve_f_kac(motzkin, 8);
    CHECK(m[0].is_zero());
    CHECK(m[1].to_string() == "1");
    CHECK(m[5].to_string() == "1*q0^2 + 7*q0*q1 + 5*q0 + 1*q1^2 + 5*q1 + 2");
    auto s = solve_f_kac(schroeder, 8);
    CHECK(s[2].to_string() == "2");
    for (const auto& spec : {motzkin, schroeder, FamilySpec::make(2, {{1, 1}}, 0)}) {
        auto f = solve_f_kac(spec, 8);
        for (int len = 1; len <= 8; ++len) {
            CHECK(terms(f[len]) == oracle::tally(oracle::all_paths(spec.k, spec.levels, 0, true, len), spec.k, true, false));
            for (const auto& sigma : all_permutations(spec.k + 1)) CHECK(f[len].permuted(sigma) == f[len]);
        }
    }
    // without levels the length-graded equation is the down-size one with x^{k+1}
    auto pure = solve_f_kac(FamilySpec::k_dyck(2), 9);
    auto f = solve_f(2, 3);
    for (int n = 0; n <= 3; ++n) CHECK(pure[3 * n] == f[n]);
}

TEST_CASE("solve_g") {
    auto g = solve_g(2, 1, 4);
    CHECK(g[2].sum() == 7);
    const std::vector<int> swap01{2, 1, 3};
    CHECK(g[2].permuted(swap01) == g[2]);
    for (int k = 1; k <= 3; ++k) {
        for (int m = 0; m <= 4; ++m) {
            auto gm = solve_g(k, m, 3);
            for (int n = 0; n <= 3; ++n) {
                CHECK(terms(gm[n]) == oracle::tally(oracle::all_paths(k, {}, m, false, n), k, false, true));
            }
        }
    }
}

TEST_CASE("solve_g_kac") {
    for (const auto& spec : {motzkin, schroeder, FamilySpec::make(2, {{1, 1}}, 0)}) {
        for (int m = 0; m <= 3; ++m) {
            auto g = solve_g_kac(spec, m, 7);
            for (int len = 0; len <= 7; ++len) {
                CAPTURE(m);
                CAPTURE(len);
                CHECK(terms(g[len]) == oracle::tally(oracle::all_paths(spec.k, spec.levels, m, true, len), spec.k, true, true));
            }
        }
    }
}

TEST_CASE("series arithmetic") {
    auto x = TruncSeries::monomial(4, 1, Polynomial::constant(1, 1));
    auto one = TruncSeries::constant(4, Polynomial::constant(1, 1));
    auto s = (one + x).pow(3);
    CHECK(s[0].to_string() == "1");
    CHECK(s[1].to_string() == "3");
    CHECK(s[3].to_string() == "1");
    CHECK(s[4].is_zero());
    CHECK(x.shifted(4)[4].is_zero());
    CHECK(x.shifted(2)[3].to_string() == "1");
    auto q = Polynomial::marker(2, 1);
    CHECK((q * q + q).to_string() == "1*q1^2 + 1*q1");
    CHECK(Polynomial(2).to_string() == "0");
    CHECK(x.to_text() == "x^0: 0\nx^1: 1\nx^2: 0\nx^3: 0\nx^4: 0\n");
    CHECK(TruncSeries::monomial(1, 1, q).to_json() ==
          R"({"order":1,"markers":2,"coefficients":[{"degree":0,"terms":[]},{"degree":1,"terms":[{"exponents":[0,1],"coefficient":1}]}]})");
}
