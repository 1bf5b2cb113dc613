#include "peakmod/counting.hpp"

#include <numeric>

namespace peakmod {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

long sum_of(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0L); }

// (1 + q_i f) for the product terms of the functional equations.
TruncSeries one_plus_marked(const TruncSeries& f, int marker) {
    const int markers = f.markers();
    TruncSeries term = marker < 0 ? f : f.scaled(Polynomial::marker(markers, marker));
    return term + TruncSeries::constant(f.order(), Polynomial::constant(markers, 1));
}

TruncSeries ballot_product(const TruncSeries& f, int k, int m) {
    const int ell = m / k;
    const int r = m % k;
    TruncSeries g = TruncSeries::constant(f.order(), Polynomial::constant(f.markers(), 1));
    for (int i = 0; i < k; ++i) g = g * one_plus_marked(f, i).pow(i <= r ? ell + 1 : ell);
    return g;
}

}  // namespace

BigCount fuss_catalan(int k, int n) {
    require(k >= 1 && n >= 0, "fuss_catalan needs k >= 1 and n >= 0");
    Rational v(binomial(static_cast<long>(k + 1) * n, n), BigCount(static_cast<long>(k) * n + 1));
    return require_integer(v, "Fuss-Catalan number");
}

BigCount count_joint(int k, int n, std::span<const int> r) {
    require(k >= 1 && n >= 1, "count_joint needs k >= 1 and n >= 1");
    require(static_cast<int>(r.size()) == k + 1, "count_joint needs k + 1 statistic values");
    if (sum_of(r) != n - 1) return 0;
    BigCount product = 1;
    for (int ri : r) product *= binomial(n, ri);
    return require_integer(Rational(product, BigCount(n)), "joint count");
}

BigCount count_marginal(int k, int n, int r) {
    require(k >= 1 && n >= 1, "count_marginal needs k >= 1 and n >= 1");
    if (r < 0 || r > n - 1) return 0;
    Rational v(binomial(n, r) * binomial(static_cast<long>(k) * n, n - 1 - r), BigCount(n));
    return require_integer(v, "marginal count");
}

BigCount count_pk(int k, int n, int r) {
    require(k >= 1 && n >= 1, "count_pk needs k >= 1 and n >= 1");
    if (r < 0 || r > n - 1) return 0;
    Rational v(binomial(n, r + 1) * binomial(static_cast<long>(k) * n, r), BigCount(n));
    return require_integer(v, "peak count");
}

BigCount narayana(int n, int r) {
    require(n >= 1 && r >= 1 && r <= n, "narayana needs 1 <= r <= n");
    return require_integer(Rational(binomial(n, r) * binomial(n, r - 1), BigCount(n)), "Narayana number");
}

BigCount count_ballot_joint(int k, int ell, int r, int n, std::span<const int> s) {
    require(k >= 1 && n >= 1 && ell >= 0, "count_ballot_joint needs k >= 1, n >= 1, ell >= 0");
    require(r >= 0 && r <= k - 1, "count_ballot_joint needs 0 <= r <= k - 1");
    require(static_cast<int>(s.size()) == k + 1, "count_ballot_joint needs k + 1 statistic values");
    if (sum_of(s) != n) return 0;
    for (int si : s) {
        if (si < 0) return 0;
    }

    long low = 0;
    long high = 0;
    for (int i = 0; i <= r; ++i) low += s[static_cast<std::size_t>(i)];
    for (int i = r + 1; i <= k - 1; ++i) high += s[static_cast<std::size_t>(i)];

    Rational bracket = Rational(BigCount(ell + 1) * low, BigCount(n + ell + 1));
    if (ell > 0) bracket += Rational(BigCount(ell) * high, BigCount(n + ell));

    BigCount product = 1;
    for (int i = 0; i <= r; ++i) product *= binomial(n + ell + 1, s[static_cast<std::size_t>(i)]);
    for (int i = r + 1; i <= k - 1; ++i) product *= binomial(n + ell, s[static_cast<std::size_t>(i)]);
    product *= binomial(n, s[static_cast<std::size_t>(k)]);

    return require_integer(bracket * Rational(product) / Rational(n), "ballot joint count");
}

BigCount lagrange_coefficient(int k, int n, std::span<const int> r) {
    require(k >= 1 && n >= 1, "lagrange_coefficient needs k >= 1 and n >= 1");
    require(static_cast<int>(r.size()) == k + 1, "lagrange_coefficient needs k + 1 statistic values");
    for (int ri : r) {
        if (ri < 0) return 0;
    }
    const int markers = k + 1;
    const int order = n - 1;
    // phi(w) = prod_i (q_i w + 1), truncated at w^{n-1}.
    TruncSeries w = TruncSeries::monomial(order, 1, Polynomial::constant(markers, 1));
    TruncSeries phi = TruncSeries::constant(order, Polynomial::constant(markers, 1));
    for (int i = 0; i <= k; ++i) phi = phi * one_plus_marked(w, i);
    BigCount raw = phi.pow(n)[order].coefficient(std::vector<int>(r.begin(), r.end()));
    return require_integer(Rational(raw, BigCount(n)), "Lagrange coefficient");
}

TruncSeries solve_f(int k, int order, bool markers) {
    require(k >= 1 && order >= 0, "solve_f needs k >= 1 and order >= 0");
    const int count = k + 1;
    TruncSeries f(order, count);
    // x has positive valuation, so each round fixes one more coefficient.
    for (int round = 0; round <= order; ++round) {
        TruncSeries product = TruncSeries::constant(order, Polynomial::constant(count, 1));
        for (int i = 0; i <= k; ++i) product = product * one_plus_marked(f, markers ? i : -1);
        f = product.shifted(1);
    }
    return f;
}

TruncSeries solve_f_kac(const FamilySpec& spec, int order) {
    require(order >= 0, "solve_f_kac needs order >= 0");
    const int k = spec.k;
    const int count = k + 1;
    TruncSeries levels(order, count);
    for (const auto& [a, c] : spec.levels) levels += TruncSeries::monomial(order, a, Polynomial::constant(count, c));
    const TruncSeries one = TruncSeries::constant(order, Polynomial::constant(count, 1));

    TruncSeries f(order, count);
    for (int round = 0; round <= order; ++round) {
        TruncSeries product = one;
        for (int i = 0; i <= k; ++i) product = product * one_plus_marked(f, i);
        f = levels * (f + one) + product.shifted(k + 1);
    }
    return f;
}

TruncSeries solve_g(int k, int m, int order) {
    require(m >= 0, "solve_g needs m >= 0");
    return ballot_product(solve_f(k, order), k, m);
}

TruncSeries solve_g_kac(const FamilySpec& spec, int m, int order) {
    require(m >= 0, "solve_g_kac needs m >= 0");
    return ballot_product(solve_f_kac(spec, order), spec.k, m).shifted(m);
}

}  // namespace peakmod
