#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "peakmod/numeric.hpp"

namespace peakmod {

/// Sparse polynomial in markers q_0..q_{M-1} with big-integer coefficients.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int markers) : markers_(markers) {}

    static Polynomial constant(int markers, const BigCount& c);
    static Polynomial marker(int markers, int index);

    int markers() const { return markers_; }
    const std::map<Exponents, BigCount>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigCount coefficient(const Exponents& e) const;
    /// Value at q_0 = ... = q_{M-1} = 1.
    BigCount sum() const;

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Exponent of q_i moves to q_{sigma[i]-1}.
    Polynomial permuted(std::span<const int> sigma) const;
    /// Distribution of the exponent of one marker (all others set to 1).
    std::map<int, BigCount> marginal(int index) const;

    /// `3*q0*q1 + q2^2`-style text, terms in decreasing exponent order.
    std::string to_string() const;

    bool operator==(const Polynomial&) const = default;

private:
    void add_term(const Exponents& e, const BigCount& c);

    int markers_ = 0;
    std::map<Exponents, BigCount> terms_;
};

/// Power series in x truncated after x^order, with Polynomial coefficients.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(int order, int markers);

    static TruncSeries constant(int order, const Polynomial& c);
    /// c * x^degree (zero if degree > order).
    static TruncSeries monomial(int order, int degree, const Polynomial& c);

    int order() const { return order_; }
    int markers() const { return markers_; }
    const Polynomial& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    Polynomial& operator[](int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }

    TruncSeries& operator+=(const TruncSeries& other);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    /// Every coefficient multiplied by a polynomial.
    TruncSeries scaled(const Polynomial& c) const;
    /// Multiplication by x^degree.
    TruncSeries shifted(int degree) const;
    TruncSeries pow(int exponent) const;

    /// One line per degree: `x^n: <polynomial>`.
    std::string to_text() const;
    /// {"order":N,"markers":M,"coefficients":[{"degree":n,"terms":[{"exponents":[...],"coefficient":c}]}]}
    std::string to_json() const;

    bool operator==(const TruncSeries&) const = default;

private:
    int order_ = 0;
    int markers_ = 0;
    std::vector<Polynomial> coeffs_;
};

}  // namespace peakmod
