#include "peakmod/series.hpp"

#include "peakmod/error.hpp"

namespace peakmod {

Polynomial Polynomial::constant(int markers, const BigCount& c) {
    Polynomial p(markers);
    p.add_term(Exponents(static_cast<std::size_t>(markers), 0), c);
    return p;
}

Polynomial Polynomial::marker(int markers, int index) {
    if (index < 0 || index >= markers) throw Error(ErrorCode::InvalidArgument, "marker index out of range");
    Exponents e(static_cast<std::size_t>(markers), 0);
    e[static_cast<std::size_t>(index)] = 1;
    Polynomial p(markers);
    p.add_term(e, 1);
    return p;
}

void Polynomial::add_term(const Exponents& e, const BigCount& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigCount Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigCount(0) : it->second;
}

BigCount Polynomial::sum() const {
    BigCount s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (markers_ == 0) markers_ = other.markers_;
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.markers_, b.markers_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::permuted(std::span<const int> sigma) const {
    Polynomial out(markers_);
    for (const auto& [e, c] : terms_) {
        Exponents moved(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) moved[static_cast<std::size_t>(sigma[i] - 1)] = e[i];
        out.add_term(moved, c);
    }
    return out;
}

std::map<int, BigCount> Polynomial::marginal(int index) const {
    std::map<int, BigCount> out;
    for (const auto& [e, c] : terms_) out[e.at(static_cast<std::size_t>(index))] += c;
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str();
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            int power = it->first[i];
            if (power == 0) continue;
            out += "*q" + std::to_string(i);
            if (power > 1) out += "^" + std::to_string(power);
        }
    }
    return out;
}

TruncSeries::TruncSeries(int order, int markers)
    : order_(order), markers_(markers), coeffs_(static_cast<std::size_t>(order) + 1, Polynomial(markers)) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be nonnegative");
}

TruncSeries TruncSeries::constant(int order, const Polynomial& c) { return monomial(order, 0, c); }

TruncSeries TruncSeries::monomial(int order, int degree, const Polynomial& c) {
    TruncSeries s(order, c.markers());
    if (degree >= 0 && degree <= order) s[degree] = c;
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
    for (int n = 0; n <= std::min(order_, other.order_); ++n) (*this)[n] += other[n];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order_, b.order_);
    TruncSeries out(order, std::max(a.markers_, b.markers_));
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

TruncSeries TruncSeries::scaled(const Polynomial& c) const {
    TruncSeries out(order_, std::max(markers_, c.markers()));
    for (int n = 0; n <= order_; ++n) out[n] = (*this)[n] * c;
    return out;
}

TruncSeries TruncSeries::shifted(int degree) const {
    TruncSeries out(order_, markers_);
    for (int n = 0; n + degree <= order_; ++n) out[n + degree] = (*this)[n];
    return out;
}

TruncSeries TruncSeries::pow(int exponent) const {
    TruncSeries result = constant(order_, Polynomial::constant(markers_, 1));
    TruncSeries base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

std::string TruncSeries::to_text() const {
    std::string out;
    for (int n = 0; n <= order_; ++n) out += "x^" + std::to_string(n) + ": " + (*this)[n].to_string() + "\n";
    return out;
}

std::string TruncSeries::to_json() const {
    std::string out = "{\"order\":" + std::to_string(order_) + ",\"markers\":" + std::to_string(markers_) +
                      ",\"coefficients\":[";
    for (int n = 0; n <= order_; ++n) {
        if (n) out += ',';
        out += "{\"degree\":" + std::to_string(n) + ",\"terms\":[";
        bool first = true;
        const auto& terms = (*this)[n].terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            if (!first) out += ',';
            first = false;
            out += "{\"exponents\":[";
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(it->first[i]);
            }
            out += "],\"coefficient\":" + it->second.str() + "}";
        }
        out += "]}";
    }
    out += "]}";
    return out;
}

}  // namespace peakmod
