#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact integers, dense integer polynomials and truncated power series.
 *
 * Everything downstream (distributions, specialization counts, r-values) is
 * carried by these types. There is no floating point anywhere in the library.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eulinv {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// C(a, b) for a >= 0; zero outside 0 <= b <= a.
inline BigInt binomial(long long a, long long b) {
    if (a < 0) throw std::invalid_argument("binomial: negative upper index");
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;  // exact: result is C(a-b+i, i) here
    }
    return result;
}

/// Coefficient of t^j in (1 - t)^{-b}, i.e. C(b + j - 1, j), with b = 0 giving [j == 0].
inline BigInt multiset_coefficient(long long b, long long j) {
    if (j < 0) return 0;
    if (b == 0) return j == 0 ? 1 : 0;
    return binomial(b + j - 1, j);
}

/// Dense polynomial with exact integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<BigInt> cs) : coeffs_(cs) { normalize(); }
    explicit IntPolynomial(std::vector<BigInt> cs) : coeffs_(std::move(cs)) { normalize(); }

    /// x^k
    static IntPolynomial monomial(std::size_t k, BigInt c = 1) {
        std::vector<BigInt> cs(k + 1);
        cs[k] = std::move(c);
        return IntPolynomial(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    /// Coefficient of x^i; zero outside the stored range (including i < 0).
    BigInt coeff(long long i) const {
        if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Keep only the terms of degree <= d.
    IntPolynomial truncated(long long d) const {
        if (d < 0) return {};
        std::vector<BigInt> cs(coeffs_.begin(),
                               coeffs_.begin() + std::min<long long>(d + 1, size()));
        return IntPolynomial(std::move(cs));
    }

    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
        std::vector<BigInt> cs(std::max(p.size(), q.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = p.coeff(i) + q.coeff(i);
        return IntPolynomial(std::move(cs));
    }

    friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
        std::vector<BigInt> cs(std::max(p.size(), q.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = p.coeff(i) - q.coeff(i);
        return IntPolynomial(std::move(cs));
    }

    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Space-separated coefficients, lowest degree first; "0" for the zero polynomial.
    std::string to_string(char sep = ' ') const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << sep;
            os << coeffs_[i];
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline IntPolynomial poly_multiply(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> cs(p.size() + q.size() - 1);
    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) cs[i + j] += a[i] * b[j];
    }
    return IntPolynomial(std::move(cs));
}

inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    return poly_multiply(p, q);
}

/// (1 + x)^e
inline IntPolynomial one_plus_x_pow(long long e) {
    std::vector<BigInt> cs(static_cast<std::size_t>(e + 1));
    for (long long i = 0; i <= e; ++i) cs[static_cast<std::size_t>(i)] = binomial(e, i);
    return IntPolynomial(std::move(cs));
}

/// Univariate power series known modulo t^(N+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    TruncatedSeries(std::size_t order, const std::vector<BigInt>& cs) : coeffs_(order + 1) {
        for (std::size_t i = 0; i < std::min(cs.size(), coeffs_.size()); ++i) coeffs_[i] = cs[i];
    }

    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    /// Sum_{i >= 0} t^(step * i), i.e. 1 / (1 - t^step).
    static TruncatedSeries geometric(std::size_t order, std::size_t step) {
        if (step == 0) throw std::invalid_argument("geometric series needs step >= 1");
        TruncatedSeries s(order);
        for (std::size_t i = 0; i <= order; i += step) s.coeffs_[i] = 1;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_same_order(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_same_order(a, b);
        const std::size_t n = a.order();
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("truncated series of different orders cannot be combined");
    }

    std::vector<BigInt> coeffs_;
};

/// Coefficients of (1 - t)^{-a} (1 - t^2)^{-b} up to t^N.
inline TruncatedSeries expand_negative_binomial_product(long long a, long long b, std::size_t order) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
    std::vector<BigInt> cs(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        const auto nn = static_cast<long long>(n);
        for (long long j = 0; 2 * j <= nn; ++j)
            cs[n] += multiset_coefficient(b, j) * multiset_coefficient(a, nn - 2 * j);
    }
    return TruncatedSeries(order, cs);
}

}  // namespace eulinv
