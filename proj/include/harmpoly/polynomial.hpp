#ifndef HARMPOLY_POLYNOMIAL_HPP
#define HARMPOLY_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace harmpoly {

/**
 * Dense polynomial with arbitrary-precision integer coefficients.
 *
 * coefficient(j) is the coefficient of x^j. The stored sequence never has a
 * trailing zero, so the zero polynomial is the empty sequence and equality
 * is plain sequence equality.
 */
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {
        normalize();
    }

    /// c * x^exponent
    static IntPolynomial monomial(BigInt c, std::size_t exponent) {
        std::vector<BigInt> v(exponent + 1);
        v[exponent] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }

    /// Highest exponent with a non-zero coefficient; nullopt for zero.
    std::optional<std::size_t> degree() const {
        if (c_.empty())
            return std::nullopt;
        return c_.size() - 1;
    }

    /// Lowest exponent with a non-zero coefficient; nullopt for zero.
    std::optional<std::size_t> min_degree() const {
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (c_[j] != 0)
                return j;
        return std::nullopt;
    }

    BigInt coefficient(std::size_t j) const { return j < c_.size() ? c_[j] : BigInt(0); }
    const std::vector<BigInt>& coefficients() const noexcept { return c_; }

    /// Number of non-zero coefficients.
    std::size_t nonzero_count() const {
        std::size_t k = 0;
        for (const auto& c : c_)
            if (c != 0)
                ++k;
        return k;
    }

    /// Adds c to the coefficient of x^j.
    void add_term(std::size_t j, const BigInt& c) {
        if (j >= c_.size())
            c_.resize(j + 1);
        c_[j] += c;
        normalize();
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c_[j] += o.c_[j];
        normalize();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c_[j] -= o.c_[j];
        normalize();
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(out));
    }
    friend IntPolynomial operator*(const BigInt& s, IntPolynomial p) {
        for (auto& c : p.c_)
            c *= s;
        p.normalize();
        return p;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Exact Horner evaluation.
inline Rational evaluate(const IntPolynomial& p, const Rational& x) {
    Rational acc = 0;
    const auto& c = p.coefficients();
    for (std::size_t j = c.size(); j-- > 0;)
        acc = acc * x + Rational(c[j]);
    return acc;
}

/// Formal k-th derivative; k = 0 returns p.
inline IntPolynomial derivative(const IntPolynomial& p, std::size_t k) {
    const auto& c = p.coefficients();
    if (k == 0)
        return p;
    if (c.size() <= k)
        return {};
    std::vector<BigInt> out(c.size() - k);
    for (std::size_t j = k; j < c.size(); ++j) {
        BigInt falling = 1;
        for (std::size_t i = 0; i < k; ++i)
            falling *= static_cast<unsigned long long>(j - i);
        out[j - k] = c[j] * falling;
    }
    return IntPolynomial(std::move(out));
}

/// Exact integral of p over [lo, hi].
inline Rational definite_integral(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
    const auto& c = p.coefficients();
    Rational at_hi = 0, at_lo = 0;
    for (std::size_t j = c.size(); j-- > 0;) {
        Rational term(c[j], BigInt(static_cast<unsigned long long>(j + 1)));
        at_hi = (at_hi + term) * hi;
        at_lo = (at_lo + term) * lo;
    }
    return at_hi - at_lo;
}

/// (x-1)(x-2)...(x-k), built by multiplying out the factors.
inline IntPolynomial vieta_q(std::size_t k) {
    if (k == 0)
        throw std::invalid_argument("vieta_q requires k >= 1");
    IntPolynomial q = IntPolynomial::monomial(1, 0);
    for (std::size_t i = 1; i <= k; ++i)
        q = q * IntPolynomial({BigInt(-static_cast<long long>(i)), BigInt(1)});
    return q;
}

struct PolynomialStructure {
    std::optional<std::size_t> degree;
    std::optional<std::size_t> min_degree;
    std::size_t nonzero_count = 0;
    /// Coefficients at degree / min_degree; absent for the zero polynomial.
    std::optional<BigInt> leading;
    std::optional<BigInt> trailing;
};

inline PolynomialStructure structure(const IntPolynomial& p) {
    PolynomialStructure s;
    s.degree = p.degree();
    s.min_degree = p.min_degree();
    s.nonzero_count = p.nonzero_count();
    if (s.degree) {
        s.leading = p.coefficient(*s.degree);
        s.trailing = p.coefficient(*s.min_degree);
    }
    return s;
}

enum class Parity { OddFunction, EvenFunction, Neither, Zero };

inline Parity parity(const IntPolynomial& p) {
    if (p.is_zero())
        return Parity::Zero;
    bool odd = false, even = false;
    const auto& c = p.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0)
            (j % 2 ? odd : even) = true;
    if (odd && even)
        return Parity::Neither;
    return odd ? Parity::OddFunction : Parity::EvenFunction;
}

inline const char* to_string(Parity p) {
    switch (p) {
        case Parity::OddFunction: return "odd";
        case Parity::EvenFunction: return "even";
        case Parity::Neither: return "neither";
        case Parity::Zero: return "zero";
    }
    return "?";
}

/// Multiplicity of x = 0 as a root: the first k with p^(k)(0) != 0.
/// Computed through derivatives rather than by reading the coefficient array.
inline std::optional<std::size_t> zero_multiplicity_at_origin(const IntPolynomial& p) {
    if (p.is_zero())
        return std::nullopt;
    for (std::size_t k = 0;; ++k)
        if (evaluate(derivative(p, k), Rational(0)) != 0)
            return k;
}

/// True iff 0 is the only complex root of p, i.e. p = c x^d with c != 0.
inline bool origin_is_only_root(const IntPolynomial& p) {
    auto mult = zero_multiplicity_at_origin(p);
    return mult && *mult == *p.degree();
}

/// Ascending "c x^j" terms joined by " + " / " - ", e.g. "2 - 3x + x^2".
inline std::string to_string(const IntPolynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0)
            continue;
        BigInt mag = abs(c[j]);
        if (out.empty())
            out += c[j] < 0 ? "-" : "";
        else
            out += c[j] < 0 ? " - " : " + ";
        if (j == 0 || mag != 1)
            out += mag.str();
        if (j >= 1)
            out += "x";
        if (j >= 2)
            out += "^" + std::to_string(j);
    }
    return out;
}

}  // namespace harmpoly

#endif
