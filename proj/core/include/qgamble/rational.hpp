#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qgamble {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(mpq_class value);

    /// Parses `p`, `-p` or `p/q` with decimal digits only. Returns nullopt on
    /// malformed input or a zero denominator.
    static std::optional<Rational> parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;

    /// Canonical text form: `p` for integers, otherwise `p/q`.
    std::string to_string() const;
    std::size_t hash() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i): real and imaginary parts are both exact rationals.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Parses `a`, `bi`, `a+bi`, `a-bi` where a and b are rationals; `i` and
    /// `-i` stand for unit imaginary coefficients.
    static std::optional<GaussianRational> parse(std::string_view text);

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 = z * conj(z), always a nonnegative rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    std::string to_string() const;
    std::size_t hash() const;

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

} // namespace qgamble

template <>
struct std::hash<qgamble::Rational> {
    std::size_t operator()(const qgamble::Rational& r) const noexcept { return r.hash(); }
};

template <>
struct std::hash<qgamble::GaussianRational> {
    std::size_t operator()(const qgamble::GaussianRational& z) const noexcept { return z.hash(); }
};
