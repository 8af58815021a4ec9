#include "qgamble/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "qgamble/error.hpp"

namespace qgamble {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::EmptyGamble: return "EmptyGamble";
    case Errc::DuplicateAtomWithinAlgebra: return "DuplicateAtomWithinAlgebra";
    case Errc::TooFewAtoms: return "TooFewAtoms";
    case Errc::MissingEvent: return "MissingEvent";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::UnmappedAtom: return "UnmappedAtom";
    case Errc::InvalidRealization: return "InvalidRealization";
    case Errc::InvalidState: return "InvalidState";
    case Errc::ZeroProbabilityCondition: return "ZeroProbabilityCondition";
    case Errc::NoViolation: return "NoViolation";
    case Errc::UnlabeledAtomInSupport: return "UnlabeledAtomInSupport";
    case Errc::InvalidScheme: return "InvalidScheme";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
    case Errc::DivisionByZero: return "DivisionByZero";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_mpz(const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
        h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))));
    }
    return h;
}

} // namespace

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
    value_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const {
    return mix(hash_mpz(value_.get_num()), hash_mpz(value_.get_den()));
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

std::optional<GaussianRational> GaussianRational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (text.back() != 'i') {
        auto re = Rational::parse(text);
        if (!re) return std::nullopt;
        return GaussianRational(*re);
    }
    std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
    Rational re;
    if (!re_text.empty()) {
        auto parsed = Rational::parse(re_text);
        if (!parsed) return std::nullopt;
        re = *parsed;
    }
    Rational im;
    if (im_text.empty() || im_text == "+") {
        im = 1;
    } else if (im_text == "-") {
        im = -1;
    } else {
        auto parsed = Rational::parse(im_text);
        if (!parsed) return std::nullopt;
        im = *parsed;
    }
    return GaussianRational(re, im);
}

GaussianRational GaussianRational::inverse() const {
    const Rational n = norm2();
    if (n.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    if (im_ == Rational(1)) {
        imag = "i";
    } else if (im_ == Rational(-1)) {
        imag = "-i";
    } else {
        imag = im_.to_string() + "i";
    }
    if (re_.is_zero()) return imag;
    if (im_.sign() > 0) return re_.to_string() + "+" + imag;
    return re_.to_string() + imag;
}

std::size_t GaussianRational::hash() const {
    return mix(re_.hash(), im_.hash());
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    if (im_.is_zero() && rhs.im_.is_zero()) {
        re_ *= rhs.re_;
        return *this;
    }
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.im_.is_zero()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    return *this *= rhs.inverse();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

} // namespace qgamble
