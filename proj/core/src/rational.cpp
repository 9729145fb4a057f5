#include "vexfluid/rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

namespace vexfluid {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw DomainError(std::string("rational overflow in ") + what);
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoll(text));
        }
        const std::int64_t n = std::stoll(text.substr(0, slash));
        const std::int64_t d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw DomainError("bad rational literal '" + text + "'");
    }
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& o) {
    const i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    const i128 d = i128(den_) * o.den_;
    num_ = checked_narrow(n, "addition");
    den_ = checked_narrow(d, "addition");
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    return *this += Rational(-o.num_, o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
    // Cross-cancel first to keep intermediates small.
    const std::int64_t g1 = std::gcd(std::abs(num_), o.den_);
    const std::int64_t g2 = std::gcd(std::abs(o.num_), den_);
    const i128 n = i128(num_ / g1) * (o.num_ / g2);
    const i128 d = i128(den_ / g2) * (o.den_ / g1);
    num_ = checked_narrow(n, "multiplication");
    den_ = checked_narrow(d, "multiplication");
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    return *this *= Rational(o.den_, o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace vexfluid
