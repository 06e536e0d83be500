#include "gridknot/domain/rational.hpp"

#include <numeric>
#include <ostream>

namespace gridknot::heegaard {

namespace {
long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw RationalOverflow();
    return static_cast<long long>(v);
}
}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

void Rational::normalize() {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(checked(n), checked(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(checked(n), checked(d));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    __int128 n = static_cast<__int128>(num_) * o.den_;
    __int128 d = static_cast<__int128>(den_) * o.num_;
    return Rational(checked(n), checked(d));
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gridknot::heegaard
