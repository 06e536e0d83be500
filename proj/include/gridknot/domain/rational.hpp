#pragma once
// Exact rational arithmetic for the Heegaard-domain calculus. Admissibility
// is a sign condition, so nothing here may round; intermediate products are
// taken in 128 bits and overflow throws.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gridknot::heegaard {

struct RationalOverflow : std::overflow_error {
    RationalOverflow() : std::overflow_error("rational overflow") {}
};

class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}
    Rational(long long num, long long den);

    static Rational parse(const std::string& text);  // "p/q" or "p"

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const;

private:
    void normalize();
    long long num_ = 0;
    long long den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace gridknot::heegaard
