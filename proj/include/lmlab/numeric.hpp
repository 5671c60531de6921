#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lmlab {

using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(unsigned long n, unsigned long k);
Integer ipow(const Integer& base, unsigned long exponent);

// "p/q", "p", or a finite decimal such as "0.125", parsed exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& value);
// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_decimal(const Rational& value, int digits);

// Round up to a multiple of 1/100.
Rational ceil_hundredths(const Rational& value);

bool fits_int64(const Integer& value);
std::int64_t to_int64(const Integer& value);

// Closed interval of doubles enclosing a real number. Every operation rounds
// to nearest and then widens the result outward by one ulp on each side, so a
// correctly-rounded (or faithfully rounded) libm result stays enclosed.
class Interval {
public:
    Interval() = default;
    explicit Interval(double point);
    Interval(double lo, double hi);

    static Interval from(const Rational& value);
    static Interval from(const Integer& value);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval log2(const Interval& x);
Interval sqrt(const Interval& x);

// Three-way comparison of an exact value against an enclosure.
enum class Comparison { below, above_or_equal, uncertain };
Comparison compare(const Rational& exact, const Interval& threshold);

}  // namespace lmlab
