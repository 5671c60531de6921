#include "lmlab/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "lmlab/error.hpp"

namespace lmlab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::cap_exceeded: return "cap-exceeded";
        case ErrorKind::dimension_mismatch: return "dimension-mismatch";
        case ErrorKind::too_few_codewords: return "too-few-codewords";
        case ErrorKind::singular_matrix: return "singular-matrix";
        case ErrorKind::hypotheses_unmet: return "hypotheses-unmet";
        case ErrorKind::invalid_s: return "invalid-s";
        case ErrorKind::parameter_out_of_range: return "parameter-out-of-range";
        case ErrorKind::precondition_violated: return "precondition-violated";
        case ErrorKind::parse_error: return "parse-error";
    }
    return "unknown";
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

namespace {

std::string trim(std::string_view text) {
    auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return {};
    auto end = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(begin, end - begin + 1));
}

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(const std::string& s) {
    if (!is_integer_literal(s)) throw Error(ErrorKind::parse_error, "not an integer: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string s = trim(text);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = parse_integer(trim(std::string_view(s).substr(0, slash)));
        Integer den = parse_integer(trim(std::string_view(s).substr(slash + 1)));
        if (den == 0) throw Error(ErrorKind::parse_error, "zero denominator in '" + s + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (frac.empty() || !std::all_of(frac.begin(), frac.end(),
                                         [](unsigned char c) { return std::isdigit(c) != 0; }))
            throw Error(ErrorKind::parse_error, "malformed decimal '" + s + "'");
        Integer scale = ipow(10, frac.size());
        Integer magnitude = abs(parse_integer(whole)) * scale + Integer(frac, 10);
        Rational q(negative ? Integer(-magnitude) : magnitude, scale);
        q.canonicalize();
        return q;
    }
    return Rational(parse_integer(s));
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
    Integer scale = ipow(10, static_cast<unsigned long>(digits));
    Rational scaled = abs(value) * scale;
    // round half up on the magnitude
    Integer rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string body = rounded.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (value < 0 && rounded != 0 ? "-" : "") + body;
}

Rational ceil_hundredths(const Rational& value) {
    Rational scaled = value * 100;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational out(c, 100);
    out.canonicalize();
    return out;
}

bool fits_int64(const Integer& value) {
    return value >= Integer(std::to_string(std::numeric_limits<std::int64_t>::min())) &&
           value <= Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
}

std::int64_t to_int64(const Integer& value) {
    if (!fits_int64(value)) throw Error(ErrorKind::parameter_out_of_range, "integer exceeds 64 bits");
    return std::stoll(value.get_str());
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

}  // namespace

Interval::Interval(double point) : lo_(point), hi_(point) {}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw Error(ErrorKind::invalid_parameter, "interval bounds out of order");
}

Interval Interval::from(const Rational& value) {
    Rational exact = value;
    exact.canonicalize();
    double d = exact.get_d();
    if (Rational(d) == exact) return Interval(d);
    return Interval(down(d), up(d));
}

Interval Interval::from(const Integer& value) { return from(Rational(value)); }

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(down(a.lo_ + b.lo_), up(a.hi_ + b.hi_));
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(down(a.lo_ - b.hi_), up(a.hi_ - b.lo_));
}

Interval operator*(const Interval& a, const Interval& b) {
    double c[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return Interval(down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4)));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) throw Error(ErrorKind::invalid_parameter, "interval division by zero");
    double c[] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    return Interval(down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4)));
}

Interval log2(const Interval& x) {
    if (x.lo() <= 0.0) throw Error(ErrorKind::invalid_parameter, "log2 of non-positive interval");
    return Interval(down(std::log2(x.lo())), up(std::log2(x.hi())));
}

Interval sqrt(const Interval& x) {
    if (x.lo() < 0.0) throw Error(ErrorKind::invalid_parameter, "sqrt of negative interval");
    return Interval(std::max(0.0, down(std::sqrt(x.lo()))), up(std::sqrt(x.hi())));
}

Comparison compare(const Rational& exact, const Interval& threshold) {
    if (exact < Rational(threshold.lo())) return Comparison::below;
    if (exact >= Rational(threshold.hi())) return Comparison::above_or_equal;
    return Comparison::uncertain;
}

}  // namespace lmlab
