#include "primegraph/magnitude.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

namespace primegraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Largest exponent whose power of two is comfortably inside double range.
constexpr double kLowerableExponent = 1000.0;
constexpr double kLevelZeroCeiling = 1e300;

// Two ulps each way: libm log2/exp2 are not guaranteed correctly rounded.
double down(double x) {
    if (x == -kInf) return x;
    return std::nextafter(std::nextafter(x, -kInf), -kInf);
}
double up(double x) {
    if (x == kInf) return x;
    return std::nextafter(std::nextafter(x, kInf), kInf);
}

double log2_down(double x) { return x > 0 ? down(std::log2(x)) : -kInf; }
double log2_up(double x) { return x > 0 ? up(std::log2(x)) : -kInf; }

}  // namespace

Magnitude Magnitude::point(double x) {
    if (x == 0.0) return Magnitude(0, 0.0, 0.0);
    return Magnitude(0, std::max(0.0, down(x)), up(x));
}

Magnitude Magnitude::interval(double lo, double hi, int level) {
    return Magnitude(level, lo, hi).normalized();
}

Magnitude Magnitude::of(const BigInt& v) {
    if (v <= 0) return Magnitude(0, 0.0, 0.0);
    std::size_t msb = boost::multiprecision::msb(v);
    if (msb < 1000) {
        double d = v.convert_to<double>();
        return Magnitude(0, std::max(0.0, down(d)), up(d));
    }
    std::size_t shift = msb - 52;
    std::uint64_t top = 0;
    for (std::size_t b = msb + 1; b-- > shift;) top = (top << 1) | (boost::multiprecision::bit_test(v, b) ? 1u : 0u);
    double t = static_cast<double>(top);  // < 2^53, exact
    double s = static_cast<double>(shift);
    return Magnitude(1, down(std::log2(t) + s), up(std::log2(t + 1.0) + s));
}

Magnitude Magnitude::log2_of_5() { return Magnitude(0, down(std::log2(5.0)), up(std::log2(5.0))); }

Magnitude Magnitude::normalized() const {
    Magnitude m = *this;
    while (m.level_ > 0 && m.hi_ <= kLowerableExponent) {
        double lo = m.lo_ == -kInf ? 0.0 : down(std::exp2(m.lo_));
        if (m.level_ == 1) lo = std::max(0.0, lo);
        m = Magnitude(m.level_ - 1, lo, up(std::exp2(m.hi_)));
    }
    return m;
}

Magnitude Magnitude::lifted_to(int level) const {
    Magnitude m = *this;
    while (m.level_ < level) {
        double lo = (m.lo_ > 0) ? log2_down(m.lo_) : -kInf;
        m = Magnitude(m.level_ + 1, lo, log2_up(m.hi_));
    }
    return m;
}

Magnitude Magnitude::log2() const {
    if (level_ >= 1) return Magnitude(level_ - 1, level_ == 1 ? std::max(0.0, lo_) : lo_, hi_).normalized();
    double lo = lo_ >= 1.0 ? std::max(0.0, log2_down(lo_)) : 0.0;
    return Magnitude(0, lo, std::max(0.0, log2_up(hi_)));
}

Magnitude Magnitude::exp2() const { return Magnitude(level_ + 1, lo_, hi_).normalized(); }

Magnitude Magnitude::half() const {
    if (level_ == 0) return Magnitude(0, lo_ / 2, hi_ / 2);
    return log2().minus_small(point(1.0)).exp2();
}

Magnitude Magnitude::span(const Magnitude& low, const Magnitude& high) {
    int level = std::max(low.level_, high.level_);
    Magnitude a = low.lifted_to(level), b = high.lifted_to(level);
    return Magnitude(level, a.lo_, b.hi_).normalized();
}

Magnitude operator+(const Magnitude& a, const Magnitude& b) {
    if (a.level_ == 0 && b.level_ == 0) {
        double hi = up(a.hi_ + b.hi_);
        if (hi < kLevelZeroCeiling) return Magnitude(0, std::max(0.0, down(a.lo_ + b.lo_)), hi);
    }
    int level = std::max({a.level_, b.level_, 1});
    Magnitude x = a.lifted_to(level), y = b.lifted_to(level);
    double lo = std::max(x.lo_, y.lo_);
    double mh = std::max(x.hi_, y.hi_);
    double other = std::min(x.hi_, y.hi_);
    // log2(a+b) <= log2(max) + log2(1 + min/max); the second term is at most 1
    Magnitude log_upper;
    if (level == 1)
        log_upper = Magnitude(0, mh, up(mh + up(std::log2(1.0 + std::exp2(other - mh)))));
    else
        log_upper = Magnitude(level - 1, mh, mh) + Magnitude::point(1.0);
    Magnitude low(level, lo, lo);
    return Magnitude::span(low, log_upper.exp2());
}

Magnitude operator*(const Magnitude& a, const Magnitude& b) {
    if (a.level_ == 0 && b.level_ == 0) {
        double hi = up(a.hi_ * b.hi_);
        if (hi < kLevelZeroCeiling) return Magnitude(0, std::max(0.0, down(a.lo_ * b.lo_)), hi);
    }
    Magnitude ahi(a.level_, a.hi_, a.hi_), bhi(b.level_, b.hi_, b.hi_);
    Magnitude upper = (ahi.log2() + bhi.log2()).exp2();
    // lower ends only usable through logs when both factors are >= 1
    auto at_least_one = [](const Magnitude& m) { return m.level_ > 0 ? m.lo_ >= 0.0 : m.lo_ >= 1.0; };
    Magnitude lower = Magnitude::point(0.0);
    if (at_least_one(a) && at_least_one(b)) {
        Magnitude alo(a.level_, a.lo_, a.lo_), blo(b.level_, b.lo_, b.lo_);
        lower = (alo.log2() + blo.log2()).exp2();
    }
    return Magnitude::span(lower, upper);
}

Magnitude Magnitude::minus_small(const Magnitude& b) const {
    if (level_ == 0) return Magnitude(0, std::max(0.0, down(lo_ - b.hi_)), std::max(0.0, up(hi_ - b.lo_)));
    // here the value exceeds 2^1000 while b < 1e300, so v - b >= v / 2
    Magnitude log_lower = Magnitude(level_, lo_, lo_).log2().minus_small(point(1.0));
    return span(log_lower.exp2(), *this);
}

Magnitude Magnitude::pow(const Magnitude& e) const { return (e * log2()).exp2(); }

bool certainly_le(const Magnitude& a, const Magnitude& b) {
    int level = std::max(a.level_, b.level_);
    Magnitude x = a.lifted_to(level), y = b.lifted_to(level);
    return x.hi_ <= y.lo_;
}

bool certainly_lt(const Magnitude& a, const Magnitude& b) {
    int level = std::max(a.level_, b.level_);
    Magnitude x = a.lifted_to(level), y = b.lifted_to(level);
    return x.hi_ < y.lo_;
}

std::string Magnitude::to_string() const {
    std::ostringstream os;
    os.precision(17);
    for (int i = 0; i < level_; ++i) os << "2^";
    os << '[' << lo_ << ", " << hi_ << ']';
    return os.str();
}

}  // namespace primegraph
