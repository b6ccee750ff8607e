#ifndef PRIMEGRAPH_MAGNITUDE_HPP
#define PRIMEGRAPH_MAGNITUDE_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace primegraph {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Certified enclosure of a nonnegative real too large for positional notation.
 *
 * A magnitude at level L with bounds [lo, hi] encloses a value v with
 * T^L(lo) <= v <= T^L(hi), where T(x) = 2^x and T^0 is the identity.
 * A lower bound of -inf means "no lower bound beyond 0".
 * Every operation rounds outward, so enclosures only ever widen.
 * The level is kept as small as double range allows.
 */
class Magnitude {
public:
    Magnitude() = default;
    static Magnitude point(double x);  // x >= 0, widened by rounding slack
    static Magnitude interval(double lo, double hi, int level = 0);
    static Magnitude of(const BigInt& v);
    static Magnitude log2_of_5();

    int level() const { return level_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

    // Same value re-expressed at a higher level (never lower).
    Magnitude lifted_to(int level) const;

    Magnitude log2() const;  // value >= 1 keeps the result nonnegative
    Magnitude exp2() const;
    Magnitude half() const;  // v / 2

    friend Magnitude operator+(const Magnitude& a, const Magnitude& b);
    friend Magnitude operator*(const Magnitude& a, const Magnitude& b);
    // a - b with b a small level-0 quantity; result clamped at 0.
    Magnitude minus_small(const Magnitude& b) const;
    Magnitude pow(const Magnitude& e) const;  // this^e

    // Certified comparisons; false when the enclosures overlap.
    friend bool certainly_le(const Magnitude& a, const Magnitude& b);
    friend bool certainly_lt(const Magnitude& a, const Magnitude& b);

    // Hull of two enclosures of the same quantity is not needed; this one takes
    // the lower end of `low` and the upper end of `high`.
    static Magnitude span(const Magnitude& low, const Magnitude& high);

    // "[lo, hi]" for level 0, "2^[lo, hi]" for level 1, "2^2^[lo, hi]" and so on.
    std::string to_string() const;

private:
    Magnitude(int level, double lo, double hi) : level_(level), lo_(lo), hi_(hi) {}
    Magnitude normalized() const;

    int level_ = 0;
    double lo_ = 0.0;
    double hi_ = 0.0;
};

}  // namespace primegraph

#endif  // PRIMEGRAPH_MAGNITUDE_HPP
