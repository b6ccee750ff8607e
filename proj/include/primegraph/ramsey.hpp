#ifndef PRIMEGRAPH_RAMSEY_HPP
#define PRIMEGRAPH_RAMSEY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/errors.hpp"
#include "primegraph/magnitude.hpp"

namespace primegraph {

// Target clique size per colour; nonempty, every entry >= 1.
using ColorSizes = std::vector<int>;

// How a BigBound relates to the quantity it stands for.
enum class Polarity { Exact, Upper, Lower };
const char* to_string(Polarity p);

/**
 * A nonnegative integer quantity. `value` holds it exactly when it is small
 * enough to write down; `mag` always encloses the represented number.
 */
struct BigBound {
    Polarity polarity = Polarity::Exact;
    std::optional<BigInt> value;
    Magnitude mag;

    bool exact() const { return polarity == Polarity::Exact; }
    bool has_value() const { return value.has_value(); }

    static BigBound integer(const BigInt& v, Polarity p = Polarity::Exact);
    static BigBound approx(const Magnitude& m, Polarity p);

    std::string value_string() const;  // decimal digits or the enclosure text
    Magnitude log2() const;            // enclosure of log2 of the represented number (>= 1 assumed)
};

// Arithmetic on monotone combinations; polarity Exact+Upper -> Upper, Upper with Lower throws.
BigBound operator+(const BigBound& a, const BigBound& b);
BigBound operator*(const BigBound& a, const BigBound& b);
BigBound pow(const BigBound& base, const BigBound& exponent);
BigBound exp2(const BigBound& e);  // 2^e
// Certified a <= b on the represented numbers (false when undetermined).
bool certainly_le(const BigBound& a, const BigBound& b);
bool certainly_lt(const BigBound& a, const BigBound& b);

// True iff every k-colouring of the edges of K_m has a clique of size sizes[i] in some colour i.
// Exhaustive with pruning; Refusal once the node budget is spent.
bool brute_force_ramsey_holds(const ColorSizes& sizes, int m,
                              std::uint64_t node_budget = 200'000'000);

// Upper bound on R(sizes), exact where the small-case rules or the verified table apply.
BigBound ramsey_upper(const ColorSizes& sizes);
// Same with sizes that may themselves be huge or only bounded from above.
BigBound ramsey_upper(const std::vector<BigBound>& sizes);
// The verified exact values, as (sorted sizes, value).
const std::vector<std::pair<ColorSizes, int>>& exact_ramsey_table();

struct MonoClique {
    int color = 0;
    std::vector<int> indices;  // ascending, 0-based
};
// Colouring of pairs (i, j), 0 <= i < j < t, into colours 0..k-1.
using PairColoring = std::function<int(int, int)>;
// Pigeonhole recursion first, exhaustive clique search second; nullopt when no colour works.
std::optional<MonoClique> find_mono_clique(int t, const PairColoring& coloring, const ColorSizes& sizes);

BigBound g_fn(int n);
BigBound h_fn(int n, const BigBound& nprime, int i);
inline BigBound h_fn(int n, int nprime, int i) { return h_fn(n, BigBound::integer(nprime), i); }
BigBound f_fn(const BigBound& n, const BigBound& n1, const BigBound& n2);
inline BigBound f_fn(int n, int n1, int n2) {
    return f_fn(BigBound::integer(n), BigBound::integer(n1), BigBound::integer(n2));
}
// M = R(n1 + n, 2n - 1, n + n2, n + n2 - 1), the exponent inside f.
BigBound f_exponent(const BigBound& n, const BigBound& n1, const BigBound& n2);

struct BoundReport {
    int n = 0;
    BigBound g_n;           // g(n)
    BigBound h_n;           // h(n, g(n), n)
    BigBound x;             // R(h_n, n, n, g(n))
    BigBound M;             // exponent with m = 2^(M+1)
    BigBound m;             // f(n, h_n, g(n))
    BigBound log2_N_new;    // log2 of x (5m)^(x+1)
    BigBound N_new;
    BigBound log2_N_ckos;   // m / 2
    BigBound N_ckos_lower;  // (sqrt 2)^m
};
BoundReport bound_report(int n);

struct BoundComparison {
    int n = 0;
    bool x_le_log2_m = false;
    bool chain_middle = false;      // x (5m)^(x+1) <= (log2 m)(5m)^(2 log2 m + 1)
    bool new_below_ckos = false;    // log2 N_new < m / 2
    bool all() const { return x_le_log2_m && chain_middle && new_below_ckos; }
};
BoundComparison compare_bounds(int n);
BoundComparison compare_bounds(const BoundReport& r);

}  // namespace primegraph

#endif  // PRIMEGRAPH_RAMSEY_HPP
