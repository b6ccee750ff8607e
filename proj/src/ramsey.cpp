#include "primegraph/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace primegraph {

namespace {

constexpr std::size_t kMaxExactBits = std::size_t{1} << 20;
constexpr std::int64_t kRecurrenceProductLimit = 200'000;
constexpr double kMultinomialBitsLimit = 20'000.0;

Polarity combine(Polarity a, Polarity b) {
    if (a == Polarity::Exact) return b;
    if (b == Polarity::Exact || a == b) return a;
    throw InvariantViolation("cannot combine an upper bound with a lower bound");
}

std::size_t bits(const BigInt& v) { return v == 0 ? 0 : boost::multiprecision::msb(v) + 1; }

BigBound minus_one(const BigBound& b) {
    if (b.value) return BigBound::integer(*b.value - 1, b.polarity);
    return BigBound::approx(b.mag.minus_small(Magnitude::point(1.0)), b.polarity);
}

}  // namespace

const char* to_string(Polarity p) {
    switch (p) {
        case Polarity::Exact: return "exact";
        case Polarity::Upper: return "upper";
        case Polarity::Lower: return "lower";
    }
    return "?";
}

BigBound BigBound::integer(const BigInt& v, Polarity p) {
    if (v < 0) throw InputError("BigBound holds nonnegative integers only");
    BigBound b;
    b.polarity = p;
    b.value = v;
    b.mag = Magnitude::of(v);
    return b;
}

BigBound BigBound::approx(const Magnitude& m, Polarity p) {
    BigBound b;
    b.polarity = p;
    b.mag = m;
    return b;
}

std::string BigBound::value_string() const { return value ? value->str() : mag.to_string(); }

Magnitude BigBound::log2() const { return mag.log2(); }

BigBound operator+(const BigBound& a, const BigBound& b) {
    Polarity p = combine(a.polarity, b.polarity);
    if (a.value && b.value) return BigBound::integer(*a.value + *b.value, p);
    return BigBound::approx(a.mag + b.mag, p);
}

BigBound operator*(const BigBound& a, const BigBound& b) {
    Polarity p = combine(a.polarity, b.polarity);
    if (a.value && b.value && bits(*a.value) + bits(*b.value) <= kMaxExactBits)
        return BigBound::integer(*a.value * *b.value, p);
    if ((a.value && *a.value == 0) || (b.value && *b.value == 0)) return BigBound::integer(0, p);
    return BigBound::approx(a.mag * b.mag, p);
}

BigBound pow(const BigBound& base, const BigBound& exponent) {
    Polarity p = combine(base.polarity, exponent.polarity);
    if (base.value && exponent.value && *exponent.value <= kMaxExactBits) {
        auto e = exponent.value->convert_to<unsigned>();
        if (bits(*base.value) * e <= kMaxExactBits) return BigBound::integer(boost::multiprecision::pow(*base.value, e), p);
    }
    return BigBound::approx(base.mag.pow(exponent.mag), p);
}

BigBound exp2(const BigBound& e) {
    if (e.value && *e.value < kMaxExactBits) return BigBound::integer(BigInt(1) << e.value->convert_to<unsigned>(), e.polarity);
    return BigBound::approx(e.mag.exp2(), e.polarity);
}

bool certainly_le(const BigBound& a, const BigBound& b) {
    if (a.value && b.value) return *a.value <= *b.value;
    return certainly_le(a.mag, b.mag);
}

bool certainly_lt(const BigBound& a, const BigBound& b) {
    if (a.value && b.value) return *a.value < *b.value;
    return certainly_lt(a.mag, b.mag);
}

// ---------------------------------------------------------------------------
// Exhaustive colouring search

namespace {

void check_sizes(const ColorSizes& sizes) {
    if (sizes.empty()) throw InputError("at least one colour is required");
    for (int s : sizes)
        if (s < 1) throw InputError("clique sizes must be >= 1");
}

class ColoringSearch {
public:
    ColoringSearch(const ColorSizes& sizes, int m, std::uint64_t budget)
        : sizes_(sizes), m_(m), k_(static_cast<int>(sizes.size())), budget_(budget),
          nb_(sizes.size(), std::vector<std::uint32_t>(m, 0)), uses_(sizes.size(), 0) {
        for (int j = 1; j < m; ++j)
            for (int i = 0; i < j; ++i) edges_.push_back({i, j});
        for (int c = 0; c < k_; ++c) {
            prev_same_.push_back(-1);
            for (int d = c - 1; d >= 0; --d)
                if (sizes[d] == sizes[c]) {
                    prev_same_.back() = d;
                    break;
                }
        }
    }

    // True when some colouring avoids every target clique.
    bool good_coloring_exists() { return dfs(0); }

private:
    bool has_clique(std::uint32_t cand, int need, int c) const {
        if (need <= 0) return true;
        if (std::popcount(cand) < need) return false;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (has_clique(cand & nb_[c][v], need - 1, c)) return true;
        }
        return false;
    }

    bool dfs(std::size_t idx) {
        if (idx == edges_.size()) return true;
        if (!budget_.spend()) throw Refusal("brute_force_ramsey_holds: node budget exhausted");
        auto [i, j] = edges_[idx];
        for (int c = 0; c < k_; ++c) {
            // colours with equal targets are interchangeable: open them in order
            if (prev_same_[c] >= 0 && uses_[prev_same_[c]] == 0) continue;
            std::uint32_t common = nb_[c][i] & nb_[c][j];
            if (has_clique(common, sizes_[c] - 2, c)) continue;
            nb_[c][i] |= 1u << j;
            nb_[c][j] |= 1u << i;
            ++uses_[c];
            bool ok = dfs(idx + 1);
            --uses_[c];
            nb_[c][i] &= ~(1u << j);
            nb_[c][j] &= ~(1u << i);
            if (ok) return true;
        }
        return false;
    }

    const ColorSizes& sizes_;
    int m_;
    int k_;
    Budget budget_;
    std::vector<std::vector<std::uint32_t>> nb_;
    std::vector<int> uses_;
    std::vector<int> prev_same_;
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace

bool brute_force_ramsey_holds(const ColorSizes& sizes, int m, std::uint64_t node_budget) {
    check_sizes(sizes);
    if (m < 1) throw InputError("m must be >= 1");
    if (*std::min_element(sizes.begin(), sizes.end()) == 1) return true;
    if (m > 30) throw Refusal("brute_force_ramsey_holds limited to m <= 30");
    ColoringSearch s(sizes, m, node_budget);
    return !s.good_coloring_exists();
}

// ---------------------------------------------------------------------------
// Upper bounds

const std::vector<std::pair<ColorSizes, int>>& exact_ramsey_table() {
    static const std::vector<std::pair<ColorSizes, int>> table = {{{3, 3}, 6}};
    return table;
}

namespace {

struct Reduced {
    std::optional<BigInt> settled;  // answer fixed by the small-case rules
    bool settled_exact = true;
    ColorSizes rest;                // sizes >= 3, sorted, when not settled
};

Reduced reduce(ColorSizes s) {
    Reduced r;
    if (*std::min_element(s.begin(), s.end()) == 1) {
        r.settled = 1;
        return r;
    }
    s.erase(std::remove(s.begin(), s.end(), 2), s.end());
    std::sort(s.begin(), s.end());
    if (s.empty()) {
        r.settled = 2;
    } else if (s.size() == 1) {
        r.settled = s[0];
    } else {
        for (const auto& [key, value] : exact_ramsey_table())
            if (key == s) r.settled = value;
        if (!r.settled) r.rest = std::move(s);
    }
    return r;
}

class Recurrence {
public:
    BigInt operator()(const ColorSizes& sizes) {
        Reduced r = reduce(sizes);
        if (r.settled) return *r.settled;
        auto it = memo_.find(r.rest);
        if (it != memo_.end()) return it->second;
        const int k = static_cast<int>(r.rest.size());
        BigInt total = 2 - k;
        for (int i = 0; i < k; ++i) {
            ColorSizes next = r.rest;
            --next[i];
            total += (*this)(next);
        }
        memo_.emplace(r.rest, total);
        return total;
    }

private:
    std::map<ColorSizes, BigInt> memo_;
};

BigInt binomial(const BigInt& n, std::uint64_t k) {
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// log2 of multinomial(sum p; p) is at most sum over i != L of p_i log2(S / p_i) + (S - p_L) / ln 2.
Magnitude multinomial_log2_bound(const std::vector<Magnitude>& parts) {
    std::size_t largest = 0;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        int level = std::max(parts[i].level(), parts[largest].level());
        if (parts[i].lifted_to(level).hi() > parts[largest].lifted_to(level).hi()) largest = i;
    }
    Magnitude total = Magnitude::point(0.0);
    for (const auto& p : parts) total = total + p;
    Magnitude log_total = total.log2();
    Magnitude bound = Magnitude::point(0.0);
    Magnitude rest = Magnitude::point(0.0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == largest) continue;
        Magnitude lp = parts[i].log2();
        Magnitude ratio = (log_total.level() == 0 && lp.level() == 0) ? log_total.minus_small(lp) : log_total;
        bound = bound + parts[i] * ratio;
        rest = rest + parts[i];
    }
    return bound + rest * Magnitude::point(1.0 / std::numbers::ln2);
}

}  // namespace

BigBound ramsey_upper(const ColorSizes& sizes) {
    check_sizes(sizes);
    std::vector<BigBound> b;
    for (int s : sizes) b.push_back(BigBound::integer(s));
    return ramsey_upper(b);
}

BigBound ramsey_upper(const std::vector<BigBound>& sizes) {
    if (sizes.empty()) throw InputError("at least one colour is required");
    Polarity p = Polarity::Exact;
    for (const auto& s : sizes) {
        if (s.polarity == Polarity::Lower) throw InputError("ramsey_upper needs exact or upper-bound sizes");
        if (s.value && *s.value < 1) throw InputError("clique sizes must be >= 1");
        if (s.value && *s.value == 1) return BigBound::integer(1);
        p = combine(p, s.polarity);
    }
    // drop the collapsing size-2 colours
    std::vector<BigBound> rest;
    for (const auto& s : sizes)
        if (!(s.value && *s.value == 2)) rest.push_back(s);
    if (rest.empty()) return BigBound::integer(2, p);
    if (rest.size() == 1) return BigBound::integer(0, p) + rest[0];

    bool small = true;
    std::int64_t product = 1;
    ColorSizes ints;
    for (const auto& s : rest) {
        if (!s.value || *s.value > kRecurrenceProductLimit) {
            small = false;
            break;
        }
        product *= s.value->convert_to<std::int64_t>();
        ints.push_back(s.value->convert_to<int>());
        if (product > kRecurrenceProductLimit) small = false;
    }
    if (small) {
        Reduced r = reduce(ints);
        static thread_local Recurrence rec;
        BigInt v = rec(ints);
        return BigBound::integer(v, r.settled && r.settled_exact ? p : Polarity::Upper);
    }

    // R(p_1 + 1, ..., p_k + 1) <= multinomial(p_1 + ... + p_k; p_1, ..., p_k) for k >= 2
    std::vector<Magnitude> parts;
    for (const auto& s : rest) parts.push_back(minus_one(s).mag);
    Magnitude log_bound = multinomial_log2_bound(parts);
    bool all_known = std::all_of(rest.begin(), rest.end(), [](const BigBound& s) { return s.has_value(); });
    if (all_known && log_bound.level() == 0 && log_bound.hi() <= kMultinomialBitsLimit) {
        BigInt result = 1, running = 0;
        for (const auto& s : rest) {
            BigInt part = *s.value - 1;
            BigInt k = std::min(part, running);
            running += part;
            result *= binomial(running, k.convert_to<std::uint64_t>());
        }
        return BigBound::integer(result, Polarity::Upper);
    }
    return BigBound::approx(log_bound.exp2(), Polarity::Upper);
}

// ---------------------------------------------------------------------------
// Monochromatic sets

namespace {

class MonoSearch {
public:
    MonoSearch(int t, const PairColoring& coloring, const ColorSizes& sizes)
        : t_(t), k_(static_cast<int>(sizes.size())), sizes_(sizes), col_(t, std::vector<int>(t, -1)) {
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) {
                int c = coloring(i, j);
                if (c < 0 || c >= k_) throw InputError("colouring returned an out-of-range colour");
                col_[i][j] = col_[j][i] = c;
            }
    }

    std::optional<MonoClique> pigeonhole() {
        std::vector<int> all(t_);
        for (int i = 0; i < t_; ++i) all[i] = i;
        steps_ = 0;
        return split(all, sizes_);
    }

    std::optional<MonoClique> exhaustive() {
        for (int c = 0; c < k_; ++c) {
            std::vector<int> chosen;
            if (clique(c, 0, chosen)) return MonoClique{c, chosen};
        }
        return std::nullopt;
    }

private:
    static constexpr std::uint64_t kStepLimit = 2'000'000;

    std::optional<MonoClique> split(const std::vector<int>& s, const ColorSizes& need) {
        if (++steps_ > kStepLimit) return std::nullopt;
        for (int c = 0; c < k_; ++c)
            if (need[c] <= 1 && !s.empty()) return MonoClique{c, {s[0]}};
        if (s.empty()) return std::nullopt;
        const int v = s[0];
        std::vector<std::vector<int>> classes(k_);
        for (std::size_t i = 1; i < s.size(); ++i) classes[col_[v][s[i]]].push_back(s[i]);
        for (int c = 0; c < k_; ++c) {
            ColorSizes next = need;
            --next[c];
            auto r = split(classes[c], next);
            if (!r) continue;
            if (r->color == c) r->indices.insert(r->indices.begin(), v);
            if (static_cast<int>(r->indices.size()) == sizes_[r->color]) return r;
        }
        return std::nullopt;
    }

    bool clique(int c, int from, std::vector<int>& chosen) {
        if (static_cast<int>(chosen.size()) == sizes_[c]) return true;
        for (int v = from; v < t_; ++v) {
            bool ok = true;
            for (int u : chosen)
                if (col_[u][v] != c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            if (clique(c, v + 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    int t_;
    int k_;
    ColorSizes sizes_;
    std::vector<std::vector<int>> col_;
    std::uint64_t steps_ = 0;
};

}  // namespace

std::optional<MonoClique> find_mono_clique(int t, const PairColoring& coloring, const ColorSizes& sizes) {
    check_sizes(sizes);
    if (t < 0) throw InputError("t must be >= 0");
    MonoSearch s(t, coloring, sizes);
    auto r = s.pigeonhole();
    if (!r) r = s.exhaustive();
    if (r) {
        const auto& idx = r->indices;
        if (static_cast<int>(idx.size()) != sizes[r->color]) throw InvariantViolation("monochromatic set has wrong size");
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if (coloring(idx[a], idx[b]) != r->color) throw InvariantViolation("set is not monochromatic");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Bound formulas

BigBound g_fn(int n) {
    if (n < 2) throw InputError("g(n) is integral only for n >= 2");
    BigInt four_pow = BigInt(1) << (2 * (n - 2));
    return BigBound::integer(four_pow * (n + 1) + 2 * (n - 2) + 1);
}

BigBound h_fn(int n, const BigBound& nprime, int i) {
    if (n < 1) throw InputError("h needs n >= 1");
    if (nprime.value && *nprime.value < 1) throw InputError("h needs n' >= 1");
    if (i < 2) throw InputError("h needs i >= 2");
    if (i == 2) return BigBound::integer(n);
    if (n == 1) return BigBound::integer(1);
    BigBound prev = h_fn(n, nprime, i - 1);
    std::vector<BigBound> sizes(7, BigBound::integer(n));
    sizes.push_back(nprime);
    sizes.push_back(nprime);
    sizes.push_back(prev);
    return BigBound::integer(n - 1) * ramsey_upper(sizes) + BigBound::integer(1);
}

BigBound f_exponent(const BigBound& n, const BigBound& n1, const BigBound& n2) {
    for (const auto* b : {&n, &n1, &n2})
        if (b->value && *b->value < 1) throw InputError("f needs arguments >= 1");
    std::vector<BigBound> sizes = {n1 + n, minus_one(n + n), n + n2, minus_one(n + n2)};
    return ramsey_upper(sizes);
}

BigBound f_fn(const BigBound& n, const BigBound& n1, const BigBound& n2) {
    return exp2(f_exponent(n, n1, n2) + BigBound::integer(1));
}

BoundReport bound_report(int n) {
    if (n < 2) throw InputError("bound_report needs n >= 2");
    BoundReport r;
    r.n = n;
    BigBound bn = BigBound::integer(n);
    r.g_n = g_fn(n);
    r.h_n = h_fn(n, r.g_n, n);
    r.x = ramsey_upper(std::vector<BigBound>{r.h_n, bn, bn, r.g_n});
    r.M = f_exponent(bn, r.h_n, r.g_n);
    BigBound log2_m = r.M + BigBound::integer(1);
    r.m = exp2(log2_m);
    BigBound log2_5m = BigBound::approx(Magnitude::log2_of_5(), Polarity::Exact) + log2_m;
    BigBound x_plus_1 = r.x + BigBound::integer(1);
    r.log2_N_new = BigBound::approx(r.x.log2(), r.x.polarity) + x_plus_1 * log2_5m;
    r.N_new = r.x * pow(BigBound::integer(5) * r.m, x_plus_1);
    r.log2_N_ckos = r.m.value ? BigBound::integer(*r.m.value / 2, r.m.polarity)
                              : BigBound::approx(r.m.mag.half(), r.m.polarity);
    r.N_ckos_lower = BigBound::approx(r.log2_N_ckos.mag.exp2(), Polarity::Lower);
    return r;
}

BoundComparison compare_bounds(const BoundReport& r) {
    BoundComparison c;
    c.n = r.n;
    BigBound log2_m = r.M + BigBound::integer(1);
    c.x_le_log2_m = certainly_le(r.x, log2_m);
    BigBound log2_5m = BigBound::approx(Magnitude::log2_of_5(), Polarity::Exact) + log2_m;
    BigBound rhs = BigBound::approx(log2_m.log2(), log2_m.polarity) +
                   (BigBound::integer(2) * log2_m + BigBound::integer(1)) * log2_5m;
    c.chain_middle = certainly_le(r.log2_N_new, rhs);
    c.new_below_ckos = certainly_lt(r.log2_N_new, r.log2_N_ckos);
    return c;
}

BoundComparison compare_bounds(int n) { return compare_bounds(bound_report(n)); }

}  // namespace primegraph
