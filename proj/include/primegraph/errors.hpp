#ifndef PRIMEGRAPH_ERRORS_HPP
#define PRIMEGRAPH_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace primegraph {

// Caller supplied something outside an operation's domain.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed serialized input; offset is the byte (graph6) or line (text formats) at fault.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : InputError(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A mathematical guarantee failed to hold. Always a bug or a corrupted input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Refusal to run an exhaustive computation past its size/budget limit.
class Refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Node-expansion counter. Deterministic across machines, unlike wall time.
class Budget {
public:
    static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

    Budget() = default;
    explicit Budget(std::uint64_t limit) : limit_(limit) {}
    static Budget unlimited() { return Budget(kUnlimited); }

    // Returns false once the limit is hit; the caller must then abandon the search.
    bool spend(std::uint64_t n = 1) {
        if (limit_ == kUnlimited) {
            used_ += n;
            return true;
        }
        if (used_ + n > limit_) {
            exhausted_ = true;
            used_ = limit_;
            return false;
        }
        used_ += n;
        return true;
    }

    bool is_unlimited() const { return limit_ == kUnlimited; }
    bool exhausted() const { return exhausted_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_ = kUnlimited;
    std::uint64_t used_ = 0;
    bool exhausted_ = false;
};

// Three-valued result of a bounded search.
enum class SearchStatus { Found, Absent, Unknown };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Absent: return "absent";
        case SearchStatus::Unknown: return "unknown";
    }
    return "?";
}

}  // namespace primegraph

#endif  // PRIMEGRAPH_ERRORS_HPP
