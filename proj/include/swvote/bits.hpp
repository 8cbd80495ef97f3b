#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swvote/product.hpp"

namespace swvote {

// Soft arity cap applied at system-construction entry points. Overridable
// per call; 2^24 bits is a 2 MiB table.
inline constexpr int kDefaultArityCap = 24;

// Absolute limit of the dense representation (8 MiB table).
inline constexpr int kHardArityLimit = 26;

// Thrown when a requested arity exceeds the active cap.
class arity_cap_error : public std::length_error {
public:
    explicit arity_cap_error(const std::string& what) : std::length_error(what) {}
};

void ensure_arity(int n, int cap);

/// Dense truth table of a switching function over n voter variables.
///
/// Bit convention, used everywhere including text dumps: assignment index
/// bit k holds the vote of voter k (0-based internally; voter 0 is
/// displayed as X1). Unused high bits of the last word are kept zero.
class SwitchingFunction {
public:
    SwitchingFunction() : n_(0), words_(1, 0) {}
    explicit SwitchingFunction(int n, bool fill = false);

    static SwitchingFunction constant(int n, bool value) { return SwitchingFunction(n, value); }

    int var_count() const { return n_; }
    std::uint64_t size() const { return std::uint64_t(1) << n_; }

    bool get(std::uint64_t assignment) const {
        return (words_[assignment >> 6] >> (assignment & 63)) & 1;
    }
    void set(std::uint64_t assignment, bool value) {
        std::uint64_t m = std::uint64_t(1) << (assignment & 63);
        if (value)
            words_[assignment >> 6] |= m;
        else
            words_[assignment >> 6] &= ~m;
    }

    std::uint64_t count_ones() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    // Zeroes the pad bits above 2^n in the last word (n < 6 only).
    void mask_tail();

    bool operator==(const SwitchingFunction& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const SwitchingFunction& o) const { return !(*this == o); }

    /// Text dump: "n=<n>" then 2^n characters '0'/'1' in assignment-index
    /// order, 64 per line.
    std::string dump() const;

    // Optional structured view; when present it evaluates to this table.
    std::optional<SopForm> sop;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

} // namespace swvote
