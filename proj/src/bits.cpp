#include "swvote/bits.hpp"

#include <bit>

namespace swvote {

void ensure_arity(int n, int cap) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    int limit = cap < kHardArityLimit ? cap : kHardArityLimit;
    if (n > limit)
        throw arity_cap_error("variable count " + std::to_string(n) + " exceeds cap " +
                              std::to_string(limit));
}

SwitchingFunction::SwitchingFunction(int n, bool fill) : n_(n) {
    if (n < 0 || n > kHardArityLimit)
        throw std::invalid_argument("variable count out of range: " + std::to_string(n));
    std::size_t nwords = n_ >= 6 ? (std::size_t(1) << (n_ - 6)) : 1;
    words_.assign(nwords, fill ? ~std::uint64_t(0) : 0);
    if (fill) mask_tail();
}

void SwitchingFunction::mask_tail() {
    if (n_ < 6) words_.back() &= (std::uint64_t(1) << (std::uint64_t(1) << n_)) - 1;
}

std::uint64_t SwitchingFunction::count_ones() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::string SwitchingFunction::dump() const {
    std::string out = "n=" + std::to_string(n_) + "\n";
    std::uint64_t total = size();
    for (std::uint64_t i = 0; i < total; ++i) {
        out += get(i) ? '1' : '0';
        if ((i & 63) == 63 || i + 1 == total) out += '\n';
    }
    return out;
}

} // namespace swvote
