#include "swvote/product.hpp"

#include <bit>
#include <stdexcept>

namespace swvote {

Product::Product(std::initializer_list<Literal> lits) {
    for (const Literal& l : lits) add(l);
}

Product Product::of_members(const std::vector<int>& members) {
    Product p;
    for (int m : members) p.add(pos(m));
    return p;
}

void Product::add(Literal l) {
    if (l.var < 0 || l.var >= 32)
        throw std::invalid_argument("literal variable out of range: X" + std::to_string(l.var + 1));
    std::uint32_t bit = std::uint32_t(1) << l.var;
    if ((pos_ | neg_) & bit)
        throw std::invalid_argument("variable appears twice in product: X" + std::to_string(l.var + 1));
    (l.positive ? pos_ : neg_) |= bit;
}

int Product::literal_count() const { return std::popcount(pos_ | neg_); }

int Product::max_var() const {
    std::uint32_t all = pos_ | neg_;
    return all == 0 ? -1 : 31 - std::countl_zero(all);
}

std::vector<Literal> Product::literals() const {
    std::vector<Literal> out;
    for (int v = 0; v <= max_var(); ++v) {
        if ((pos_ >> v) & 1) out.push_back(pos(v));
        if ((neg_ >> v) & 1) out.push_back(neg(v));
    }
    return out;
}

std::vector<int> Product::members() const {
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
        if ((pos_ >> v) & 1) out.push_back(v);
    return out;
}

std::string Product::to_string() const {
    if (empty()) return "1";
    std::string out;
    for (const Literal& l : literals()) {
        if (!out.empty()) out += ' ';
        out += 'X';
        out += std::to_string(l.var + 1);
        if (!l.positive) out += '\'';
    }
    return out;
}

bool pairwise_disjoint(const SopForm& s) {
    for (std::size_t i = 0; i < s.products.size(); ++i)
        for (std::size_t j = i + 1; j < s.products.size(); ++j)
            if (!s.products[i].clashes(s.products[j])) return false;
    return true;
}

bool evaluate(const SopForm& s, std::uint64_t assignment) {
    for (const Product& p : s.products)
        if (p.evaluate(assignment)) return true;
    return false;
}

} // namespace swvote
