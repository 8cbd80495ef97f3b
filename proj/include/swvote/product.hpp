#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace swvote {

struct Literal {
    int var = 0;          // 0-based voter index; displayed 1-based
    bool positive = true;

    bool operator==(const Literal& o) const { return var == o.var && positive == o.positive; }
};

inline Literal pos(int var) { return Literal{var, true}; }
inline Literal neg(int var) { return Literal{var, false}; }

/// Conjunction of non-repeating literals. The empty product is the
/// constant 1; the constant 0 is not a product (a sum-of-products with no
/// products stands for 0).
class Product {
public:
    Product() = default;
    Product(std::initializer_list<Literal> lits);

    /// All-positive product over the given voters.
    static Product of_members(const std::vector<int>& members);

    void add(Literal l); // throws if the variable already appears

    bool empty() const { return pos_ == 0 && neg_ == 0; }
    int literal_count() const;
    int max_var() const; // -1 for the empty product

    std::uint32_t pos_mask() const { return pos_; }
    std::uint32_t neg_mask() const { return neg_; }

    bool has_var(int var) const { return ((pos_ | neg_) >> var) & 1; }

    /// True when the two products AND to the constant 0.
    bool clashes(const Product& o) const { return (pos_ & o.neg_) || (neg_ & o.pos_); }

    /// True when this product implies o, i.e. o's literals are a subset of
    /// this one's.
    bool implies(const Product& o) const {
        return (o.pos_ & ~pos_) == 0 && (o.neg_ & ~neg_) == 0;
    }

    bool evaluate(std::uint64_t assignment) const {
        return (assignment & pos_) == pos_ && (assignment & neg_) == 0;
    }

    std::vector<Literal> literals() const; // ascending variable order
    std::vector<int> members() const;      // positive variables, ascending

    Product with(Literal l) const {
        Product r = *this;
        r.add(l);
        return r;
    }

    bool operator==(const Product& o) const { return pos_ == o.pos_ && neg_ == o.neg_; }
    bool operator!=(const Product& o) const { return !(*this == o); }

    std::string to_string() const; // e.g. "X1 X2' X4"

private:
    std::uint32_t pos_ = 0;
    std::uint32_t neg_ = 0;
};

/// Sum of products over n variables. `disjoint` asserts that every pair of
/// products ANDs to 0.
struct SopForm {
    int n = 0;
    std::vector<Product> products;
    bool disjoint = false;
};

bool pairwise_disjoint(const SopForm& s);
bool evaluate(const SopForm& s, std::uint64_t assignment);

} // namespace swvote
