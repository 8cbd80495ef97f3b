#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "swvote/bits.hpp"
#include "swvote/product.hpp"

namespace swvote {

/// Table of the OR of the given products; the product list is retained as
/// the function's structured view.
SwitchingFunction from_products(int n, const std::vector<Product>& products,
                                int cap = kDefaultArityCap);

/// f with one variable fixed to a constant, kept at ambient arity (the
/// result no longer depends on the variable).
SwitchingFunction cofactor(const SwitchingFunction& f, int var, bool value);

/// Boolean quotient f/t: every literal of t fixed to 1, at ambient arity.
SwitchingFunction quotient(const SwitchingFunction& f, const Product& t);

SwitchingFunction complement(const SwitchingFunction& f);

enum class BoolOp { And, Or, Xor };

SwitchingFunction combine(const SwitchingFunction& f, const SwitchingFunction& g, BoolOp op);

/// Expansion of f over the given distinct variables: 2^|vars| entries in
/// key order (entry index bit j is the polarity of vars[j]), each key a
/// full-polarity product with value f/key. ORing key AND value over all
/// entries reproduces f.
std::vector<std::pair<Product, SwitchingFunction>>
boole_shannon_expand(const SwitchingFunction& f, const std::vector<int>& vars);

/// XOR of the two single-variable quotients; independent of the variable.
SwitchingFunction boolean_difference(const SwitchingFunction& f, int var);

/// Number of true rows.
std::uint64_t weight(const SwitchingFunction& f);

/// True-row count over the non-excluded variables: popcount / 2^|excluded|.
/// f must be independent of every excluded variable (checked).
std::uint64_t weight_excluding(const SwitchingFunction& f, const std::vector<int>& excluded);

bool depends_on(const SwitchingFunction& f, int var);

/// Rewrites s as an equivalent sum of pairwise-orthogonal products.
/// Sequential subtraction: each product is expanded against the literals of
/// the products before it, emitting one complemented-literal branch per
/// absent literal.
SopForm make_disjoint(const SopForm& s);

/// Symbolic quotient of a product list: drops products clashing with t and
/// strips t's literals from the rest. Disjointness is preserved.
SopForm quotient(const SopForm& s, const Product& t);

enum class Polarity { MonoformPositive, MonoformNegative, Independent, Biform };

/// Classification of f's dependence on one variable. Independent iff the
/// variable is a dummy.
Polarity polarity(const SwitchingFunction& f, int var);

/// True iff every variable is MonoformPositive or Independent.
bool is_monotone(const SwitchingFunction& f);

const char* to_string(Polarity p);

} // namespace swvote
