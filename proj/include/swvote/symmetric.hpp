#pragma once

#include <cstdint>
#include <vector>

#include "swvote/bits.hpp"
#include "swvote/product.hpp"

namespace swvote {

/// Totally symmetric switching function over an explicit variable subset:
/// true iff the number of true variables among `vars` lies in the
/// characteristic set. charset bit m set means count m is accepted; the
/// full set {0..arity} is the constant 1 and the empty set the constant 0.
struct SymmetricFunction {
    int arity = 0;             // |vars|
    std::uint32_t charset = 0; // subset of {0..arity}
    std::vector<int> vars;     // ordered voter indices within a larger system

    bool is_constant_one() const { return charset == full_charset(arity); }
    bool is_constant_zero() const { return charset == 0; }

    static std::uint32_t full_charset(int arity) {
        return (std::uint32_t(1) << (arity + 1)) - 1;
    }
};

/// At-least-k-of-n function (characteristic set {k..n}) over the given
/// variables; vars defaults to 0..n-1.
SymmetricFunction at_least(int n, int k, std::vector<int> vars = {});

/// Symmetric function with an arbitrary accepted-count list.
SymmetricFunction sym_counts(int n, const std::vector<int>& counts, std::vector<int> vars = {});

/// Dense table at the given ambient arity; variables outside s.vars are
/// dummies.
SwitchingFunction sym_to_function(const SymmetricFunction& s, int ambient_n,
                                  int cap = kDefaultArityCap);

/// Quotient w.r.t. a literal on one of s's variables: arity drops by one,
/// a positive literal shifts the accepted counts down by one, a negative
/// literal clips them to the new arity.
SymmetricFunction sym_quotient(const SymmetricFunction& s, Literal lit);

/// Derivative w.r.t. one of s's variables: the symmetric function whose
/// accepted counts are the symmetric difference of the two quotients'.
/// For an at-least-k set this is the single level {k-1}.
SymmetricFunction sym_difference(const SymmetricFunction& s, int var);

/// Exact true-row count over s's own variables.
std::uint64_t sym_weight(const SymmetricFunction& s);

/// Binomial coefficient c(n,k); 0 outside 0 <= k <= n. Exact (n <= 60).
std::uint64_t binomial(int n, int k);

/// Cumulative coefficient C(n,k) = sum of c(n,m) for m = k..n; C(n,0) = 2^n.
std::uint64_t binomial_tail(int n, int k);

} // namespace swvote
