#include "swvote/symmetric.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace swvote {

namespace {

std::vector<int> default_vars(int n, std::vector<int> vars) {
    if (!vars.empty()) return vars;
    vars.resize(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
    return vars;
}

void check_sym(const SymmetricFunction& s) {
    if (s.arity < 0 || s.arity > 30) throw std::invalid_argument("symmetric arity out of range");
    if (int(s.vars.size()) != s.arity)
        throw std::invalid_argument("symmetric function variable list does not match arity");
    if (s.charset & ~SymmetricFunction::full_charset(s.arity))
        throw std::invalid_argument("characteristic set exceeds arity");
}

} // namespace

SymmetricFunction at_least(int n, int k, std::vector<int> vars) {
    if (n < 0) throw std::invalid_argument("negative arity");
    SymmetricFunction s;
    s.arity = n;
    s.vars = default_vars(n, std::move(vars));
    if (k <= 0)
        s.charset = SymmetricFunction::full_charset(n);
    else if (k <= n)
        s.charset = SymmetricFunction::full_charset(n) & ~((std::uint32_t(1) << k) - 1);
    else
        s.charset = 0;
    check_sym(s);
    return s;
}

SymmetricFunction sym_counts(int n, const std::vector<int>& counts, std::vector<int> vars) {
    SymmetricFunction s;
    s.arity = n;
    s.vars = default_vars(n, std::move(vars));
    for (int c : counts) {
        if (c < 0 || c > n)
            throw std::invalid_argument("accepted count " + std::to_string(c) + " outside 0.." +
                                        std::to_string(n));
        s.charset |= std::uint32_t(1) << c;
    }
    check_sym(s);
    return s;
}

SwitchingFunction sym_to_function(const SymmetricFunction& s, int ambient_n, int cap) {
    check_sym(s);
    ensure_arity(ambient_n, cap);
    std::uint64_t mask = 0;
    for (int v : s.vars) {
        if (v < 0 || v >= ambient_n)
            throw std::invalid_argument("symmetric variable X" + std::to_string(v + 1) +
                                        " outside ambient arity " + std::to_string(ambient_n));
        std::uint64_t bit = std::uint64_t(1) << v;
        if (mask & bit)
            throw std::invalid_argument("duplicate symmetric variable X" + std::to_string(v + 1));
        mask |= bit;
    }
    SwitchingFunction f(ambient_n);
    for (std::uint64_t a = 0; a < f.size(); ++a)
        if ((s.charset >> std::popcount(a & mask)) & 1) f.set(a, true);
    return f;
}

SymmetricFunction sym_quotient(const SymmetricFunction& s, Literal lit) {
    check_sym(s);
    auto it = std::find(s.vars.begin(), s.vars.end(), lit.var);
    if (it == s.vars.end())
        throw std::invalid_argument("X" + std::to_string(lit.var + 1) +
                                    " is not a variable of the symmetric function");
    SymmetricFunction r;
    r.arity = s.arity - 1;
    r.vars = s.vars;
    r.vars.erase(r.vars.begin() + (it - s.vars.begin()));
    std::uint32_t keep = SymmetricFunction::full_charset(r.arity);
    r.charset = (lit.positive ? (s.charset >> 1) : s.charset) & keep;
    return r;
}

SymmetricFunction sym_difference(const SymmetricFunction& s, int var) {
    SymmetricFunction q1 = sym_quotient(s, pos(var));
    SymmetricFunction q0 = sym_quotient(s, neg(var));
    q1.charset ^= q0.charset;
    return q1;
}

std::uint64_t sym_weight(const SymmetricFunction& s) {
    check_sym(s);
    std::uint64_t total = 0;
    for (int m = 0; m <= s.arity; ++m)
        if ((s.charset >> m) & 1) total += binomial(s.arity, m);
    return total;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (n > 60) throw std::invalid_argument("binomial argument too large for exact arithmetic");
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * std::uint64_t(n - k + i) / i; // exact: c(n-k+i, i) is an integer
    }
    return c;
}

std::uint64_t binomial_tail(int n, int k) {
    std::uint64_t total = 0;
    for (int m = std::max(k, 0); m <= n; ++m) total += binomial(n, m);
    return total;
}

} // namespace swvote
