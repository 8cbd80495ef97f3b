#include "swvote/boolean.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace swvote {

namespace {

// Bit patterns selecting assignments where variable v (< 6) is 1 / 0.
constexpr std::uint64_t kVarOne[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
};

void check_var(const SwitchingFunction& f, int var) {
    if (var < 0 || var >= f.var_count())
        throw std::invalid_argument("variable index out of range: X" + std::to_string(var + 1));
}

// In-place AND with the half-space {var == value}.
void restrict_to_literal(SwitchingFunction& f, int var, bool value) {
    auto& w = f.words();
    if (var < 6) {
        std::uint64_t m = value ? kVarOne[var] : ~kVarOne[var];
        for (auto& x : w) x &= m;
    } else {
        for (std::size_t j = 0; j < w.size(); ++j)
            if (((j >> (var - 6)) & 1) != std::size_t(value)) w[j] = 0;
    }
    f.mask_tail();
}

} // namespace

SwitchingFunction from_products(int n, const std::vector<Product>& products, int cap) {
    ensure_arity(n, cap);
    SwitchingFunction f(n);
    for (const Product& p : products) {
        if (p.max_var() >= n)
            throw std::invalid_argument("product uses X" + std::to_string(p.max_var() + 1) +
                                        " beyond " + std::to_string(n) + " variables");
        SwitchingFunction term(n, true);
        for (const Literal& l : p.literals()) restrict_to_literal(term, l.var, l.positive);
        for (std::size_t i = 0; i < f.words().size(); ++i) f.words()[i] |= term.words()[i];
    }
    f.sop = SopForm{n, products, false};
    return f;
}

SwitchingFunction cofactor(const SwitchingFunction& f, int var, bool value) {
    check_var(f, var);
    SwitchingFunction r(f.var_count());
    const auto& src = f.words();
    auto& dst = r.words();
    if (var < 6) {
        int shift = 1 << var;
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (value) {
                std::uint64_t x = src[i] & kVarOne[var];
                dst[i] = x | (x >> shift);
            } else {
                std::uint64_t x = src[i] & ~kVarOne[var];
                dst[i] = x | (x << shift);
            }
        }
    } else {
        std::size_t half = std::size_t(1) << (var - 6);
        for (std::size_t base = 0; base < src.size(); base += 2 * half) {
            std::size_t from = base + (value ? half : 0);
            for (std::size_t k = 0; k < half; ++k)
                dst[base + k] = dst[base + half + k] = src[from + k];
        }
    }
    r.mask_tail();
    return r;
}

SwitchingFunction quotient(const SwitchingFunction& f, const Product& t) {
    if (t.max_var() >= f.var_count())
        throw std::invalid_argument("quotient term uses X" + std::to_string(t.max_var() + 1) +
                                    " beyond " + std::to_string(f.var_count()) + " variables");
    SwitchingFunction r = f;
    r.sop.reset();
    for (const Literal& l : t.literals()) r = cofactor(r, l.var, l.positive);
    return r;
}

SwitchingFunction complement(const SwitchingFunction& f) {
    SwitchingFunction r(f.var_count());
    for (std::size_t i = 0; i < f.words().size(); ++i) r.words()[i] = ~f.words()[i];
    r.mask_tail();
    return r;
}

SwitchingFunction combine(const SwitchingFunction& f, const SwitchingFunction& g, BoolOp op) {
    if (f.var_count() != g.var_count())
        throw std::invalid_argument("arity mismatch: " + std::to_string(f.var_count()) + " vs " +
                                    std::to_string(g.var_count()));
    SwitchingFunction r(f.var_count());
    for (std::size_t i = 0; i < f.words().size(); ++i) {
        switch (op) {
        case BoolOp::And: r.words()[i] = f.words()[i] & g.words()[i]; break;
        case BoolOp::Or: r.words()[i] = f.words()[i] | g.words()[i]; break;
        case BoolOp::Xor: r.words()[i] = f.words()[i] ^ g.words()[i]; break;
        }
    }
    return r;
}

std::vector<std::pair<Product, SwitchingFunction>>
boole_shannon_expand(const SwitchingFunction& f, const std::vector<int>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        check_var(f, vars[i]);
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw std::invalid_argument("duplicate expansion variable X" +
                                            std::to_string(vars[i] + 1));
    }
    std::vector<std::pair<Product, SwitchingFunction>> out;
    out.reserve(std::size_t(1) << vars.size());
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << vars.size()); ++k) {
        Product key;
        for (std::size_t j = 0; j < vars.size(); ++j)
            key.add(Literal{vars[j], ((k >> j) & 1) != 0});
        out.emplace_back(key, quotient(f, key));
    }
    return out;
}

SwitchingFunction boolean_difference(const SwitchingFunction& f, int var) {
    return combine(cofactor(f, var, true), cofactor(f, var, false), BoolOp::Xor);
}

std::uint64_t weight(const SwitchingFunction& f) { return f.count_ones(); }

bool depends_on(const SwitchingFunction& f, int var) {
    return cofactor(f, var, true) != cofactor(f, var, false);
}

std::uint64_t weight_excluding(const SwitchingFunction& f, const std::vector<int>& excluded) {
    for (int v : excluded) {
        check_var(f, v);
        if (depends_on(f, v))
            throw std::domain_error("function depends on excluded variable X" +
                                    std::to_string(v + 1));
    }
    return f.count_ones() >> excluded.size();
}

namespace {

// C AND NOT Q as a disjoint list; assumes C does not clash with Q.
std::vector<Product> subtract_product(const Product& c, const Product& q) {
    std::vector<Product> out;
    Product prefix = c;
    for (const Literal& l : q.literals()) {
        if (prefix.has_var(l.var)) continue; // same polarity: already implied
        out.push_back(prefix.with(Literal{l.var, !l.positive}));
        prefix.add(l);
    }
    // no absent literals means C implies Q and the remainder is empty
    return out;
}

} // namespace

SopForm make_disjoint(const SopForm& s) {
    SopForm out;
    out.n = s.n;
    out.disjoint = true;
    for (std::size_t i = 0; i < s.products.size(); ++i) {
        std::vector<Product> candidates{s.products[i]};
        for (std::size_t j = 0; j < i && !candidates.empty(); ++j) {
            const Product& q = s.products[j];
            std::vector<Product> next;
            for (const Product& c : candidates) {
                if (c.clashes(q)) {
                    next.push_back(c);
                    continue;
                }
                auto parts = subtract_product(c, q);
                next.insert(next.end(), parts.begin(), parts.end());
            }
            candidates = std::move(next);
        }
        out.products.insert(out.products.end(), candidates.begin(), candidates.end());
    }
    return out;
}

SopForm quotient(const SopForm& s, const Product& t) {
    SopForm out;
    out.n = s.n;
    out.disjoint = s.disjoint;
    for (const Product& p : s.products) {
        if (p.clashes(t)) continue;
        Product reduced;
        for (const Literal& l : p.literals())
            if (!t.has_var(l.var)) reduced.add(l);
        out.products.push_back(reduced);
    }
    return out;
}

Polarity polarity(const SwitchingFunction& f, int var) {
    check_var(f, var);
    SwitchingFunction q1 = cofactor(f, var, true);
    SwitchingFunction q0 = cofactor(f, var, false);
    if (q1 == q0) return Polarity::Independent;
    bool ge = true, le = true; // q1 >= q0, q1 <= q0 pointwise
    for (std::size_t i = 0; i < q1.words().size(); ++i) {
        if (q0.words()[i] & ~q1.words()[i]) ge = false;
        if (q1.words()[i] & ~q0.words()[i]) le = false;
    }
    if (ge) return Polarity::MonoformPositive;
    if (le) return Polarity::MonoformNegative;
    return Polarity::Biform;
}

bool is_monotone(const SwitchingFunction& f) {
    for (int v = 0; v < f.var_count(); ++v) {
        Polarity p = polarity(f, v);
        if (p != Polarity::MonoformPositive && p != Polarity::Independent) return false;
    }
    return true;
}

const char* to_string(Polarity p) {
    switch (p) {
    case Polarity::MonoformPositive: return "+";
    case Polarity::MonoformNegative: return "-";
    case Polarity::Independent: return ".";
    case Polarity::Biform: return "~";
    }
    return "?";
}

} // namespace swvote
