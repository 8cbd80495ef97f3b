#include "swvote/voting.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace swvote {

ForbiddenCoalition make_forbidden(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("forbidden coalition repeats a voter");
    if (members.size() < 2)
        throw std::invalid_argument("forbidden coalition needs at least two voters");
    if (members.front() < 0)
        throw std::invalid_argument("forbidden coalition has a negative voter index");
    return ForbiddenCoalition{std::move(members)};
}

void VotingSystem::validate() const {
    int n = voter_count();
    if (n < 1) throw std::invalid_argument("system has no voters");
    std::set<std::string> seen;
    for (const auto& name : voters)
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate voter name \"" + name + "\"");
    if (rows.empty() == explicit_mwcs.empty())
        throw std::invalid_argument("exactly one of weight rows / explicit coalitions required");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (int(rows[r].weights.size()) != n)
            throw std::invalid_argument("row " + std::to_string(r + 1) + " has " +
                                        std::to_string(rows[r].weights.size()) + " weights for " +
                                        std::to_string(n) + " voters");
        if (rows[r].quota < 1)
            throw std::invalid_argument("quota must be >= 1 in row " + std::to_string(r + 1));
        for (long long w : rows[r].weights)
            if (w < 0)
                throw std::invalid_argument("negative weight in row " + std::to_string(r + 1));
    }
    for (const Product& p : explicit_mwcs) {
        if (p.neg_mask() != 0 || p.empty())
            throw std::invalid_argument("explicit coalitions must be non-empty positive products");
        if (p.max_var() >= n) throw std::invalid_argument("explicit coalition names an unknown voter");
    }
    for (const auto& fc : forbidden) {
        if (fc.members.size() < 2)
            throw std::invalid_argument("forbidden coalition needs at least two voters");
        for (int m : fc.members)
            if (m < 0 || m >= n)
                throw std::invalid_argument("forbidden coalition voter index out of range");
    }
}

VotingSystem weighted_system(std::vector<long long> weights, long long quota,
                             std::vector<std::string> names) {
    VotingSystem sys;
    if (names.empty())
        for (std::size_t i = 0; i < weights.size(); ++i)
            names.push_back("X" + std::to_string(i + 1));
    sys.voters = std::move(names);
    sys.rows.push_back(WeightRow{std::move(weights), quota});
    sys.validate();
    return sys;
}

VotingSystem k_of_n_system(int n, int k) {
    return weighted_system(std::vector<long long>(n, 1), k);
}

namespace {

// Partial weight sums split at bit 6 so each assignment costs O(1).
struct RowSums {
    std::vector<long long> low, high;
    int low_bits;

    RowSums(const std::vector<long long>& w, int n) {
        low_bits = n < 6 ? n : 6;
        low.assign(std::size_t(1) << low_bits, 0);
        for (std::uint64_t s = 1; s < low.size(); ++s)
            low[s] = low[s & (s - 1)] + w[std::countr_zero(s)];
        high.assign(std::size_t(1) << (n - low_bits), 0);
        for (std::uint64_t s = 1; s < high.size(); ++s)
            high[s] = high[s & (s - 1)] + w[low_bits + std::countr_zero(s)];
    }

    long long at(std::uint64_t a) const {
        return low[a & (low.size() - 1)] + high[a >> low_bits];
    }
};

} // namespace

SwitchingFunction decision_function(const VotingSystem& sys, int cap) {
    sys.validate();
    int n = sys.voter_count();
    ensure_arity(n, cap);
    if (!sys.explicit_mwcs.empty()) return from_products(n, sys.explicit_mwcs, cap);
    SwitchingFunction f(n, true);
    for (const WeightRow& row : sys.rows) {
        RowSums sums(row.weights, n);
        for (std::uint64_t a = 0; a < f.size(); ++a)
            if (sums.at(a) < row.quota) f.set(a, false);
    }
    return f;
}

std::vector<Product> minimal_winning_coalitions(const SwitchingFunction& f) {
    if (!is_monotone(f))
        throw std::domain_error("minimal winning coalitions are defined on monotone functions");
    std::vector<std::uint32_t> masks;
    for (std::uint64_t a = 0; a < f.size(); ++a) {
        if (!f.get(a)) continue;
        bool minimal = true;
        for (std::uint64_t rest = a; rest && minimal; rest &= rest - 1) {
            std::uint64_t bit = rest & ~(rest - 1);
            if (f.get(a ^ bit)) minimal = false;
        }
        if (minimal) masks.push_back(std::uint32_t(a));
    }
    // ascending member lists compare lexicographically by their lowest
    // differing element
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        std::uint32_t d = a ^ b;
        return d != 0 && (d & -d & a) != 0;
    });
    std::vector<Product> out;
    out.reserve(masks.size());
    for (std::uint32_t mask : masks) {
        Product p;
        for (int v = 0; v < f.var_count(); ++v)
            if ((mask >> v) & 1) p.add(pos(v));
        out.push_back(p);
    }
    return out;
}

RestrictedSystem apply_restrictions(const SwitchingFunction& f,
                                    const std::vector<ForbiddenCoalition>& forbidden) {
    RestrictedSystem rs;
    rs.base = f;
    rs.restricted = f;
    rs.restricted.sop.reset();
    if (forbidden.empty()) return rs;
    if (!is_monotone(f))
        throw std::domain_error("coalition restrictions apply to monotone decision functions");
    std::set<int> vars;
    for (const auto& fc : forbidden) {
        Product t = fc.as_product();
        if (t.max_var() >= f.var_count())
            throw std::invalid_argument("forbidden coalition voter index out of range");
        std::uint64_t mask = t.pos_mask();
        std::uint64_t all = rs.restricted.size() - 1;
        for (std::uint64_t a = mask;; a = (a + 1) | mask) {
            rs.restricted.set(a, false);
            if (a == all) break;
        }
        for (int m : fc.members) vars.insert(m);
    }
    rs.restricted_vars.assign(vars.begin(), vars.end());
    return rs;
}

SwitchingFunction restricted_via_expansion(const SwitchingFunction& f,
                                           const std::vector<ForbiddenCoalition>& forbidden) {
    if (forbidden.empty()) return f;
    std::set<int> vars;
    for (const auto& fc : forbidden)
        for (int m : fc.members) vars.insert(m);
    std::vector<int> vlist(vars.begin(), vars.end());
    SwitchingFunction g(f.var_count());
    for (auto& [key, sub] : boole_shannon_expand(f, vlist)) {
        bool nullified = false;
        for (const auto& fc : forbidden)
            if (key.implies(fc.as_product())) {
                nullified = true;
                break;
            }
        if (nullified) continue;
        SwitchingFunction key_table = from_products(f.var_count(), {key});
        g = combine(g, combine(key_table, sub, BoolOp::And), BoolOp::Or);
    }
    g.sop.reset();
    return g;
}

std::vector<Product> filter_mwcs(const std::vector<Product>& mwcs,
                                 const std::vector<ForbiddenCoalition>& forbidden) {
    std::vector<Product> out;
    for (const Product& p : mwcs) {
        bool banned = false;
        for (const auto& fc : forbidden)
            if (p.implies(fc.as_product())) {
                banned = true;
                break;
            }
        if (!banned) out.push_back(p);
    }
    return out;
}

} // namespace swvote
