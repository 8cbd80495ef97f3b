#include "swvote/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace swvote {
namespace oracle {

namespace {

bool coalition_wins(const VotingSystem& sys, std::uint64_t coalition) {
    if (!sys.explicit_mwcs.empty()) {
        for (const Product& p : sys.explicit_mwcs)
            if ((coalition & p.pos_mask()) == p.pos_mask()) return true;
        return false;
    }
    for (const WeightRow& row : sys.rows) {
        long long sum = 0;
        for (std::uint64_t s = coalition; s; s &= s - 1) sum += row.weights[std::countr_zero(s)];
        if (sum < row.quota) return false;
    }
    return true;
}

std::uint64_t coalition_mask(const ForbiddenCoalition& fc) {
    std::uint64_t mask = 0;
    for (int m : fc.members) mask |= std::uint64_t(1) << m;
    return mask;
}

SwitchingFunction build_table(const VotingSystem& sys, bool with_restrictions, int cap) {
    ensure_arity(sys.voter_count(), cap);
    SwitchingFunction f(sys.voter_count());
    std::vector<std::uint64_t> banned;
    if (with_restrictions)
        for (const auto& fc : sys.forbidden) banned.push_back(coalition_mask(fc));
    for (std::uint64_t a = 0; a < f.size(); ++a) {
        bool value = coalition_wins(sys, a);
        for (std::uint64_t mask : banned)
            if ((a & mask) == mask) value = false;
        f.set(a, value);
    }
    return f;
}

} // namespace

long long oracle_tbp(const SwitchingFunction& f, int voter) {
    if (voter < 0 || voter >= f.var_count())
        throw std::invalid_argument("voter index out of range");
    std::uint64_t bit = std::uint64_t(1) << voter;
    long long count = 0;
    for (std::uint64_t a = 0; a < f.size(); ++a)
        if ((a & bit) && f.get(a) && !f.get(a ^ bit)) ++count;
    return count;
}

std::vector<Product> oracle_mwcs(const VotingSystem& sys) {
    sys.validate();
    int n = sys.voter_count();
    ensure_arity(n, 20);
    std::uint64_t total = std::uint64_t(1) << n;
    std::vector<bool> winning(total);
    for (std::uint64_t a = 0; a < total; ++a) winning[a] = coalition_wins(sys, a);

    std::vector<std::uint32_t> masks;
    for (std::uint64_t a = 0; a < total; ++a) {
        if (!winning[a]) continue;
        bool minimal = true;
        if (a != 0) {
            for (std::uint64_t s = (a - 1) & a;; s = (s - 1) & a) {
                if (winning[s]) {
                    minimal = false;
                    break;
                }
                if (s == 0) break;
            }
        }
        if (minimal) masks.push_back(std::uint32_t(a));
    }
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        std::uint32_t d = a ^ b;
        return d != 0 && (d & -d & a) != 0;
    });
    std::vector<Product> out;
    out.reserve(masks.size());
    for (std::uint32_t mask : masks) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) members.push_back(v);
        out.push_back(Product::of_members(members));
    }
    return out;
}

IndexReport oracle_report(const VotingSystem& sys, int cap) {
    sys.validate();
    int n = sys.voter_count();
    SwitchingFunction g = build_table(sys, true, cap);

    long long wins = 0;
    for (std::uint64_t a = 0; a < g.size(); ++a) wins += g.get(a);
    long long losses = (long long)g.size() - wins;

    std::uint64_t restricted_mask = 0;
    for (const auto& fc : sys.forbidden) restricted_mask |= coalition_mask(fc);

    std::vector<Product> mwcs = oracle_mwcs(sys);
    std::vector<long long> pgi_counts(n, 0);
    for (const Product& p : mwcs) {
        bool banned = false;
        for (const auto& fc : sys.forbidden)
            if ((p.pos_mask() & coalition_mask(fc)) == coalition_mask(fc)) {
                banned = true;
                break;
            }
        if (banned) continue;
        for (int m : p.members()) ++pgi_counts[m];
    }

    IndexReport report;
    report.restricted = !sys.forbidden.empty();
    for (int m = 0; m < n; ++m) {
        std::uint64_t bit = std::uint64_t(1) << m;
        long long swings = 0, agree_yes = 0, agree_no = 0;
        for (std::uint64_t a = 0; a < g.size(); ++a) {
            bool value = g.get(a);
            if (a & bit) {
                if (value && !g.get(a ^ bit)) ++swings;
                if (value) ++agree_yes;
            } else if (!value) {
                ++agree_no;
            }
        }

        VoterIndices row;
        row.name = sys.voters[m];
        for (const WeightRow& wr : sys.rows) row.weights.push_back(wr.weights[m]);
        row.restricted = (restricted_mask >> m) & 1;
        row.tbp = swings;
        row.formula_used = row.restricted ? TbpFormula::SwingDirect : TbpFormula::QuotientGap;
        row.pbp = Rational(swings, (long long)1 << (n - 1));
        row.pii = losses ? std::optional<Rational>(Rational(swings, losses)) : std::nullopt;
        row.ppi = wins ? std::optional<Rational>(Rational(swings, wins)) : std::nullopt;
        row.sat = Rational(agree_yes + agree_no, (long long)g.size());
        row.nsat = losses ? std::optional<Rational>(Rational(agree_no, losses)) : std::nullopt;
        row.psat = wins ? std::optional<Rational>(Rational(agree_yes, wins)) : std::nullopt;
        row.pgi = pgi_counts[m];
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace oracle
} // namespace swvote
