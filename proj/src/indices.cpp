#include "swvote/indices.hpp"

#include <algorithm>
#include <stdexcept>

#include "swvote/boolean.hpp"

namespace swvote {

const char* to_string(TbpFormula f) {
    switch (f) {
    case TbpFormula::SwingDirect: return "swing-direct";
    case TbpFormula::SwingDual: return "swing-dual";
    case TbpFormula::Derivative: return "derivative";
    case TbpFormula::PosQuotientDoubled: return "pos-quotient-doubled";
    case TbpFormula::NegQuotientDoubled: return "neg-quotient-doubled";
    case TbpFormula::QuotientGap: return "quotient-gap";
    case TbpFormula::CompPosQuotientDoubled: return "comp-pos-quotient-doubled";
    case TbpFormula::CompNegQuotientDoubled: return "comp-neg-quotient-doubled";
    case TbpFormula::CompQuotientGap: return "comp-quotient-gap";
    case TbpFormula::Auto: return "auto";
    }
    return "?";
}

TbpFormula resolve_formula(const SwitchingFunction& f, int voter, TbpFormula formula) {
    if (formula != TbpFormula::Auto) return formula;
    Polarity p = polarity(f, voter);
    bool monoform_pos = p == Polarity::MonoformPositive || p == Polarity::Independent;
    return monoform_pos ? TbpFormula::QuotientGap : TbpFormula::SwingDirect;
}

long long tbp(const SwitchingFunction& f, int voter, TbpFormula formula) {
    formula = resolve_formula(f, voter, formula);
    const std::vector<int> excl{voter};
    auto wx = [&](const SwitchingFunction& h) { return (long long)weight_excluding(h, excl); };

    if (formula != TbpFormula::SwingDirect && formula != TbpFormula::SwingDual) {
        Polarity p = polarity(f, voter);
        if (p != Polarity::MonoformPositive && p != Polarity::Independent)
            throw std::domain_error(std::string("formula ") + to_string(formula) +
                                    " requires a positively monoform variable, but X" +
                                    std::to_string(voter + 1) + " is " +
                                    (p == Polarity::Biform ? "biform" : "negatively monoform"));
    }

    SwitchingFunction f1 = cofactor(f, voter, true);
    SwitchingFunction f0 = cofactor(f, voter, false);
    long long half = (long long)(f.size() >> 1);

    switch (formula) {
    case TbpFormula::SwingDirect:
        return wx(combine(f1, complement(f0), BoolOp::And));
    case TbpFormula::SwingDual:
        return half - wx(combine(complement(f1), f0, BoolOp::Or));
    case TbpFormula::Derivative:
        return wx(combine(f1, f0, BoolOp::Xor));
    case TbpFormula::PosQuotientDoubled:
        return 2 * wx(f1) - (long long)weight(f);
    case TbpFormula::NegQuotientDoubled:
        return (long long)weight(f) - 2 * wx(f0);
    case TbpFormula::QuotientGap:
        return wx(f1) - wx(f0);
    case TbpFormula::CompPosQuotientDoubled:
        return (long long)weight(complement(f)) - 2 * wx(complement(f1));
    case TbpFormula::CompNegQuotientDoubled:
        return 2 * wx(complement(f0)) - (long long)weight(complement(f));
    case TbpFormula::CompQuotientGap:
        return wx(complement(f0)) - wx(complement(f1));
    case TbpFormula::Auto: break;
    }
    throw std::logic_error("unresolved formula");
}

long long tbp_restricted(const RestrictedSystem& rs, int voter) {
    const SwitchingFunction& g = rs.restricted;
    bool is_restricted = std::find(rs.restricted_vars.begin(), rs.restricted_vars.end(), voter) !=
                         rs.restricted_vars.end();
    TbpFormula formula =
        is_restricted ? TbpFormula::SwingDirect : resolve_formula(g, voter, TbpFormula::Auto);
    long long direct = tbp(g, voter, TbpFormula::SwingDirect);
    long long dual = tbp(g, voter, TbpFormula::SwingDual);
    if (direct != dual)
        throw std::logic_error("general swing formulas disagree on X" + std::to_string(voter + 1));
    if (formula == TbpFormula::SwingDirect) return direct;
    long long value = tbp(g, voter, formula);
    if (value != direct)
        throw std::logic_error("formula disagrees with direct swing count on X" +
                               std::to_string(voter + 1));
    return value;
}

Rational pbp(long long tbp_value, int n) {
    return Rational(tbp_value, (long long)1 << (n - 1));
}

namespace {

long long swing_count(const SwitchingFunction& f, int voter) {
    return tbp(f, voter, TbpFormula::SwingDirect);
}

} // namespace

std::optional<Rational> pii(const SwitchingFunction& f, int voter) {
    long long losses = (long long)weight(complement(f));
    if (losses == 0) return std::nullopt;
    return Rational(swing_count(f, voter), losses);
}

std::optional<Rational> ppi(const SwitchingFunction& f, int voter) {
    long long wins = (long long)weight(f);
    if (wins == 0) return std::nullopt;
    return Rational(swing_count(f, voter), wins);
}

std::optional<Rational> sat(const SwitchingFunction& f, int voter) {
    const std::vector<int> excl{voter};
    long long agree_yes = (long long)weight_excluding(cofactor(f, voter, true), excl);
    long long agree_no =
        (long long)weight_excluding(complement(cofactor(f, voter, false)), excl);
    return Rational(agree_yes + agree_no, (long long)f.size());
}

std::optional<Rational> nsat(const SwitchingFunction& f, int voter) {
    long long losses = (long long)weight(complement(f));
    if (losses == 0) return std::nullopt;
    const std::vector<int> excl{voter};
    long long agree_no =
        (long long)weight_excluding(complement(cofactor(f, voter, false)), excl);
    return Rational(agree_no, losses);
}

std::optional<Rational> psat(const SwitchingFunction& f, int voter) {
    long long wins = (long long)weight(f);
    if (wins == 0) return std::nullopt;
    const std::vector<int> excl{voter};
    long long agree_yes = (long long)weight_excluding(cofactor(f, voter, true), excl);
    return Rational(agree_yes, wins);
}

std::vector<long long> pgi(const VotingSystem& sys, int cap) {
    SwitchingFunction f = decision_function(sys, cap);
    std::vector<Product> mwcs = filter_mwcs(minimal_winning_coalitions(f), sys.forbidden);
    std::vector<long long> counts(sys.voter_count(), 0);
    for (const Product& p : mwcs)
        for (int m : p.members()) ++counts[m];
    return counts;
}

IndexReport full_report(const VotingSystem& sys, int cap) {
    SwitchingFunction f = decision_function(sys, cap);
    RestrictedSystem rs = apply_restrictions(f, sys.forbidden);
    const SwitchingFunction& g = rs.restricted;
    std::vector<long long> pgis = pgi(sys, cap);
    int n = sys.voter_count();

    IndexReport report;
    report.restricted = !sys.forbidden.empty();
    for (int m = 0; m < n; ++m) {
        VoterIndices row;
        row.name = sys.voters[m];
        for (const WeightRow& wr : sys.rows) row.weights.push_back(wr.weights[m]);
        row.restricted = std::find(rs.restricted_vars.begin(), rs.restricted_vars.end(), m) !=
                         rs.restricted_vars.end();
        row.tbp = tbp_restricted(rs, m);
        row.formula_used =
            row.restricted ? TbpFormula::SwingDirect : resolve_formula(g, m, TbpFormula::Auto);
        row.pbp = pbp(row.tbp, n);
        row.pii = pii(g, m);
        row.ppi = ppi(g, m);
        row.sat = sat(g, m);
        row.nsat = nsat(g, m);
        row.psat = psat(g, m);
        row.pgi = pgis[m];
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace swvote
