#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swvote/bits.hpp"
#include "swvote/rational.hpp"
#include "swvote/voting.hpp"

namespace swvote {

/// Swing-count formulas. The first two hold for any switching function;
/// the rest require the target variable to be positively monoform (or a
/// dummy) and are rejected otherwise. Quotient weights are counted over
/// the remaining n-1 variables, plain weights over all n.
enum class TbpFormula {
    SwingDirect,            // wt((f/Xm) AND (~f/~Xm))
    SwingDual,              // 2^(n-1) - wt((~f/Xm) OR (f/~Xm))
    Derivative,             // wt(df/dXm)
    PosQuotientDoubled,     // 2 wt(f/Xm) - wt(f)
    NegQuotientDoubled,     // wt(f) - 2 wt(f/~Xm)
    QuotientGap,            // wt(f/Xm) - wt(f/~Xm)
    CompPosQuotientDoubled, // wt(~f) - 2 wt(~f/Xm)
    CompNegQuotientDoubled, // 2 wt(~f/~Xm) - wt(~f)
    CompQuotientGap,        // wt(~f/~Xm) - wt(~f/Xm)
    Auto,                   // SwingDirect unless positively monoform, else QuotientGap
};

const char* to_string(TbpFormula f);

inline constexpr TbpFormula kAllTbpFormulas[] = {
    TbpFormula::SwingDirect,        TbpFormula::SwingDual,
    TbpFormula::Derivative,         TbpFormula::PosQuotientDoubled,
    TbpFormula::NegQuotientDoubled, TbpFormula::QuotientGap,
    TbpFormula::CompPosQuotientDoubled, TbpFormula::CompNegQuotientDoubled,
    TbpFormula::CompQuotientGap,
};

/// Total Banzhaf power: the number of profiles of the other voters on
/// which the voter's switch flips the outcome.
long long tbp(const SwitchingFunction& f, int voter, TbpFormula formula = TbpFormula::Auto);

/// Resolves Auto against the function's polarity in the voter.
TbpFormula resolve_formula(const SwitchingFunction& f, int voter, TbpFormula formula);

/// TBP on the restricted function; restricted voters go through the
/// general formula, others through Auto. The two general formulas are
/// cross-checked internally.
long long tbp_restricted(const RestrictedSystem& rs, int voter);

/// Probabilistic Banzhaf power TBP / 2^(n-1).
Rational pbp(long long tbp_value, int n);

// Conditioned indices; nullopt when the conditioning event has weight 0.
std::optional<Rational> pii(const SwitchingFunction& f, int voter);  // swing / wt(~f)
std::optional<Rational> ppi(const SwitchingFunction& f, int voter);  // swing / wt(f)
std::optional<Rational> sat(const SwitchingFunction& f, int voter);  // P[vote == outcome]
std::optional<Rational> nsat(const SwitchingFunction& f, int voter); // conditioned on a loss
std::optional<Rational> psat(const SwitchingFunction& f, int voter); // conditioned on a win

/// Public Good Index: per voter, the number of minimal winning coalitions
/// (of the unrestricted rule, minus any containing a forbidden set) that
/// include the voter.
std::vector<long long> pgi(const VotingSystem& sys, int cap = kDefaultArityCap);

struct VoterIndices {
    std::string name;
    std::vector<long long> weights; // one per row; empty for explicit systems
    long long tbp = 0;
    Rational pbp;
    std::optional<Rational> pii, ppi, sat, nsat, psat;
    long long pgi = 0;
    TbpFormula formula_used = TbpFormula::Auto;
    bool restricted = false; // member of some forbidden coalition

    bool operator==(const VoterIndices&) const = default;
};

struct IndexReport {
    std::vector<VoterIndices> rows;
    bool restricted = false;

    bool operator==(const IndexReport&) const = default;
};

/// Builds the decision function, applies the restrictions, and computes
/// every index for every voter with valid formula selection.
IndexReport full_report(const VotingSystem& sys, int cap = kDefaultArityCap);

} // namespace swvote
