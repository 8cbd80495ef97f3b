#pragma once

#include <vector>

#include "swvote/bits.hpp"

namespace swvote {

enum class DesirabilityRelation {
    Equivalent,
    FirstMoreDesirable,
    SecondMoreDesirable,
    Incomparable,
};

const char* to_string(DesirabilityRelation r);

/// Coalition-formation desirability between two voters of a monotone
/// decision function: i is at least as desirable as j when swapping i in
/// for j never turns a win into a loss. Compared pointwise on the table.
DesirabilityRelation compare_desirability(const SwitchingFunction& f, int i, int j);

/// The voter's support is necessary for any win: f/~Xm = 0.
bool is_veto(const SwitchingFunction& f, int voter);

/// The voter swings no coalition: f is independent of the variable.
bool is_dummy(const SwitchingFunction& f, int voter);

/// The outcome is exactly the voter's vote: f = Xm.
bool is_dictator(const SwitchingFunction& f, int voter);

/// The outcome is exactly the members' unanimous support: f = AND of them.
bool is_clique(const SwitchingFunction& f, const std::vector<int>& members);

} // namespace swvote
