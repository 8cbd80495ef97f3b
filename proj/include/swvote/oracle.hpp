#pragma once

#include <vector>

#include "swvote/bits.hpp"
#include "swvote/indices.hpp"
#include "swvote/product.hpp"
#include "swvote/voting.hpp"

namespace swvote {
namespace oracle {

// Brute-force reference implementations. Everything here works by direct
// enumeration over assignments and subsets; none of the quotient,
// expansion, or symmetric-function machinery is used, so agreement with
// the algebraic path is meaningful evidence.

/// Swing count of one voter by double evaluation of the table.
long long oracle_tbp(const SwitchingFunction& f, int voter);

/// Minimal winning coalitions of the (unrestricted) rule: every winning
/// subset all of whose proper subsets lose. n <= 20.
std::vector<Product> oracle_mwcs(const VotingSystem& sys);

/// Every index recomputed from first-principles counts; matches
/// full_report field for field.
IndexReport oracle_report(const VotingSystem& sys, int cap = kDefaultArityCap);

} // namespace oracle
} // namespace swvote
