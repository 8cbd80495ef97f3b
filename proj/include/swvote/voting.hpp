#pragma once

#include <string>
#include <vector>

#include "swvote/bits.hpp"
#include "swvote/boolean.hpp"
#include "swvote/product.hpp"

namespace swvote {

struct WeightRow {
    std::vector<long long> weights; // one non-negative weight per voter
    long long quota = 1;            // >= 1; ties (sum == quota) win
};

/// A voter set barred from joint membership in any coalition.
struct ForbiddenCoalition {
    std::vector<int> members; // >= 2 distinct voter indices, ascending

    Product as_product() const { return Product::of_members(members); }
};

ForbiddenCoalition make_forbidden(std::vector<int> members);

/// A yes-no voting system. The decision rule is either a conjunction of
/// weighted-quota rows (one row for scalar-weighted systems, several for
/// vector-weighted ones) or an explicit list of minimal winning coalitions.
struct VotingSystem {
    std::vector<std::string> voters;
    std::vector<WeightRow> rows;
    std::vector<Product> explicit_mwcs; // alternative to rows
    std::vector<ForbiddenCoalition> forbidden;

    int voter_count() const { return int(voters.size()); }
    void validate() const;
};

/// Scalar-weighted [quota; w1,...,wn] system. Voters default to X1..Xn.
VotingSystem weighted_system(std::vector<long long> weights, long long quota,
                             std::vector<std::string> names = {});

/// Unit-weight system passing with at least k yes votes.
VotingSystem k_of_n_system(int n, int k);

/// Table of the decision rule: an assignment wins iff every row's quota is
/// met (or, for explicit-coalition systems, some listed coalition is
/// contained in the supporters).
SwitchingFunction decision_function(const VotingSystem& sys, int cap = kDefaultArityCap);

/// All minimal winning coalitions of a monotone function, as positive
/// products sorted lexicographically by member indices. Refuses
/// non-monotone input.
std::vector<Product> minimal_winning_coalitions(const SwitchingFunction& f);

/// A decision function together with its coalition-restricted variant.
struct RestrictedSystem {
    SwitchingFunction base;       // f
    SwitchingFunction restricted; // g <= f; equals f when nothing is forbidden
    std::vector<int> restricted_vars; // ascending union of forbidden members
};

/// Zeroes every assignment in which all members of some forbidden
/// coalition vote yes. f must be monotone when the list is non-empty.
RestrictedSystem apply_restrictions(const SwitchingFunction& f,
                                    const std::vector<ForbiddenCoalition>& forbidden);

/// Same table built the long way round: expand f over the union of the
/// restricted variables and zero each subfunction whose key contains a
/// forbidden coalition. Equal to apply_restrictions by construction.
SwitchingFunction restricted_via_expansion(const SwitchingFunction& f,
                                           const std::vector<ForbiddenCoalition>& forbidden);

/// Drops every coalition that contains all members of some forbidden set.
std::vector<Product> filter_mwcs(const std::vector<Product>& mwcs,
                                 const std::vector<ForbiddenCoalition>& forbidden);

} // namespace swvote
