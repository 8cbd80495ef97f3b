#include "swvote/desirability.hpp"

#include <stdexcept>
#include <string>

#include "swvote/boolean.hpp"
#include "swvote/product.hpp"

namespace swvote {

const char* to_string(DesirabilityRelation r) {
    switch (r) {
    case DesirabilityRelation::Equivalent: return "equivalent";
    case DesirabilityRelation::FirstMoreDesirable: return "first-more-desirable";
    case DesirabilityRelation::SecondMoreDesirable: return "second-more-desirable";
    case DesirabilityRelation::Incomparable: return "incomparable";
    }
    return "?";
}

DesirabilityRelation compare_desirability(const SwitchingFunction& f, int i, int j) {
    if (i == j) throw std::invalid_argument("cannot compare a voter with itself");
    if (i < 0 || i >= f.var_count() || j < 0 || j >= f.var_count())
        throw std::invalid_argument("voter index out of range");
    if (!is_monotone(f))
        throw std::domain_error("desirability is defined on monotone decision functions");

    std::uint64_t bi = std::uint64_t(1) << i;
    std::uint64_t bj = std::uint64_t(1) << j;
    bool ge = true, le = true; // "i in" >= / <= "j in" over the rest
    for (std::uint64_t a = 0; a < f.size() && (ge || le); ++a) {
        if (a & (bi | bj)) continue;
        bool with_i = f.get(a | bi);
        bool with_j = f.get(a | bj);
        if (with_j && !with_i) ge = false;
        if (with_i && !with_j) le = false;
    }
    if (ge && le) return DesirabilityRelation::Equivalent;
    if (ge) return DesirabilityRelation::FirstMoreDesirable;
    if (le) return DesirabilityRelation::SecondMoreDesirable;
    return DesirabilityRelation::Incomparable;
}

bool is_veto(const SwitchingFunction& f, int voter) {
    return weight(cofactor(f, voter, false)) == 0;
}

bool is_dummy(const SwitchingFunction& f, int voter) { return !depends_on(f, voter); }

bool is_dictator(const SwitchingFunction& f, int voter) {
    return f == from_products(f.var_count(), {Product{pos(voter)}});
}

bool is_clique(const SwitchingFunction& f, const std::vector<int>& members) {
    if (members.empty()) throw std::invalid_argument("clique needs at least one member");
    return f == from_products(f.var_count(), {Product::of_members(members)});
}

} // namespace swvote
