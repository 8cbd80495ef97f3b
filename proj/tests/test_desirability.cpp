#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swvote/desirability.hpp"

#include "swvote/boolean.hpp"
#include "swvote/indices.hpp"
#include "swvote/symmetric.hpp"
#include "swvote/voting.hpp"
#include "support.hpp"

using namespace swvote;

namespace {

SwitchingFunction lit(int n, Literal l) { return from_products(n, {Product{l}}); }

// (X1 or X2)(X3 or X4 X5)
SwitchingFunction bicameral() {
    return combine(
        combine(lit(5, pos(0)), lit(5, pos(1)), BoolOp::Or),
        combine(lit(5, pos(2)), combine(lit(5, pos(3)), lit(5, pos(4)), BoolOp::And), BoolOp::Or),
        BoolOp::And);
}

// President, vice-president, a five-seat senate and a nine-seat house.
// A bill passes with a majority of each chamber plus the president, the
// vice-president breaking a senate shortfall of one, or a two-thirds
// override of both chambers without the president.
struct FederalModel {
    static constexpr int kPresident = 0;
    static constexpr int kVice = 1;
    static constexpr int kSenators = 5;
    static constexpr int kReps = 9;
    static constexpr int kN = 2 + kSenators + kReps;

    std::vector<int> senate, house;
    SwitchingFunction f;

    FederalModel() {
        for (int s = 0; s < kSenators; ++s) senate.push_back(2 + s);
        for (int h = 0; h < kReps; ++h) house.push_back(2 + kSenators + h);
        SwitchingFunction override_term =
            combine(combine(lit(kN, neg(kPresident)),
                            sym_to_function(at_least(kSenators, 4, senate), kN), BoolOp::And),
                    sym_to_function(at_least(kReps, 6, house), kN), BoolOp::And);
        SwitchingFunction pass_house = sym_to_function(at_least(kReps, 5, house), kN);
        SwitchingFunction pass_term = combine(
            combine(combine(lit(kN, pos(kPresident)), lit(kN, neg(kVice)), BoolOp::And),
                    sym_to_function(at_least(kSenators, 3, senate), kN), BoolOp::And),
            pass_house, BoolOp::And);
        SwitchingFunction tie_term = combine(
            combine(combine(lit(kN, pos(kPresident)), lit(kN, pos(kVice)), BoolOp::And),
                    sym_to_function(at_least(kSenators, 2, senate), kN), BoolOp::And),
            pass_house, BoolOp::And);
        f = combine(combine(override_term, pass_term, BoolOp::Or), tie_term, BoolOp::Or);
    }
};

} // namespace

TEST_CASE("bicameral desirability relations") {
    SwitchingFunction f = bicameral();
    REQUIRE(is_monotone(f));
    CHECK(compare_desirability(f, 0, 1) == DesirabilityRelation::Equivalent);
    CHECK(compare_desirability(f, 2, 3) == DesirabilityRelation::FirstMoreDesirable);
    CHECK(compare_desirability(f, 3, 2) == DesirabilityRelation::SecondMoreDesirable);
    CHECK(compare_desirability(f, 2, 4) == DesirabilityRelation::FirstMoreDesirable);
    CHECK(compare_desirability(f, 3, 4) == DesirabilityRelation::Equivalent);
    CHECK(compare_desirability(f, 0, 2) == DesirabilityRelation::Incomparable);
    CHECK(compare_desirability(f, 1, 4) == DesirabilityRelation::Incomparable);
    CHECK_THROWS_AS(compare_desirability(f, 2, 2), std::invalid_argument);
}

TEST_CASE("totally symmetric rules make everyone equivalent") {
    SwitchingFunction f = decision_function(k_of_n_system(4, 3));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(compare_desirability(f, i, j) == DesirabilityRelation::Equivalent);
}

TEST_CASE("scaled federal model reproduces the desirability chain") {
    FederalModel model;
    REQUIRE(is_monotone(model.f));

    for (int s : model.senate) {
        CHECK(compare_desirability(model.f, FederalModel::kVice, s) ==
              DesirabilityRelation::SecondMoreDesirable);
        CHECK(compare_desirability(model.f, FederalModel::kPresident, s) ==
              DesirabilityRelation::FirstMoreDesirable);
    }
    CHECK(compare_desirability(model.f, FederalModel::kPresident, FederalModel::kVice) ==
          DesirabilityRelation::FirstMoreDesirable);

    // chamber members are interchangeable among themselves
    CHECK(compare_desirability(model.f, model.senate[0], model.senate[4]) ==
          DesirabilityRelation::Equivalent);
    CHECK(compare_desirability(model.f, model.house[0], model.house[8]) ==
          DesirabilityRelation::Equivalent);
}

TEST_CASE("equivalence is exactly swap invariance") {
    testsup::Rng rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + int(rng() % 5);
        SwitchingFunction f = testsup::random_monotone(rng, n);
        int i = int(rng() % n), j = int(rng() % n);
        if (i == j) continue;
        bool swap_invariant = true;
        for (std::uint64_t a = 0; a < f.size(); ++a) {
            std::uint64_t bi = (a >> i) & 1, bj = (a >> j) & 1;
            std::uint64_t swapped =
                (a & ~((std::uint64_t(1) << i) | (std::uint64_t(1) << j))) | (bi << j) | (bj << i);
            if (f.get(a) != f.get(swapped)) {
                swap_invariant = false;
                break;
            }
        }
        CHECK((compare_desirability(f, i, j) == DesirabilityRelation::Equivalent) ==
              swap_invariant);
    }
}

TEST_CASE("desirability is transitive on random monotone systems") {
    testsup::Rng rng(77077);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + int(rng() % 6);
        SwitchingFunction f = testsup::random_monotone(rng, n);
        // ge[i][j]: i at least as desirable as j
        std::vector<std::vector<bool>> ge(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) {
            ge[i][i] = true;
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                auto rel = compare_desirability(f, i, j);
                ge[i][j] = rel == DesirabilityRelation::Equivalent ||
                           rel == DesirabilityRelation::FirstMoreDesirable;
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (ge[i][j] && ge[j][k]) CHECK(ge[i][k]);
    }
}

TEST_CASE("veto") {
    // three permanent members and a four-member council needing two votes
    std::vector<int> council{3, 4, 5, 6};
    SwitchingFunction f =
        combine(from_products(7, {Product::of_members({0, 1, 2})}),
                sym_to_function(at_least(4, 2, council), 7), BoolOp::And);
    for (int p = 0; p < 3; ++p) CHECK(is_veto(f, p));
    for (int c : council) CHECK(!is_veto(f, c));

    SwitchingFunction majority = decision_function(k_of_n_system(3, 2));
    for (int m = 0; m < 3; ++m) CHECK(!is_veto(majority, m));

    CHECK(is_veto(from_products(3, {Product{pos(1)}}), 1));
}

TEST_CASE("dummy") {
    SwitchingFunction f = decision_function(weighted_system({49, 48, 1}, 51));
    CHECK(is_dummy(f, 2));
    CHECK(!is_dummy(f, 0));

    SwitchingFunction dict = decision_function(weighted_system({6, 1, 1}, 5));
    CHECK(is_dummy(dict, 1));
    CHECK(is_dummy(dict, 2));

    SwitchingFunction majority = decision_function(k_of_n_system(3, 2));
    for (int m = 0; m < 3; ++m) CHECK(!is_dummy(majority, m));
}

TEST_CASE("dictator and clique") {
    SwitchingFunction f = from_products(4, {Product{pos(1)}});
    CHECK(is_dictator(f, 1));
    CHECK(!is_dictator(f, 0));
    CHECK(is_dictator(decision_function(weighted_system({6, 1, 1}, 5)), 0));

    SwitchingFunction pact = from_products(3, {Product::of_members({0, 1})});
    CHECK(is_clique(pact, {0, 1}));
    CHECK(!is_clique(decision_function(k_of_n_system(3, 2)), {0, 1}));
    CHECK_THROWS_AS(is_clique(pact, {}), std::invalid_argument);
}

TEST_CASE("classification consequences") {
    testsup::Rng rng(321);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 6);
        SwitchingFunction f = testsup::random_monotone(rng, n);
        for (int m = 0; m < n; ++m) {
            if (is_dictator(f, m)) CHECK(is_veto(f, m));
            if (is_dummy(f, m)) CHECK(tbp(f, m) == 0);
        }
    }
    SwitchingFunction pact = from_products(4, {Product::of_members({1, 3})});
    CHECK(is_clique(pact, {1, 3}));
    CHECK(is_veto(pact, 1));
    CHECK(is_veto(pact, 3));
    CHECK(is_dummy(pact, 0));
}

TEST_CASE("non-monotone input is refused") {
    SwitchingFunction g =
        from_products(3, {Product{neg(0), pos(1), pos(2)}, Product{pos(0), neg(1), pos(2)}});
    CHECK_THROWS_AS(compare_desirability(g, 0, 2), std::domain_error);
}
