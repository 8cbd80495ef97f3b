#pragma once

// Shared generators and tiny evaluation oracles for the unit suites. The
// oracles here work by direct per-assignment evaluation only.

#include <cstdint>
#include <random>
#include <vector>

#include "swvote/bits.hpp"
#include "swvote/product.hpp"
#include "swvote/voting.hpp"

namespace testsup {

using swvote::ForbiddenCoalition;
using swvote::Literal;
using swvote::Product;
using swvote::SopForm;
using swvote::SwitchingFunction;
using swvote::VotingSystem;

using Rng = std::mt19937;

inline SwitchingFunction random_function(Rng& rng, int n) {
    SwitchingFunction f(n);
    std::uniform_int_distribution<int> bit(0, 1);
    for (std::uint64_t a = 0; a < f.size(); ++a) f.set(a, bit(rng));
    return f;
}

inline Product random_product(Rng& rng, int n, int max_literals) {
    std::uniform_int_distribution<int> count(0, max_literals);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    Product p;
    for (int i = count(rng); i > 0; --i) {
        int v = pick(rng);
        if (!p.has_var(v)) p.add(Literal{v, sign(rng) == 1});
    }
    return p;
}

inline SopForm random_sop(Rng& rng, int n, int max_products, int max_literals) {
    std::uniform_int_distribution<int> count(0, max_products);
    SopForm s;
    s.n = n;
    for (int i = count(rng); i > 0; --i) s.products.push_back(random_product(rng, n, max_literals));
    return s;
}

// Random monotone function: OR of a few all-positive products.
inline SwitchingFunction random_monotone(Rng& rng, int n) {
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> size(1, n);
    std::vector<Product> products;
    for (int i = count(rng); i > 0; --i) {
        Product p;
        for (int j = size(rng); j > 0; --j) {
            int v = pick(rng);
            if (!p.has_var(v)) p.add(swvote::pos(v));
        }
        if (!p.empty()) products.push_back(p);
    }
    return swvote::from_products(n, products);
}

inline VotingSystem random_weighted_system(Rng& rng, int n_min = 3, int n_max = 12) {
    std::uniform_int_distribution<int> nd(n_min, n_max);
    std::uniform_int_distribution<long long> wd(0, 99);
    std::uniform_int_distribution<int> supermajority(0, 1);
    int n = nd(rng);
    std::vector<long long> weights(n);
    long long total = 0;
    for (auto& w : weights) {
        w = wd(rng);
        total += w;
    }
    if (total == 0) {
        weights[0] = 1;
        total = 1;
    }
    long long majority = (total + 2) / 2; // strictly more than half
    long long quota = majority;
    if (supermajority(rng) && majority < total)
        quota = std::uniform_int_distribution<long long>(majority, total)(rng);
    return swvote::weighted_system(std::move(weights), quota);
}

inline ForbiddenCoalition random_pair(Rng& rng, int n) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    return swvote::make_forbidden({a, b});
}

// Direct-evaluation table of a product list; test-local oracle.
inline SwitchingFunction table_of(int n, const std::vector<Product>& products) {
    SwitchingFunction f(n);
    for (std::uint64_t a = 0; a < f.size(); ++a) {
        bool value = false;
        for (const Product& p : products) value = value || p.evaluate(a);
        f.set(a, value);
    }
    return f;
}

inline bool pointwise_le(const SwitchingFunction& f, const SwitchingFunction& g) {
    for (std::uint64_t a = 0; a < f.size(); ++a)
        if (f.get(a) && !g.get(a)) return false;
    return true;
}

} // namespace testsup
