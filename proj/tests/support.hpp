// Shared helpers for the test suites: deterministic random inputs only;
// oracles live next to the assertions that use them.
#pragma once

#include "scx/action.hpp"
#include "scx/enumerate.hpp"
#include "scx/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace scx::test {

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline Permutation random_permutation(std::mt19937& gen, int k) {
    std::vector<int> im(static_cast<size_t>(k));
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), gen);
    return Permutation::from_images(std::move(im));
}

/// Uniform over (sigma1, sigma2 in the centralizer of sigma1).
inline Z2Action random_commuting_pair(std::mt19937& gen, int k) {
    const Permutation s1 = random_permutation(gen, k);
    const auto cent = centralizer(s1);
    std::uniform_int_distribution<size_t> pick(0, cent.size() - 1);
    return Z2Action(s1, cent[pick(gen)]);
}

}  // namespace scx::test
