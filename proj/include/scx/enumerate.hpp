#pragma once

#include "scx/action.hpp"
#include "scx/permutation.hpp"

#include <compare>
#include <vector>

namespace scx {

/// All k! permutations in lexicographic image order.
std::vector<Permutation> all_permutations(int k);

/// Ascending-part partitions of k, in lexicographic order.
std::vector<std::vector<int>> integer_partitions(int k);

/// The lexicographically least permutation with the given ascending cycle
/// type: fixed points first, then cycles of increasing length laid out on
/// consecutive points, each mapping x -> x + 1 except the last point.
Permutation cycle_type_rep(const std::vector<int>& type);

/// Some g with g p g^-1 == cycle_type_rep(p.cycle_type()).
Permutation conjugator_to_rep(const Permutation& p);

/// Every permutation commuting with p, generated from its cycle structure
/// (cycle rotations and permutations of equal-length cycles); sorted.
std::vector<Permutation> centralizer(const Permutation& p);

struct CanonicalPair {
    std::vector<int> sigma1, sigma2;

    auto operator<=>(const CanonicalPair&) const = default;
};

/// The lexicographically minimal images pair over all simultaneous
/// relabelings (g sigma1 g^-1, g sigma2 g^-1); conjugate actions share one
/// canonical pair.
CanonicalPair canonical_pair(const Z2Action& a);

/// All commuting pairs on k points (k! * number-of-cycle-types entries;
/// intended for exhaustive checks at small k).
std::vector<Z2Action> commuting_pairs(int k);

/// Canonical representatives of commuting pairs up to simultaneous
/// relabeling, sorted.
std::vector<CanonicalPair> canonical_commuting_pairs(int k);

}  // namespace scx
