#pragma once

#include <compare>
#include <string>
#include <vector>

namespace scx {

/// Bijection of {0, ..., k-1}, stored as an images array.
///
/// Cycle notation follows the convention that "(a b c)" maps a -> b, b -> c,
/// c -> a. In particular the transitive cycle written "(k-1 k-2 ... 1 0)" is
/// the shift x -> x - 1 (mod k), whose permutation matrix carries a single 1
/// in row 0, column k-1.
class Permutation {
public:
    static Permutation identity(int k);
    /// x -> x - 1 (mod k).
    static Permutation shift(int k);
    /// Validates that images is a bijection of {0, ..., k-1}.
    static Permutation from_images(std::vector<int> images);
    /// Parses cycle notation; "" is the identity, unlisted points are fixed.
    /// Tokens may be separated by spaces or commas.
    static Permutation from_cycles(const std::string& text, int k);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
    /// Range-checked application.
    int at(int x) const;
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// g * this * g^-1 as a relabeling of the ground set by g.
    Permutation conjugated_by(const Permutation& g) const;
    bool is_identity() const;

    /// All cycles (including fixed points), each starting at its least point,
    /// ordered by least point.
    std::vector<std::vector<int>> cycles() const;
    /// Ascending multiset of cycle lengths, fixed points included.
    std::vector<int> cycle_type() const;
    /// "(0 1 2)(3 4 5)" with fixed points omitted; "id" for the identity.
    std::string cycle_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

    std::vector<int> images_;
};

/// (p after q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

/// Orbit of a point under one or more permutations; nonempty and closed by
/// construction, iteration order starting at the base point.
struct Orbit {
    std::vector<int> points;

    int size() const { return static_cast<int>(points.size()); }
    bool contains(int x) const;
    /// Position of x in iteration order, or -1.
    int index_of(int x) const;
};

Orbit orbit(const Permutation& p, int x);
/// All orbits, ordered by least unvisited base point.
std::vector<Orbit> orbits(const Permutation& p);

}  // namespace scx
