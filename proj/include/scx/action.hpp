#pragma once

#include "scx/permutation.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scx {

/// Raised when a pair of permutations fails to commute. Carries the first
/// witness point in iteration order.
class NotCommutingError : public std::invalid_argument {
public:
    NotCommutingError(int point, int via12, int via21);

    int point;   // sigma1(sigma2(point)) != sigma2(sigma1(point))
    int via12;   // sigma1(sigma2(point))
    int via21;   // sigma2(sigma1(point))
};

/// A pair of commuting permutations of {0, ..., k-1}; commutativity is
/// checked at construction.
class Z2Action {
public:
    Z2Action(Permutation sigma1, Permutation sigma2);

    int size() const { return sigma1_.size(); }
    const Permutation& sigma1() const { return sigma1_; }
    const Permutation& sigma2() const { return sigma2_; }

    /// sigma2^n(sigma1^m(x)) for nonnegative exponents.
    int apply_word(int m, int n, int x) const;

private:
    Permutation sigma1_, sigma2_;
};

/// Orbit of x under both generators jointly (breadth-first from x).
Orbit joint_orbit(const Z2Action& a, int x);

/// True iff the joint orbit of point 0 is the whole ground set.
bool is_transitive(const Z2Action& a);

/// Why an action fails the perpendicularity criteria: either some pair of
/// orbits fails to intersect in exactly one point (condition i), or some two
/// orbits of the same generator have different cardinalities (condition ii).
struct PerpViolation {
    enum class Condition { OrbitIntersection, OrbitCardinality };

    Condition condition;
    std::pair<int, int> witness;  // the offending pair of points

    std::string describe() const;
};

/// Checks both perpendicularity conditions; nullopt means perpendicular.
std::optional<PerpViolation> check_perpendicular(const Z2Action& a);
bool is_perpendicular(const Z2Action& a);

class NotPerpendicularError : public std::invalid_argument {
public:
    explicit NotPerpendicularError(PerpViolation v);

    PerpViolation violation;
};

/// Conjugacy of a perpendicular action to a product of transitive cycles:
/// X1, X2 are the sigma1- and sigma2-orbits of the base point, tau1 and tau2
/// act on positions within those orbits, and h sends each point to the pair
/// (unique point of X1 on its sigma2-orbit, unique point of X2 on its
/// sigma1-orbit).
struct PerpDecomposition {
    int x0 = 0;
    Orbit X1, X2;
    // Position cycles on X1, X2 (overwritten by perp_decompose).
    Permutation tau1 = Permutation::identity(1);
    Permutation tau2 = Permutation::identity(1);
    std::vector<std::pair<int, int>> h;      // h[x] = (point of X1, point of X2)

    /// h as positions within X1 and X2 (iteration order).
    std::pair<int, int> h_index(int x) const;

    /// Point relabeling x -> a * card(X2) + b identifying the action with the
    /// product of shifts on X1 x X2. Positions are counted against the orbit
    /// iteration direction so that each sigma_i acts on its index as the
    /// shift p -> p - 1; this is the labeling under which the generated
    /// pattern coincides with the tensor pattern of the factor sizes.
    std::vector<int> tensor_relabeling() const;

    /// All structural invariants: factor sizes multiply to k, tau1/tau2 are
    /// single cycles, h is a bijection onto X1 x X2, and the conjugacies
    /// h(sigma1(x)) = (tau1 x id)(h(x)), h(sigma2(x)) = (id x tau2)(h(x))
    /// hold pointwise.
    bool verify(const Z2Action& a) const;
};

/// Constructive decomposition with base point 0; throws NotPerpendicularError
/// (with the violated condition and a witness pair) otherwise.
PerpDecomposition perp_decompose(const Z2Action& a);

/// The product action on {0, ..., k*l-1} with row-major flattening
/// (i, i') -> i*l + i': sigma1 applies t1 to the first coordinate, sigma2
/// applies t2 to the second. The components always commute.
Z2Action product_action(const Permutation& t1, const Permutation& t2);

}  // namespace scx
