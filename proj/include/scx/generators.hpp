#pragma once

#include "scx/action.hpp"
#include "scx/matrix_poly.hpp"
#include "scx/pattern.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace scx {

/// One monomial generator z^m w^n R, where R is a 0/1 matrix given by the
/// set of positions of its ones.
struct MonomialGenerator {
    int m, n;
    std::set<std::pair<int, int>> relation;

    /// The graph {(x, p(x))} of a permutation.
    static MonomialGenerator from_permutation(int m, int n, const Permutation& p);
};

/// Generating family for a monomial subalgebra of the k x k matrix
/// polynomials. With include_diagonals set, every diagonal unit e_ii is part
/// of the family (the semicrossed-product case); restricted diagonal sets can
/// instead be passed explicitly as (0, 0) generators.
class GeneratorSet {
public:
    GeneratorSet(int k, std::vector<MonomialGenerator> gens, bool include_diagonals);

    int size() const { return k_; }
    bool include_diagonals() const { return include_diagonals_; }
    const std::vector<MonomialGenerator>& gens() const { return gens_; }
    /// The explicit generators plus, if flagged, the k diagonal units.
    std::vector<MonomialGenerator> materialized() const;

private:
    int k_;
    std::vector<MonomialGenerator> gens_;
    bool include_diagonals_;
};

/// Constant 0/1 matrix with a 1 at (j, p(j)) for every j.
MatrixPoly permutation_matrix(const Permutation& p, int degree_cap);

/// The generators of the semicrossed product of an action: V1 = z P1,
/// V2 = w P2, and all diagonal units.
GeneratorSet semicrossed_generators(const Z2Action& a);

/// Smallest key set containing every sandwiched generator monomial
/// {(i, j, m_g, n_g) : (i, j) in the generator's relation} together with the
/// materialized diagonal units, closed under composition
/// (i, j, m, n) * (j, j', m', n') -> (i, j', m+m', n+n') within the cap.
/// Worklist order does not affect the result.
Pattern generated_pattern(const GeneratorSet& g, int degree_cap);

/// Direct description of the pattern generated by a semicrossed product:
/// {(i, sigma2^n(sigma1^m(i)), m, n) : 0 <= m + n <= cap}. Equal to
/// generated_pattern(semicrossed_generators(a), cap); the fixpoint closure is
/// the oracle, this is the fast path.
Pattern closed_form_pattern(const Z2Action& a, int degree_cap);

/// Compares the pattern generated by the action against a target, optionally
/// relabeling the generated indices by `relabel` first (relabel maps ground
/// set points of `a` to row/column indices of `target`). The witness of a
/// failed match is reported in target coordinates.
PatternDiff verify_identification(const Z2Action& a, const Pattern& target, int degree_cap,
                                  const std::optional<std::vector<int>>& relabel = std::nullopt);

/// Whether the candidate family generates exactly the target pattern at the
/// cap.
PatternDiff probe_generating_set(const GeneratorSet& candidate, const Pattern& target,
                                 int degree_cap);

}  // namespace scx
