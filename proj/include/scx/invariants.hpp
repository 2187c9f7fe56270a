#pragma once

#include "scx/pattern.hpp"
#include "scx/rational.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scx {

/// Symbolic evaluation regime for a point (lambda, mu) of the closed bidisk.
/// Within a stratum the set of surviving monomials, and hence the quotient
/// structure at the evaluation, is constant.
enum class Stratum { Origin, ZOnly, WOnly, Generic };

inline constexpr std::array<Stratum, 4> all_strata = {Stratum::Origin, Stratum::ZOnly,
                                                      Stratum::WOnly, Stratum::Generic};

const char* stratum_name(Stratum s);

/// True iff the key's monomial does not vanish on the stratum: at mu = 0 only
/// n = 0 survives, at lambda = 0 only m = 0, at the origin only constants.
bool key_survives(const MonomialKey& key, Stratum s);

/// Positions (i, j) carrying at least one surviving key.
struct SupportRelation {
    int k = 0;
    std::set<std::pair<int, int>> pairs;
};

SupportRelation stratum_support(const Pattern& p, Stratum s);

/// The support of a pattern that is an algebra at a stratum is an equivalence
/// relation; a violation signals a pattern that is not.
class NotEquivalenceError : public std::runtime_error {
public:
    NotEquivalenceError(std::string what, std::pair<int, int> witness_);

    std::pair<int, int> witness;
};

/// Equivalence classes of the support relation over {0, ..., k-1}, ordered by
/// least element; throws NotEquivalenceError if the relation is not reflexive,
/// symmetric and transitive.
std::vector<std::vector<int>> support_classes(const SupportRelation& r);
/// Class sizes, ascending. The evaluated image at the stratum is the direct
/// sum of full matrix algebras of these sizes.
std::vector<int> support_blocks(const SupportRelation& r);

/// Per-stratum multisets of simple-quotient dimensions: the origin stratum
/// contributes one scalar character per diagonal index, every other stratum
/// the squares of its support block sizes.
struct CodimInvariant {
    int k = 0;
    int degree_cap = 0;
    bool cap_warning = false;  // degree_cap < 2k: possibly partial
    std::map<Stratum, std::vector<int>> stratum_dims;  // ascending multisets
    std::set<int> distinct;

    std::set<int> stratum_distinct(Stratum s) const;

    bool operator==(const CodimInvariant& o) const {
        return stratum_dims == o.stratum_dims && distinct == o.distinct;
    }
};

/// Requires the pattern to contain every diagonal constant (i, i, 0, 0).
CodimInvariant codim_invariant(const Pattern& p);

enum class DistinguishVerdict { Distinguished, Indistinguishable };

const char* distinguish_verdict_name(DistinguishVerdict v);

struct DistinguishResult {
    DistinguishVerdict verdict = DistinguishVerdict::Indistinguishable;
    CodimInvariant a, b;
};

/// Distinguished iff the distinct-dimension sets or the per-stratum sets of
/// distinct dimensions differ.
DistinguishResult distinguish(const Pattern& p, const Pattern& q);

/// Span dimension of the evaluated key monomials at (lambda, mu), computed
/// through exact matrix evaluation and Gaussian elimination. For points of a
/// stratum this equals the stratum's support count, independently of the
/// combinatorial route.
int rank_oracle(const Pattern& p, const Rational& lambda, const Rational& mu);

}  // namespace scx
