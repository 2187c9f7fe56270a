#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scx {

/// Entry-index-and-exponent quadruple: matrix position (i, j) carrying the
/// monomial z^m w^n.
struct MonomialKey {
    int i, j, m, n;

    auto operator<=>(const MonomialKey&) const = default;
};

enum class PatternKind { Bidisk, Bk, AkD2, AkDTensor, Bk2, Tensor, Generated, Custom };

const char* pattern_kind_name(PatternKind kind);

/// Finite set of monomial keys truncated at a total-degree cap: the support
/// skeleton of a truncated matrix function algebra. Stored extensionally,
/// tagged with its construction.
class Pattern {
public:
    Pattern(int k, int degree_cap, PatternKind kind, std::set<MonomialKey> keys,
            std::string label = "");

    int size() const { return k_; }
    int degree_cap() const { return cap_; }
    PatternKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    const std::set<MonomialKey>& keys() const { return keys_; }
    bool contains(const MonomialKey& key) const { return keys_.count(key) > 0; }

    /// Index d -> number of keys with m + n == d, for d in [0, degree_cap].
    std::vector<int> keys_per_degree() const;
    /// The same keys cut down to m + n <= cap.
    Pattern restricted(int cap) const;
    /// Index relabeling (i, j, m, n) -> (pi[i], pi[j], m, n).
    Pattern relabeled(const std::vector<int>& pi) const;
    bool has_all_diagonal_units() const;

private:
    int k_;
    int cap_;
    PatternKind kind_;
    std::string label_;
    std::set<MonomialKey> keys_;
};

/// k = 1, every monomial up to the cap.
Pattern pattern_bidisk(int degree_cap);
/// One-variable congruence pattern: n = 0 and m = i - j (mod k).
Pattern pattern_bk(int k, int degree_cap);
/// Two-variable congruence pattern: m + n = i - j (mod k).
Pattern pattern_bk2(int k, int degree_cap);
/// Scalar pattern (k' = 1) with m + n = 0 (mod k).
Pattern pattern_akd2(int k, int degree_cap);
/// Scalar pattern with m = 0 (mod k) and n = 0 (mod l).
Pattern pattern_akd_tensor(int k, int l, int degree_cap);
/// Tensor pattern of size k*l under row-major flattening of index pairs:
/// m = i - j (mod k) on the first factor and n = i' - j' (mod l) on the
/// second.
Pattern pattern_tensor(int k, int l, int degree_cap);

/// True iff every composable pair of keys with total degree within the cap
/// has its composite in the pattern.
bool is_mult_closed(const Pattern& p);
/// The first missing composite, if any (in key order of the composing pair).
std::optional<MonomialKey> mult_closure_witness(const Pattern& p);

struct PatternDiff {
    bool equal = false;
    std::optional<MonomialKey> witness;  // least key of the symmetric difference
    int side = 0;                        // 0: only in the first, 1: only in the second
};

/// Set equality of the two key sets cut to m + n <= degree_cap; the patterns
/// must have the same matrix size.
PatternDiff equal_to_degree(const Pattern& p, const Pattern& q, int degree_cap);

}  // namespace scx
