#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scx/pattern.hpp"

#include <set>
#include <stdexcept>

using namespace scx;

namespace {

int pmod(int a, int k) { return ((a % k) + k) % k; }

// Independent oracles: enumerate every quadruple naively and filter by the
// defining congruence.
std::set<MonomialKey> brute_bk2(int k, int N) {
    std::set<MonomialKey> keys;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int m = 0; m <= N; ++m)
                for (int n = 0; n <= N - m; ++n)
                    if (pmod(m + n, k) == pmod(i - j, k)) keys.insert({i, j, m, n});
    return keys;
}

std::set<MonomialKey> brute_bk(int k, int N) {
    std::set<MonomialKey> keys;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int m = 0; m <= N; ++m)
                if (pmod(m, k) == pmod(i - j, k)) keys.insert({i, j, m, 0});
    return keys;
}

std::set<MonomialKey> brute_tensor(int k, int l, int N) {
    std::set<MonomialKey> keys;
    for (int i = 0; i < k; ++i)
        for (int ip = 0; ip < l; ++ip)
            for (int j = 0; j < k; ++j)
                for (int jp = 0; jp < l; ++jp)
                    for (int m = 0; m <= N; ++m)
                        for (int n = 0; n <= N - m; ++n)
                            if (pmod(m, k) == pmod(i - j, k) && pmod(n, l) == pmod(ip - jp, l))
                                keys.insert({i * l + ip, j * l + jp, m, n});
    return keys;
}

}  // namespace

TEST_CASE("pattern_bk2 against the brute-force congruence oracle") {
    for (int k = 1; k <= 4; ++k)
        for (int N : {0, 1, 2, 5, 8}) CHECK(pattern_bk2(k, N).keys() == brute_bk2(k, N));
}

TEST_CASE("pattern_bk2 worked cases") {
    SUBCASE("k = 1 is the bidisk pattern") {
        const Pattern p = pattern_bk2(1, 2);
        CHECK(p.keys().size() == 6);
        CHECK(equal_to_degree(p, pattern_bidisk(2), 2).equal);
    }
    SUBCASE("degree cap 0 leaves only diagonal constants") {
        const Pattern p = pattern_bk2(3, 0);
        CHECK(p.keys() == std::set<MonomialKey>{{0, 0, 0, 0}, {1, 1, 0, 0}, {2, 2, 0, 0}});
    }
    SUBCASE("k = 2, N = 2 enumerates the oracle's key set") {
        const Pattern p = pattern_bk2(2, 2);
        CHECK(p.keys() == brute_bk2(2, 2));
        CHECK(p.keys().size() == 12);  // frozen from the oracle
        for (const MonomialKey key :
             {MonomialKey{0, 1, 1, 0}, MonomialKey{0, 1, 0, 1}, MonomialKey{0, 0, 1, 1},
              MonomialKey{0, 0, 2, 0}})
            CHECK(p.contains(key));
    }
}

TEST_CASE("pattern_akd2 worked cases") {
    CHECK(pattern_akd2(2, 2).keys() ==
          std::set<MonomialKey>{{0, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}});
    CHECK(equal_to_degree(pattern_akd2(1, 1), pattern_bidisk(1), 1).equal);
    CHECK(pattern_akd2(3, 2).keys() == std::set<MonomialKey>{{0, 0, 0, 0}});
    CHECK(pattern_akd2(5, 8).size() == 1);
}

TEST_CASE("pattern_bk worked cases and oracle") {
    CHECK(pattern_bk(2, 1).keys() ==
          std::set<MonomialKey>{{0, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}});
    CHECK(pattern_bk(1, 1).keys() == std::set<MonomialKey>{{0, 0, 0, 0}, {0, 0, 1, 0}});
    for (int k = 1; k <= 4; ++k)
        for (int N : {0, 3, 8}) CHECK(pattern_bk(k, N).keys() == brute_bk(k, N));
    // row 0 of the matrix form carries z^{k-1} in column 1
    for (int k = 2; k <= 5; ++k) CHECK(pattern_bk(k, 8).contains({0, 1, k - 1, 0}));
}

TEST_CASE("pattern_tensor against the brute-force oracle") {
    CHECK(equal_to_degree(pattern_tensor(1, 1, 5), pattern_bidisk(5), 5).equal);
    CHECK(pattern_tensor(2, 2, 1).contains({0, 2, 1, 0}));
    for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 1}})
        for (int N : {0, 2, 5}) CHECK(pattern_tensor(k, l, N).keys() == brute_tensor(k, l, N));
}

TEST_CASE("tensor diagonal entries carry the scalar tensor pattern") {
    const int N = 8;
    for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        const Pattern t = pattern_tensor(k, l, N);
        const Pattern scalar = pattern_akd_tensor(k, l, N);
        for (int u = 0; u < k * l; ++u) {
            std::set<std::pair<int, int>> diag_exponents;
            for (const MonomialKey& key : t.keys())
                if (key.i == u && key.j == u) diag_exponents.insert({key.m, key.n});
            std::set<std::pair<int, int>> scalar_exponents;
            for (const MonomialKey& key : scalar.keys()) scalar_exponents.insert({key.m, key.n});
            CHECK(diag_exponents == scalar_exponents);
        }
    }
}

TEST_CASE("exponent congruences force evaluation invariance under root-of-unity twists") {
    // every key of the scalar pattern has m + n divisible by k, so the
    // evaluations at (lambda, mu) and (w lambda, w mu) agree monomial by
    // monomial for any k-th root of unity w
    for (int k = 2; k <= 4; ++k)
        for (const MonomialKey& key : pattern_akd2(k, 8).keys()) CHECK((key.m + key.n) % k == 0);
    for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}})
        for (const MonomialKey& key : pattern_akd_tensor(k, l, 8).keys()) {
            CHECK(key.m % k == 0);
            CHECK(key.n % l == 0);
        }
}

TEST_CASE("closed-form patterns are multiplicatively closed at every cap") {
    for (int N : {0, 1, 2, 5, 8}) {
        for (int k = 1; k <= 4; ++k) {
            CHECK(is_mult_closed(pattern_bk2(k, N)));
            CHECK(is_mult_closed(pattern_bk(k, N)));
            CHECK(is_mult_closed(pattern_akd2(k, N)));
        }
        CHECK(is_mult_closed(pattern_bidisk(N)));
        for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}})
            CHECK(is_mult_closed(pattern_tensor(k, l, N)));
    }
}

TEST_CASE("is_mult_closed edge cases") {
    SUBCASE("a single off-diagonal key is vacuously closed") {
        const Pattern p(2, 2, PatternKind::Custom, {{0, 1, 1, 0}});
        CHECK(is_mult_closed(p));
    }
    SUBCASE("removing a composite breaks closure with a witness") {
        std::set<MonomialKey> keys = pattern_bk2(2, 4).keys();
        keys.erase({0, 0, 1, 1});
        const Pattern p(2, 4, PatternKind::Custom, std::move(keys));
        CHECK_FALSE(is_mult_closed(p));
        const auto witness = mult_closure_witness(p);
        REQUIRE(witness.has_value());
        CHECK(*witness == MonomialKey{0, 0, 1, 1});
    }
}

TEST_CASE("the n = 0 slices agree across the one- and two-variable families") {
    for (int k = 1; k <= 4; ++k)
        for (int N : {0, 2, 4, 8}) {
            std::set<MonomialKey> bk2_slice;
            for (const MonomialKey& key : pattern_bk2(k, N).keys())
                if (key.n == 0) bk2_slice.insert(key);
            CHECK(bk2_slice == pattern_bk(k, N).keys());

            std::set<MonomialKey> tensor_slice;
            for (const MonomialKey& key : pattern_tensor(k, 1, N).keys())
                if (key.n == 0) tensor_slice.insert(key);
            CHECK(tensor_slice == pattern_bk(k, N).keys());
        }
}

TEST_CASE("equal_to_degree") {
    SUBCASE("equality and truncation") {
        CHECK(equal_to_degree(pattern_bk2(1, 8), pattern_bidisk(8), 8).equal);
        CHECK(equal_to_degree(pattern_bk2(3, 8), pattern_bk2(3, 5), 5).equal);
        CHECK_FALSE(equal_to_degree(pattern_bk2(3, 8), pattern_bk2(3, 5), 8).equal);
    }
    SUBCASE("size mismatch is an error") {
        CHECK_THROWS_AS(equal_to_degree(pattern_bk2(2, 4), pattern_tensor(2, 2, 4), 4),
                        std::invalid_argument);
    }
    SUBCASE("same-size distinct congruences differ with a witness") {
        const auto diff = equal_to_degree(pattern_bk2(2, 4), pattern_tensor(2, 1, 4), 4);
        CHECK_FALSE(diff.equal);
        REQUIRE(diff.witness.has_value());
        // the witness is a genuine difference
        const bool in_first = pattern_bk2(2, 4).contains(*diff.witness);
        const bool in_second = pattern_tensor(2, 1, 4).contains(*diff.witness);
        CHECK(in_first != in_second);
        CHECK(diff.side == (in_first ? 0 : 1));
    }
    SUBCASE("diagonal-only pattern differs off the diagonal") {
        std::set<MonomialKey> diag;
        for (const MonomialKey& key : pattern_bk2(2, 4).keys())
            if (key.i == key.j) diag.insert(key);
        const Pattern q(2, 4, PatternKind::Custom, std::move(diag));
        const auto diff = equal_to_degree(pattern_bk2(2, 4), q, 4);
        CHECK_FALSE(diff.equal);
        REQUIRE(diff.witness.has_value());
        CHECK(diff.witness->i != diff.witness->j);
        CHECK(diff.side == 0);
    }
}

TEST_CASE("pattern bookkeeping") {
    const Pattern p = pattern_bk2(3, 6);
    SUBCASE("keys_per_degree sums to the total") {
        int total = 0;
        for (int c : p.keys_per_degree()) total += c;
        CHECK(total == static_cast<int>(p.keys().size()));
        CHECK(p.keys_per_degree()[0] == 3);  // diagonal constants
    }
    SUBCASE("restriction is monotone") {
        const Pattern r = p.restricted(4);
        CHECK(r.degree_cap() == 4);
        for (const MonomialKey& key : r.keys()) CHECK(key.m + key.n <= 4);
        CHECK(equal_to_degree(r, p, 4).equal);
        CHECK_THROWS_AS(p.restricted(7), std::invalid_argument);
    }
    SUBCASE("relabeling validates") {
        CHECK_THROWS_AS(p.relabeled({0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(p.relabeled({0, 0, 1}), std::invalid_argument);
        const Pattern r = p.relabeled({1, 2, 0});
        CHECK(r.keys().size() == p.keys().size());
        CHECK(r.contains({1, 1, 0, 0}));
    }
    SUBCASE("diagonal units") {
        CHECK(p.has_all_diagonal_units());
        CHECK_FALSE(Pattern(2, 2, PatternKind::Custom, {{0, 0, 0, 0}}).has_all_diagonal_units());
    }
}

TEST_CASE("pattern construction validates keys") {
    CHECK_THROWS_AS(Pattern(2, 2, PatternKind::Custom, {{0, 2, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Pattern(2, 2, PatternKind::Custom, {{0, 0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Pattern(2, 2, PatternKind::Custom, {{0, 0, -1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Pattern(0, 2, PatternKind::Custom, {}), std::invalid_argument);
    CHECK_THROWS_AS(pattern_bk2(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(pattern_bk2(2, -1), std::invalid_argument);
}
