#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scx/permutation.hpp"
#include "support.hpp"

#include <numeric>
#include <stdexcept>

using namespace scx;

TEST_CASE("cycle notation parses with the a->b convention") {
    CHECK(Permutation::from_cycles("(0 1 2)(3 4 5)", 6).images() ==
          std::vector<int>{1, 2, 0, 4, 5, 3});
    CHECK(Permutation::from_cycles("", 3).images() == std::vector<int>{0, 1, 2});
    CHECK(Permutation::from_cycles("(2 1 0)", 3).images() == std::vector<int>{2, 0, 1});
    CHECK(Permutation::from_cycles("(0, 1, 2)", 3).images() == std::vector<int>{1, 2, 0});
    CHECK(Permutation::from_cycles("(1)", 4).images() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("the written-down shift (k-1 ... 1 0) is x -> x - 1 mod k") {
    for (int k = 1; k <= 6; ++k) {
        std::string text = "(";
        for (int x = k - 1; x >= 0; --x) text += std::to_string(x) + (x ? " " : ")");
        CHECK(Permutation::from_cycles(text, k) == Permutation::shift(k));
        for (int x = 0; x < k; ++x) CHECK(Permutation::shift(k)(x) == (x + k - 1) % k);
    }
}

TEST_CASE("cycle notation rejects malformed input") {
    CHECK_THROWS_AS(Permutation::from_cycles("(0 1)(1 2)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("(0 5)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("(0 1", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("0 1)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("(a b)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("", 0), std::invalid_argument);
}

TEST_CASE("images validation") {
    CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({0, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({0, -1, 1}), std::invalid_argument);
    CHECK(Permutation::from_images({1, 0}).at(0) == 1);
    CHECK_THROWS_AS(Permutation::identity(3).at(3), std::out_of_range);
}

TEST_CASE("orbits iterate forward from the base point") {
    const Permutation s1 = Permutation::from_cycles("(0 1 2)(3 4 5)", 6);
    const Permutation s2 = Permutation::from_cycles("(0 3)(1 4)(2 5)", 6);
    CHECK(orbit(s1, 0).points == std::vector<int>{0, 1, 2});
    CHECK(orbit(s2, 0).points == std::vector<int>{0, 3});
    CHECK(orbit(Permutation::identity(6), 4).points == std::vector<int>{4});
    CHECK(orbit(s1, 4).points == std::vector<int>{4, 5, 3});
    CHECK_THROWS_AS(orbit(s1, 6), std::out_of_range);
    CHECK(orbit(s1, 0).contains(2));
    CHECK_FALSE(orbit(s1, 0).contains(3));
    CHECK(orbit(s1, 0).index_of(2) == 2);
    CHECK(orbit(s1, 0).index_of(5) == -1);
}

TEST_CASE("orbit sizes partition the ground set") {
    auto gen = scx::test::rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(gen() % 8);
        const Permutation p = scx::test::random_permutation(gen, k);
        int total = 0;
        for (const Orbit& o : orbits(p)) total += o.size();
        CHECK(total == k);
    }
}

TEST_CASE("inverse, composition, conjugation") {
    auto gen = scx::test::rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 2 + static_cast<int>(gen() % 6);
        const Permutation p = scx::test::random_permutation(gen, k);
        const Permutation q = scx::test::random_permutation(gen, k);
        CHECK(compose(p, p.inverse()) == Permutation::identity(k));
        CHECK(compose(p.inverse(), p) == Permutation::identity(k));
        // conjugation relabels: (g p g^-1)(g(x)) = g(p(x))
        const Permutation c = p.conjugated_by(q);
        for (int x = 0; x < k; ++x) CHECK(c(q(x)) == q(p(x)));
        CHECK(c.cycle_type() == p.cycle_type());
    }
    CHECK(compose(Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(1 2)", 3)) ==
          Permutation::from_cycles("(0 1 2)", 3));
}

TEST_CASE("cycle structure accessors") {
    const Permutation p = Permutation::from_cycles("(1 3)(2 4 5)", 6);
    CHECK(p.cycle_type() == std::vector<int>{1, 2, 3});
    CHECK(p.cycle_string() == "(1 3)(2 4 5)");
    CHECK(Permutation::identity(4).cycle_string() == "id");
    CHECK(Permutation::identity(4).is_identity());

    auto gen = scx::test::rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 1 + static_cast<int>(gen() % 7);
        const Permutation p2 = scx::test::random_permutation(gen, k);
        CHECK(Permutation::from_cycles(p2.cycle_string() == "id" ? "" : p2.cycle_string(), k) ==
              p2);
    }
}
