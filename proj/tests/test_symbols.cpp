#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "heckelr/symbols.hpp"
#include "oracle.hpp"

using namespace heckelr;

namespace {

ChargedPartition cp(std::initializer_list<Int> parts, Int a) { return {make_partition(parts), a}; }

std::vector<Int> v(std::initializer_list<Int> xs) { return xs; }

} // namespace

TEST_CASE("symbol_of stacks beta rows, larger charge on top")
{
    const Symbol s = symbol_of(cp({1, 1, 2}, 3), cp({2, 3}, 5));
    CHECK(s.top().entries() == v({1, 2, 3, 6, 8}));
    CHECK(s.bottom().entries() == v({2, 3, 5}));

    CHECK(symbol_of(cp({1, 4}, 2), cp({1, 2, 3}, 4)) == Symbol({1, 3, 5, 7}, {2, 6}));
    CHECK(symbol_of(cp({}, 1), cp({}, 1)) == Symbol({1}, {1}));
    CHECK_THROWS_AS(symbol_of(cp({2, 3}, 5), cp({1, 1, 2}, 3)), DomainError);
    CHECK_THROWS_AS(Symbol({1}, {1, 2}), DomainError);
}

TEST_CASE("is_standard compares columns from the left")
{
    CHECK(is_standard(Symbol({1, 3, 5, 8, 9}, {3, 6, 7, 10})));
    CHECK(is_standard(Symbol({1, 3, 5, 7}, {2, 6})));
    CHECK_FALSE(is_standard(Symbol({3, 4}, {1, 2})));
    CHECK(is_standard(Symbol({4, 5}, {})));
}

TEST_CASE("pair_structure follows the level sets")
{
    SUBCASE("worked example with a deep level")
    {
        const PairStructure ps = pair_structure(Symbol({1, 3, 5, 8, 9}, {3, 6, 7, 10}));
        CHECK(ps.psi(3) == 3);
        CHECK(ps.psi(6) == 5);
        CHECK(ps.psi(7) == 1);
        CHECK(ps.psi(10) == 9);
        CHECK(ps.fixed == v({3}));
        CHECK(ps.pairs == std::vector<Pair>{{6, 5}, {7, 1}, {10, 9}});
        CHECK_THROWS_AS(ps.psi(4), DomainError);
    }
    SUBCASE("equal rows are all fixed")
    {
        const PairStructure ps = pair_structure(Symbol({2, 3, 5}, {2, 3, 5}));
        CHECK(ps.pairs.empty());
        CHECK(ps.fixed == v({2, 3, 5}));
    }
    SUBCASE("level one pairs, cross-checked against the oracle")
    {
        const Symbol s({1, 3, 5, 7}, {2, 6});
        const PairStructure ps = pair_structure(s);
        CHECK(ps.pairs == std::vector<Pair>{{2, 1}, {6, 5}});
        CHECK(oracle::brute_psi(s) == std::map<Int, Int>{{2, 1}, {6, 5}});
    }
    CHECK_THROWS_AS(pair_structure(Symbol({3, 4}, {1, 2})), DomainError);
}

TEST_CASE("swap_family")
{
    SUBCASE("both pairs swapped reach the example input")
    {
        const Symbol s({1, 2, 5, 6}, {3, 7});
        CHECK(pair_structure(s).pairs == std::vector<Pair>{{3, 2}, {7, 6}});
        const auto family = swap_family(s);
        CHECK(family.size() == 4);
        CHECK(std::find(family.begin(), family.end(), Symbol({1, 3, 5, 7}, {2, 6})) != family.end());
    }
    SUBCASE("no pairs")
    {
        const Symbol s({2, 3, 5}, {2, 3, 5});
        CHECK(swap_family(s) == std::vector<Symbol>{s});
    }
    SUBCASE("four members, in canonical order")
    {
        const std::vector<Symbol> expected{
            Symbol({1, 3, 5, 7}, {2, 6}),
            Symbol({1, 3, 6, 7}, {2, 5}),
            Symbol({2, 3, 5, 7}, {1, 6}),
            Symbol({2, 3, 6, 7}, {1, 5}),
        };
        const Symbol s({1, 3, 5, 7}, {2, 6});
        CHECK(swap_family(s) == expected);
        const auto brute = oracle::brute_C(s);
        CHECK(std::vector<Symbol>(brute.begin(), brute.end()) == expected);
    }
    CHECK_THROWS_AS(swap_family(Symbol({3, 4}, {1, 2})), DomainError);
}

TEST_CASE("swap_count")
{
    CHECK(swap_count(Symbol({1, 2, 5, 6}, {3, 7}), Symbol({1, 3, 5, 7}, {2, 6})) == 2);
    const Symbol s({1, 3, 5, 7}, {2, 6});
    CHECK(swap_count(s, s) == 0);
    CHECK(swap_count(s, Symbol({2, 3, 5, 7}, {1, 6})) == 1);
    CHECK_THROWS_AS(swap_count(s, Symbol({1, 2, 5, 7}, {3, 6})), DomainError);
    CHECK_THROWS_AS(swap_count(s, Symbol({1, 3, 5, 7, 9}, {2})), DomainError);
}

TEST_CASE("standard_ancestors")
{
    SUBCASE("worked example")
    {
        const std::vector<Ancestor> expected{
            {Symbol({1, 2, 5, 6}, {3, 7}), 2},
            {Symbol({1, 2, 5, 7}, {3, 6}), 1},
            {Symbol({1, 3, 5, 6}, {2, 7}), 1},
            {Symbol({1, 3, 5, 7}, {2, 6}), 0},
        };
        CHECK(standard_ancestors(Symbol({1, 3, 5, 7}, {2, 6})) == expected);
    }
    SUBCASE("equal rows")
    {
        const Symbol s({1, 4, 6}, {1, 4, 6});
        CHECK(standard_ancestors(s) == std::vector<Ancestor>{{s, 0}});
    }
    SUBCASE("non-standard input")
    {
        const Symbol sigma({2}, {1});
        CHECK(standard_ancestors(sigma) == std::vector<Ancestor>{{Symbol({1}, {2}), 1}});
    }
}

TEST_CASE("symbol invariants on random standard symbols")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        const Symbol s = gen::standard_symbol(rng, 12, 14);
        const PairStructure ps = pair_structure(s);

        std::vector<Int> images;
        for (Int j : s.bottom().entries()) {
            const Int t = ps.psi(j);
            REQUIRE(t <= j);
            REQUIRE(s.top().contains(t));
            REQUIRE((t == j) == s.top().contains(j));
            images.push_back(t);
        }
        std::sort(images.begin(), images.end());
        REQUIRE(std::adjacent_find(images.begin(), images.end()) == images.end());

        const auto family = swap_family(s);
        REQUIRE(family.size() == (std::size_t{1} << ps.pairs.size()));
        std::vector<Int> entries = s.top().entries();
        entries.insert(entries.end(), s.bottom().entries().begin(), s.bottom().entries().end());
        std::sort(entries.begin(), entries.end());
        for (const Symbol& sigma : family) {
            REQUIRE(sigma.top().size() == s.top().size());
            std::vector<Int> other = sigma.top().entries();
            other.insert(other.end(), sigma.bottom().entries().begin(), sigma.bottom().entries().end());
            std::sort(other.begin(), other.end());
            REQUIRE(other == entries);

            // Membership consistency in both directions.
            const int n = swap_count(s, sigma);
            const auto ancestors = standard_ancestors(sigma);
            REQUIRE(std::find(ancestors.begin(), ancestors.end(), Ancestor{s, n}) != ancestors.end());
        }
        const auto self = standard_ancestors(s);
        REQUIRE(std::find(self.begin(), self.end(), Ancestor{s, 0}) != self.end());
    }
}
