#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "heckelr/products.hpp"
#include "oracle.hpp"

using namespace heckelr;

namespace {

EvaluationModuleSpec mod(std::initializer_list<Int> parts, Int a) { return {make_partition(parts), a}; }

Multisegment ms(std::initializer_list<std::pair<Int, Int>> segs)
{
    std::vector<Segment> out;
    for (auto [a, b] : segs)
        out.emplace_back(a, b);
    return Multisegment(out);
}

const Multisegment n1 = ms({{1, 2}, {2, 6}, {3, 4}, {4, 5}});
const Multisegment n2 = ms({{1, 2}, {2, 5}, {3, 4}, {4, 6}});
const Multisegment n3 = ms({{1, 1}, {2, 2}, {2, 6}, {3, 4}, {4, 5}});
const Multisegment n4 = ms({{1, 1}, {2, 2}, {2, 5}, {3, 4}, {4, 6}});

} // namespace

TEST_CASE("normalize_inputs")
{
    const auto swapped = normalize_inputs(mod({1, 2, 3}, 4), mod({1, 4}, 2));
    CHECK(swapped.first == ChargedPartition(make_partition({1, 4}), 2));
    CHECK(swapped.second == ChargedPartition(make_partition({1, 2, 3}), 4));

    const auto kept = normalize_inputs(mod({1, 4}, 2), mod({1, 2, 3}, 4));
    CHECK(kept.first.charge() == 2);

    // Equal charges: the smaller beta row goes first.
    const auto tie = normalize_inputs(mod({2}, 2), mod({1}, 2));
    CHECK(tie.first.partition() == make_partition({1}));

    CHECK_THROWS_AS(normalize_inputs(mod({1, 1, 2}, 2), mod({}, 1)), DomainError);
    CHECK_THROWS_AS(normalize_inputs(mod({}, 1), mod({}, 0)), DomainError);
    CHECK_THROWS_AS(normalize_inputs(mod({}, 1), mod({}, -3)), DomainError);
}

TEST_CASE("expansion of the worked example")
{
    const Expansion e = expansion(mod({1, 4}, 2), mod({1, 2, 3}, 4));
    CHECK(e.offset == -1);
    CHECK(e.input == Symbol({1, 3, 5, 7}, {2, 6}));
    REQUIRE(e.terms.size() == 4);
    CHECK(e.terms[0].factor == n1);
    CHECK(e.terms[0].swaps == 2);
    CHECK(e.terms[1].factor == n2);
    CHECK(e.terms[1].swaps == 1);
    CHECK(e.terms[2].factor == n3);
    CHECK(e.terms[2].swaps == 1);
    CHECK(e.terms[3].factor == n4);
    CHECK(e.terms[3].swaps == 0);
}

TEST_CASE("expansion of two empty partitions")
{
    const Expansion e = expansion(mod({}, 1), mod({}, 1));
    CHECK(e.offset == 0);
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms[0].swaps == 0);
    CHECK(e.terms[0].factor.empty());
}

TEST_CASE("composition_factors and irreducibility")
{
    const auto factors = composition_factors(mod({1, 4}, 2), mod({1, 2, 3}, 4));
    CHECK(factors == std::vector<Multisegment>{n4, n3, n2, n1});
    CHECK(composition_factors(mod({1, 2, 3}, 4), mod({1, 4}, 2)) == factors);
    CHECK(composition_factors(mod({}, 2), mod({}, 5)) == std::vector<Multisegment>{Multisegment{}});

    CHECK_FALSE(is_irreducible(mod({1, 4}, 2), mod({1, 2, 3}, 4)));
    CHECK(is_irreducible(mod({}, 1), mod({}, 1)));
    // Far-apart supports: [1,1] and [6,6] do not interact.
    CHECK(is_irreducible(mod({1}, 1), mod({1}, 6)));
    // Linked segments [1,1] and [2,2] do.
    CHECK_FALSE(is_irreducible(mod({1}, 1), mod({1}, 2)));
}

TEST_CASE("irreducible products have a singleton oracle ancestor set")
{
    std::mt19937_64 rng(5);
    int irreducible = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto e1 = gen::module(rng, 4, 4);
        const auto e2 = gen::module(rng, 4, 4);
        const auto pair = normalize_inputs(e1, e2);
        const auto brute = oracle::brute_ancestors(symbol_of(pair.first, pair.second));
        REQUIRE(is_irreducible(e1, e2) == (brute.size() == 1));
        irreducible += brute.size() == 1 ? 1 : 0;
    }
    CHECK(irreducible > 0);
    CHECK(irreducible < 500);
}

TEST_CASE("expansion properties on random inputs")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto e1 = gen::module(rng, 5, 5);
        const auto e2 = gen::module(rng, 5, 5);
        const Expansion e = expansion(e1, e2);
        const auto pair = normalize_inputs(e1, e2);
        const Multisegment product = sum(multisegment_of(pair.first), multisegment_of(pair.second));
        const Int weight = e1.partition.weight() + e2.partition.weight();

        int matching_product = 0;
        for (const ExpansionTerm& t : e.terms) {
            REQUIRE(is_standard(t.symbol));
            REQUIRE(t.swaps >= 0);
            REQUIRE(static_cast<std::size_t>(t.swaps) <= pair_structure(t.symbol).pairs.size());
            REQUIRE(swap_count(t.symbol, e.input) == t.swaps);
            REQUIRE(t.factor.size() == weight);
            matching_product += t.factor == product ? 1 : 0;
        }
        REQUIRE(matching_product <= 1);
        if (is_standard(e.input))
            REQUIRE(matching_product == 1);
        REQUIRE(composition_factors(e1, e2).size() == e.terms.size());
        REQUIRE(composition_factors(e2, e1) == composition_factors(e1, e2));
    }
}

TEST_CASE("equal charges: both orientations give the same factors")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        const Int a = gen::uniform(rng, 1, 5);
        const ChargedPartition c1(gen::partition(rng, 5, a), a);
        const ChargedPartition c2(gen::partition(rng, 5, a), a);
        auto factors_of = [](const ChargedPartition& x, const ChargedPartition& y) {
            std::vector<Multisegment> out;
            for (const Ancestor& anc : standard_ancestors(symbol_of(x, y)))
                out.push_back(multisegment_of(anc.symbol));
            std::sort(out.begin(), out.end());
            return out;
        };
        REQUIRE(factors_of(c1, c2) == factors_of(c2, c1));
    }
}
