#include <doctest.h>

#include "generators.hpp"
#include "hypdiv/sunflower.hpp"

#include <algorithm>
#include <set>

using namespace hypdiv;

namespace {

// Pairwise intersections recomputed from scratch.
bool petals_disjoint(const SetFamily & f, const Sunflower & s)
{
    for (std::size_t i = 0; i < s.member_indices.size(); ++i)
        for (std::size_t j = i + 1; j < s.member_indices.size(); ++j) {
            const auto & a = f.member(s.member_indices[i]);
            const auto & b = f.member(s.member_indices[j]);
            std::vector<Element> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common != s.core)
                return false;
        }
    return true;
}

SetFamily random_distinct_family(testsupport::Rng & rng, std::size_t b, std::size_t count, Element universe)
{
    std::set<std::vector<Element>> seen;
    SetFamily f;
    std::uniform_int_distribution<Element> pick(0, universe - 1);
    while (f.size() < count) {
        std::set<Element> s;
        while (s.size() < b)
            s.insert(pick(rng));
        std::vector<Element> v(s.begin(), s.end());
        if (seen.insert(v).second)
            f.add(v);
    }
    return f;
}

} // namespace

TEST_CASE("sunflower bound")
{
    CHECK(sunflower_bound(0, 5) == 1);
    CHECK(sunflower_bound(2, 3) == 8);
    CHECK(sunflower_bound(3, 3) == 48);
    CHECK(sunflower_bound(4, 5) == 24 * 256);
    CHECK(sunflower_bound(40, 40) == 0x7fffffffffffffffULL);
}

TEST_CASE("disjoint family is its own sunflower")
{
    SetFamily f;
    f.add({1, 2});
    f.add({3, 4});
    f.add({5, 6});
    const auto s = find_sunflower(f, 2, 3);
    REQUIRE(s);
    CHECK(s->core.empty());
    CHECK(s->member_indices == std::vector<std::size_t>{0, 1, 2});
    CHECK(is_sunflower(f, *s));
}

TEST_CASE("shared element becomes the core")
{
    SetFamily f;
    f.add({1, 2});
    f.add({1, 3});
    f.add({1, 4});
    f.add({2, 3});
    const auto s = find_sunflower(f, 2, 3);
    REQUIRE(s);
    CHECK(s->core == std::vector<Element>{1});
    CHECK(s->member_indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("no sunflower of the requested size")
{
    SetFamily f;
    f.add({1, 2});
    f.add({1, 3});
    f.add({2, 3});
    CHECK_FALSE(find_sunflower(f, 2, 3));
}

TEST_CASE("degenerate corners")
{
    SetFamily empties;
    empties.add({});
    empties.add({});
    const auto two = find_sunflower(empties, 0, 2);
    REQUIRE(two);
    CHECK(two->member_indices.size() == 2);
    CHECK_FALSE(find_sunflower(empties, 0, 3));

    SetFamily one;
    one.add({7});
    const auto single = find_sunflower(one, 1, 1);
    REQUIRE(single);
    CHECK(single->member_indices.size() == 1);

    CHECK_THROWS_AS(find_sunflower(one, 1, 0), ContractError);
    CHECK_THROWS_AS(find_sunflower(one, 2, 2), ContractError);
}

TEST_CASE("set family normalizes members and keeps tags")
{
    SetFamily f;
    f.add({3, 1, 3}, 42);
    CHECK(f.member(0) == std::vector<Element>{1, 3});
    CHECK(f.tag(0) == 42);
}

TEST_CASE("singletons need one more than the bound")
{
    // b = 1: a-1 distinct singletons hold no sunflower of size a, a of them do
    SetFamily f;
    for (Element e = 0; e < 4; ++e)
        f.add({e});
    CHECK_FALSE(find_sunflower(f, 1, 5));
    f.add({4});
    CHECK(find_sunflower(f, 1, 5));
}

TEST_CASE("returned sunflowers are always valid")
{
    testsupport::Rng rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<std::size_t> bs(1, 4), as(1, 6), counts(1, 40);
        const auto b = bs(rng), a = as(rng);
        const auto f = random_distinct_family(rng, b, counts(rng), static_cast<Element>(b + 40));
        const auto s = find_sunflower(f, b, a);
        if (!s)
            continue;
        CHECK(s->member_indices.size() >= a);
        CHECK(std::is_sorted(s->member_indices.begin(), s->member_indices.end()));
        CHECK(petals_disjoint(f, *s));
        CHECK(is_sunflower(f, *s));
    }
}

TEST_CASE("guarantee holds above the bound for b >= 2")
{
    testsupport::Rng rng(22);
    for (std::size_t b = 2; b <= 4; ++b)
        for (std::size_t a = 2; a <= 4; ++a)
            for (int trial = 0; trial < 10; ++trial) {
                const auto count = sunflower_bound(b, a);
                const auto f = random_distinct_family(rng, b, count, static_cast<Element>(3 * b + 6));
                const auto s = find_sunflower(f, b, a);
                REQUIRE(s);
                CHECK(s->member_indices.size() >= a);
                CHECK(petals_disjoint(f, *s));
            }
}
