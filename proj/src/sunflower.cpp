#include "hypdiv/sunflower.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace hypdiv {

namespace {

    constexpr std::uint64_t cap = std::numeric_limits<std::int64_t>::max();

    struct Item
    {
        std::size_t index;
        std::vector<Element> rest;
    };

    std::optional<Sunflower> search(const std::vector<Item> & items, std::size_t b, std::size_t a)
    {
        if (b == 0) {
            // a family of empty sets is itself a sunflower with empty core
            if (items.size() < a)
                return std::nullopt;
            Sunflower out;
            for (std::size_t i = 0; i < a; ++i)
                out.member_indices.push_back(items[i].index);
            return out;
        }

        std::unordered_set<Element> used;
        std::vector<std::size_t> disjoint;
        for (const auto & item : items) {
            if (std::none_of(item.rest.begin(), item.rest.end(), [&](Element e) { return used.contains(e); })) {
                disjoint.push_back(item.index);
                used.insert(item.rest.begin(), item.rest.end());
            }
        }
        if (disjoint.size() >= a)
            return Sunflower{{}, std::move(disjoint)};

        std::unordered_map<Element, std::size_t> frequency;
        for (const auto & item : items)
            for (auto e : item.rest)
                ++frequency[e];
        if (frequency.empty())
            return std::nullopt;

        Element best = 0;
        std::size_t best_count = 0;
        for (const auto & [e, count] : frequency)
            if (count > best_count || (count == best_count && e < best)) {
                best = e;
                best_count = count;
            }
        if (best_count < a)
            return std::nullopt;

        std::vector<Item> branch;
        branch.reserve(best_count);
        for (const auto & item : items) {
            if (std::binary_search(item.rest.begin(), item.rest.end(), best)) {
                Item reduced{item.index, {}};
                reduced.rest.reserve(item.rest.size() - 1);
                for (auto e : item.rest)
                    if (e != best)
                        reduced.rest.push_back(e);
                branch.push_back(std::move(reduced));
            }
        }

        auto result = search(branch, b - 1, a);
        if (result)
            result->core.insert(std::lower_bound(result->core.begin(), result->core.end(), best), best);
        return result;
    }

} // namespace

void SetFamily::add(std::vector<Element> elements, std::size_t tag)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    members_.push_back(std::move(elements));
    tags_.push_back(tag);
}

std::uint64_t sunflower_bound(std::size_t b, std::size_t a)
{
    auto mul = [](std::uint64_t x, std::uint64_t y) {
        std::uint64_t out = 0;
        if (__builtin_mul_overflow(x, y, &out) || out > cap)
            return cap;
        return out;
    };
    std::uint64_t value = 1;
    for (std::size_t i = 2; i <= b; ++i)
        value = mul(value, i);
    for (std::size_t i = 0; i < b; ++i)
        value = mul(value, a == 0 ? 0 : a - 1);
    return value;
}

std::optional<Sunflower> find_sunflower(const SetFamily & family, std::size_t b, std::size_t a)
{
    if (a == 0)
        throw ContractError("sunflower size target must be at least 1");

    std::vector<Item> items;
    items.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family.member(i).size() != b)
            throw ContractError("member " + std::to_string(i) + " has " + std::to_string(family.member(i).size()) +
                                " elements, family must be " + std::to_string(b) + "-uniform");
        items.push_back({i, family.member(i)});
    }

    auto result = search(items, b, a);
    if (result)
        std::sort(result->member_indices.begin(), result->member_indices.end());
    return result;
}

bool is_sunflower(const SetFamily & family, const Sunflower & sunflower)
{
    const auto & ids = sunflower.member_indices;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] >= family.size())
            return false;
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (ids[j] >= family.size() || ids[i] == ids[j])
                return false;
            std::vector<Element> common;
            const auto & x = family.member(ids[i]);
            const auto & y = family.member(ids[j]);
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
            if (common != sunflower.core)
                return false;
        }
    }
    if (ids.size() == 1) {
        const auto & only = family.member(ids[0]);
        return std::includes(only.begin(), only.end(), sunflower.core.begin(), sunflower.core.end());
    }
    return true;
}

} // namespace hypdiv
