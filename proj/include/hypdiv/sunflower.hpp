#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypdiv/error.hpp"

namespace hypdiv {

using Element = std::uint32_t;

/// A list of subsets of an abstract universe of Element ids. Member i stands
/// for whatever object the caller tagged it with (tags default to i).
class SetFamily
{
public:
    SetFamily() = default;

    /// Adds a member; duplicates within `elements` are collapsed.
    void add(std::vector<Element> elements, std::size_t tag);
    void add(std::vector<Element> elements) { add(std::move(elements), members_.size()); }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    /// Sorted elements of member i.
    const std::vector<Element> & member(std::size_t i) const { return members_.at(i); }
    std::size_t tag(std::size_t i) const { return tags_.at(i); }

private:
    std::vector<std::vector<Element>> members_;
    std::vector<std::size_t> tags_;
};

struct Sunflower
{
    std::vector<Element> core;                ///< sorted
    std::vector<std::size_t> member_indices;  ///< indices into the family, ascending
};

/// b!·(a-1)^b, saturating at 2^63-1.
std::uint64_t sunflower_bound(std::size_t b, std::size_t a);

/// Searches a b-uniform family for a sunflower with at least `a` members.
///
/// Recursive procedure: collect a maximal pairwise-disjoint subfamily greedily
/// in member order; if it is large enough it is the answer (empty core).
/// Otherwise branch on the element contained in the most members (smallest id
/// on ties), drop it, and recurse on those members. Every returned sunflower
/// has all pairwise intersections equal to `core`. Returns nullopt when fewer
/// than `a` members were found.
///
/// Throws ContractError if a member does not have exactly b elements or a == 0.
std::optional<Sunflower> find_sunflower(const SetFamily & family, std::size_t b, std::size_t a);

/// Independent check: every two listed members intersect in exactly `core`.
bool is_sunflower(const SetFamily & family, const Sunflower & sunflower);

} // namespace hypdiv
