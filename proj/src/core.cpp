#include "hypdiv/core.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hypdiv {

namespace {
    constexpr std::size_t word_bits = 64;

    std::size_t words_for(std::size_t dim) { return (dim + word_bits - 1) / word_bits; }

    void require_same_size(const PartialVector & a, const PartialVector & b)
    {
        if (a.size() != b.size())
            throw DimensionError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()));
    }
} // namespace

char to_char(Cell c)
{
    switch (c) {
    case Cell::Zero: return '0';
    case Cell::One: return '1';
    case Cell::Unknown: return '?';
    }
    return '?';
}

PartialVector::PartialVector(std::size_t dim) :
    dim_(dim), known_(words_for(dim), 0), value_(words_for(dim), 0)
{
    // known bits beyond dim stay zero so popcounts never see padding
    for (std::size_t i = 0; i < dim; ++i)
        known_[i / word_bits] |= std::uint64_t{1} << (i % word_bits);
}

PartialVector PartialVector::from_string(std::string_view text)
{
    PartialVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '0': break;
        case '1': v.set(i, Cell::One); break;
        case '?': v.set(i, Cell::Unknown); break;
        default:
            throw std::invalid_argument(std::string("illegal character '") + text[i] + "' at column " +
                                        std::to_string(i + 1));
        }
    }
    return v;
}

PartialVector PartialVector::from_cells(std::span<const Cell> cells)
{
    PartialVector v(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        v.set(i, cells[i]);
    return v;
}

Cell PartialVector::operator[](std::size_t i) const
{
    const auto w = i / word_bits;
    const auto bit = std::uint64_t{1} << (i % word_bits);
    if (!(known_[w] & bit))
        return Cell::Unknown;
    return (value_[w] & bit) ? Cell::One : Cell::Zero;
}

Cell PartialVector::at(std::size_t i) const
{
    if (i >= dim_)
        throw std::out_of_range("coordinate " + std::to_string(i) + " out of range");
    return (*this)[i];
}

void PartialVector::set(std::size_t i, Cell c)
{
    if (i >= dim_)
        throw std::out_of_range("coordinate " + std::to_string(i) + " out of range");
    const auto w = i / word_bits;
    const auto bit = std::uint64_t{1} << (i % word_bits);
    known_[w] &= ~bit;
    value_[w] &= ~bit;
    if (c != Cell::Unknown)
        known_[w] |= bit;
    if (c == Cell::One)
        value_[w] |= bit;
}

bool PartialVector::is_known(std::size_t i) const { return (*this)[i] != Cell::Unknown; }

std::size_t PartialVector::unknown_count() const
{
    std::size_t known = 0;
    for (auto w : known_)
        known += std::popcount(w);
    return dim_ - known;
}

std::vector<std::size_t> PartialVector::unknown_positions() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_; ++i)
        if (!is_known(i))
            out.push_back(i);
    return out;
}

PartialVector PartialVector::zero_completed() const
{
    PartialVector out(dim_);
    out.value_ = value_;
    return out;
}

std::string PartialVector::to_string() const
{
    std::string s(dim_, '0');
    for (std::size_t i = 0; i < dim_; ++i)
        s[i] = to_char((*this)[i]);
    return s;
}

std::strong_ordering operator<=>(const PartialVector & a, const PartialVector & b)
{
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const char x = to_char(a[i]), y = to_char(b[i]);
        if (x != y)
            return x <=> y;
    }
    return a.size() <=> b.size();
}

std::size_t PartialVectorHash::operator()(const PartialVector & v) const noexcept
{
    std::size_t h = std::hash<std::size_t>{}(v.size());
    auto mix = [&h](std::uint64_t w) { h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (auto w : v.known_words())
        mix(w);
    for (auto w : v.value_words())
        mix(w);
    return h;
}

std::size_t delta(const PartialVector & a, const PartialVector & b)
{
    require_same_size(a, b);
    const auto ka = a.known_words(), kb = b.known_words(), va = a.value_words(), vb = b.value_words();
    std::size_t count = 0;
    for (std::size_t w = 0; w < ka.size(); ++w)
        count += std::popcount(ka[w] & kb[w] & (va[w] ^ vb[w]));
    return count;
}

std::vector<std::size_t> big_delta(const PartialVector & a, const PartialVector & b)
{
    require_same_size(a, b);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto x = a[i], y = b[i];
        if (x != Cell::Unknown && y != Cell::Unknown && x != y)
            out.push_back(i);
    }
    return out;
}

bool within_distance(const PartialVector & a, const PartialVector & b, std::size_t bound)
{
    require_same_size(a, b);
    const auto ka = a.known_words(), kb = b.known_words(), va = a.value_words(), vb = b.value_words();
    std::size_t count = 0;
    for (std::size_t w = 0; w < ka.size(); ++w) {
        count += std::popcount(ka[w] & kb[w] & (va[w] ^ vb[w]));
        if (count > bound)
            return false;
    }
    return true;
}

Instance::Instance(std::size_t d, std::size_t k, std::size_t r, std::vector<PartialVector> rows) :
    d_(d), k_(k), r_(r), rows_(std::move(rows))
{
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].size() != d_)
            throw DimensionError("row " + std::to_string(i) + " has length " + std::to_string(rows_[i].size()) +
                                 ", expected " + std::to_string(d_));
}

std::size_t Instance::unknown_count() const
{
    std::size_t n = 0;
    for (const auto & row : rows_)
        n += row.unknown_count();
    return n;
}

std::vector<std::size_t> hamming_neighborhood(const Instance & instance, std::size_t v, std::size_t t)
{
    if (v >= instance.size())
        throw std::out_of_range("row index " + std::to_string(v) + " out of range");
    std::vector<std::size_t> out;
    const auto & center = instance.row(v);
    for (std::size_t j = 0; j < instance.size(); ++j)
        if (within_distance(center, instance.row(j), t))
            out.push_back(j);
    return out;
}

VerifyReport verify_solution(const Instance & instance, const Solution & solution)
{
    VerifyReport report;
    auto fail = [&report](std::string reason) {
        report.ok = false;
        report.reasons.push_back(std::move(reason));
    };

    if (solution.completed.size() != instance.size()) {
        fail("completion has " + std::to_string(solution.completed.size()) + " rows, instance has " +
             std::to_string(instance.size()));
    }

    const auto rows = std::min(solution.completed.size(), instance.size());
    std::vector<bool> row_ok(solution.completed.size(), false);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto & given = instance.row(i);
        const auto & done = solution.completed[i];
        if (done.size() != given.size()) {
            fail("row " + std::to_string(i) + ": completed length " + std::to_string(done.size()) +
                 " differs from d = " + std::to_string(given.size()));
            continue;
        }
        if (!done.fully_known()) {
            fail("row " + std::to_string(i) + ": completed row still contains unknown entries");
            continue;
        }
        bool ok = true;
        for (std::size_t j = 0; j < given.size(); ++j) {
            if (given.is_known(j) && given[j] != done[j]) {
                fail("row " + std::to_string(i) + ": completion mismatch at coordinate " + std::to_string(j + 1) +
                     " (known " + to_char(given[j]) + ", completed " + to_char(done[j]) + ")");
                ok = false;
                break;
            }
        }
        row_ok[i] = ok;
    }

    if (solution.selected.size() != instance.k())
        fail("selected " + std::to_string(solution.selected.size()) + " rows, k = " + std::to_string(instance.k()));

    std::set<std::size_t> seen;
    for (auto s : solution.selected) {
        if (s >= solution.completed.size())
            fail("selected index " + std::to_string(s) + " out of range");
        else if (!seen.insert(s).second)
            fail("selected index " + std::to_string(s) + " repeated");
    }

    for (auto i = seen.begin(); i != seen.end(); ++i) {
        for (auto j = std::next(i); j != seen.end(); ++j) {
            if (*j >= solution.completed.size() || !row_ok[*i] || !row_ok[*j])
                continue;
            const auto dist = delta(solution.completed[*i], solution.completed[*j]);
            if (dist < instance.r() + 1)
                fail("pair (" + std::to_string(*i) + ", " + std::to_string(*j) + "): distance " +
                     std::to_string(dist) + " < r + 1 = " + std::to_string(instance.r() + 1));
        }
    }

    return report;
}

} // namespace hypdiv
