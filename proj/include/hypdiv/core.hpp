#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypdiv/error.hpp"

namespace hypdiv {

enum class Cell : std::uint8_t { Zero, One, Unknown };

char to_char(Cell c);

/// A vector over {0, 1, ?}. Stored as two bit planes (known / value) so that
/// the known-entry distance is a popcount over 64-bit words.
class PartialVector
{
public:
    PartialVector() = default;

    /// All-zero vector of the given dimension.
    explicit PartialVector(std::size_t dim);

    /// Parses a string over {'0', '1', '?'}; throws std::invalid_argument otherwise.
    static PartialVector from_string(std::string_view text);
    static PartialVector from_cells(std::span<const Cell> cells);

    std::size_t size() const { return dim_; }
    bool empty() const { return dim_ == 0; }

    Cell operator[](std::size_t i) const;
    Cell at(std::size_t i) const;
    void set(std::size_t i, Cell c);

    bool is_known(std::size_t i) const;
    std::size_t unknown_count() const;
    bool fully_known() const { return unknown_count() == 0; }
    std::vector<std::size_t> unknown_positions() const;

    /// Copy with every Unknown replaced by 0.
    PartialVector zero_completed() const;

    std::string to_string() const;

    std::span<const std::uint64_t> known_words() const { return known_; }
    std::span<const std::uint64_t> value_words() const { return value_; }

    friend bool operator==(const PartialVector &, const PartialVector &) = default;

    /// Lexicographic on the textual form ('0' < '1' < '?').
    friend std::strong_ordering operator<=>(const PartialVector & a, const PartialVector & b);

private:
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> known_;
    std::vector<std::uint64_t> value_;
};

struct PartialVectorHash
{
    std::size_t operator()(const PartialVector & v) const noexcept;
};

/// Number of coordinates where `a` and `b` hold opposite known values.
std::size_t delta(const PartialVector & a, const PartialVector & b);

/// The coordinates counted by delta(), 0-based and ascending.
std::vector<std::size_t> big_delta(const PartialVector & a, const PartialVector & b);

/// `delta(a, b) <= bound`, with an early exit once the bound is exceeded.
bool within_distance(const PartialVector & a, const PartialVector & b, std::size_t bound);

/// Rows M together with the target size k and the distance threshold r.
/// Duplicated rows are kept: two equal partial rows may be completed differently.
class Instance
{
public:
    Instance() = default;
    Instance(std::size_t d, std::size_t k, std::size_t r, std::vector<PartialVector> rows);

    std::size_t d() const { return d_; }
    std::size_t k() const { return k_; }
    std::size_t r() const { return r_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<PartialVector> & rows() const { return rows_; }
    const PartialVector & row(std::size_t i) const { return rows_.at(i); }

    std::size_t unknown_count() const;

    friend bool operator==(const Instance &, const Instance &) = default;

private:
    std::size_t d_ = 0;
    std::size_t k_ = 0;
    std::size_t r_ = 0;
    std::vector<PartialVector> rows_;
};

/// A completion of every row (aligned with Instance::rows) plus the selected
/// row indices, ascending.
struct Solution
{
    std::vector<PartialVector> completed;
    std::vector<std::size_t> selected;

    friend bool operator==(const Solution &, const Solution &) = default;
};

/// Every row index j with delta(rows[v], rows[j]) <= t, ascending; contains v.
std::vector<std::size_t> hamming_neighborhood(const Instance & instance, std::size_t v, std::size_t t);

struct VerifyReport
{
    bool ok = true;
    std::vector<std::string> reasons;

    explicit operator bool() const { return ok; }
};

/// Checks completion validity per row, |selected| = k, and that every selected
/// pair is at distance >= r + 1. Never throws; problems become reasons.
VerifyReport verify_solution(const Instance & instance, const Solution & solution);

// Text formats. Instance: header `d k r`, then one row of d characters from
// {0,1,?} per line; `#` lines and blank lines are skipped. Solution: `YES` or
// `NO`; after YES the completed rows in input order and `S: i1 i2 ...`.

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance & instance);

/// A parsed solution file: a YES with its witness, or a bare NO.
struct SolutionFile
{
    bool yes = false;
    std::optional<Solution> witness;
};

SolutionFile parse_solution(std::string_view text);
std::string serialize_solution(const std::optional<Solution> & witness);

} // namespace hypdiv
