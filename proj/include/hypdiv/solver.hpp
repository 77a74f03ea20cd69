#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypdiv/core.hpp"

namespace hypdiv {

/// Saturating count; every threshold is capped at 2^63 - 1.
using BigCount = std::uint64_t;
inline constexpr BigCount big_count_cap = 0x7fffffffffffffffULL;

/// ζ(k, r) = 3^{(k-1)(r+1)} · Σ_{α=1}^{(k-1)(r+1)+r} α! · ((k-1)·2·(3(k-1)(r+1)+2r))^α.
/// Throws ContractError for k == 0.
BigCount zeta(std::size_t k, std::size_t r);

/// Sunflower size a* = (k-1)·2·(3(k-1)(r+1)+2r) + 2 used by the pruning step.
BigCount sunflower_target(std::size_t k, std::size_t r);

/// ζ⁺(k, r) = 3^{(k-1)(r+1)} · (k + Σ_{α=1}^{(k-1)(r+1)+r} α! · (a*-1)^α), the
/// gate the solver actually compares against. ζ⁺ ≥ ζ.
BigCount zeta_plus(std::size_t k, std::size_t r);

/// Test-only replacements. A run that uses any of them is not certified.
struct ThresholdOverrides
{
    std::optional<BigCount> zeta_gate;
    std::optional<BigCount> sunflower_target;

    bool any() const { return zeta_gate || sunflower_target; }
};

struct Thresholds
{
    BigCount zeta = 0;
    BigCount zeta_gate = 0;
    BigCount sunflower_target = 2;
    bool overridden = false;

    static Thresholds for_parameters(std::size_t k, std::size_t r, const ThresholdOverrides & overrides = {});
};

enum class Answer { No, Yes };

std::string to_string(Answer a);

/// One reduction or decision step, indices refer to the original instance.
struct TraceStep
{
    enum class Kind {
        DuplicateCap,      ///< exact duplicate beyond the k-th copy dropped
        HeavyWildcard,     ///< row with > (k-1)(r+1) unknowns removed, k decremented
        Prune,             ///< irrelevant row removed
        PruneFailed,       ///< sunflower search missed its target, fell back to brute force
        Shortcut,          ///< k = 0 or k = 1
        GreedyFastPath,    ///< greedy certificate found before threshold logic
        BruteForce,
        BoundedGreedy,
    };

    Kind kind;
    std::size_t row = 0;  ///< original row index (reduction steps only)
    std::size_t k = 0;    ///< k after the step
};

std::string to_string(TraceStep::Kind kind);

struct StageTiming
{
    std::string stage;
    std::chrono::nanoseconds elapsed{0};
};

struct SolveOutcome
{
    Answer answer = Answer::No;
    std::optional<Solution> witness;  ///< present iff answer == Yes
    std::vector<TraceStep> trace;
    std::vector<StageTiming> timings;
};

struct SolveOptions
{
    ThresholdOverrides overrides;
};

// --- Reduction steps -------------------------------------------------------

/// What reduce_heavy_wildcard removed, enough to rebuild the row afterwards.
struct HeavyWildcardRecord
{
    PartialVector row;
    std::size_t position = 0;  ///< index of the row in the unreduced instance
    std::size_t k_before = 0;
};

struct HeavyWildcardReduction
{
    Instance reduced;
    HeavyWildcardRecord record;
};

/// Removes the lowest-index row with more than (k-1)(r+1) unknowns and
/// decrements k. nullopt when k == 0 or no row qualifies.
std::optional<HeavyWildcardReduction> reduce_heavy_wildcard(const Instance & instance);

/// The completed row v*: the first (k-1)(r+1) unknown coordinates of `row`
/// are split into consecutive blocks of r+1, block i is set opposite to
/// `others[i]`; every other unknown becomes 0.
PartialVector lifted_row(const PartialVector & row, const std::vector<PartialVector> & others, std::size_t r);

/// Extends a (k-1)-witness of `reduced` to a k-witness of the unreduced
/// instance. Throws ContractError when the given witness does not verify.
Solution lift_heavy_wildcard(const Instance & reduced, const Solution & reduced_solution,
                             const HeavyWildcardRecord & record);

/// k rounds of "take the lowest surviving row, drop everything within r of
/// it"; unknowns complete to 0. nullopt unless |M| >= k·gate and every
/// r-neighbourhood is smaller than the gate.
std::optional<Solution> greedy_bounded_neighborhood(const Instance & instance, const Thresholds & thresholds);

/// A row whose removal keeps the answer, found through a sunflower in the
/// set representation of the largest Z-pattern class of N_r(v). nullopt when
/// the preconditions fail (too many unknowns, small neighbourhood, duplicates
/// beyond k). Throws ContractError when no class yields a sunflower of the
/// target size.
std::optional<std::size_t> find_irrelevant_vector(const Instance & instance, std::size_t v,
                                                  const Thresholds & thresholds);

/// Element ids of the set x̂ for `x` relative to the centre `v`: for every
/// coordinate j where v is known, 2j (□_j) if x[j] is unknown, 2j+1 (D_j)
/// if x[j] is known and differs from v[j].
std::vector<std::uint32_t> neighbour_signature(const PartialVector & v, const PartialVector & x);

// --- Deciders --------------------------------------------------------------

/// Exact search over k-subsets in lexicographic order, enumerating only the
/// unknowns of the subset's rows. Unused rows complete to 0.
SolveOutcome brute_force_small(const Instance & instance);

/// The full pipeline: duplicate capping, heavy-wildcard removal, shortcuts,
/// greedy fast path, then brute force / bounded greedy / pruning. A YES
/// carries a witness verified against `instance`.
SolveOutcome solve(const Instance & instance, const SolveOptions & options = {});

// --- Oracle ----------------------------------------------------------------

struct OracleLimits
{
    std::size_t max_unknowns = 20;
    std::size_t max_rows = 16;
    unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// Thrown when an instance is outside the oracle's caps.
struct OracleInfeasible : Error
{
    using Error::Error;
};

bool oracle_feasible(const Instance & instance, const OracleLimits & limits = {});

/// Ground truth by exhaustion over every completion of every row and every
/// k-subset. The witness is the lexicographically least (completion, subset)
/// pair, independent of thread scheduling.
SolveOutcome oracle_solve(const Instance & instance, const OracleLimits & limits = {});

} // namespace hypdiv
