#include "hypdiv/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace hypdiv {

namespace {

    struct UnknownCell
    {
        std::size_t row;
        std::size_t coordinate;
    };

    // Exhaustive decider for one fixed completion index. Completion index c
    // assigns unknown t (row-major order) the bit (c >> (U-1-t)) & 1, so
    // increasing c is the lexicographic order of the completed matrix.
    class CompletionScan
    {
    public:
        CompletionScan(const Instance & instance, const std::vector<UnknownCell> & unknowns) :
            instance_(instance), unknowns_(unknowns)
        {
            for (const auto & row : instance.rows())
                rows_.push_back(row.zero_completed());
            n_ = rows_.size();
            compatible_.assign(n_, 0);
        }

        // Lexicographically least k-subset for completion c, if any.
        std::optional<std::vector<std::size_t>> subset_for(std::uint64_t c)
        {
            const auto u = unknowns_.size();
            for (std::size_t t = 0; t < u; ++t) {
                const bool one = (c >> (u - 1 - t)) & 1;
                rows_[unknowns_[t].row].set(unknowns_[t].coordinate, one ? Cell::One : Cell::Zero);
            }
            for (std::size_t i = 0; i < n_; ++i)
                compatible_[i] = 0;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i + 1; j < n_; ++j)
                    if (delta(rows_[i], rows_[j]) >= instance_.r() + 1) {
                        compatible_[i] |= std::uint64_t{1} << j;
                        compatible_[j] |= std::uint64_t{1} << i;
                    }

            std::vector<std::size_t> chosen;
            if (extend(chosen, 0, ~std::uint64_t{0}))
                return chosen;
            return std::nullopt;
        }

        const std::vector<PartialVector> & rows() const { return rows_; }

    private:
        bool extend(std::vector<std::size_t> & chosen, std::size_t start, std::uint64_t allowed) const
        {
            if (chosen.size() == instance_.k())
                return true;
            for (std::size_t i = start; i + (instance_.k() - chosen.size()) <= n_; ++i) {
                if (!((allowed >> i) & 1))
                    continue;
                chosen.push_back(i);
                if (extend(chosen, i + 1, allowed & compatible_[i]))
                    return true;
                chosen.pop_back();
            }
            return false;
        }

        const Instance & instance_;
        const std::vector<UnknownCell> & unknowns_;
        std::vector<PartialVector> rows_;
        std::vector<std::uint64_t> compatible_;
        std::size_t n_ = 0;
    };

} // namespace

bool oracle_feasible(const Instance & instance, const OracleLimits & limits)
{
    return instance.size() <= std::min<std::size_t>(limits.max_rows, 64) &&
           instance.unknown_count() <= std::min<std::size_t>(limits.max_unknowns, 62);
}

SolveOutcome oracle_solve(const Instance & instance, const OracleLimits & limits)
{
    if (!oracle_feasible(instance, limits))
        throw OracleInfeasible("oracle refuses: " + std::to_string(instance.size()) + " rows, " +
                               std::to_string(instance.unknown_count()) + " unknown entries (caps " +
                               std::to_string(limits.max_rows) + " rows, " + std::to_string(limits.max_unknowns) +
                               " unknowns)");

    std::vector<UnknownCell> unknowns;
    for (std::size_t i = 0; i < instance.size(); ++i)
        for (auto j : instance.row(i).unknown_positions())
            unknowns.push_back({i, j});

    const std::uint64_t total = std::uint64_t{1} << unknowns.size();
    unsigned threads = limits.threads ? limits.threads : std::max(1u, std::thread::hardware_concurrency());
    if (total < 4096)
        threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

    // Each worker scans an interleaved share of completion indices in
    // ascending order and stops once it passes the best index found so far.
    std::atomic<std::uint64_t> best{total};
    auto work = [&](unsigned id) {
        CompletionScan scan(instance, unknowns);
        for (std::uint64_t c = id; c < total; c += threads) {
            if (c >= best.load(std::memory_order_relaxed))
                return;
            if (scan.subset_for(c)) {
                auto seen = best.load();
                while (c < seen && !best.compare_exchange_weak(seen, c)) {
                }
                return;
            }
        }
    };

    if (threads == 1) {
        work(0);
    }
    else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id)
            pool.emplace_back(work, id);
    }

    SolveOutcome out;
    if (best.load() == total)
        return out;

    CompletionScan scan(instance, unknowns);
    auto subset = scan.subset_for(best.load());
    out.answer = Answer::Yes;
    out.witness = Solution{scan.rows(), std::move(*subset)};
    return out;
}

} // namespace hypdiv
