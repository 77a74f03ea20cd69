#include "hypdiv/solver.hpp"
#include "hypdiv/sunflower.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace hypdiv {

std::string to_string(Answer a) { return a == Answer::Yes ? "YES" : "NO"; }

std::string to_string(TraceStep::Kind kind)
{
    switch (kind) {
    case TraceStep::Kind::DuplicateCap: return "duplicate-cap";
    case TraceStep::Kind::HeavyWildcard: return "heavy-wildcard";
    case TraceStep::Kind::Prune: return "prune";
    case TraceStep::Kind::PruneFailed: return "prune-failed";
    case TraceStep::Kind::Shortcut: return "shortcut";
    case TraceStep::Kind::GreedyFastPath: return "greedy-fast-path";
    case TraceStep::Kind::BruteForce: return "brute-force";
    case TraceStep::Kind::BoundedGreedy: return "bounded-greedy";
    }
    return "unknown";
}

namespace {

    using Rows = std::vector<PartialVector>;
    using Indices = std::vector<std::size_t>;

    BigCount sat_mul(BigCount a, BigCount b)
    {
        BigCount out = 0;
        if (__builtin_mul_overflow(a, b, &out) || out > big_count_cap)
            return big_count_cap;
        return out;
    }

    BigCount wildcard_budget(std::size_t k, std::size_t r) { return k == 0 ? 0 : sat_mul(k - 1, r + 1); }

    class StageClock
    {
    public:
        explicit StageClock(std::vector<StageTiming> & sink) : sink_(sink) {}

        void lap(std::string stage)
        {
            const auto now = std::chrono::steady_clock::now();
            sink_.push_back({std::move(stage), now - start_});
            start_ = now;
        }

    private:
        std::vector<StageTiming> & sink_;
        std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    };

    // Keeps the first k copies of every distinct partial row.
    Indices cap_duplicates(const Rows & rows, const Indices & alive, std::size_t k, std::vector<TraceStep> & trace)
    {
        std::unordered_map<PartialVector, std::size_t, PartialVectorHash> copies;
        Indices kept;
        kept.reserve(alive.size());
        for (auto i : alive) {
            if (++copies[rows[i]] <= k)
                kept.push_back(i);
            else
                trace.push_back({TraceStep::Kind::DuplicateCap, i, k});
        }
        return kept;
    }

    std::optional<std::size_t> first_heavy(const Rows & rows, const Indices & alive, std::size_t k, std::size_t r)
    {
        if (k == 0)
            return std::nullopt;
        const auto budget = wildcard_budget(k, r);
        for (std::size_t p = 0; p < alive.size(); ++p)
            if (rows[alive[p]].unknown_count() > budget)
                return p;
        return std::nullopt;
    }

    // k rounds of: take the lowest surviving row, drop everything within r.
    std::optional<Indices> greedy_pick(const Rows & rows, const Indices & alive, std::size_t k, std::size_t r)
    {
        std::vector<char> gone(alive.size(), 0);
        Indices picked;
        std::size_t next = 0;
        while (picked.size() < k) {
            while (next < alive.size() && gone[next])
                ++next;
            if (next == alive.size())
                return std::nullopt;
            const auto & centre = rows[alive[next]];
            picked.push_back(alive[next]);
            for (std::size_t p = next; p < alive.size(); ++p)
                if (!gone[p] && within_distance(centre, rows[alive[p]], r))
                    gone[p] = 1;
        }
        return picked;
    }

    struct PartialWitness
    {
        Indices selected;  // original indices, ascending
        Rows completions;  // aligned with selected
    };

    PartialWitness zero_witness(const Rows & rows, Indices selected)
    {
        std::sort(selected.begin(), selected.end());
        PartialWitness w{std::move(selected), {}};
        for (auto i : w.selected)
            w.completions.push_back(rows[i].zero_completed());
        return w;
    }

    // Exact search for the subset/completion. Subsets are visited in
    // lexicographic order; for each subset, row completions are tried in
    // lexicographic order (first unknown is the most significant choice) and
    // abandoned as soon as a pair falls below r + 1.
    class BruteForce
    {
    public:
        BruteForce(const Rows & rows, const Indices & alive, std::size_t k, std::size_t r) :
            rows_(rows), alive_(alive), k_(k), r_(r)
        {
        }

        std::optional<PartialWitness> run()
        {
            if (k_ == 0)
                return PartialWitness{};
            if (alive_.size() < k_)
                return std::nullopt;

            const auto n = alive_.size();
            separable_.assign(n * n, 0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    separable_[a * n + b] = separable_[b * n + a] = can_separate(rows_[alive_[a]], rows_[alive_[b]]);

            chosen_.clear();
            if (!choose(0))
                return std::nullopt;

            PartialWitness w;
            for (std::size_t t = 0; t < k_; ++t) {
                w.selected.push_back(alive_[chosen_[t]]);
                w.completions.push_back(completed_[t]);
            }
            return w;
        }

    private:
        // Largest achievable distance is d minus the coordinates where both
        // rows are known and equal.
        bool can_separate(const PartialVector & a, const PartialVector & b) const
        {
            const auto ka = a.known_words(), kb = b.known_words(), va = a.value_words(), vb = b.value_words();
            std::size_t fixed_equal = 0;
            for (std::size_t w = 0; w < ka.size(); ++w)
                fixed_equal += std::popcount(ka[w] & kb[w] & ~(va[w] ^ vb[w]));
            return a.size() - fixed_equal >= r_ + 1;
        }

        bool choose(std::size_t start)
        {
            const auto n = alive_.size();
            if (chosen_.size() == k_) {
                completed_.assign(k_, PartialVector{});
                return complete(0);
            }
            for (std::size_t p = start; p + (k_ - chosen_.size()) <= n; ++p) {
                bool ok = true;
                for (auto q : chosen_)
                    if (!separable_[q * n + p]) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                chosen_.push_back(p);
                if (choose(p + 1))
                    return true;
                chosen_.pop_back();
            }
            return false;
        }

        bool complete(std::size_t t)
        {
            if (t == k_)
                return true;
            const auto & row = rows_[alive_[chosen_[t]]];
            const auto unknowns = row.unknown_positions();
            if (unknowns.size() >= 63)
                throw ContractError("brute force: a row with " + std::to_string(unknowns.size()) +
                                    " unknown entries is beyond exhaustive search");
            const std::uint64_t count = std::uint64_t{1} << unknowns.size();
            PartialVector candidate = row.zero_completed();
            for (std::uint64_t mask = 0; mask < count; ++mask) {
                for (std::size_t u = 0; u < unknowns.size(); ++u)
                    candidate.set(unknowns[u], ((mask >> (unknowns.size() - 1 - u)) & 1) ? Cell::One : Cell::Zero);
                bool ok = true;
                for (std::size_t s = 0; s < t && ok; ++s)
                    ok = !within_distance(candidate, completed_[s], r_);
                if (!ok)
                    continue;
                completed_[t] = candidate;
                if (complete(t + 1))
                    return true;
            }
            return false;
        }

        const Rows & rows_;
        const Indices & alive_;
        std::size_t k_, r_;
        std::vector<char> separable_;
        Indices chosen_;
        Rows completed_;
    };

    // Sunflower search for a removable row among the alive rows.
    // `centre` is an original row index contained in `alive`.
    std::size_t irrelevant_row(const Rows & rows, const Indices & alive, std::size_t centre, std::size_t r,
                               const Thresholds & thresholds)
    {
        const auto & v = rows[centre];

        Indices neighbourhood;
        for (auto i : alive)
            if (within_distance(v, rows[i], r))
                neighbourhood.push_back(i);

        // classes by the exact {0,1,?} pattern on the unknown coordinates of v
        const auto z = v.unknown_positions();
        std::map<std::string, Indices> classes;
        std::vector<std::string> first_seen;
        for (auto i : neighbourhood) {
            std::string key;
            key.reserve(z.size());
            for (auto j : z)
                key.push_back(to_char(rows[i][j]));
            auto & members = classes[key];
            if (members.empty())
                first_seen.push_back(key);
            members.push_back(i);
        }
        const Indices * largest = nullptr;
        for (const auto & key : first_seen)
            if (!largest || classes[key].size() > largest->size())
                largest = &classes[key];

        // uniform sub-families by |x̂|
        std::map<std::size_t, SetFamily> by_size;
        for (auto i : *largest) {
            auto signature = neighbour_signature(v, rows[i]);
            const auto alpha = signature.size();
            if (alpha > 0)
                by_size[alpha].add(std::move(signature), i);
        }

        const auto target = thresholds.sunflower_target;
        std::vector<std::size_t> order;
        for (const auto & [alpha, family] : by_size)
            if (family.size() >= sunflower_bound(alpha, target))
                order.push_back(alpha);
        for (const auto & [alpha, family] : by_size)
            if (family.size() < sunflower_bound(alpha, target))
                order.push_back(alpha);

        for (auto alpha : order) {
            const auto & family = by_size[alpha];
            if (target > family.size())
                continue;
            if (auto flower = find_sunflower(family, alpha, target)) {
                std::size_t lowest = family.tag(flower->member_indices.front());
                for (auto m : flower->member_indices)
                    lowest = std::min(lowest, family.tag(m));
                return lowest;
            }
        }
        throw ContractError("no sunflower with " + std::to_string(target) + " members in the neighbourhood of row " +
                            std::to_string(centre) + " (thresholds too small for this instance)");
    }

    std::size_t max_duplicate_multiplicity(const Rows & rows)
    {
        std::unordered_map<PartialVector, std::size_t, PartialVectorHash> copies;
        std::size_t most = 0;
        for (const auto & row : rows)
            most = std::max(most, ++copies[row]);
        return most;
    }

    Indices all_rows(std::size_t n)
    {
        Indices out(n);
        std::iota(out.begin(), out.end(), 0);
        return out;
    }

    Solution full_solution(const Rows & rows, const PartialWitness & w)
    {
        Solution s;
        s.completed.reserve(rows.size());
        for (const auto & row : rows)
            s.completed.push_back(row.zero_completed());
        for (std::size_t t = 0; t < w.selected.size(); ++t)
            s.completed[w.selected[t]] = w.completions[t];
        s.selected = w.selected;
        return s;
    }

} // namespace

std::vector<std::uint32_t> neighbour_signature(const PartialVector & v, const PartialVector & x)
{
    if (v.size() != x.size())
        throw DimensionError("signature: vector lengths differ");
    std::vector<std::uint32_t> out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v.is_known(j))
            continue;
        if (!x.is_known(j))
            out.push_back(static_cast<std::uint32_t>(2 * j));
        else if (x[j] != v[j])
            out.push_back(static_cast<std::uint32_t>(2 * j + 1));
    }
    return out;
}

std::optional<HeavyWildcardReduction> reduce_heavy_wildcard(const Instance & instance)
{
    const auto & rows = instance.rows();
    const auto alive = all_rows(rows.size());
    const auto hit = first_heavy(rows, alive, instance.k(), instance.r());
    if (!hit)
        return std::nullopt;

    Rows rest;
    rest.reserve(rows.size() - 1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != *hit)
            rest.push_back(rows[i]);
    return HeavyWildcardReduction{Instance(instance.d(), instance.k() - 1, instance.r(), std::move(rest)),
                                  HeavyWildcardRecord{rows[*hit], *hit, instance.k()}};
}

PartialVector lifted_row(const PartialVector & row, const std::vector<PartialVector> & others, std::size_t r)
{
    const auto unknowns = row.unknown_positions();
    const auto needed = others.size() * (r + 1);
    if (unknowns.size() < needed)
        throw ContractError("row has " + std::to_string(unknowns.size()) + " unknown entries, lifting needs " +
                            std::to_string(needed));

    auto out = row.zero_completed();
    for (std::size_t i = 0; i < others.size(); ++i) {
        if (others[i].size() != row.size())
            throw DimensionError("lifting: vector lengths differ");
        for (std::size_t c = i * (r + 1); c < (i + 1) * (r + 1); ++c) {
            const auto j = unknowns[c];
            out.set(j, others[i][j] == Cell::Zero ? Cell::One : Cell::Zero);
        }
    }
    return out;
}

Solution lift_heavy_wildcard(const Instance & reduced, const Solution & reduced_solution,
                             const HeavyWildcardRecord & record)
{
    if (record.k_before != reduced.k() + 1)
        throw ContractError("record does not match the reduced instance's k");
    if (record.position > reduced.size())
        throw ContractError("record position out of range");
    if (const auto report = verify_solution(reduced, reduced_solution); !report)
        throw ContractError("reduced solution does not verify: " + report.reasons.front());

    std::vector<PartialVector> others;
    for (auto s : reduced_solution.selected)
        others.push_back(reduced_solution.completed[s]);

    Solution out;
    out.completed = reduced_solution.completed;
    out.completed.insert(out.completed.begin() + static_cast<std::ptrdiff_t>(record.position),
                         lifted_row(record.row, others, reduced.r()));
    for (auto s : reduced_solution.selected)
        out.selected.push_back(s >= record.position ? s + 1 : s);
    out.selected.push_back(record.position);
    std::sort(out.selected.begin(), out.selected.end());
    return out;
}

std::optional<Solution> greedy_bounded_neighborhood(const Instance & instance, const Thresholds & thresholds)
{
    const auto & rows = instance.rows();
    if (rows.size() < sat_mul(instance.k(), thresholds.zeta_gate))
        return std::nullopt;
    for (std::size_t v = 0; v < rows.size(); ++v)
        if (hamming_neighborhood(instance, v, instance.r()).size() >= thresholds.zeta_gate)
            return std::nullopt;

    auto picked = greedy_pick(rows, all_rows(rows.size()), instance.k(), instance.r());
    if (!picked)
        throw std::logic_error("bounded-neighbourhood greedy ran out of rows despite its preconditions");
    return full_solution(rows, zero_witness(rows, std::move(*picked)));
}

std::optional<std::size_t> find_irrelevant_vector(const Instance & instance, std::size_t v,
                                                  const Thresholds & thresholds)
{
    if (v >= instance.size())
        throw std::out_of_range("row index " + std::to_string(v) + " out of range");
    if (instance.k() == 0)
        return std::nullopt;
    const auto & rows = instance.rows();
    const auto budget = wildcard_budget(instance.k(), instance.r());
    for (const auto & row : rows)
        if (row.unknown_count() > budget)
            return std::nullopt;
    if (max_duplicate_multiplicity(rows) > instance.k())
        return std::nullopt;
    if (hamming_neighborhood(instance, v, instance.r()).size() < thresholds.zeta_gate)
        return std::nullopt;
    return irrelevant_row(rows, all_rows(rows.size()), v, instance.r(), thresholds);
}

SolveOutcome brute_force_small(const Instance & instance)
{
    SolveOutcome out;
    const auto & rows = instance.rows();
    out.trace.push_back({TraceStep::Kind::BruteForce, 0, instance.k()});
    if (auto found = BruteForce(rows, all_rows(rows.size()), instance.k(), instance.r()).run()) {
        out.answer = Answer::Yes;
        out.witness = full_solution(rows, *found);
    }
    return out;
}

SolveOutcome solve(const Instance & instance, const SolveOptions & options)
{
    SolveOutcome out;
    StageClock clock(out.timings);
    auto & trace = out.trace;

    const auto & rows = instance.rows();
    const auto r = instance.r();
    auto k = instance.k();
    auto alive = all_rows(rows.size());

    // preprocessing: duplicates, then heavy-wildcard rows
    alive = cap_duplicates(rows, alive, k, trace);
    std::vector<HeavyWildcardRecord> heavy;
    while (auto hit = first_heavy(rows, alive, k, r)) {
        const auto index = alive[*hit];
        heavy.push_back({rows[index], index, k});
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(*hit));
        --k;
        trace.push_back({TraceStep::Kind::HeavyWildcard, index, k});
    }
    if (!heavy.empty())
        alive = cap_duplicates(rows, alive, k, trace);
    clock.lap("preprocess");

    std::optional<PartialWitness> found;
    if (k <= 1) {
        trace.push_back({TraceStep::Kind::Shortcut, 0, k});
        if (k == 0)
            found = PartialWitness{};
        else if (!alive.empty())
            found = zero_witness(rows, {alive.front()});
        clock.lap("shortcut");
    }
    else if (auto picked = greedy_pick(rows, alive, k, r)) {
        trace.push_back({TraceStep::Kind::GreedyFastPath, 0, k});
        found = zero_witness(rows, std::move(*picked));
        clock.lap("greedy");
    }
    else {
        clock.lap("greedy");
        const auto thresholds = Thresholds::for_parameters(k, r, options.overrides);
        std::vector<std::size_t> neighbours;  // |N_r| per alive position, built on first use

        auto brute = [&] {
            trace.push_back({TraceStep::Kind::BruteForce, 0, k});
            found = BruteForce(rows, alive, k, r).run();
        };

        while (true) {
            if (alive.empty() || alive.size() < sat_mul(k, thresholds.zeta_gate)) {
                clock.lap("prune");
                brute();
                clock.lap("brute_force");
                break;
            }

            if (neighbours.empty()) {
                neighbours.assign(alive.size(), 0);
                for (std::size_t a = 0; a < alive.size(); ++a)
                    for (std::size_t b = a; b < alive.size(); ++b)
                        if (within_distance(rows[alive[a]], rows[alive[b]], r)) {
                            ++neighbours[a];
                            if (a != b)
                                ++neighbours[b];
                        }
            }

            const auto widest = std::max_element(neighbours.begin(), neighbours.end());
            if (*widest < thresholds.zeta_gate) {
                clock.lap("prune");
                auto picked = greedy_pick(rows, alive, k, r);
                if (!picked)
                    throw std::logic_error("bounded-neighbourhood greedy ran out of rows despite its preconditions");
                trace.push_back({TraceStep::Kind::BoundedGreedy, 0, k});
                found = zero_witness(rows, std::move(*picked));
                clock.lap("bounded_greedy");
                break;
            }

            const auto centre = alive[static_cast<std::size_t>(widest - neighbours.begin())];
            std::size_t drop = 0;
            try {
                drop = irrelevant_row(rows, alive, centre, r, thresholds);
            }
            catch (const ContractError &) {
                trace.push_back({TraceStep::Kind::PruneFailed, centre, k});
                clock.lap("prune");
                brute();
                clock.lap("brute_force");
                break;
            }

            const auto pos = static_cast<std::size_t>(std::lower_bound(alive.begin(), alive.end(), drop) - alive.begin());
            for (std::size_t p = 0; p < alive.size(); ++p)
                if (within_distance(rows[drop], rows[alive[p]], r))
                    --neighbours[p];
            alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pos));
            neighbours.erase(neighbours.begin() + static_cast<std::ptrdiff_t>(pos));
            trace.push_back({TraceStep::Kind::Prune, drop, k});
        }
    }

    if (!found) {
        clock.lap("lift");
        return out;
    }

    // replay heavy-wildcard removals backwards
    auto solution = full_solution(rows, *found);
    for (auto it = heavy.rbegin(); it != heavy.rend(); ++it) {
        std::vector<PartialVector> others;
        for (auto s : solution.selected)
            others.push_back(solution.completed[s]);
        solution.completed[it->position] = lifted_row(it->row, others, r);
        solution.selected.insert(std::lower_bound(solution.selected.begin(), solution.selected.end(), it->position),
                                 it->position);
    }

    if (const auto report = verify_solution(instance, solution); !report)
        throw std::logic_error("solver produced a witness that does not verify: " + report.reasons.front());

    out.answer = Answer::Yes;
    out.witness = std::move(solution);
    clock.lap("lift");
    return out;
}

} // namespace hypdiv
