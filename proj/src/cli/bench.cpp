#include "hypdiv/cli.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace hypdiv::cli {

namespace {

    struct Case
    {
        std::size_t rows, d, k, r;
        double density;
    };

    std::vector<Case> suite_cases(const std::string & suite)
    {
        if (suite == "rows")
            return {{100, 32, 3, 2, 0}, {1000, 32, 3, 2, 0}, {10000, 32, 3, 2, 0}};
        if (suite == "dim")
            return {{1000, 16, 3, 2, 0}, {1000, 64, 3, 2, 0}, {1000, 256, 3, 2, 0}};
        if (suite == "k")
            return {{500, 64, 2, 2, 0}, {500, 64, 3, 2, 0}, {500, 64, 4, 2, 0}, {500, 64, 5, 2, 0}};
        if (suite == "r")
            return {{500, 64, 3, 0, 0}, {500, 64, 3, 2, 0}, {500, 64, 3, 4, 0}, {500, 64, 3, 8, 0}};
        if (suite == "wildcards")
            return {{12, 10, 3, 2, 0.0}, {12, 10, 3, 2, 0.1}, {12, 10, 3, 2, 0.2}, {12, 10, 3, 2, 0.3}};
        if (suite == "dense")
            return {{10000, 128, 3, 4, 0}};
        throw Error("unknown bench suite '" + suite + "'");
    }

    std::string case_label(const Case & c)
    {
        std::ostringstream os;
        os << "M=" << c.rows << " d=" << c.d << " k=" << c.k << " r=" << c.r << " w=" << c.density;
        return os.str();
    }

} // namespace

Instance random_instance(std::mt19937_64 & rng, std::size_t d, std::size_t rows, std::size_t k, std::size_t r,
                         double wildcard_density)
{
    std::bernoulli_distribution wildcard(wildcard_density), bit(0.5);
    std::vector<PartialVector> out;
    out.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        PartialVector v(d);
        for (std::size_t j = 0; j < d; ++j)
            v.set(j, wildcard(rng) ? Cell::Unknown : (bit(rng) ? Cell::One : Cell::Zero));
        out.push_back(std::move(v));
    }
    return Instance(d, k, r, std::move(out));
}

const std::vector<std::string> & bench_suites()
{
    static const std::vector<std::string> names{"rows", "dim", "k", "r", "wildcards", "dense"};
    return names;
}

std::vector<std::pair<std::string, Instance>> bench_instances(const std::string & suite, std::uint64_t seed)
{
    const auto cases = suite_cases(suite);
    std::vector<std::pair<std::string, Instance>> out;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto & c = cases[i];
        std::mt19937_64 rng(seed ^ fnv1a64(suite) ^ (i * 0x9e3779b97f4a7c15ULL));
        out.emplace_back(case_label(c), random_instance(rng, c.d, c.rows, c.k, c.r, c.density));
    }
    return out;
}

std::vector<BenchRow> run_bench(const std::vector<std::string> & suites, std::uint64_t seed)
{
    std::vector<BenchRow> out;
    for (const auto & suite : suites) {
        const auto cases = suite_cases(suite);
        const auto instances = bench_instances(suite, seed);
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto & [label, instance] = instances[i];
            BenchRow row;
            row.suite = suite;
            row.label = label;
            row.rows = instance.size();
            row.d = instance.d();
            row.k = instance.k();
            row.r = instance.r();
            row.wildcard_density = cases[i].density;
            row.digest = hex_digest(fnv1a64(serialize_instance(instance)));

            const auto start = std::chrono::steady_clock::now();
            const auto outcome = solve(instance);
            row.total_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            row.answer = outcome.answer;
            row.path = outcome.trace.empty() ? "none" : to_string(outcome.trace.back().kind);
            row.timings = outcome.timings;
            out.push_back(std::move(row));
        }
    }
    return out;
}

std::string format_bench_table(const std::vector<BenchRow> & rows)
{
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-10s %-34s %-16s %-4s %-18s %12s\n", "suite", "case", "digest", "ans", "path",
                  "total_ms");
    os << line;
    for (const auto & r : rows) {
        std::snprintf(line, sizeof line, "%-10s %-34s %-16s %-4s %-18s %12.3f\n", r.suite.c_str(), r.label.c_str(),
                      r.digest.c_str(), to_string(r.answer).c_str(), r.path.c_str(), r.total_ms);
        os << line;
    }
    return os.str();
}

nlohmann::json bench_to_json(const std::vector<BenchRow> & rows)
{
    auto out = nlohmann::json::array();
    for (const auto & r : rows) {
        nlohmann::json stages = nlohmann::json::array();
        for (const auto & t : r.timings)
            stages.push_back({{"stage", t.stage}, {"ms", std::chrono::duration<double, std::milli>(t.elapsed).count()}});
        out.push_back({{"suite", r.suite},
                       {"case", r.label},
                       {"rows", r.rows},
                       {"d", r.d},
                       {"k", r.k},
                       {"r", r.r},
                       {"wildcard_density", r.wildcard_density},
                       {"digest", r.digest},
                       {"answer", to_string(r.answer)},
                       {"path", r.path},
                       {"timings", std::move(stages)},
                       {"total_ms", r.total_ms}});
    }
    return out;
}

} // namespace hypdiv::cli
