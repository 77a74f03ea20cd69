#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypdiv/core.hpp"
#include "hypdiv/solver.hpp"

namespace hypdiv::cli {

/// Runs one command line (without the program name). Exit codes: 0 = YES or
/// pass, 1 = NO or fail, 2 = usage or input error.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

// --- Reports ---------------------------------------------------------------

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex_digest(std::uint64_t digest);

struct RunReport
{
    std::string command;
    std::string input_digest;
    std::string outcome;
    bool certified = true;
    std::vector<StageTiming> timings;
    std::map<std::string, std::size_t> trace_summary;
    nlohmann::json discrepancies = nlohmann::json::array();
    nlohmann::json details = nlohmann::json::object();

    void add_trace(const std::vector<TraceStep> & trace);
    nlohmann::json to_json() const;
};

// --- Benchmarks --------------------------------------------------------------

/// Uniform random instance: each cell unknown with probability
/// `wildcard_density`, otherwise a fair bit.
Instance random_instance(std::mt19937_64 & rng, std::size_t d, std::size_t rows, std::size_t k, std::size_t r,
                         double wildcard_density);

struct BenchRow
{
    std::string suite;
    std::string label;
    std::size_t rows = 0;
    std::size_t d = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    double wildcard_density = 0;
    std::string digest;  ///< FNV-1a of the serialized instance
    Answer answer = Answer::No;
    std::string path;    ///< kind of the final trace step
    std::vector<StageTiming> timings;
    double total_ms = 0;
};

/// Names accepted by `bench --suite`.
const std::vector<std::string> & bench_suites();

/// The deterministic instances of one suite.
std::vector<std::pair<std::string, Instance>> bench_instances(const std::string & suite, std::uint64_t seed);

std::vector<BenchRow> run_bench(const std::vector<std::string> & suites, std::uint64_t seed);

std::string format_bench_table(const std::vector<BenchRow> & rows);
nlohmann::json bench_to_json(const std::vector<BenchRow> & rows);

} // namespace hypdiv::cli
