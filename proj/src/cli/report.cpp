#include "hypdiv/cli.hpp"

#include <cstdio>

namespace hypdiv::cli {

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex_digest(std::uint64_t digest)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

void RunReport::add_trace(const std::vector<TraceStep> & trace)
{
    for (const auto & step : trace)
        ++trace_summary[to_string(step.kind)];
}

nlohmann::json RunReport::to_json() const
{
    nlohmann::json timing = nlohmann::json::array();
    for (const auto & t : timings)
        timing.push_back({{"stage", t.stage}, {"ms", std::chrono::duration<double, std::milli>(t.elapsed).count()}});

    nlohmann::json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["outcome"] = outcome;
    j["certified"] = certified;
    j["timings"] = std::move(timing);
    j["trace_summary"] = trace_summary;
    j["discrepancies"] = discrepancies;
    if (!details.empty())
        j["details"] = details;
    return j;
}

} // namespace hypdiv::cli
