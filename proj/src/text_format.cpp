#include "hypdiv/core.hpp"

#include <charconv>
#include <sstream>

namespace hypdiv {

namespace {

    struct Line
    {
        std::size_t number;
        std::string_view text;
    };

    std::string_view trim(std::string_view s)
    {
        const auto first = s.find_first_not_of(" \t\r");
        if (first == std::string_view::npos)
            return {};
        const auto last = s.find_last_not_of(" \t\r");
        return s.substr(first, last - first + 1);
    }

    // Non-blank, non-comment lines with their 1-based line numbers.
    std::vector<Line> content_lines(std::string_view text)
    {
        std::vector<Line> out;
        std::size_t number = 0;
        while (!text.empty() || number == 0) {
            ++number;
            const auto nl = text.find('\n');
            auto raw = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            auto line = trim(raw);
            if (!line.empty() && line.front() != '#')
                out.push_back({number, line});
            if (text.empty())
                break;
        }
        return out;
    }

    std::vector<std::size_t> parse_counts(const Line & line, const char * what)
    {
        std::vector<std::size_t> values;
        auto rest = line.text;
        while (!rest.empty()) {
            const auto sp = rest.find_first_of(" \t");
            auto token = rest.substr(0, sp);
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError(line.number, std::string("bad ") + what + ": '" + std::string(token) +
                                                  "' is not a non-negative integer");
            values.push_back(value);
            rest = sp == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp));
        }
        return values;
    }

    PartialVector parse_row(const Line & line, std::size_t d)
    {
        if (line.text.size() != d)
            throw ParseError(line.number, "row has " + std::to_string(line.text.size()) + " characters, expected " +
                                              std::to_string(d));
        try {
            return PartialVector::from_string(line.text);
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(line.number, e.what());
        }
    }

} // namespace

Instance parse_instance(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, "missing header 'd k r'");

    const auto header = parse_counts(lines.front(), "header");
    if (header.size() != 3)
        throw ParseError(lines.front().number,
                         "header must hold exactly three numbers 'd k r', got " + std::to_string(header.size()));
    const auto d = header[0], k = header[1], r = header[2];

    std::vector<PartialVector> rows;
    rows.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i)
        rows.push_back(parse_row(lines[i], d));
    return Instance(d, k, r, std::move(rows));
}

std::string serialize_instance(const Instance & instance)
{
    if (instance.d() == 0 && instance.size() > 0)
        throw ContractError("rows of dimension 0 have no text encoding");
    std::ostringstream out;
    out << instance.d() << ' ' << instance.k() << ' ' << instance.r() << '\n';
    for (const auto & row : instance.rows())
        out << row.to_string() << '\n';
    return out.str();
}

SolutionFile parse_solution(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty solution file");

    const auto & head = lines.front();
    if (head.text == "NO") {
        if (lines.size() > 1)
            throw ParseError(lines[1].number, "unexpected content after NO");
        return {};
    }
    if (head.text != "YES")
        throw ParseError(head.number, "first line must be YES or NO");

    if (lines.size() < 2 || !lines.back().text.starts_with("S:"))
        throw ParseError(lines.back().number, "missing final 'S: ...' line");

    Solution solution;
    std::optional<std::size_t> d;
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        if (!d)
            d = lines[i].text.size();
        solution.completed.push_back(parse_row(lines[i], *d));
    }

    const auto & s_line = lines.back();
    const Line indices{s_line.number, trim(s_line.text.substr(2))};
    solution.selected = parse_counts(indices, "selection");
    return {true, std::move(solution)};
}

std::string serialize_solution(const std::optional<Solution> & witness)
{
    if (!witness)
        return "NO\n";
    std::ostringstream out;
    out << "YES\n";
    for (const auto & row : witness->completed)
        out << row.to_string() << '\n';
    out << "S:";
    for (auto s : witness->selected)
        out << ' ' << s;
    out << '\n';
    return out.str();
}

} // namespace hypdiv
