#include "hypdiv/cli.hpp"
#include "hypdiv/fo.hpp"
#include "hypdiv/graph.hpp"
#include "hypdiv/reductions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hypdiv::cli {

namespace {

    constexpr int exit_yes = 0;
    constexpr int exit_no = 1;
    constexpr int exit_error = 2;

    std::string read_file(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error("cannot open '" + path + "'");
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }

    void write_file(const std::string & path, const std::string & content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out || !(out << content))
            throw Error("cannot write '" + path + "'");
    }

    void emit(const std::string & path, const std::string & content, std::ostream & out)
    {
        if (path.empty())
            out << content;
        else
            write_file(path, content);
    }

    void write_report(const std::string & path, const RunReport & report)
    {
        if (!path.empty())
            write_file(path, report.to_json().dump(2) + "\n");
    }

    std::vector<fo::Formula> read_sentences(const std::string & path)
    {
        std::vector<fo::Formula> out;
        std::istringstream in(read_file(path));
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            try {
                out.push_back(fo::parse_fo(line));
            } catch (const Error & e) {
                throw ParseError(number, e.what());
            }
        }
        return out;
    }

    std::string format_ratio(std::size_t num, std::size_t den)
    {
        std::ostringstream os;
        os << num << "/" << den << " = " << std::fixed << std::setprecision(3)
           << static_cast<double>(num) / static_cast<double>(den);
        return os.str();
    }

    struct Options
    {
        // solve / verify
        std::string instance_path, solution_path, output_path, report_path;
        bool oracle = false;
        std::optional<BigCount> zeta_gate, sunflower_target;
        // generate
        std::string kind, graph_path;
        std::optional<std::size_t> k;
        bool disjoint_pairs = false;
        // fo
        std::string fo_action, formulas_path;
        std::size_t hosts = 30;
        // bench
        std::vector<std::string> suites;
        bool all_suites = false;
        std::uint64_t seed = 0;
    };

    int cmd_solve(const Options & o, std::ostream & out, std::ostream & err)
    {
        const auto text = read_file(o.instance_path);
        const auto instance = parse_instance(text);

        RunReport report;
        report.command = "solve";
        report.input_digest = hex_digest(fnv1a64(text));

        SolveOptions options;
        options.overrides.zeta_gate = o.zeta_gate;
        options.overrides.sunflower_target = o.sunflower_target;
        report.certified = !options.overrides.any();

        SolveOutcome outcome;
        if (o.oracle) {
            report.details["method"] = "oracle";
            outcome = oracle_solve(instance);
        } else {
            report.details["method"] = "solve";
            outcome = solve(instance, options);
        }
        report.outcome = to_string(outcome.answer);
        report.timings = outcome.timings;
        report.add_trace(outcome.trace);

        if (!report.certified) {
            err << "WARNING: NON-CERTIFIED RUN: threshold overrides in effect\n";
            if (oracle_feasible(instance)) {
                const auto truth = oracle_solve(instance).answer;
                report.details["oracle_cross_check"] = to_string(truth);
                if (truth != outcome.answer) {
                    report.discrepancies.push_back({{"solver", to_string(outcome.answer)}, {"oracle", to_string(truth)}});
                    err << "WARNING: oracle answers " << to_string(truth) << ", overridden solver answers "
                        << to_string(outcome.answer) << "\n";
                }
            } else {
                report.details["oracle_cross_check"] = "skipped (outside oracle caps)";
            }
        }

        emit(o.output_path, serialize_solution(outcome.witness), out);
        write_report(o.report_path, report);
        return outcome.answer == Answer::Yes ? exit_yes : exit_no;
    }

    int cmd_verify(const Options & o, std::ostream & out, std::ostream &)
    {
        const auto instance = parse_instance(read_file(o.instance_path));
        const auto file = parse_solution(read_file(o.solution_path));
        if (!file.yes) {
            // a NO claim is checked against the exact solver
            if (solve(instance).answer == Answer::No) {
                out << "OK: NO confirmed\n";
                return exit_yes;
            }
            out << "FAIL: the instance has a k-diversity set\n";
            return exit_no;
        }
        const auto verdict = verify_solution(instance, *file.witness);
        if (verdict.ok) {
            out << "OK\n";
            return exit_yes;
        }
        for (const auto & reason : verdict.reasons)
            out << "FAIL: " << reason << "\n";
        return exit_no;
    }

    int cmd_generate(const Options & o, std::ostream & out, std::ostream &)
    {
        const auto graph = parse_graph(read_file(o.graph_path));
        std::string content;
        if (o.kind == "embed") {
            const auto rows = embed_subdivided(graph);
            content = serialize_instance(Instance(graph.n() + graph.m(), o.k.value_or(0), 1, rows));
        } else {
            if (!o.k)
                throw Error("generate " + o.kind + " needs -k");
            if (o.kind == "is-w1")
                content = serialize_instance(reduce_is_to_diversity(graph, *o.k));
            else
                content = serialize_instance(
                    reduce_is_to_r2(graph, *o.k, o.disjoint_pairs ? R2Mode::DisjointPairs : R2Mode::Verbatim));
        }
        emit(o.output_path, content, out);
        return exit_yes;
    }

    std::vector<Graph> harness_hosts(std::size_t count, std::uint64_t seed)
    {
        std::vector<Graph> hosts{Graph(2, {{1, 2}})};
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> size(1, 6);
        std::bernoulli_distribution coin(0.4);
        while (hosts.size() < count) {
            const auto n = size(rng);
            std::vector<Graph::Edge> edges;
            for (std::size_t u = 1; u <= n; ++u)
                for (std::size_t v = u + 1; v <= n; ++v)
                    if (coin(rng))
                        edges.emplace_back(u, v);
            hosts.emplace_back(n, std::move(edges));
        }
        return hosts;
    }

    int cmd_fo(const Options & o, std::ostream & out, std::ostream &)
    {
        const auto sentences = read_sentences(o.formulas_path);
        RunReport report;
        report.command = "fo " + o.fo_action;
        auto digest_input = read_file(o.formulas_path);

        if (o.fo_action == "rewrite") {
            std::size_t worst_num = 0, worst_den = 1;
            for (const auto & phi : sentences) {
                const auto rewritten = fo::rewrite_fo(phi);
                const auto num = fo::node_count(rewritten), den = fo::node_count(phi);
                out << fo::to_string(rewritten) << "\n";
                out << "ratio: " << format_ratio(num, den) << "\n";
                if (num * worst_den > worst_num * den) {
                    worst_num = num;
                    worst_den = den;
                }
            }
            report.outcome = sentences.empty() ? "empty" : "max ratio " + format_ratio(worst_num, worst_den);
            report.input_digest = hex_digest(fnv1a64(digest_input));
            write_report(o.report_path, report);
            return exit_yes;
        }

        if (o.fo_action == "check") {
            if (o.graph_path.empty())
                throw Error("fo check needs a graph file");
            const auto text = read_file(o.graph_path);
            const auto graph = parse_graph(text);
            bool all = true;
            for (const auto & phi : sentences) {
                const bool value = fo::eval_fo(graph, phi);
                all = all && value;
                out << (value ? "true" : "false") << "\n";
            }
            report.outcome = all ? "all true" : "some false";
            report.input_digest = hex_digest(fnv1a64(digest_input + text));
            write_report(o.report_path, report);
            return all ? exit_yes : exit_no;
        }

        // harness
        std::vector<Graph> hosts;
        if (!o.graph_path.empty()) {
            const auto text = read_file(o.graph_path);
            digest_input += text;
            hosts.push_back(parse_graph(text));
        } else {
            hosts = harness_hosts(o.hosts, o.seed);
            report.details["seed"] = o.seed;
        }
        report.input_digest = hex_digest(fnv1a64(digest_input));

        const auto records = fo::run_embedding_harness(hosts, sentences, fo::phi_v());
        std::size_t agreements = 0;
        nlohmann::json cells = nlohmann::json::array();
        for (const auto & rec : records) {
            agreements += rec.agree ? 1 : 0;
            nlohmann::json cell{{"graph", rec.graph_index},
                                {"sentence", rec.sentence_index},
                                {"host_value", rec.host_value},
                                {"embedded_value", rec.embedded_value},
                                {"agree", rec.agree},
                                {"original_size", rec.original_size},
                                {"rewritten_size", rec.rewritten_size},
                                {"misclassified", rec.misclassified}};
            if (!rec.agree)
                report.discrepancies.push_back(cell);
            cells.push_back(std::move(cell));
        }
        nlohmann::json graphs = nlohmann::json::array();
        for (const auto & h : hosts)
            graphs.push_back(serialize_graph(h));
        report.outcome = std::to_string(agreements) + "/" + std::to_string(records.size()) + " agree";
        report.details["hosts"] = std::move(graphs);
        report.details["cells"] = std::move(cells);

        const auto document = report.to_json().dump(2) + "\n";
        if (o.report_path.empty())
            out << document;
        else {
            write_file(o.report_path, document);
            out << report.outcome << "\n";
        }
        return exit_yes;
    }

    int cmd_bench(const Options & o, std::ostream & out, std::ostream &)
    {
        std::vector<std::string> suites = o.all_suites ? bench_suites() : o.suites;
        const auto rows = run_bench(suites, o.seed);
        out << format_bench_table(rows);
        if (!o.report_path.empty()) {
            RunReport report;
            report.command = "bench";
            report.input_digest = hex_digest(fnv1a64(nlohmann::json(suites).dump() + std::to_string(o.seed)));
            report.outcome = std::to_string(rows.size()) + " cases";
            report.details["seed"] = o.seed;
            report.details["rows"] = bench_to_json(rows);
            write_report(o.report_path, report);
        }
        return exit_yes;
    }

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    Options o;
    CLI::App app{"k-diversity sets over partial binary vectors", "hypdiv"};
    app.require_subcommand(1);

    auto * solve_cmd = app.add_subcommand("solve", "decide an instance; exit 0 YES, 1 NO");
    solve_cmd->add_option("instance", o.instance_path, "instance file")->required();
    solve_cmd->add_option("-o,--output", o.output_path, "solution file (default stdout)");
    solve_cmd->add_flag("--oracle", o.oracle, "exhaustive oracle instead of the solver");
    solve_cmd->add_option("--zeta-gate", o.zeta_gate, "test override of the neighbourhood gate (non-certified)");
    solve_cmd->add_option("--sunflower-target", o.sunflower_target,
                          "test override of the sunflower size (non-certified)");
    solve_cmd->add_option("--report", o.report_path, "write a JSON run report");

    auto * verify_cmd = app.add_subcommand("verify", "check a solution file against an instance");
    verify_cmd->add_option("instance", o.instance_path, "instance file")->required();
    verify_cmd->add_option("solution", o.solution_path, "solution file")->required();

    auto * generate_cmd = app.add_subcommand("generate", "build a reduction instance from a graph");
    generate_cmd->add_option("kind", o.kind, "is-w1, is-r2 or embed")
        ->required()
        ->check(CLI::IsMember({"is-w1", "is-r2", "embed"}));
    generate_cmd->add_option("graph", o.graph_path, "graph file")->required();
    generate_cmd->add_option("-k", o.k, "solution size");
    generate_cmd->add_flag("--disjoint-pairs", o.disjoint_pairs, "is-r2: vertex i owns coordinates 2i-1, 2i");
    generate_cmd->add_option("-o,--output", o.output_path, "output file (default stdout)");

    auto * fo_cmd = app.add_subcommand("fo", "first-order formulas over graphs");
    fo_cmd->add_option("action", o.fo_action, "rewrite, check or harness")
        ->required()
        ->check(CLI::IsMember({"rewrite", "check", "harness"}));
    fo_cmd->add_option("formulas", o.formulas_path, "one sentence per line")->required();
    fo_cmd->add_option("graph", o.graph_path, "graph file (check; optional for harness)");
    fo_cmd->add_option("--hosts", o.hosts, "harness: number of seeded host graphs");
    fo_cmd->add_option("--seed", o.seed, "harness: seed for host graphs");
    fo_cmd->add_option("--report", o.report_path, "write a JSON run report");

    auto * bench_cmd = app.add_subcommand("bench", "timing table over seeded instance suites");
    bench_cmd->add_option("--suite", o.suites, "suite name (repeatable)")->check(CLI::IsMember(bench_suites()));
    bench_cmd->add_flag("--all", o.all_suites, "run every suite");
    bench_cmd->add_option("--seed", o.seed, "instance seed");
    bench_cmd->add_option("--report", o.report_path, "write a JSON run report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError & e) {
        const auto code = app.exit(e, out, err);
        return code == 0 ? exit_yes : exit_error;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(o, out, err);
        if (*verify_cmd)
            return cmd_verify(o, out, err);
        if (*generate_cmd)
            return cmd_generate(o, out, err);
        if (*fo_cmd)
            return cmd_fo(o, out, err);
        return cmd_bench(o, out, err);
    } catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

} // namespace hypdiv::cli
