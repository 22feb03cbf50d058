#include <mcpart/cli.hh>
#include <mcpart/clique_cover.hh>
#include <mcpart/errors.hh>
#include <mcpart/generators.hh>
#include <mcpart/partition_enum.hh>

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

using namespace mcpart;

namespace
{
    class UsageError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    auto parse_number(std::string_view text, std::string_view what) -> std::size_t
    {
        std::size_t result = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), result);
        if (text.empty() || ec != std::errc{ } || ptr != text.data() + text.size())
            throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
        return result;
    }

    // "a..b" inclusive, or a single value
    auto parse_range(std::string_view text) -> std::pair<std::size_t, std::size_t>
    {
        auto dots = text.find("..");
        if (dots == std::string_view::npos) {
            auto v = parse_number(text, "range");
            return { v, v };
        }
        auto lo = parse_number(text.substr(0, dots), "range start");
        auto hi = parse_number(text.substr(dots + 2), "range end");
        if (lo > hi)
            throw UsageError("empty range '" + std::string(text) + "'");
        return { lo, hi };
    }

    struct GraphSource
    {
        std::string input;
        std::string format = "edgelist";
        std::string family;

        auto add_options(CLI::App & cmd) -> void
        {
            cmd.add_option("--input", input, "Graph file, or - for standard input");
            cmd.add_option("--format", format, "Input format")->check(CLI::IsMember({ "edgelist", "dimacs" }));
            cmd.add_option("--family", family, "Generated graph: gn:<n>, hn:<n>, gmn:<m>,<n>, twoclique:<n>");
        }

        auto load(std::istream & in) const -> Graph
        {
            if (! family.empty()) {
                if (! input.empty())
                    throw UsageError("--input and --family are mutually exclusive");
                return generate_family(family);
            }

            std::string text;
            if (input.empty() || input == "-")
                text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
            else {
                std::ifstream file(input, std::ios::binary);
                if (! file)
                    throw UsageError("cannot read '" + input + "'");
                text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
            }

            return format == "dimacs" ? parse_dimacs(text) : parse_edge_list(text);
        }
    };

    class Sink
    {
        private:
            std::unique_ptr<std::ofstream> _file;
            std::ostream * _stream;

        public:
            Sink(const std::string & path, std::ostream & fallback) :
                _stream(&fallback)
            {
                if (! path.empty() && path != "-") {
                    _file = std::make_unique<std::ofstream>(path, std::ios::binary);
                    if (! *_file)
                        throw UsageError("cannot write '" + path + "'");
                    _stream = _file.get();
                }
            }

            auto stream() -> std::ostream &
            {
                return *_stream;
            }
    };

    using Clock = std::chrono::steady_clock;

    auto elapsed_ms(Clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    auto stats_for(const CoverContext & ctx) -> RunStats
    {
        RunStats stats;
        stats.order = ctx.graph().size();
        stats.clique_count = ctx.clique_count();
        stats.shared_count = ctx.shared().size();
        stats.upper_bound = count_upper_bound(ctx);
        return stats;
    }

    // Deepest split needed to give each worker several subtrees.
    auto choose_split_depth(const CoverContext & ctx, unsigned threads) -> std::size_t
    {
        std::size_t depth = 1;
        while (depth < ctx.shared().size() && PartitionEnumerator::frontier(ctx, depth).size() < 8 * std::size_t{ threads })
            ++depth;
        return depth;
    }

    auto count(const CoverContext & ctx, bool parallel, unsigned threads) -> BigCount
    {
        if (! parallel)
            return count_partitions(ctx);
        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        return count_partitions_parallel(ctx, threads, choose_split_depth(ctx, threads));
    }

    auto csv_field(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string result = "\"";
        for (auto c : s) {
            if (c == '"')
                result += '"';
            result += c;
        }
        return result + '"';
    }
}

auto mcpart::to_json(const RunStats & stats) -> std::string
{
    std::ostringstream out;
    out << "{\"order\":" << stats.order
        << ",\"clique_count\":" << stats.clique_count
        << ",\"shared_count\":" << stats.shared_count
        << ",\"partition_count\":" << stats.partition_count
        << ",\"upper_bound\":" << stats.upper_bound
        << ",\"elapsed_ms\":" << stats.elapsed_ms << "}";
    return out.str();
}

auto mcpart::generate_family(std::string_view spec) -> Graph
{
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw UsageError("family spec '" + std::string(spec) + "' needs the form <family>:<parameters>");

    auto family = spec.substr(0, colon);
    auto params = spec.substr(colon + 1);

    try {
        if (family == "gn")
            return gen_gn(parse_number(params, "gn parameter"));
        else if (family == "hn")
            return gen_hn(parse_number(params, "hn parameter"));
        else if (family == "twoclique")
            return gen_two_clique(parse_number(params, "twoclique parameter"));
        else if (family == "gmn") {
            auto comma = params.find(',');
            if (comma == std::string_view::npos)
                throw UsageError("gmn needs two parameters, as in gmn:5,4");
            return gen_gmn(parse_number(params.substr(0, comma), "gmn parameter m"),
                    parse_number(params.substr(comma + 1), "gmn parameter n"));
        }
    }
    catch (const std::invalid_argument & e) {
        throw UsageError(e.what());
    }

    throw UsageError("unknown family '" + std::string(family) + "'");
}

auto mcpart::run_cli(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "Enumerate the maximal clique-partitions of an undirected graph" };
    app.require_subcommand(1);

    GraphSource enumerate_source, count_source;
    std::string output;
    std::size_t limit = 0;
    bool have_limit = false, stats = false, parallel = false;
    unsigned threads = 0;

    auto enumerate_cmd = app.add_subcommand("enumerate", "Stream every maximal clique-partition as JSON lines");
    enumerate_source.add_options(*enumerate_cmd);
    enumerate_cmd->add_option("--limit", limit, "Stop after this many partitions");
    enumerate_cmd->add_flag("--stats", stats, "Print run statistics to standard error");
    enumerate_cmd->add_option("--output", output, "Write partitions here instead of standard output");

    auto count_cmd = app.add_subcommand("count", "Count the maximal clique-partitions");
    count_source.add_options(*count_cmd);
    count_cmd->add_flag("--parallel", parallel, "Split the search tree over worker threads");
    count_cmd->add_option("--threads", threads, "Worker threads for --parallel (default: hardware concurrency)");
    count_cmd->add_flag("--stats", stats, "Accepted for symmetry; statistics are always printed");
    count_cmd->add_option("--output", output, "Write the count here instead of standard output");

    std::string family_spec, generate_format = "edgelist";
    auto generate_cmd = app.add_subcommand("generate", "Write a benchmark-family graph");
    generate_cmd->add_option("spec", family_spec, "gn:<n>, hn:<n>, gmn:<m>,<n> or twoclique:<n>")->required();
    generate_cmd->add_option("--format", generate_format, "Output format")->check(CLI::IsMember({ "edgelist", "dimacs" }));
    generate_cmd->add_option("--output", output, "Write the graph here instead of standard output");

    std::vector<std::string> bench_args;
    auto bench_cmd = app.add_subcommand("bench", "Count a range of family instances, one CSV row each");
    bench_cmd->add_option("args", bench_args, "gn <range> | hn <range> | twoclique <range> | gmn <m> <range>")->required();
    bench_cmd->add_flag("--parallel", parallel, "Count each instance in parallel");
    bench_cmd->add_option("--threads", threads, "Worker threads for --parallel");
    bench_cmd->add_option("--output", output, "Write the table here instead of standard output");

    try {
        app.parse(argc, argv);
        have_limit = enumerate_cmd->count("--limit") > 0;
    }
    catch (const CLI::ParseError & e) {
        auto status = app.exit(e, out, err);
        return status == 0 ? exit_status::success : exit_status::usage_error;
    }

    try {
        if (enumerate_cmd->parsed()) {
            auto start = Clock::now();
            auto ctx = build_cover_context(enumerate_source.load(in));
            Sink sink(output, out);
            auto run = stats_for(ctx);

            std::size_t emitted = 0;
            PartitionEnumerator e(ctx);
            while ((! have_limit || emitted < limit) && e.has_next()) {
                sink.stream() << to_json_line(ctx.graph(), *e.next()) << '\n';
                sink.stream().flush();
                ++emitted;
            }

            run.partition_count = emitted;
            run.elapsed_ms = elapsed_ms(start);
            if (stats)
                err << to_json(run) << '\n';
        }
        else if (count_cmd->parsed()) {
            auto start = Clock::now();
            auto ctx = build_cover_context(count_source.load(in));
            Sink sink(output, out);
            auto run = stats_for(ctx);
            run.partition_count = count(ctx, parallel, threads);
            run.elapsed_ms = elapsed_ms(start);
            if (run.partition_count > run.upper_bound)
                throw InvariantError("partition count exceeds the clique-degree bound");
            sink.stream() << run.partition_count << '\n';
            err << to_json(run) << '\n';
        }
        else if (generate_cmd->parsed()) {
            auto graph = generate_family(family_spec);
            Sink sink(output, out);
            sink.stream() << (generate_format == "dimacs" ? serialize_dimacs(graph) : serialize_edge_list(graph));
        }
        else if (bench_cmd->parsed()) {
            auto family = bench_args.at(0);
            std::vector<std::string> specs;
            if (family == "gmn") {
                if (bench_args.size() != 3)
                    throw UsageError("bench gmn needs <m> <range>");
                auto m = parse_number(bench_args[1], "gmn parameter m");
                auto [lo, hi] = parse_range(bench_args[2]);
                for (auto n = lo ; n <= hi ; ++n)
                    specs.push_back("gmn:" + std::to_string(m) + "," + std::to_string(n));
            }
            else if (family == "gn" || family == "hn" || family == "twoclique") {
                if (bench_args.size() != 2)
                    throw UsageError("bench " + family + " needs <range>");
                auto [lo, hi] = parse_range(bench_args[1]);
                for (auto n = lo ; n <= hi ; ++n)
                    specs.push_back(family + ":" + std::to_string(n));
            }
            else
                throw UsageError("unknown family '" + family + "'");

            // validate the whole range before producing any rows
            for (auto & spec : specs)
                generate_family(spec);

            Sink sink(output, out);
            sink.stream() << "graph,order,shared,partitions,elapsed_ms\n";
            for (auto & spec : specs) {
                auto start = Clock::now();
                auto ctx = build_cover_context(generate_family(spec));
                auto total = count(ctx, parallel, threads);
                sink.stream() << csv_field(spec) << ',' << ctx.graph().size() << ',' << ctx.shared().size()
                    << ',' << total << ',' << elapsed_ms(start) << '\n';
                sink.stream().flush();
            }
        }
    }
    catch (const InvariantError & e) {
        err << "internal error: " << e.what() << '\n';
        return exit_status::internal_error;
    }
    catch (const ParseError & e) {
        err << "parse error: " << e.what() << '\n';
        return exit_status::usage_error;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_status::usage_error;
    }

    return exit_status::success;
}
