#pragma once

#include <mcpart/count.hh>
#include <mcpart/graph.hh>

#include <iosfwd>
#include <string>
#include <string_view>

namespace mcpart
{
    struct RunStats
    {
        std::size_t order = 0;
        std::size_t clique_count = 0;
        std::size_t shared_count = 0;
        BigCount partition_count = 0;
        BigCount upper_bound = 0;
        double elapsed_ms = 0.0;
    };

    /// One-line JSON object; counts are written as exact integers.
    auto to_json(const RunStats & stats) -> std::string;

    /// Builds a graph from "gn:<n>", "hn:<n>", "gmn:<m>,<n>" or "twoclique:<n>".
    auto generate_family(std::string_view spec) -> Graph;

    namespace exit_status
    {
        inline constexpr int success = 0;
        inline constexpr int usage_error = 1;
        inline constexpr int internal_error = 2;
    }

    /**
     * Runs the command line with subcommands enumerate, count, generate and
     * bench. Graph input without --input or --family is read from in.
     */
    auto run_cli(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}
