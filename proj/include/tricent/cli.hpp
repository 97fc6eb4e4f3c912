#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tricent/centrality.hpp"
#include "tricent/graph.hpp"

namespace tricent {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitIo = 2,
    kExitInternal = 3,
};

// args[0] is the program name. `in` backs the "-" input path.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Shortest decimal that reads back to the same double; integral values keep a
// trailing ".0".
std::string format_score(double x);

// Dispatches to one of main, basic, algebraic, parallel, mapreduce.
CentralityVector compute_by_name(const Graph& g, const std::string& algo, unsigned threads);

}  // namespace tricent
