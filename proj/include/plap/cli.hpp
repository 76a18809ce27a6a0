#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plap/geometry.hpp"
#include "plap/nonlinearity.hpp"
#include "plap/pointwise.hpp"

// Command-line surface. Exit codes: 0 success, 2 validation error,
// 3 numerical non-convergence.

namespace plap::cli {

// Grammars: "exp" | "gelfand:m=<real>" | "mems:m=<real>".
Nonlinearity parse_nonlinearity(const std::string& spec);

// "ball:R=<real>" | "measured:diam=<r>,cheb=<r>,vol=<r>,per=<r>".
DomainGeometry parse_geometry(const std::string& spec, int dim);

// "const:c=<real>" | "power:alpha=<real>".
WeightSpec parse_weight(const std::string& spec, const DomainGeometry& dom);

// "2" | "1,2,3" | "1..15" (integer span).
std::vector<double> parse_range(const std::string& spec);

// Prefix a relative output path with $PLAP_OUTPUT_DIR when set.
std::string resolve_output_path(const std::string& path);

// Full CLI entry point (used by the plap binary and by the tests).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace plap::cli
