// io.hpp - textual graph / coloring formats, instance metadata and the
// key=value sweep configuration file.
//
// Graph files are DIMACS-flavored and 1-indexed:
//   c optional comments
//   p pcg <n> <m>
//   e <u> <v>          (m lines)
// Coloring files are one "<vertex> <color>" line per vertex, 1-indexed,
// in any order, all vertices present.

#ifndef PCG_IO_HPP
#define PCG_IO_HPP

#include <chrono>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "pcg/families.hpp"
#include "pcg/graph.hpp"
#include "pcg/solver.hpp"

namespace pcg {

// Malformed input files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);
Graph read_graph_file(const std::string& path);

void write_coloring(std::ostream& os, const PackingColoring& c);
PackingColoring read_coloring(std::istream& is, int n);
PackingColoring read_coloring_file(const std::string& path, int n);

// JSON sidecar for generated instances: family, params, order, size,
// spine (1-indexed) and c_T when a spine is designated.
std::string instance_metadata_json(const FamilyInstance& inst);

// key=value lines; '#' starts a comment. Unknown keys are kept (callers
// validate).
std::map<std::string, std::string> read_config(std::istream& is);
std::map<std::string, std::string> read_config_file(const std::string& path);

// "750" (nodes) for node limits; "10s" / "5m" / "2h" / "1500ms" for time
// limits via parse_duration.
std::chrono::milliseconds parse_duration(const std::string& text);

}  // namespace pcg

#endif  // PCG_IO_HPP
