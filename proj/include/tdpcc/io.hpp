#pragma once

#include <iosfwd>
#include <string>

#include "tdpcc/forest.hpp"
#include "tdpcc/graph.hpp"

namespace tdpcc {

// Graph file: '#' starts a comment, tokens are whitespace-separated.
//   p <n> <m>
//   e <u> <v> [<weight>]    (m times, 1-indexed endpoints)
// Forest file:
//   t <n>
//   <parent-of-1> ... <parent-of-n>   (0 = root, one value per line by convention)
// Parse failures throw std::runtime_error with a line-referenced message.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

EliminationForest read_forest(std::istream& in);
EliminationForest read_forest_file(const std::string& path);
void write_forest(std::ostream& out, const EliminationForest& f);

}  // namespace tdpcc
