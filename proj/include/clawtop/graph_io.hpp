#ifndef CLAWTOP_GRAPH_IO_HPP
#define CLAWTOP_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "clawtop/graph.hpp"

namespace clawtop {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n.  graph6 strings (with or without the ">>graph6<<"
// header) are accepted on input as well.

Graph read_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

/// Sniffs the format: a leading digit means edge list, otherwise graph6.
Graph read_graph_auto(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path, bool graph6);

}  // namespace clawtop

#endif
