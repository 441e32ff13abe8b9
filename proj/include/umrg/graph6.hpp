#ifndef UMRG_GRAPH6_HPP
#define UMRG_GRAPH6_HPP

// graph6 encoding: one byte n+63, then the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into
// 6-bit groups, each group written as byte value + 63, zero padded.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "umrg/graph.hpp"

namespace umrg {

class Graph6Error : public GraphError {
 public:
  using GraphError::GraphError;
};

std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Graph from_graph6(std::string_view text);

/// Newline-delimited graph6; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace umrg

#endif
