#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "surplus/graph.hpp"

namespace surplus {

// Edge-list text: one "u v" pair per line, '#' starts a comment, duplicate
// and reversed pairs collapse, self-loops are a ParseError naming the line.
// A "# vertices N" line declares N vertices labelled 0..N-1 so isolated
// vertices survive a round trip.  Labels map to indices in sorted order:
// numeric order when every label is a non-negative integer, otherwise
// lexicographic.
struct EdgeListFile {
  Graph graph;
  std::vector<std::string> labels;  // labels[i] names vertex i
};

EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list(std::string_view text);
EdgeListFile read_edge_list_file(const std::string& path);

// Writes "# vertices N" then one "u v" line per edge (u < v).  Each header
// line is emitted as a comment.
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header = {});

}  // namespace surplus
