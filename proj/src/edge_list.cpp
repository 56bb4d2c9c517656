#include "surplus/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "surplus/errors.hpp"

namespace surplus {

namespace {

bool parse_index(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

EdgeListFile read_edge_list(std::istream& in) {
  struct Raw {
    std::string a, b;
    std::size_t line;
  };
  std::vector<Raw> raw;
  std::optional<std::uint64_t> declared;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream c(line.substr(hash + 1));
      std::string key, value, extra;
      if (c >> key && key == "vertices") {
        std::uint64_t n = 0;
        if (!(c >> value) || !parse_index(value, n) || (c >> extra))
          throw ParseError(lineno, "malformed '# vertices N' directive");
        declared = n;
      }
      line.resize(hash);
    }
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw ParseError(lineno, "expected two vertex labels");
    if (ls >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
    if (a == b) throw ParseError(lineno, "self-loop at vertex " + a);
    raw.push_back({a, b, lineno});
  }

  bool numeric = true;
  std::uint64_t tmp;
  for (const auto& r : raw) numeric = numeric && parse_index(r.a, tmp) && parse_index(r.b, tmp);

  EdgeListFile out;
  std::map<std::string, Vertex> string_index;
  std::map<std::uint64_t, Vertex> numeric_index;
  if (numeric) {
    bool fits = declared.has_value();
    for (const auto& r : raw) {
      std::uint64_t x, y;
      parse_index(r.a, x);
      parse_index(r.b, y);
      numeric_index.emplace(x, 0);
      numeric_index.emplace(y, 0);
      if (declared && (x >= *declared || y >= *declared))
        throw ParseError(r.line, "vertex label exceeds declared vertex count");
    }
    if (fits)
      for (std::uint64_t i = 0; i < *declared; ++i) numeric_index.emplace(i, 0);
    Vertex next = 0;
    for (auto& [label, idx] : numeric_index) {
      idx = next++;
      out.labels.push_back(std::to_string(label));
    }
  } else {
    if (declared) throw ParseError(0, "'# vertices N' requires integer labels");
    for (const auto& r : raw) {
      string_index.emplace(r.a, 0);
      string_index.emplace(r.b, 0);
    }
    Vertex next = 0;
    for (auto& [label, idx] : string_index) {
      idx = next++;
      out.labels.push_back(label);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) {
    if (numeric) {
      std::uint64_t x, y;
      parse_index(r.a, x);
      parse_index(r.b, y);
      edges.push_back({numeric_index.at(x), numeric_index.at(y)});
    } else {
      edges.push_back({string_index.at(r.a), string_index.at(r.b)});
    }
  }
  out.graph = Graph(out.labels.size(), edges);
  return out;
}

EdgeListFile read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

EdgeListFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header) {
  for (const auto& h : header) out << "# " << h << '\n';
  out << "# vertices " << g.num_vertices() << '\n';
  for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace surplus
