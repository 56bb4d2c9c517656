#include "surplus/graph.hpp"

#include <mutex>

#include "surplus/errors.hpp"

namespace surplus {

struct Graph::ProfileCache {
  std::once_flag once;
  std::unique_ptr<CodegreeProfile> profile;
};

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Graph::Graph() : offsets_{0}, cache_(std::make_shared<ProfileCache>()) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), offsets_(n + 1, 0),
      cache_(std::make_shared<ProfileCache>()) {
  if (n > std::numeric_limits<Vertex>::max()) throw UsageError("too many vertices");
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw UsageError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    if (e.u == e.v) throw UsageError("self-loop at vertex " + std::to_string(e.u));
    bits_[e.u * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    bits_[e.v * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
  }
  std::size_t total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < words_; ++w) total += std::popcount(bits_[v * words_ + w]);
    offsets_[v + 1] = total;
  }
  adj_.resize(total);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t pos = offsets_[v];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[v * words_ + w];
      while (word) {
        adj_[pos++] = static_cast<Vertex>(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }
  m_ = total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

const CodegreeProfile& Graph::codegrees() const {
  std::call_once(cache_->once, [this] { cache_->profile = std::make_unique<CodegreeProfile>(*this); });
  return *cache_->profile;
}

std::string HalfInt::str() const {
  const std::int64_t whole = twice_ / 2;
  if (twice_ % 2 == 0) return std::to_string(whole);
  std::string s = twice_ < 0 ? "-" : "";
  const std::int64_t mag = twice_ < 0 ? -twice_ : twice_;
  return s + std::to_string(mag / 2) + ".5";
}

std::size_t count_crossing(const Graph& g, std::span<const std::uint8_t> side) {
  std::size_t c = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && side[u] != side[v]) ++c;
  return c;
}

Cut::Cut(const Graph& g, std::vector<std::uint8_t> side) : side_(std::move(side)), m_(g.num_edges()) {
  if (side_.size() != g.num_vertices()) throw UsageError("cut size does not match graph");
  for (auto& s : side_)
    if (s > 1) throw UsageError("cut sides must be 0 or 1");
  crossing_ = count_crossing(g, side_);
}

bool Cut::consistent_with(const Graph& g) const {
  return side_.size() == g.num_vertices() && m_ == g.num_edges() && count_crossing(g, side_) == crossing_ &&
         crossing_ <= m_;
}

std::string Cut::bitstring() const {
  std::string s(side_.size(), '0');
  for (std::size_t i = 0; i < side_.size(); ++i) s[i] = static_cast<char>('0' + side_[i]);
  return s;
}

CodegreeProfile::CodegreeProfile(const Graph& g) : n_(g.num_vertices()), m_(g.num_edges()) {
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex mid : g.neighbors(u))
      for (Vertex w : g.neighbors(mid))
        if (u < w) ++table_[key(u, w)];
  sorted_.reserve(table_.size());
  for (const auto& [k, c] : table_)
    sorted_.emplace_back(static_cast<Vertex>(k >> 32), static_cast<Vertex>(k & 0xffffffffU), c);
  std::sort(sorted_.begin(), sorted_.end());
}

std::size_t CodegreeProfile::codegree(Vertex u, Vertex v) const {
  auto it = table_.find(key(u, v));
  return it == table_.end() ? 0 : it->second;
}

double CodegreeProfile::delta(Vertex u, Vertex v) const {
  // d^2/n = 4m^2/n^3; keep the numerator exact.
  const __int128 n3 = static_cast<__int128>(n_) * n_ * n_;
  const __int128 num = static_cast<__int128>(codegree(u, v)) * n3 - static_cast<__int128>(4) * m_ * m_;
  return static_cast<double>(num) / static_cast<double>(n3);
}

}  // namespace surplus
