#include "d2k/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include <absl/container/flat_hash_map.h>

namespace d2k {

namespace {

bool erase_value(std::vector<NodeId>& list, NodeId value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end()) return false;
  list.erase(it);
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// DirectedGraph

DirectedGraph::DirectedGraph(NodeId n) : out_(n), in_(n) {}

DirectedGraph DirectedGraph::from_edges(NodeId n, std::span<const Edge> edges) {
  DirectedGraph g(n);
  g.edge_set_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (!g.add_edge(u, v)) {
      throw InvalidArgument("edge " + std::to_string(u) + "->" + std::to_string(v) +
                            " is a self-loop or a duplicate");
    }
  }
  return g;
}

void DirectedGraph::reserve(NodeId v, Degree in, Degree out) {
  check_node(v);
  in_[v].reserve(in);
  out_[v].reserve(out);
}

void DirectedGraph::reserve_edges(Count edges) { edge_set_.reserve(edges); }

void DirectedGraph::check_node(NodeId v) const {
  if (v >= num_nodes()) {
    throw InvalidArgument("node " + std::to_string(v) + " out of range (n=" +
                          std::to_string(num_nodes()) + ")");
  }
}

bool DirectedGraph::add_edge(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v) return false;
  if (!edge_set_.insert(pack(u, v)).second) return false;
  out_[u].push_back(v);
  in_[v].push_back(u);
  return true;
}

bool DirectedGraph::remove_edge(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (edge_set_.erase(pack(u, v)) == 0) return false;
  erase_value(out_[u], v);
  erase_value(in_[v], u);
  return true;
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  return a.num_nodes() == b.num_nodes() && a.edge_set_ == b.edge_set_;
}

DyadState dyad_state(const DirectedGraph& g, NodeId u, NodeId v) {
  if (u == v) throw InvalidArgument("dyad_state requires two distinct nodes");
  const bool forward = g.has_edge(u, v);
  const bool backward = g.has_edge(v, u);
  if (forward && backward) return DyadState::Mutual;
  if (forward || backward) return DyadState::Asymmetric;
  return DyadState::Null;
}

// ---------------------------------------------------------------------------
// Ingestion

IngestResult from_edge_list(std::span<const RawEdge> pairs,
                            std::optional<std::uint64_t> declared_nodes) {
  IngestResult result;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first < 0 || pairs[i].second < 0) {
      throw ParseError(i + 1, "node ids must be non-negative");
    }
  }

  const bool keep_ids =
      declared_nodes && *declared_nodes <= 0xffffffffu &&
      std::all_of(pairs.begin(), pairs.end(), [&](const RawEdge& e) {
        return static_cast<std::uint64_t>(e.first) < *declared_nodes &&
               static_cast<std::uint64_t>(e.second) < *declared_nodes;
      });

  std::vector<Edge> kept;
  kept.reserve(pairs.size());
  if (keep_ids) {
    result.original_ids.resize(*declared_nodes);
    std::iota(result.original_ids.begin(), result.original_ids.end(), std::uint64_t{0});
    for (const auto& [src, dst] : pairs) {
      kept.emplace_back(static_cast<NodeId>(src), static_cast<NodeId>(dst));
    }
  } else {
    absl::flat_hash_map<std::uint64_t, NodeId> dense;
    auto map_id = [&](std::int64_t raw) {
      auto [it, inserted] = dense.try_emplace(static_cast<std::uint64_t>(raw),
                                              static_cast<NodeId>(result.original_ids.size()));
      if (inserted) result.original_ids.push_back(static_cast<std::uint64_t>(raw));
      return it->second;
    };
    for (const auto& [src, dst] : pairs) {
      const NodeId u = map_id(src);
      kept.emplace_back(u, map_id(dst));
    }
  }

  result.graph = DirectedGraph(static_cast<NodeId>(result.original_ids.size()));
  for (const auto& [u, v] : kept) {
    if (u == v) {
      ++result.self_loops_removed;
    } else if (!result.graph.add_edge(u, v)) {
      ++result.duplicates_removed;
    }
  }
  return result;
}

namespace {

std::optional<std::uint64_t> node_count_comment(std::string_view line) {
  const auto at = line.find("Nodes:");
  if (at == std::string_view::npos) return std::nullopt;
  const char* p = line.data() + at + 6;
  const char* end = line.data() + line.size();
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  std::uint64_t n = 0;
  auto [next, ec] = std::from_chars(p, end, n);
  if (ec != std::errc{} || next == p) return std::nullopt;
  return n;
}

}  // namespace

EdgeListText parse_edge_list(std::istream& in) {
  EdgeListText text;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip_ws = [&] {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    };
    skip_ws();
    if (p == end) continue;
    if (*p == '#') {
      if (text.pairs.empty() && !text.declared_nodes) text.declared_nodes = node_count_comment(line);
      continue;
    }

    std::int64_t ids[2];
    for (auto& id : ids) {
      skip_ws();
      if (p == end) throw ParseError(line_no, "expected two node ids");
      auto [next, ec] = std::from_chars(p, end, id);
      if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
        throw ParseError(line_no, "malformed node id in '" + line + "'");
      }
      if (id < 0) throw ParseError(line_no, "node ids must be non-negative");
      p = next;
    }
    skip_ws();
    if (p != end) throw ParseError(line_no, "unexpected trailing data in '" + line + "'");
    text.pairs.emplace_back(ids[0], ids[1]);
  }
  return text;
}

std::vector<RawEdge> read_edge_list(std::istream& in) { return parse_edge_list(in).pairs; }

IngestResult load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  const auto text = parse_edge_list(in);
  return from_edge_list(text.pairs, text.declared_nodes);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g,
                     std::span<const std::uint64_t> labels) {
  if (!labels.empty() && labels.size() != g.num_nodes()) {
    throw InvalidArgument("label count does not match node count");
  }
  out << "# Nodes: " << g.num_nodes() << " Edges: " << g.num_edges() << '\n';
  out << "# FromNodeId\tToNodeId\n";
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    auto targets = std::vector<NodeId>(g.out_neighbors(u).begin(), g.out_neighbors(u).end());
    std::sort(targets.begin(), targets.end());
    for (NodeId v : targets) {
      if (labels.empty()) {
        out << u << '\t' << v << '\n';
      } else {
        out << labels[u] << '\t' << labels[v] << '\n';
      }
    }
  }
}

void save_edge_list(const std::filesystem::path& path, const DirectedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) throw Error("write failed for " + path.string());
}

// ---------------------------------------------------------------------------
// BipartiteGraph

BipartiteGraph::BipartiteGraph(NodeId original_nodes, std::vector<bool> non_chord)
    : n_(original_nodes), non_chord_(std::move(non_chord)), adj_(2 * static_cast<std::size_t>(n_)) {
  if (non_chord_.size() != n_) throw InvalidArgument("non-chord mask has wrong length");
}

std::uint64_t BipartiteGraph::key(NodeId a, NodeId b) const {
  if (a >= num_nodes() || b >= num_nodes()) throw InvalidArgument("bipartite node out of range");
  if (side(a) == side(b)) throw InvalidArgument("bipartite edge must join opposite sides");
  return side(a) == Side::Out ? pack(a, b) : pack(b, a);
}

bool BipartiteGraph::is_non_chord(NodeId a, NodeId b) const {
  return side(a) != side(b) && original(a) == original(b) && non_chord_[original(a)];
}

Count BipartiteGraph::num_non_chords() const noexcept {
  return static_cast<Count>(std::count(non_chord_.begin(), non_chord_.end(), true));
}

bool BipartiteGraph::has_edge(NodeId a, NodeId b) const { return edge_set_.contains(key(a, b)); }

void BipartiteGraph::add_edge(NodeId a, NodeId b, bool allow_non_chord) {
  const auto k = key(a, b);
  if (!allow_non_chord && is_non_chord(a, b)) {
    throw InvalidArgument("edge on non-chord of node " + std::to_string(original(a)));
  }
  if (!edge_set_.insert(k).second) throw InvalidArgument("parallel bipartite edge");
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

bool BipartiteGraph::remove_edge(NodeId a, NodeId b) {
  if (edge_set_.erase(key(a, b)) == 0) return false;
  erase_value(adj_[a], b);
  erase_value(adj_[b], a);
  return true;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges());
  for (NodeId a = 0; a < n_; ++a) {
    for (NodeId b : adj_[a]) result.emplace_back(a, b);
  }
  return result;
}

bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
  return a.n_ == b.n_ && a.non_chord_ == b.non_chord_ && a.edge_set_ == b.edge_set_;
}

BipartiteGraph to_bipartite(const DirectedGraph& g) {
  const NodeId n = g.num_nodes();
  std::vector<bool> non_chord(n);
  for (NodeId v = 0; v < n; ++v) non_chord[v] = g.in_degree(v) > 0 && g.out_degree(v) > 0;
  BipartiteGraph b(n, std::move(non_chord));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.out_neighbors(u)) b.add_edge(b.out_node(u), b.in_node(v));
  }
  return b;
}

DirectedGraph collapse_bipartite(const BipartiteGraph& b) {
  DirectedGraph g(b.original_nodes());
  g.reserve_edges(b.num_edges());
  for (NodeId v = 0; v < b.original_nodes(); ++v) {
    g.reserve(v, b.degree(b.in_node(v)), b.degree(b.out_node(v)));
  }
  for (NodeId u = 0; u < b.original_nodes(); ++u) {
    for (NodeId w : b.neighbors(b.out_node(u))) {
      const NodeId v = b.original(w);
      if (v == u) {
        throw InvalidArgument("bipartite edge joins both images of node " + std::to_string(u));
      }
      g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace d2k
