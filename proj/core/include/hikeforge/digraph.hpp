#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hikeforge {

/// A directed edge. Arcs double as the formal variables w_{tail,head}.
struct Arc {
  int tail = 0;
  int head = 0;
  auto operator<=>(const Arc&) const = default;
};

/// Immutable digraph on dense 0-based vertices. Loops allowed, parallel arcs
/// rejected. All operations over it are pure.
class Digraph {
 public:
  Digraph() = default;
  /// Validates endpoints and uniqueness; throws std::invalid_argument.
  Digraph(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(int tail, int head) const;
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

  bool has_self_loop() const;
  /// Every arc present together with its reverse.
  bool is_bidirected() const;
  /// Weak connectivity (the underlying undirected graph is connected).
  bool weakly_connected() const;

  bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;  // sorted, unique
  std::vector<std::vector<int>> out_, in_;
  std::vector<char> adj_;  // n*n indicator
};

/// Simple undirected graph (no loops, no parallel edges); used for
/// independence/dependence graphs, line graphs and reconstruction roots.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), adj_(std::size_t(n) * n, 0) {}
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int a, int b) const { return a != b && adj_[std::size_t(a) * n_ + b] != 0; }
  void add_edge(int a, int b);
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  bool connected() const;
  bool is_complete() const;
  SimpleGraph complement() const;
  SimpleGraph induced(const std::vector<int>& vertices) const;

  /// Replace each edge by the two opposite arcs.
  Digraph bidirected() const;

  bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // sorted, a < b
  std::vector<char> adj_;
};

/// Underlying simple graph of a loop-free bidirected digraph.
SimpleGraph underlying_graph(const Digraph& g);

// Graph JSON format: {"n": int, "arcs": [[tail,head],...]} or
// {"n": int, "undirected": true, "edges": [[i,j],...]}.
// Parse errors carry the offending position, e.g. "arcs[3]: ...".
Digraph load_digraph(std::istream& in);
Digraph load_digraph_file(const std::string& path);
Digraph digraph_from_json_text(const std::string& text);
std::string digraph_to_json(const Digraph& g);

SimpleGraph load_simple_graph(std::istream& in);
SimpleGraph load_simple_graph_file(const std::string& path);
SimpleGraph simple_graph_from_json_text(const std::string& text);
std::string simple_graph_to_json(const SimpleGraph& g);

}  // namespace hikeforge
