#include "hikeforge/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hikeforge {

using nlohmann::json;

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_) {
      std::ostringstream os;
      os << "arcs[" << i << "]: endpoint (" << a.tail << "," << a.head << ") out of range [0,"
         << n_ << ")";
      throw std::invalid_argument(os.str());
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    if (arcs_[i] == arcs_[i - 1]) {
      std::ostringstream os;
      os << "duplicate arc (" << arcs_[i].tail << "," << arcs_[i].head << ")";
      throw std::invalid_argument(os.str());
    }
  }
  out_.resize(n_);
  in_.resize(n_);
  adj_.assign(std::size_t(n_) * n_, 0);
  for (const Arc& a : arcs_) {
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
    adj_[std::size_t(a.tail) * n_ + a.head] = 1;
  }
}

bool Digraph::has_arc(int tail, int head) const {
  return tail >= 0 && tail < n_ && head >= 0 && head < n_ &&
         adj_[std::size_t(tail) * n_ + head] != 0;
}

bool Digraph::has_self_loop() const {
  for (const Arc& a : arcs_)
    if (a.tail == a.head) return true;
  return false;
}

bool Digraph::is_bidirected() const {
  for (const Arc& a : arcs_)
    if (a.tail != a.head && !has_arc(a.head, a.tail)) return false;
  return true;
}

bool Digraph::weakly_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto visit = [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    };
    for (int w : out_[v]) visit(w);
    for (int w : in_[v]) visit(w);
  }
  return count == n_;
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(n) {
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("simple graph: self-loop rejected");
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
      throw std::invalid_argument("simple graph: endpoint out of range");
    if (a > b) std::swap(a, b);
    if (adj_[std::size_t(a) * n_ + b]) throw std::invalid_argument("simple graph: duplicate edge");
    adj_[std::size_t(a) * n_ + b] = adj_[std::size_t(b) * n_ + a] = 1;
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
}

void SimpleGraph::add_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("simple graph: self-loop rejected");
  if (a < 0 || b < 0 || a >= n_ || b >= n_)
    throw std::invalid_argument("simple graph: endpoint out of range");
  if (a > b) std::swap(a, b);
  if (has_edge(a, b)) throw std::invalid_argument("simple graph: duplicate edge");
  adj_[std::size_t(a) * n_ + b] = adj_[std::size_t(b) * n_ + a] = 1;
  const std::pair<int, int> e{a, b};
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w)
    if (has_edge(v, w)) out.push_back(w);
  return out;
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < n_; ++w) d += has_edge(v, w);
  return d;
}

bool SimpleGraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n_; ++w)
      if (has_edge(v, w) && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

bool SimpleGraph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph c(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!has_edge(a, b)) c.add_edge(a, b);
  return c;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  SimpleGraph s(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) s.add_edge(int(i), int(j));
  return s;
}

Digraph SimpleGraph::bidirected() const {
  std::vector<Arc> arcs;
  arcs.reserve(edges_.size() * 2);
  for (auto [a, b] : edges_) {
    arcs.push_back({a, b});
    arcs.push_back({b, a});
  }
  return Digraph(n_, std::move(arcs));
}

SimpleGraph underlying_graph(const Digraph& g) {
  if (!g.is_bidirected() || g.has_self_loop())
    throw std::invalid_argument("underlying_graph: digraph must be bidirected and loop-free");
  SimpleGraph s(g.vertex_count());
  for (const Arc& a : g.arcs())
    if (a.tail < a.head) s.add_edge(a.tail, a.head);
  return s;
}

namespace {

json parse_document(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

int read_n(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw std::invalid_argument("document must be an object with integer field \"n\"");
  return doc["n"].get<int>();
}

std::vector<std::pair<int, int>> read_pairs(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_array())
    throw std::invalid_argument(std::string("missing array field \"") + field + "\"");
  std::vector<std::pair<int, int>> out;
  const json& arr = doc[field];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      std::ostringstream os;
      os << field << "[" << i << "]: expected a pair of integers";
      throw std::invalid_argument(os.str());
    }
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

Digraph digraph_from_doc(const json& doc) {
  const int n = read_n(doc);
  const bool undirected = doc.value("undirected", false);
  std::vector<Arc> arcs;
  if (undirected) {
    auto edges = read_pairs(doc, "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      arcs.push_back({a, b});
      if (a != b) arcs.push_back({b, a});
    }
  } else {
    for (auto [t, h] : read_pairs(doc, "arcs")) arcs.push_back({t, h});
  }
  return Digraph(n, std::move(arcs));
}

SimpleGraph simple_graph_from_doc(const json& doc) {
  const int n = read_n(doc);
  if (doc.contains("edges")) return SimpleGraph(n, read_pairs(doc, "edges"));
  // Accept the arc form when it encodes a bidirected loop-free digraph.
  return underlying_graph(digraph_from_doc(doc));
}

}  // namespace

Digraph load_digraph(std::istream& in) { return digraph_from_doc(parse_document(in)); }

Digraph load_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return load_digraph(in);
}

Digraph digraph_from_json_text(const std::string& text) {
  std::istringstream in(text);
  return load_digraph(in);
}

std::string digraph_to_json(const Digraph& g) {
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
  json doc;
  doc["n"] = g.vertex_count();
  doc["arcs"] = arcs;
  return doc.dump();
}

SimpleGraph load_simple_graph(std::istream& in) {
  return simple_graph_from_doc(parse_document(in));
}

SimpleGraph load_simple_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return load_simple_graph(in);
}

SimpleGraph simple_graph_from_json_text(const std::string& text) {
  std::istringstream in(text);
  return load_simple_graph(in);
}

std::string simple_graph_to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  json doc;
  doc["n"] = g.vertex_count();
  doc["undirected"] = true;
  doc["edges"] = edges;
  return doc.dump();
}

}  // namespace hikeforge
