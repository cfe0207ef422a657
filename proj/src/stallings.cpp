#include "altquot/stallings.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "altquot/detail/union_find.hpp"

namespace altquot {

StallingsGraph::StallingsGraph(std::size_t rank, std::size_t vertex_count,
                               Vertex base)
    : vertex_count_(vertex_count),
      base_(base),
      succ_(rank, std::vector<Vertex>(vertex_count, kNoVertex)),
      pred_(rank, std::vector<Vertex>(vertex_count, kNoVertex)) {
  if (rank == 0) throw std::invalid_argument("rank must be positive");
  if (vertex_count > 0 && base >= vertex_count)
    throw std::out_of_range("base vertex out of range");
}

void StallingsGraph::set_base(Vertex v) {
  if (v >= vertex_count_) throw std::out_of_range("base vertex out of range");
  base_ = v;
}

Vertex StallingsGraph::add_vertex() { return add_vertices(1); }

Vertex StallingsGraph::add_vertices(std::size_t n) {
  const auto first = static_cast<Vertex>(vertex_count_);
  vertex_count_ += n;
  for (auto& s : succ_) s.resize(vertex_count_, kNoVertex);
  for (auto& p : pred_) p.resize(vertex_count_, kNoVertex);
  return first;
}

bool StallingsGraph::can_add_edge(Label label, Vertex from,
                                  Vertex to) const noexcept {
  if (label < 1 || label > rank()) return false;
  if (from >= vertex_count_ || to >= vertex_count_) return false;
  return succ_[label - 1][from] == kNoVertex &&
         pred_[label - 1][to] == kNoVertex;
}

void StallingsGraph::add_edge(Label label, Vertex from, Vertex to) {
  if (!can_add_edge(label, from, to)) {
    std::ostringstream msg;
    msg << "edge " << from << " -[" << label << "]-> " << to
        << " violates the immersion condition or is out of range";
    throw std::logic_error(msg.str());
  }
  succ_[label - 1][from] = to;
  pred_[label - 1][to] = from;
}

std::size_t StallingsGraph::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : succ_)
    n += static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](Vertex v) { return v != kNoVertex; }));
  return n;
}

std::vector<Edge> StallingsGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < succ_.size(); ++i)
    for (Vertex u = 0; u < vertex_count_; ++u)
      if (succ_[i][u] != kNoVertex)
        out.push_back({u, static_cast<Label>(i + 1), succ_[i][u]});
  return out;
}

LabelledMultigraph wedge_of_loops(std::size_t rank,
                                  std::span<const Word> generators) {
  LabelledMultigraph g;
  g.rank = rank;
  g.vertex_count = 1;
  g.base = 0;
  for (const Word& w : generators) {
    if (w.max_label() > rank)
      throw std::invalid_argument("generator word exceeds rank");
    Vertex cur = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      Vertex next = 0;
      if (k + 1 < w.size()) next = static_cast<Vertex>(g.vertex_count++);
      const Letter l = w[k];
      if (l.sign > 0)
        g.edges.push_back({cur, l.index, next});
      else
        g.edges.push_back({next, l.index, cur});
      cur = next;
    }
  }
  return g;
}

StallingsGraph single_vertex(std::size_t rank) {
  return StallingsGraph(rank, 1, 0);
}

namespace {

struct HalfEdge {
  Label label;
  int dir;  // +1 outgoing, -1 incoming
  Vertex other;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

}  // namespace

StallingsGraph fold(const LabelledMultigraph& g) {
  const std::size_t n = g.vertex_count;
  if (n == 0) return StallingsGraph(g.rank, 0, 0);
  detail::UnionFind uf(n);
  std::vector<std::vector<HalfEdge>> adj(n);
  for (const Edge& e : g.edges) {
    if (e.from >= n || e.to >= n || e.label < 1 || e.label > g.rank)
      throw std::invalid_argument("edge out of range in multigraph");
    adj[e.from].push_back({e.label, +1, e.to});
    adj[e.to].push_back({e.label, -1, e.from});
  }

  std::deque<Vertex> work;
  for (Vertex v = 0; v < n; ++v) work.push_back(v);

  auto merge = [&](Vertex x, Vertex y) {
    const auto rx = static_cast<Vertex>(uf.find(x));
    const auto ry = static_cast<Vertex>(uf.find(y));
    if (rx == ry) return;
    const auto root = static_cast<Vertex>(uf.unite(rx, ry));
    const Vertex gone = root == rx ? ry : rx;
    auto& keep = adj[root];
    auto& drop = adj[gone];
    if (keep.size() < drop.size()) keep.swap(drop);
    keep.insert(keep.end(), drop.begin(), drop.end());
    drop.clear();
    drop.shrink_to_fit();
    work.push_back(root);
  };

  std::vector<std::pair<Vertex, Vertex>> pending;
  while (!work.empty()) {
    const Vertex v = work.front();
    work.pop_front();
    if (uf.find(v) != v) continue;

    auto& list = adj[v];
    for (HalfEdge& h : list) h.other = static_cast<Vertex>(uf.find(h.other));
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());

    pending.clear();
    for (std::size_t k = 1; k < list.size(); ++k) {
      if (list[k].label == list[k - 1].label && list[k].dir == list[k - 1].dir)
        pending.emplace_back(list[k - 1].other, list[k].other);
    }
    for (const auto& [x, y] : pending) merge(x, y);
  }

  std::vector<Vertex> new_id(n, kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto r = uf.find(v);
    if (new_id[r] == kNoVertex) new_id[r] = next++;
  }
  StallingsGraph out(g.rank, next, new_id[uf.find(g.base)]);
  for (Vertex v = 0; v < n; ++v) {
    if (uf.find(v) != v) continue;
    for (const HalfEdge& h : adj[v]) {
      if (h.dir < 0) continue;
      const Vertex from = new_id[v];
      const Vertex to = new_id[uf.find(h.other)];
      if (out.target(h.label, from) == to) continue;
      out.add_edge(h.label, from, to);
    }
  }
  return out;
}

StallingsGraph core_graph(std::size_t rank, std::span<const Word> generators) {
  return canonical_form(fold(wedge_of_loops(rank, generators)));
}

TraceResult trace(const StallingsGraph& g, const Word& w, Vertex start) {
  TraceResult r{start, 0};
  for (const Letter& l : w) {
    if (l.index > g.rank()) break;
    const Vertex next = g.follow(l, r.endpoint);
    if (next == kNoVertex) break;
    r.endpoint = next;
    ++r.consumed;
  }
  return r;
}

TraceResult trace(const StallingsGraph& g, const Word& w) {
  return trace(g, w, g.base());
}

Vertex grow_along(StallingsGraph& g, const Word& w) {
  if (w.max_label() > g.rank())
    throw std::invalid_argument("word exceeds graph rank");
  Vertex cur = g.base();
  for (const Letter& l : w) {
    Vertex next = g.follow(l, cur);
    if (next == kNoVertex) {
      next = g.add_vertex();
      if (l.sign > 0)
        g.add_edge(l.index, cur, next);
      else
        g.add_edge(l.index, next, cur);
    }
    cur = next;
  }
  return cur;
}

GrownGraph trace_and_grow(StallingsGraph g, const Word& w) {
  const Vertex end = grow_along(g, w);
  return {std::move(g), end};
}

bool is_member(const StallingsGraph& core, const Word& w) {
  const TraceResult r = trace(core, w);
  return r.consumed == w.size() && r.endpoint == core.base();
}

bool is_member(std::size_t rank, std::span<const Word> generators,
               const Word& w) {
  return is_member(core_graph(rank, generators), w);
}

bool is_covering(const StallingsGraph& g) {
  if (g.vertex_count() == 0) return false;
  for (Label i = 1; i <= g.rank(); ++i)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.target(i, v) == kNoVertex) return false;
  return true;
}

bool is_immersion_complete_at(const StallingsGraph& g, Label label, Vertex v) {
  return g.target(label, v) != kNoVertex && g.source(label, v) != kNoVertex;
}

DeficiencyReport deficiencies(const StallingsGraph& g, Label label) {
  DeficiencyReport r;
  r.label = label;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.target(label, v) == kNoVertex) r.out_deficient.push_back(v);
    if (g.source(label, v) == kNoVertex) r.in_deficient.push_back(v);
  }
  return r;
}

std::vector<Vertex> canonical_numbering(const StallingsGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> id(n, kNoVertex);
  if (n == 0) return id;
  Vertex next = 0;
  std::deque<Vertex> queue{g.base()};
  id[g.base()] = next++;
  auto visit = [&](Vertex w) {
    if (w != kNoVertex && id[w] == kNoVertex) {
      id[w] = next++;
      queue.push_back(w);
    }
  };
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Label i = 1; i <= g.rank(); ++i) {
      visit(g.target(i, u));
      visit(g.source(i, u));
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (id[v] == kNoVertex) id[v] = next++;
  return id;
}

bool is_connected(const StallingsGraph& g) {
  if (g.vertex_count() == 0) return false;
  std::size_t reachable = 0;
  std::deque<Vertex> queue{g.base()};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[g.base()] = true;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    ++reachable;
    for (Label i = 1; i <= g.rank(); ++i) {
      for (Vertex w : {g.target(i, u), g.source(i, u)}) {
        if (w != kNoVertex && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return reachable == g.vertex_count();
}

StallingsGraph canonical_form(const StallingsGraph& g) {
  if (g.vertex_count() == 0) return g;
  const auto id = canonical_numbering(g);
  StallingsGraph out(g.rank(), g.vertex_count(), id[g.base()]);
  for (const Edge& e : g.edges()) out.add_edge(e.label, id[e.from], id[e.to]);
  return out;
}

bool has_finite_index(std::size_t rank, std::span<const Word> generators) {
  return is_covering(core_graph(rank, generators));
}

std::string to_dot(const StallingsGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [shape="
        << (v == g.base() ? "doublecircle" : "circle") << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.from << " -> " << e.to << " [label=\"";
    if (e.label <= 26)
      out << letter_char({e.label, 1});
    else
      out << 'x' << e.label;
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace altquot
