#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altquot/words.hpp"

namespace altquot {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex from = 0;
  Label label = 1;
  Vertex to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A based, labelled, oriented graph over the rose with `rank` petals. Each
// label is stored as a partial injection on vertices (forward and backward
// tables), so the immersion condition holds by construction: add_edge
// refuses any edge that would give a vertex a second incoming or outgoing
// edge of the same label.
class StallingsGraph {
 public:
  explicit StallingsGraph(std::size_t rank, std::size_t vertex_count = 0,
                          Vertex base = 0);

  std::size_t rank() const noexcept { return succ_.size(); }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  Vertex base() const noexcept { return base_; }
  void set_base(Vertex v);

  Vertex add_vertex();
  // Appends `n` isolated vertices and returns the id of the first one.
  Vertex add_vertices(std::size_t n);

  // Throws std::logic_error if the edge would break the immersion condition
  // or names a vertex/label out of range.
  void add_edge(Label label, Vertex from, Vertex to);
  bool can_add_edge(Label label, Vertex from, Vertex to) const noexcept;

  // kNoVertex when there is no such edge.
  Vertex target(Label label, Vertex from) const {
    return succ_[label - 1][from];
  }
  Vertex source(Label label, Vertex to) const { return pred_[label - 1][to]; }
  Vertex follow(Letter l, Vertex v) const {
    return l.sign > 0 ? target(l.index, v) : source(l.index, v);
  }

  std::size_t edge_count() const noexcept;
  // Sorted by (label, from).
  std::vector<Edge> edges() const;

  friend bool operator==(const StallingsGraph&, const StallingsGraph&) =
      default;

 private:
  std::size_t vertex_count_ = 0;
  Vertex base_ = 0;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
};

// Pre-fold graph: an edge multiset with no immersion requirement.
struct LabelledMultigraph {
  std::size_t rank = 1;
  std::size_t vertex_count = 1;
  Vertex base = 0;
  std::vector<Edge> edges;
};

// Wedge at a single base vertex of one loop per generator word.
LabelledMultigraph wedge_of_loops(std::size_t rank,
                                  std::span<const Word> generators);

StallingsGraph single_vertex(std::size_t rank);

// Identifies same-label edges sharing an endpoint until none remain.
// Vertices of the result are numbered by first appearance of their class
// among the input ids; the base follows its class.
StallingsGraph fold(const LabelledMultigraph& g);

// Folded graph of the subgroup generated by `generators`, in canonical
// numbering (base = 0).
StallingsGraph core_graph(std::size_t rank, std::span<const Word> generators);

struct TraceResult {
  Vertex endpoint = kNoVertex;
  std::size_t consumed = 0;  // letters followed along existing edges
};

// Follows w from `start` along existing edges only; stops at the first
// missing edge.
TraceResult trace(const StallingsGraph& g, const Word& w, Vertex start);
TraceResult trace(const StallingsGraph& g, const Word& w);

// Follows w from the base, creating a fresh vertex and edge whenever the
// needed edge is missing. Returns the endpoint. Existing structure is never
// modified.
Vertex grow_along(StallingsGraph& g, const Word& w);

struct GrownGraph {
  StallingsGraph graph;
  Vertex endpoint;
};
GrownGraph trace_and_grow(StallingsGraph g, const Word& w);

bool is_member(const StallingsGraph& core, const Word& w);
bool is_member(std::size_t rank, std::span<const Word> generators,
               const Word& w);

struct DeficiencyReport {
  Label label = 1;
  std::vector<Vertex> out_deficient;  // no outgoing edge with this label
  std::vector<Vertex> in_deficient;   // no incoming edge with this label
};

bool is_covering(const StallingsGraph& g);
bool is_immersion_complete_at(const StallingsGraph& g, Label label, Vertex v);
DeficiencyReport deficiencies(const StallingsGraph& g, Label label);
bool is_connected(const StallingsGraph& g);

bool has_finite_index(std::size_t rank, std::span<const Word> generators);

// Relabels vertices in breadth-first discovery order from the base, labels
// ascending, forward edge before backward edge. Vertices unreachable from the
// base keep their relative order after the reachable ones. Two based graphs
// are isomorphic iff their canonical forms compare equal.
StallingsGraph canonical_form(const StallingsGraph& g);
std::vector<Vertex> canonical_numbering(const StallingsGraph& g);

// Graphviz digraph; base drawn as a double circle, edges labelled by letter.
std::string to_dot(const StallingsGraph& g, const std::string& name = "G");

}  // namespace altquot
