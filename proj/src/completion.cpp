#include "altquot/completion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "altquot/errors.hpp"

namespace altquot {

SignVector::SignVector(std::vector<int> values) : values_(std::move(values)) {
  for (int s : values_)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
}

SignVector SignVector::all_positive(std::size_t rank) {
  return SignVector(std::vector<int>(rank, 1));
}

void SignVector::set(Label i, int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  values_.at(i - 1) = s;
}

SignVector SignVector::flipped(Label i) const {
  SignVector out = *this;
  out.values_.at(i - 1) *= -1;
  return out;
}

namespace {

void join_deficient(StallingsGraph& g, Label label, bool keep_last) {
  const DeficiencyReport r = deficiencies(g, label);
  std::size_t count = r.out_deficient.size();
  if (keep_last && count > 0) --count;
  for (std::size_t k = 0; k < count; ++k)
    g.add_edge(label, r.out_deficient[k], r.in_deficient[k]);
}

std::optional<Label> smallest_deficient_label(const StallingsGraph& g) {
  for (Label i = 1; i <= g.rank(); ++i)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.target(i, v) == kNoVertex) return i;
  return std::nullopt;
}

}  // namespace

StallingsGraph hall_complete(StallingsGraph z) {
  if (z.vertex_count() == 0)
    throw std::invalid_argument("cannot complete an empty graph");
  for (Label i = 1; i <= z.rank(); ++i) join_deficient(z, i, false);
  return z;
}

PartialCompletion partial_complete(StallingsGraph z) {
  if (z.vertex_count() == 0)
    throw std::invalid_argument("cannot complete an empty graph");
  const auto label = smallest_deficient_label(z);
  if (!label)
    throw Error(Errc::already_covering,
                "graph already satisfies the covering condition");
  for (Label i = 1; i <= z.rank(); ++i) join_deficient(z, i, i == *label);
  const DeficiencyReport left = deficiencies(z, *label);
  return {std::move(z), *label, left.out_deficient.at(0),
          left.in_deficient.at(0)};
}

StallingsGraph build_W(std::size_t n, std::size_t rank, Label label) {
  if (n == 0) throw std::invalid_argument("W gadget needs at least one vertex");
  if (label < 1 || label > rank) throw std::invalid_argument("label out of range");
  StallingsGraph w(rank, n, 0);
  for (Vertex j = 0; j + 1 < n; ++j) w.add_edge(label, j, j + 1);
  for (Label i = 1; i <= rank; ++i) {
    if (i == label) continue;
    for (Vertex j = 0; j < n; ++j) w.add_edge(i, j, j);
  }
  return w;
}

Label fixing_label_for(Label label) { return label == 1 ? 2 : 1; }

StallingsGraph build_V(const SignVector& s, std::size_t rank, Label label,
                       Label fixing) {
  if (rank < 2) throw std::invalid_argument("V gadget needs rank >= 2");
  if (label == fixing || label < 1 || fixing < 1 || label > rank ||
      fixing > rank)
    throw std::invalid_argument("V gadget labels must be distinct and in range");
  if (s.rank() != rank) throw std::invalid_argument("sign vector rank mismatch");

  constexpr Vertex v1 = 0, v2 = 1, v3 = 2, v4 = 3;
  StallingsGraph v(rank, 4, v1);

  auto pair_or_loops = [&](Label i) {
    if (s.at(i) > 0) {
      v.add_edge(i, v3, v3);
      v.add_edge(i, v4, v4);
    } else {
      v.add_edge(i, v3, v4);
      v.add_edge(i, v4, v3);
    }
  };

  v.add_edge(label, v1, v2);
  pair_or_loops(label);

  if (s.at(fixing) > 0) {
    v.add_edge(fixing, v1, v3);
    v.add_edge(fixing, v3, v1);
    v.add_edge(fixing, v2, v4);
    v.add_edge(fixing, v4, v2);
  } else {
    v.add_edge(fixing, v1, v3);
    v.add_edge(fixing, v3, v2);
    v.add_edge(fixing, v2, v4);
    v.add_edge(fixing, v4, v1);
  }

  for (Label i = 1; i <= rank; ++i) {
    if (i == label || i == fixing) continue;
    v.add_edge(i, v1, v1);
    v.add_edge(i, v2, v2);
    pair_or_loops(i);
  }
  return v;
}

GadgetPlan make_plan(const PartialCompletion& pc, std::size_t degree) {
  const std::size_t d = pc.graph.vertex_count();
  if (!is_prime(degree) || degree < d + 5)
    throw std::invalid_argument("degree " + std::to_string(degree) +
                                " is not a prime >= " + std::to_string(d + 5));
  GadgetPlan plan;
  plan.deficient_label = pc.label;
  plan.fixing_label = fixing_label_for(pc.label);
  plan.out_vertex = pc.out_vertex;
  plan.in_vertex = pc.in_vertex;
  plan.z_vertices = d;
  plan.degree = degree;
  plan.w_size = degree - d - 4;
  return plan;
}

namespace {

void check_plan(const StallingsGraph& zp, const GadgetPlan& plan) {
  auto fail = [](const std::string& why) {
    throw Error(Errc::plan_mismatch, "gadget plan does not match graph: " + why);
  };
  if (zp.rank() < 2) fail("rank below 2");
  if (plan.z_vertices != zp.vertex_count()) fail("vertex count d");
  if (plan.degree != plan.z_vertices + 4 + plan.w_size) fail("p != d + 4 + n");
  if (plan.w_size == 0) fail("empty W gadget");
  if (plan.deficient_label == plan.fixing_label) fail("labels coincide");
  if (plan.deficient_label < 1 || plan.deficient_label > zp.rank() ||
      plan.fixing_label < 1 || plan.fixing_label > zp.rank())
    fail("label out of range");
  for (Label i = 1; i <= zp.rank(); ++i) {
    const DeficiencyReport r = deficiencies(zp, i);
    if (i != plan.deficient_label) {
      if (!r.out_deficient.empty()) fail("label " + std::to_string(i) + " is incomplete");
    } else if (r.out_deficient != std::vector<Vertex>{plan.out_vertex} ||
               r.in_deficient != std::vector<Vertex>{plan.in_vertex}) {
      fail("open pair of the deficient label");
    }
  }
}

void copy_edges(StallingsGraph& into, const StallingsGraph& from,
                Vertex offset) {
  for (const Edge& e : from.edges())
    into.add_edge(e.label, e.from + offset, e.to + offset);
}

}  // namespace

StallingsGraph assemble(const StallingsGraph& zp, const GadgetPlan& plan,
                        const SignVector& s) {
  check_plan(zp, plan);
  const std::size_t rank = zp.rank();
  const auto d = static_cast<Vertex>(plan.z_vertices);
  const Vertex v_offset = d;
  const Vertex w_offset = d + 4;
  const Label l = plan.deficient_label;

  StallingsGraph y(rank, plan.degree, zp.base());
  copy_edges(y, zp, 0);
  copy_edges(y, build_V(s, rank, l, plan.fixing_label), v_offset);
  copy_edges(y, build_W(plan.w_size, rank, l), w_offset);

  const Vertex v1 = v_offset, v2 = v_offset + 1;
  const Vertex w1 = w_offset;
  const auto wn = static_cast<Vertex>(w_offset + plan.w_size - 1);
  y.add_edge(l, plan.out_vertex, v1);
  y.add_edge(l, v2, w1);
  y.add_edge(l, wn, plan.in_vertex);
  return y;
}

std::size_t next_candidate_prime(std::size_t d,
                                 std::optional<std::size_t> previous) {
  std::size_t p = previous ? *previous + 1 : d + 5;
  while (!is_prime(p)) ++p;
  return p;
}

std::size_t candidate_cutoff(std::size_t d) {
  const std::size_t root = 2 * (d + 4) + 1;
  std::size_t p = root * root + 1;
  while (!is_prime(p)) ++p;
  return p;
}

SignVector parity_correction(const StallingsGraph& zp, const GadgetPlan& plan) {
  const StallingsGraph y = assemble(zp, plan, SignVector::all_positive(zp.rank()));
  std::vector<int> s;
  for (const Permutation& g : graph_to_perms(y)) s.push_back(sign(g));
  return SignVector(std::move(s));
}

namespace {

GadgetCompletion complete_to(const StallingsGraph& z, Classification target) {
  if (z.rank() < 2)
    throw Error(Errc::rank_too_small,
                "alternating and symmetric completion need rank >= 2");
  const PartialCompletion pc = partial_complete(z);
  const std::size_t d = pc.graph.vertex_count();
  const std::size_t cutoff = candidate_cutoff(d);

  for (std::size_t p = next_candidate_prime(d); p <= cutoff;
       p = next_candidate_prime(d, p)) {
    const GadgetPlan plan = make_plan(pc, p);
    SignVector s = parity_correction(pc.graph, plan);
    if (target == Classification::symmetric) s = s.flipped(plan.deficient_label);
    StallingsGraph y = assemble(pc.graph, plan, s);
    const std::vector<Permutation> gens = graph_to_perms(y);
    GroupDescription group = describe_group(gens, p);
    if (group.classification == target)
      return {std::move(y), plan, std::move(s), std::move(group)};
  }
  throw Error(Errc::verification_exhausted,
              "no candidate prime up to " + std::to_string(cutoff) +
                  " verified as " + classification_name(target));
}

}  // namespace

GadgetCompletion alternating_complete(const StallingsGraph& z) {
  return complete_to(z, Classification::alternating);
}

GadgetCompletion symmetric_complete(const StallingsGraph& z) {
  return complete_to(z, Classification::symmetric);
}

}  // namespace altquot
