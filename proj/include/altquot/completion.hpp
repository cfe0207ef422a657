#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "altquot/permgroup.hpp"
#include "altquot/stallings.hpp"

namespace altquot {

// One sign per generator label, s_i in {+1, -1}.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> values);
  static SignVector all_positive(std::size_t rank);

  std::size_t rank() const noexcept { return values_.size(); }
  int at(Label i) const { return values_.at(i - 1); }
  void set(Label i, int s);
  SignVector flipped(Label i) const;
  const std::vector<int>& values() const noexcept { return values_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> values_;
};

// Parameters of the prime-degree assembly. `deficient_label` is the label
// left open by partial completion (edges out of `out_vertex` and into
// `in_vertex` are missing); `fixing_label` is the label whose permutation
// fixes every W-vertex.
struct GadgetPlan {
  Label deficient_label = 1;
  Label fixing_label = 2;
  Vertex out_vertex = 0;
  Vertex in_vertex = 0;
  std::size_t z_vertices = 0;  // d
  std::size_t degree = 0;      // p, prime
  std::size_t w_size = 0;      // n = p - d - 4

  friend bool operator==(const GadgetPlan&, const GadgetPlan&) = default;
};

// Adds edges until the covering condition holds, using only existing
// vertices. Per label (ascending), the k-th smallest out-deficient vertex is
// joined to the k-th smallest in-deficient vertex.
StallingsGraph hall_complete(StallingsGraph z);

struct PartialCompletion {
  StallingsGraph graph;
  Label label;        // smallest deficient label of the input
  Vertex out_vertex;  // the one vertex still lacking an outgoing `label` edge
  Vertex in_vertex;   // the one vertex still lacking an incoming `label` edge
};

// Hall-completes every label except the smallest deficient one, for which
// the last (largest) deficient pair is left open. Throws
// Error{already_covering}.
PartialCompletion partial_complete(StallingsGraph z);

// Path w_1 -> ... -> w_n of `label` edges with loops of every other label.
StallingsGraph build_W(std::size_t n, std::size_t rank, Label label);

// Four-vertex sign gadget v_1..v_4 (ids 0..3). Label `label` has the edge
// v_1 -> v_2; label `fixing` pairs v_1 with v_3 and v_2 with v_4, as two
// 2-cycles when s = +1 or as the 4-cycle v_1 v_3 v_2 v_4 when s = -1. Every
// other label (and `label` itself on {v_3, v_4}) gives loops for s = +1 and
// a 2-cycle on {v_3, v_4} for s = -1.
StallingsGraph build_V(const SignVector& s, std::size_t rank, Label label,
                       Label fixing);

// Smallest label different from `label`.
Label fixing_label_for(Label label);

GadgetPlan make_plan(const PartialCompletion& pc, std::size_t degree);

// zp on ids 0..d-1, V on d..d+3, W on d+4..p-1, joined by the three
// connector edges out_vertex -> v_1, v_2 -> w_1, w_n -> in_vertex.
// Throws Error{plan_mismatch} when the plan does not describe zp.
StallingsGraph assemble(const StallingsGraph& zp, const GadgetPlan& plan,
                        const SignVector& s);

// With no previous candidate: the smallest prime >= d + 5. Otherwise the
// next prime after `previous`.
std::size_t next_candidate_prime(std::size_t d,
                                  std::optional<std::size_t> previous = {});

// Smallest prime exceeding (2(d+4)+1)^2; the candidate search never goes
// past it.
std::size_t candidate_cutoff(std::size_t d);

// Signs s with s_i = -1 exactly when generator i acts oddly on the all-+1
// assembly for this plan. Assembling with s makes every generator even.
SignVector parity_correction(const StallingsGraph& zp, const GadgetPlan& plan);

struct GadgetCompletion {
  StallingsGraph cover;
  GadgetPlan plan;
  SignVector signs;
  GroupDescription group;
};

// Searches candidate primes upward and returns the first assembly whose
// generated group is verified to be the full alternating group.
// Throws Error{rank_too_small}, Error{already_covering} or
// Error{verification_exhausted}.
GadgetCompletion alternating_complete(const StallingsGraph& z);

// As alternating_complete, with the sign of the deficient label flipped so
// its generator is odd; accepts the first assembly verified symmetric.
GadgetCompletion symmetric_complete(const StallingsGraph& z);

}  // namespace altquot
