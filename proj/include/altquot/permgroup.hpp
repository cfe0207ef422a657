#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "altquot/stallings.hpp"
#include "altquot/words.hpp"

namespace altquot {

using BigInt = boost::multiprecision::cpp_int;
using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<Point> image);

  static Permutation identity(std::size_t degree);
  // Disjoint cycles, e.g. from_cycles(5, {{0, 1, 4}, {2, 3}}).
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return image_.size(); }
  Point operator[](Point x) const { return image_[x]; }
  std::span<const Point> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  std::size_t support_size() const noexcept;  // number of moved points
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> image, Unchecked) : image_(std::move(image)) {}
  friend Permutation compose(const Permutation&, const Permutation&);

  std::vector<Point> image_;
};

// Products are read left to right: compose(p, q) applies p first, then q.
// Under this convention evaluating a concatenated word is a homomorphism
// (lifting u then v at a vertex applies f(u) before f(v)).
Permutation compose(const Permutation& first, const Permutation& then);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

int sign(const Permutation& p);

// "(0 1 4)(2 3)"; the identity renders as "()".
std::string to_cycle_string(const Permutation& p);

// One permutation per label: generator i sends u to the target of u's
// outgoing i-edge. Throws Error{not_a_covering}.
std::vector<Permutation> graph_to_perms(const StallingsGraph& y);

// Image of `w` under the homomorphism sending generator i to gens[i-1].
// Throws Error{degree_mismatch} if generator degrees differ.
Permutation evaluate_word(std::span<const Permutation> gens, const Word& w);
Point image_of_point(std::span<const Permutation> gens, const Word& w,
                     Point x);

// Closure of {x} under the generators and their inverses, sorted.
std::vector<Point> orbit(std::span<const Permutation> gens, Point x);
bool is_transitive(std::span<const Permutation> gens);

// Prime degree short-circuits to true; otherwise searches for the minimal
// block containing {0, b} for every b. Throws Error{not_transitive}.
bool is_primitive(std::span<const Permutation> gens, std::size_t degree);

// Stabiliser chain built by deterministic Schreier-Sims. Base points are the
// smallest points moved by the generator that first needs them; Schreier
// generators are processed in (orbit position, generator index) order. The
// constructor ends with a full verification sweep and throws
// std::logic_error if it fails.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> gens);

  std::size_t degree() const noexcept { return degree_; }
  BigInt order() const;
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  bool contains(const Permutation& g) const;

  // Re-sifts every Schreier generator at every level and every input
  // generator from the top.
  bool verify() const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // index into orbit, -1 if absent
    std::vector<Permutation> rep;        // rep[k] maps base_point to orbit[k]
    std::vector<Permutation> rep_inv;
    std::vector<std::size_t> checked;    // gens verified per orbit position
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where the sift stopped
  };

  Level make_level(Point base_point) const;
  void add_generator(std::size_t level, const Permutation& g);
  void extend_orbit(Level& level, std::size_t first_new_gen);
  SiftResult sift(Permutation h, std::size_t from) const;
  Permutation schreier_generator(const Level& level, std::size_t k,
                                 std::size_t g) const;
  // Returns levels_.size() when every pair at `level` checks out, otherwise
  // the index of the deepest level that received a new generator.
  std::size_t process_level(std::size_t level);

  std::size_t degree_;
  std::vector<Permutation> input_;
  std::vector<Level> levels_;
};

BigInt group_order(std::span<const Permutation> gens);
BigInt factorial(std::size_t n);
bool is_prime(std::uint64_t n);

enum class Classification { alternating, symmetric, other };
const char* classification_name(Classification c);

Classification classify(std::span<const Permutation> gens, std::size_t degree);

struct GroupDescription {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  BigInt order = 1;
  Classification classification = Classification::other;
};

GroupDescription describe_group(std::span<const Permutation> gens,
                                std::size_t degree);

}  // namespace altquot
