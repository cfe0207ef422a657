#include "altquot/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "altquot/detail/union_find.hpp"
#include "altquot/errors.hpp"

namespace altquot {

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Point y : image_) {
    if (y >= image_.size() || hit[y])
      throw std::invalid_argument("image array is not a permutation");
    hit[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= degree) throw std::invalid_argument("cycle point out of range");
      img[c[k]] = c[(k + 1) % c.size()];
    }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (Point x = 0; x < image_.size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::size_t Permutation::support_size() const noexcept {
  std::size_t n = 0;
  for (Point x = 0; x < image_.size(); ++x) n += image_[x] != x;
  return n;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(image_.size());
  for (Point x = 0; x < image_.size(); ++x) inv[image_[x]] = x;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation compose(const Permutation& first, const Permutation& then) {
  if (first.degree() != then.degree())
    throw Error(Errc::degree_mismatch, "cannot compose permutations of degree " +
                                           std::to_string(first.degree()) +
                                           " and " +
                                           std::to_string(then.degree()));
  std::vector<Point> img(first.degree());
  for (Point x = 0; x < img.size(); ++x) img[x] = then.image_[first.image_[x]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

int sign(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (Point x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (Point y = x; !seen[y]; y = p[y]) seen[y] = true;
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point x = 0; x < p.degree(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += '(';
    for (Point y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      if (y != x) out += ' ';
      out += std::to_string(y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> graph_to_perms(const StallingsGraph& y) {
  if (!is_covering(y))
    throw Error(Errc::not_a_covering,
                "graph does not satisfy the covering condition");
  std::vector<Permutation> out;
  out.reserve(y.rank());
  for (Label i = 1; i <= y.rank(); ++i) {
    std::vector<Point> img(y.vertex_count());
    for (Vertex v = 0; v < y.vertex_count(); ++v) img[v] = y.target(i, v);
    out.emplace_back(std::move(img));
  }
  return out;
}

namespace {

std::size_t common_degree(std::span<const Permutation> gens) {
  if (gens.empty()) return 0;
  const std::size_t n = gens.front().degree();
  for (const Permutation& g : gens)
    if (g.degree() != n)
      throw Error(Errc::degree_mismatch,
                  "generators have different degrees (" + std::to_string(n) +
                      " vs " + std::to_string(g.degree()) + ")");
  return n;
}

}  // namespace

Permutation evaluate_word(std::span<const Permutation> gens, const Word& w) {
  const std::size_t n = common_degree(gens);
  if (w.max_label() > gens.size())
    throw std::out_of_range("word uses a generator with no image");
  std::vector<Permutation> inverses;
  inverses.reserve(gens.size());
  for (const Permutation& g : gens) inverses.push_back(g.inverse());
  std::vector<Point> img(n);
  for (Point x = 0; x < n; ++x) {
    Point y = x;
    for (const Letter& l : w)
      y = l.sign > 0 ? gens[l.index - 1][y] : inverses[l.index - 1][y];
    img[x] = y;
  }
  return Permutation(std::move(img));
}

Point image_of_point(std::span<const Permutation> gens, const Word& w,
                     Point x) {
  common_degree(gens);
  if (w.max_label() > gens.size())
    throw std::out_of_range("word uses a generator with no image");
  for (const Letter& l : w) {
    const Permutation& g = gens[l.index - 1];
    if (l.sign > 0) {
      x = g[x];
    } else {
      const auto img = g.image();
      x = static_cast<Point>(std::find(img.begin(), img.end(), x) - img.begin());
    }
  }
  return x;
}

std::vector<Point> orbit(std::span<const Permutation> gens, Point x) {
  const std::size_t n = common_degree(gens);
  if (gens.empty()) return {x};
  if (x >= n) throw std::out_of_range("point out of range");
  std::vector<Permutation> inverses;
  for (const Permutation& g : gens) inverses.push_back(g.inverse());
  std::vector<bool> seen(n, false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (Point y : {gens[g][out[k]], inverses[g][out[k]]}) {
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(std::span<const Permutation> gens) {
  const std::size_t n = common_degree(gens);
  if (n == 0) return gens.empty() ? true : false;
  return orbit(gens, 0).size() == n;
}

bool is_primitive(std::span<const Permutation> gens, std::size_t degree) {
  if (!gens.empty() && common_degree(gens) != degree)
    throw Error(Errc::degree_mismatch, "generator degree differs from degree");
  if (degree <= 1) return true;
  if (gens.empty() || !is_transitive(gens))
    throw Error(Errc::not_transitive, "action is not transitive");
  if (degree == 2 || is_prime(degree)) return true;

  // Minimal block containing {0, b}: merge classes and push the merged pair;
  // closing the pair queue under the generators yields the finest invariant
  // partition with 0 ~ b.
  for (Point b = 1; b < degree; ++b) {
    detail::UnionFind uf(degree);
    std::deque<std::pair<Point, Point>> queue{{0, b}};
    uf.unite(0, b);
    while (!queue.empty()) {
      const auto [x, y] = queue.front();
      queue.pop_front();
      for (const Permutation& g : gens) {
        const auto rx = uf.find(g[x]);
        const auto ry = uf.find(g[y]);
        if (rx != ry) {
          uf.unite(rx, ry);
          queue.emplace_back(static_cast<Point>(rx), static_cast<Point>(ry));
        }
      }
    }
    if (uf.set_size(0) < degree) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Stabiliser chain

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::span<const Permutation> gens)
    : degree_(degree) {
  for (const Permutation& g : gens) {
    if (g.degree() != degree)
      throw Error(Errc::degree_mismatch,
                  "generator degree " + std::to_string(g.degree()) +
                      " differs from " + std::to_string(degree));
    if (!g.is_identity() &&
        std::find(input_.begin(), input_.end(), g) == input_.end())
      input_.push_back(g);
  }

  // Initial base: each generator fixing every base point so far contributes
  // its smallest moved point.
  for (const Permutation& g : input_) {
    const bool fixes_all =
        std::all_of(levels_.begin(), levels_.end(),
                    [&](const Level& l) { return g[l.base_point] == l.base_point; });
    if (!fixes_all) continue;
    Point moved = 0;
    while (g[moved] == moved) ++moved;
    levels_.push_back(make_level(moved));
  }
  for (const Permutation& g : input_) {
    for (Level& l : levels_) {
      l.gens.push_back(g);
      if (g[l.base_point] != l.base_point) break;
    }
  }
  for (Level& l : levels_) extend_orbit(l, 0);

  if (!levels_.empty()) {
    std::size_t i = levels_.size() - 1;
    for (;;) {
      const std::size_t jump = process_level(i);
      if (jump < levels_.size()) {
        i = jump;
        continue;
      }
      if (i == 0) break;
      --i;
    }
  }

  if (!verify())
    throw std::logic_error("stabiliser chain failed its verification sweep");
}

StabilizerChain::Level StabilizerChain::make_level(Point base_point) const {
  Level l;
  l.base_point = base_point;
  l.position.assign(degree_, -1);
  l.orbit.push_back(base_point);
  l.position[base_point] = 0;
  l.rep.push_back(Permutation::identity(degree_));
  l.rep_inv.push_back(Permutation::identity(degree_));
  l.checked.push_back(0);
  return l;
}

void StabilizerChain::extend_orbit(Level& level, std::size_t first_new_gen) {
  auto try_add = [&](std::size_t k, std::size_t g) {
    const Point y = level.gens[g][level.orbit[k]];
    if (level.position[y] >= 0) return;
    level.position[y] = static_cast<std::int32_t>(level.orbit.size());
    level.orbit.push_back(y);
    level.rep.push_back(compose(level.rep[k], level.gens[g]));
    level.rep_inv.push_back(level.rep.back().inverse());
    level.checked.push_back(0);
  };
  const std::size_t old = level.orbit.size();
  for (std::size_t k = 0; k < old; ++k)
    for (std::size_t g = first_new_gen; g < level.gens.size(); ++g) try_add(k, g);
  for (std::size_t k = old; k < level.orbit.size(); ++k)
    for (std::size_t g = 0; g < level.gens.size(); ++g) try_add(k, g);
}

void StabilizerChain::add_generator(std::size_t level, const Permutation& g) {
  Level& l = levels_[level];
  l.gens.push_back(g);
  extend_orbit(l, l.gens.size() - 1);
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation h,
                                                  std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const Level& l = levels_[j];
    const std::int32_t k = l.position[h[l.base_point]];
    if (k < 0) return {std::move(h), j};
    h = compose(h, l.rep_inv[static_cast<std::size_t>(k)]);
  }
  return {std::move(h), levels_.size()};
}

Permutation StabilizerChain::schreier_generator(const Level& level,
                                                std::size_t k,
                                                std::size_t g) const {
  const Permutation& s = level.gens[g];
  const Point target = s[level.orbit[k]];
  const auto t = static_cast<std::size_t>(level.position[target]);
  return compose(compose(level.rep[k], s), level.rep_inv[t]);
}

std::size_t StabilizerChain::process_level(std::size_t i) {
  for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
    while (levels_[i].checked[k] < levels_[i].gens.size()) {
      const Level& l = levels_[i];
      const std::size_t g = l.checked[k];
      Permutation h = schreier_generator(l, k, g);
      if (!h.is_identity()) {
        SiftResult r = sift(std::move(h), i + 1);
        if (!r.residue.is_identity()) {
          const std::size_t j = r.level;
          if (j == levels_.size()) {
            Point moved = 0;
            while (r.residue[moved] == moved) ++moved;
            levels_.push_back(make_level(moved));
          }
          for (std::size_t lvl = i + 1; lvl <= j; ++lvl)
            add_generator(lvl, r.residue);
          return j;
        }
      }
      ++levels_[i].checked[k];
    }
  }
  return levels_.size();
}

bool StabilizerChain::verify() const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    for (std::size_t lower = 0; lower < i; ++lower)
      for (const Permutation& g : l.gens)
        if (g[levels_[lower].base_point] != levels_[lower].base_point)
          return false;
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      if (l.rep[k][l.base_point] != l.orbit[k]) return false;
      for (std::size_t g = 0; g < l.gens.size(); ++g)
        if (!sift(schreier_generator(l, k, g), i + 1).residue.is_identity())
          return false;
    }
  }
  return std::all_of(input_.begin(), input_.end(),
                     [&](const Permutation& g) { return contains(g); });
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const Level& l : levels_) n *= l.orbit.size();
  return n;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const Level& l : levels_) b.push_back(l.base_point);
  return b;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const Level& l : levels_) s.push_back(l.orbit.size());
  return s;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g, 0).residue.is_identity();
}

BigInt group_order(std::span<const Permutation> gens) {
  const std::size_t n = common_degree(gens);
  return StabilizerChain(n, gens).order();
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::alternating: return "alternating";
    case Classification::symmetric: return "symmetric";
    case Classification::other: return "other";
  }
  return "other";
}

namespace {

Classification classify_order(std::span<const Permutation> gens,
                              std::size_t degree, const BigInt& order) {
  const BigInt full = factorial(degree);
  if (order == full) return Classification::symmetric;
  const bool all_even = std::all_of(gens.begin(), gens.end(),
                                    [](const Permutation& g) { return sign(g) == 1; });
  if (order * 2 == full && all_even) return Classification::alternating;
  return Classification::other;
}

}  // namespace

Classification classify(std::span<const Permutation> gens, std::size_t degree) {
  if (!gens.empty() && common_degree(gens) != degree)
    throw Error(Errc::degree_mismatch, "generator degree differs from degree");
  return classify_order(gens, degree, StabilizerChain(degree, gens).order());
}

GroupDescription describe_group(std::span<const Permutation> gens,
                                std::size_t degree) {
  if (!gens.empty() && common_degree(gens) != degree)
    throw Error(Errc::degree_mismatch, "generator degree differs from degree");
  GroupDescription d;
  d.degree = degree;
  d.generators.assign(gens.begin(), gens.end());
  d.order = StabilizerChain(degree, gens).order();
  d.classification = classify_order(gens, degree, d.order);
  return d;
}

}  // namespace altquot
