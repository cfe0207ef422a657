#include <doctest.h>

#include <random>

#include "altquot/errors.hpp"
#include "altquot/permgroup.hpp"
#include "oracles.hpp"

using namespace altquot;

namespace {

Permutation cyc(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  return Permutation::from_cycles(n, cycles);
}

std::vector<Permutation> perms_of(const std::vector<oracle::Image>& images) {
  std::vector<Permutation> out;
  for (const auto& im : images) out.emplace_back(im);
  return out;
}

}  // namespace

TEST_CASE("Permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  const Permutation p = cyc(5, {{0, 1, 4}, {2, 3}});
  CHECK(to_cycle_string(p) == "(0 1 4)(2 3)");
  CHECK(to_cycle_string(Permutation::identity(4)) == "()");
  CHECK(p.support_size() == 5);
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), Error);
}

TEST_CASE("graph_to_perms") {
  StallingsGraph rose(2, 1, 0);
  rose.add_edge(1, 0, 0);
  rose.add_edge(2, 0, 0);
  const auto id = graph_to_perms(rose);
  REQUIRE(id.size() == 2);
  CHECK(id[0] == Permutation::identity(1));
  CHECK(id[1] == Permutation::identity(1));

  const auto h = parse_words(std::vector<std::string>{"aa", "b", "abA"}, 2);
  const auto perms = graph_to_perms(core_graph(2, h));
  CHECK(perms[0] == cyc(2, {{0, 1}}));
  CHECK(perms[1].is_identity());

  CHECK_THROWS_AS(graph_to_perms(single_vertex(2)), Error);
}

TEST_CASE("evaluate_word") {
  const std::vector<Permutation> gens{cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})};
  CHECK(evaluate_word(gens, Word{}).is_identity());
  const std::vector<Permutation> inv{cyc(2, {{0, 1}}), Permutation::identity(2)};
  CHECK(evaluate_word(inv, parse_word("aa", 2)).is_identity());
  // (0 1 2) first, then (0 1)
  CHECK(evaluate_word(gens, parse_word("ab", 2)) == cyc(3, {{1, 2}}));
  CHECK(oracle::chase(oracle::images_of(gens), "ab", 3) == oracle::Image{0, 2, 1});
  CHECK(image_of_point(gens, parse_word("aB", 2), 2) == 1);

  const std::vector<Permutation> mixed{cyc(3, {{0, 1}}), cyc(2, {{0, 1}})};
  CHECK_THROWS_AS(evaluate_word(mixed, parse_word("a", 2)), Error);
}

TEST_CASE("sign") {
  CHECK(sign(Permutation::identity(5)) == 1);
  CHECK(sign(cyc(5, {{1, 3}})) == -1);
  CHECK(sign(cyc(5, {{0, 1, 2, 3}})) == -1);
  CHECK(sign(cyc(5, {{0, 1, 2}})) == 1);
}

TEST_CASE("orbits and transitivity") {
  CHECK(is_transitive(std::vector<Permutation>{cyc(2, {{0, 1}}), Permutation::identity(2)}));
  CHECK_FALSE(is_transitive(std::vector<Permutation>{Permutation::identity(2)}));
  CHECK(is_transitive(std::vector<Permutation>{cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{1, 2}})}));
  CHECK(orbit(std::vector<Permutation>{cyc(5, {{3, 1}})}, 1) == std::vector<Point>{1, 3});
}

TEST_CASE("is_primitive") {
  const std::vector<Permutation> seven{cyc(7, {{0, 1, 2, 3, 4, 5, 6}})};
  CHECK(is_primitive(seven, 7));
  CHECK_FALSE(is_primitive(std::vector<Permutation>{cyc(4, {{0, 1, 2, 3}})}, 4));
  CHECK(is_primitive(std::vector<Permutation>{cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}, 4));
  // dihedral group of the hexagon preserves {0,2,4},{1,3,5}
  CHECK_FALSE(is_primitive(
      std::vector<Permutation>{cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})}, 6));
  CHECK(is_primitive(
      std::vector<Permutation>{cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3, 4, 5}})}, 6));
  CHECK_THROWS_AS(is_primitive(std::vector<Permutation>{cyc(4, {{0, 1}})}, 4), Error);
}

TEST_CASE("group_order") {
  CHECK(group_order(std::vector<Permutation>{cyc(2, {{0, 1}})}) == 2);
  const std::vector<Permutation> a4{cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})};
  CHECK(oracle::closure_size(oracle::images_of(a4), 4) == 12);
  CHECK(group_order(a4) == 12);
  const std::vector<Permutation> s5{cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})};
  CHECK(oracle::closure_size(oracle::images_of(s5), 5) == 120);
  CHECK(group_order(s5) == 120);
  CHECK(group_order(std::vector<Permutation>{}) == 1);
  CHECK(group_order(std::vector<Permutation>{Permutation::identity(9)}) == 1);

  // large degree: exact arithmetic beyond 64 bits
  std::vector<Permutation> s30{cyc(30, {{0, 1}})};
  std::vector<Point> long_cycle(30);
  for (Point x = 0; x < 30; ++x) long_cycle[x] = x;
  s30.push_back(cyc(30, {long_cycle}));
  CHECK(group_order(s30) == factorial(30));
  CHECK(factorial(30).str() == "265252859812191058636308480000000");
}

TEST_CASE("StabilizerChain membership") {
  const std::vector<Permutation> a4{cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})};
  const StabilizerChain chain(4, a4);
  CHECK(chain.verify());
  CHECK(chain.contains(cyc(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(chain.contains(cyc(4, {{0, 1}})));
}

TEST_CASE("classify") {
  CHECK(classify(std::vector<Permutation>{cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})}, 4) ==
        Classification::alternating);
  CHECK(classify(std::vector<Permutation>{cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}, 4) ==
        Classification::symmetric);
  CHECK(classify(std::vector<Permutation>{cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})}, 4) ==
        Classification::other);
  // PSL(3,2) acting on the 7 points of the Fano plane: primitive, prime
  // degree, order 168, neither alternating nor symmetric.
  const std::vector<Permutation> fano{cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})};
  CHECK(group_order(fano) == 21);
  const std::vector<Permutation> psl32{cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2}, {3, 6}})};
  CHECK(oracle::closure_size(oracle::images_of(psl32), 7) == 168);
  CHECK(group_order(psl32) == 168);
  CHECK(classify(psl32, 7) == Classification::other);
}

TEST_CASE("group_order agrees with closure enumeration on random generators") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const std::size_t k = 1 + rng() % 3;
    std::vector<oracle::Image> gens;
    for (std::size_t j = 0; j < k; ++j) {
      oracle::Image p = oracle::random_image(rng, n);
      // bias toward proper subgroups: sometimes restrict to a sub-block
      if (trial % 3 == 0 && n > 2) {
        for (std::uint32_t x = 0; x < n; ++x) p[x] = x;
        std::shuffle(p.begin(), p.begin() + static_cast<long>(n / 2), rng);
      }
      gens.push_back(p);
    }
    const auto perms = perms_of(gens);
    CHECK(group_order(perms) == oracle::closure_size(gens, n));
  }
}

TEST_CASE("homomorphism law and sign multiplicativity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const std::vector<Permutation> gens =
        graph_to_perms(oracle::random_cover(rng, 2, n));
    const std::string u = oracle::random_reduced(rng, 2, static_cast<int>(rng() % 8));
    const std::string v = oracle::random_reduced(rng, 2, static_cast<int>(rng() % 8));
    const Word wu = parse_word(u, 2), wv = parse_word(v, 2);
    CHECK(evaluate_word(gens, concat(wu, wv)) ==
          compose(evaluate_word(gens, wu), evaluate_word(gens, wv)));
    const oracle::Image chased = oracle::chase(oracle::images_of(gens), u + v, n);
    CHECK(evaluate_word(gens, concat(wu, wv)) == Permutation(chased));

    const Permutation p(oracle::random_image(rng, n)), q(oracle::random_image(rng, n));
    CHECK(sign(p * q) == sign(p) * sign(q));
    CHECK(sign(p) == oracle::inversion_sign(oracle::Image(p.image().begin(), p.image().end())));
  }
}
