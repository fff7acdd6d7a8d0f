#include <random>

#include "doctest.h"
#include "orsolv/cayley.hpp"

using namespace orsolv;

namespace {

const Alphabet kAB = Alphabet::from_letters("ab");

Word W(const std::string& s) { return parse_word(s, kAB); }

}  // namespace

TEST_CASE("ball for a killed generator") {
  // quotient F(b): 5 vertices at radius 2, an a-loop at each, 4 b-edges
  auto ball = cayley::build_ball(W("a"), kAB, 2);
  CHECK(ball.vertices.size() == 5);
  int aloops = 0, bedges = 0;
  for (auto& e : ball.edges) {
    if (e.gen == 0) {
      CHECK(e.src == e.dst);
      ++aloops;
    } else {
      ++bedges;
    }
  }
  CHECK(aloops == 5);
  CHECK(bedges == 4);
}

TEST_CASE("ball for the infinite cyclic quotient") {
  auto ball = cayley::build_ball(W("ab"), kAB, 1);
  CHECK(ball.vertices.size() == 3);
}

TEST_CASE("radius zero ball") {
  auto ball = cayley::build_ball(W("a"), kAB, 0);
  CHECK(ball.vertices.size() == 1);
  // only the dead generator loops at the basepoint
  REQUIRE(ball.edges.size() == 1);
  CHECK(ball.edges[0].gen == 0);
  CHECK(ball.edges[0].src == 0);
  CHECK(ball.edges[0].dst == 0);
}

TEST_CASE("chain multiple examples") {
  auto ball = cayley::build_ball(W("a"), kAB, 2);
  auto k = cayley::chain_multiple_check(W("aa"), W("a"), ball);
  REQUIRE(k.has_value());
  CHECK(*k == 2);

  k = cayley::chain_multiple_check(W("a"), W("a"), ball);
  REQUIRE(k.has_value());
  CHECK(*k == 1);

  CHECK_FALSE(cayley::chain_multiple_check(W("ab"), W("a"), ball).has_value());
}

TEST_CASE("trivial words with vanishing chain give none") {
  // w in [<<r>>, <<r>>]: the chain is zero and k must be nonzero
  auto ball = cayley::build_ball(W("a"), kAB, 8);
  Word w = parse_word("abABBAba", kAB);  // [a, b][b, a] pattern with a-conjugates
  // commutator of two conjugates of a: aa Bab A A BAb? build one directly:
  Word c1 = parse_word("a", kAB);
  Word c2 = parse_word("BaB", kAB);
  (void)w;
  Word comm = concat_reduce(concat_reduce(c1, c2),
                            concat_reduce(inverse(c1), inverse(c2)));
  auto k = cayley::chain_multiple_check(comm, W("a"), ball);
  CHECK_FALSE(k.has_value());
}

TEST_CASE("ball growth is monotone and nested") {
  for (auto rel : {"ab", "aa", "abAB"}) {
    std::size_t prev = 0;
    std::vector<Word> prev_vertices;
    for (int radius = 0; radius <= 3; ++radius) {
      auto ball = cayley::build_ball(W(rel), kAB, radius);
      CHECK(ball.vertices.size() >= prev);
      // previous vertex list is a prefix-set of the next one
      for (auto& v : prev_vertices) {
        bool found = false;
        for (auto& u : ball.vertices) found = found || u == v;
        CHECK(found);
      }
      prev = ball.vertices.size();
      prev_vertices = ball.vertices;
    }
  }
}

TEST_CASE("path escaping the ball throws") {
  auto ball = cayley::build_ball(W("a"), kAB, 1);
  CHECK_THROWS_AS(cayley::chain_multiple_check(W("bbbb"), W("a"), ball),
                  cayley::PathEscapesBallError);
}

TEST_CASE("vertex cap") {
  CHECK_THROWS_AS(cayley::build_ball(W("abAB"), kAB, 3, {}, 5),
                  cayley::BallTooLargeError);
}
