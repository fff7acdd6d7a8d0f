#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orsolv/magnus.hpp"
#include "orsolv/words.hpp"

namespace orsolv::cayley {

struct BallTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PathEscapesBallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Radius-rho ball around the identity in the Cayley graph of F(S)/<<r>>.
// Vertices carry shortest-word representatives in first-seen shortlex order
// (the basepoint is vertex 0); edges are the generator edges with both
// endpoints inside the ball.
struct Ball {
  struct Edge {
    int src;
    Gen gen;
    int dst;
  };

  Alphabet alphabet;
  Word relator;
  int radius = 0;
  std::vector<Word> vertices;
  std::vector<int> dist;
  std::vector<Edge> edges;
  std::map<std::pair<int, Gen>, int> edge_at;    // (src, gen) -> edge index
  std::map<std::pair<int, Gen>, int> edge_into;  // (dst, gen) -> edge index

  std::optional<int> edge_from(int src, Gen g) const {
    auto it = edge_at.find({src, g});
    if (it == edge_at.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> edge_to(int dst, Gen g) const {
    auto it = edge_into.find({dst, g});
    if (it == edge_into.end()) return std::nullopt;
    return it->second;
  }
};

Ball build_ball(const Word& r, const Alphabet& alphabet, int radius,
                magnus::ResourceBudget budget = {}, std::size_t vertex_cap = 100000);

// Trace w edge-by-edge from the basepoint; if the path closes, compare the
// accumulated 1-chain with the chain of the relator loop at the basepoint.
// Returns the nonzero integer k with chain(w) = k * chain(r), if any.
std::optional<mpz_class> chain_multiple_check(const Word& w, const Word& r,
                                              const Ball& ball);

}  // namespace orsolv::cayley
