#include <random>

#include "doctest.h"
#include "orsolv/words.hpp"

using namespace orsolv;

namespace {

const Alphabet kAB = Alphabet::from_letters("ab");

Word W(const std::string& s, const Alphabet& a = kAB) { return parse_word(s, a); }

Word random_reduced(std::mt19937& rng, const Alphabet& a, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> pick(0, 2 * a.size() - 1);
  Word w;
  int target = len(rng);
  while (static_cast<int>(w.size()) < target) {
    Letter l = make_letter(pick(rng) / 2, pick(rng) % 2);
    if (!w.empty() && w.back() == inv(l)) continue;
    w.push_back(l);
  }
  return w;
}

}  // namespace

TEST_CASE("reduce examples") {
  CHECK(W("aA b") == W("b"));
  CHECK(W("abBA").empty());
  CHECK(W("aabA") == parse_word("aabA", kAB));
  CHECK(format_word(W("aabA"), kAB) == "aabA");
  CHECK_THROWS_AS(parse_word("xyz", kAB), UnknownGeneratorError);
}

TEST_CASE("reduce is idempotent on random words") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Word raw;
    std::uniform_int_distribution<int> pick(0, 3);
    for (int j = 0; j < 30; ++j) raw.push_back(make_letter(pick(rng) / 2, pick(rng) % 2));
    Word r1 = reduce(raw, kAB);
    CHECK(is_reduced(r1));
    CHECK(reduce(r1, kAB) == r1);
  }
}

TEST_CASE("cyclic reduction") {
  auto r = cyclic_reduce(W("Bab"));
  CHECK(format_word(r.core, kAB) == "a");
  CHECK(format_word(r.conjugator, kAB) == "b");

  r = cyclic_reduce(W("abAB"));
  CHECK(format_word(r.core, kAB) == "abAB");
  CHECK(r.conjugator.empty());

  r = cyclic_reduce(W("a"));
  CHECK(format_word(r.core, kAB) == "a");
  CHECK(r.conjugator.empty());
}

TEST_CASE("cyclic reduction round-trip on random words") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    Word w = random_reduced(rng, kAB, 24);
    auto r = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(r.core));
    Word back = concat_reduce(concat_reduce(inverse(r.conjugator), r.core), r.conjugator);
    CHECK(back == w);
  }
}

TEST_CASE("conjugacy examples") {
  CHECK(is_conjugate(W("abAB"), W("bABa")));
  CHECK(is_conjugate(W("ab"), W("ba")));
  CHECK_FALSE(is_conjugate(W("a"), W("b")));
}

TEST_CASE("conjugacy is an equivalence and inversion-invariant") {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    Word u = random_reduced(rng, kAB, 10);
    Word v = random_reduced(rng, kAB, 10);
    Word x = random_reduced(rng, kAB, 10);
    CHECK(is_conjugate(u, u));
    CHECK(is_conjugate(u, v) == is_conjugate(v, u));
    if (is_conjugate(u, v) && is_conjugate(v, x)) CHECK(is_conjugate(u, x));
    CHECK(is_conjugate(u, v) == is_conjugate(inverse(u), inverse(v)));
    // genuine conjugates are conjugate
    Word c = concat_reduce(concat_reduce(x, u), inverse(x));
    CHECK(is_conjugate(u, c));
  }
}

TEST_CASE("primitive root examples") {
  auto p = primitive_root(W("abab"));
  CHECK(format_word(p.root, kAB) == "ab");
  CHECK(p.power == 2);
  p = primitive_root(W("aaa"));
  CHECK(format_word(p.root, kAB) == "a");
  CHECK(p.power == 3);
  p = primitive_root(W("ab"));
  CHECK(p.power == 1);
  CHECK_THROWS_AS(primitive_root(Word{}), EmptyWordError);
}

TEST_CASE("primitive root properties") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    Word w = cyclic_reduce(random_reduced(rng, kAB, 12)).core;
    if (w.empty()) continue;
    auto p = primitive_root(w);
    CHECK(p.root.size() * p.power == w.size());
    CHECK(primitive_root(p.root).power == 1);
  }
}

TEST_CASE("exponent vector examples") {
  auto v = exponent_vector(W("abAB"), kAB);
  CHECK(v[0] == 0);
  CHECK(v[1] == 0);

  Alphabet at = Alphabet::from_letters("at");
  auto bg = exponent_vector(parse_word("TataTAtAA", at), at);
  CHECK(bg[0] == -1);  // a
  CHECK(bg[1] == 0);   // t

  v = exponent_vector(W("aab"), kAB);
  CHECK(v[0] == 2);
  CHECK(v[1] == 1);
}

TEST_CASE("exponent vector is a homomorphism") {
  std::mt19937 rng(19);
  for (int i = 0; i < 300; ++i) {
    Word u = random_reduced(rng, kAB, 12);
    Word v = random_reduced(rng, kAB, 12);
    auto eu = exponent_vector(u, kAB);
    auto ev = exponent_vector(v, kAB);
    auto euv = exponent_vector(concat_reduce(u, v), kAB);
    for (int g = 0; g < kAB.size(); ++g) CHECK(euv[g] == eu[g] + ev[g]);
  }
}

TEST_CASE("candidate enumeration") {
  auto cands = enumerate_candidates(W("aa"), kAB, 2);
  auto has = [&](const std::string& s) {
    Word w = W(s);
    for (auto& c : cands)
      if (c == w) return true;
    return false;
  };
  CHECK(has("a"));
  CHECK(has("aa"));
  CHECK_FALSE(has("b"));
  CHECK_FALSE(has("ab"));

  cands = enumerate_candidates(W("ab"), kAB, 2);
  REQUIRE(cands.size() == 1);
  CHECK(format_word(cands[0], kAB) == "ab");

  CHECK(enumerate_candidates(Word{}, kAB, 3).empty());
}

TEST_CASE("candidate enumeration contains the core class and is canonical") {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    Word w = cyclic_reduce(random_reduced(rng, kAB, 6)).core;
    if (w.empty()) continue;
    auto cands = enumerate_candidates(w, kAB, static_cast<int>(w.size()));
    Word canon = canonical_class_rep(w);
    bool found = false;
    for (auto& c : cands) {
      CHECK(is_cyclically_reduced(c));
      CHECK(canonical_class_rep(c) == c);
      if (c == canon) found = true;
    }
    CHECK(found);
  }
}
