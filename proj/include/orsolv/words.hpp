#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orsolv {

// A generator is an index into an Alphabet. A letter is a signed generator:
// +(g+1) for the generator itself, -(g+1) for its inverse. A Word is a letter
// sequence; most functions expect and preserve free reduction.
using Gen = int;
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline Letter make_letter(Gen g, bool inverse = false) {
  return inverse ? -static_cast<Letter>(g + 1) : static_cast<Letter>(g + 1);
}
inline Gen gen_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline bool is_inverse(Letter l) { return l < 0; }
inline Letter inv(Letter l) { return -l; }

struct UnknownGeneratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyWordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered set of distinct generator names. The text format uses single ASCII
// letters (lowercase = generator, uppercase = inverse); the data model itself
// accepts arbitrary names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  // One generator per character: Alphabet("ab") has generators a, b.
  static Alphabet from_letters(const std::string& letters);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Gen g) const { return names_.at(g); }
  std::optional<Gen> find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, Gen> index_;
};

// Letters order as a < a^-1 < b < b^-1 < ...; words compare shortlex.
inline int letter_rank(Letter l) { return 2 * gen_of(l) + (is_inverse(l) ? 1 : 0); }
bool shortlex_less(const Word& a, const Word& b);
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

// Free reduction: cancel adjacent inverse pairs. Validates letters against the
// alphabet and throws UnknownGeneratorError on a bad letter.
Word reduce(const Word& raw, const Alphabet& alphabet);
// Reduction without alphabet validation, for internal use on trusted letters.
Word reduce_letters(const Word& raw);
Word concat_reduce(const Word& a, const Word& b);
Word inverse(const Word& w);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// core cyclically reduced, w = conjugator^-1 * core * conjugator.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

// Conjugacy in the ambient free group: equality of cyclic words.
bool is_conjugate(const Word& u, const Word& v);

// Least rotation of a word under shortlex (word assumed cyclically reduced).
Word least_rotation(const Word& w);
// Shortlex-least word among all rotations of w and of w^-1.
Word canonical_class_rep(const Word& w);

// w = p^n with n maximal; requires w nonempty and cyclically reduced.
struct PrimitiveRoot {
  Word root;
  int power = 1;
};
PrimitiveRoot primitive_root(const Word& w);

// Net exponent per generator, indexed by generator.
using ExponentVector = std::vector<long long>;
ExponentVector exponent_vector(const Word& w, const Alphabet& alphabet);

// All cyclically reduced candidate relators r with 1 <= |r| <= max_len, one
// shortlex-least representative per rotation-and-inversion class, filtered by
// the exponent-vector compatibility condition against w. Ordered by length
// then shortlex.
std::vector<Word> enumerate_candidates(const Word& w, const Alphabet& alphabet,
                                       int max_len);

// Text format: lowercase letter = generator, uppercase = inverse, whitespace
// ignored, empty = identity. Only valid for alphabets of single-letter names.
Word parse_word(const std::string& text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

struct Presentation {
  Alphabet alphabet;
  Word relator;  // freely reduced; may be empty
};

}  // namespace orsolv
