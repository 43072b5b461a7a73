// Free-group word arithmetic: reduction, cyclic reduction, roots,
// centralizers, conjugacy, power membership.
//
// A letter is a nonzero int: +g is generator g (1-based), -g its inverse.
// A Word is a freely reduced letter sequence; reduce() is the only way
// unreduced input enters the system.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgstar {

using Letter = int;
using Word = std::vector<Letter>;

struct TrivialWordError : std::runtime_error {
  TrivialWordError() : std::runtime_error("operation undefined on the empty word") {}
};
struct UnboundVariableError : std::runtime_error {
  explicit UnboundVariableError(int v)
      : std::runtime_error("no assignment for variable x" + std::to_string(v)) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Letter inv(Letter l) { return -l; }

// Freely reduce an arbitrary letter sequence. Idempotent.
Word reduce(const Word& raw);

Word multiply(const Word& w1, const Word& w2);
Word invert(const Word& w);
// a^g = g^-1 a g
Word conjugate(const Word& w, const Word& g);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Lex order: generator index ascending, +1 before -1; shorter words first.
bool letter_less(Letter a, Letter b);
bool word_less(const Word& a, const Word& b);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w = conjugator^-1 * core * conjugator
};
CyclicReduction cyclic_reduce(const Word& w);

// Lexicographically minimal rotation of a cyclically reduced word.
Word min_rotation(const Word& core);

struct PrimitiveRoot {
  Word root;
  long long exponent;  // w = root^exponent, exponent >= 1
};
// Throws TrivialWordError on the empty word.
PrimitiveRoot primitive_root(const Word& w);

// Canonical generator of the centralizer C_F(w): the lex-smaller of the
// primitive root and its inverse.
Word centralizer_generator(const Word& w);

bool is_conjugate_free(const Word& w1, const Word& w2);

// k with w = u^(m*k), if any (k may be 0 or negative).
std::optional<long long> power_membership(const Word& w, const Word& u, long long m);

Word power(const Word& u, long long k);

// Homomorphic substitution: template letters are variable indices.
Word substitute(const Word& templ, const std::map<int, Word>& assignment);

// Text word format: whitespace-separated tokens; a..z = generators 1..26,
// uppercase = inverse, x<k> with optional ^-1 beyond 26; "1" = identity.
Word parse_word(const std::string& text);
std::string print_word(const Word& w);

// Declared ambient free group; words are validated against its rank.
struct FreeGroup {
  int rank;
  bool contains(const Word& w) const;
  void require(const Word& w) const;  // throws std::invalid_argument on mismatch
};

}  // namespace fgstar
