// Rational subsets of a free group via Benois saturation.
//
// An automaton accepts unreduced letter sequences; after saturate() it also
// accepts the free reduction of every word in its original language, so
// membership of a reduced word in the rational subset becomes plain NFA
// acceptance.

#pragma once

#include <string>

#include "fgstar/word.hpp"

namespace fgstar {

struct NotSaturatedError : std::runtime_error {
  NotSaturatedError() : std::runtime_error("automaton not saturated") {}
};

struct Transition {
  int from;
  Letter letter;
  int to;
  auto operator<=>(const Transition&) const = default;
};

struct WordAutomaton {
  int n_states = 0;
  std::vector<Transition> transitions;
  int initial = 0;
  std::vector<bool> accepting;
  bool saturated = false;
};

// Accepts { u^(m*k) : k in Z } as reduced words; returned saturated.
WordAutomaton automaton_of_cyclic(const Word& u, long long m);

// Language of the single word w.
WordAutomaton automaton_of_word(const Word& w);

// Language concatenation; result is not saturated.
WordAutomaton concat(const WordAutomaton& a1, const WordAutomaton& a2);

enum class Side { Left, Right };
WordAutomaton concat_word(const WordAutomaton& a, const Word& w, Side side);

// Benois closure: p -x-> r, r -x^-1-> q induces an epsilon link p -> q;
// epsilon links are eliminated by transition/acceptance propagation.
WordAutomaton saturate(const WordAutomaton& a);

bool accepts_reduced(const WordAutomaton& a, const Word& w);

// Line-oriented edge list, for inspection only.
std::string dump_automaton(const WordAutomaton& a);

}  // namespace fgstar
