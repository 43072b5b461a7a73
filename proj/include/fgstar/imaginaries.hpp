// The three basic equivalence relations on a free group (conjugation,
// m-cosets of centralizers, (m,n)-double cosets) with canonical class keys.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "fgstar/automaton.hpp"
#include "fgstar/word.hpp"

namespace fgstar {

// --- E1: conjugation -------------------------------------------------------

struct ConjClassKey {
  Word canonical;  // lex-minimal rotation of the cyclic reduction
  bool operator==(const ConjClassKey&) const = default;
  bool operator<(const ConjClassKey& o) const { return word_less(canonical, o.canonical); }
};

bool equiv_E1(const Word& w1, const Word& w2);
ConjClassKey conj_class_key(const Word& w);

// --- E2_m: m-cosets of centralizers ---------------------------------------

struct CosetClassKey {
  bool degenerate = false;  // the b = 1 class
  Word b_canonical;
  long long m = 1;
  Word a_rep;  // min-(length,lex) element of a*<b_canonical^m>
  bool operator==(const CosetClassKey&) const = default;
};

// Pair (a, b): a up to right translation by <b^m>, b via its centralizer.
bool equiv_E2(long long m, const std::pair<Word, Word>& p1,
              const std::pair<Word, Word>& p2);
CosetClassKey coset_class_key(long long m, const std::pair<Word, Word>& p);

// --- E3_{m,n}: (m,n)-double cosets ----------------------------------------

struct Triple {
  Word a, b, c;
};

struct DoubleCosetClassKey {
  bool degenerate_left = false;
  bool degenerate_right = false;
  Word a_canonical, c_canonical;
  long long m = 1, n = 1;
  Word b_rep;  // min-(length,lex) element of <a^m>*b*<c^n> within the search box
  bool operator==(const DoubleCosetClassKey&) const = default;
};

bool equiv_E3(long long m, long long n, const Triple& t1, const Triple& t2);
DoubleCosetClassKey double_coset_class_key(long long m, long long n, const Triple& t);

// Bounded-box search for (i, j) with a^(m*i) * b1 * c^(n*j) = b2.
// Independent oracle for the automaton route of equiv_E3.
std::optional<std::pair<long long, long long>> double_coset_witness(
    long long m, long long n, const Word& a, const Word& b1, const Word& c,
    const Word& b2);

// Saturated automaton accepting <root(a)^m> * b * <root(c)^n> as reduced words.
WordAutomaton double_coset_automaton(long long m, long long n, const Word& a,
                                     const Word& b, const Word& c);

std::string print_conj_key(const ConjClassKey& k);
std::string print_coset_key(const CosetClassKey& k);
std::string print_double_coset_key(const DoubleCosetClassKey& k);

}  // namespace fgstar
