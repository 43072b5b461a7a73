// Executable noncommutativity argument: falsify candidate word-map group
// operations by generator-swap automorphisms, at equality and at
// conjugacy-class level.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "fgstar/star.hpp"
#include "fgstar/word.hpp"

namespace fgstar {

struct GeneratorCollisionError : std::runtime_error {
  GeneratorCollisionError()
      : std::runtime_error("fresh generator already occurs in the input tuple") {}
};

// Relabel e_i <-> e_j; an involutive automorphism.
Word swap_automorphism(int i, int j, const Word& w);

// Binary word map op(x, y): template over variables 1 (x) and 2 (y).
struct CandidateOperation {
  Word word_map;
};

enum class NoncommVerdict {
  CommutesExactly,
  FailsEquality,
  FailsOnlyUpToConjugacy,
};

struct NoncommResult {
  NoncommVerdict verdict;
  Word value;          // op(a, a')
  Word swapped_value;  // the swap-automorphism image, = op(a', a)
};

NoncommResult noncommutativity_check(const CandidateOperation& op, const Word& a,
                                     int fresh_index);

// Number of distinct conjugacy classes among the images of an N-ary word map
// under permutations of its summand assignment.
int multi_summand_class_count(const Word& op_n, const std::map<int, Word>& assignment,
                              const std::vector<Perm>& perms);

const char* verdict_name(NoncommVerdict v);

}  // namespace fgstar
