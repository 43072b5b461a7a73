#include "fgstar/noncomm.hpp"

#include <cstdlib>

#include "fgstar/imaginaries.hpp"

namespace fgstar {

Word swap_automorphism(int i, int j, const Word& w) {
  Word out = w;
  for (Letter& l : out) {
    int idx = std::abs(l);
    int mapped = idx == i ? j : idx == j ? i : idx;
    l = l > 0 ? mapped : -mapped;
  }
  return out;
}

NoncommResult noncommutativity_check(const CandidateOperation& op, const Word& a,
                                     int fresh_index) {
  int swapped_from = fresh_index - 1;  // e_{n+1}
  for (Letter l : a)
    if (std::abs(l) == fresh_index) throw GeneratorCollisionError();
  Word a_prime = swap_automorphism(swapped_from, fresh_index, a);
  Word s = substitute(op.word_map, {{1, a}, {2, a_prime}});
  Word s_swapped = swap_automorphism(swapped_from, fresh_index, s);  // = op(a', a)
  NoncommResult res{NoncommVerdict::CommutesExactly, s, s_swapped};
  if (s == s_swapped)
    res.verdict = NoncommVerdict::CommutesExactly;
  else if (equiv_E1(s, s_swapped))
    res.verdict = NoncommVerdict::FailsOnlyUpToConjugacy;
  else
    res.verdict = NoncommVerdict::FailsEquality;
  return res;
}

int multi_summand_class_count(const Word& op_n, const std::map<int, Word>& assignment,
                              const std::vector<Perm>& perms) {
  std::vector<ConjClassKey> keys;
  for (const Perm& sigma : perms) {
    std::map<int, Word> permuted;
    for (const auto& [var, w] : assignment) {
      if (var < 1 || var > static_cast<int>(sigma.size()))
        throw GeneratorCollisionError();
      permuted[var] = assignment.at(sigma[var - 1]);
    }
    ConjClassKey key = conj_class_key(substitute(op_n, permuted));
    bool seen = false;
    for (const auto& k : keys)
      if (k == key) {
        seen = true;
        break;
      }
    if (!seen) keys.push_back(key);
  }
  return static_cast<int>(keys.size());
}

const char* verdict_name(NoncommVerdict v) {
  switch (v) {
    case NoncommVerdict::CommutesExactly:
      return "commutes_exactly";
    case NoncommVerdict::FailsEquality:
      return "fails_equality";
    case NoncommVerdict::FailsOnlyUpToConjugacy:
      return "fails_only_up_to_conjugacy";
  }
  return "?";
}

}  // namespace fgstar
