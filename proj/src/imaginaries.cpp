#include "fgstar/imaginaries.hpp"

#include <cstdlib>

namespace fgstar {

bool equiv_E1(const Word& w1, const Word& w2) { return is_conjugate_free(w1, w2); }

ConjClassKey conj_class_key(const Word& w) {
  Word core = cyclic_reduce(w).core;
  if (core.empty()) return {core};
  return {min_rotation(core)};
}

namespace {

long long coset_window(const Word& a, long long m, const Word& b) {
  // Lengths of a*b^(m*k) grow linearly in |k| times the cyclic core of b,
  // so the minimum lies within this window.
  long long core = static_cast<long long>(cyclic_reduce(b).core.size());
  return static_cast<long long>(a.size()) / std::max<long long>(1, m * core) + 2;
}

Word min_in_coset(const Word& a, const Word& b, long long m) {
  long long window = coset_window(a, m, b);
  Word best = a;
  for (long long k = -window; k <= window; ++k) {
    Word cand = multiply(a, power(b, m * k));
    if (word_less(cand, best)) best = cand;
  }
  return best;
}

}  // namespace

bool equiv_E2(long long m, const std::pair<Word, Word>& p1,
              const std::pair<Word, Word>& p2) {
  const auto& [a1, b1] = p1;
  const auto& [a2, b2] = p2;
  if (b1.empty() != b2.empty()) return false;
  if (b1.empty()) return true;
  Word b = centralizer_generator(b1);
  if (centralizer_generator(b2) != b) return false;
  return power_membership(multiply(invert(a1), a2), b, m).has_value();
}

CosetClassKey coset_class_key(long long m, const std::pair<Word, Word>& p) {
  CosetClassKey key;
  key.m = m;
  if (p.second.empty()) {
    key.degenerate = true;
    return key;
  }
  key.b_canonical = centralizer_generator(p.second);
  key.a_rep = min_in_coset(p.first, key.b_canonical, m);
  return key;
}

WordAutomaton double_coset_automaton(long long m, long long n, const Word& a,
                                     const Word& b, const Word& c) {
  WordAutomaton left = automaton_of_cyclic(a, m);
  WordAutomaton right = automaton_of_cyclic(c, n);
  return saturate(concat(concat_word(left, b, Side::Right), right));
}

bool equiv_E3(long long m, long long n, const Triple& t1, const Triple& t2) {
  bool dl1 = t1.a.empty(), dl2 = t2.a.empty();
  bool dr1 = t1.c.empty(), dr2 = t2.c.empty();
  if (dl1 != dl2 || dr1 != dr2) return false;
  if (dl1 || dr1) return true;
  Word a = centralizer_generator(t1.a);
  if (centralizer_generator(t2.a) != a) return false;
  Word c = centralizer_generator(t1.c);
  if (centralizer_generator(t2.c) != c) return false;
  return accepts_reduced(double_coset_automaton(m, n, a, t1.b, c), t2.b);
}

std::optional<std::pair<long long, long long>> double_coset_witness(
    long long m, long long n, const Word& a, const Word& b1, const Word& c,
    const Word& b2) {
  if (a.empty() || c.empty()) throw TrivialWordError();
  long long la = static_cast<long long>(cyclic_reduce(a).core.size());
  long long lc = static_cast<long long>(cyclic_reduce(c).core.size());
  long long total = static_cast<long long>(b1.size() + b2.size());
  long long bi = total / std::max<long long>(1, m * la) + 2;
  long long bj = total / std::max<long long>(1, n * lc) + 2;
  for (long long i = -bi; i <= bi; ++i) {
    Word left = multiply(power(a, m * i), b1);
    for (long long j = -bj; j <= bj; ++j) {
      if (multiply(left, power(c, n * j)) == b2) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

DoubleCosetClassKey double_coset_class_key(long long m, long long n, const Triple& t) {
  DoubleCosetClassKey key;
  key.m = m;
  key.n = n;
  key.degenerate_left = t.a.empty();
  key.degenerate_right = t.c.empty();
  if (key.degenerate_left || key.degenerate_right) return key;
  key.a_canonical = centralizer_generator(t.a);
  key.c_canonical = centralizer_generator(t.c);
  long long bi = coset_window(t.b, m, key.a_canonical);
  long long bj = coset_window(t.b, n, key.c_canonical);
  Word best = t.b;
  for (long long i = -bi; i <= bi; ++i) {
    Word left = multiply(power(key.a_canonical, m * i), t.b);
    for (long long j = -bj; j <= bj; ++j) {
      Word cand = multiply(left, power(key.c_canonical, n * j));
      if (word_less(cand, best)) best = cand;
    }
  }
  key.b_rep = best;
  return key;
}

std::string print_conj_key(const ConjClassKey& k) {
  return "E1[ " + print_word(k.canonical) + " ]";
}

std::string print_coset_key(const CosetClassKey& k) {
  std::string head = "E2^" + std::to_string(k.m);
  if (k.degenerate) return head + "[ 1 ]";
  return head + "[ " + print_word(k.b_canonical) + " | " + print_word(k.a_rep) + " ]";
}

std::string print_double_coset_key(const DoubleCosetClassKey& k) {
  std::string head = "E3^{" + std::to_string(k.m) + "," + std::to_string(k.n) + "}";
  if (k.degenerate_left || k.degenerate_right) {
    return head + "[ " + std::string(k.degenerate_left ? "1" : "*") + " | " +
           std::string(k.degenerate_right ? "1" : "*") + " ]";
  }
  return head + "[ " + print_word(k.a_canonical) + " | " + print_word(k.b_rep) +
         " | " + print_word(k.c_canonical) + " ]";
}

}  // namespace fgstar
