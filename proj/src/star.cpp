#include "fgstar/star.hpp"

#include "fgstar/imaginaries.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fgstar {

namespace {

long long tll(const StarForm& x) {
  long long n = static_cast<long long>(x.a_prefix.size());
  for (const auto& s : x.syllables) n += static_cast<long long>(s.elem.size());
  return n;
}

const CyclicA* cyclic_regime(const StarPresentation& p) {
  return std::get_if<CyclicA>(&p.regime);
}

// Membership of a factor word in (the image of) A.
bool in_amalgam(const StarPresentation& p, const Word& g) {
  if (g.empty()) return true;
  if (std::holds_alternative<TrivialA>(p.regime)) return false;
  if (const auto* ff = std::get_if<FreeFactorA>(&p.regime)) {
    for (Letter l : g)
      if (std::abs(l) > ff->shared_rank) return false;
    return true;
  }
  const auto& peg = std::get<CyclicA>(p.regime).peg;
  return power_membership(g, peg, 1).has_value();
}

// Canonical split g = a * t with a in A and t the transversal representative.
// Assumes g not in A, so t is nonempty.
std::pair<Word, Word> decompose(const StarPresentation& p, const Word& g) {
  if (std::holds_alternative<TrivialA>(p.regime)) return {Word{}, g};
  if (const auto* ff = std::get_if<FreeFactorA>(&p.regime)) {
    size_t cut = 0;
    while (cut < g.size() && std::abs(g[cut]) <= ff->shared_rank) ++cut;
    Word a(g.begin(), g.begin() + static_cast<long>(cut));
    Word t(g.begin() + static_cast<long>(cut), g.end());
    return {a, t};
  }
  const auto& peg = std::get<CyclicA>(p.regime).peg;
  long long ucore = static_cast<long long>(cyclic_reduce(peg).core.size());
  long long window = 2 * static_cast<long long>(g.size()) / std::max<long long>(1, ucore) + 2;
  long long best_k = 0;
  Word best = g;
  for (long long k = -window; k <= window; ++k) {
    Word cand = multiply(power(peg, -k), g);
    if (word_less(cand, best)) {
      best = cand;
      best_k = k;
    }
  }
  return {power(peg, best_k), best};
}

void absorb_right(const StarPresentation& p, StarForm& form, const Word& a) {
  Word carry = reduce(a);
  if (carry.empty()) return;
  for (auto it = form.syllables.rbegin(); it != form.syllables.rend(); ++it) {
    Word x = multiply(it->elem, carry);
    auto [aj, t] = decompose(p, x);
    it->elem = t;
    carry = aj;
    if (carry.empty()) return;
  }
  form.a_prefix = multiply(form.a_prefix, carry);
}

void append_syllable(const StarPresentation& p, StarForm& form, int ray, const Word& g) {
  if (in_amalgam(p, g)) {
    absorb_right(p, form, g);
    return;
  }
  if (!form.syllables.empty() && form.syllables.back().ray == ray) {
    Word merged = multiply(form.syllables.back().elem, g);
    form.syllables.pop_back();
    if (in_amalgam(p, merged)) {
      absorb_right(p, form, merged);
    } else {
      append_syllable(p, form, ray, merged);  // previous ray differs now
    }
    return;
  }
  auto [a, t] = decompose(p, g);
  absorb_right(p, form, a);
  form.syllables.push_back({ray, t});
}

}  // namespace

void validate_presentation(const StarPresentation& p) {
  if (p.n_rays < 2) throw std::invalid_argument("need at least 2 rays");
  if (p.factor_rank < 1) throw std::invalid_argument("factor rank must be positive");
  if (const auto* ff = std::get_if<FreeFactorA>(&p.regime)) {
    if (ff->shared_rank < 1 || ff->shared_rank >= p.factor_rank)
      throw std::invalid_argument("shared rank must satisfy 1 <= s < factor rank");
  } else if (const auto* cy = std::get_if<CyclicA>(&p.regime)) {
    if (cy->peg.empty()) throw TrivialWordError();
    FreeGroup{p.factor_rank}.require(cy->peg);
    if (primitive_root(cy->peg).exponent != 1)
      throw std::invalid_argument("peg must not be a proper power");
  }
}

StarForm star_identity() { return {}; }

StarForm star_reduce(const StarPresentation& p, const std::vector<StarLetter>& raw) {
  FreeGroup factor{p.factor_rank};
  StarForm form;
  for (const StarLetter& l : raw) {
    if (l.ray < 1 || l.ray > p.n_rays) throw InvalidRayError();
    if (!factor.contains(l.elem)) throw RankMismatchError();
    append_syllable(p, form, l.ray, reduce(l.elem));
  }
  return form;
}

StarForm star_multiply(const StarPresentation& p, const StarForm& x, const StarForm& y) {
  StarForm out = x;
  absorb_right(p, out, y.a_prefix);
  for (const StarLetter& s : y.syllables) append_syllable(p, out, s.ray, s.elem);
  return out;
}

StarForm star_invert(const StarPresentation& p, const StarForm& x) {
  StarForm out;
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it)
    append_syllable(p, out, it->ray, invert(it->elem));
  absorb_right(p, out, invert(x.a_prefix));
  return out;
}

StarForm star_power(const StarPresentation& p, const StarForm& x, long long k) {
  StarForm base = k >= 0 ? x : star_invert(p, x);
  long long n = k >= 0 ? k : -k;
  StarForm out;
  for (long long i = 0; i < n; ++i) out = star_multiply(p, out, base);
  return out;
}

bool is_star_cyclically_reduced(const StarForm& x) {
  if (x.length() <= 1) return true;
  return x.syllables.front().ray != x.syllables.back().ray;
}

StarCyclicReduction star_cyclic_reduce(const StarPresentation& p, const StarForm& x) {
  StarForm cur = x;
  StarForm d_total = star_identity();  // x = d_total * cur * d_total^-1
  while (cur.length() >= 2 && cur.syllables.front().ray == cur.syllables.back().ray) {
    StarForm d{cur.a_prefix, {cur.syllables.front()}};
    cur = star_multiply(p, star_multiply(p, star_invert(p, d), cur), d);
    d_total = star_multiply(p, d_total, d);
  }
  return {cur, star_invert(p, d_total)};
}

std::vector<int> factor_signature(const StarForm& x) {
  if (x.length() == 0) throw ZeroLengthError();
  std::vector<int> sig;
  sig.reserve(x.length());
  for (const auto& s : x.syllables) sig.push_back(s.ray);
  return sig;
}

bool signatures_equal_up_to_rotation(const std::vector<int>& s1,
                                     const std::vector<int>& s2) {
  if (s1.size() != s2.size()) return false;
  if (s1.empty()) return true;
  std::vector<int> rot = s2;
  for (size_t i = 0; i < s2.size(); ++i) {
    if (rot == s1) return true;
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return false;
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm transposition(int n, int i, int j) {
  Perm p = identity_perm(n);
  std::swap(p[i - 1], p[j - 1]);
  return p;
}

Perm compose(const Perm& s, const Perm& t) {
  Perm out(s.size());
  for (size_t i = 0; i < s.size(); ++i) out[i] = s[t[i] - 1];
  return out;
}

StarForm permute_rays(const StarPresentation& p, const Perm& sigma, const StarForm& x) {
  if (!p.isomorphic) throw NotIsomorphicStarError();
  if (static_cast<int>(sigma.size()) != p.n_rays)
    throw std::invalid_argument("permutation size mismatch");
  StarForm out = x;
  for (auto& s : out.syllables) s.ray = sigma[s.ray - 1];
  return out;
}

std::vector<Perm> paired_transpositions(int n) {
  if (n < 4) throw TooFewRaysError();
  std::vector<Perm> out;
  for (int i = 1; i + 1 <= n; i += 2) out.push_back(transposition(n, i, i + 1));
  return out;
}

std::vector<Perm> missing_factor_transpositions(int n, int k) {
  if (n < 4) throw TooFewRaysError();
  std::vector<Perm> out;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n - k; ++j) out.push_back(transposition(n, i, k + j));
  return out;
}

std::vector<Perm> center_double_transpositions(int n, int i, int j) {
  if (n < 4) throw TooFewRaysError();
  std::vector<int> rest;
  for (int r = 1; r <= n; ++r)
    if (r != i && r != j) rest.push_back(r);
  size_t half = rest.size() / 2;
  std::vector<Perm> out;
  for (size_t t = 0; t < half; ++t)
    out.push_back(compose(transposition(n, i, rest[t]),
                          transposition(n, j, rest[half + t])));
  return out;
}

std::vector<Perm> star_transpositions(int n, int i) {
  std::vector<Perm> out;
  for (int j = 1; j <= n; ++j)
    if (j != i) out.push_back(transposition(n, i, j));
  return out;
}

std::pair<int, int> center_rays(const StarForm& h) {
  size_t m = h.length();
  if (m < 2) throw ZeroLengthError();
  size_t c = (m + 1) / 2;  // ceil(m/2), 1-based
  return {h.syllables[c - 1].ray, h.syllables[c].ray};
}

int ambient_rank(const StarPresentation& p) {
  if (std::holds_alternative<TrivialA>(p.regime)) return p.n_rays * p.factor_rank;
  if (const auto* ff = std::get_if<FreeFactorA>(&p.regime))
    return ff->shared_rank + p.n_rays * (p.factor_rank - ff->shared_rank);
  throw UnsupportedRegimeError();
}

Word word_of_form(const StarPresentation& p, const StarForm& x) {
  int shared = 0;
  if (const auto* ff = std::get_if<FreeFactorA>(&p.regime))
    shared = ff->shared_rank;
  else if (!std::holds_alternative<TrivialA>(p.regime))
    throw UnsupportedRegimeError();
  auto map_letter = [&](int ray, Letter l) -> Letter {
    int idx = std::abs(l);
    int mapped = idx <= shared
                     ? idx
                     : shared + (ray - 1) * (p.factor_rank - shared) + (idx - shared);
    return l > 0 ? mapped : -mapped;
  };
  Word out = x.a_prefix;  // over shared generators, mapped to themselves
  for (const auto& s : x.syllables)
    for (Letter l : s.elem) out.push_back(map_letter(s.ray, l));
  return reduce(out);
}

namespace {

// Conjugacy of L<=1 cores in the cyclic-peg regime, including the chain
// through A across factors.
bool cyclic_low_length_conjugate(const StarPresentation& p, const StarForm& cx,
                                 const StarForm& cy) {
  const Word& u = cyclic_regime(p)->peg;
  auto amalgam_exp = [&](const StarForm& f) -> std::optional<long long> {
    if (f.length() != 0) return std::nullopt;
    return power_membership(f.a_prefix, u, 1);
  };
  auto factor_word = [&](const StarForm& f) {
    return multiply(f.a_prefix, f.syllables[0].elem);
  };
  if (cx.length() == 0 && cy.length() == 0)
    return *amalgam_exp(cx) == *amalgam_exp(cy);
  if (cx.length() == 0 || cy.length() == 0) {
    long long e = cx.length() == 0 ? *amalgam_exp(cx) : *amalgam_exp(cy);
    const StarForm& other = cx.length() == 0 ? cy : cx;
    return is_conjugate_free(factor_word(other), power(u, e));
  }
  Word v1 = factor_word(cx);
  Word v2 = factor_word(cy);
  if (cx.syllables[0].ray == cy.syllables[0].ray && is_conjugate_free(v1, v2))
    return true;
  // chain through A: v1 ~ u^k ~ v2 inside (possibly different) factors
  long long c1 = static_cast<long long>(cyclic_reduce(v1).core.size());
  long long cu = static_cast<long long>(cyclic_reduce(u).core.size());
  if (cu == 0 || c1 % cu != 0) return false;
  long long k = c1 / cu;
  for (long long s : {k, -k})
    if (is_conjugate_free(v1, power(u, s)) && is_conjugate_free(v2, power(u, s)))
      return true;
  return false;
}

bool cyclic_conjugate_cores(const StarPresentation& p, const StarForm& cx,
                            const StarForm& cy) {
  if (cx.length() <= 1 && cy.length() <= 1)
    return cyclic_low_length_conjugate(p, cx, cy);
  if (cx.length() != cy.length()) return false;
  if (!signatures_equal_up_to_rotation(factor_signature(cx), factor_signature(cy)))
    return false;
  const Word& u = cyclic_regime(p)->peg;
  long long ucore = static_cast<long long>(cyclic_reduce(u).core.size());
  long long bound = (tll(cx) + tll(cy)) / std::max<long long>(1, ucore) + 4;
  size_t L = cy.length();
  for (size_t shift = 0; shift < L; ++shift) {
    // rotate cy by `shift` syllables: conjugate by its length-`shift` prefix
    StarForm pre{cy.a_prefix, {cy.syllables.begin(),
                               cy.syllables.begin() + static_cast<long>(shift)}};
    StarForm rot = star_multiply(p, star_multiply(p, star_invert(p, pre), cy), pre);
    for (long long k = -bound; k <= bound; ++k) {
      StarForm uk = star_reduce(p, {{1, power(u, k)}});
      StarForm cand =
          star_multiply(p, star_multiply(p, uk, rot), star_invert(p, uk));
      if (cand == cx) return true;
    }
  }
  return false;
}

}  // namespace

bool star_conjugate_test(const StarPresentation& p, const StarForm& x,
                         const StarForm& y) {
  if (!std::holds_alternative<CyclicA>(p.regime)) {
    return is_conjugate_free(word_of_form(p, x), word_of_form(p, y));
  }
  StarForm cx = star_cyclic_reduce(p, x).core;
  StarForm cy = star_cyclic_reduce(p, y).core;
  return cyclic_conjugate_cores(p, cx, cy);
}

StarRoot star_primitive_root(const StarPresentation& p, const StarForm& x) {
  if (x == star_identity()) throw TrivialWordError();
  if (!std::holds_alternative<CyclicA>(p.regime)) {
    // Free regimes take the embedded free-group route in the E2/E3 tests.
    throw UnsupportedRegimeError();
  }
  const Word& u = cyclic_regime(p)->peg;
  StarCyclicReduction cr = star_cyclic_reduce(p, x);
  const StarForm& core = cr.core;
  auto transport = [&](const StarForm& root, long long e) -> StarRoot {
    StarForm r = star_multiply(
        p, star_multiply(p, star_invert(p, cr.conjugator), root), cr.conjugator);
    return {r, e};
  };
  if (core.length() == 0) {
    long long e = *power_membership(core.a_prefix, u, 1);
    StarForm base = star_reduce(p, {{1, e > 0 ? u : invert(u)}});
    return transport(base, std::llabs(e));
  }
  if (core.length() == 1) {
    Word v = multiply(core.a_prefix, core.syllables[0].elem);
    PrimitiveRoot pr = primitive_root(v);
    StarForm base = star_reduce(p, {{core.syllables[0].ray, pr.root}});
    return transport(base, pr.exponent);
  }
  size_t L = core.length();
  long long ucore = static_cast<long long>(cyclic_reduce(u).core.size());
  long long ebound = tll(core) / std::max<long long>(1, ucore) + 4;
  for (size_t d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    long long k = static_cast<long long>(L / d);
    StarForm pre{core.a_prefix,
                 {core.syllables.begin(), core.syllables.begin() + static_cast<long>(d)}};
    for (long long e = -ebound; e <= ebound; ++e) {
      StarForm cand = star_multiply(p, pre, star_reduce(p, {{1, power(u, -e)}}));
      if (star_power(p, cand, k) == core) return transport(cand, k);
    }
  }
  return transport(core, 1);
}

std::optional<long long> star_power_membership(const StarPresentation& p,
                                               const StarForm& w, const StarForm& b,
                                               long long m) {
  if (b == star_identity()) throw TrivialWordError();
  if (w == star_identity()) return 0;
  long long bound = tll(w) + 2;
  for (long long k = 1; k <= bound; ++k) {
    for (long long s : {k, -k}) {
      if (star_power(p, b, m * s) == w) return s;
    }
  }
  return std::nullopt;
}

bool star_equiv_E2(const StarPresentation& p, long long m,
                   const std::pair<StarForm, StarForm>& p1,
                   const std::pair<StarForm, StarForm>& p2) {
  if (!std::holds_alternative<CyclicA>(p.regime)) {
    return equiv_E2(m, {word_of_form(p, p1.first), word_of_form(p, p1.second)},
                    {word_of_form(p, p2.first), word_of_form(p, p2.second)});
  }
  const auto& [g1, h1] = p1;
  const auto& [g2, h2] = p2;
  bool t1 = h1 == star_identity(), t2 = h2 == star_identity();
  if (t1 != t2) return false;
  if (t1) return true;
  // commutative transitive: C(h1) = C(h2) iff [h1,h2] = 1
  if (star_multiply(p, h1, h2) != star_multiply(p, h2, h1)) return false;
  StarForm b = star_primitive_root(p, h1).root;
  StarForm diff = star_multiply(p, star_invert(p, g1), g2);
  return star_power_membership(p, diff, b, m).has_value();
}

bool star_equiv_E3(const StarPresentation& p, long long m, long long n,
                   const StarTriple& t1, const StarTriple& t2) {
  if (!std::holds_alternative<CyclicA>(p.regime)) {
    Triple w1{word_of_form(p, t1.a), word_of_form(p, t1.b), word_of_form(p, t1.c)};
    Triple w2{word_of_form(p, t2.a), word_of_form(p, t2.b), word_of_form(p, t2.c)};
    return equiv_E3(m, n, w1, w2);
  }
  bool dl1 = t1.a == star_identity(), dl2 = t2.a == star_identity();
  bool dr1 = t1.c == star_identity(), dr2 = t2.c == star_identity();
  if (dl1 != dl2 || dr1 != dr2) return false;
  if (dl1 || dr1) return true;
  if (star_multiply(p, t1.a, t2.a) != star_multiply(p, t2.a, t1.a)) return false;
  if (star_multiply(p, t1.c, t2.c) != star_multiply(p, t2.c, t1.c)) return false;
  StarForm ra = star_primitive_root(p, t1.a).root;
  StarForm rc = star_primitive_root(p, t1.c).root;
  long long bi =
      (tll(t1.b) + tll(t2.b)) / std::max<long long>(1, m * std::max<long long>(1, tll(ra))) + 2;
  long long bj =
      (tll(t1.b) + tll(t2.b)) / std::max<long long>(1, n * std::max<long long>(1, tll(rc))) + 2;
  for (long long i = -bi; i <= bi; ++i) {
    StarForm left = star_multiply(p, star_power(p, ra, m * i), t1.b);
    for (long long j = -bj; j <= bj; ++j) {
      if (star_multiply(p, left, star_power(p, rc, n * j)) == t2.b) return true;
    }
  }
  return false;
}

namespace {

template <typename EquivFn, typename T>
int count_classes(const std::vector<T>& items, EquivFn&& equiv) {
  std::vector<T> reps;
  for (const T& it : items) {
    bool found = false;
    for (const T& r : reps)
      if (equiv(r, it)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(it);
  }
  return static_cast<int>(reps.size());
}

}  // namespace

int orbit_class_count_conjugacy(const StarPresentation& p, const StarForm& g,
                                const std::vector<Perm>& perms) {
  std::vector<StarForm> images;
  for (const Perm& s : perms) images.push_back(permute_rays(p, s, g));
  return count_classes(images, [&](const StarForm& a, const StarForm& b) {
    return star_conjugate_test(p, a, b);
  });
}

int orbit_class_count_coset(const StarPresentation& p, long long m,
                            const std::pair<StarForm, StarForm>& pair,
                            const std::vector<Perm>& perms) {
  std::vector<std::pair<StarForm, StarForm>> images;
  for (const Perm& s : perms)
    images.push_back({permute_rays(p, s, pair.first), permute_rays(p, s, pair.second)});
  return count_classes(images, [&](const auto& a, const auto& b) {
    return star_equiv_E2(p, m, a, b);
  });
}

int orbit_class_count_double_coset(const StarPresentation& p, long long q,
                                   long long k, const StarTriple& triple,
                                   const std::vector<Perm>& perms) {
  std::vector<StarTriple> images;
  for (const Perm& s : perms)
    images.push_back({permute_rays(p, s, triple.a), permute_rays(p, s, triple.b),
                      permute_rays(p, s, triple.c)});
  return count_classes(images, [&](const StarTriple& a, const StarTriple& b) {
    return star_equiv_E3(p, q, k, a, b);
  });
}

std::string print_star_form(const StarForm& x) {
  std::string out = "[A: " + print_word(x.a_prefix) + "]";
  for (const auto& s : x.syllables)
    out += " (r" + std::to_string(s.ray) + ": " + print_word(s.elem) + ")";
  return out;
}

}  // namespace fgstar
