// Stars of groups with free-group factors: amalgam normal forms, cyclic
// forms, conjugacy, ray permutations, and orbit-class counting.
//
// Supported amalgam regimes: trivial (free product), a shared free factor,
// and a cyclic peg <u> with u not a proper power.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fgstar/word.hpp"

namespace fgstar {

struct InvalidRayError : std::runtime_error {
  InvalidRayError() : std::runtime_error("ray index out of range") {}
};
struct RankMismatchError : std::runtime_error {
  RankMismatchError() : std::runtime_error("factor element exceeds factor rank") {}
};
struct PresentationMismatchError : std::runtime_error {
  PresentationMismatchError() : std::runtime_error("star presentations differ") {}
};
struct NotIsomorphicStarError : std::runtime_error {
  NotIsomorphicStarError() : std::runtime_error("star is not marked isomorphic") {}
};
struct ZeroLengthError : std::runtime_error {
  ZeroLengthError() : std::runtime_error("length-0 form has no factor signature") {}
};
struct UnsupportedRegimeError : std::runtime_error {
  UnsupportedRegimeError() : std::runtime_error("unsupported amalgam regime") {}
};
struct TooFewRaysError : std::runtime_error {
  TooFewRaysError() : std::runtime_error("need at least 4 rays") {}
};

struct TrivialA {
  bool operator==(const TrivialA&) const = default;
};
struct FreeFactorA {
  int shared_rank;
  bool operator==(const FreeFactorA&) const = default;
};
struct CyclicA {
  Word peg;  // not a proper power, in factor generators
  bool operator==(const CyclicA&) const = default;
};
using AmalgamRegime = std::variant<TrivialA, FreeFactorA, CyclicA>;

struct StarPresentation {
  int n_rays;
  int factor_rank;
  AmalgamRegime regime;
  bool isomorphic = true;
  bool operator==(const StarPresentation&) const = default;
};

// Throws on invariant violations (peg a proper power, shared_rank >= rank, ...).
void validate_presentation(const StarPresentation& p);

struct StarLetter {
  int ray;
  Word elem;
  bool operator==(const StarLetter&) const = default;
};

// Canonical amalgam normal form: a_prefix in A, each syllable the canonical
// right-coset transversal representative outside A, adjacent rays distinct.
// Equal group elements have structurally equal forms.
struct StarForm {
  Word a_prefix;
  std::vector<StarLetter> syllables;
  bool operator==(const StarForm&) const = default;
  size_t length() const { return syllables.size(); }
};

StarForm star_reduce(const StarPresentation& p, const std::vector<StarLetter>& raw);
StarForm star_identity();

StarForm star_multiply(const StarPresentation& p, const StarForm& x, const StarForm& y);
StarForm star_invert(const StarPresentation& p, const StarForm& x);
StarForm star_power(const StarPresentation& p, const StarForm& x, long long k);

bool is_star_cyclically_reduced(const StarForm& x);

struct StarCyclicReduction {
  StarForm core;        // cyclically reduced
  StarForm conjugator;  // x = conjugator^-1 * core * conjugator
};
StarCyclicReduction star_cyclic_reduce(const StarPresentation& p, const StarForm& x);

// Syllable ray sequence; conjugacy invariant up to rotation for L >= 2.
std::vector<int> factor_signature(const StarForm& x);
bool signatures_equal_up_to_rotation(const std::vector<int>& s1,
                                     const std::vector<int>& s2);

bool star_conjugate_test(const StarPresentation& p, const StarForm& x,
                         const StarForm& y);

// Permutations are 1-based image vectors of size n_rays.
using Perm = std::vector<int>;
Perm identity_perm(int n);
Perm transposition(int n, int i, int j);
Perm compose(const Perm& s, const Perm& t);  // (s*t)(i) = s(t(i))

StarForm permute_rays(const StarPresentation& p, const Perm& sigma, const StarForm& x);

// Permutation families used by the orbit-count lower bounds.
std::vector<Perm> paired_transpositions(int n);                       // (1,2),(3,4),...
std::vector<Perm> missing_factor_transpositions(int n, int k);        // (i, k+j)
std::vector<Perm> center_double_transpositions(int n, int i, int j);  // (i,i')(j,j')
std::vector<Perm> star_transpositions(int n, int i);                  // (i,j), j != i

// Rays of the two center syllables of a form with L >= 2.
std::pair<int, int> center_rays(const StarForm& h);

// Embedding into the ambient free group (TrivialA / FreeFactorA only).
int ambient_rank(const StarPresentation& p);
Word word_of_form(const StarPresentation& p, const StarForm& x);

struct StarRoot {
  StarForm root;
  long long exponent;
};
StarRoot star_primitive_root(const StarPresentation& p, const StarForm& x);

std::optional<long long> star_power_membership(const StarPresentation& p,
                                               const StarForm& w, const StarForm& b,
                                               long long m);

// E2_m / E3_{m,n} evaluated inside the star group.
bool star_equiv_E2(const StarPresentation& p, long long m,
                   const std::pair<StarForm, StarForm>& p1,
                   const std::pair<StarForm, StarForm>& p2);
struct StarTriple {
  StarForm a, b, c;
};
bool star_equiv_E3(const StarPresentation& p, long long m, long long n,
                   const StarTriple& t1, const StarTriple& t2);

int orbit_class_count_conjugacy(const StarPresentation& p, const StarForm& g,
                                const std::vector<Perm>& perms);
int orbit_class_count_coset(const StarPresentation& p, long long m,
                            const std::pair<StarForm, StarForm>& pair,
                            const std::vector<Perm>& perms);
int orbit_class_count_double_coset(const StarPresentation& p, long long q,
                                   long long k, const StarTriple& triple,
                                   const std::vector<Perm>& perms);

std::string print_star_form(const StarForm& x);

}  // namespace fgstar
