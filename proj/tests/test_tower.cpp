#include <doctest.h>

#include <algorithm>

#include "fgstar/rng.hpp"
#include "fgstar/tower.hpp"

using namespace fgstar;

namespace {

TowerSpec example_tower() {
  return {2, {AbelianFloor{parse_word("a a b b b"), 1}}};
}

SurfaceFloor torus_floor() {
  // genus-1 orientable surface with one boundary glued to [a,b]^-1's image
  return {1, true, 1, {parse_word("B A b a")}, {parse_word("a"), parse_word("b")}};
}

bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
  return std::any_of(v.begin(), v.end(),
                     [&](const Violation& x) { return x.rule == rule; });
}

}  // namespace

TEST_CASE("validate_tower") {
  CHECK(validate_tower(example_tower()).empty());
  TowerSpec bad{2, {AbelianFloor{parse_word("a a"), 1}}};
  CHECK(has_rule(validate_tower(bad), "NotMaximalAbelian"));
  TowerSpec exc{2, {SurfaceFloor{0, true, 3, {parse_word("a"), parse_word("b"), parse_word("a b")}, {}}}};
  CHECK(has_rule(validate_tower(exc), "ExceptionalSurface"));
  TowerSpec conj{2, {AbelianFloor{parse_word("a b"), 1}, AbelianFloor{parse_word("B a b b"), 1}}};
  CHECK(has_rule(validate_tower(conj), "ConjugatePegs"));
  TowerSpec low{1, {}};
  CHECK(has_rule(validate_tower(low), "GroundRank"));
  TowerSpec scope{2, {AbelianFloor{parse_word("c"), 1}}};
  CHECK(has_rule(validate_tower(scope), "PegScope"));
}

TEST_CASE("validate_tower checks the retraction data") {
  TowerSpec good{2, {torus_floor()}};
  auto rep = validate_tower_report(good);
  CHECK(rep.violations.empty());

  // surface floor without retraction images is flagged unchecked
  TowerSpec no_images{2, {SurfaceFloor{1, true, 1, {parse_word("B A b a")}, {}}}};
  auto rep2 = validate_tower_report(no_images);
  CHECK(rep2.violations.empty());
  CHECK_FALSE(rep2.unchecked.empty());

  // images not matching the gluing words
  TowerSpec broken{2, {SurfaceFloor{1, true, 1, {parse_word("a")}, {parse_word("a"), parse_word("b")}}}};
  CHECK(has_rule(validate_tower(broken), "RetractionNotHomomorphism"));

  // commuting images: 4-holed sphere retracting onto powers of a
  TowerSpec abelian_img{
      2,
      {SurfaceFloor{0, true, 4,
                    {parse_word("a"), parse_word("a"), parse_word("a"), parse_word("A A A")},
                    {parse_word("a"), parse_word("a"), parse_word("a")}}}};
  CHECK(has_rule(validate_tower(abelian_img), "AbelianRetractionImage"));
}

TEST_CASE("presentation_of") {
  Presentation p = presentation_of(example_tower());
  CHECK(p.generators == std::vector<std::string>{"a", "b", "z1"});
  REQUIRE(p.relators.size() == 1);
  Word peg = parse_word("a a b b b");
  Word z{3};
  CHECK(p.relators[0] ==
        multiply(multiply(invert(z), invert(peg)), multiply(z, peg)));

  Presentation bare = presentation_of({2, {}});
  CHECK(bare.generators.size() == 2);
  CHECK(bare.relators.empty());

  Presentation r2 = presentation_of({2, {AbelianFloor{parse_word("a b"), 2}}});
  CHECK(r2.generators == std::vector<std::string>{"a", "b", "z1", "z2"});
  CHECK(r2.relators.size() == 3);  // [z1,peg], [z1,z2], [z2,peg]

  CHECK_THROWS_AS(presentation_of({2, {AbelianFloor{parse_word("a a"), 1}}}),
                  InvalidTowerError);
}

TEST_CASE("abelian_pouch") {
  Presentation full = presentation_of(example_tower());
  Presentation pouch = abelian_pouch(example_tower());
  CHECK(pouch.generators == full.generators);
  CHECK(pouch.relators == full.relators);

  TowerSpec above{2, {torus_floor(), AbelianFloor{Word{3}, 1}}};
  Presentation p = abelian_pouch(above);
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  CHECK(p.relators.empty());

  TowerSpec two{2, {AbelianFloor{parse_word("a a b b b"), 1}, AbelianFloor{parse_word("a b"), 1}}};
  Presentation pp = abelian_pouch(two);
  CHECK(pp.generators.size() == 4);
  CHECK(pp.relators.size() == 2);  // no cross relators between the z-families
}

TEST_CASE("multiplet floor counts") {
  TowerSpec m3 = multiplet(example_tower(), 3);
  REQUIRE(m3.floors.size() == 1);
  CHECK(std::get<AbelianFloor>(m3.floors[0]).rank == 3);

  TowerSpec hyp{2, {torus_floor(), AbelianFloor{Word{3}, 1}}};
  CHECK(multiplet(hyp, 2).floors.size() == 4);

  CHECK_THROWS(multiplet(example_tower(), 1));
  CHECK_THROWS_AS(multiplet({2, {}}, 2), UnsupportedTowerShapeError);
}

TEST_CASE("multiplet floor-count formulas over generated shapes") {
  std::vector<Word> ground_pegs{parse_word("a b"), parse_word("a b b"),
                                parse_word("a b b b"), parse_word("a b b b b"),
                                parse_word("a b b b b b")};
  for (int m = 1; m <= 5; ++m) {
    for (int n = 0; n <= m; ++n) {
      TowerSpec t{2, {}};
      for (int i = 0; i < n; ++i) t.floors.push_back(AbelianFloor{ground_pegs[i], 1});
      for (int i = n; i < m; ++i) {
        if (i == n)
          t.floors.push_back(torus_floor());
        else
          t.floors.push_back(AbelianFloor{Word{2 + n + 1}, 1});
      }
      REQUIRE(validate_tower(t).empty());
      CHECK(ground_peg_count(t) == n);
      for (int N = 2; N <= 6; ++N) {
        size_t got = multiplet(t, N).floors.size();
        size_t expect = n == 0 ? static_cast<size_t>(m) * N
                               : static_cast<size_t>(m + (m - n) * (N - 1));
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("pouch of a multiplet is the rank-inflated pouch") {
  for (int N = 2; N <= 4; ++N) {
    TowerSpec t = example_tower();
    Presentation a = abelian_pouch(multiplet(t, N));
    TowerSpec inflated = t;
    std::get<AbelianFloor>(inflated.floors[0]).rank *= N;
    Presentation b = abelian_pouch(inflated);
    CHECK(a.generators == b.generators);
    CHECK(a.relators == b.relators);
  }
}

TEST_CASE("star_view") {
  TowerSpec m2 = multiplet(example_tower(), 2);
  StarPresentation sp = star_view(m2, 2);
  CHECK(sp.n_rays == 2);
  CHECK(sp.regime == AmalgamRegime{CyclicA{parse_word("a a b b b")}});

  TowerSpec hyp{2, {torus_floor()}};
  StarPresentation sf = star_view(multiplet(hyp, 3), 3);
  CHECK(sf.n_rays == 3);
  CHECK(sf.regime == AmalgamRegime{FreeFactorA{2}});
  CHECK(sf.factor_rank == 4);

  CHECK_THROWS_AS(star_view({2, {}}, 2), UnsupportedTowerShapeError);
  CHECK_THROWS_AS(star_view(m2, 3), UnsupportedTowerShapeError);  // rank 2 floor, 3 rays
}

TEST_CASE("integer linear kernels") {
  CHECK(determinant({{2, 0}, {0, 3}}) == 6);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(determinant({{4}}) == 4);
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{1, 0}, {0, 1}}) == 2);

  auto s = solve_integer_linear({{2, 0}, {0, 3}}, {4, 9});
  REQUIRE(s.has_value());
  CHECK(*s == IntVector{2, 3});
  CHECK_FALSE(solve_integer_linear({{2, 0}, {0, 3}}, {1, 0}).has_value());
  CHECK(solve_integer_linear({{1, 0}, {0, 1}}, {7, -5}) == IntVector{7, -5});
  CHECK_THROWS_AS(solve_integer_linear({{1, 2}, {2, 4}}, {1, 1}), SingularMatrixError);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  for (int t = 0; t < 200; ++t) {
    auto rng = trial_rng(73, static_cast<uint64_t>(t));
    size_t n = 1 + rng() % 3;
    IntMatrix m(n, IntVector(n));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<long long>(rng() % 11) - 5;
    long long ref = 0;
    if (n == 1) {
      ref = m[0][0];
    } else if (n == 2) {
      ref = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    } else {
      ref = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
    CHECK(determinant(m) == ref);
  }
}

TEST_CASE("closure_apply") {
  ClosureSpec ex{{FloorClosure{{1}, {{4}}}}};
  Presentation p = closure_apply(example_tower(), ex);
  CHECK(p.generators == std::vector<std::string>{"a", "b", "z1", "a1"});
  // identification relator z1^-1 * peg * a1^4 present
  Word peg = parse_word("a a b b b");
  Word ident = multiply(invert(Word{3}), multiply(peg, power(Word{4}, 4)));
  CHECK(std::find(p.relators.begin(), p.relators.end(), ident) != p.relators.end());

  ClosureSpec id{{FloorClosure{{0}, {{1}}}}};
  Presentation q = closure_apply(example_tower(), id);
  CHECK(abelianization_rank(q) == abelianization_rank(presentation_of(example_tower())));

  TowerSpec r2{2, {AbelianFloor{parse_word("a b"), 2}}};
  ClosureSpec d23{{FloorClosure{{0, 0}, {{2, 0}, {0, 3}}}}};
  CHECK_NOTHROW(closure_apply(r2, d23));

  CHECK_THROWS_AS(closure_apply(example_tower(), ClosureSpec{}), FloorMismatchError);
  CHECK_THROWS_AS(closure_apply(example_tower(), ClosureSpec{{FloorClosure{{1}, {{0}}}}}),
                  SingularClosureError);
  CHECK_THROWS_AS(closure_apply(example_tower(), ClosureSpec{{FloorClosure{{1, 2}, {{4}}}}}),
                  DimensionMismatchError);
}

TEST_CASE("morphism_extends reproduces the mod-4 example") {
  FloorClosure fc{{1}, {{4}}};
  auto w = morphism_extends(fc, {5});
  REQUIRE(w.has_value());
  CHECK(*w == IntVector{1});
  CHECK_FALSE(morphism_extends(fc, {6}).has_value());
  CHECK(morphism_extends(fc, {1}) == IntVector{0});
  for (long long t = -50; t <= 50; ++t) {
    bool expect = ((t - 1) % 4 + 4) % 4 == 0;
    CHECK(morphism_extends(fc, {t}).has_value() == expect);
  }
}

TEST_CASE("morphism_extends agrees with brute force") {
  for (int trial = 0; trial < 200; ++trial) {
    auto rng = trial_rng(79, static_cast<uint64_t>(trial));
    size_t m = 1 + rng() % 2;
    FloorClosure fc;
    do {
      fc.m.assign(m, IntVector(m));
      for (auto& row : fc.m)
        for (auto& v : row) v = static_cast<long long>(rng() % 11) - 5;
    } while (determinant(fc.m) == 0);
    fc.c.resize(m);
    for (auto& v : fc.c) v = static_cast<long long>(rng() % 11) - 5;
    IntVector t(m);
    for (auto& v : t) v = static_cast<long long>(rng() % 11) - 5;

    bool brute = false;
    IntVector s(m, -20);
    while (true) {
      IntVector img = fc.c;
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) img[i] += fc.m[i][j] * s[j];
      if (img == t) {
        brute = true;
        break;
      }
      size_t k = 0;
      while (k < m && s[k] == 20) s[k++] = -20;
      if (k == m) break;
      ++s[k];
    }
    auto w = morphism_extends(fc, t);
    if (brute) CHECK(w.has_value());
    if (w.has_value()) {
      IntVector img = fc.c;
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) img[i] += fc.m[i][j] * (*w)[j];
      CHECK(img == t);
      // a witness inside the search box must be found by the brute force
      bool in_box = std::all_of(w->begin(), w->end(),
                                [](long long v) { return -20 <= v && v <= 20; });
      if (in_box) CHECK(brute);
    }
  }
}

TEST_CASE("extension set is the coset c + M Z^m") {
  FloorClosure fc{{2, -1}, {{3, 1}, {0, 2}}};
  auto rng = trial_rng(83, 0);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector s{static_cast<long long>(rng() % 9) - 4,
                static_cast<long long>(rng() % 9) - 4};
    IntVector in_coset = fc.c;
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) in_coset[i] += fc.m[i][j] * s[j];
    auto w = morphism_extends(fc, in_coset);
    REQUIRE(w.has_value());
    CHECK(*w == s);
  }
}

TEST_CASE("JSON round trip") {
  TowerSpec t{2, {AbelianFloor{parse_word("a a b b b"), 1}, torus_floor()}};
  CHECK(tower_from_json(tower_to_json(t)) == t);

  ClosureSpec c = closure_from_json(
      R"({"format": 1, "floors": [{"c": [1], "M": [[4]]}]})");
  REQUIRE(c.floors.size() == 1);
  CHECK(c.floors[0].c == IntVector{1});
  CHECK(c.floors[0].m == IntMatrix{{4}});

  CHECK_THROWS(tower_from_json(R"({"format": 2, "ground_rank": 2})"));
}

TEST_CASE("print_presentation") {
  CHECK(print_presentation(presentation_of({2, {}})) == "< a, b | >");
}
