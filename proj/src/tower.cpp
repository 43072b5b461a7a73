#include "fgstar/tower.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include <json.hpp>

namespace fgstar {

namespace {

bool is_ground_peg_floor(const TowerSpec& t, const FloorSpec& f) {
  const auto* ab = std::get_if<AbelianFloor>(&f);
  return ab && FreeGroup{t.ground_rank}.contains(ab->peg);
}

int surface_gen_count(const SurfaceFloor& s) {
  return (s.orientable ? 2 * s.genus : s.genus) + s.boundaries - 1;
}

int euler_characteristic(const SurfaceFloor& s) {
  return s.orientable ? 2 - 2 * s.genus - s.boundaries : 2 - s.genus - s.boundaries;
}

bool is_exceptional_surface(const SurfaceFloor& s) {
  if (s.orientable) return s.genus == 0 && s.boundaries == 3;  // thrice-punctured sphere
  // twice-punctured projective plane, once-punctured Klein bottle,
  // closed non-orientable surface of genus 3
  return (s.genus == 1 && s.boundaries == 2) || (s.genus == 2 && s.boundaries == 1) ||
         (s.genus == 3 && s.boundaries == 0);
}

Word commutator(const Word& x, const Word& y) {
  return multiply(multiply(invert(x), invert(y)), multiply(x, y));
}

Word shift_word(const Word& w, int offset) {
  Word out = w;
  for (Letter& l : out) l = l > 0 ? l + offset : l - offset;
  return out;
}

// Boundary words of the surface group in its own generators
// x1,y1,..,xg,yg,c1..c_{b-1} (orientable) or x1..xg,c1..c_{b-1}.
std::vector<Word> surface_boundary_words(const SurfaceFloor& s) {
  Word closed;  // product of commutators / squares
  int idx = 1;
  if (s.orientable) {
    for (int i = 0; i < s.genus; ++i) {
      Word x{idx}, y{idx + 1};
      closed = multiply(closed, commutator(x, y));
      idx += 2;
    }
  } else {
    for (int i = 0; i < s.genus; ++i) {
      closed = multiply(closed, Word{idx, idx});
      ++idx;
    }
  }
  std::vector<Word> out;
  Word tail;
  for (int j = 0; j < s.boundaries - 1; ++j) {
    out.push_back(Word{idx + j});
    tail = multiply(tail, Word{idx + j});
  }
  // last boundary closes the surface relation: closed * c1..c_{b-1} * last = 1
  out.push_back(invert(multiply(closed, tail)));
  return out;
}

int gens_before_floor(const TowerSpec& t, size_t floor_index) {
  int n = t.ground_rank;
  for (size_t i = 0; i < floor_index; ++i) {
    if (const auto* ab = std::get_if<AbelianFloor>(&t.floors[i]))
      n += ab->rank;
    else
      n += surface_gen_count(std::get<SurfaceFloor>(t.floors[i]));
  }
  return n;
}

std::string gen_name(int idx) { return print_word(Word{idx}); }

}  // namespace

int ground_peg_count(const TowerSpec& t) {
  int n = 0;
  for (const auto& f : t.floors)
    if (is_ground_peg_floor(t, f)) ++n;
  return n;
}

TowerReport validate_tower_report(const TowerSpec& t) {
  TowerReport rep;
  auto add = [&](int floor, const std::string& rule, const std::string& msg) {
    rep.violations.push_back({floor, rule, msg});
  };
  if (t.ground_rank < 2) add(0, "GroundRank", "ground rank must be at least 2");

  std::vector<Word> ground_peg_roots;
  bool seen_non_ground = false;
  for (size_t i = 0; i < t.floors.size(); ++i) {
    int floor_no = static_cast<int>(i) + 1;
    int base_gens = gens_before_floor(t, i);
    if (const auto* ab = std::get_if<AbelianFloor>(&t.floors[i])) {
      if (ab->rank < 1) add(floor_no, "AbelianRank", "abelian floor rank must be positive");
      if (ab->peg.empty() || !is_reduced(ab->peg)) {
        add(floor_no, "BadPeg", "peg must be a nonempty reduced word");
        continue;
      }
      if (!FreeGroup{base_gens}.contains(ab->peg)) {
        add(floor_no, "PegScope", "peg uses generators not yet constructed");
        continue;
      }
      bool ground = FreeGroup{t.ground_rank}.contains(ab->peg);
      if (ground) {
        if (primitive_root(ab->peg).exponent != 1)
          add(floor_no, "NotMaximalAbelian", "peg is a proper power");
        if (seen_non_ground)
          add(floor_no, "GroundPegsNotFirst",
              "ground-floor pegs must come before all other floors");
        Word root = centralizer_generator(ab->peg);
        for (const Word& other : ground_peg_roots)
          if (is_conjugate_free(root, other) || is_conjugate_free(root, invert(other)))
            add(floor_no, "ConjugatePegs", "two pegs are conjugate");
        ground_peg_roots.push_back(root);
      } else {
        seen_non_ground = true;
        rep.unchecked.push_back("floor " + std::to_string(floor_no) +
                                ": peg lies above the ground floor; maximal-abelian and "
                                "conjugacy conditions not checked");
      }
    } else {
      seen_non_ground = true;
      const auto& s = std::get<SurfaceFloor>(t.floors[i]);
      if (s.boundaries < 1) add(floor_no, "Boundaries", "surface floor needs a boundary");
      if (euler_characteristic(s) >= 0)
        add(floor_no, "EulerCharacteristic", "surface must have negative Euler characteristic");
      if (is_exceptional_surface(s))
        add(floor_no, "ExceptionalSurface", "surface is one of the four exceptional ones");
      if (static_cast<int>(s.gluing.size()) != s.boundaries)
        add(floor_no, "GluingCount", "one gluing word per boundary required");
      for (const Word& g : s.gluing)
        if (g.empty() || !FreeGroup{base_gens}.contains(g))
          add(floor_no, "GluingScope", "gluing word empty or out of scope");
      if (!s.retraction_images.empty()) {
        int sg = surface_gen_count(s);
        if (static_cast<int>(s.retraction_images.size()) != sg) {
          add(floor_no, "RetractionArity", "one image per surface generator required");
        } else if (static_cast<int>(s.gluing.size()) == s.boundaries) {
          std::map<int, Word> images;
          for (int k = 0; k < sg; ++k) images[k + 1] = s.retraction_images[k];
          auto boundaries = surface_boundary_words(s);
          for (int j = 0; j < s.boundaries; ++j) {
            if (substitute(boundaries[j], images) != s.gluing[j]) {
              add(floor_no, "RetractionNotHomomorphism",
                  "retraction images do not respect boundary gluing");
              break;
            }
          }
          bool noncomm = false;
          for (size_t a = 0; a < images.size() && !noncomm; ++a)
            for (size_t b = a + 1; b <= images.size() && !noncomm; ++b)
              if (multiply(images[static_cast<int>(a) + 1], images[static_cast<int>(b)]) !=
                  multiply(images[static_cast<int>(b)], images[static_cast<int>(a) + 1]))
                noncomm = true;
          if (!noncomm)
            add(floor_no, "AbelianRetractionImage",
                "retraction images pairwise commute; central image would be abelian");
        }
      } else {
        rep.unchecked.push_back("floor " + std::to_string(floor_no) +
                                ": no retraction images supplied; retraction not checked");
      }
    }
  }
  return rep;
}

std::vector<Violation> validate_tower(const TowerSpec& t) {
  return validate_tower_report(t).violations;
}

namespace {

void require_valid(const TowerSpec& t) {
  auto v = validate_tower(t);
  if (!v.empty()) throw InvalidTowerError(v.front().rule + ": " + v.front().message);
}

void append_floor_presentation(Presentation& pres, const FloorSpec& f) {
  int base = static_cast<int>(pres.generators.size());
  if (const auto* ab = std::get_if<AbelianFloor>(&f)) {
    static const char* kZ = "z";
    int first = base + 1;
    for (int j = 0; j < ab->rank; ++j) {
      int count_z = 0;
      for (const auto& g : pres.generators)
        if (g.size() > 1 && g[0] == 'z') ++count_z;
      pres.generators.push_back(std::string(kZ) + std::to_string(count_z + 1));
    }
    for (int j = 0; j < ab->rank; ++j) {
      pres.relators.push_back(commutator(Word{first + j}, ab->peg));
      for (int k = j + 1; k < ab->rank; ++k)
        pres.relators.push_back(commutator(Word{first + j}, Word{first + k}));
    }
  } else {
    const auto& s = std::get<SurfaceFloor>(f);
    int sg = surface_gen_count(s);
    int count_d = 0;
    for (const auto& g : pres.generators)
      if (g.size() > 1 && g[0] == 'd') ++count_d;
    for (int j = 0; j < sg; ++j)
      pres.generators.push_back("d" + std::to_string(count_d + j + 1));
    auto boundaries = surface_boundary_words(s);
    for (int j = 0; j < s.boundaries; ++j) {
      Word rel = multiply(shift_word(boundaries[j], base), invert(s.gluing[j]));
      if (!rel.empty()) pres.relators.push_back(rel);
    }
  }
}

Presentation ground_presentation(const TowerSpec& t) {
  Presentation pres;
  for (int i = 1; i <= t.ground_rank; ++i) pres.generators.push_back(gen_name(i));
  return pres;
}

}  // namespace

Presentation presentation_of(const TowerSpec& t) {
  require_valid(t);
  Presentation pres = ground_presentation(t);
  for (const auto& f : t.floors) append_floor_presentation(pres, f);
  return pres;
}

Presentation abelian_pouch(const TowerSpec& t) {
  require_valid(t);
  Presentation pres = ground_presentation(t);
  for (const auto& f : t.floors)
    if (is_ground_peg_floor(t, f)) append_floor_presentation(pres, f);
  return pres;
}

TowerSpec multiplet(const TowerSpec& t, int n) {
  if (n < 2) throw std::invalid_argument("multiplet needs N >= 2");
  require_valid(t);
  if (t.floors.empty()) throw UnsupportedTowerShapeError("multiplet of a floorless tower");
  int ground_pegs = ground_peg_count(t);
  TowerSpec out{t.ground_rank, {}};
  if (ground_pegs == 0) {
    for (int copy = 0; copy < n; ++copy)
      for (const auto& f : t.floors) out.floors.push_back(f);
    return out;
  }
  // Ground-peg abelian floors come first (validated); their ranks inflate N-fold,
  // the remaining floors are replicated.
  for (int i = 0; i < ground_pegs; ++i) {
    AbelianFloor ab = std::get<AbelianFloor>(t.floors[i]);
    ab.rank *= n;
    out.floors.push_back(ab);
  }
  for (int copy = 0; copy < n; ++copy)
    for (size_t i = ground_pegs; i < t.floors.size(); ++i)
      out.floors.push_back(t.floors[i]);
  return out;
}

StarPresentation star_view(const TowerSpec& t_multiplet, int n_rays) {
  if (n_rays < 2) throw std::invalid_argument("star view needs at least 2 rays");
  if (t_multiplet.floors.empty())
    throw UnsupportedTowerShapeError("star view of a floorless tower");
  int ground_pegs = ground_peg_count(t_multiplet);
  size_t m = t_multiplet.floors.size();
  if (ground_pegs == 0) {
    // N replicated branches over the ground free group.
    if (m % n_rays != 0)
      throw UnsupportedTowerShapeError("floor count not divisible by ray count");
    size_t period = m / n_rays;
    for (size_t i = period; i < m; ++i)
      if (!(t_multiplet.floors[i] == t_multiplet.floors[i % period]))
        throw UnsupportedTowerShapeError("floors are not N-periodic");
    int branch_gens = gens_before_floor(t_multiplet, period) - t_multiplet.ground_rank;
    if (branch_gens < 1) throw UnsupportedTowerShapeError("branch adds no generators");
    StarPresentation p{n_rays, t_multiplet.ground_rank + branch_gens,
                       FreeFactorA{t_multiplet.ground_rank}, true};
    validate_presentation(p);
    return p;
  }
  // Ground-pouch case with purely abelian replicated content: a single
  // rank-inflated peg floor, one ray per replicated summand.
  if (m == 1 && ground_pegs == 1) {
    const auto& ab = std::get<AbelianFloor>(t_multiplet.floors[0]);
    if (ab.rank % n_rays != 0)
      throw UnsupportedTowerShapeError("floor rank not divisible by ray count");
    StarPresentation p{n_rays, t_multiplet.ground_rank, CyclicA{ab.peg}, true};
    validate_presentation(p);
    return p;
  }
  throw UnsupportedTowerShapeError("mixed ground-peg towers are not star-viewable");
}

Presentation closure_apply(const TowerSpec& t, const ClosureSpec& spec) {
  require_valid(t);
  std::vector<std::pair<size_t, const AbelianFloor*>> abelian;
  for (size_t i = 0; i < t.floors.size(); ++i)
    if (const auto* ab = std::get_if<AbelianFloor>(&t.floors[i]))
      abelian.push_back({i, ab});
  if (abelian.size() != spec.floors.size()) throw FloorMismatchError();

  Presentation pres = presentation_of(t);
  int a_counter = 0;
  for (size_t fi = 0; fi < abelian.size(); ++fi) {
    const AbelianFloor& ab = *abelian[fi].second;
    const FloorClosure& fc = spec.floors[fi];
    int m = ab.rank;
    if (static_cast<int>(fc.c.size()) != m || static_cast<int>(fc.m.size()) != m)
      throw DimensionMismatchError();
    for (const auto& row : fc.m)
      if (static_cast<int>(row.size()) != m) throw DimensionMismatchError();
    if (determinant(fc.m) == 0) throw SingularClosureError();

    int z_first = gens_before_floor(t, abelian[fi].first) + 1;
    int a_first = static_cast<int>(pres.generators.size()) + 1;
    for (int k = 0; k < m; ++k)
      pres.generators.push_back("a" + std::to_string(++a_counter));
    for (int k = 0; k < m; ++k) {
      Word ak{a_first + k};
      pres.relators.push_back(commutator(ak, ab.peg));
      for (int l = k + 1; l < m; ++l)
        pres.relators.push_back(commutator(ak, Word{a_first + l}));
      for (int j = 0; j < m; ++j)
        pres.relators.push_back(commutator(ak, Word{z_first + j}));
    }
    // identification: z_j = peg^c_j * prod_k a_k^M_{jk}
    for (int j = 0; j < m; ++j) {
      Word rhs = power(ab.peg, fc.c[j]);
      for (int k = 0; k < m; ++k)
        rhs = multiply(rhs, power(Word{a_first + k}, fc.m[j][k]));
      Word rel = multiply(invert(Word{z_first + j}), rhs);
      if (!rel.empty()) pres.relators.push_back(rel);
    }
  }
  return pres;
}

std::optional<IntVector> morphism_extends(const FloorClosure& fc, const IntVector& t) {
  size_t m = fc.m.size();
  if (fc.c.size() != m || t.size() != m) throw DimensionMismatchError();
  for (const auto& row : fc.m)
    if (row.size() != m) throw DimensionMismatchError();
  long long det;
  try {
    det = determinant(fc.m);
  } catch (const std::invalid_argument&) {
    throw DimensionMismatchError();
  }
  if (det == 0) throw SingularClosureError();
  IntVector rhs(m);
  for (size_t i = 0; i < m; ++i) rhs[i] = t[i] - fc.c[i];
  return solve_integer_linear(fc.m, rhs);
}

int abelianization_rank(const Presentation& p) {
  IntMatrix mat;
  for (const Word& rel : p.relators) {
    IntVector row(p.generators.size(), 0);
    for (Letter l : rel) row[static_cast<size_t>(std::abs(l)) - 1] += l > 0 ? 1 : -1;
    mat.push_back(row);
  }
  if (mat.empty()) return static_cast<int>(p.generators.size());
  return static_cast<int>(p.generators.size()) - matrix_rank(mat);
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ", ";
    os << p.generators[i];
  }
  os << " |";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    os << (i ? ", " : " ");
    os << print_word(p.relators[i]);
  }
  os << " >";
  return os.str();
}

// --- JSON ------------------------------------------------------------------

std::string tower_to_json(const TowerSpec& t) {
  nlohmann::json j;
  j["format"] = 1;
  j["ground_rank"] = t.ground_rank;
  j["floors"] = nlohmann::json::array();
  for (const auto& f : t.floors) {
    nlohmann::json jf;
    if (const auto* ab = std::get_if<AbelianFloor>(&f)) {
      jf["type"] = "abelian";
      jf["peg"] = print_word(ab->peg);
      jf["rank"] = ab->rank;
    } else {
      const auto& s = std::get<SurfaceFloor>(f);
      jf["type"] = "surface";
      jf["genus"] = s.genus;
      jf["orientable"] = s.orientable;
      jf["boundaries"] = s.boundaries;
      for (const auto& g : s.gluing) jf["gluing"].push_back(print_word(g));
      for (const auto& r : s.retraction_images)
        jf["retraction_images"].push_back(print_word(r));
    }
    j["floors"].push_back(jf);
  }
  return j.dump(2);
}

TowerSpec tower_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("format", 0) != 1) throw std::invalid_argument("unsupported tower format");
  TowerSpec t;
  t.ground_rank = j.at("ground_rank").get<int>();
  for (const auto& jf : j.value("floors", nlohmann::json::array())) {
    std::string type = jf.at("type").get<std::string>();
    if (type == "abelian") {
      t.floors.push_back(AbelianFloor{parse_word(jf.at("peg").get<std::string>()),
                                      jf.at("rank").get<int>()});
    } else if (type == "surface") {
      SurfaceFloor s;
      s.genus = jf.at("genus").get<int>();
      s.orientable = jf.at("orientable").get<bool>();
      s.boundaries = jf.at("boundaries").get<int>();
      for (const auto& g : jf.value("gluing", nlohmann::json::array()))
        s.gluing.push_back(parse_word(g.get<std::string>()));
      for (const auto& r : jf.value("retraction_images", nlohmann::json::array()))
        s.retraction_images.push_back(parse_word(r.get<std::string>()));
      t.floors.push_back(s);
    } else {
      throw std::invalid_argument("unknown floor type: " + type);
    }
  }
  return t;
}

ClosureSpec closure_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("format", 0) != 1) throw std::invalid_argument("unsupported closure format");
  ClosureSpec spec;
  for (const auto& jf : j.at("floors")) {
    FloorClosure fc;
    for (const auto& v : jf.at("c")) fc.c.push_back(v.get<long long>());
    for (const auto& row : jf.at("M")) {
      IntVector r;
      for (const auto& v : row) r.push_back(v.get<long long>());
      fc.m.push_back(r);
    }
    spec.floors.push_back(fc);
  }
  return spec;
}

}  // namespace fgstar
