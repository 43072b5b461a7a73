// fgstar: batch experiment runner for the group-theory toolkit.
//
// Exit codes: 0 = all checks pass, 1 = a check failed / verdict negative,
// 2 = usage or configuration error.

#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fgstar/imaginaries.hpp"
#include "fgstar/noncomm.hpp"
#include "fgstar/rng.hpp"
#include "fgstar/star.hpp"
#include "fgstar/tower.hpp"

using namespace fgstar;

namespace {

struct Output {
  std::string format = "csv";
  std::string path;

  void emit(const std::vector<std::string>& header,
            const std::vector<std::vector<std::string>>& rows) const {
    std::ostringstream os;
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json jr;
        for (size_t i = 0; i < header.size(); ++i) jr[header[i]] = row[i];
        j.push_back(jr);
      }
      os << j.dump(2) << "\n";
    } else {
      for (size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
      os << "\n";
      for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
      }
    }
    if (path.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(path);
      f << os.str();
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("cannot read file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

StarForm random_allray_form(std::mt19937_64& rng, const StarPresentation& p,
                            int max_len) {
  while (true) {
    std::vector<int> seq(p.n_rays);
    std::iota(seq.begin(), seq.end(), 1);
    std::shuffle(seq.begin(), seq.end(), rng);
    int extra = max_len > p.n_rays ? static_cast<int>(rng() % (max_len - p.n_rays + 1)) : 0;
    bool ok = true;
    for (int i = 0; i < extra; ++i) {
      int r = 1 + static_cast<int>(rng() % p.n_rays);
      if (r == seq.back()) {
        ok = false;
        break;
      }
      seq.push_back(r);
    }
    if (!ok || seq.front() == seq.back()) continue;
    std::vector<StarLetter> raw;
    for (int r : seq) {
      long long e = 1 + static_cast<long long>(rng() % 2);
      if (rng() % 2) e = -e;
      raw.push_back({r, power(Word{1}, e)});
    }
    StarForm f = star_reduce(p, raw);
    if (is_star_cyclically_reduced(f) && static_cast<int>(f.length()) >= p.n_rays)
      return f;
  }
}

int run_orbits(const std::string& lemma, int n_min, int n_max, int trials, int max_len,
               long long m, long long q, long long k, uint64_t seed, const Output& out) {
  std::vector<std::string> header{"lemma", "n", "trial", "observed", "bound", "pass"};
  std::vector<std::vector<std::string>> rows;
  bool violated = false;
  for (int n = n_min; n <= n_max; ++n) {
    StarPresentation p{n, 1, TrivialA{}, true};
    for (int trial = 0; trial < trials; ++trial) {
      auto rng = trial_rng(seed, static_cast<uint64_t>(n) * 1000003 + trial);
      int observed = 0;
      int bound = 0;
      if (lemma == "conjugacy") {
        StarForm g = random_allray_form(rng, p, max_len);
        observed = orbit_class_count_conjugacy(p, g, paired_transpositions(n));
        bound = (n / 2 + 1) / 2;
      } else if (lemma == "coset") {
        StarForm h = random_allray_form(rng, p, max_len);
        StarForm g = random_allray_form(rng, p, max_len);
        auto [i, j] = center_rays(h);
        observed = orbit_class_count_coset(p, m, {g, h}, center_double_transpositions(n, i, j));
        bound = (n - 2) / 2;
      } else {
        StarForm u = random_allray_form(rng, p, max_len);
        StarForm g = random_allray_form(rng, p, max_len);
        StarForm h = random_allray_form(rng, p, max_len);
        auto [i, j] = center_rays(g);
        observed = orbit_class_count_double_coset(p, q, k, {u, g, h},
                                                  center_double_transpositions(n, i, j));
        bound = (n - 2) / 2;
      }
      bool pass = observed >= bound;
      if (!pass) violated = true;
      rows.push_back({lemma, std::to_string(n), std::to_string(trial),
                      std::to_string(observed), std::to_string(bound),
                      pass ? "1" : "0"});
    }
  }
  out.emit(header, rows);
  return violated ? 1 : 0;
}

int run_noncomm(const Output& out) {
  std::vector<std::string> header{"scenario", "result", "detail"};
  std::vector<std::vector<std::string>> rows;
  bool violated = false;

  auto conc = noncommutativity_check({Word{1, 2}}, parse_word("c"), 4);
  rows.push_back({"concatenation", verdict_name(conc.verdict),
                  print_word(conc.value) + " vs " + print_word(conc.swapped_value)});
  if (conc.verdict != NoncommVerdict::FailsOnlyUpToConjugacy) violated = true;

  // symmetric candidate x*y*x^-1*y stays fixed under the swap
  auto sym = noncommutativity_check({Word{1, 2, -1, 2}}, parse_word("c c"), 4);
  rows.push_back({"symmetric-template", verdict_name(sym.verdict),
                  print_word(sym.value) + " vs " + print_word(sym.swapped_value)});

  std::map<int, Word> three{{1, parse_word("a")}, {2, parse_word("b")}, {3, parse_word("c")}};
  int classes = multi_summand_class_count(Word{1, 2, 3}, three,
                                          {identity_perm(3), transposition(3, 1, 2)});
  rows.push_back({"three-summands", std::to_string(classes), "classes under {id,(1 2)}"});
  if (classes < 2) violated = true;

  out.emit(header, rows);
  return violated ? 1 : 0;
}

int run_closure(const std::string& file, const std::vector<long long>& ts,
                const Output& out) {
  ClosureSpec spec = closure_from_json(read_file(file));
  if (spec.floors.size() != 1)
    throw CLI::ValidationError("closure report expects a single-floor spec");
  const FloorClosure& fc = spec.floors[0];
  std::vector<std::string> header{"t", "extends", "witness"};
  std::vector<std::vector<std::string>> rows;
  for (long long t : ts) {
    IntVector tv(fc.c.size(), t);
    auto w = morphism_extends(fc, tv);
    std::string witness = "no";
    if (w) {
      std::ostringstream os;
      for (size_t i = 0; i < w->size(); ++i) os << (i ? " " : "") << (*w)[i];
      witness = os.str();
    }
    rows.push_back({std::to_string(t), w ? "yes" : "no", witness});
  }
  out.emit(header, rows);
  return 0;
}

int run_tower(const std::string& action, const std::string& file, int n,
              bool check_count, const Output& out) {
  TowerSpec t = tower_from_json(read_file(file));
  if (action == "build") {
    TowerReport rep = validate_tower_report(t);
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : rep.violations)
      rows.push_back({"violation", std::to_string(v.floor), v.rule + ": " + v.message});
    for (const auto& u : rep.unchecked) rows.push_back({"unchecked", "", u});
    if (rows.empty()) rows.push_back({"ok", "", "tower is valid"});
    out.emit({"status", "floor", "message"}, rows);
    return rep.violations.empty() ? 0 : 1;
  }
  if (action == "describe") {
    std::cout << print_presentation(presentation_of(t)) << "\n";
    return 0;
  }
  if (action == "pouch") {
    std::cout << print_presentation(abelian_pouch(t)) << "\n";
    return 0;
  }
  if (action == "multiplet") {
    TowerSpec mt = multiplet(t, n);
    if (check_count) {
      int gp = ground_peg_count(t);
      size_t m = t.floors.size();
      size_t expect = gp == 0 ? m * n : m + (m - gp) * (n - 1);
      if (mt.floors.size() != expect) {
        std::cerr << "floor-count formula violated: got " << mt.floors.size()
                  << ", expected " << expect << "\n";
        return 1;
      }
    }
    std::cout << tower_to_json(mt) << "\n";
    return 0;
  }
  throw CLI::ValidationError("unknown tower action: " + action);
}

int run_equiv(const std::string& relation, const std::vector<std::string>& words,
              long long m, long long n) {
  auto need = [&](size_t k) {
    if (words.size() != k)
      throw CLI::ValidationError(relation + " needs " + std::to_string(k) + " words");
  };
  bool eq = false;
  std::string extra;
  if (relation == "E1") {
    need(2);
    eq = equiv_E1(parse_word(words[0]), parse_word(words[1]));
  } else if (relation == "E2") {
    need(4);
    eq = equiv_E2(m, {parse_word(words[0]), parse_word(words[1])},
                  {parse_word(words[2]), parse_word(words[3])});
  } else if (relation == "E3") {
    need(6);
    Triple t1{parse_word(words[0]), parse_word(words[1]), parse_word(words[2])};
    Triple t2{parse_word(words[3]), parse_word(words[4]), parse_word(words[5])};
    eq = equiv_E3(m, n, t1, t2);
    if (eq && !t1.a.empty() && !t1.c.empty()) {
      auto w = double_coset_witness(m, n, centralizer_generator(t1.a), t1.b,
                                    centralizer_generator(t1.c), t2.b);
      if (w)
        extra = " witness=(" + std::to_string(w->first) + "," +
                std::to_string(w->second) + ")";
    }
  } else {
    throw CLI::ValidationError("unknown relation: " + relation);
  }
  std::cout << (eq ? "equivalent" : "not-equivalent") << extra << "\n";
  return eq ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fgstar: free groups, stars of groups, towers, and imaginaries"};
  app.require_subcommand(1);

  Output out;
  int n_min = 4, n_max = 8, trials = 50, max_len = 12;
  long long m = 1, q = 1, k = 1, nn = 1;
  uint64_t seed = 0;
  std::string lemma = "conjugacy", file, action;
  int mult_n = 2;
  bool check_count = false;
  std::vector<long long> ts;
  std::vector<std::string> words;
  std::string relation;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out.path, "write the report to a file");
  };

  auto* orbits = app.add_subcommand("orbits", "orbit class-count bounds");
  orbits->add_option("--lemma", lemma, "conjugacy | coset | dcoset")
      ->check(CLI::IsMember({"conjugacy", "coset", "dcoset"}));
  orbits->add_option("--n-min", n_min, "smallest ray count");
  orbits->add_option("--n-max", n_max, "largest ray count");
  orbits->add_option("--trials", trials, "trials per ray count");
  orbits->add_option("--max-len", max_len, "syllable-length cap");
  orbits->add_option("--m", m, "coset exponent");
  orbits->add_option("--q", q, "left double-coset exponent");
  orbits->add_option("--k", k, "right double-coset exponent");
  orbits->add_option("--seed", seed, "RNG seed");
  add_output(orbits);

  auto* noncomm = app.add_subcommand("noncomm", "noncommutativity scenarios");
  add_output(noncomm);

  auto* closure = app.add_subcommand("closure", "morphism-extension verdicts");
  closure->add_option("--spec", file, "closure JSON file")->required();
  closure->add_option("--t", ts, "candidate peg exponents")->required();
  add_output(closure);

  auto* tower = app.add_subcommand("tower", "tower operations");
  tower->add_option("action", action, "build | describe | multiplet | pouch")
      ->required()
      ->check(CLI::IsMember({"build", "describe", "multiplet", "pouch"}));
  tower->add_option("--spec", file, "tower JSON file")->required();
  tower->add_option("--n", mult_n, "multiplet copy count");
  tower->add_flag("--check-count", check_count, "assert the floor-count formula");
  add_output(tower);

  auto* equiv = app.add_subcommand("equiv", "basic equivalence relations");
  equiv->add_option("relation", relation, "E1 | E2 | E3")
      ->required()
      ->check(CLI::IsMember({"E1", "E2", "E3"}));
  equiv->add_option("words", words, "operand words, in relation order");
  equiv->add_option("--m", m, "E2/E3 left exponent");
  equiv->add_option("--n", nn, "E3 right exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (orbits->parsed())
      return run_orbits(lemma, n_min, n_max, trials, max_len, m, q, k, seed, out);
    if (noncomm->parsed()) return run_noncomm(out);
    if (closure->parsed()) return run_closure(file, ts, out);
    if (tower->parsed()) return run_tower(action, file, mult_n, check_count, out);
    if (equiv->parsed()) return run_equiv(relation, words, m, nn);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
