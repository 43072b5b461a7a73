#include "fgstar/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace fgstar {

Word reduce(const Word& raw) {
  Word out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw std::invalid_argument("zero letter");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word multiply(const Word& w1, const Word& w2) {
  Word cat = w1;
  cat.insert(cat.end(), w2.begin(), w2.end());
  return reduce(cat);
}

Word invert(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l = -l;
  return out;
}

Word conjugate(const Word& w, const Word& g) {
  return multiply(multiply(invert(g), w), g);
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1]) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  if (w.size() <= 1) return true;
  return w.front() != -w.back();
}

bool letter_less(Letter a, Letter b) {
  int ga = std::abs(a), gb = std::abs(b);
  if (ga != gb) return ga < gb;
  return a > 0 && b < 0;  // +1 before -1
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_less(a[i], b[i]);
  }
  return false;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word core = w;
  Word conj;
  while (core.size() >= 2 && core.front() == -core.back()) {
    conj.insert(conj.begin(), core.back());
    core.pop_back();
    core.erase(core.begin());
  }
  return {core, conj};
}

Word min_rotation(const Word& core) {
  Word best = core;
  Word rot = core;
  for (size_t i = 1; i < core.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (word_less(rot, best)) best = rot;
  }
  return best;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw TrivialWordError();
  CyclicReduction cr = cyclic_reduce(w);
  size_t n = cr.core.size();
  for (size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (size_t i = d; i < n; ++i) {
      if (cr.core[i] != cr.core[i % d]) {
        periodic = false;
        break;
      }
    }
    if (periodic) {
      Word root_core(cr.core.begin(), cr.core.begin() + static_cast<long>(d));
      Word root = multiply(multiply(invert(cr.conjugator), root_core), cr.conjugator);
      return {root, static_cast<long long>(n / d)};
    }
  }
  return {w, 1};  // unreachable: d = n always periodic
}

Word centralizer_generator(const Word& w) {
  Word u = primitive_root(w).root;
  Word ui = invert(u);
  return word_less(ui, u) ? ui : u;
}

bool is_conjugate_free(const Word& w1, const Word& w2) {
  Word c1 = cyclic_reduce(w1).core;
  Word c2 = cyclic_reduce(w2).core;
  if (c1.size() != c2.size()) return false;
  if (c1.empty()) return true;
  return min_rotation(c1) == min_rotation(c2);
}

Word power(const Word& u, long long k) {
  Word base = k >= 0 ? u : invert(u);
  long long n = k >= 0 ? k : -k;
  Word out;
  for (long long i = 0; i < n; ++i) out = multiply(out, base);
  return out;
}

std::optional<long long> power_membership(const Word& w, const Word& u, long long m) {
  if (u.empty()) throw TrivialWordError();
  if (w.empty()) return 0;
  PrimitiveRoot pw = primitive_root(w);
  PrimitiveRoot pu = primitive_root(u);
  long long sign;
  if (pw.root == pu.root)
    sign = 1;
  else if (pw.root == invert(pu.root))
    sign = -1;
  else
    return std::nullopt;
  // w = root^(sign*pw.exponent), u = root^(pu.exponent); need sign*pw.e = m*k*pu.e
  long long e = sign * pw.exponent;
  if (e % pu.exponent != 0) return std::nullopt;
  long long q = e / pu.exponent;
  if (q % m != 0) return std::nullopt;
  return q / m;
}

Word substitute(const Word& templ, const std::map<int, Word>& assignment) {
  Word cat;
  for (Letter l : templ) {
    int v = std::abs(l);
    auto it = assignment.find(v);
    if (it == assignment.end()) throw UnboundVariableError(v);
    if (l > 0)
      cat.insert(cat.end(), it->second.begin(), it->second.end());
    else {
      Word iv = invert(it->second);
      cat.insert(cat.end(), iv.begin(), iv.end());
    }
  }
  return reduce(cat);
}

Word parse_word(const std::string& text) {
  Word raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    bool inverse = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inverse = true;
      tok.resize(tok.size() - 3);
    }
    int idx;
    if (tok.size() == 1 && std::isalpha(static_cast<unsigned char>(tok[0]))) {
      char c = tok[0];
      if (std::isupper(static_cast<unsigned char>(c))) {
        inverse = !inverse;
        c = static_cast<char>(std::tolower(c));
      }
      idx = c - 'a' + 1;
    } else if (tok.size() >= 2 && tok[0] == 'x') {
      try {
        idx = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw ParseError("bad token: " + tok);
      }
      if (idx < 1) throw ParseError("bad generator index: " + tok);
    } else {
      throw ParseError("bad token: " + tok);
    }
    raw.push_back(inverse ? -idx : idx);
  }
  return reduce(raw);
}

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    int idx = std::abs(w[i]);
    if (idx <= 26) {
      char c = static_cast<char>('a' + idx - 1);
      out += w[i] > 0 ? c : static_cast<char>(std::toupper(c));
    } else {
      out += "x" + std::to_string(idx);
      if (w[i] < 0) out += "^-1";
    }
  }
  return out;
}

bool FreeGroup::contains(const Word& w) const {
  for (Letter l : w)
    if (std::abs(l) > rank) return false;
  return true;
}

void FreeGroup::require(const Word& w) const {
  if (!contains(w))
    throw std::invalid_argument("word uses generators outside rank-" +
                                std::to_string(rank) + " context");
}

}  // namespace fgstar
