#include "fgstar/automaton.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fgstar {

WordAutomaton automaton_of_word(const Word& w) {
  WordAutomaton a;
  a.n_states = static_cast<int>(w.size()) + 1;
  a.initial = 0;
  a.accepting.assign(a.n_states, false);
  a.accepting.back() = true;
  for (size_t i = 0; i < w.size(); ++i)
    a.transitions.push_back({static_cast<int>(i), w[i], static_cast<int>(i) + 1});
  return a;
}

WordAutomaton automaton_of_cyclic(const Word& u, long long m) {
  if (u.empty()) throw TrivialWordError();
  Word w = power(u, m);
  // Hub state 0 (initial, accepting) with a loop reading w and a loop
  // reading w^-1; the final saturation turns this into all reduced forms
  // of <w>.
  WordAutomaton a;
  a.initial = 0;
  int next = 1;
  auto add_loop = [&](const Word& loop) {
    int cur = 0;
    for (size_t i = 0; i < loop.size(); ++i) {
      int tgt = (i + 1 == loop.size()) ? 0 : next++;
      a.transitions.push_back({cur, loop[i], tgt});
      cur = tgt;
    }
  };
  add_loop(w);
  add_loop(invert(w));
  a.n_states = next;
  a.accepting.assign(a.n_states, false);
  a.accepting[0] = true;
  return saturate(a);
}

WordAutomaton concat(const WordAutomaton& a1, const WordAutomaton& a2) {
  WordAutomaton out;
  out.n_states = a1.n_states + a2.n_states;
  out.initial = a1.initial;
  out.transitions = a1.transitions;
  int shift = a1.n_states;
  for (const Transition& t : a2.transitions)
    out.transitions.push_back({t.from + shift, t.letter, t.to + shift});
  // Glue: every accepting state of a1 copies the outgoing edges of a2's
  // initial state (epsilon elimination on the fly).
  for (int f = 0; f < a1.n_states; ++f) {
    if (!a1.accepting[f]) continue;
    for (const Transition& t : a2.transitions)
      if (t.from == a2.initial)
        out.transitions.push_back({f, t.letter, t.to + shift});
  }
  out.accepting.assign(out.n_states, false);
  for (int s = 0; s < a2.n_states; ++s)
    if (a2.accepting[s]) out.accepting[s + shift] = true;
  if (a2.accepting[a2.initial])
    for (int f = 0; f < a1.n_states; ++f)
      if (a1.accepting[f]) out.accepting[f] = true;
  std::sort(out.transitions.begin(), out.transitions.end());
  out.transitions.erase(std::unique(out.transitions.begin(), out.transitions.end()),
                        out.transitions.end());
  out.saturated = false;
  return out;
}

WordAutomaton concat_word(const WordAutomaton& a, const Word& w, Side side) {
  WordAutomaton lw = automaton_of_word(w);
  return side == Side::Right ? concat(a, lw) : concat(lw, a);
}

WordAutomaton saturate(const WordAutomaton& a) {
  WordAutomaton out = a;
  std::set<Transition> trans(out.transitions.begin(), out.transitions.end());
  std::set<std::pair<int, int>> eps;
  for (int s = 0; s < out.n_states; ++s) eps.insert({s, s});

  bool changed = true;
  while (changed) {
    changed = false;
    // p -x-> r, r -x^-1-> q  =>  eps(p, q)
    for (const Transition& t1 : trans) {
      for (const Transition& t2 : trans) {
        if (t2.from == t1.to && t2.letter == -t1.letter)
          if (eps.insert({t1.from, t2.to}).second) changed = true;
      }
    }
    // transitive closure of eps
    for (const auto& e1 : eps)
      for (const auto& e2 : eps)
        if (e1.second == e2.first)
          if (eps.insert({e1.first, e2.second}).second) changed = true;
    // eliminate eps: eps(p,q), q -x-> t  =>  p -x-> t; eps(p,q), q acc => p acc
    std::vector<Transition> to_add;
    for (const auto& e : eps) {
      for (const Transition& t : trans)
        if (t.from == e.second) to_add.push_back({e.first, t.letter, t.to});
      if (out.accepting[e.second] && !out.accepting[e.first]) {
        out.accepting[e.first] = true;
        changed = true;
      }
    }
    for (const Transition& t : to_add)
      if (trans.insert(t).second) changed = true;
  }
  out.transitions.assign(trans.begin(), trans.end());
  out.saturated = true;
  return out;
}

bool accepts_reduced(const WordAutomaton& a, const Word& w) {
  if (!a.saturated) throw NotSaturatedError();
  std::set<int> cur = {a.initial};
  for (Letter l : w) {
    std::set<int> next;
    for (const Transition& t : a.transitions)
      if (t.letter == l && cur.count(t.from)) next.insert(t.to);
    cur.swap(next);
    if (cur.empty()) return false;
  }
  for (int s : cur)
    if (a.accepting[s]) return true;
  return false;
}

std::string dump_automaton(const WordAutomaton& a) {
  std::ostringstream os;
  os << "states " << a.n_states << " initial " << a.initial << "\n";
  for (const Transition& t : a.transitions)
    os << t.from << " " << t.letter << " " << t.to << "\n";
  os << "accepting";
  for (int s = 0; s < a.n_states; ++s)
    if (a.accepting[s]) os << " " << s;
  os << "\n";
  return os.str();
}

}  // namespace fgstar
