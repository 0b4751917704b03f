#pragma once

#include <orderlab/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace orderlab {

// Free-group letters are packed symbols: generator g positive -> 2g, inverse -> 2g+1.
using Sym = std::int16_t;

inline Sym sym(int gen, int sgn) { return (Sym)(2 * gen + (sgn < 0 ? 1 : 0)); }
inline Sym sym_inverse(Sym s) { return (Sym)(s ^ 1); }
inline int sym_gen(Sym s) { return s / 2; }
inline int sym_sign(Sym s) { return (s & 1) ? -1 : 1; }

struct Word {
  std::vector<Sym> syms;

  Word() = default;
  explicit Word(std::vector<Sym> s) : syms(std::move(s)) {}

  bool empty() const { return syms.empty(); }
  std::size_t size() const { return syms.size(); }

  Word inverse() const {
    Word w;
    w.syms.reserve(syms.size());
    for (auto it = syms.rbegin(); it != syms.rend(); ++it)
      w.syms.push_back(sym_inverse(*it));
    return w;
  }

  friend Word operator*(const Word& u, const Word& v) {
    Word w = u;
    w.syms.insert(w.syms.end(), v.syms.begin(), v.syms.end());
    return w;
  }

  friend bool operator==(const Word& u, const Word& v) { return u.syms == v.syms; }
  friend bool operator<(const Word& u, const Word& v) { return u.syms < v.syms; }

  static Word letter(int gen, int sgn) { return Word({sym(gen, sgn)}); }

  static Word power(const Word& u, int n) {
    Word w;
    Word base = n < 0 ? u.inverse() : u;
    for (int i = 0; i < std::abs(n); ++i) w = w * base;
    return w;
  }
};

inline Word free_reduce(const Word& w) {
  Word out;
  for (Sym s : w.syms) {
    if (!out.syms.empty() && out.syms.back() == sym_inverse(s))
      out.syms.pop_back();
    else
      out.syms.push_back(s);
  }
  return out;
}

inline Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.syms.front() == sym_inverse(w.syms.back())) {
    w.syms.erase(w.syms.begin());
    w.syms.pop_back();
  }
  return w;
}

// Space-separated letters, lowercase = generator, uppercase = inverse:
// "a b C" with names {"a","b","c"} is a * b * c^{-1}.
inline Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word w;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    if (tok == "e" || tok == "1") { tok.clear(); return; }  // explicit identity
    std::string lower = tok;
    bool inv = false;
    for (auto& c : lower)
      if (c >= 'A' && c <= 'Z') { c = (char)(c - 'A' + 'a'); inv = true; }
    auto it = std::find(names.begin(), names.end(), lower);
    if (it == names.end()) throw UsageError("unknown generator '" + tok + "'");
    w.syms.push_back(sym((int)(it - names.begin()), inv ? -1 : 1));
    tok.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t') flush();
    else tok.push_back(c);
  }
  flush();
  return w;
}

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (Sym s : w.syms) {
    if (!out.empty()) out += ' ';
    std::string name = names.at(sym_gen(s));
    if (sym_sign(s) < 0)
      for (auto& c : name) c = (char)(c - 'a' + 'A');
    out += name;
  }
  return out;
}

struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;
  std::vector<std::string> names;  // optional; defaults to a, b, c, ...

  const std::vector<std::string>& generator_names() const {
    if ((int)names.size() == generator_count) return names;
    static thread_local std::vector<std::string> fallback;
    fallback.clear();
    for (int i = 0; i < generator_count; ++i)
      fallback.push_back(std::string(1, (char)('a' + i)));
    return fallback;
  }
};

enum class Tri { yes, no, unknown };

struct RewriteStep;
class RewriteSystem;

struct GroupOracle {
  virtual ~GroupOracle() = default;
  virtual Word multiply(const Word& u, const Word& v) const = 0;  // normal form of uv
  virtual Tri is_identity(const Word& w) const = 0;
  // Rewrite-backed oracles expose their system so identity claims can carry
  // replayable traces.
  virtual const RewriteSystem* system_ptr() const { return nullptr; }
  Tri equal(const Word& u, const Word& v) const { return is_identity(u.inverse() * v); }
};

// Shortlex with caller-specified symbol precedence (default: symbol index order).
struct Shortlex {
  std::vector<int> precedence;  // precedence[sym] = key

  explicit Shortlex(int nsyms = 0) {
    precedence.resize(nsyms);
    for (int i = 0; i < nsyms; ++i) precedence[i] = i;
  }

  bool less(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u.syms[i] != v.syms[i])
        return precedence[u.syms[i]] < precedence[v.syms[i]];
    return false;
  }
};

struct RewriteRule {
  Word lhs, rhs;  // lhs > rhs in shortlex
};

// One rewrite application: rules[rule].lhs matched at position pos.
struct RewriteStep {
  std::uint32_t rule = 0;
  std::uint32_t pos = 0;
};

// A sound string-rewriting system for a group presentation: rewriting to the empty
// word proves triviality. complete == true additionally guarantees unique normal
// forms (all critical pairs resolved within bounds).
class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(int generator_count, Shortlex order)
      : ngens_(generator_count), order_(std::move(order)) {
    for (int g = 0; g < generator_count; ++g) {
      rules_.push_back({Word({sym(g, 1), sym(g, -1)}), Word()});
      rules_.push_back({Word({sym(g, -1), sym(g, 1)}), Word()});
    }
  }

  int generator_count() const { return ngens_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool complete() const { return complete_; }
  void set_complete(bool c) { complete_ = c; }

  bool add_rule(Word lhs, Word rhs) {
    if (lhs == rhs) return false;
    rules_.push_back({std::move(lhs), std::move(rhs)});
    return true;
  }

  // Stack-based rewriting to a normal form; optionally records the steps. Rule
  // right-hand sides are re-fed through the stack so redexes created inside a
  // replacement are found.
  Word normal_form_traced(const Word& w, std::vector<RewriteStep>* trace) const {
    std::vector<Sym> out;
    std::vector<Sym> pending(w.syms.rbegin(), w.syms.rend());
    out.reserve(w.size());
    while (!pending.empty()) {
      out.push_back(pending.back());
      pending.pop_back();
      bool retry = true;
      while (retry) {
        retry = false;
        for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
          const auto& l = rules_[ri].lhs.syms;
          if (l.empty() || out.size() < l.size()) continue;
          if (std::equal(l.begin(), l.end(), out.end() - l.size())) {
            if (trace)
              trace->push_back({(std::uint32_t)ri, (std::uint32_t)(out.size() - l.size())});
            out.resize(out.size() - l.size());
            const auto& r = rules_[ri].rhs.syms;
            // nonempty rhs re-enters symbol by symbol; empty rhs retries in place
            pending.insert(pending.end(), r.rbegin(), r.rend());
            retry = r.empty();
            break;
          }
        }
      }
    }
    return Word(std::move(out));
  }

  Word normal_form(const Word& w) const { return normal_form_traced(w, nullptr); }

  // Replays a recorded trace, verifying each match; returns the resulting word.
  std::optional<Word> replay(const Word& start, const std::vector<RewriteStep>& trace) const {
    std::vector<Sym> cur = start.syms;
    for (const auto& step : trace) {
      if (step.rule >= rules_.size()) return std::nullopt;
      const auto& l = rules_[step.rule].lhs.syms;
      const auto& r = rules_[step.rule].rhs.syms;
      if (step.pos + l.size() > cur.size()) return std::nullopt;
      if (!std::equal(l.begin(), l.end(), cur.begin() + step.pos)) return std::nullopt;
      std::vector<Sym> next(cur.begin(), cur.begin() + step.pos);
      next.insert(next.end(), r.begin(), r.end());
      next.insert(next.end(), cur.begin() + step.pos + l.size(), cur.end());
      cur = std::move(next);
    }
    return Word(std::move(cur));
  }

  Tri is_identity(const Word& w) const {
    Word nf = normal_form(w);
    if (nf.empty()) return Tri::yes;
    return complete_ ? Tri::no : Tri::unknown;
  }

 private:
  int ngens_ = 0;
  Shortlex order_;
  std::vector<RewriteRule> rules_;
  bool complete_ = false;
};

struct KnuthBendixOptions {
  int max_rule_len = 16;
  int max_rules = 512;
  int max_equations = 60000;
  std::optional<Shortlex> order;  // defaults to symbol-index shortlex
};

// Bounded Knuth-Bendix completion. Exhausted bounds are not an error; they clear
// the completeness flag.
inline RewriteSystem knuth_bendix_bounded(const GroupPresentation& p, int max_rule_len,
                                          int max_rules,
                                          const KnuthBendixOptions& extra = {}) {
  Shortlex order = extra.order ? *extra.order : Shortlex(2 * p.generator_count);
  RewriteSystem rs(p.generator_count, order);
  bool bound_hit = false;
  int equations_seen = 0;

  std::deque<std::pair<Word, Word>> eqs;
  auto push_eq = [&](const Word& a, const Word& b) { eqs.emplace_back(a, b); };

  // Relators, closed under inversion and cyclic permutation.
  std::set<std::vector<Sym>> seeded;
  for (const Word& rel : p.relators) {
    Word r = cyclic_reduce(rel);
    if (r.empty()) continue;
    for (int invpass = 0; invpass < 2; ++invpass) {
      Word base = invpass ? r.inverse() : r;
      for (std::size_t k = 0; k < base.size(); ++k) {
        Word rot;
        rot.syms.insert(rot.syms.end(), base.syms.begin() + k, base.syms.end());
        rot.syms.insert(rot.syms.end(), base.syms.begin(), base.syms.begin() + k);
        if (seeded.insert(rot.syms).second) push_eq(rot, Word());
      }
    }
  }

  std::size_t pairs_done = 0;  // overlap frontier: rules with index < pairs_done are paired

  auto orient_and_add = [&](const Word& a, const Word& b) {
    if (++equations_seen > extra.max_equations) { bound_hit = true; return; }
    Word na = rs.normal_form(free_reduce(a));
    Word nb = rs.normal_form(free_reduce(b));
    if (na == nb) return;
    if (order.less(na, nb)) std::swap(na, nb);
    if ((int)na.size() > max_rule_len) { bound_hit = true; return; }
    if ((int)rs.rules().size() >= max_rules) { bound_hit = true; return; }
    rs.add_rule(na, nb);
  };

  while (!eqs.empty() || pairs_done < rs.rules().size()) {
    if ((int)rs.rules().size() >= max_rules || equations_seen > extra.max_equations) {
      bound_hit = true;
      break;
    }
    if (!eqs.empty()) {
      auto [a, b] = eqs.front();
      eqs.pop_front();
      orient_and_add(a, b);
      continue;
    }
    // Overlap the next unpaired rule against every rule so far (both orders).
    std::size_t i = pairs_done++;
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        if (x == y && x != i) continue;
        const auto& l1 = rs.rules()[x].lhs.syms;
        const auto& r1 = rs.rules()[x].rhs;
        const auto& l2 = rs.rules()[y].lhs.syms;
        const auto& r2 = rs.rules()[y].rhs;
        // suffix of l1 == prefix of l2
        std::size_t maxk = std::min(l1.size(), l2.size());
        for (std::size_t k = 1; k <= maxk; ++k) {
          if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k)) continue;
          if (k == l1.size() && k == l2.size()) continue;  // identical rule overlap
          // word u t v with l1 = u t, l2 = t v reduces as r1 v and u r2
          Word left(std::vector<Sym>(l1.begin(), l1.end() - k));
          Word right(std::vector<Sym>(l2.begin() + k, l2.end()));
          push_eq(r1 * right, left * r2);
        }
        // l2 strictly inside l1
        if (l2.size() < l1.size()) {
          for (std::size_t off = 0; off + l2.size() <= l1.size(); ++off) {
            if (!std::equal(l2.begin(), l2.end(), l1.begin() + off)) continue;
            Word u(std::vector<Sym>(l1.begin(), l1.begin() + off));
            Word v(std::vector<Sym>(l1.begin() + off + l2.size(), l1.end()));
            push_eq(Word(r1), u * r2 * v);
          }
        }
      }
    }
  }

  rs.set_complete(!bound_hit && eqs.empty() && pairs_done >= rs.rules().size());
  return rs;
}

class RewriteOracle : public GroupOracle {
 public:
  explicit RewriteOracle(RewriteSystem rs) : rs_(std::move(rs)) {}

  const RewriteSystem& system() const { return rs_; }
  const RewriteSystem* system_ptr() const override { return &rs_; }

  Word multiply(const Word& u, const Word& v) const override {
    return rs_.normal_form(u * v);
  }
  Tri is_identity(const Word& w) const override { return rs_.is_identity(w); }

 private:
  RewriteSystem rs_;
};

inline RewriteOracle free_group_oracle(int ngens) {
  GroupPresentation p;
  p.generator_count = ngens;
  RewriteSystem rs = knuth_bendix_bounded(p, 4, 64);
  return RewriteOracle(std::move(rs));
}

struct EnumeratedBall {
  std::vector<Word> elements;  // normal-form representatives, BFS order
  bool all_certified = true;
  std::vector<std::pair<std::size_t, std::size_t>> unresolved;  // index pairs with unknown equality
};

// One representative per group element among words of length <= radius.
// Distinctness is certified through the oracle; unknown pairs are kept and flagged.
inline EnumeratedBall enumerate_ball(const GroupPresentation& p, const GroupOracle& oracle,
                                     int radius) {
  EnumeratedBall ball;
  std::set<std::vector<Sym>> seen;
  std::deque<Word> frontier;
  Word id;
  seen.insert(oracle.multiply(id, id).syms);
  ball.elements.push_back(Word());
  frontier.push_back(Word());
  for (int depth = 0; depth < radius; ++depth) {
    std::deque<Word> next;
    for (const Word& w : frontier) {
      for (int g = 0; g < p.generator_count; ++g) {
        for (int sgn : {1, -1}) {
          Word cand = oracle.multiply(w, Word::letter(g, sgn));
          if (seen.count(cand.syms)) continue;
          bool dup = false;
          for (std::size_t i = 0; i < ball.elements.size(); ++i) {
            Tri eq = oracle.equal(ball.elements[i], cand);
            if (eq == Tri::yes) { dup = true; break; }
            if (eq == Tri::unknown) {
              ball.all_certified = false;
              ball.unresolved.emplace_back(i, ball.elements.size());
            }
          }
          seen.insert(cand.syms);
          if (!dup) {
            ball.elements.push_back(cand);
            next.push_back(cand);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

}  // namespace orderlab
