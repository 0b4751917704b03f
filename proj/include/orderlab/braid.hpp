#pragma once

#include <orderlab/errors.hpp>
#include <orderlab/free_auto.hpp>
#include <orderlab/words.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace orderlab {

// Braid word in the Artin generators sigma_1 .. sigma_{n-1}.
struct BraidWord {
  int strands = 2;
  std::vector<std::pair<int, int>> letters;  // (generator index 1..n-1, sign)

  BraidWord() = default;
  BraidWord(int n, std::vector<std::pair<int, int>> ls)
      : strands(n), letters(std::move(ls)) {
    for (auto& [i, s] : letters) {
      if (i < 1 || i >= strands) throw UsageError("BraidWord: generator index out of range");
      if (s != 1 && s != -1) throw UsageError("BraidWord: sign must be +-1");
    }
  }

  static BraidWord generator(int n, int i, int sign) { return BraidWord(n, {{i, sign}}); }

  bool empty() const { return letters.empty(); }

  BraidWord inverse() const {
    BraidWord w;
    w.strands = strands;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      w.letters.emplace_back(it->first, -it->second);
    return w;
  }

  friend BraidWord operator*(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands) throw UsageError("BraidWord: strand counts differ");
    BraidWord w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
  }

  BraidWord power(int k) const {
    BraidWord base = k < 0 ? inverse() : *this;
    BraidWord out;
    out.strands = strands;
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
  }

  friend bool operator==(const BraidWord& u, const BraidWord& v) {
    return u.strands == v.strands && u.letters == v.letters;
  }
};

// "s1 S2 s1" with s = positive letter, S = inverse.
inline BraidWord parse_braid(int strands, const std::string& text) {
  BraidWord w;
  w.strands = strands;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    if (tok == "e" || tok == "1") { tok.clear(); return; }
    int sign = tok[0] == 'S' ? -1 : 1;
    if (tok[0] != 's' && tok[0] != 'S') throw UsageError("braid letter must be s<k> or S<k>");
    int idx = std::stoi(tok.substr(1));
    w.letters.emplace_back(idx, sign);
    tok.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t') flush();
    else tok.push_back(c);
  }
  flush();
  BraidWord checked(w.strands, w.letters);
  return checked;
}

inline std::string format_braid(const BraidWord& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (auto& [i, s] : w.letters) {
    if (!out.empty()) out += ' ';
    out += (s > 0 ? 's' : 'S');
    out += std::to_string(i);
  }
  return out;
}

inline BraidWord braid_free_cancel(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  for (auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().first == l.first &&
        out.letters.back().second == -l.second)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

// Dehornoy handle reduction. A sigma_i-handle is a subword
// sigma_i^e v sigma_i^{-e} whose interior v has letters of index > i only; the
// reduction deletes the outer pair and conjugates the sigma_{i+1} letters:
// sigma_{i+1}^d -> sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^{e}. Reducing the
// handle with the smallest end position keeps every step permitted.
inline BraidWord handle_reduce(BraidWord w, int step_cap = 200000) {
  if (step_cap <= 0) throw UsageError("handle_reduce: step_cap must be positive");
  w = braid_free_cancel(w);
  for (int step = 0; step < step_cap; ++step) {
    // find the handle with the least end position
    int start = -1, end = -1;
    for (int k = 0; k < (int)w.letters.size() && end < 0; ++k) {
      auto [gi, gs] = w.letters[(std::size_t)k];
      for (int j = k - 1; j >= 0; --j) {
        auto [hj, hs] = w.letters[(std::size_t)j];
        if (hj > gi) continue;
        if (hj == gi && hs == -gs) { start = j; end = k; }
        break;  // nearest letter of index <= gi decides
      }
    }
    if (end < 0) return w;  // handle-free

    auto [i, e_end] = w.letters[(std::size_t)end];
    int e = -e_end;  // sign of the opening letter
    BraidWord next;
    next.strands = w.strands;
    next.letters.assign(w.letters.begin(), w.letters.begin() + start);
    for (int k = start + 1; k < end; ++k) {
      auto [gi, gs] = w.letters[(std::size_t)k];
      if (gi == i + 1) {
        next.letters.emplace_back(i + 1, -e);
        next.letters.emplace_back(i, gs);
        next.letters.emplace_back(i + 1, e);
      } else {
        next.letters.emplace_back(gi, gs);
      }
    }
    next.letters.insert(next.letters.end(), w.letters.begin() + end + 1, w.letters.end());
    w = braid_free_cancel(next);
  }
  throw StepCapExceeded("handle_reduce");
}

inline bool is_handle_free(const BraidWord& w) {
  for (int k = 0; k < (int)w.letters.size(); ++k) {
    auto [gi, gs] = w.letters[(std::size_t)k];
    for (int j = k - 1; j >= 0; --j) {
      auto [hj, hs] = w.letters[(std::size_t)j];
      if (hj > gi) continue;
      if (hj == gi && hs == -gs) return false;
      break;
    }
  }
  return true;
}

// sigma-positivity class of a handle-free word.
inline int sigma_class(const BraidWord& w) {  // +1 positive, -1 negative, 0 empty
  if (w.letters.empty()) return 0;
  int lo = w.strands;
  for (auto& [i, s] : w.letters) lo = std::min(lo, i);
  int sign = 0;
  for (auto& [i, s] : w.letters)
    if (i == lo) {
      if (sign == 0) sign = s;
      else if (sign != s) throw Error("sigma_class: word is not handle-free");
    }
  return sign;
}

struct DehornoyVerdict {
  enum class Class { Less, Equal, Greater } cls = Class::Equal;
  BraidWord reduced;  // handle-free form of v^{-1} u; empty iff Equal

  bool equal() const { return cls == Class::Equal; }
};

// Compares u against v in the Dehornoy order: Greater means u > v, decided by
// the sigma-positivity of the handle-free form of v^{-1} u.
inline DehornoyVerdict braid_compare(const BraidWord& u, const BraidWord& v,
                                     int step_cap = 200000) {
  if (u.strands != v.strands) throw UsageError("braid_compare: strand counts differ");
  DehornoyVerdict out;
  out.reduced = handle_reduce(v.inverse() * u, step_cap);
  int s = sigma_class(out.reduced);
  out.cls = s == 0 ? DehornoyVerdict::Class::Equal
                   : (s > 0 ? DehornoyVerdict::Class::Greater : DehornoyVerdict::Class::Less);
  return out;
}

inline bool braid_equal(const BraidWord& u, const BraidWord& v, int step_cap = 200000) {
  return braid_compare(u, v, step_cap).equal();
}

inline bool braid_positive(const BraidWord& u, int step_cap = 200000) {
  BraidWord id;
  id.strands = u.strands;
  return braid_compare(u, id, step_cap).cls == DehornoyVerdict::Class::Greater;
}

// Half twist Delta and the full twist Delta^2 generating the center.
inline BraidWord half_twist(int n) {
  BraidWord w;
  w.strands = n;
  for (int k = n - 1; k >= 1; --k)
    for (int i = 1; i <= k; ++i) w.letters.emplace_back(i, 1);
  return w;
}

inline BraidWord full_twist(int n) {
  BraidWord d = half_twist(n);
  return d * d;
}

struct CentralCoordinates {
  long long twist_power = 0;  // k with Delta^{2k} <= w < Delta^{2k+2}
  BraidWord remainder;        // Delta^{-2k} w, already handle-reduced
};

// Splits w along the central Z generated by the full twist, using the
// cofinality of Delta^2 for the Dehornoy order. The bracketing comparisons are
// asserted and fail loudly if violated.
inline CentralCoordinates central_normalize(const BraidWord& w, int step_cap = 400000) {
  const int n = w.strands;
  BraidWord d2 = full_twist(n);
  BraidWord id;
  id.strands = n;

  auto ge_id = [&](const BraidWord& x) {
    auto v = braid_compare(x, id, step_cap);
    return v.cls != DehornoyVerdict::Class::Less;
  };

  // exponential bracketing, then binary search for the unique k
  long long lo = -1, hi = 1;
  auto above = [&](long long k) {  // Delta^{2k} <= w
    return ge_id(d2.power((int)k).inverse() * w);
  };
  while (!above(lo)) lo *= 2;
  while (above(hi)) hi *= 2;
  // now above(lo) true, above(hi) false; find largest k with above(k)
  while (lo + 1 < hi) {
    long long mid = lo + (hi - lo) / 2;
    (above(mid) ? lo : hi) = mid;
  }
  CentralCoordinates out;
  out.twist_power = lo;
  out.remainder = handle_reduce(d2.power((int)-lo) * w, step_cap);
  // verified runtime assumption: Id <= remainder < Delta^2
  if (!ge_id(out.remainder)) throw Error("central_normalize: remainder below Id");
  auto upper = braid_compare(out.remainder, d2, step_cap);
  if (upper.cls != DehornoyVerdict::Class::Less)
    throw Error("central_normalize: remainder not below Delta^2");
  return out;
}

// Circular order on B_n modulo its center: orientation of the three remainders
// in the fundamental domain [Id, Delta^2), wrapped circularly.
inline int circular_compare_bn_prime(const BraidWord& u, const BraidWord& v,
                                     const BraidWord& w, int step_cap = 400000) {
  auto cu = central_normalize(u, step_cap);
  auto cv = central_normalize(v, step_cap);
  auto cw = central_normalize(w, step_cap);
  auto less = [&](const BraidWord& a, const BraidWord& b) {
    return braid_compare(a, b, step_cap).cls == DehornoyVerdict::Class::Less;
  };
  if (braid_equal(cu.remainder, cv.remainder, step_cap) ||
      braid_equal(cv.remainder, cw.remainder, step_cap) ||
      braid_equal(cu.remainder, cw.remainder, step_cap))
    throw DegenerateTriple();
  bool ab = less(cu.remainder, cv.remainder);
  bool bc = less(cv.remainder, cw.remainder);
  bool ac = less(cu.remainder, cw.remainder);
  // cyclic orientation of three points on a line wrapped into a circle
  int inversions = (!ab) + (!bc) + (!ac);
  return inversions % 2 == 0 ? 1 : -1;
}

// Standard action of B_n on the free group of the n-punctured disk:
// sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i.
inline FreeAuto braid_to_free_auto(const BraidWord& b) {
  const int n = b.strands;
  FreeAuto out = FreeAuto::identity(n);
  for (auto& [i, s] : b.letters) {
    FreeAuto gen = FreeAuto::identity(n);
    int a = i - 1, c = i;  // 0-based adjacent strand generators
    if (s > 0) {
      gen.images[(std::size_t)a] =
          free_reduce(Word::letter(a, 1) * Word::letter(c, 1) * Word::letter(a, -1));
      gen.images[(std::size_t)c] = Word::letter(a, 1);
    } else {
      gen.images[(std::size_t)a] = Word::letter(c, 1);
      gen.images[(std::size_t)c] =
          free_reduce(Word::letter(c, -1) * Word::letter(a, 1) * Word::letter(c, 1));
    }
    out = out.after(gen);
  }
  return out;
}

// The Artin representation is faithful, so equality of the automorphisms is an
// exact word-problem oracle independent of handle reduction.
inline bool artin_equal(const BraidWord& u, const BraidWord& v) {
  return braid_to_free_auto(u) == braid_to_free_auto(v);
}

inline Word braid_to_word(const BraidWord& b) {
  Word w;
  for (auto& [i, s] : b.letters) w.syms.push_back(sym(i - 1, s));
  return w;
}

inline BraidWord word_to_braid(int strands, const Word& w) {
  BraidWord b;
  b.strands = strands;
  for (Sym s : w.syms) b.letters.emplace_back(sym_gen(s) + 1, sym_sign(s));
  return BraidWord(strands, b.letters);
}

// Group oracle over braid groups: handle reduction decides the word problem
// (handle-free nonempty words are sigma-positive or sigma-negative, never Id).
// Normal forms are handle-free but not canonical.
class DehornoyOracle : public GroupOracle {
 public:
  explicit DehornoyOracle(int strands, int step_cap = 400000)
      : strands_(strands), step_cap_(step_cap) {}

  int strands() const { return strands_; }

  Word multiply(const Word& u, const Word& v) const override {
    return braid_to_word(handle_reduce(word_to_braid(strands_, u * v), step_cap_));
  }
  Tri is_identity(const Word& w) const override {
    return handle_reduce(word_to_braid(strands_, w), step_cap_).empty() ? Tri::yes
                                                                        : Tri::no;
  }

 private:
  int strands_;
  int step_cap_;
};

}  // namespace orderlab
