#pragma once

#include <orderlab/order_core.hpp>
#include <orderlab/words.hpp>

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace orderlab {

struct SignAssignment {
  std::vector<Word> base;  // S' with S' and S'^{-1} disjoint
  std::vector<int> signs;  // one of +1/-1 per base word
};

// Finite certificate of non-left-orderability: for every sign assignment on the
// base, a positive product of the signed base elements that equals Id, with a
// replayable rewrite trace.
struct NonLOCertificate {
  std::vector<Word> base;
  std::vector<std::vector<int>> signs;          // indexed by assignment bits
  std::vector<std::vector<int>> factor_seqs;    // base indices; witness = prod base[i]^{sign[i]}
  std::vector<Word> witnesses;                  // the resulting words
  std::vector<std::vector<RewriteStep>> traces; // proofs witness = Id (may be empty per entry)
  int depth_explored = 0;

  std::size_t assignment_count() const { return signs.size(); }
};

struct NotFound {
  int depth_explored = 0;
};

namespace detail {

inline std::vector<int> assignment_signs(std::uint32_t bits, std::size_t n) {
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (bits >> i) & 1 ? -1 : 1;
  return s;
}

inline Word signed_base_word(const Word& w, int sgn) {
  return sgn > 0 ? w : w.inverse();
}

}  // namespace detail

// Per-assignment breadth-first search over positive products of the signed base
// elements, with oracle-based deduplication. Returns a full certificate only when
// every one of the 2^|base| assignments is witnessed within max_witness_len factors.
inline std::variant<NonLOCertificate, NotFound> search_non_lo_certificate(
    const GroupOracle& oracle, const std::vector<Word>& base, int max_witness_len,
    std::size_t node_cap = 2'000'000) {
  const std::size_t n = base.size();
  if (n == 0 || n > 20) throw UsageError("certificate base must have 1..20 elements");
  for (std::size_t i = 0; i < n; ++i) {
    if (oracle.is_identity(base[i]) == Tri::yes)
      throw UsageError("certificate base contains the identity");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (oracle.equal(base[i], base[j]) == Tri::yes)
        throw UsageError("certificate base contains a repeated element");
      if (oracle.equal(base[i], base[j].inverse()) == Tri::yes)
        throw UsageError("certificate base contains an inverse pair");
    }
  }

  NonLOCertificate cert;
  cert.base = base;
  cert.depth_explored = max_witness_len;

  const RewriteSystem* rs = oracle.system_ptr();

  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<int> signs = detail::assignment_signs(bits, n);
    std::vector<Word> factors(n);
    for (std::size_t i = 0; i < n; ++i)
      factors[i] = detail::signed_base_word(base[i], signs[i]);

    // BFS states: normal forms; parents for witness reconstruction.
    std::map<std::vector<Sym>, std::size_t> index_of;
    std::vector<std::pair<std::size_t, int>> parent;  // (parent state, factor used)
    std::vector<Word> state_word;
    std::deque<std::size_t> queue;
    std::vector<int> depth_of;

    auto add_state = [&](const Word& nf, std::size_t par, int fac,
                         int depth) -> std::optional<std::size_t> {
      auto it = index_of.find(nf.syms);
      if (it != index_of.end()) return std::nullopt;
      std::size_t id = state_word.size();
      index_of.emplace(nf.syms, id);
      state_word.push_back(nf);
      parent.emplace_back(par, fac);
      depth_of.push_back(depth);
      queue.push_back(id);
      return id;
    };

    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < n && !found; ++i) {
      Word nf = oracle.multiply(Word(), factors[i]);
      auto id = add_state(nf, SIZE_MAX, (int)i, 1);
      if (id && state_word[*id].empty()) found = *id;
    }
    while (!found && !queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      if (depth_of[cur] >= max_witness_len) continue;
      if (state_word.size() > node_cap) break;
      for (std::size_t i = 0; i < n && !found; ++i) {
        Word nf = oracle.multiply(state_word[cur], factors[i]);
        auto id = add_state(nf, cur, (int)i, depth_of[cur] + 1);
        if (id && state_word[*id].empty()) found = *id;
      }
    }

    if (!found) return NotFound{max_witness_len};

    std::vector<int> seq;
    for (std::size_t s = *found; s != SIZE_MAX; s = parent[s].first) {
      seq.push_back(parent[s].second);
      if (parent[s].first == SIZE_MAX) break;
    }
    std::reverse(seq.begin(), seq.end());
    Word witness;
    for (int f : seq) witness = witness * factors[f];

    cert.signs.push_back(signs);
    cert.factor_seqs.push_back(seq);
    cert.witnesses.push_back(witness);
    std::vector<RewriteStep> trace;
    if (rs) {
      Word nf = rs->normal_form_traced(witness, &trace);
      if (!nf.empty()) trace.clear();  // oracle found Id another way; no replayable proof
    }
    cert.traces.push_back(std::move(trace));
  }
  return cert;
}

// pass iff every assignment is present and its witness (a) is a nonempty product of
// the signed base elements, and (b) provably equals Id, by trace replay when a
// trace is present, otherwise through the oracle.
inline OrderReport verify_certificate(const GroupOracle& oracle, const NonLOCertificate& cert) {
  OrderReport rep;
  const std::size_t n = cert.base.size();
  if (n == 0 || n > 20) {
    rep.detail = "bad base size";
    return rep;
  }
  if (cert.signs.size() != (1u << n) || cert.factor_seqs.size() != cert.signs.size() ||
      cert.witnesses.size() != cert.signs.size() || cert.traces.size() != cert.signs.size()) {
    rep.detail = "certificate does not cover all sign assignments";
    return rep;
  }
  const RewriteSystem* rs = oracle.system_ptr();
  for (std::size_t a = 0; a < cert.signs.size(); ++a) {
    const auto& signs = cert.signs[a];
    if (signs.size() != n) { rep.detail = "malformed assignment"; rep.counterexample = {(Id)a}; return rep; }
    const auto& seq = cert.factor_seqs[a];
    if (seq.empty()) {
      rep.detail = "empty witness";
      rep.counterexample = {(Id)a};
      return rep;
    }
    Word expect;
    for (int f : seq) {
      if (f < 0 || f >= (int)n) {
        rep.detail = "witness factor out of range";
        rep.counterexample = {(Id)a};
        return rep;
      }
      expect = expect * detail::signed_base_word(cert.base[f], signs[f]);
    }
    if (!(expect == cert.witnesses[a])) {
      rep.detail = "witness word does not match its factor sequence (wrong-sign letters)";
      rep.counterexample = {(Id)a};
      return rep;
    }
    bool proved = false;
    if (!cert.traces[a].empty() && rs) {
      auto end = rs->replay(cert.witnesses[a], cert.traces[a]);
      proved = end && end->empty();
      if (!proved) {
        rep.detail = "trace does not replay to the empty word";
        rep.counterexample = {(Id)a};
        return rep;
      }
    } else {
      proved = oracle.is_identity(cert.witnesses[a]) == Tri::yes;
      if (!proved) {
        rep.detail = "witness not certified trivial by the oracle";
        rep.counterexample = {(Id)a};
        return rep;
      }
    }
  }
  rep.pass = true;
  return rep;
}

struct ConeCheckReport {
  enum class Verdict { pass, fail, inconclusive } verdict = Verdict::inconclusive;
  std::optional<std::pair<Word, Word>> violation;
  std::string axiom;  // which axiom failed
  std::vector<Word> unresolved;
};

// Checks the positive-cone axioms on a finite ball: the disjoint partition
// G = P u N u Id and P * P inside P (restricted to products that land in the ball).
inline ConeCheckReport check_positive_cone(const GroupOracle& oracle,
                                           const std::function<bool(const Word&)>& cone,
                                           const std::vector<Word>& ball) {
  ConeCheckReport rep;
  std::set<std::vector<Sym>> ball_nf;
  std::vector<Word> nfs;
  for (const Word& w : ball) {
    Word nf = oracle.multiply(Word(), w);
    ball_nf.insert(nf.syms);
    nfs.push_back(nf);
  }

  std::vector<Word> positives;
  for (const Word& w : ball) {
    Tri triv = oracle.is_identity(w);
    if (triv == Tri::unknown) {
      rep.unresolved.push_back(w);
      continue;
    }
    bool in_p = cone(w);
    bool inv_in_p = cone(w.inverse());
    if (triv == Tri::yes) {
      if (in_p) {
        rep.verdict = ConeCheckReport::Verdict::fail;
        rep.violation = {w, w};
        rep.axiom = "Id must lie outside P";
        return rep;
      }
      continue;
    }
    if (in_p && inv_in_p) {
      rep.verdict = ConeCheckReport::Verdict::fail;
      rep.violation = {w, w.inverse()};
      rep.axiom = "P and P^{-1} must be disjoint";
      return rep;
    }
    if (!in_p && !inv_in_p) {
      rep.verdict = ConeCheckReport::Verdict::fail;
      rep.violation = {w, w.inverse()};
      rep.axiom = "partition: w and w^{-1} both outside P";
      return rep;
    }
    if (in_p) positives.push_back(w);
  }

  // membership: a normal-form hit, else an equality scan (normal forms need not
  // be canonical for every oracle)
  auto in_ball = [&](const Word& w) {
    if (ball_nf.count(w.syms)) return true;
    for (const Word& b : nfs)
      if (oracle.equal(b, w) == Tri::yes) return true;
    return false;
  };

  for (const Word& u : positives)
    for (const Word& v : positives) {
      Word uv = oracle.multiply(u, v);
      if (!in_ball(uv)) continue;
      Tri triv = oracle.is_identity(uv);
      if (triv == Tri::unknown) {
        rep.unresolved.push_back(uv);
        continue;
      }
      if (triv == Tri::yes) {
        rep.verdict = ConeCheckReport::Verdict::fail;
        rep.violation = {u, v};
        rep.axiom = "P * P reaches Id";
        return rep;
      }
      if (!cone(uv)) {
        rep.verdict = ConeCheckReport::Verdict::fail;
        rep.violation = {u, v};
        rep.axiom = "P * P must stay in P";
        return rep;
      }
    }

  rep.verdict = rep.unresolved.empty() ? ConeCheckReport::Verdict::pass
                                       : ConeCheckReport::Verdict::inconclusive;
  return rep;
}

}  // namespace orderlab
