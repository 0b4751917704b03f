#include <orderlab/cones.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

using namespace orderlab;

namespace {

GroupPresentation seifert_presentation() {
  GroupPresentation p;
  p.generator_count = 4;
  p.names = {"a", "b", "c", "t"};
  p.relators = {parse_word("a a T", p.names), parse_word("b b b T", p.names),
                parse_word("c c c c c c c T", p.names),
                parse_word("a b c T T T", p.names)};
  return p;
}

GroupPresentation z2_presentation() {
  GroupPresentation p;
  p.generator_count = 2;
  p.names = {"a", "b"};
  p.relators = {parse_word("a b A B", p.names)};
  return p;
}

RewriteOracle seifert_oracle() {
  return RewriteOracle(knuth_bendix_bounded(seifert_presentation(), 12, 400));
}

std::vector<Word> generator_base(const GroupPresentation& p) {
  std::vector<Word> base;
  for (int g = 0; g < p.generator_count; ++g) base.push_back(Word::letter(g, 1));
  return base;
}

}  // namespace

TEST_CASE("Seifert certificate: 16 assignments witnessed within depth 9") {
  auto oracle = seifert_oracle();
  auto res = search_non_lo_certificate(oracle, generator_base(seifert_presentation()), 9);
  REQUIRE(std::holds_alternative<NonLOCertificate>(res));
  auto cert = std::get<NonLOCertificate>(res);
  CHECK(cert.assignment_count() == 16);
  for (const auto& seq : cert.factor_seqs) {
    CHECK(!seq.empty());
    CHECK(seq.size() <= 9);
  }
  CHECK(verify_certificate(oracle, cert).pass);

  // the flagship all-positive witness replays to Id through the same system
  auto names = seifert_presentation().names;
  CHECK(oracle.is_identity(parse_word("c c c c c c b b a", names)) == Tri::yes);

  // determinism: re-running with the longest found witness length reproduces the
  // identical witness multiset
  std::size_t longest = 0;
  for (const auto& s : cert.factor_seqs) longest = std::max(longest, s.size());
  auto res2 = search_non_lo_certificate(oracle, generator_base(seifert_presentation()),
                                        (int)longest);
  REQUIRE(std::holds_alternative<NonLOCertificate>(res2));
  CHECK(std::get<NonLOCertificate>(res2).witnesses == cert.witnesses);
}

TEST_CASE("orderable groups yield NotFound") {
  RewriteOracle z2o(knuth_bendix_bounded(z2_presentation(), 8, 64));
  auto res = search_non_lo_certificate(z2o, generator_base(z2_presentation()), 6);
  REQUIRE(std::holds_alternative<NotFound>(res));
  CHECK(std::get<NotFound>(res).depth_explored == 6);

  RewriteOracle freeo = free_group_oracle(2);
  auto res2 = search_non_lo_certificate(freeo, {Word::letter(0, 1), Word::letter(1, 1)}, 5);
  CHECK(std::holds_alternative<NotFound>(res2));
}

TEST_CASE("verify_certificate rejects corrupted certificates") {
  auto oracle = seifert_oracle();
  auto res = search_non_lo_certificate(oracle, generator_base(seifert_presentation()), 9);
  auto cert = std::get<NonLOCertificate>(res);

  SECTION("wrong-sign letter") {
    auto bad = cert;
    bad.witnesses[0] = bad.witnesses[0].inverse();  // no longer matches factor signs
    auto rep = verify_certificate(oracle, bad);
    CHECK_FALSE(rep.pass);
    CHECK(rep.counterexample == std::vector<Id>{0});
  }
  SECTION("trace that does not reach the empty word") {
    auto bad = cert;
    // witness that is not the identity, with a stale trace
    bad.witnesses[1] = Word::letter(0, 1);
    bad.factor_seqs[1] = {0};
    auto rep = verify_certificate(oracle, bad);
    CHECK_FALSE(rep.pass);
  }
  SECTION("missing assignment") {
    auto bad = cert;
    bad.signs.pop_back();
    bad.factor_seqs.pop_back();
    bad.witnesses.pop_back();
    bad.traces.pop_back();
    CHECK_FALSE(verify_certificate(oracle, bad).pass);
  }
}

TEST_CASE("positive cone checks on Z^2") {
  auto p = z2_presentation();
  RewriteOracle oracle(knuth_bendix_bounded(p, 8, 64));
  auto ball = enumerate_ball(p, oracle, 3);
  REQUIRE(ball.all_certified);

  auto exponents = [&](const Word& w) {
    int m = 0, n = 0;
    for (Sym s : w.syms) (sym_gen(s) == 0 ? m : n) += sym_sign(s);
    return std::pair{m, n};
  };

  SECTION("lexicographic cone passes") {
    auto cone = [&](const Word& w) {
      auto [m, n] = exponents(w);
      return m > 0 || (m == 0 && n > 0);
    };
    auto rep = check_positive_cone(oracle, cone, ball.elements);
    CHECK(rep.verdict == ConeCheckReport::Verdict::pass);
  }
  SECTION("'m > 0 only' is not a cone") {
    auto cone = [&](const Word& w) { return exponents(w).first > 0; };
    auto rep = check_positive_cone(oracle, cone, ball.elements);
    REQUIRE(rep.verdict == ConeCheckReport::Verdict::fail);
    CHECK(rep.axiom == "partition: w and w^{-1} both outside P");
  }
  SECTION("cone containing Id fails") {
    auto cone = [&](const Word&) { return true; };
    auto rep = check_positive_cone(oracle, cone, ball.elements);
    CHECK(rep.verdict == ConeCheckReport::Verdict::fail);
  }
}

TEST_CASE("soundness: no sampled cone passes on a group with a certificate") {
  auto oracle = seifert_oracle();
  auto p = seifert_presentation();
  auto res = search_non_lo_certificate(oracle, generator_base(p), 9);
  REQUIRE(std::holds_alternative<NonLOCertificate>(res));

  auto ball = enumerate_ball(p, oracle, 3);
  std::mt19937 rng(20240817);
  int passes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // random candidate cone, consistent on inverse pairs
    std::map<std::vector<Sym>, bool> choice;
    auto cone = [&](const Word& w) -> bool {
      Word nf = oracle.multiply(Word(), w);
      Word inv_nf = oracle.multiply(Word(), w.inverse());
      auto key = std::min(nf.syms, inv_nf.syms);
      auto it = choice.find(key);
      if (it == choice.end())
        it = choice.emplace(key, std::uniform_int_distribution<int>(0, 1)(rng) != 0).first;
      bool is_min_side = nf.syms == key;
      return it->second == is_min_side;
    };
    auto rep = check_positive_cone(oracle, cone, ball.elements);
    if (rep.verdict == ConeCheckReport::Verdict::pass) ++passes;
  }
  CHECK(passes == 0);
}
