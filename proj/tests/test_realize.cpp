#include <orderlab/realize.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace orderlab;

namespace {

CircularOrder geometric_order(const std::vector<Rat>& angles) {
  std::vector<Id> ids;
  for (std::size_t i = 0; i < angles.size(); ++i) ids.push_back((Id)i);
  auto orient = [angles](Id x, Id y, Id z) {
    Rat ay = frac(angles[(std::size_t)y] - angles[(std::size_t)x]);
    Rat az = frac(angles[(std::size_t)z] - angles[(std::size_t)x]);
    return ay < az ? 1 : -1;
  };
  auto v = circular_from_triples(ids, orient);
  REQUIRE(std::holds_alternative<CircularOrder>(v));
  return std::get<CircularOrder>(v);
}

}  // namespace

TEST_CASE("dynamical_realization of the rotation-by-thirds order") {
  CircularOrder co = geometric_order({Rat(0), Rat(1, 3), Rat(2, 3)});
  Embedding e = dynamical_realization(co, {0, 1, 2});
  CHECK(e.angle.at(0) == Rat(0));
  CHECK(e.angle.at(1) == Rat(1, 2));
  CHECK(e.angle.at(2) == Rat(3, 4));
}

TEST_CASE("dynamical_realization is order-faithful") {
  std::mt19937 rng(321);
  for (int n = 3; n <= 9; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      // random distinct angles make a circular order
      std::set<Rat> used;
      std::vector<Rat> angles;
      std::uniform_int_distribution<int> numd(0, 719);
      while ((int)angles.size() < n) {
        Rat a(numd(rng), 720);
        if (used.insert(a).second) angles.push_back(a);
      }
      CircularOrder co = geometric_order(angles);
      std::vector<Id> enumeration;
      for (int i = 0; i < n; ++i) enumeration.push_back(i);
      std::shuffle(enumeration.begin(), enumeration.end(), rng);
      Embedding e = dynamical_realization(co, enumeration);
      // all angles dyadic
      for (auto& [id, a] : e.angle) {
        Int d = den(a);
        while (d % 2 == 0) d /= 2;
        CHECK(d == 1);
      }
      for (Id x = 0; x < n; ++x)
        for (Id y = 0; y < n; ++y)
          for (Id z = 0; z < n; ++z) {
            if (x == y || y == z || x == z) continue;
            CHECK(e.orient(x, y, z) == co.orient(x, y, z));
          }
    }
  }
}

TEST_CASE("dynamical_realization rejects tiny carriers") {
  std::vector<Id> ids{0, 1};
  auto orient = [](Id, Id, Id) { return 1; };
  CircularOrder co(ids, orient);
  CHECK_THROWS_AS(dynamical_realization(co, ids), UsageError);
}

TEST_CASE("blow_up of the identity at one point") {
  auto [blown, data] = blow_up({PLLift::identity()}, {Rat(0)}, {Rat(1, 2)});
  REQUIRE(blown.size() == 1);
  CHECK(same_circle_map(blown[0], PLLift::identity()));
  // collapse flattens [0,1/3] to the point 0
  CHECK(data.collapse.eval(Rat(0)) == Rat(0));
  CHECK(data.collapse.eval(Rat(1, 3)) == Rat(0));
  CHECK(data.collapse.eval(Rat(1, 6)) == Rat(0));
  CHECK(data.collapse.eval(Rat(2, 3)) == Rat(1, 2));
  CHECK(data.weights == std::vector<Rat>{Rat(1, 3)});
}

TEST_CASE("blow_up of the half rotation") {
  PLLift rot = PLLift::rotation(Rat(1, 2));
  auto [blown, data] = blow_up({rot}, {Rat(0), Rat(1, 2)}, {Rat(1, 4), Rat(1, 4)});
  REQUIRE(blown.size() == 1);
  const PLLift& g = blown[0];

  // inserted intervals: [0,1/6] and [1/2,2/3]; the blown map exchanges them
  CHECK(g.eval(Rat(0)) == Rat(1, 2));
  CHECK(g.eval(Rat(1, 6)) == Rat(2, 3));
  CHECK(g.eval(Rat(1, 2)) == Rat(1));

  // exact semi-conjugacy at breakpoints and sampled rationals
  auto check_semiconj = [&](const Rat& x) {
    CHECK(data.collapse.eval(g.eval(x)) == rot.eval(data.collapse.eval(x)));
  };
  for (const auto& [x, v] : g.breakpoints()) {
    check_semiconj(x);
    (void)v;
  }
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> numd(0, 5039);
  for (int i = 0; i < 100; ++i) check_semiconj(Rat(numd(rng), 5040));
}

TEST_CASE("blow_up input validation") {
  CHECK_THROWS_AS(blow_up({PLLift::identity()}, {Rat(0)}, {Rat(1, 4), Rat(1, 4)}),
                  UsageError);
  // rotation by 1/2 does not permute the single-point orbit {0}
  CHECK_THROWS_AS(blow_up({PLLift::rotation(Rat(1, 2))}, {Rat(0)}, {Rat(1, 2)}),
                  OrbitNotClosed);
}

namespace {

// Z^2 rotation action: (m,n) rotates by m/3 + n/5; points are 15ths of the circle.
constexpr Id kOff = 50;
Id enc(int m, int n) { return (Id)(m + kOff) * 1000 + (n + kOff); }
int dec_m(Id g) { return (int)(g / 1000) - kOff; }
int dec_n(Id g) { return (int)(g % 1000) - kOff; }

Id rot_act(Id g, Id pt) {
  int v = (int)pt + 5 * dec_m(g) + 3 * dec_n(g);
  return (Id)(((v % 15) + 15) % 15);
}

CircularOrder fifteenths() {
  std::vector<Rat> angles;
  for (int k = 0; k < 15; ++k) angles.emplace_back(k, 15);
  return geometric_order(angles);
}

}  // namespace

TEST_CASE("order_from_action on commuting rotations") {
  CircularOrder pts = fifteenths();
  std::vector<Id> ball;
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n)
      if (std::abs(m) + std::abs(n) <= 2) ball.push_back(enc(m, n));

  SECTION("orientation from images of the basepoint") {
    CircularOrder co = order_from_action(ball, rot_act, pts, {0});
    CHECK(co.orient(enc(0, 0), enc(1, 0), enc(0, 1)) == -1);
    CHECK(co.orient(enc(0, 0), enc(0, 1), enc(1, 0)) == 1);
    // the radius-2 ball contains rotation-kernel ties, e.g. (1,0) ~ (-2,0);
    // without a kernel order those triples must fail loudly
    CHECK_THROWS_AS(co.orient(enc(1, 0), enc(-2, 0), enc(0, 0)),
                    IndistinguishableElements);
  }

  SECTION("kernel elements need a kernel order") {
    auto ball2 = ball;
    ball2.push_back(enc(3, -5));  // acts trivially: 3/3 - 5/5 is an integer
    CircularOrder co = order_from_action(ball2, rot_act, pts, {0});
    CHECK_THROWS_AS(co.orient(enc(3, -5), enc(0, 0), enc(1, 0)),
                    IndistinguishableElements);
  }

  SECTION("kernel order resolves the tie") {
    auto ball2 = ball;
    ball2.push_back(enc(3, -5));
    ball2.push_back(enc(-3, 5));
    // kernel of the rotation action: 5m + 3n = 0 mod 15; order it lexicographically
    std::vector<Id> kernel_ids;
    for (int m = -15; m <= 15; ++m)
      for (int n = -15; n <= 15; ++n)
        if (((5 * m + 3 * n) % 15 + 15) % 15 == 0) kernel_ids.push_back(enc(m, n));
    std::sort(kernel_ids.begin(), kernel_ids.end(), [](Id a, Id b) {
      return std::pair(dec_m(a), dec_n(a)) < std::pair(dec_m(b), dec_n(b));
    });
    TotalOrder korder = TotalOrder::from_sorted(kernel_ids);
    auto kdiff = [](Id g1, Id g2) -> std::optional<Id> {
      int m = dec_m(g1) - dec_m(g2), n = dec_n(g1) - dec_n(g2);
      if (((5 * m + 3 * n) % 15 + 15) % 15 != 0) return std::nullopt;
      return enc(m, n);
    };
    CircularOrder co =
        order_from_action(ball2, rot_act, pts, {0}, kdiff, &korder, enc(0, 0));
    auto validated = circular_from_triples(
        ball2, [&](Id x, Id y, Id z) { return co.orient(x, y, z); });
    CHECK(std::holds_alternative<CircularOrder>(validated));
  }
}
