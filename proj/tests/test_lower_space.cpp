#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>

#include "latkit/builders.hpp"
#include "latkit/classes.hpp"
#include "latkit/lower_space.hpp"
#include "support.hpp"

using namespace latkit;
using testsupport::from_std;
using testsupport::ideal;
using testsupport::to_std;

namespace {

ElementSet d12(std::initializer_list<unsigned> ds) {
  ElementSet out;
  for (unsigned d : ds) out.insert(ideal(12, d));
  return out;
}

/// Sweep classes plus a few random subsets, on lattices small enough for the
/// power-set oracles.
template <typename F>
void for_each_small_space(std::size_t max_points, F&& f) {
  std::mt19937 rng(12345);
  for (const auto& L : testsupport::corpus_lattices()) {
    if (L.size() > 24) continue;
    for (ClassTag tag : sweep_tags()) {
      const auto S = LowerSpace::of_class(L, ElementClass::of(tag));
      if (S.points().count() <= max_points) f(S, to_token(tag));
    }
    std::bernoulli_distribution coin(0.4);
    for (int k = 0; k < 3; ++k) {
      ElementSet sigma;
      for (Index x = 0; x < L.size(); ++x)
        if (coin(rng)) sigma.insert(x);
      if (sigma.count() <= max_points) f(LowerSpace(L, sigma, "random"), std::string("random"));
    }
  }
}

std::set<std::size_t> points(const LowerSpace& S) { return to_std(S.points()); }

std::vector<std::set<std::size_t>> oracle_subbasis(const LowerSpace& S) {
  return oracle::subbasis(testsupport::to_raw(S.lattice()), points(S));
}

std::vector<ElementSet> oracle_family(const LowerSpace& S) {
  std::vector<ElementSet> out;
  for (const auto& a : oracle::closed_family(oracle_subbasis(S), points(S))) out.push_back(from_std(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("D12 spaces") {
  const auto L = build_divisor_quantale(12);
  const auto spec = LowerSpace::of_class(L, ElementClass::of(ClassTag::Spec));
  CHECK(spec.points() == d12({2, 3}));
  CHECK(spec.closed_sets().size() == 4);
  CHECK(is_T1(spec).holds());
  CHECK(is_connected(spec).is_counterexample());
  CHECK(strongly_disconnects(spec).holds());

  const auto prop = LowerSpace::of_class(L, ElementClass::of(ClassTag::Prop));
  CHECK(prop.points().count() == 5);
  CHECK(prop.above(ideal(12, 4)) == d12({4, 2}));
  CHECK(prop.above(L.top()).empty());
  CHECK(prop.point_closure(ideal(12, 6)) == d12({6, 2, 3}));
  CHECK(prop.point_closure(ideal(12, 2)) == d12({2}));
  CHECK(is_T0(prop).holds());
  CHECK(is_T1(prop).is_counterexample());
  CHECK(is_connected(prop).holds());
  CHECK(is_spectral(prop).holds());
  CHECK(is_sober(prop).holds());
}

TEST_CASE("subbasis members are deduplicated with their generators") {
  const auto L = build_divisor_quantale(12);
  const auto S = LowerSpace::of_class(L, ElementClass::of(ClassTag::Spec));
  std::size_t generators = 0;
  std::vector<ElementSet> seen;
  for (const auto& m : S.subbasis()) {
    CHECK(std::find(seen.begin(), seen.end(), m.points) == seen.end());
    seen.push_back(m.points);
    for (Index g : m.generators) CHECK(S.above(g) == m.points);
    generators += m.generators.size();
  }
  CHECK(generators == L.size());
  // (1) -> {}, (2) and (4) -> {(2)}, (3) -> {(3)}, (6) and (12) -> both
  CHECK(S.subbasis().size() == 4);
}

TEST_CASE("closed sets agree with the power-set oracle and both cross-checks") {
  std::size_t spaces = 0;
  for_each_small_space(12, [&](const LowerSpace& S, const std::string& tag) {
    CAPTURE(S.lattice().label());
    CAPTURE(tag);
    const auto expected = oracle_family(S);
    CHECK(S.closed_sets() == expected);
    if (S.points().count() <= 8) {
      auto fix = closed_sets_by_fixpoint(S);
      std::sort(fix.begin(), fix.end());
      CHECK(fix == expected);
      try {
        auto iu = closed_sets_by_intersections_of_unions(S);
        std::sort(iu.begin(), iu.end());
        CHECK(iu == expected);
      } catch (const TopologyError& e) {
        CHECK(e.kind() == TopologyErrorKind::FamilyTooLarge);
      }
    }
    for (const auto& c : expected) CHECK(S.is_closed(c));
    ++spaces;
  });
  CHECK(spaces > 500);
}

TEST_CASE("closure is a Kuratowski operator and matches the oracle") {
  std::mt19937 rng(99);
  for_each_small_space(12, [&](const LowerSpace& S, const std::string& tag) {
    CAPTURE(S.lattice().label());
    CAPTURE(tag);
    const auto sub = oracle_subbasis(S);
    const auto pts = points(S);
    const auto idx = S.points().indices();
    CHECK(S.closure({}).empty());
    CHECK(S.closure(S.points()) == S.points());
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k < 8; ++k) {
      ElementSet a, b;
      for (Index p : idx) {
        if (coin(rng)) a.insert(p);
        if (coin(rng)) b.insert(p);
      }
      const auto ca = S.closure(a);
      CHECK(a.is_subset_of(ca));
      CHECK(S.closure(ca) == ca);
      CHECK(S.closure(a | b) == (ca | S.closure(b)));
      CHECK(ca == from_std(oracle::closure(sub, pts, to_std(a))));
    }
  });
}

TEST_CASE("v is antitone and turns joins into intersections") {
  for (const auto& L : testsupport::corpus_lattices()) {
    for (ClassTag tag : sweep_tags()) {
      const auto S = LowerSpace::of_class(L, ElementClass::of(tag));
      for (Index x = 0; x < L.size(); ++x)
        for (Index y = 0; y < L.size(); ++y) {
          if (L.leq(x, y)) CHECK(S.above(y).is_subset_of(S.above(x)));
          CHECK(S.above(L.join(x, y)) == (S.above(x) & S.above(y)));
        }
      CHECK(S.above(L.bot()) == S.points());
    }
  }
}

TEST_CASE("separation, irreducibility and sobriety against the oracle") {
  for_each_small_space(12, [&](const LowerSpace& S, const std::string& tag) {
    CAPTURE(S.lattice().label());
    CAPTURE(tag);
    const auto sub = oracle_subbasis(S);
    const auto pts = points(S);
    const auto fam = oracle::closed_family(sub, pts);

    bool t0 = true, t1 = true;
    for (auto p : pts) {
      const auto cp = oracle::closure(sub, pts, {p});
      if (cp != std::set<std::size_t>{p}) t1 = false;
      for (auto q : pts)
        if (p != q && cp == oracle::closure(sub, pts, {q})) t0 = false;
    }
    CHECK(is_T0(S).holds() == t0);
    CHECK(is_T1(S).holds() == t1);

    std::vector<ElementSet> irr;
    bool sober = true;
    for (const auto& c : fam) {
      if (!oracle::irreducible(fam, c)) continue;
      irr.push_back(from_std(c));
      std::size_t generic = 0;
      for (auto p : c)
        if (oracle::closure(sub, pts, {p}) == c) ++generic;
      if (generic != 1) sober = false;
      CHECK(generic_points(S, from_std(c)).count() == generic);
    }
    std::sort(irr.begin(), irr.end());
    CHECK(irreducible_closed_sets(S) == irr);
    CHECK(is_sober(S).holds() == sober);
    CHECK(is_sober(S).holds() == sober_criterion(S).holds());

    bool connected = true;
    for (const auto& c : fam) {
      if (c.empty() || c == pts) continue;
      std::set<std::size_t> rest;
      std::set_difference(pts.begin(), pts.end(), c.begin(), c.end(), std::inserter(rest, rest.end()));
      if (oracle::is_closed(sub, pts, rest)) connected = false;
    }
    CHECK(is_connected(S).holds() == connected);
    CHECK(is_compact_space(S).holds());
  });
}

TEST_CASE("point closures of a class are the sets above its points") {
  for (const auto& L : testsupport::corpus_lattices()) {
    for (ClassTag tag : sweep_tags()) {
      const auto S = LowerSpace::of_class(L, ElementClass::of(tag));
      if (S.points().count() > 20) continue;
      S.points().for_each([&](Index x) {
        CHECK(S.point_closure(x) == S.above(x));
        CHECK(is_irreducible_closed(S, S.above(x)));
      });
    }
  }
}

TEST_CASE("errors") {
  const auto L = build_divisor_quantale(12);
  const LowerSpace tiny(L, L.carrier(), "tiny", 3);
  try {
    (void)tiny.closed_sets();
    FAIL("expected FamilyTooLarge");
  } catch (const TopologyError& e) {
    CHECK(e.kind() == TopologyErrorKind::FamilyTooLarge);
  }
  const auto S = LowerSpace::of_class(L, ElementClass::of(ClassTag::Spec));
  try {
    (void)generic_points(S, d12({2}) | ElementSet{ideal(12, 4)});
    FAIL("expected an error");
  } catch (const TopologyError& e) {
    CHECK(e.kind() != TopologyErrorKind::FamilyTooLarge);
  }
  CHECK_THROWS_AS((void)S.closure(d12({4})), TopologyError);
}

TEST_CASE("closed-set limit from the environment") {
  ::unsetenv("LATKIT_MAX_CLOSED_SETS");
  CHECK(closed_set_limit_from_env() == kDefaultMaxClosedSets);
  ::setenv("LATKIT_MAX_CLOSED_SETS", "17", 1);
  CHECK(closed_set_limit_from_env() == 17);
  ::setenv("LATKIT_MAX_CLOSED_SETS", "junk", 1);
  CHECK(closed_set_limit_from_env() == kDefaultMaxClosedSets);
  ::setenv("LATKIT_MAX_CLOSED_SETS", "0", 1);
  CHECK(closed_set_limit_from_env() == kDefaultMaxClosedSets);
  ::unsetenv("LATKIT_MAX_CLOSED_SETS");
}

TEST_CASE("strong disconnection") {
  const auto P2 = build_powerset_frame(2);
  const auto S = LowerSpace::of_class(P2, ElementClass::of(ClassTag::Spec));
  const auto v = strongly_disconnects(S);
  CHECK(v.holds());
  CHECK(strongly_disconnects(S, SplitReading::Subfamily).holds());
  const auto C3 = build_chain_quantale(3, ChainKind::Meet);
  CHECK_FALSE(strongly_disconnects(LowerSpace::of_class(C3, ElementClass::of(ClassTag::Prop))).holds());
}

TEST_CASE("the subbasis forms a topology exactly under the hull-kernel condition") {
  for (const auto& L : testsupport::corpus_lattices()) {
    for (ClassTag tag : sweep_tags()) {
      const auto S = LowerSpace::of_class(L, ElementClass::of(tag));
      CAPTURE(L.label());
      CAPTURE(to_token(tag));
      CHECK(forms_closed_topology(S).holds() == hkp_property(S).holds());
    }
  }
}
