#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "latkit/builders.hpp"
#include "latkit/classes.hpp"
#include "latkit/hom.hpp"
#include "support.hpp"

using namespace latkit;
using testsupport::ideal;

namespace {

LatticeHom gcd_quotient(unsigned m, unsigned n) {
  const auto src = build_divisor_quantale(m), dst = build_divisor_quantale(n);
  std::vector<Index> table;
  for (unsigned d : oracle::divisors(m)) table.push_back(ideal(n, std::gcd(d, n)));
  return validate_hom(src, dst, table);
}

HomLaw violated(const MultLattice& s, const MultLattice& t, std::vector<Index> map) {
  try {
    validate_hom(s, t, std::move(map));
  } catch (const HomViolation& e) {
    return e.law();
  }
  FAIL("map was accepted");
  return HomLaw::Shape;
}

const auto kSpec = ElementClass::of(ClassTag::Spec);

}  // namespace

TEST_CASE("D12 -> D4 fixture") {
  const auto h = gcd_quotient(12, 4);
  CHECK(is_surjective(h));
  CHECK(kernel_element(h) == ideal(12, 4));
  ElementSet ker{ideal(12, 4), ideal(12, 12)};
  CHECK(kernel_set(h) == ker);

  CHECK(check_continuity(h, kSpec).holds());
  const auto emb = check_embedding(h, kSpec);
  CHECK(emb.holds());
  const auto im = induced_map(h, kSpec);
  CHECK(im.image() == ElementSet{ideal(12, 2)});
  const auto sides = density_sides(h, kSpec);
  CHECK_FALSE(sides.dense);
  CHECK_FALSE(sides.kernel_below_meet);
  CHECK(check_density(h, kSpec).holds());
}

TEST_CASE("gcd quotients between divisor quantales") {
  std::size_t count = 0;
  for (unsigned m = 1; m <= 60; ++m)
    for (unsigned n : oracle::divisors(m)) {
      const auto h = gcd_quotient(m, n);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(is_surjective(h));
      // kernel of Z/m -> Z/n is the ideal (n)
      CHECK(kernel_element(h) == ideal(m, n));
      for (unsigned e : oracle::divisors(n)) {
        // largest ideal (d) of Z/m with gcd(d, n) a multiple of e is (e)
        CHECK(h.contraction(ideal(n, e)) == ideal(m, e));
      }
      for (ClassTag tag : {ClassTag::Spec, ClassTag::Max, ClassTag::IrrStrong}) {
        const auto c = ElementClass::of(tag);
        CHECK(has_contraction_property(h, c).holds());
        CHECK(check_continuity(h, c).holds());
        CHECK(check_embedding(h, c).holds());
        CHECK(check_density(h, c).holds());
      }
      ++count;
    }
  CHECK(count == 261);
}

TEST_CASE("contraction is the right adjoint") {
  for (const auto& h : testsupport::corpus_homs()) {
    const auto& s = h.source();
    const auto& t = h.target();
    CAPTURE(s.label());
    CAPTURE(t.label());
    for (Index x = 0; x < s.size(); ++x) {
      CHECK(s.leq(x, h.contraction(h(x))));
      for (Index y = 0; y < t.size(); ++y) CHECK(t.leq(h(x), y) == s.leq(x, h.contraction(y)));
    }
    for (Index y = 0; y < t.size(); ++y) {
      CHECK(t.leq(h(h.contraction(y)), y));
      CHECK(h.contraction(h(h.contraction(y))) == h.contraction(y));
    }
    CHECK(h.contraction(t.top()) == s.top());
    CHECK(kernel_element(h) == join_of(s, kernel_set(h)));
  }
}

TEST_CASE("induced maps pull subbasic sets back to subbasic sets") {
  for (const auto& h : testsupport::corpus_homs()) {
    if (!is_surjective(h)) continue;
    for (ClassTag tag : {ClassTag::Spec, ClassTag::Max, ClassTag::IrrStrong, ClassTag::Prop}) {
      const auto c = ElementClass::of(tag);
      if (!has_contraction_property(h, c).holds()) continue;
      const auto im = induced_map(h, c);
      const auto src = LowerSpace::of_class(h.source(), c);
      const auto dst = LowerSpace::of_class(h.target(), c);
      CHECK(im.domain == dst.points());
      for (Index x = 0; x < h.source().size(); ++x) CHECK(im.preimage(src.above(x)) == dst.above(h(x)));
    }
  }
}

TEST_CASE("validate_hom reports the first failing law") {
  const auto C3 = build_chain_quantale(3, ChainKind::Meet);
  const auto L3 = build_chain_quantale(3, ChainKind::Lukasiewicz);
  const auto P2 = build_powerset_frame(2);
  const auto C2 = build_chain_quantale(2, ChainKind::Meet);
  CHECK(violated(C3, C3, {0, 1}) == HomLaw::Shape);
  CHECK(violated(C3, C3, {0, 1, 3}) == HomLaw::Shape);
  CHECK(violated(C3, C3, {0, 2, 1}) == HomLaw::Monotone);
  CHECK(violated(P2, C2, {0, 0, 0, 1}) == HomLaw::Join);
  CHECK(violated(P2, C2, {0, 1, 1, 1}) == HomLaw::Meet);
  CHECK(violated(C3, L3, {0, 1, 2}) == HomLaw::Mul);
  CHECK(violated(C3, C3, {0, 1, 1}) == HomLaw::Unit);
  CHECK(violated(C3, C3, {1, 1, 2}) == HomLaw::Bottom);
}

TEST_CASE("identity and composition") {
  const auto L = build_divisor_quantale(60);
  const auto id = identity_hom(L);
  for (Index x = 0; x < L.size(); ++x) {
    CHECK(id(x) == x);
    CHECK(id.contraction(x) == x);
  }
  const auto f = gcd_quotient(60, 12), g = gcd_quotient(12, 4);
  const auto gf = compose(g, f);
  CHECK(gf.table() == gcd_quotient(60, 4).table());
  CHECK(gf.adjoint_table() == gcd_quotient(60, 4).adjoint_table());
  CHECK_THROWS(compose(f, g));
}

TEST_CASE("contraction property failures") {
  // C3 -> P2 sending the middle element to {0}: the contraction of the
  // coatom {1} is bot, which is not maximal in C3.
  const auto C3 = build_chain_quantale(3, ChainKind::Meet);
  const auto P2 = build_powerset_frame(2);
  const auto h = validate_hom(C3, P2, {0, 1, 3});
  CHECK_FALSE(is_surjective(h));
  const auto mx = ElementClass::of(ClassTag::Max);
  CHECK(has_contraction_property(h, mx).is_counterexample());
  try {
    (void)induced_map(h, mx);
    FAIL("expected ContractionPropertyFails");
  } catch (const HomError& e) {
    CHECK(e.kind() == HomErrorKind::ContractionPropertyFails);
    REQUIRE(e.element().has_value());
    CHECK(*e.element() == 2);
  }
  CHECK(has_contraction_property(h, kSpec).holds());
  try {
    (void)check_embedding(h, kSpec);
    FAIL("expected NotSurjective");
  } catch (const HomError& e) {
    CHECK(e.kind() == HomErrorKind::NotSurjective);
  }
}

TEST_CASE("subspace density pairings on divisor quantales") {
  for (unsigned n = 1; n <= 60; ++n) {
    const auto L = build_divisor_quantale(n);
    const auto d = subspace_density(L);
    CAPTURE(n);
    // s-rad is bot; Jac = p-rad = (rad n), bot exactly when n is squarefree
    const bool squarefree = oracle::squarefree_kernel(n) == n;
    CHECK(d.jacobson_is_s_radical == squarefree);
    CHECK(d.p_radical_is_s_radical == squarefree);
    CHECK(d.max_pairing());
    CHECK(d.spec_pairing());
    CHECK(check_subspace_density(L).holds());
  }
}
