#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "latkit/builders.hpp"
#include "latkit/harness.hpp"
#include "latkit/latfile.hpp"
#include "support.hpp"

using namespace latkit;

namespace {

const char* kSmall = "divisor=30,powerset=2,chain=4,products,enumerate=4,homs";

/// Text of the index-th BEGIN LATTICE ... END LATTICE block.
std::string lattice_text(const std::string& payload, std::size_t index = 0) {
  std::istringstream in(payload);
  std::string line, out;
  std::size_t seen = 0;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line.rfind("BEGIN LATTICE", 0) == 0) {
      inside = seen++ == index;
      continue;
    }
    if (line == "END LATTICE") {
      if (inside) return out;
      continue;
    }
    if (inside) out += line + "\n";
  }
  return out;
}

Verdict pick(const Evaluation& e, const std::string& reading) {
  if (reading.empty()) return e.primary;
  for (const auto& r : e.readings)
    if (r.name == reading) return r.verdict;
  FAIL("no reading " << reading);
  return {};
}

}  // namespace

TEST_CASE("theorem ids") {
  CHECK(all_theorems().size() == 28);
  for (TheoremId id : all_theorems()) {
    CHECK(parse_theorem(to_string(id)) == id);
    std::string lower = to_string(id);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    CHECK(parse_theorem(lower) == id);
  }
  CHECK_FALSE(parse_theorem("nope").has_value());
  std::vector<TheoremId> tracked;
  for (TheoremId id : all_theorems())
    if (is_tracked(id)) tracked.push_back(id);
  CHECK(tracked == std::vector<TheoremId>{TheoremId::HRX5, TheoremId::LFC, TheoremId::ZARISKI_T1});
  CHECK(scope_of(TheoremId::BIP1) == TheoremScope::Lattice);
  CHECK(scope_of(TheoremId::HKT) == TheoremScope::Sigma);
  CHECK(scope_of(TheoremId::CONMAP2) == TheoremScope::Hom);
}

TEST_CASE("scope mismatches are rejected") {
  const auto L = build_divisor_quantale(12);
  const auto spec = ElementClass::of(ClassTag::Spec);
  CHECK_THROWS_AS(evaluate(L, spec, TheoremId::CONMAP1), HarnessError);
  CHECK_THROWS_AS(evaluate(identity_hom(L), spec, TheoremId::HKT), HarnessError);
}

TEST_CASE("corpus spec text") {
  const auto d = CorpusSpec::default_spec();
  CHECK(d.to_string() == "divisor=60,powerset=3,chain=8,products,enumerate=5,homs");
  CHECK(CorpusSpec::parse(d.to_string()).to_string() == d.to_string());
  CHECK(CorpusSpec::parse("default").to_string() == d.to_string());
  CHECK(CorpusSpec::parse("none").to_string() == "none");
  CHECK(CorpusSpec::parse("").to_string() == "none");
  CHECK(CorpusSpec::parse("powerset=0").to_string() == "powerset=0");
  CHECK_THROWS_AS(CorpusSpec::parse("divisor=x"), HarnessError);
  CHECK_THROWS_AS(CorpusSpec::parse("bogus"), HarnessError);
  for (const char* too_big : {"divisor=5041", "powerset=5", "chain=33", "enumerate=7"}) {
    CAPTURE(too_big);
    try {
      CorpusSpec::parse(too_big);
      FAIL("accepted");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == LatticeErrorKind::BoundExceeded);
    }
  }
}

TEST_CASE("default corpus composition") {
  const auto& c = testsupport::default_corpus();
  // 60 divisor, 4 powerset, 16 chains, 21 products, 37 enumerated
  CHECK(c.lattices.size() == 138);
  CHECK(c.lattices.front().label() == "D1");
  CHECK(c.lattices[60].label() == "P0");
  CHECK(c.lattices[64].label() == "C1");
  CHECK(c.lattices[72].label() == "L1");
  CHECK(c.lattices.back().label().rfind("E5.", 0) == 0);
  std::size_t identities = 0, quotients = 0, projections = 0;
  for (const auto& h : c.homs) {
    const auto& s = h.source().label();
    const auto& t = h.target().label();
    if (s == t) ++identities;
    else if (s.find('x') != std::string::npos) ++projections;
    else ++quotients;
  }
  CHECK(identities == 60);
  CHECK(projections == 42);
  // pairs n | m with n < m <= 60
  CHECK(quotients == 261 - 60);
}

TEST_CASE("fixed verdicts") {
  const auto C3 = build_chain_quantale(3, ChainKind::Meet);
  SUBCASE("T1 readings on the three-element chain") {
    const auto prop = evaluate(C3, ElementClass::of(ClassTag::Prop), TheoremId::ZARISKI_T1);
    CHECK(prop.primary.holds());
    CHECK(pick(prop, "literal").is_counterexample());
    const auto minp = evaluate(C3, ElementClass::of(ClassTag::MinPrime), TheoremId::ZARISKI_T1);
    // a single point is T1 without being maximal
    CHECK(minp.primary.is_counterexample());
    CHECK(pick(minp, "antichain").holds());
    CHECK(pick(minp, "guarded").status == Status::HypothesisNotMet);
  }
  SUBCASE("idempotent splitting on the four-element Boolean frame") {
    const auto P2 = build_powerset_frame(2);
    const auto v = check(P2, ElementClass::of(ClassTag::Spec), TheoremId::PR1);
    CHECK(v.holds());
    CHECK(check(build_divisor_quantale(12), ElementClass::of(ClassTag::Spec), TheoremId::PR1).status ==
          Status::HypothesisNotMet);
  }
  SUBCASE("sobriety of the standard classes") {
    const auto L = build_divisor_quantale(12);
    CHECK(check(L, ElementClass::of(ClassTag::Prop), TheoremId::QSS).holds());
    CHECK(check(L, ElementClass::of(ClassTag::Nil), TheoremId::QSS).status == Status::HypothesisNotMet);
  }
  SUBCASE("connectedness needs bot in sigma") {
    const auto L = build_divisor_quantale(12);
    CHECK(check(L, ElementClass::of(ClassTag::Prop), TheoremId::CONN).holds());
    CHECK(check(L, ElementClass::of(ClassTag::Spec), TheoremId::CONN).status == Status::HypothesisNotMet);
  }
  SUBCASE("custom classes never enter hom statements") {
    const auto L = build_divisor_quantale(12);
    const auto c = ElementClass::custom_set("evens", L.carrier());
    CHECK(check(identity_hom(L), c, TheoremId::CONMAP1).status == Status::HypothesisNotMet);
  }
}

TEST_CASE("reports are deterministic across thread counts") {
  const auto spec = CorpusSpec::parse(kSmall);
  RunOptions one, many;
  one.threads = 1;
  many.threads = 8;
  const auto a = run_corpus(spec, one);
  const auto b = run_corpus(spec, many);
  CHECK(a.serialize() == b.serialize());
  CHECK(a.serialize(1000) == b.serialize(1000));
  CHECK(a.corpus == spec.to_string());
}

TEST_CASE("report layout and exit status") {
  const auto r = run_corpus(CorpusSpec::parse(kSmall));
  const auto text = r.serialize();
  CHECK(text.rfind("CORPUS " + std::string(kSmall) + " lattices=", 0) == 0);
  CHECK(text.find("\nRESULT pass\n") != std::string::npos);
  CHECK(text.find("\nCOUNTEREXAMPLES " + std::to_string(r.counterexamples.size()) + "\n") != std::string::npos);
  CHECK(r.exit_code() == 0);
  // only tracked theorems and readings contribute counterexamples
  for (const auto& c : r.counterexamples) CHECK((is_tracked(c.id) || !c.reading.empty()));
  // at most three blocks per theorem and reading by default
  std::map<std::string, int> blocks;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("COUNTEREXAMPLE ", 0) == 0) ++blocks[line.substr(0, line.rfind(' '))];
  for (const auto& [key, n] : blocks) CHECK(n <= 3);

  Report bad;
  bad.tallies[TheoremId::HKT].primary.add(Status::Counterexample);
  bad.counterexamples.push_back({TheoremId::HKT, "", "X", "spec", "w", ""});
  CHECK(bad.failed());
  CHECK(bad.exit_code() == 1);
  Report tracked;
  tracked.counterexamples.push_back({TheoremId::LFC, "", "X", "rad", "w", ""});
  tracked.counterexamples.push_back({TheoremId::HKT, "some-reading", "X", "spec", "w", ""});
  CHECK_FALSE(tracked.failed());
}

TEST_CASE("every reported counterexample replays from its payload") {
  const auto r = run_corpus(CorpusSpec::parse(kSmall));
  REQUIRE(!r.counterexamples.empty());
  for (const auto& c : r.counterexamples) {
    CAPTURE(c.instance);
    CAPTURE(c.reading);
    const auto file = parse_latfile(lattice_text(c.payload));
    const auto L = load_lattice(file);
    if (scope_of(c.id) == TheoremScope::Hom) continue;
    if (scope_of(c.id) == TheoremScope::Lattice) {
      CHECK(pick(evaluate(L, ElementClass::of(ClassTag::Prop), c.id), c.reading).is_counterexample());
      continue;
    }
    const auto cls = parse_class_token(c.sigma);
    REQUIRE(cls.has_value());
    const SigmaDecl* decl = file.find_sigma(c.sigma);
    REQUIRE(decl != nullptr);
    CHECK(classify(L, *cls).indices() == decl->members);
    CHECK(pick(evaluate(L, *cls, c.id), c.reading).is_counterexample());
  }
}
