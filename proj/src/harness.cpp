#include "latkit/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <charconv>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>

#include "latkit/builders.hpp"
#include "latkit/latfile.hpp"
#include "latkit/lower_space.hpp"

namespace latkit {

namespace {

struct TheoremInfo {
  TheoremId id;
  const char* name;
  TheoremScope scope;
  bool tracked;
};

constexpr std::array<TheoremInfo, 28> kTheorems{{
    {TheoremId::BIP1, "BIP1", TheoremScope::Lattice, false},
    {TheoremId::BIP2, "BIP2", TheoremScope::Lattice, false},
    {TheoremId::BIP3, "BIP3", TheoremScope::Lattice, false},
    {TheoremId::BIP4, "BIP4", TheoremScope::Lattice, false},
    {TheoremId::HKT, "HKT", TheoremScope::Sigma, false},
    {TheoremId::HRRAD, "HRRAD", TheoremScope::Sigma, false},
    {TheoremId::HRX1, "HRX1", TheoremScope::Sigma, false},
    {TheoremId::HRX2, "HRX2", TheoremScope::Sigma, false},
    {TheoremId::HRX3, "HRX3", TheoremScope::Sigma, false},
    {TheoremId::HRX4, "HRX4", TheoremScope::Sigma, false},
    {TheoremId::HRX5, "HRX5", TheoremScope::Sigma, true},
    {TheoremId::LFC, "LFC", TheoremScope::Sigma, true},
    {TheoremId::CSB, "CSB", TheoremScope::Sigma, false},
    {TheoremId::CQC, "CQC", TheoremScope::Sigma, false},
    {TheoremId::T0A, "T0A", TheoremScope::Sigma, false},
    {TheoremId::IRRC, "IRRC", TheoremScope::Sigma, false},
    {TheoremId::SPIIR, "SPIIR", TheoremScope::Lattice, false},
    {TheoremId::ZARISKI_T1, "ZARISKI_T1", TheoremScope::Sigma, true},
    {TheoremId::SOB, "SOB", TheoremScope::Sigma, false},
    {TheoremId::QSS, "QSS", TheoremScope::Sigma, false},
    {TheoremId::TSQS, "TSQS", TheoremScope::Lattice, false},
    {TheoremId::PR1, "PR1", TheoremScope::Sigma, false},
    {TheoremId::CONN, "CONN", TheoremScope::Sigma, false},
    {TheoremId::CONMAP1, "CONMAP1", TheoremScope::Hom, false},
    {TheoremId::CONMAP2, "CONMAP2", TheoremScope::Hom, false},
    {TheoremId::CONMAP3, "CONMAP3", TheoremScope::Hom, false},
    {TheoremId::DENSITY_MAX, "DENSITY_MAX", TheoremScope::Lattice, false},
    {TheoremId::DENSITY_SPEC, "DENSITY_SPEC", TheoremScope::Lattice, false},
}};

const TheoremInfo& info(TheoremId id) { return kTheorems[static_cast<std::size_t>(id)]; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

Verdict from_bool(bool ok, Witness w) { return ok ? Verdict::hold() : Verdict::counterexample(std::move(w)); }

// Two checkers that a theorem claims are equivalent.
Verdict agreement(const Verdict& a, const Verdict& b, const char* a_name, const char* b_name) {
  if (a.holds() == b.holds()) return Verdict::hold();
  const Verdict& evidence = a.holds() ? b : a;
  Witness w = evidence.witness;
  w.note = std::string(a_name) + "=" + yes_no(a.holds()) + " " + b_name + "=" + yes_no(b.holds()) +
           (evidence.witness.note.empty() ? "" : "; " + evidence.witness.note);
  return Verdict::counterexample(std::move(w));
}

// The finiteness hypotheses, evaluated from their definitions.
std::optional<Verdict> finite_hypotheses(const MultLattice& L, bool top_compact, bool max_bounded) {
  if (!is_compactly_generated(L)) return Verdict::hypothesis_not_met("not compactly generated");
  if (top_compact && !is_compact_element(L, L.top())) return Verdict::hypothesis_not_met("top is not compact");
  if (max_bounded && !is_max_bounded(L)) return Verdict::hypothesis_not_met("not max-bounded");
  return std::nullopt;
}

Verdict bip(const MultLattice& L, int part) {
  const Index n = L.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      switch (part) {
        case 1:
          if (!L.leq(L.mul(x, y), L.meet(x, y))) return Verdict::counterexample({{x, y}, {}, "x*y not below x meet y"});
          break;
        case 2:
          if (y == 0 && L.mul(x, L.bot()) != L.bot()) return Verdict::counterexample({{x}, {}, "x*0 != 0"});
          break;
        case 3:
          if (!L.leq(x, y)) break;
          for (Index z = 0; z < n; ++z)
            if (!L.leq(L.mul(x, z), L.mul(y, z)))
              return Verdict::counterexample({{x, y, z}, {}, "x <= y but x*z not below y*z"});
          break;
        case 4:
          if (!L.leq(x, y)) break;
          for (Index u = 0; u < n; ++u)
            for (Index v = 0; v < n; ++v)
              if (L.leq(u, v) && !L.leq(L.mul(x, u), L.mul(y, v)))
                return Verdict::counterexample({{x, y, u, v}, {}, "x*u not below y*v"});
          break;
      }
    }
  }
  return Verdict::hold();
}

ElementSet maximal_within(const MultLattice& L, const ElementSet& s) {
  ElementSet out;
  s.for_each([&](Index x) {
    ElementSet above = L.up(x) & s;
    above.erase(x);
    if (above.empty()) out.insert(x);
  });
  return out;
}

bool is_antichain(const MultLattice& L, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](Index x) {
    ElementSet above = L.up(x) & s;
    above.erase(x);
    ok = ok && above.empty();
  });
  return ok;
}

Verdict t1_reading(const Verdict& t1, bool condition, const char* what) {
  if (t1.holds() == condition) return Verdict::hold();
  Witness w = t1.witness;
  w.note = std::string("T1=") + yes_no(t1.holds()) + " " + what + "=" + yes_no(condition);
  return Verdict::counterexample(std::move(w));
}

Verdict pr1(const MultLattice& L, const LowerSpace& S, SplitReading reading) {
  if (jacobson(L) != L.bot()) return Verdict::hypothesis_not_met("Jacobson radical is not bot");
  if (!classify(L, ClassTag::Max).is_subset_of(S.points())) return Verdict::hypothesis_not_met("a maximal element is missing");
  const Verdict split = strongly_disconnects(S, reading);
  if (!split.holds()) return Verdict::hypothesis_not_met("subbasis does not strongly disconnect");
  for (Index e = 0; e < L.size(); ++e) {
    if (e != L.bot() && e != L.top() && L.mul(e, e) == e) {
      Verdict v = Verdict::hold("idempotent " + L.name(e));
      v.witness.elements = {e};
      return v;
    }
  }
  Witness w = split.witness;
  w.note = "space splits but no nontrivial idempotent exists";
  return Verdict::counterexample(std::move(w));
}

Verdict lattice_density(const MultLattice& L, bool corrected, bool max_side) {
  if (auto h = finite_hypotheses(L, true, false)) return *h;
  const SubspaceDensity d = subspace_density(L);
  const bool ok = max_side ? (corrected ? d.max_pairing() : d.swapped_max_pairing())
                           : (corrected ? d.spec_pairing() : d.swapped_spec_pairing());
  std::string note = std::string("max_dense=") + yes_no(d.max_dense) + " spec_dense=" + yes_no(d.spec_dense) +
                     " jac=s_rad=" + yes_no(d.jacobson_is_s_radical) + " p_rad=s_rad=" +
                     yes_no(d.p_radical_is_s_radical);
  if (ok) return Verdict::hold(note);
  return Verdict::counterexample({{jacobson(L), p_radical(L), s_radical(L)}, {}, note});
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& t : kTheorems) out.push_back(t.id);
    return out;
  }();
  return ids;
}

std::string to_string(TheoremId id) { return info(id).name; }

std::optional<TheoremId> parse_theorem(std::string_view token) {
  std::string upper(token);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& t : kTheorems)
    if (upper == t.name) return t.id;
  return std::nullopt;
}

TheoremScope scope_of(TheoremId id) { return info(id).scope; }
bool is_tracked(TheoremId id) { return info(id).tracked; }

Evaluation evaluate(const MultLattice& L, const ElementClass& sigma, TheoremId id) {
  if (scope_of(id) == TheoremScope::Hom) {
    throw HarnessError(to_string(id) + " is stated for homomorphisms");
  }
  const LowerSpace S(L, classify(L, sigma), to_token(sigma));
  const ElementSet& pts = S.points();
  const ElementSet max = classify(L, ClassTag::Max);
  Evaluation e;
  switch (id) {
    case TheoremId::BIP1: e.primary = bip(L, 1); break;
    case TheoremId::BIP2: e.primary = bip(L, 2); break;
    case TheoremId::BIP3: e.primary = bip(L, 3); break;
    case TheoremId::BIP4: e.primary = bip(L, 4); break;
    case TheoremId::HKT:
      e.primary = agreement(forms_closed_topology(S), hkp_property(S), "forms_closed_topology", "hkp");
      break;
    case TheoremId::HRRAD: {
      e.primary = check_v_radical(S);
      const RadicalSides s = radical_sides(S);
      const bool agree = s.all_elements == s.sigma_elements && s.sigma_elements == s.sigma_is_rad;
      e.readings.push_back({"equality", from_bool(agree, {{}, {pts}, "all elements: " + yes_no(s.all_elements) +
                                                                         ", sigma elements: " +
                                                                         yes_no(s.sigma_elements) +
                                                                         ", sigma equals Rad: " +
                                                                         yes_no(s.sigma_is_rad)})});
      break;
    }
    case TheoremId::HRX1: e.primary = check_hrx(S, 1); break;
    case TheoremId::HRX2: e.primary = check_hrx(S, 2); break;
    case TheoremId::HRX3: e.primary = check_hrx(S, 3); break;
    case TheoremId::HRX4: e.primary = check_hrx(S, 4); break;
    case TheoremId::HRX5:
      e.primary = check_hrx(S, 5);
      e.readings.push_back({"meet-dense", check_hrx5_meet_dense(S)});
      break;
    case TheoremId::LFC: {
      if (auto h = finite_hypotheses(L, false, true)) {
        e.primary = *h;
        e.readings.push_back({"top-excluded", *h});
        break;
      }
      e.primary = check_lfc(S);
      e.readings.push_back({"top-excluded", pts.contains(L.top()) ? Verdict::hypothesis_not_met("top lies in sigma")
                                                                   : check_lfc(S)});
      break;
    }
    case TheoremId::CSB:
      if (auto h = finite_hypotheses(L, true, true)) {
        e.primary = *h;
      } else if (!max.is_subset_of(pts)) {
        e.primary = Verdict::hypothesis_not_met("a maximal element is missing");
      } else {
        e.primary = is_compact_space(S);
      }
      break;
    case TheoremId::CQC: {
      if (auto h = finite_hypotheses(L, true, false)) {
        e.primary = *h;
        break;
      }
      const ElementSet top_points = maximal_within(L, pts);
      bool bounded = true;
      pts.for_each([&](Index x) { bounded = bounded && L.up(x).intersects(top_points); });
      const LowerSpace tops(L, top_points);
      const Verdict lhs = is_compact_space(S);
      const Verdict rhs = bounded ? is_compact_space(tops)
                                  : Verdict::counterexample({{}, {top_points}, "a point lies below no maximal point"});
      e.primary = agreement(lhs, rhs, "compact", "bounded_and_max_compact");
      break;
    }
    case TheoremId::T0A: e.primary = is_T0(S); break;
    case TheoremId::IRRC: {
      e.primary = Verdict::hold();
      pts.for_each([&](Index x) {
        if (!e.primary.holds()) return;
        const ElementSet v = S.above(x);
        if (!is_irreducible_closed(S, v)) {
          e.primary = Verdict::counterexample({{x}, {v}, "above(x) is reducible"});
        } else if (S.point_closure(x) != v) {
          e.primary = Verdict::counterexample({{x}, {v, S.point_closure(x)}, "closure of x differs from above(x)"});
        }
      });
      break;
    }
    case TheoremId::SPIIR: {
      const LowerSpace prop = LowerSpace::of_class(L, ElementClass::of(ClassTag::Prop));
      e.primary = Verdict::hold();
      for (const auto& m : prop.subbasis()) {
        if (!m.points.empty() && !is_irreducible_closed(prop, m.points)) {
          e.primary = Verdict::counterexample({{m.generators.front()}, {m.points}, "reducible subbasic set"});
          break;
        }
      }
      break;
    }
    case TheoremId::ZARISKI_T1: {
      if (auto h = finite_hypotheses(L, true, false)) {
        e.primary = *h;
        e.readings = {{"literal", *h}, {"antichain", *h}, {"guarded", *h}};
        break;
      }
      const Verdict t1 = is_T1(S);
      e.primary = t1_reading(t1, pts.is_subset_of(max), "sigma_in_max");
      e.readings.push_back({"literal", t1_reading(t1, max.is_subset_of(pts), "max_in_sigma")});
      e.readings.push_back({"antichain", t1_reading(t1, is_antichain(L, pts), "antichain")});
      // The proof places a maximal element above each point, so it needs them all in sigma.
      e.readings.push_back({"guarded", max.is_subset_of(pts)
                                           ? t1_reading(t1, pts.is_subset_of(max), "sigma_in_max")
                                           : Verdict::hypothesis_not_met("a maximal element is missing")});
      break;
    }
    case TheoremId::SOB: e.primary = agreement(is_sober(S), sober_criterion(S), "sober", "criterion"); break;
    case TheoremId::QSS:
      if (sigma.tag != ClassTag::Prop && sigma.tag != ClassTag::Spec && sigma.tag != ClassTag::IrrStrong) {
        e.primary = Verdict::hypothesis_not_met("class is not prop, spec or irr+");
      } else {
        e.primary = is_sober(S);
      }
      break;
    case TheoremId::TSQS:
      if (auto h = finite_hypotheses(L, true, true)) {
        e.primary = *h;
      } else {
        e.primary = is_spectral(LowerSpace::of_class(L, ElementClass::of(ClassTag::Prop)));
      }
      break;
    case TheoremId::PR1:
      e.primary = pr1(L, S, SplitReading::SingleMember);
      e.readings.push_back({"subfamily", pr1(L, S, SplitReading::Subfamily)});
      break;
    case TheoremId::CONN:
      e.primary = pts.contains(L.bot()) ? is_connected(S) : Verdict::hypothesis_not_met("bot is not in sigma");
      break;
    case TheoremId::DENSITY_MAX:
      e.primary = lattice_density(L, true, true);
      e.readings.push_back({"literal", lattice_density(L, false, true)});
      break;
    case TheoremId::DENSITY_SPEC:
      e.primary = lattice_density(L, true, false);
      e.readings.push_back({"literal", lattice_density(L, false, false)});
      break;
    case TheoremId::CONMAP1:
    case TheoremId::CONMAP2:
    case TheoremId::CONMAP3:
      break;
  }
  return e;
}

Evaluation evaluate(const LatticeHom& h, const ElementClass& sigma, TheoremId id) {
  if (scope_of(id) != TheoremScope::Hom) throw HarnessError(to_string(id) + " is not stated for homomorphisms");
  Evaluation e;
  // A SIGMA line names indices of one lattice; it says nothing about the
  // other end of the map.
  if (sigma.tag == ClassTag::Custom) {
    e.primary = Verdict::hypothesis_not_met("custom class is not defined on both lattices");
    return e;
  }
  if (!has_contraction_property(h, sigma).holds()) {
    e.primary = Verdict::hypothesis_not_met("class lacks the contraction property");
    return e;
  }
  switch (id) {
    case TheoremId::CONMAP1: e.primary = check_continuity(h, sigma); break;
    case TheoremId::CONMAP2:
      e.primary = is_surjective(h) ? check_embedding(h, sigma) : Verdict::hypothesis_not_met("not surjective");
      break;
    case TheoremId::CONMAP3: e.primary = check_density(h, sigma); break;
    default: break;
  }
  return e;
}

// ---------------------------------------------------------------------------

CorpusSpec CorpusSpec::default_spec() {
  CorpusSpec s;
  s.divisor_max = 60;
  s.powerset_max = 3;
  s.chain_max = 8;
  s.products = true;
  s.enumerate_max = 5;
  s.homs = true;
  return s;
}

CorpusSpec CorpusSpec::parse(std::string_view text) {
  if (text == "default") return default_spec();
  CorpusSpec s;
  if (text.empty() || text == "none") return s;
  auto bound = [](std::string_view key, std::string_view value, unsigned limit) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw HarnessError("corpus: " + std::string(key) + " needs a number, got '" + std::string(value) + "'");
    }
    if (v > limit) {
      throw LatticeError(LatticeErrorKind::BoundExceeded, "BoundExceeded: " + std::string(key) + "=" +
                                                              std::to_string(v) + " exceeds " + std::to_string(limit));
    }
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view item = text.substr(start, stop - start);
    const std::size_t eq = item.find('=');
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = eq == std::string_view::npos ? std::string_view{} : item.substr(eq + 1);
    const bool has_value = eq != std::string_view::npos;
    if (key == "divisor" && has_value) {
      s.divisor_max = bound(key, value, kMaxCorpusDivisor);
    } else if (key == "powerset" && has_value) {
      s.powerset_max = bound(key, value, kMaxCorpusPowerset);
    } else if (key == "chain" && has_value) {
      s.chain_max = bound(key, value, kMaxCorpusChain);
    } else if (key == "enumerate" && has_value) {
      s.enumerate_max = bound(key, value, kDefaultEnumerationBound);
    } else if (key == "products" && !has_value) {
      s.products = true;
    } else if (key == "homs" && !has_value) {
      s.homs = true;
    } else {
      throw HarnessError("corpus: unknown item '" + std::string(item) + "'");
    }
    if (stop == text.size()) break;
    start = stop + 1;
  }
  return s;
}

std::string CorpusSpec::to_string() const {
  std::vector<std::string> items;
  if (divisor_max) items.push_back("divisor=" + std::to_string(divisor_max));
  if (powerset_max) items.push_back("powerset=" + std::to_string(*powerset_max));
  if (chain_max) items.push_back("chain=" + std::to_string(chain_max));
  if (products) items.push_back("products");
  if (enumerate_max) items.push_back("enumerate=" + std::to_string(enumerate_max));
  if (homs) items.push_back("homs");
  if (items.empty()) return "none";
  std::string out = items[0];
  for (std::size_t i = 1; i < items.size(); ++i) out += "," + items[i];
  return out;
}

Corpus build_corpus(const CorpusSpec& spec) {
  Corpus c;
  std::vector<MultLattice> divisors;
  for (unsigned n = 1; n <= spec.divisor_max; ++n) divisors.push_back(build_divisor_quantale(n));
  c.lattices = divisors;
  if (spec.powerset_max)
    for (unsigned k = 0; k <= *spec.powerset_max; ++k) c.lattices.push_back(build_powerset_frame(k));
  for (ChainKind kind : {ChainKind::Meet, ChainKind::Lukasiewicz})
    for (unsigned n = 1; n <= spec.chain_max; ++n) c.lattices.push_back(build_chain_quantale(n, kind));
  std::vector<std::pair<MultLattice, std::pair<MultLattice, MultLattice>>> products;
  if (spec.products) {
    const std::vector<MultLattice> small{
        build_chain_quantale(2, ChainKind::Meet), build_chain_quantale(3, ChainKind::Meet),
        build_chain_quantale(3, ChainKind::Lukasiewicz), build_powerset_frame(2),
        build_divisor_quantale(4), build_divisor_quantale(6),
    };
    for (std::size_t i = 0; i < small.size(); ++i) {
      for (std::size_t j = i; j < small.size(); ++j) {
        MultLattice p = build_product(small[i], small[j]);
        c.lattices.push_back(p);
        products.push_back({p, {small[i], small[j]}});
      }
    }
  }
  if (spec.enumerate_max) {
    enumerate_lattices(spec.enumerate_max, [&](const MultLattice& L) { c.lattices.push_back(L); });
  }
  if (spec.homs) {
    for (const auto& D : divisors) c.homs.push_back(identity_hom(D));
    for (unsigned m = 1; m <= spec.divisor_max; ++m) {
      const MultLattice& src = divisors[m - 1];
      for (unsigned n = 1; n < m; ++n) {
        if (m % n != 0) continue;
        const MultLattice& dst = divisors[n - 1];
        std::vector<Index> map(src.size());
        unsigned d = 0;
        for (Index x = 0; x < src.size(); ++x) {
          do ++d;
          while (m % d != 0);
          map[x] = divisor_index(n, std::gcd(d, n));
        }
        c.homs.push_back(validate_hom(src, dst, std::move(map)));
      }
    }
    for (const auto& [p, factors] : products) {
      const auto& [a, b] = factors;
      std::vector<Index> first(p.size()), second(p.size());
      for (Index x = 0; x < p.size(); ++x) {
        first[x] = x / b.size();
        second[x] = x % b.size();
      }
      c.homs.push_back(validate_hom(p, a, std::move(first)));
      c.homs.push_back(validate_hom(p, b, std::move(second)));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------

void Tally::add(Status s) {
  switch (s) {
    case Status::Holds: ++holds; break;
    case Status::HypothesisNotMet: ++hypothesis_not_met; break;
    case Status::Counterexample: ++counterexamples; break;
  }
}

Tally& Tally::operator+=(const Tally& o) {
  holds += o.holds;
  hypothesis_not_met += o.hypothesis_not_met;
  counterexamples += o.counterexamples;
  return *this;
}

bool Report::failed() const {
  for (const auto& [id, t] : tallies)
    if (!is_tracked(id) && t.primary.counterexamples > 0) return true;
  return false;
}

namespace {

std::string tally_fields(const Tally& t) {
  return "holds=" + std::to_string(t.holds) + " hyp_fail=" + std::to_string(t.hypothesis_not_met) +
         " cex=" + std::to_string(t.counterexamples);
}

std::string lattice_block(const MultLattice& L, const std::string& role, const std::vector<SigmaDecl>& sigmas) {
  std::string out = "BEGIN LATTICE " + role + "\n";
  out += serialize_latfile(L, sigmas);
  return out + "END LATTICE\n";
}

std::string display_label(const MultLattice& L) { return L.label().empty() ? "lattice" : L.label(); }

}  // namespace

std::string Report::serialize(std::size_t cap) const {
  std::string out = "CORPUS " + corpus + " lattices=" + std::to_string(lattices) + " homs=" + std::to_string(homs) + "\n";
  for (const auto& [id, t] : tallies) {
    out += "THEOREM " + to_string(id) + " " + tally_fields(t.primary) + (is_tracked(id) ? " tracked" : "") + "\n";
    for (const auto& [name, r] : t.readings) out += "  reading " + name + " " + tally_fields(r) + "\n";
  }
  std::map<std::pair<TheoremId, std::string>, std::size_t> shown;
  for (const auto& c : counterexamples) {
    if (shown[{c.id, c.reading}]++ >= cap) continue;
    out += "\nCOUNTEREXAMPLE " + to_string(c.id) + (c.reading.empty() ? "" : " reading=" + c.reading) + " " +
           c.instance + "\n";
    out += "WITNESS " + c.witness + "\n";
    out += c.payload;
  }
  out += "\nCOUNTEREXAMPLES " + std::to_string(counterexamples.size()) + "\n";
  out += std::string("RESULT ") + (failed() ? "fail" : "pass") + "\n";
  return out;
}

namespace {

struct UnitResult {
  std::map<TheoremId, TheoremTally> tallies;
  std::vector<CounterexampleRecord> counterexamples;
};

void record(UnitResult& r, TheoremId id, const Evaluation& e, const std::string& instance, const std::string& sigma,
            const MultLattice& witness_lattice, const std::function<std::string()>& payload) {
  auto& t = r.tallies[id];
  t.primary.add(e.primary.status);
  auto keep = [&](const Verdict& v, const std::string& reading) {
    if (!v.is_counterexample()) return;
    r.counterexamples.push_back({id, reading, instance, sigma, describe(witness_lattice, v), payload()});
  };
  keep(e.primary, "");
  for (const auto& reading : e.readings) {
    t.readings[reading.name].add(reading.verdict.status);
    keep(reading.verdict, reading.name);
  }
}

UnitResult run_lattice(const MultLattice& L, const RunOptions& options, const std::vector<ElementClass>& classes) {
  UnitResult r;
  for (TheoremId id : options.theorems) {
    switch (scope_of(id)) {
      case TheoremScope::Hom: break;
      case TheoremScope::Lattice: {
        const ElementClass prop = ElementClass::of(ClassTag::Prop);
        record(r, id, evaluate(L, prop, id), display_label(L), "", L,
               [&] { return lattice_block(L, display_label(L), {}); });
        break;
      }
      case TheoremScope::Sigma:
        for (const ElementClass& c : classes) {
          const std::string token = to_token(c);
          record(r, id, evaluate(L, c, id), display_label(L) + " sigma=" + token, token, L, [&] {
            return lattice_block(L, display_label(L), {{token, classify(L, c).indices()}});
          });
        }
        break;
    }
  }
  return r;
}

UnitResult run_hom(const LatticeHom& h, const RunOptions& options, const std::vector<ElementClass>& classes) {
  UnitResult r;
  const std::string name = display_label(h.source()) + "->" + display_label(h.target());
  for (TheoremId id : options.theorems) {
    if (scope_of(id) != TheoremScope::Hom) continue;
    for (const ElementClass& c : classes) {
      const std::string token = to_token(c);
      record(r, id, evaluate(h, c, id), name + " sigma=" + token, token, h.source(), [&] {
        std::string out = lattice_block(h.source(), "source " + display_label(h.source()), {});
        out += lattice_block(h.target(), "target " + display_label(h.target()), {});
        for (Index x = 0; x < h.source().size(); ++x)
          out += "MAP " + std::to_string(x) + " -> " + std::to_string(h(x)) + "\n";
        return out;
      });
    }
  }
  return r;
}

}  // namespace

Report run(const Corpus& corpus, const RunOptions& options, std::string corpus_label) {
  std::vector<ElementClass> classes = options.classes;
  if (classes.empty())
    for (ClassTag t : sweep_tags()) classes.push_back(ElementClass::of(t));

  const std::size_t units = corpus.lattices.size() + corpus.homs.size();
  std::vector<UnitResult> results(units);
  std::vector<std::exception_ptr> errors(units);
  auto work = [&](std::size_t i) {
    try {
      if (i < corpus.lattices.size()) {
        results[i] = run_lattice(corpus.lattices[i], options, classes);
      } else {
        results[i] = run_hom(corpus.homs[i - corpus.lattices.size()], options, classes);
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(units, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < units; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < units; i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Report report;
  report.corpus = std::move(corpus_label);
  report.lattices = corpus.lattices.size();
  report.homs = corpus.homs.size();
  for (TheoremId id : options.theorems) {
    const bool applies = scope_of(id) == TheoremScope::Hom ? !corpus.homs.empty() : !corpus.lattices.empty();
    if (applies) report.tallies[id];
  }
  for (auto& r : results) {
    for (const auto& [id, t] : r.tallies) {
      auto& dst = report.tallies[id];
      dst.primary += t.primary;
      for (const auto& [name, tally] : t.readings) dst.readings[name] += tally;
    }
    for (auto& c : r.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                   [](const CounterexampleRecord& a, const CounterexampleRecord& b) {
                     return std::tie(a.id, a.reading) < std::tie(b.id, b.reading);
                   });
  return report;
}

Report run_corpus(const CorpusSpec& spec, const RunOptions& options) {
  return run(build_corpus(spec), options, spec.to_string());
}

}  // namespace latkit
