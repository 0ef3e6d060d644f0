#include "latkit/lower_space.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <unordered_set>

namespace latkit {

namespace {

using SetIndex = std::unordered_set<ElementSet, ElementSetHash>;

[[noreturn]] void too_large(std::size_t limit) {
  throw TopologyError(TopologyErrorKind::FamilyTooLarge,
                      "FamilyTooLarge: more than " + std::to_string(limit) + " closed sets");
}

// Adds every intersection of members of `family` to it.
void close_under_intersection(std::vector<ElementSet>& family, SetIndex& seen, std::size_t limit) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const ElementSet meet = family[i] & family[j];
      if (seen.insert(meet).second) {
        family.push_back(meet);
        if (family.size() > limit) too_large(limit);
      }
    }
  }
}

// Every union of a subfamily of `basis` (the empty union included).
std::vector<ElementSet> unions_of(const std::vector<ElementSet>& basis, std::size_t limit) {
  std::vector<ElementSet> out{ElementSet{}};
  SetIndex seen{ElementSet{}};
  for (const ElementSet& b : basis) {
    const std::size_t before = out.size();
    for (std::size_t i = 0; i < before; ++i) {
      const ElementSet u = out[i] | b;
      if (seen.insert(u).second) {
        out.push_back(u);
        if (out.size() > limit) too_large(limit);
      }
    }
  }
  return out;
}

void sort_family(std::vector<ElementSet>& family) { std::sort(family.begin(), family.end()); }

}  // namespace

std::size_t closed_set_limit_from_env() {
  const char* raw = std::getenv("LATKIT_MAX_CLOSED_SETS");
  if (raw == nullptr) return kDefaultMaxClosedSets;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultMaxClosedSets;
  return value;
}

struct LowerSpace::Family {
  std::once_flag once;
  std::vector<ElementSet> sets;
  SetIndex index;
};

LowerSpace::LowerSpace(MultLattice lattice, ElementSet sigma, std::string label, std::size_t max_closed_sets)
    : lattice_(std::move(lattice)),
      sigma_(sigma & lattice_.carrier()),
      label_(std::move(label)),
      max_closed_sets_(max_closed_sets),
      family_(std::make_shared<Family>()) {
  for (Index x = 0; x < lattice_.size(); ++x) {
    const ElementSet v = above(x);
    auto it = std::find_if(subbasis_.begin(), subbasis_.end(),
                           [&](const SubbasisMember& m) { return m.points == v; });
    if (it == subbasis_.end()) {
      subbasis_.push_back({v, {x}});
    } else {
      it->generators.push_back(x);
    }
  }
}

LowerSpace LowerSpace::of_class(const MultLattice& lattice, const ElementClass& c, std::size_t max_closed_sets) {
  return LowerSpace(lattice, classify(lattice, c), to_token(c), max_closed_sets);
}

const std::vector<ElementSet>& LowerSpace::closed_sets() const {
  std::call_once(family_->once, [this] {
    std::vector<ElementSet> seed{ElementSet{}, sigma_};
    SetIndex seen(seed.begin(), seed.end());
    for (const auto& m : subbasis_)
      if (seen.insert(m.points).second) seed.push_back(m.points);
    close_under_intersection(seed, seen, max_closed_sets_);
    // Unions of intersections are closed under intersection as well, by
    // distributivity, so one pass each way reaches the fixpoint.
    std::vector<ElementSet> family = unions_of(seed, max_closed_sets_);
    sort_family(family);
    family_->index = SetIndex(family.begin(), family.end());
    family_->sets = std::move(family);
  });
  return family_->sets;
}

bool LowerSpace::is_closed(const ElementSet& s) const {
  closed_sets();
  return family_->index.contains(s);
}

ElementSet LowerSpace::closure(const ElementSet& subset) const {
  if (!subset.is_subset_of(sigma_)) {
    throw TopologyError(TopologyErrorKind::NotASubset, "NotASubset: closure of a set outside the space");
  }
  ElementSet out = sigma_;
  for (const ElementSet& c : closed_sets())
    if (subset.is_subset_of(c)) out &= c;
  return out;
}

std::vector<ElementSet> closed_sets_by_fixpoint(const LowerSpace& S) {
  std::vector<ElementSet> family;
  SetIndex seen;
  for (const ElementSet& s : {ElementSet{}, S.points()})
    if (seen.insert(s).second) family.push_back(s);
  for (const auto& m : S.subbasis())
    if (seen.insert(m.points).second) family.push_back(m.points);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const ElementSet& c : {family[i] | family[j], family[i] & family[j]}) {
          if (seen.insert(c).second) {
            family.push_back(c);
            grew = true;
          }
        }
      }
    }
  }
  sort_family(family);
  return family;
}

std::vector<ElementSet> closed_sets_by_intersections_of_unions(const LowerSpace& S) {
  std::vector<ElementSet> members;
  for (const auto& m : S.subbasis()) members.push_back(m.points);
  const std::vector<ElementSet> unions = unions_of(members, std::size_t{1} << 16);
  if (unions.size() > 20) {
    throw TopologyError(TopologyErrorKind::FamilyTooLarge,
                        "FamilyTooLarge: too many finite unions to intersect every subfamily");
  }
  SetIndex seen{ElementSet{}, S.points()};
  const std::size_t k = unions.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    ElementSet meet = S.points();
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) meet &= unions[i];
    seen.insert(meet);
  }
  std::vector<ElementSet> family(seen.begin(), seen.end());
  sort_family(family);
  return family;
}

Verdict forms_closed_topology(const LowerSpace& S) {
  const MultLattice& L = S.lattice();
  // {} is the empty union and sigma = above(bot); both belong to any closed
  // family, so only binary unions and intersections can fail.
  SetIndex family{ElementSet{}};
  for (const auto& m : S.subbasis()) family.insert(m.points);
  for (Index x = 0; x < L.size(); ++x) {
    for (Index y = 0; y < x; ++y) {
      const ElementSet a = S.above(x), b = S.above(y);
      if (!family.contains(a | b)) {
        return Verdict::counterexample({{x, y}, {a, b, a | b}, "union of above(x) and above(y) is no above(z)"});
      }
      if (!family.contains(a & b)) {
        return Verdict::counterexample(
            {{x, y}, {a, b, a & b}, "intersection of above(x) and above(y) is no above(z)"});
      }
    }
  }
  return Verdict::hold();
}

Verdict hkp_property(const LowerSpace& S) {
  const MultLattice& L = S.lattice();
  Verdict out = Verdict::hold();
  bool found = false;
  S.points().for_each([&](Index s) {
    if (found) return;
    for (Index x = 0; x < L.size() && !found; ++x) {
      if (L.leq(x, s)) continue;
      for (Index y = 0; y < L.size(); ++y) {
        if (!L.leq(y, s) && L.leq(L.meet(x, y), s)) {
          out = Verdict::counterexample({{x, y, s}, {}, "meet(x,y) <= s but neither x nor y is"});
          found = true;
          break;
        }
      }
    }
  });
  return out;
}

Verdict is_T0(const LowerSpace& S) {
  const std::vector<Index> pts = S.points().indices();
  std::vector<ElementSet> closures;
  closures.reserve(pts.size());
  for (Index p : pts) closures.push_back(S.point_closure(p));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (closures[i] == closures[j]) {
        return Verdict::counterexample({{pts[j], pts[i]}, {closures[i]}, "two points with the same closure"});
      }
    }
  }
  return Verdict::hold();
}

Verdict is_T1(const LowerSpace& S) {
  Verdict out = Verdict::hold();
  bool found = false;
  S.points().for_each([&](Index p) {
    if (found) return;
    const ElementSet c = S.point_closure(p);
    if (c != ElementSet{p}) {
      out = Verdict::counterexample({{p}, {c}, "point is not closed"});
      found = true;
    }
  });
  return out;
}

namespace {

void require_closed(const LowerSpace& S, const ElementSet& C) {
  if (!S.is_closed(C)) throw TopologyError(TopologyErrorKind::NotClosed, "NotClosed: set is not closed");
}

bool irreducible_unchecked(const LowerSpace& S, const ElementSet& C) {
  if (C.empty()) return false;
  ElementSet covered;
  for (const ElementSet& D : S.closed_sets())
    if (D != C && D.is_subset_of(C)) covered |= D;
  return covered != C;
}

}  // namespace

bool is_irreducible_closed(const LowerSpace& S, const ElementSet& C) {
  require_closed(S, C);
  return irreducible_unchecked(S, C);
}

std::vector<ElementSet> irreducible_closed_sets(const LowerSpace& S) {
  std::vector<ElementSet> out;
  for (const ElementSet& C : S.closed_sets())
    if (irreducible_unchecked(S, C)) out.push_back(C);
  return out;
}

ElementSet generic_points(const LowerSpace& S, const ElementSet& C) {
  require_closed(S, C);
  ElementSet out;
  C.for_each([&](Index p) {
    if (S.point_closure(p) == C) out.insert(p);
  });
  return out;
}

Verdict is_sober(const LowerSpace& S) {
  for (const ElementSet& C : irreducible_closed_sets(S)) {
    const ElementSet g = generic_points(S, C);
    if (g.count() != 1) {
      return Verdict::counterexample(
          {{}, {C, g}, "irreducible closed set with " + std::to_string(g.count()) + " generic points"});
    }
  }
  return Verdict::hold();
}

Verdict sober_criterion(const LowerSpace& S) {
  const MultLattice& L = S.lattice();
  for (const auto& member : S.subbasis()) {
    if (member.points.empty() || !irreducible_unchecked(S, member.points)) continue;
    const Index m = meet_of(L, member.points);
    if (!S.points().contains(m)) {
      return Verdict::counterexample({{member.generators.front(), m},
                                      {member.points},
                                      "above(x) is irreducible but its meet lies outside the space"});
    }
  }
  return Verdict::hold();
}

Verdict is_compact_space(const LowerSpace& S) {
  // Every subfamily of a finite family is finite, so each subfamily with empty
  // intersection is its own finite witness. The scan below confirms it for
  // families small enough to enumerate and records the first minimal one.
  std::vector<ElementSet> members;
  for (const auto& m : S.subbasis()) members.push_back(m.points);
  const std::size_t k = members.size();
  if (k > 16) return Verdict::hold("finite subbasis");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    ElementSet meet = S.points();
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) meet &= members[i];
    if (!meet.empty()) continue;
    // Drop members while the intersection stays empty.
    std::uint64_t minimal = mask;
    for (std::size_t i = 0; i < k; ++i) {
      if (((minimal >> i) & 1U) == 0) continue;
      const std::uint64_t trial = minimal & ~(std::uint64_t{1} << i);
      ElementSet t = S.points();
      for (std::size_t j = 0; j < k; ++j)
        if ((trial >> j) & 1U) t &= members[j];
      if (t.empty()) minimal = trial;
    }
    ElementSet check = S.points();
    for (std::size_t j = 0; j < k; ++j)
      if ((minimal >> j) & 1U) check &= members[j];
    if (!check.empty()) return Verdict::counterexample({{}, {}, "no finite subfamily with empty intersection"});
  }
  return Verdict::hold();
}

Verdict is_connected(const LowerSpace& S) {
  for (const ElementSet& C : S.closed_sets()) {
    if (C.empty() || C == S.points()) continue;
    const ElementSet rest = S.points() - C;
    if (S.is_closed(rest)) return Verdict::counterexample({{}, {C, rest}, "closed set with closed complement"});
  }
  return Verdict::hold();
}

Verdict strongly_disconnects(const LowerSpace& S, SplitReading reading) {
  const ElementSet& sigma = S.points();
  auto splits = [&](const ElementSet& a, const ElementSet& b) {
    return !a.empty() && !b.empty() && !a.intersects(b) && (a | b) == sigma;
  };
  const auto& members = S.subbasis();
  if (reading == SplitReading::SingleMember) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (splits(members[j].points, members[i].points)) {
          Verdict v = Verdict::hold("sigma = above(x) u above(y)");
          v.witness.elements = {members[j].generators.front(), members[i].generators.front()};
          v.witness.sets = {members[j].points, members[i].points};
          return v;
        }
      }
    }
    return Verdict::counterexample({{}, {}, "no two subbasis members split the space"});
  }
  std::vector<ElementSet> pieces;
  for (const auto& m : members) pieces.push_back(m.points);
  const std::vector<ElementSet> unions = unions_of(pieces, closed_set_limit_from_env());
  const SetIndex index(unions.begin(), unions.end());
  for (const ElementSet& u : unions) {
    const ElementSet rest = sigma - u;
    if (splits(u, rest) && index.contains(rest)) {
      Verdict v = Verdict::hold("sigma splits into two unions of subbasis members");
      v.witness.sets = {u, rest};
      return v;
    }
  }
  return Verdict::counterexample({{}, {}, "no two unions of subbasis members split the space"});
}

Verdict is_spectral(const LowerSpace& S) {
  auto failed = [](const Verdict& part, const std::string& what) {
    Verdict v = part;
    v.witness.note = what + (part.witness.note.empty() ? "" : ": " + part.witness.note);
    return v;
  };
  if (Verdict t0 = is_T0(S); !t0.holds()) return failed(t0, "not T0");
  if (Verdict sober = is_sober(S); !sober.holds()) return failed(sober, "not sober");
  if (Verdict compact = is_compact_space(S); !compact.holds()) return failed(compact, "not compact");
  // Opens are complements of closed sets; intersections of two opens are
  // complements of unions of two closed sets. Every open set is finite, hence
  // compact, so the opens themselves are the required basis.
  const auto& family = S.closed_sets();
  constexpr std::size_t kPairwiseLimit = 4096;
  if (family.size() <= kPairwiseLimit) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!S.is_closed(family[i] | family[j])) {
          return Verdict::counterexample(
              {{}, {S.points() - family[i], S.points() - family[j]}, "intersection of two opens is not open"});
        }
      }
    }
  }
  return Verdict::hold();
}

RadicalSides radical_sides(const LowerSpace& S) {
  const MultLattice& L = S.lattice();
  auto agrees = [&](Index x) { return S.above(x) == S.above(radical_of(L, x)); };
  RadicalSides sides;
  sides.all_elements = true;
  for (Index x = 0; x < L.size(); ++x) sides.all_elements = sides.all_elements && agrees(x);
  sides.sigma_elements = true;
  S.points().for_each([&](Index x) { sides.sigma_elements = sides.sigma_elements && agrees(x); });
  const ElementSet rad = classify(L, ClassTag::Rad);
  sides.sigma_in_rad = S.points().is_subset_of(rad);
  sides.sigma_is_rad = S.points() == rad;
  return sides;
}

Verdict check_v_radical(const LowerSpace& S) {
  const RadicalSides s = radical_sides(S);
  if (s.all_elements == s.sigma_elements && s.sigma_elements == s.sigma_in_rad) return Verdict::hold();
  auto b = [](bool v) { return v ? "true" : "false"; };
  Witness w;
  w.note = std::string("all elements: ") + b(s.all_elements) + ", sigma elements: " + b(s.sigma_elements) +
           ", sigma inside Rad: " + b(s.sigma_in_rad);
  const MultLattice& L = S.lattice();
  for (Index x = 0; x < L.size(); ++x) {
    if (S.above(x) != S.above(radical_of(L, x))) {
      w.elements = {x, radical_of(L, x)};
      break;
    }
  }
  return Verdict::counterexample(std::move(w));
}

namespace {

Verdict hrx_order_reflection(const LowerSpace& S) {
  const MultLattice& L = S.lattice();
  for (Index x = 0; x < L.size(); ++x) {
    for (Index y = 0; y < L.size(); ++y) {
      const bool contained = S.above(x).is_subset_of(S.above(y));
      if (contained != L.leq(y, x)) {
        return Verdict::counterexample(
            {{x, y}, {S.above(x), S.above(y)}, contained ? "above(x) <= above(y) but not y <= x"
                                                          : "y <= x but above(x) is not inside above(y)"});
      }
    }
  }
  return Verdict::hold();
}

}  // namespace

Verdict check_hrx(const LowerSpace& S, int part) {
  const MultLattice& L = S.lattice();
  const Index n = L.size();
  switch (part) {
    case 1:
      for (Index x = 0; x < n; ++x)
        if (!L.leq(x, S.meet_above(x)))
          return Verdict::counterexample({{x, S.meet_above(x)}, {}, "x is not below the meet of above(x)"});
      return Verdict::hold();
    case 2: {
      Verdict out = Verdict::hold();
      S.points().for_each([&](Index x) {
        if (out.holds() && S.meet_above(x) != x)
          out = Verdict::counterexample({{x, S.meet_above(x)}, {}, "point differs from the meet of above(x)"});
      });
      return out;
    }
    case 3:
      for (Index x = 0; x < n; ++x)
        if (S.above(x) != S.above(S.meet_above(x)))
          return Verdict::counterexample(
              {{x, S.meet_above(x)}, {S.above(x), S.above(S.meet_above(x))}, "above(x) != above(meet above x)"});
      return Verdict::hold();
    case 4:
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          const bool contained = S.above(x).is_subset_of(S.above(y));
          if (contained != L.leq(S.meet_above(y), S.meet_above(x))) {
            return Verdict::counterexample({{x, y}, {S.above(x), S.above(y)}, "containment and meets disagree"});
          }
        }
      }
      return Verdict::hold();
    case 5:
      if (classify(L, ClassTag::Rad) != L.carrier()) return Verdict::hypothesis_not_met("some element is not radical");
      return hrx_order_reflection(S);
    default:
      throw std::invalid_argument("check_hrx: part must be 1..5");
  }
}

Verdict check_hrx(const LowerSpace& S) {
  for (int part = 1; part <= 5; ++part) {
    Verdict v = check_hrx(S, part);
    if (!v.holds()) {
      v.witness.note = "part " + std::to_string(part) + ": " + v.witness.note;
      return v;
    }
  }
  return Verdict::hold();
}

Verdict check_hrx5_meet_dense(const LowerSpace& S) {
  const MultLattice& L = S.lattice();
  for (Index x = 0; x < L.size(); ++x)
    if (S.meet_above(x) != x) return Verdict::hypothesis_not_met("some x differs from the meet of above(x)");
  return hrx_order_reflection(S);
}

Verdict check_lfc(const LowerSpace& S) {
  const MultLattice& L = S.lattice();
  std::optional<Index> bad;
  for (Index x = 0; x < L.size() && !bad; ++x)
    if (S.above(x).empty() != (x == L.top())) bad = x;
  const ElementSet max = classify(L, ClassTag::Max);
  const bool lhs = !bad.has_value();
  const bool rhs = max.is_subset_of(S.points());
  if (lhs == rhs) return Verdict::hold();
  Witness w;
  if (bad) w.elements = {*bad};
  w.sets = {max - S.points()};
  w.note = lhs ? "above(x) is empty exactly at top, yet a maximal element is missing"
               : "every maximal element is present, yet above(x) empty does not single out top";
  return Verdict::counterexample(std::move(w));
}

}  // namespace latkit
