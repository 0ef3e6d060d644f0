#include "latkit/classes.hpp"

#include <array>

#include "latkit/detail/memo.hpp"

namespace latkit {

namespace {

constexpr std::array<std::pair<ClassTag, std::string_view>, 12> kTokens{{
    {ClassTag::Prop, "prop"},
    {ClassTag::Spec, "spec"},
    {ClassTag::MinPrime, "min-prime"},
    {ClassTag::Max, "max"},
    {ClassTag::Irr, "irr"},
    {ClassTag::IrrStrong, "irr+"},
    {ClassTag::IrrComplete, "irr++"},
    {ClassTag::Rad, "rad"},
    {ClassTag::Prim, "prim"},
    {ClassTag::Nil, "nil"},
    {ClassTag::Idem, "idem"},
    {ClassTag::CompactElems, "compact"},
}};

bool proper(const MultLattice& L, Index x) { return x != L.top(); }

}  // namespace

std::string to_token(ClassTag tag) {
  for (const auto& [t, token] : kTokens)
    if (t == tag) return std::string(token);
  return "custom";
}

std::string to_token(const ElementClass& c) {
  if (c.tag == ClassTag::Custom) return "custom:" + c.custom_name;
  return to_token(c.tag);
}

std::optional<ElementClass> parse_class_token(std::string_view token) {
  for (const auto& [t, name] : kTokens)
    if (token == name) return ElementClass::of(t);
  constexpr std::string_view prefix = "custom:";
  if (token.substr(0, prefix.size()) == prefix && token.size() > prefix.size()) {
    return ElementClass::custom_set(std::string(token.substr(prefix.size())), {});
  }
  return std::nullopt;
}

const std::vector<ClassTag>& sweep_tags() {
  static const std::vector<ClassTag> tags{
      ClassTag::Prop, ClassTag::Spec,        ClassTag::MinPrime, ClassTag::Max,  ClassTag::Irr,
      ClassTag::IrrStrong, ClassTag::IrrComplete, ClassTag::Rad, ClassTag::Prim,
  };
  return tags;
}

bool is_prime(const MultLattice& L, Index p) {
  if (!proper(L, p)) return false;
  for (Index x = 0; x < L.size(); ++x) {
    if (L.leq(x, p)) continue;
    for (Index y = 0; y < L.size(); ++y) {
      if (!L.leq(y, p) && L.leq(L.mul(x, y), p)) return false;
    }
  }
  return true;
}

bool is_maximal(const MultLattice& L, Index m) {
  if (!proper(L, m)) return false;
  ElementSet above = L.up(m);
  above.erase(m);
  above.erase(L.top());
  return above.empty();
}

bool is_strongly_irreducible(const MultLattice& L, Index s) {
  if (!proper(L, s)) return false;
  for (Index x = 0; x < L.size(); ++x) {
    if (L.leq(x, s)) continue;
    for (Index y = 0; y < L.size(); ++y) {
      if (!L.leq(y, s) && L.leq(L.meet(x, y), s)) return false;
    }
  }
  return true;
}

bool is_irreducible(const MultLattice& L, Index s) {
  if (!proper(L, s)) return false;
  for (Index x = 0; x < L.size(); ++x) {
    if (x == s) continue;
    for (Index y = 0; y < L.size(); ++y) {
      if (y != s && L.meet(x, y) == s) return false;
    }
  }
  return true;
}

bool is_completely_irreducible(const MultLattice& L, Index s) {
  if (!proper(L, s)) return false;
  ElementSet strictly_above = L.up(s);
  strictly_above.erase(s);
  return meet_of(L, strictly_above) != s;
}

bool is_primary(const MultLattice& L, Index q) {
  if (!proper(L, q)) return false;
  const Index root = radical_of(L, q);
  for (Index x = 0; x < L.size(); ++x) {
    if (L.leq(x, q)) continue;
    for (Index y = 0; y < L.size(); ++y) {
      if (!L.leq(y, root) && L.leq(L.mul(x, y), q)) return false;
    }
  }
  return true;
}

bool is_nilpotent(const MultLattice& L, Index x) {
  // Powers descend (x^{k+1} <= x^k), so the sequence is stable within n steps.
  Index p = x;
  for (std::size_t k = 0; k <= L.size(); ++k) {
    if (p == L.bot()) return true;
    const Index next = L.mul(p, x);
    if (next == p) return false;
    p = next;
  }
  return p == L.bot();
}

namespace {

ElementSet compute_class(const MultLattice& L, ClassTag tag) {
  ElementSet out;
  auto collect = [&](auto&& pred) {
    for (Index x = 0; x < L.size(); ++x)
      if (pred(x)) out.insert(x);
  };
  switch (tag) {
    case ClassTag::Prop: collect([&](Index x) { return proper(L, x); }); break;
    case ClassTag::Spec: collect([&](Index x) { return is_prime(L, x); }); break;
    case ClassTag::MinPrime: {
      const ElementSet primes = classify(L, ClassTag::Spec);
      collect([&](Index p) {
        if (!primes.contains(p)) return false;
        ElementSet below = primes & L.down(p);
        below.erase(p);
        return below.empty();
      });
      break;
    }
    case ClassTag::Max: collect([&](Index x) { return is_maximal(L, x); }); break;
    case ClassTag::Irr: collect([&](Index x) { return is_irreducible(L, x); }); break;
    case ClassTag::IrrStrong: collect([&](Index x) { return is_strongly_irreducible(L, x); }); break;
    case ClassTag::IrrComplete: collect([&](Index x) { return is_completely_irreducible(L, x); }); break;
    case ClassTag::Rad: collect([&](Index x) { return radical_of(L, x) == x; }); break;
    case ClassTag::Prim: collect([&](Index x) { return is_primary(L, x); }); break;
    case ClassTag::Nil: collect([&](Index x) { return is_nilpotent(L, x); }); break;
    case ClassTag::Idem: collect([&](Index x) { return L.mul(x, x) == x; }); break;
    case ClassTag::CompactElems: collect([&](Index x) { return is_compact_element(L, x); }); break;
    case ClassTag::Custom: break;
  }
  return out;
}

}  // namespace

ElementSet classify(const MultLattice& L, const ElementClass& c) {
  if (c.tag == ClassTag::Custom) return c.custom & L.carrier();
  const auto slot = static_cast<std::size_t>(c.tag);
  return L.memo().class_set(slot, [&] { return compute_class(L, c.tag); });
}

Index radical_meet_form(const MultLattice& L, Index x) {
  return meet_of(L, classify(L, ClassTag::Spec) & L.up(x));
}

Index radical_join_form(const MultLattice& L, Index x) {
  const ElementSet compact = classify(L, ClassTag::CompactElems);
  ElementSet contributors;
  compact.for_each([&](Index y) {
    // y^k descends and stabilises within n steps.
    Index p = y;
    for (std::size_t k = 0; k <= L.size(); ++k) {
      if (L.leq(p, x)) {
        contributors.insert(y);
        return;
      }
      const Index next = L.mul(p, y);
      if (next == p) return;
      p = next;
    }
  });
  return join_of(L, contributors);
}

Index radical_of(const MultLattice& L, Index x) {
  const auto& table = L.memo().radical_table([&] {
    std::vector<Index> roots(L.size());
    for (Index y = 0; y < L.size(); ++y) {
      const Index by_meet = radical_meet_form(L, y);
      const Index by_join = radical_join_form(L, y);
      if (by_meet != by_join) {
        throw LatticeError(LatticeErrorKind::DefinitionMismatch,
                           "DefinitionMismatch: radical of " + L.name(y) + " is " + L.name(by_meet) +
                               " as a meet of primes but " + L.name(by_join) + " as a join",
                           {y, by_meet, by_join});
      }
      roots[y] = by_meet;
    }
    return roots;
  });
  return table[x];
}

Index jacobson(const MultLattice& L) { return meet_of(L, classify(L, ClassTag::Max)); }
Index p_radical(const MultLattice& L) { return meet_of(L, classify(L, ClassTag::Spec)); }
Index s_radical(const MultLattice& L) { return meet_of(L, classify(L, ClassTag::IrrStrong)); }

Index meet_above(const MultLattice& L, const ElementSet& sigma, Index x) {
  return meet_of(L, sigma & L.up(x));
}

}  // namespace latkit
