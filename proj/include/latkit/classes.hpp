#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

enum class ClassTag {
  Prop,
  Spec,
  MinPrime,
  Max,
  Irr,
  IrrStrong,
  IrrComplete,
  Rad,
  Prim,
  Nil,
  Idem,
  CompactElems,
  Custom,
};

/// One of the distinguished classes, or a named custom subset of the carrier.
struct ElementClass {
  ClassTag tag = ClassTag::Prop;
  ElementSet custom;
  std::string custom_name;

  static ElementClass of(ClassTag tag) { return ElementClass{tag, {}, {}}; }
  static ElementClass custom_set(std::string name, ElementSet members) {
    return ElementClass{ClassTag::Custom, members, std::move(name)};
  }

  friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

/// CLI token: prop, spec, min-prime, max, irr, irr+, irr++, rad, prim, nil,
/// idem, compact, custom:<name>.
std::string to_token(const ElementClass& c);
std::string to_token(ClassTag tag);
/// Parses a token; custom:<name> yields a Custom class with no members yet
/// (the caller resolves the name). nullopt for unknown tokens.
std::optional<ElementClass> parse_class_token(std::string_view token);

/// The nine classes every theorem sweep ranges over.
const std::vector<ClassTag>& sweep_tags();

/// Exact membership by exhaustive evaluation of the defining condition.
/// Results for built-in tags are cached on the lattice.
ElementSet classify(const MultLattice& L, const ElementClass& c);
inline ElementSet classify(const MultLattice& L, ClassTag tag) { return classify(L, ElementClass::of(tag)); }

/// Membership tests straight from the definitions, without the cache.
bool is_prime(const MultLattice& L, Index p);
bool is_maximal(const MultLattice& L, Index m);
bool is_strongly_irreducible(const MultLattice& L, Index s);
bool is_irreducible(const MultLattice& L, Index s);
/// Uses: s is completely irreducible iff s is proper and s differs from the
/// meet of its strict upper bounds.
bool is_completely_irreducible(const MultLattice& L, Index s);
bool is_primary(const MultLattice& L, Index q);
bool is_nilpotent(const MultLattice& L, Index x);

/// Meet of the primes above x (top when there are none). The join of the
/// compact elements with a power below x is computed as well; the two must
/// agree, otherwise DefinitionMismatch is thrown.
Index radical_of(const MultLattice& L, Index x);
/// Join form alone: join of compact y with y^k <= x for some k >= 1.
Index radical_join_form(const MultLattice& L, Index x);
/// Meet form alone: meet of primes above x.
Index radical_meet_form(const MultLattice& L, Index x);

/// Meet of Max(L), Spec(L), Irr+(L) respectively; top for an empty family.
Index jacobson(const MultLattice& L);
Index p_radical(const MultLattice& L);
Index s_radical(const MultLattice& L);

/// Meet of the members of sigma lying above x; top when there are none.
Index meet_above(const MultLattice& L, const ElementSet& sigma, Index x);

}  // namespace latkit
