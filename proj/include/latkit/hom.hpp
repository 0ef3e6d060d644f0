#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "latkit/classes.hpp"
#include "latkit/lattice.hpp"
#include "latkit/lower_space.hpp"
#include "latkit/verdict.hpp"

namespace latkit {

enum class HomLaw { Shape, Monotone, Join, Meet, Mul, Unit, Bottom };

const char* to_string(HomLaw law);

class HomViolation : public std::runtime_error {
 public:
  HomViolation(HomLaw law, const std::string& message, std::vector<Index> witness)
      : std::runtime_error(message), law_(law), witness_(std::move(witness)) {}
  HomLaw law() const { return law_; }
  const std::vector<Index>& witness() const { return witness_; }

 private:
  HomLaw law_;
  std::vector<Index> witness_;
};

enum class HomErrorKind { ContractionPropertyFails, NotSurjective };

class HomError : public std::runtime_error {
 public:
  HomError(HomErrorKind kind, const std::string& message, std::optional<Index> element = std::nullopt)
      : std::runtime_error(message), kind_(kind), element_(element) {}
  HomErrorKind kind() const { return kind_; }
  std::optional<Index> element() const { return element_; }

 private:
  HomErrorKind kind_;
  std::optional<Index> element_;
};

/// A validated homomorphism together with its right adjoint
/// contraction(y) = join{x : phi(x) <= y}.
class LatticeHom {
 public:
  const MultLattice& source() const { return source_; }
  const MultLattice& target() const { return target_; }
  Index operator()(Index x) const { return map_[x]; }
  Index contraction(Index y) const { return adjoint_[y]; }
  const std::vector<Index>& table() const { return map_; }
  const std::vector<Index>& adjoint_table() const { return adjoint_; }

  friend LatticeHom validate_hom(const MultLattice& source, const MultLattice& target, std::vector<Index> map);

 private:
  LatticeHom(MultLattice s, MultLattice t, std::vector<Index> map, std::vector<Index> adjoint)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)), adjoint_(std::move(adjoint)) {}

  MultLattice source_;
  MultLattice target_;
  std::vector<Index> map_;
  std::vector<Index> adjoint_;
};

/// Checks, in order: table shape, monotonicity, binary joins, binary meets,
/// products, top to top, bot to bot. The first failing law is reported with
/// the elements that break it.
LatticeHom validate_hom(const MultLattice& source, const MultLattice& target, std::vector<Index> map);

LatticeHom identity_hom(const MultLattice& L);
/// g after f; f.target() must be g.source().
LatticeHom compose(const LatticeHom& g, const LatticeHom& f);

inline Index contraction(const LatticeHom& h, Index y) { return h.contraction(y); }
/// {x : phi(x) = bot}
ElementSet kernel_set(const LatticeHom& h);
/// contraction(bot), the join of kernel_set.
Index kernel_element(const LatticeHom& h);
bool is_surjective(const LatticeHom& h);

/// Every y in the target class contracts into the source class.
Verdict has_contraction_property(const LatticeHom& h, const ElementClass& c);

/// Contraction restricted to the target class: domain() lists its points,
/// at(y) gives the image in the source class.
struct InducedMap {
  ElementSet domain;
  std::vector<Index> image_of;  // indexed by target element; meaningful on domain only

  Index at(Index y) const { return image_of[y]; }
  ElementSet image() const;
  ElementSet preimage(const ElementSet& s) const;
};

/// Throws ContractionPropertyFails (with the offending y) when some
/// contraction leaves the class.
InducedMap induced_map(const LatticeHom& h, const ElementClass& c);

/// Preimages of closed sets are closed, and preimage(above(x)) equals
/// above(phi(x)) for every source x.
Verdict check_continuity(const LatticeHom& h, const ElementClass& c);

/// For surjective h: the induced map is injective, continuous and closed, and
/// its image is {x in the source class : kernel_element <= x}. Throws
/// NotSurjective otherwise.
Verdict check_embedding(const LatticeHom& h, const ElementClass& c);

/// [the image is dense]  iff  [every kernel element lies below the meet of the
/// source class]. Holds when both sides agree; the note records their values.
struct DensitySides {
  bool dense = false;
  bool kernel_below_meet = false;
};
DensitySides density_sides(const LatticeHom& h, const ElementClass& c);
Verdict check_density(const LatticeHom& h, const ElementClass& c);

/// Closures taken in the Irr+ lower space. Max and Spec enter through their
/// intersection with Irr+.
struct SubspaceDensity {
  bool max_dense = false;
  bool spec_dense = false;
  bool jacobson_is_s_radical = false;
  bool p_radical_is_s_radical = false;

  bool max_pairing() const { return max_dense == jacobson_is_s_radical; }
  bool spec_pairing() const { return spec_dense == p_radical_is_s_radical; }
  /// Max dense paired with p-radical, Spec dense paired with Jacobson.
  bool swapped_max_pairing() const { return max_dense == p_radical_is_s_radical; }
  bool swapped_spec_pairing() const { return spec_dense == jacobson_is_s_radical; }
};
SubspaceDensity subspace_density(const MultLattice& L);
/// Holds when max_pairing() and spec_pairing() both hold.
Verdict check_subspace_density(const MultLattice& L);

}  // namespace latkit
