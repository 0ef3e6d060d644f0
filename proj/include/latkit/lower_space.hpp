#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "latkit/classes.hpp"
#include "latkit/lattice.hpp"
#include "latkit/verdict.hpp"

namespace latkit {

enum class TopologyErrorKind { FamilyTooLarge, NotClosed, NotASubset };

class TopologyError : public std::runtime_error {
 public:
  TopologyError(TopologyErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  TopologyErrorKind kind() const { return kind_; }

 private:
  TopologyErrorKind kind_;
};

inline constexpr std::size_t kDefaultMaxClosedSets = std::size_t{1} << 20;

/// kDefaultMaxClosedSets unless LATKIT_MAX_CLOSED_SETS holds a positive integer.
std::size_t closed_set_limit_from_env();

/// A subbasic closed set {s in sigma : x <= s} together with every x that
/// produces it.
struct SubbasisMember {
  ElementSet points;
  std::vector<Index> generators;
};

/// A set of lattice elements carrying the coarse lower topology: the sets
/// above(x) = {s in sigma : x <= s} form a subbasis of closed sets.
///
/// The closed-set family is generated on first use and shared between copies.
class LowerSpace {
 public:
  LowerSpace(MultLattice lattice, ElementSet sigma, std::string label = {},
             std::size_t max_closed_sets = closed_set_limit_from_env());

  static LowerSpace of_class(const MultLattice& lattice, const ElementClass& c,
                             std::size_t max_closed_sets = closed_set_limit_from_env());

  const MultLattice& lattice() const { return lattice_; }
  const ElementSet& points() const { return sigma_; }
  const std::string& label() const { return label_; }

  /// Deduplicated by point set, ordered by first generator.
  const std::vector<SubbasisMember>& subbasis() const { return subbasis_; }

  ElementSet above(Index x) const { return lattice_.up(x) & sigma_; }
  Index meet_above(Index x) const { return meet_of(lattice_, above(x)); }

  /// Closure of the subbasis together with {} and sigma under binary union
  /// and intersection, sorted. Throws FamilyTooLarge past the limit.
  const std::vector<ElementSet>& closed_sets() const;
  bool is_closed(const ElementSet& s) const;

  /// Smallest closed set containing subset (which must lie inside sigma).
  ElementSet closure(const ElementSet& subset) const;
  ElementSet point_closure(Index p) const { return closure(ElementSet{p}); }

 private:
  struct Family;

  MultLattice lattice_;
  ElementSet sigma_;
  std::string label_;
  std::size_t max_closed_sets_;
  std::vector<SubbasisMember> subbasis_;
  std::shared_ptr<Family> family_;
};

/// Straightforward fixpoint: keep adding binary unions and intersections of
/// everything found so far until nothing new appears. Quadratic per round;
/// used to cross-check closed_sets() on small spaces.
std::vector<ElementSet> closed_sets_by_fixpoint(const LowerSpace& S);
/// Intersections of arbitrary subfamilies of finite unions of subbasis
/// members, plus {} and sigma. Exponential; small spaces only.
std::vector<ElementSet> closed_sets_by_intersections_of_unions(const LowerSpace& S);

/// Whether the family {above(x) : x in L} is itself the closed-set family of
/// a topology: contains sigma, closed under binary union and under
/// intersection. The empty set enters as the empty union.
Verdict forms_closed_topology(const LowerSpace& S);
/// meet(x, y) <= s implies x <= s or y <= s, for all x, y in L and s in sigma.
Verdict hkp_property(const LowerSpace& S);

Verdict is_T0(const LowerSpace& S);
Verdict is_T1(const LowerSpace& S);

/// C nonempty and not covered by two closed sets without lying in one of them.
/// Throws NotClosed when C is not closed.
bool is_irreducible_closed(const LowerSpace& S, const ElementSet& C);
std::vector<ElementSet> irreducible_closed_sets(const LowerSpace& S);
/// Points whose closure is C. Throws NotClosed when C is not closed.
ElementSet generic_points(const LowerSpace& S, const ElementSet& C);

/// Every irreducible closed set has exactly one generic point.
Verdict is_sober(const LowerSpace& S);
/// For every x with above(x) nonempty and irreducible, the meet of above(x)
/// lies in sigma.
Verdict sober_criterion(const LowerSpace& S);

/// Every family of subbasic closed sets with empty intersection has a finite
/// subfamily with empty intersection.
Verdict is_compact_space(const LowerSpace& S);

Verdict is_connected(const LowerSpace& S);

enum class SplitReading {
  SingleMember,  // sigma = above(x) u above(y), disjoint, both nonempty
  Subfamily,     // the two halves are unions of subbasis members
};
/// Holds (with the splitting generators as witness) when the subbasis
/// strongly disconnects the space.
Verdict strongly_disconnects(const LowerSpace& S, SplitReading reading = SplitReading::SingleMember);

/// T0, sober, compact, and the open sets form a basis of compact opens closed
/// under finite intersection.
Verdict is_spectral(const LowerSpace& S);

/// The three statements compared by check_v_radical.
struct RadicalSides {
  bool all_elements = false;    // above(x) == above(sqrt x) for every x in L
  bool sigma_elements = false;  // the same for every x in sigma
  bool sigma_in_rad = false;    // sigma is a subset of Rad(L)
  bool sigma_is_rad = false;    // sigma equals Rad(L)
};
RadicalSides radical_sides(const LowerSpace& S);
/// Holds when all_elements, sigma_elements and sigma_in_rad agree.
Verdict check_v_radical(const LowerSpace& S);

/// part 1: x <= meet_above(x); 2: x in sigma => x == meet_above(x);
/// 3: above(x) == above(meet_above(x)); 4: above(x) <= above(y) iff
/// meet_above(y) <= meet_above(x); 5: when L = Rad(L), above(x) <= above(y)
/// iff y <= x (HypothesisNotMet otherwise).
Verdict check_hrx(const LowerSpace& S, int part);
/// All five parts; the first one that does not hold decides.
Verdict check_hrx(const LowerSpace& S);
/// Part 5 under the hypothesis its argument actually uses: every x equals
/// meet_above(x).
Verdict check_hrx5_meet_dense(const LowerSpace& S);

/// [above(x) empty iff x == top, for all x]  iff  [Max(L) is inside sigma].
Verdict check_lfc(const LowerSpace& S);

}  // namespace latkit
