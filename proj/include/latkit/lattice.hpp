#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latkit/element_set.hpp"

namespace latkit {

/// Unvalidated input to validate_lattice: the full order relation and the
/// multiplication table, both row-major n x n.
struct LatticeTables {
  std::size_t n = 0;
  std::vector<std::uint8_t> leq;  // leq[i*n+j] != 0  <=>  e_i <= e_j
  std::vector<Index> mul;
  std::vector<std::string> names;  // optional; empty or size n
  std::string label;
};

enum class LatticeErrorKind {
  Malformed,
  NotAPartialOrder,
  NotALattice,
  AxiomViolation,
  BoundExceeded,
  DefinitionMismatch,
};

enum class Axiom {
  Commutativity,
  Unit,
  EmptyJoin,
  Associativity,
  JoinDistributivity,
};

const char* to_string(LatticeErrorKind kind);
const char* to_string(Axiom axiom);

class LatticeError : public std::runtime_error {
 public:
  LatticeError(LatticeErrorKind kind, std::string message, std::vector<Index> witness = {},
               std::optional<Axiom> axiom = std::nullopt)
      : std::runtime_error(std::move(message)),
        kind_(kind),
        witness_(std::move(witness)),
        axiom_(axiom) {}

  LatticeErrorKind kind() const { return kind_; }
  const std::vector<Index>& witness() const { return witness_; }
  std::optional<Axiom> axiom() const { return axiom_; }

 private:
  LatticeErrorKind kind_;
  std::vector<Index> witness_;
  std::optional<Axiom> axiom_;
};

namespace detail {
struct LatticeData;
struct LatticeMemo;
}  // namespace detail

/// A validated finite multiplicative lattice (commutative unital quantale).
///
/// Instances are immutable handles onto shared tables; copying is cheap and
/// copies may be used from several threads at once. Derived data that later
/// layers compute repeatedly (element classes, radicals) is memoized in a
/// mutex-guarded slot shared by all copies.
class MultLattice {
 public:
  std::size_t size() const;
  Index bot() const;
  Index top() const;

  bool leq(Index a, Index b) const;
  bool lt(Index a, Index b) const { return a != b && leq(a, b); }
  Index join(Index a, Index b) const;
  Index meet(Index a, Index b) const;
  Index mul(Index a, Index b) const;

  /// {y : x <= y}
  const ElementSet& up(Index x) const;
  /// {y : y <= x}
  const ElementSet& down(Index x) const;
  ElementSet carrier() const { return ElementSet::first_n(size()); }

  const std::string& name(Index x) const;
  const std::vector<std::string>& names() const;
  const std::string& label() const;
  MultLattice with_label(std::string label) const;

  /// Tables in the same shape validate_lattice accepts.
  LatticeTables tables() const;

  detail::LatticeMemo& memo() const;

  friend MultLattice validate_lattice(const LatticeTables& raw);

 private:
  MultLattice() = default;
  std::shared_ptr<const detail::LatticeData> data_;
  std::shared_ptr<detail::LatticeMemo> memo_;
};

/// Checks the partial order, derives join/meet tables, and checks the
/// quantale laws. Axiom (3) quantifies over arbitrary families; on a finite
/// carrier every family is finite and every finite join is an iterated binary
/// join or the empty join, so binary distributivity together with x*0 = 0
/// gives the full law.
MultLattice validate_lattice(const LatticeTables& raw);

/// Least upper bound of s; the empty join is bot.
Index join_of(const MultLattice& L, const ElementSet& s);
/// Greatest lower bound of s; the empty meet is top.
Index meet_of(const MultLattice& L, const ElementSet& s);

/// k-fold product x*...*x, k >= 1. Throws std::invalid_argument for k == 0.
Index power(const MultLattice& L, Index x, unsigned k);

/// Elements covered by x in the Hasse diagram.
std::vector<Index> lower_covers(const MultLattice& L, Index x);
/// Length of the longest chain from bot up to x.
std::size_t rank_of(const MultLattice& L, Index x);

/// Compactness straight from the definition: whenever c <= join(S), some
/// finite subfamily of S already covers c. Carriers are finite, so every
/// family is a finite one; the scan runs the definition literally for
/// carriers up to kCompactScanLimit elements and otherwise reports the
/// finite-carrier answer.
inline constexpr std::size_t kCompactScanLimit = 10;
bool is_compact_element(const MultLattice& L, Index c);
bool is_compactly_generated(const MultLattice& L);
/// Every proper element lies below a maximal element.
bool is_max_bounded(const MultLattice& L);

/// Lexicographically least (leq, mul) encoding over all relabellings that
/// keep bot and top at their canonical positions (bot first, top last).
/// Exponential in n; throws BoundExceeded above kCanonicalFormLimit.
inline constexpr std::size_t kCanonicalFormLimit = 9;
std::vector<std::uint8_t> canonical_form(const MultLattice& L);

/// Order- and multiplication-preserving bijection, found by backtracking.
std::optional<std::vector<Index>> find_isomorphism(const MultLattice& a, const MultLattice& b);
inline bool is_isomorphic(const MultLattice& a, const MultLattice& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace latkit
