#pragma once

#include <functional>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

/// Ideal lattice of Z/nZ. Elements are the divisors d of n in increasing
/// order, named "(d)"; (d) <= (e) iff e | d, join = gcd, meet = lcm,
/// (d)*(e) = (gcd(de, n)). bot = (n), top = (1).
MultLattice build_divisor_quantale(unsigned n);

/// Index of the ideal (d) in build_divisor_quantale(n); throws if d does not divide n.
Index divisor_index(unsigned n, unsigned d);

/// Subsets of a k-set ordered by inclusion with multiplication = intersection.
/// Element i is the subset with bitmask i.
inline constexpr unsigned kMaxPowersetRank = 7;
MultLattice build_powerset_frame(unsigned k);

enum class ChainKind { Meet, Lukasiewicz };

/// Chain 0 < 1 < ... < n-1 with mul = min (Meet) or max(0, i+j-(n-1)).
MultLattice build_chain_quantale(unsigned n, ChainKind kind);

/// Componentwise order and multiplication. Element (i, j) has index i*|b| + j.
MultLattice build_product(const MultLattice& a, const MultLattice& b);

inline constexpr unsigned kDefaultEnumerationBound = 6;

/// Every lattice order on at most max_n elements up to isomorphism, paired
/// with every multiplication table that passes validate_lattice, again up to
/// isomorphism of the pair. Each result is emitted in its canonical labelling
/// (bot = 0, top = n-1); output is ordered by size, then by canonical code.
/// Throws BoundExceeded when max_n > bound.
void enumerate_lattices(unsigned max_n, const std::function<void(const MultLattice&)>& sink,
                        unsigned bound = kDefaultEnumerationBound);
std::vector<MultLattice> enumerate_lattices(unsigned max_n, unsigned bound = kDefaultEnumerationBound);

/// Number of lattice orders on n elements up to isomorphism, whether or not
/// they carry any quantale structure.
std::size_t count_lattice_orders(unsigned n);

}  // namespace latkit
