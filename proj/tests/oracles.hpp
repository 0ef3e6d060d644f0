// Reference computations for the tests. Nothing here calls into the library's
// algorithms: divisor quantales are handled with integer arithmetic, and
// everything else by brute force over raw tables.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline bool is_prime_number(unsigned p) {
  if (p < 2) return false;
  for (unsigned q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline bool is_prime_power(unsigned d) {
  if (d < 2) return false;
  unsigned p = 2;
  while (d % p != 0) ++p;
  while (d % p == 0) d /= p;
  return d == 1;
}

/// Product of the distinct primes dividing d.
inline unsigned squarefree_kernel(unsigned d) {
  unsigned out = 1;
  for (unsigned p = 2; p <= d; ++p) {
    if (d % p != 0 || !is_prime_number(p)) continue;
    out *= p;
  }
  return out;
}

inline unsigned lcm(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

/// Ideals of Z/nZ as divisors: (d) <= (e) iff e | d.
struct Divisor {
  unsigned n;
  bool leq(unsigned d, unsigned e) const { return d % e == 0; }
  unsigned join(unsigned d, unsigned e) const { return std::gcd(d, e); }
  unsigned meet(unsigned d, unsigned e) const { return lcm(d, e); }
  unsigned mul(unsigned d, unsigned e) const { return std::gcd(d * e, n); }

  bool prime(unsigned d) const { return is_prime_number(d); }
  bool maximal(unsigned d) const { return is_prime_number(d); }
  bool strongly_irreducible(unsigned d) const { return is_prime_power(d); }
  bool primary(unsigned d) const { return is_prime_power(d); }
  unsigned radical(unsigned d) const { return squarefree_kernel(d); }
  bool radical_element(unsigned d) const { return squarefree_kernel(d) == d; }
  bool nilpotent(unsigned d) const { return d % squarefree_kernel(n) == 0; }
  bool idempotent(unsigned d) const { return std::gcd(d, n / d) == 1; }
};

/// A finite structure given by its full order relation and multiplication.
struct Raw {
  std::size_t n = 0;
  std::vector<std::vector<bool>> le;
  std::vector<std::vector<std::size_t>> mul;

  std::optional<std::size_t> lub(std::size_t a, std::size_t b) const {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < n; ++c) {
      if (!le[a][c] || !le[b][c]) continue;
      bool least = true;
      for (std::size_t d = 0; d < n; ++d)
        if (le[a][d] && le[b][d] && !le[c][d]) least = false;
      if (least) best = c;
    }
    return best;
  }
  std::optional<std::size_t> glb(std::size_t a, std::size_t b) const {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < n; ++c) {
      if (!le[c][a] || !le[c][b]) continue;
      bool greatest = true;
      for (std::size_t d = 0; d < n; ++d)
        if (le[d][a] && le[d][b] && !le[d][c]) greatest = false;
      if (greatest) best = c;
    }
    return best;
  }
  std::optional<std::size_t> extreme(bool top) const {
    for (std::size_t c = 0; c < n; ++c) {
      bool ok = true;
      for (std::size_t d = 0; d < n; ++d) ok = ok && (top ? le[d][c] : le[c][d]);
      if (ok) return c;
    }
    return std::nullopt;
  }
};

/// Partial order with binary lub and glb everywhere and both bounds.
inline bool is_lattice_order(const Raw& r) {
  const std::size_t n = r.n;
  if (n == 0) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (!r.le[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && r.le[a][b] && r.le[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (r.le[a][b] && r.le[b][c] && !r.le[a][c]) return false;
    }
  }
  if (!r.extreme(false) || !r.extreme(true)) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!r.lub(a, b) || !r.glb(a, b)) return false;
  return true;
}

inline std::vector<std::vector<std::size_t>> lub_table(const Raw& r) {
  std::vector<std::vector<std::size_t>> t(r.n, std::vector<std::size_t>(r.n));
  for (std::size_t a = 0; a < r.n; ++a)
    for (std::size_t b = 0; b < r.n; ++b) t[a][b] = *r.lub(a, b);
  return t;
}

/// Commutativity, associativity, top as unit, x*bot = bot, distributivity
/// over binary joins. Assumes is_lattice_order.
inline bool multiplication_laws(const Raw& r, const std::vector<std::vector<std::size_t>>& lub) {
  const std::size_t n = r.n;
  const std::size_t bot = *r.extreme(false), top = *r.extreme(true);
  for (std::size_t a = 0; a < n; ++a) {
    if (r.mul[a][top] != a || r.mul[a][bot] != bot) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (r.mul[a][b] >= n || r.mul[a][b] != r.mul[b][a]) return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (r.mul[a][r.mul[b][c]] != r.mul[r.mul[a][b]][c]) return false;
        if (r.mul[a][lub[b][c]] != lub[r.mul[a][b]][r.mul[a][c]]) return false;
      }
  return true;
}

inline bool is_multiplicative_lattice(const Raw& r) {
  return is_lattice_order(r) && multiplication_laws(r, lub_table(r));
}

/// Relabelling-invariant code: minimum over all permutations.
inline std::vector<std::size_t> canonical_code(const Raw& r) {
  std::vector<std::size_t> perm(r.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best;
  do {
    std::vector<std::size_t> inv(r.n);
    for (std::size_t i = 0; i < r.n; ++i) inv[perm[i]] = i;
    std::vector<std::size_t> code;
    for (std::size_t i = 0; i < r.n; ++i)
      for (std::size_t j = 0; j < r.n; ++j) code.push_back(r.le[perm[i]][perm[j]] ? 1 : 0);
    for (std::size_t i = 0; i < r.n; ++i)
      for (std::size_t j = 0; j < r.n; ++j) code.push_back(inv[r.mul[perm[i]][perm[j]]]);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Multiplicative lattices on exactly n elements up to isomorphism, counted by
/// generating every order with bot = 0 and top = n-1 and every commutative
/// table that fixes the unit and the zero.
inline std::size_t count_multiplicative_lattices(std::size_t n) {
  if (n <= 2) return 1;
  const std::size_t inner = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // ordered pairs of inner elements
  for (std::size_t i = 1; i <= inner; ++i)
    for (std::size_t j = 1; j <= inner; ++j)
      if (i != j) pairs.push_back({i, j});
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // free multiplication entries
  for (std::size_t i = 1; i <= inner; ++i)
    for (std::size_t j = i; j <= inner; ++j) cells.push_back({i, j});
  std::set<std::vector<std::size_t>> seen;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << pairs.size()); ++rel) {
    Raw r;
    r.n = n;
    r.le.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      r.le[i][i] = true;
      r.le[0][i] = true;
      r.le[i][n - 1] = true;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((rel >> k) & 1U) r.le[pairs[k].first][pairs[k].second] = true;
    if (!is_lattice_order(r)) continue;
    const auto lub = lub_table(r);
    r.mul.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      r.mul[i][n - 1] = r.mul[n - 1][i] = i;
      r.mul[i][0] = r.mul[0][i] = 0;
    }
    std::vector<std::size_t> choice(cells.size(), 0);
    for (;;) {
      for (std::size_t k = 0; k < cells.size(); ++k) {
        r.mul[cells[k].first][cells[k].second] = choice[k];
        r.mul[cells[k].second][cells[k].first] = choice[k];
      }
      if (multiplication_laws(r, lub)) seen.insert(canonical_code(r));
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == n) choice[k++] = 0;
      if (k == choice.size()) break;
    }
  }
  return seen.size();
}

/// Subbasis members {s in sigma : x <= s} for every x, as sorted point lists.
inline std::vector<std::set<std::size_t>> subbasis(const Raw& r, const std::set<std::size_t>& sigma) {
  std::vector<std::set<std::size_t>> out;
  for (std::size_t x = 0; x < r.n; ++x) {
    std::set<std::size_t> v;
    for (std::size_t s : sigma)
      if (r.le[x][s]) v.insert(s);
    out.push_back(v);
  }
  return out;
}

/// A is closed iff every point outside A has a basic open neighbourhood
/// missing A; the largest candidate is the complement of the union of the
/// subbasis members that avoid the point.
inline bool is_closed(const std::vector<std::set<std::size_t>>& sub, const std::set<std::size_t>& sigma,
                      const std::set<std::size_t>& a) {
  for (std::size_t p : sigma) {
    if (a.contains(p)) continue;
    std::set<std::size_t> cover;
    for (const auto& s : sub)
      if (!s.contains(p)) cover.insert(s.begin(), s.end());
    if (!std::includes(cover.begin(), cover.end(), a.begin(), a.end())) return false;
  }
  return true;
}

inline std::set<std::size_t> closure(const std::vector<std::set<std::size_t>>& sub, const std::set<std::size_t>& sigma,
                                     const std::set<std::size_t>& a) {
  std::set<std::size_t> out;
  for (std::size_t p : sigma) {
    std::set<std::size_t> cover;
    for (const auto& s : sub)
      if (!s.contains(p)) cover.insert(s.begin(), s.end());
    if (!std::includes(cover.begin(), cover.end(), a.begin(), a.end())) out.insert(p);
  }
  return out;
}

/// All closed subsets of sigma by scanning its power set (|sigma| <= 16).
inline std::vector<std::set<std::size_t>> closed_family(const std::vector<std::set<std::size_t>>& sub,
                                                        const std::set<std::size_t>& sigma) {
  const std::vector<std::size_t> pts(sigma.begin(), sigma.end());
  std::vector<std::set<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
    std::set<std::size_t> a;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if ((mask >> i) & 1U) a.insert(pts[i]);
    if (is_closed(sub, sigma, a)) out.push_back(a);
  }
  return out;
}

inline bool irreducible(const std::vector<std::set<std::size_t>>& family, const std::set<std::size_t>& c) {
  if (c.empty()) return false;
  for (const auto& a : family) {
    for (const auto& b : family) {
      std::set<std::size_t> u = a;
      u.insert(b.begin(), b.end());
      if (u != c) continue;
      if (a != c && b != c) return false;
    }
  }
  return true;
}

}  // namespace oracle
