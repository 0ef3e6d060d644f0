#include "latkit/builders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace latkit {

namespace {

std::vector<unsigned> divisors_of(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

[[noreturn]] void bound_exceeded(const std::string& what) {
  throw LatticeError(LatticeErrorKind::BoundExceeded, "BoundExceeded: " + what);
}

}  // namespace

MultLattice build_divisor_quantale(unsigned n) {
  if (n == 0) throw std::invalid_argument("build_divisor_quantale: n must be positive");
  const auto divs = divisors_of(n);
  const std::size_t size = divs.size();
  if (size > ElementSet::kCapacity) bound_exceeded("too many divisors");

  std::map<unsigned, Index> index_of;
  for (Index i = 0; i < size; ++i) index_of[divs[i]] = i;

  LatticeTables t;
  t.n = size;
  t.leq.assign(size * size, 0);
  t.mul.assign(size * size, 0);
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) {
      t.leq[i * size + j] = divs[i] % divs[j] == 0 ? 1 : 0;
      const auto prod = static_cast<unsigned long long>(divs[i]) * divs[j];
      t.mul[i * size + j] = index_of.at(static_cast<unsigned>(std::gcd(prod, 1ULL * n)));
    }
    t.names.push_back("(" + std::to_string(divs[i]) + ")");
  }
  t.label = "D" + std::to_string(n);
  return validate_lattice(t);
}

Index divisor_index(unsigned n, unsigned d) {
  const auto divs = divisors_of(n);
  const auto it = std::find(divs.begin(), divs.end(), d);
  if (it == divs.end()) throw std::invalid_argument("divisor_index: d does not divide n");
  return static_cast<Index>(it - divs.begin());
}

MultLattice build_powerset_frame(unsigned k) {
  if (k > kMaxPowersetRank) bound_exceeded("powerset frame rank above " + std::to_string(kMaxPowersetRank));
  const std::size_t size = std::size_t{1} << k;
  LatticeTables t;
  t.n = size;
  t.leq.assign(size * size, 0);
  t.mul.assign(size * size, 0);
  for (Index a = 0; a < size; ++a) {
    for (Index b = 0; b < size; ++b) {
      t.leq[a * size + b] = (a & ~b) == 0 ? 1 : 0;
      t.mul[a * size + b] = a & b;
    }
    std::string name = "{";
    for (unsigned bit = 0; bit < k; ++bit) {
      if (((a >> bit) & 1U) == 0) continue;
      if (name.size() > 1) name += ',';
      name += std::to_string(bit);
    }
    t.names.push_back(name + "}");
  }
  t.label = "P" + std::to_string(k);
  return validate_lattice(t);
}

MultLattice build_chain_quantale(unsigned n, ChainKind kind) {
  if (n == 0) throw std::invalid_argument("build_chain_quantale: n must be positive");
  if (n > ElementSet::kCapacity) bound_exceeded("chain longer than carrier capacity");
  LatticeTables t;
  t.n = n;
  t.leq.assign(std::size_t{n} * n, 0);
  t.mul.assign(std::size_t{n} * n, 0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      t.leq[i * n + j] = i <= j ? 1 : 0;
      if (kind == ChainKind::Meet) {
        t.mul[i * n + j] = std::min(i, j);
      } else {
        t.mul[i * n + j] = i + j >= n - 1 ? i + j - (n - 1) : 0;
      }
    }
    t.names.push_back(std::to_string(i));
  }
  t.label = std::string(kind == ChainKind::Meet ? "C" : "L") + std::to_string(n);
  return validate_lattice(t);
}

MultLattice build_product(const MultLattice& a, const MultLattice& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t size = na * nb;
  if (size > ElementSet::kCapacity) bound_exceeded("product larger than carrier capacity");
  LatticeTables t;
  t.n = size;
  t.leq.assign(size * size, 0);
  t.mul.assign(size * size, 0);
  for (Index p = 0; p < size; ++p) {
    const Index pa = p / nb;
    const Index pb = p % nb;
    for (Index q = 0; q < size; ++q) {
      const Index qa = q / nb;
      const Index qb = q % nb;
      t.leq[p * size + q] = a.leq(pa, qa) && b.leq(pb, qb) ? 1 : 0;
      t.mul[p * size + q] = a.mul(pa, qa) * nb + b.mul(pb, qb);
    }
    t.names.push_back("<" + a.name(pa) + "," + b.name(pb) + ">");
  }
  t.label = a.label() + "x" + b.label();
  return validate_lattice(t);
}

namespace {

using Code = std::vector<std::uint8_t>;

// Partial order with bot = 0 and top = n-1, plus its derived tables.
struct Order {
  std::size_t n = 0;
  std::vector<std::uint8_t> leq;
  std::vector<Index> join;
  std::vector<Index> meet;

  bool le(Index a, Index b) const { return leq[a * n + b] != 0; }
};

std::optional<Index> least_upper_bound(const Order& o, Index a, Index b) {
  for (Index u = 0; u < o.n; ++u) {
    if (!o.le(a, u) || !o.le(b, u)) continue;
    bool least = true;
    for (Index v = 0; v < o.n && least; ++v)
      if (o.le(a, v) && o.le(b, v) && !o.le(u, v)) least = false;
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<Index> greatest_lower_bound(const Order& o, Index a, Index b) {
  for (Index u = 0; u < o.n; ++u) {
    if (!o.le(u, a) || !o.le(u, b)) continue;
    bool greatest = true;
    for (Index v = 0; v < o.n && greatest; ++v)
      if (o.le(v, a) && o.le(v, b) && !o.le(v, u)) greatest = false;
    if (greatest) return u;
  }
  return std::nullopt;
}

// Fills join/meet; false if some pair lacks a bound.
bool complete_tables(Order& o) {
  const std::size_t n = o.n;
  o.join.assign(n * n, 0);
  o.meet.assign(n * n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const auto j = least_upper_bound(o, a, b);
      const auto m = greatest_lower_bound(o, a, b);
      if (!j || !m) return false;
      o.join[a * n + b] = *j;
      o.meet[a * n + b] = *m;
    }
  }
  return true;
}

// Least leq encoding over relabellings of the inner elements.
Code canonical_order(const Order& o) {
  const std::size_t n = o.n;
  std::vector<Index> inner;
  for (Index i = 1; i + 1 < n; ++i) inner.push_back(i);
  std::vector<Index> at(n);
  at[0] = 0;
  at[n - 1] = n - 1;
  Code best;
  do {
    for (std::size_t k = 0; k < inner.size(); ++k) at[k + 1] = inner[k];
    Code code(n * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) code[a * n + b] = o.le(at[a], at[b]) ? 1 : 0;
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(inner.begin(), inner.end()));
  return best;
}

// All lattice orders on n >= 1 elements, canonical labelling, up to isomorphism.
std::vector<Order> lattice_orders(std::size_t n) {
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 1; i + 1 < n; ++i)
    for (Index j = i + 1; j + 1 < n; ++j) pairs.emplace_back(i, j);

  // Inner elements 1..n-2 are related only upward in label order; every
  // finite poset has such a labelling.
  std::set<Code> seen;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    Order o;
    o.n = n;
    o.leq.assign(n * n, 0);
    for (Index i = 0; i < n; ++i) {
      o.leq[i * n + i] = 1;
      o.leq[0 * n + i] = 1;
      o.leq[i * n + (n - 1)] = 1;
    }
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if ((mask >> p) & 1U) o.leq[pairs[p].first * n + pairs[p].second] = 1;

    bool transitive = true;
    for (Index a = 0; a < n && transitive; ++a)
      for (Index b = 0; b < n && transitive; ++b)
        for (Index c = 0; c < n && transitive; ++c)
          if (o.le(a, b) && o.le(b, c) && !o.le(a, c)) transitive = false;
    if (!transitive || !complete_tables(o)) continue;
    seen.insert(canonical_order(o));
  }

  std::vector<Order> out;
  for (const Code& code : seen) {
    Order o;
    o.n = n;
    o.leq = code;
    complete_tables(o);
    out.push_back(std::move(o));
  }
  return out;
}

// Every valid multiplication on a canonical lattice order (bot = 0, top = n-1),
// recorded by the canonical code of the (order, mul) pair.
void multiplications(const Order& order, std::set<Code>& found) {
  const std::size_t n = order.n;
  const Index bot = 0;
  const Index top = n - 1;
  std::vector<Index> table(n * n, bot);
  for (Index a = 0; a < n; ++a) {
    table[a * n + top] = a;
    table[top * n + a] = a;
  }

  std::vector<std::pair<Index, Index>> free;
  std::vector<std::vector<Index>> choices;
  for (Index a = 1; a + 1 < n; ++a) {
    for (Index b = a; b + 1 < n; ++b) {
      free.emplace_back(a, b);
      // x*y <= x meet y is forced by the laws.
      std::vector<Index> below;
      for (Index v = 0; v < n; ++v)
        if (order.le(v, order.meet[a * n + b])) below.push_back(v);
      choices.push_back(std::move(below));
    }
  }

  // Entries assigned so far must respect x <= x', y <= y' => x*y <= x'*y'.
  auto monotone_so_far = [&](std::size_t upto) {
    const auto [a, b] = free[upto];
    const Index v = table[a * n + b];
    for (std::size_t k = 0; k < upto; ++k) {
      const auto [c, d] = free[k];
      const Index w = table[c * n + d];
      const bool below = (order.le(c, a) && order.le(d, b)) || (order.le(d, a) && order.le(c, b));
      const bool above = (order.le(a, c) && order.le(b, d)) || (order.le(a, d) && order.le(b, c));
      if (below && !order.le(w, v)) return false;
      if (above && !order.le(v, w)) return false;
    }
    return true;
  };

  auto laws_hold = [&] {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        for (Index z = 0; z < n; ++z) {
          if (table[x * n + table[y * n + z]] != table[table[x * n + y] * n + z]) return false;
          if (table[x * n + order.join[y * n + z]] !=
              order.join[table[x * n + y] * n + table[x * n + z]])
            return false;
        }
    return true;
  };

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == free.size()) {
      if (!laws_hold()) return;
      LatticeTables t;
      t.n = n;
      t.leq = order.leq;
      t.mul = table;
      found.insert(canonical_form(validate_lattice(t)));
      return;
    }
    const auto [a, b] = free[k];
    for (Index v : choices[k]) {
      table[a * n + b] = v;
      table[b * n + a] = v;
      if (monotone_so_far(k)) self(self, k + 1);
    }
    table[a * n + b] = bot;
    table[b * n + a] = bot;
  };
  search(search, 0);
}

LatticeTables decode(std::size_t n, const Code& code) {
  LatticeTables t;
  t.n = n;
  t.leq.assign(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(n * n));
  t.mul.assign(code.begin() + static_cast<std::ptrdiff_t>(n * n), code.end());
  return t;
}

}  // namespace

std::size_t count_lattice_orders(unsigned n) {
  if (n == 0) return 0;
  if (n > kCanonicalFormLimit) {
    bound_exceeded("lattice order enumeration limited to " + std::to_string(kCanonicalFormLimit) +
                   " elements");
  }
  return lattice_orders(n).size();
}

void enumerate_lattices(unsigned max_n, const std::function<void(const MultLattice&)>& sink,
                        unsigned bound) {
  if (max_n > bound) {
    bound_exceeded("enumeration size " + std::to_string(max_n) + " above bound " + std::to_string(bound));
  }
  for (unsigned n = 1; n <= max_n; ++n) {
    std::set<Code> found;
    for (const Order& order : lattice_orders(n)) multiplications(order, found);
    std::size_t k = 0;
    for (const Code& code : found) {
      LatticeTables t = decode(n, code);
      t.label = "E" + std::to_string(n) + "." + std::to_string(k++);
      sink(validate_lattice(t));
    }
  }
}

std::vector<MultLattice> enumerate_lattices(unsigned max_n, unsigned bound) {
  std::vector<MultLattice> out;
  enumerate_lattices(max_n, [&](const MultLattice& L) { out.push_back(L); }, bound);
  return out;
}

}  // namespace latkit
