#include "latkit/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "latkit/detail/memo.hpp"

namespace latkit {

const char* to_string(LatticeErrorKind kind) {
  switch (kind) {
    case LatticeErrorKind::Malformed: return "Malformed";
    case LatticeErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case LatticeErrorKind::NotALattice: return "NotALattice";
    case LatticeErrorKind::AxiomViolation: return "AxiomViolation";
    case LatticeErrorKind::BoundExceeded: return "BoundExceeded";
    case LatticeErrorKind::DefinitionMismatch: return "DefinitionMismatch";
  }
  return "?";
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Commutativity: return "commutativity";
    case Axiom::Unit: return "unit";
    case Axiom::EmptyJoin: return "empty-join";
    case Axiom::Associativity: return "associativity";
    case Axiom::JoinDistributivity: return "join-distributivity";
  }
  return "?";
}

std::size_t MultLattice::size() const { return data_->n; }
Index MultLattice::bot() const { return data_->bot; }
Index MultLattice::top() const { return data_->top; }
bool MultLattice::leq(Index a, Index b) const { return data_->leq[a * data_->n + b] != 0; }
Index MultLattice::join(Index a, Index b) const { return data_->join[a * data_->n + b]; }
Index MultLattice::meet(Index a, Index b) const { return data_->meet[a * data_->n + b]; }
Index MultLattice::mul(Index a, Index b) const { return data_->mul[a * data_->n + b]; }
const ElementSet& MultLattice::up(Index x) const { return data_->up[x]; }
const ElementSet& MultLattice::down(Index x) const { return data_->down[x]; }
const std::string& MultLattice::name(Index x) const { return data_->names[x]; }
const std::vector<std::string>& MultLattice::names() const { return data_->names; }
const std::string& MultLattice::label() const { return data_->label; }
detail::LatticeMemo& MultLattice::memo() const { return *memo_; }

MultLattice MultLattice::with_label(std::string label) const {
  auto data = std::make_shared<detail::LatticeData>(*data_);
  data->label = std::move(label);
  MultLattice out;
  out.data_ = std::move(data);
  out.memo_ = memo_;
  return out;
}

LatticeTables MultLattice::tables() const {
  LatticeTables t;
  t.n = data_->n;
  t.leq = data_->leq;
  t.mul.assign(data_->mul.begin(), data_->mul.end());
  t.names = data_->names;
  t.label = data_->label;
  return t;
}

namespace {

[[noreturn]] void fail(LatticeErrorKind kind, const std::string& what, std::vector<Index> witness = {},
                       std::optional<Axiom> axiom = std::nullopt) {
  std::ostringstream msg;
  msg << to_string(kind);
  if (axiom) msg << "(" << to_string(*axiom) << ")";
  msg << ": " << what;
  if (!witness.empty()) {
    msg << " [witness";
    for (Index w : witness) msg << ' ' << w;
    msg << ']';
  }
  throw LatticeError(kind, msg.str(), std::move(witness), axiom);
}

void check_shape(const LatticeTables& raw) {
  const std::size_t n = raw.n;
  if (n == 0) fail(LatticeErrorKind::Malformed, "carrier must have at least one element");
  if (n > ElementSet::kCapacity) {
    fail(LatticeErrorKind::BoundExceeded,
         "carrier has " + std::to_string(n) + " elements; at most " +
             std::to_string(ElementSet::kCapacity) + " supported");
  }
  if (raw.leq.size() != n * n) fail(LatticeErrorKind::Malformed, "order matrix is not n x n");
  if (raw.mul.size() != n * n) fail(LatticeErrorKind::Malformed, "multiplication table is not n x n");
  if (!raw.names.empty() && raw.names.size() != n) {
    fail(LatticeErrorKind::Malformed, "names list does not have n entries");
  }
  for (std::size_t k = 0; k < n * n; ++k) {
    if (raw.mul[k] >= n) {
      fail(LatticeErrorKind::Malformed, "multiplication entry out of range", {k / n, k % n});
    }
  }
}

void check_partial_order(const LatticeTables& raw) {
  const std::size_t n = raw.n;
  auto le = [&](Index a, Index b) { return raw.leq[a * n + b] != 0; };
  for (Index a = 0; a < n; ++a) {
    if (!le(a, a)) fail(LatticeErrorKind::NotAPartialOrder, "not reflexive", {a});
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (le(a, b) && le(b, a)) fail(LatticeErrorKind::NotAPartialOrder, "not antisymmetric", {a, b});
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (Index c = 0; c < n; ++c) {
        if (le(b, c) && !le(a, c)) fail(LatticeErrorKind::NotAPartialOrder, "not transitive", {a, b, c});
      }
    }
  }
}

// Least element of s with respect to the order whose principal up-sets are `up`.
std::optional<Index> least_of(const ElementSet& s, const std::vector<ElementSet>& up) {
  std::optional<Index> found;
  s.for_each([&](Index u) {
    if (!found && s.is_subset_of(up[u])) found = u;
  });
  return found;
}

void check_axioms(const detail::LatticeData& d) {
  const std::size_t n = d.n;
  auto mul = [&](Index a, Index b) -> Index { return d.mul[a * n + b]; };
  auto join = [&](Index a, Index b) -> Index { return d.join[a * n + b]; };
  auto fail_axiom = [](Axiom ax, const std::string& what, std::vector<Index> w) {
    fail(LatticeErrorKind::AxiomViolation, what, std::move(w), ax);
  };

  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (mul(x, y) != mul(y, x)) fail_axiom(Axiom::Commutativity, "x*y != y*x", {x, y});
    }
  }
  for (Index x = 0; x < n; ++x) {
    if (mul(x, d.top) != x) fail_axiom(Axiom::Unit, "x*1 != x", {x, d.top});
  }
  for (Index x = 0; x < n; ++x) {
    if (mul(x, d.bot) != d.bot) fail_axiom(Axiom::EmptyJoin, "x*0 != 0", {x, d.bot});
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        if (mul(x, mul(y, z)) != mul(mul(x, y), z)) {
          fail_axiom(Axiom::Associativity, "x*(y*z) != (x*y)*z", {x, y, z});
        }
      }
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = y + 1; z < n; ++z) {
        if (mul(x, join(y, z)) != join(mul(x, y), mul(x, z))) {
          fail_axiom(Axiom::JoinDistributivity, "x*(y v z) != x*y v x*z", {x, y, z});
        }
      }
    }
  }
}

}  // namespace

MultLattice validate_lattice(const LatticeTables& raw) {
  check_shape(raw);
  check_partial_order(raw);

  const std::size_t n = raw.n;
  auto data = std::make_shared<detail::LatticeData>();
  data->n = n;
  data->leq = raw.leq;
  for (auto& b : data->leq) b = b != 0 ? 1 : 0;
  data->up.assign(n, ElementSet{});
  data->down.assign(n, ElementSet{});
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (data->leq[a * n + b] != 0) {
        data->up[a].insert(b);
        data->down[b].insert(a);
      }
    }
  }

  const ElementSet all = ElementSet::first_n(n);
  const auto bot = least_of(all, data->up);
  if (!bot) fail(LatticeErrorKind::NotALattice, "no least element (empty join missing)");
  const auto top = least_of(all, data->down);
  if (!top) fail(LatticeErrorKind::NotALattice, "no greatest element (empty meet missing)");
  data->bot = *bot;
  data->top = *top;

  data->join.assign(n * n, 0);
  data->meet.assign(n * n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      const auto j = least_of(data->up[a] & data->up[b], data->up);
      if (!j) fail(LatticeErrorKind::NotALattice, "pair has no least upper bound", {a, b});
      const auto m = least_of(data->down[a] & data->down[b], data->down);
      if (!m) fail(LatticeErrorKind::NotALattice, "pair has no greatest lower bound", {a, b});
      data->join[a * n + b] = data->join[b * n + a] = static_cast<std::uint8_t>(*j);
      data->meet[a * n + b] = data->meet[b * n + a] = static_cast<std::uint8_t>(*m);
    }
  }

  data->mul.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) data->mul[k] = static_cast<std::uint8_t>(raw.mul[k]);
  check_axioms(*data);

  data->names = raw.names;
  if (data->names.empty()) {
    data->names.reserve(n);
    for (Index i = 0; i < n; ++i) data->names.push_back(std::to_string(i));
  }
  data->label = raw.label;

  MultLattice out;
  out.data_ = std::move(data);
  out.memo_ = std::make_shared<detail::LatticeMemo>();
  return out;
}

Index join_of(const MultLattice& L, const ElementSet& s) {
  Index acc = L.bot();
  s.for_each([&](Index x) { acc = L.join(acc, x); });
  return acc;
}

Index meet_of(const MultLattice& L, const ElementSet& s) {
  Index acc = L.top();
  s.for_each([&](Index x) { acc = L.meet(acc, x); });
  return acc;
}

Index power(const MultLattice& L, Index x, unsigned k) {
  if (k == 0) throw std::invalid_argument("power: exponent must be at least 1");
  Index acc = x;
  for (unsigned i = 1; i < k; ++i) acc = L.mul(acc, x);
  return acc;
}

std::vector<Index> lower_covers(const MultLattice& L, Index x) {
  std::vector<Index> out;
  ElementSet below = L.down(x);
  below.erase(x);
  below.for_each([&](Index y) {
    ElementSet between = L.up(y) & below;
    between.erase(y);
    if (between.empty()) out.push_back(y);
  });
  return out;
}

std::size_t rank_of(const MultLattice& L, Index x) {
  // Elements with smaller down-sets come first in any linear extension.
  std::vector<Index> order;
  L.down(x).for_each([&](Index y) { order.push_back(y); });
  std::stable_sort(order.begin(), order.end(),
                   [&](Index p, Index q) { return L.down(p).count() < L.down(q).count(); });
  std::vector<std::size_t> rank(L.size(), 0);
  for (Index y : order)
    for (Index c : lower_covers(L, y)) rank[y] = std::max(rank[y], rank[c] + 1);
  return rank[x];
}

bool is_compact_element(const MultLattice& L, Index c) {
  const std::size_t n = L.size();
  if (n > kCompactScanLimit) return true;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    ElementSet family;
    for (Index i = 0; i < n; ++i)
      if ((mask >> i) & 1U) family.insert(i);
    if (!L.leq(c, join_of(L, family))) continue;
    // Shrink to an irredundant subfamily; it is finite because the family is.
    ElementSet cover = family;
    family.for_each([&](Index i) {
      ElementSet trial = cover;
      trial.erase(i);
      if (L.leq(c, join_of(L, trial))) cover = trial;
    });
    if (!L.leq(c, join_of(L, cover))) return false;
  }
  return true;
}

bool is_compactly_generated(const MultLattice& L) {
  std::vector<bool> compact(L.size());
  for (Index c = 0; c < L.size(); ++c) compact[c] = is_compact_element(L, c);
  for (Index x = 0; x < L.size(); ++x) {
    ElementSet gens;
    L.down(x).for_each([&](Index c) {
      if (compact[c]) gens.insert(c);
    });
    if (join_of(L, gens) != x) return false;
  }
  return true;
}

bool is_max_bounded(const MultLattice& L) {
  ElementSet maximal;
  for (Index m = 0; m < L.size(); ++m) {
    if (m == L.top()) continue;
    ElementSet strictly_above = L.up(m);
    strictly_above.erase(m);
    strictly_above.erase(L.top());
    if (strictly_above.empty()) maximal.insert(m);
  }
  for (Index x = 0; x < L.size(); ++x) {
    if (x == L.top()) continue;
    if (!L.up(x).intersects(maximal)) return false;
  }
  return true;
}

namespace {

std::vector<std::uint8_t> encode(const MultLattice& L, const std::vector<Index>& pos) {
  const std::size_t n = L.size();
  std::vector<Index> at(n);
  for (Index i = 0; i < n; ++i) at[pos[i]] = i;
  std::vector<std::uint8_t> code;
  code.reserve(2 * n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) code.push_back(L.leq(at[a], at[b]) ? 1 : 0);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) code.push_back(static_cast<std::uint8_t>(pos[L.mul(at[a], at[b])]));
  return code;
}

}  // namespace

std::vector<std::uint8_t> canonical_form(const MultLattice& L) {
  const std::size_t n = L.size();
  if (n > kCanonicalFormLimit) {
    fail(LatticeErrorKind::BoundExceeded, "canonical form limited to " +
                                              std::to_string(kCanonicalFormLimit) + " elements");
  }
  std::vector<Index> inner;
  for (Index i = 0; i < n; ++i)
    if (i != L.bot() && i != L.top()) inner.push_back(i);

  std::vector<Index> pos(n);
  pos[L.bot()] = 0;
  pos[L.top()] = n - 1;
  std::vector<std::uint8_t> best;
  do {
    for (std::size_t k = 0; k < inner.size(); ++k) pos[inner[k]] = k + 1;
    auto code = encode(L, pos);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(inner.begin(), inner.end()));
  return best;
}

std::optional<std::vector<Index>> find_isomorphism(const MultLattice& a, const MultLattice& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;

  auto signature = [](const MultLattice& L, Index x) {
    return std::array<std::size_t, 3>{L.up(x).count(), L.down(x).count(), L.mul(x, x) == x ? 1U : 0U};
  };

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Most constrained first: elements whose signature is rare in a.
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
    return a.down(x).count() < a.down(y).count();
  });

  std::vector<Index> image(n, n);
  std::vector<bool> used(n, false);
  std::vector<bool> assigned(n, false);

  auto consistent = [&](Index x) {
    const Index fx = image[x];
    for (Index y = 0; y < n; ++y) {
      if (!assigned[y]) continue;
      const Index fy = image[y];
      if (a.leq(x, y) != b.leq(fx, fy) || a.leq(y, x) != b.leq(fy, fx)) return false;
      const Index p = a.mul(x, y);
      if (assigned[p] && image[p] != b.mul(fx, fy)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) {
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          if (image[a.mul(x, y)] != b.mul(image[x], image[y])) return false;
      return true;
    }
    const Index x = order[depth];
    const auto sig = signature(a, x);
    for (Index cand = 0; cand < n; ++cand) {
      if (used[cand] || signature(b, cand) != sig) continue;
      image[x] = cand;
      assigned[x] = true;
      used[cand] = true;
      if (consistent(x) && self(self, depth + 1)) return true;
      assigned[x] = false;
      used[cand] = false;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  return image;
}

}  // namespace latkit
