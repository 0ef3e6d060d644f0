#include "latkit/hom.hpp"

namespace latkit {

const char* to_string(HomLaw law) {
  switch (law) {
    case HomLaw::Shape: return "shape";
    case HomLaw::Monotone: return "monotone";
    case HomLaw::Join: return "join";
    case HomLaw::Meet: return "meet";
    case HomLaw::Mul: return "mul";
    case HomLaw::Unit: return "unit";
    case HomLaw::Bottom: return "bottom";
  }
  return "?";
}

namespace {

[[noreturn]] void violation(HomLaw law, const std::string& what, std::vector<Index> witness) {
  throw HomViolation(law, std::string("HomViolation(") + to_string(law) + "): " + what, std::move(witness));
}

}  // namespace

LatticeHom validate_hom(const MultLattice& source, const MultLattice& target, std::vector<Index> map) {
  const Index n = source.size();
  if (map.size() != n) {
    violation(HomLaw::Shape, "map has " + std::to_string(map.size()) + " entries for " + std::to_string(n) + " elements",
              {});
  }
  for (Index x = 0; x < n; ++x)
    if (map[x] >= target.size()) violation(HomLaw::Shape, "image out of range", {x});

  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (source.leq(x, y) && !target.leq(map[x], map[y])) violation(HomLaw::Monotone, "order not preserved", {x, y});
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (map[source.join(x, y)] != target.join(map[x], map[y])) violation(HomLaw::Join, "join not preserved", {x, y});
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (map[source.meet(x, y)] != target.meet(map[x], map[y])) violation(HomLaw::Meet, "meet not preserved", {x, y});
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (map[source.mul(x, y)] != target.mul(map[x], map[y])) violation(HomLaw::Mul, "product not preserved", {x, y});
  if (map[source.top()] != target.top()) violation(HomLaw::Unit, "top not sent to top", {source.top()});
  // Without this the constant-top map passes every law above, and
  // contraction would no longer be adjoint to the map.
  if (map[source.bot()] != target.bot()) violation(HomLaw::Bottom, "bot not sent to bot", {source.bot()});

  std::vector<Index> adjoint(target.size());
  for (Index y = 0; y < target.size(); ++y) {
    ElementSet below;
    for (Index x = 0; x < n; ++x)
      if (target.leq(map[x], y)) below.insert(x);
    adjoint[y] = join_of(source, below);
  }
  return LatticeHom(source, target, std::move(map), std::move(adjoint));
}

LatticeHom identity_hom(const MultLattice& L) {
  std::vector<Index> map(L.size());
  for (Index x = 0; x < L.size(); ++x) map[x] = x;
  return validate_hom(L, L, std::move(map));
}

LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
  if (f.target().size() != g.source().size()) {
    throw HomViolation(HomLaw::Shape, "HomViolation(shape): composition of mismatched maps", {});
  }
  std::vector<Index> map(f.source().size());
  for (Index x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return validate_hom(f.source(), g.target(), std::move(map));
}

ElementSet kernel_set(const LatticeHom& h) {
  ElementSet out;
  for (Index x = 0; x < h.source().size(); ++x)
    if (h(x) == h.target().bot()) out.insert(x);
  return out;
}

Index kernel_element(const LatticeHom& h) { return h.contraction(h.target().bot()); }

bool is_surjective(const LatticeHom& h) {
  ElementSet hit;
  for (Index x = 0; x < h.source().size(); ++x) hit.insert(h(x));
  return hit == h.target().carrier();
}

Verdict has_contraction_property(const LatticeHom& h, const ElementClass& c) {
  const ElementSet src = classify(h.source(), c);
  const ElementSet dst = classify(h.target(), c);
  Verdict out = Verdict::hold();
  dst.for_each([&](Index y) {
    if (out.holds() && !src.contains(h.contraction(y))) {
      out = Verdict::counterexample({{y, h.contraction(y)}, {}, "contraction of y leaves the class"});
    }
  });
  return out;
}

ElementSet InducedMap::image() const {
  ElementSet out;
  domain.for_each([&](Index y) { out.insert(image_of[y]); });
  return out;
}

ElementSet InducedMap::preimage(const ElementSet& s) const {
  ElementSet out;
  domain.for_each([&](Index y) {
    if (s.contains(image_of[y])) out.insert(y);
  });
  return out;
}

InducedMap induced_map(const LatticeHom& h, const ElementClass& c) {
  const Verdict v = has_contraction_property(h, c);
  if (!v.holds()) {
    const Index y = v.witness.elements.front();
    throw HomError(HomErrorKind::ContractionPropertyFails,
                   "ContractionPropertyFails: contraction of " + h.target().name(y) + " leaves the class", y);
  }
  InducedMap out;
  out.domain = classify(h.target(), c);
  out.image_of.assign(h.target().size(), 0);
  out.domain.for_each([&](Index y) { out.image_of[y] = h.contraction(y); });
  return out;
}

namespace {

Verdict continuity(const LatticeHom& h, const InducedMap& f, const LowerSpace& src, const LowerSpace& dst) {
  for (Index x = 0; x < h.source().size(); ++x) {
    const ElementSet pre = f.preimage(src.above(x));
    if (pre != dst.above(h(x))) {
      return Verdict::counterexample(
          {{x, h(x)}, {pre, dst.above(h(x))}, "preimage of above(x) differs from above(phi(x))"});
    }
  }
  for (const ElementSet& C : src.closed_sets()) {
    const ElementSet pre = f.preimage(C);
    if (!dst.is_closed(pre)) return Verdict::counterexample({{}, {C, pre}, "preimage of a closed set is not closed"});
  }
  return Verdict::hold();
}

}  // namespace

Verdict check_continuity(const LatticeHom& h, const ElementClass& c) {
  const InducedMap f = induced_map(h, c);
  return continuity(h, f, LowerSpace::of_class(h.source(), c), LowerSpace::of_class(h.target(), c));
}

Verdict check_embedding(const LatticeHom& h, const ElementClass& c) {
  if (!is_surjective(h)) throw HomError(HomErrorKind::NotSurjective, "NotSurjective: some target element is missed");
  const InducedMap f = induced_map(h, c);
  const LowerSpace src = LowerSpace::of_class(h.source(), c);
  const LowerSpace dst = LowerSpace::of_class(h.target(), c);

  std::vector<Index> seen(h.source().size(), h.target().size());
  Verdict out = Verdict::hold();
  f.domain.for_each([&](Index y) {
    const Index x = f.at(y);
    if (out.holds() && seen[x] != h.target().size())
      out = Verdict::counterexample({{seen[x], y, x}, {}, "two points with the same image"});
    seen[x] = y;
  });
  if (!out.holds()) return out;

  const ElementSet ker_up = src.above(kernel_element(h));
  ElementSet ker_up_setwise;
  const ElementSet kernel = kernel_set(h);
  src.points().for_each([&](Index x) {
    if (kernel.is_subset_of(h.source().down(x))) ker_up_setwise.insert(x);
  });
  if (ker_up != ker_up_setwise) {
    return Verdict::counterexample({{kernel_element(h)}, {ker_up, ker_up_setwise}, "the two kernel filters differ"});
  }
  if (f.image() != ker_up) {
    return Verdict::counterexample({{kernel_element(h)}, {f.image(), ker_up}, "image differs from the kernel filter"});
  }
  if (Verdict v = continuity(h, f, src, dst); !v.holds()) return v;
  // ker_up = above(kernel element) is closed, so closed in the subspace means
  // closed in the whole source space.
  for (const ElementSet& D : dst.closed_sets()) {
    ElementSet img;
    D.for_each([&](Index y) { img.insert(f.at(y)); });
    if (!src.is_closed(img)) return Verdict::counterexample({{}, {D, img}, "image of a closed set is not closed"});
  }
  return Verdict::hold("image = " + format_set(h.source(), ker_up));
}

DensitySides density_sides(const LatticeHom& h, const ElementClass& c) {
  const InducedMap f = induced_map(h, c);
  const LowerSpace src = LowerSpace::of_class(h.source(), c);
  DensitySides out;
  out.dense = src.closure(f.image()) == src.points();
  const Index floor = meet_of(h.source(), src.points());
  out.kernel_below_meet = kernel_set(h).is_subset_of(h.source().down(floor));
  return out;
}

Verdict check_density(const LatticeHom& h, const ElementClass& c) {
  const DensitySides s = density_sides(h, c);
  const std::string note = std::string("dense=") + (s.dense ? "true" : "false") +
                           " kernel_below_meet=" + (s.kernel_below_meet ? "true" : "false");
  if (s.dense == s.kernel_below_meet) return Verdict::hold(note);
  return Verdict::counterexample({{kernel_element(h)}, {kernel_set(h)}, note});
}

SubspaceDensity subspace_density(const MultLattice& L) {
  const LowerSpace irr(L, classify(L, ClassTag::IrrStrong), "irr+");
  auto dense = [&](ClassTag tag) {
    return irr.closure(classify(L, tag) & irr.points()) == irr.points();
  };
  SubspaceDensity out;
  out.max_dense = dense(ClassTag::Max);
  out.spec_dense = dense(ClassTag::Spec);
  out.jacobson_is_s_radical = jacobson(L) == s_radical(L);
  out.p_radical_is_s_radical = p_radical(L) == s_radical(L);
  return out;
}

Verdict check_subspace_density(const MultLattice& L) {
  const SubspaceDensity d = subspace_density(L);
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::string note = std::string("max_dense=") + b(d.max_dense) + " spec_dense=" + b(d.spec_dense) +
                     " jac=s_rad=" + b(d.jacobson_is_s_radical) + " p_rad=s_rad=" + b(d.p_radical_is_s_radical);
  if (d.max_pairing() && d.spec_pairing()) return Verdict::hold(note);
  return Verdict::counterexample({{jacobson(L), p_radical(L), s_radical(L)}, {}, note});
}

}  // namespace latkit
