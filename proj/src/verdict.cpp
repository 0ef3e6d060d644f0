#include "latkit/verdict.hpp"

namespace latkit {

const char* to_string(Status status) {
  switch (status) {
    case Status::Holds: return "Holds";
    case Status::HypothesisNotMet: return "HypothesisNotMet";
    case Status::Counterexample: return "Counterexample";
  }
  return "?";
}

std::string format_set(const MultLattice& L, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Index i) {
    if (!first) out += ',';
    first = false;
    out += i < L.size() ? L.name(i) : std::to_string(i);
  });
  out += '}';
  return out;
}

std::string describe(const MultLattice& L, const Verdict& v) {
  std::string out = to_string(v.status);
  const Witness& w = v.witness;
  if (!w.note.empty()) out += " (" + w.note + ")";
  if (!w.elements.empty()) {
    out += " elements=";
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
      if (i) out += ',';
      out += w.elements[i] < L.size() ? L.name(w.elements[i]) : std::to_string(w.elements[i]);
    }
  }
  if (!w.sets.empty()) {
    out += " sets=";
    for (std::size_t i = 0; i < w.sets.size(); ++i) {
      if (i) out += ' ';
      out += format_set(L, w.sets[i]);
    }
  }
  return out;
}

}  // namespace latkit
