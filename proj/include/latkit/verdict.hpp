#pragma once

#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

enum class Status { Holds, HypothesisNotMet, Counterexample };

const char* to_string(Status status);

/// Evidence attached to a verdict: the elements and point sets involved and a
/// short description of what they show.
struct Witness {
  std::vector<Index> elements;
  std::vector<ElementSet> sets;
  std::string note;

  bool empty() const { return elements.empty() && sets.empty() && note.empty(); }
};

struct Verdict {
  Status status = Status::Holds;
  Witness witness;

  bool holds() const { return status == Status::Holds; }
  bool is_counterexample() const { return status == Status::Counterexample; }

  static Verdict hold(std::string note = {}) { return {Status::Holds, {{}, {}, std::move(note)}}; }
  static Verdict hypothesis_not_met(std::string note) {
    return {Status::HypothesisNotMet, {{}, {}, std::move(note)}};
  }
  static Verdict counterexample(Witness w) { return {Status::Counterexample, std::move(w)}; }
};

/// "{a,b,c}" using the lattice's element names.
std::string format_set(const MultLattice& L, const ElementSet& s);
/// One line: status, note, elements and sets rendered with element names.
std::string describe(const MultLattice& L, const Verdict& v);

}  // namespace latkit
