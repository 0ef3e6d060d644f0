#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latkit/classes.hpp"
#include "latkit/hom.hpp"
#include "latkit/lattice.hpp"
#include "latkit/verdict.hpp"

namespace latkit {

enum class TheoremId {
  BIP1, BIP2, BIP3, BIP4,
  HKT, HRRAD,
  HRX1, HRX2, HRX3, HRX4, HRX5,
  LFC, CSB, CQC,
  T0A, IRRC, SPIIR, ZARISKI_T1,
  SOB, QSS, TSQS,
  PR1, CONN,
  CONMAP1, CONMAP2, CONMAP3,
  DENSITY_MAX, DENSITY_SPEC,
};

const std::vector<TheoremId>& all_theorems();
std::string to_string(TheoremId id);
/// Case-insensitive: "hkt", "zariski_t1", "ZARISKI_T1".
std::optional<TheoremId> parse_theorem(std::string_view token);

enum class TheoremScope {
  Lattice,  // one evaluation per lattice; the class is ignored
  Sigma,    // one evaluation per (lattice, class)
  Hom,      // one evaluation per (homomorphism, class)
};
TheoremScope scope_of(TheoremId id);

/// Theorems whose literal statement disagrees with finite examples. Their
/// verdicts are reported, alongside alternative readings, but never fail a run.
bool is_tracked(TheoremId id);

class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Reading {
  std::string name;
  Verdict verdict;
};

/// The verdict for the statement as the library reads it, plus any other
/// readings that are reported beside it.
struct Evaluation {
  Verdict primary;
  std::vector<Reading> readings;
};

/// Hypotheses are evaluated first (those automatic on finite lattices are
/// still computed); HypothesisNotMet when one fails. Hom-scoped ids throw
/// HarnessError here.
Evaluation evaluate(const MultLattice& L, const ElementClass& sigma, TheoremId id);
Evaluation evaluate(const LatticeHom& h, const ElementClass& sigma, TheoremId id);
inline Verdict check(const MultLattice& L, const ElementClass& sigma, TheoremId id) {
  return evaluate(L, sigma, id).primary;
}
inline Verdict check(const LatticeHom& h, const ElementClass& sigma, TheoremId id) {
  return evaluate(h, sigma, id).primary;
}

/// Which builders feed the corpus. Text form: "default", "none" (or empty),
/// or a comma list of divisor=N, powerset=K, chain=N, products, enumerate=N,
/// homs.
struct CorpusSpec {
  unsigned divisor_max = 0;
  std::optional<unsigned> powerset_max;
  unsigned chain_max = 0;
  bool products = false;
  unsigned enumerate_max = 0;
  bool homs = false;

  static CorpusSpec default_spec();
  /// Throws HarnessError for malformed text and LatticeError(BoundExceeded)
  /// past the builder limits.
  static CorpusSpec parse(std::string_view text);
  std::string to_string() const;
};

inline constexpr unsigned kMaxCorpusDivisor = 5040;
inline constexpr unsigned kMaxCorpusPowerset = 4;
inline constexpr unsigned kMaxCorpusChain = 32;

struct Corpus {
  std::vector<MultLattice> lattices;
  std::vector<LatticeHom> homs;
};

/// Lattices in builder order: divisor, powerset, chains (meet then
/// Lukasiewicz, by size), products, enumerated. Homs: identities on the
/// divisor quantales, the gcd quotients D(m) -> D(n) for n | m, and the two
/// projections of each product.
Corpus build_corpus(const CorpusSpec& spec);

struct Tally {
  std::size_t holds = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t counterexamples = 0;

  void add(Status s);
  Tally& operator+=(const Tally& o);
  friend bool operator==(const Tally&, const Tally&) = default;
};

struct CounterexampleRecord {
  TheoremId id;
  std::string reading;  // empty for the primary statement
  std::string instance; // "D12 sigma=spec" or "D12->D4 sigma=spec"
  std::string sigma;
  std::string witness;
  std::string payload;  // serialized lattice(s) and map
};

struct TheoremTally {
  Tally primary;
  std::map<std::string, Tally> readings;
};

struct Report {
  std::string corpus;
  std::size_t lattices = 0;
  std::size_t homs = 0;
  std::map<TheoremId, TheoremTally> tallies;
  std::vector<CounterexampleRecord> counterexamples;

  /// Counterexamples to the primary statement of an untracked theorem.
  bool failed() const;
  int exit_code() const { return failed() ? 1 : 0; }
  /// Line-oriented text; at most cap counterexample blocks per theorem and
  /// reading.
  std::string serialize(std::size_t cap = 3) const;
};

struct RunOptions {
  std::vector<TheoremId> theorems = all_theorems();
  std::vector<ElementClass> classes;  // empty: the nine sweep classes
  unsigned threads = 0;               // 0: hardware concurrency
};

Report run(const Corpus& corpus, const RunOptions& options, std::string corpus_label);
Report run_corpus(const CorpusSpec& spec, const RunOptions& options = {});

}  // namespace latkit
