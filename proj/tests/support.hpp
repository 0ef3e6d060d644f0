#pragma once

#include <set>
#include <vector>

#include "latkit/builders.hpp"
#include "latkit/harness.hpp"
#include "latkit/lattice.hpp"
#include "oracles.hpp"

namespace testsupport {

inline oracle::Raw to_raw(const latkit::LatticeTables& t) {
  oracle::Raw r;
  r.n = t.n;
  r.le.assign(t.n, std::vector<bool>(t.n, false));
  r.mul.assign(t.n, std::vector<std::size_t>(t.n, 0));
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      r.le[i][j] = t.leq[i * t.n + j] != 0;
      r.mul[i][j] = t.mul[i * t.n + j];
    }
  return r;
}

inline oracle::Raw to_raw(const latkit::MultLattice& L) { return to_raw(L.tables()); }

inline std::set<std::size_t> to_std(const latkit::ElementSet& s) {
  const auto v = s.indices();
  return {v.begin(), v.end()};
}

inline latkit::ElementSet from_std(const std::set<std::size_t>& s) {
  latkit::ElementSet out;
  for (auto i : s) out.insert(i);
  return out;
}

/// The default corpus, built once per process.
inline const latkit::Corpus& default_corpus() {
  static const auto corpus = latkit::build_corpus(latkit::CorpusSpec::default_spec());
  return corpus;
}

inline const std::vector<latkit::MultLattice>& corpus_lattices() { return default_corpus().lattices; }
inline const std::vector<latkit::LatticeHom>& corpus_homs() { return default_corpus().homs; }

/// (d) in D(n).
inline latkit::Index ideal(unsigned n, unsigned d) { return latkit::divisor_index(n, d); }

}  // namespace testsupport
