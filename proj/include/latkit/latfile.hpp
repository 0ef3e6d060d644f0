#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/lower_space.hpp"

namespace latkit {

enum class ParseErrorKind { SyntaxError, DimensionMismatch, IndexOutOfRange, DuplicateSection };

const char* to_string(ParseErrorKind kind);

/// Every rejection carries a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t col, std::string expected);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t col_;
  std::string expected_;
};

using MapPairs = std::vector<std::pair<Index, Index>>;

struct SigmaDecl {
  std::string name;
  std::vector<Index> members;

  friend bool operator==(const SigmaDecl&, const SigmaDecl&) = default;
};

struct HomBlock {
  std::string source;
  std::string target;
  MapPairs pairs;

  friend bool operator==(const HomBlock&, const HomBlock&) = default;
};

/// Sections of a .lat file. The order rows and the multiplication table are
/// kept unvalidated; tables() hands them to validate_lattice.
struct LatFile {
  std::size_t n = 0;
  std::vector<std::string> names;  // empty when the file has no NAMES line
  std::vector<std::uint8_t> leq;   // n*n
  std::vector<Index> mul;          // n*n
  std::vector<SigmaDecl> sigmas;
  std::vector<HomBlock> homs;

  LatticeTables tables(std::string label = {}) const;
  const SigmaDecl* find_sigma(std::string_view name) const;
};

LatFile parse_latfile(std::string_view text);
/// parse_latfile followed by validate_lattice.
MultLattice load_lattice(const LatFile& file, std::string label = {});

/// Canonical text: N, NAMES (only when some name differs from its index),
/// ORDER, MUL, SIGMA lines, HOM blocks; single spaces, no comments.
std::string serialize_latfile(const MultLattice& L, const std::vector<SigmaDecl>& sigmas = {},
                              const std::vector<HomBlock>& homs = {});
std::string serialize_latfile(const LatFile& file);

/// Lines "i -> j"; comments and blank lines as in .lat files. A source index
/// given twice is a DuplicateSection error.
MapPairs parse_homfile(std::string_view text);
/// Expands pairs into a total table for a source of the given size. Throws
/// std::invalid_argument when a source index is missing or out of range.
std::vector<Index> map_table(const MapPairs& pairs, std::size_t source_size);

/// Hasse diagram, bottom first: one node per element, an edge from each lower
/// cover to the element above it, and one rank=same group per rank.
std::string emit_dot(const MultLattice& L);
/// Specialization order of the points (p below q when p lies in the closure
/// of q), drawn by its covers, with the closed sets listed in the graph label.
std::string emit_dot(const LowerSpace& S);

}  // namespace latkit
