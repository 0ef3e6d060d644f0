#include "latkit/latfile.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

namespace latkit {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::SyntaxError: return "SyntaxError";
    case ParseErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ParseErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ParseErrorKind::DuplicateSection: return "DuplicateSection";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t col, std::string expected)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + to_string(kind) +
                         ": expected " + expected),
      kind_(kind),
      line_(line),
      col_(col),
      expected_(std::move(expected)) {}

namespace {

// Elements are stored in fixed-width bitsets; larger files are rejected
// before anything is allocated for them.
constexpr std::size_t kMaxElements = ElementSet::kCapacity;

struct Token {
  std::string_view text;
  std::size_t col;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::size_t end_col;  // column just past the last non-comment character
  std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++number;
    std::string_view raw = text.substr(start, stop - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, raw.size() + 1, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      const std::size_t begin = i;
      while (i < raw.size() && !is_space(raw[i])) ++i;
      if (i > begin) line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (stop == text.size()) break;
    start = stop + 1;
  }
  return out;
}

bool is_keyword(std::string_view t) {
  return t == "N" || t == "NAMES" || t == "ORDER" || t == "MUL" || t == "SIGMA" || t == "HOM";
}

[[noreturn]] void fail(ParseErrorKind kind, std::size_t line, std::size_t col, std::string expected) {
  throw ParseError(kind, line, col, std::move(expected));
}

std::optional<std::size_t> to_number(std::string_view t) {
  if (t.empty() || t.size() > 9) return std::nullopt;
  for (char c : t)
    if (c < '0' || c > '9') return std::nullopt;
  std::size_t value = 0;
  std::from_chars(t.data(), t.data() + t.size(), value);
  return value;
}

std::size_t number_or_fail(const Line& line, const Token& tok, const std::string& what) {
  auto v = to_number(tok.text);
  if (!v) fail(ParseErrorKind::SyntaxError, line.number, tok.col, what);
  return *v;
}

Index index_or_fail(const Line& line, const Token& tok, std::size_t n) {
  const std::size_t v = number_or_fail(line, tok, "element index");
  if (v >= n) fail(ParseErrorKind::IndexOutOfRange, line.number, tok.col, "index below " + std::to_string(n));
  return v;
}

void expect_alone(const Line& line, const std::string& keyword) {
  if (line.tokens.size() > 1) {
    fail(ParseErrorKind::SyntaxError, line.number, line.tokens[1].col, "end of line after " + keyword);
  }
}

std::pair<Index, Index> parse_pair(const Line& line) {
  const auto& t = line.tokens;
  if (t.size() < 2 || t[1].text != "->") {
    fail(ParseErrorKind::SyntaxError, line.number, t.size() < 2 ? line.end_col : t[1].col, "'->'");
  }
  if (t.size() < 3) fail(ParseErrorKind::SyntaxError, line.number, line.end_col, "target index");
  if (t.size() > 3) fail(ParseErrorKind::SyntaxError, line.number, t[3].col, "end of line");
  return {number_or_fail(line, t[0], "source index"), number_or_fail(line, t[2], "target index")};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(split_lines(text)), eof_line_(count_lines(text)) {}

  LatFile run() {
    if (lines_.empty()) fail(ParseErrorKind::SyntaxError, eof_line_, 1, "'N <count>'");
    parse_count(lines_[0]);
    pos_ = 1;
    bool have_order = false, have_mul = false;
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_++];
      const std::string_view kw = line.tokens[0].text;
      if (kw == "N") {
        fail(ParseErrorKind::DuplicateSection, line.number, line.tokens[0].col, "a single N line");
      } else if (kw == "NAMES") {
        if (!file_.names.empty()) fail(ParseErrorKind::DuplicateSection, line.number, line.tokens[0].col, "a single NAMES line");
        parse_names(line);
      } else if (kw == "ORDER") {
        if (have_order) fail(ParseErrorKind::DuplicateSection, line.number, line.tokens[0].col, "a single ORDER section");
        expect_alone(line, "ORDER");
        parse_order(line);
        have_order = true;
      } else if (kw == "MUL") {
        if (have_mul) fail(ParseErrorKind::DuplicateSection, line.number, line.tokens[0].col, "a single MUL section");
        expect_alone(line, "MUL");
        parse_mul(line);
        have_mul = true;
      } else if (kw == "SIGMA") {
        parse_sigma(line);
      } else if (kw == "HOM") {
        expect_alone(line, "HOM");
        parse_hom(line);
      } else {
        fail(ParseErrorKind::SyntaxError, line.number, line.tokens[0].col, "section keyword");
      }
    }
    if (!have_order) fail(ParseErrorKind::SyntaxError, eof_line_, 1, "ORDER section");
    if (!have_mul) fail(ParseErrorKind::SyntaxError, eof_line_, 1, "MUL section");
    return std::move(file_);
  }

 private:
  static std::size_t count_lines(std::string_view text) {
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  }

  void parse_count(const Line& line) {
    const auto& t = line.tokens;
    if (t[0].text != "N") fail(ParseErrorKind::SyntaxError, line.number, t[0].col, "'N <count>'");
    if (t.size() < 2) fail(ParseErrorKind::SyntaxError, line.number, line.end_col, "element count");
    if (t.size() > 2) fail(ParseErrorKind::SyntaxError, line.number, t[2].col, "end of line");
    const auto n = to_number(t[1].text);
    if (!n || *n == 0 || *n > kMaxElements) {
      fail(ParseErrorKind::SyntaxError, line.number, t[1].col,
           "element count between 1 and " + std::to_string(kMaxElements));
    }
    file_.n = *n;
  }

  void parse_names(const Line& line) {
    const std::size_t n = file_.n;
    const auto& t = line.tokens;
    if (t.size() - 1 != n) {
      const std::size_t col = t.size() - 1 > n ? t[n + 1].col : line.end_col;
      fail(ParseErrorKind::DimensionMismatch, line.number, col, std::to_string(n) + " names");
    }
    for (std::size_t i = 1; i < t.size(); ++i) file_.names.emplace_back(t[i].text);
  }

  // Next line of a fixed-size block, or a DimensionMismatch at the point the
  // block ran out.
  const Line& block_row(const Line& header, std::size_t row, std::size_t rows) {
    if (pos_ >= lines_.size() || is_keyword(lines_[pos_].tokens[0].text)) {
      const std::size_t at = pos_ < lines_.size() ? lines_[pos_].number : eof_line_;
      fail(ParseErrorKind::DimensionMismatch, at, 1,
           std::to_string(rows) + " rows after line " + std::to_string(header.number) + ", found " +
               std::to_string(row));
    }
    return lines_[pos_++];
  }

  void parse_order(const Line& header) {
    const std::size_t n = file_.n;
    file_.leq.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Line& line = block_row(header, i, n);
      if (line.tokens.size() > 1) {
        fail(ParseErrorKind::SyntaxError, line.number, line.tokens[1].col - 1, "'0' or '1'");
      }
      const Token& row = line.tokens[0];
      for (std::size_t j = 0; j < row.text.size(); ++j) {
        const char c = row.text[j];
        if (c != '0' && c != '1') fail(ParseErrorKind::SyntaxError, line.number, row.col + j, "'0' or '1'");
        if (j >= n) {
          fail(ParseErrorKind::DimensionMismatch, line.number, row.col + j, std::to_string(n) + " characters");
        }
        file_.leq[i * n + j] = c == '1' ? 1 : 0;
      }
      if (row.text.size() < n) {
        fail(ParseErrorKind::DimensionMismatch, line.number, row.col + row.text.size(),
             std::to_string(n) + " characters");
      }
    }
  }

  void parse_mul(const Line& header) {
    const std::size_t n = file_.n;
    file_.mul.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Line& line = block_row(header, i, n);
      const auto& t = line.tokens;
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j >= n) fail(ParseErrorKind::DimensionMismatch, line.number, t[j].col, std::to_string(n) + " entries");
        file_.mul[i * n + j] = index_or_fail(line, t[j], n);
      }
      if (t.size() < n) {
        fail(ParseErrorKind::DimensionMismatch, line.number, line.end_col, std::to_string(n) + " entries");
      }
    }
  }

  void parse_sigma(const Line& line) {
    const auto& t = line.tokens;
    if (t.size() < 2 || t[1].text.size() < 2 || t[1].text.back() != ':') {
      fail(ParseErrorKind::SyntaxError, line.number, t.size() < 2 ? line.end_col : t[1].col, "'<name>:'");
    }
    SigmaDecl decl{std::string(t[1].text.substr(0, t[1].text.size() - 1)), {}};
    if (file_.find_sigma(decl.name) != nullptr) {
      fail(ParseErrorKind::DuplicateSection, line.number, t[1].col, "a single SIGMA " + decl.name);
    }
    for (std::size_t i = 2; i < t.size(); ++i) decl.members.push_back(index_or_fail(line, t[i], file_.n));
    file_.sigmas.push_back(std::move(decl));
  }

  void parse_hom(const Line& header) {
    HomBlock block;
    auto reference = [&](std::string_view keyword) {
      if (pos_ >= lines_.size()) fail(ParseErrorKind::SyntaxError, eof_line_, 1, std::string(keyword) + " line");
      const Line& line = lines_[pos_++];
      const auto& t = line.tokens;
      if (t[0].text != keyword) fail(ParseErrorKind::SyntaxError, line.number, t[0].col, std::string(keyword));
      if (t.size() < 2) fail(ParseErrorKind::SyntaxError, line.number, line.end_col, "file reference");
      if (t.size() > 2) fail(ParseErrorKind::SyntaxError, line.number, t[2].col, "end of line");
      return std::string(t[1].text);
    };
    block.source = reference("SOURCE");
    block.target = reference("TARGET");
    for (;;) {
      if (pos_ >= lines_.size()) {
        fail(ParseErrorKind::SyntaxError, eof_line_, 1, "END for HOM at line " + std::to_string(header.number));
      }
      const Line& line = lines_[pos_++];
      if (line.tokens[0].text == "END") {
        expect_alone(line, "END");
        break;
      }
      block.pairs.push_back(parse_pair(line));
    }
    file_.homs.push_back(std::move(block));
  }

  std::vector<Line> lines_;
  std::size_t eof_line_;
  std::size_t pos_ = 0;
  LatFile file_;
};

std::string join_indices(const std::vector<Index>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

LatticeTables LatFile::tables(std::string label) const {
  LatticeTables t;
  t.n = n;
  t.leq = leq;
  t.mul = mul;
  t.names = names;
  t.label = std::move(label);
  return t;
}

const SigmaDecl* LatFile::find_sigma(std::string_view name) const {
  for (const auto& s : sigmas)
    if (s.name == name) return &s;
  return nullptr;
}

LatFile parse_latfile(std::string_view text) { return Parser(text).run(); }

MultLattice load_lattice(const LatFile& file, std::string label) {
  return validate_lattice(file.tables(std::move(label)));
}

std::string serialize_latfile(const LatFile& file) {
  const std::size_t n = file.n;
  std::string out = "N " + std::to_string(n) + "\n";
  if (!file.names.empty()) {
    out += "NAMES";
    for (const auto& name : file.names) out += ' ' + name;
    out += '\n';
  }
  out += "ORDER\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out += file.leq[i * n + j] ? '1' : '0';
    out += '\n';
  }
  out += "MUL\n";
  for (std::size_t i = 0; i < n; ++i) {
    out += join_indices(std::vector<Index>(file.mul.begin() + i * n, file.mul.begin() + (i + 1) * n));
    out += '\n';
  }
  for (const auto& s : file.sigmas) {
    out += "SIGMA " + s.name + ":";
    if (!s.members.empty()) out += ' ' + join_indices(s.members);
    out += '\n';
  }
  for (const auto& h : file.homs) {
    out += "HOM\nSOURCE " + h.source + "\nTARGET " + h.target + "\n";
    for (auto [i, j] : h.pairs) out += std::to_string(i) + " -> " + std::to_string(j) + "\n";
    out += "END\n";
  }
  return out;
}

std::string serialize_latfile(const MultLattice& L, const std::vector<SigmaDecl>& sigmas,
                              const std::vector<HomBlock>& homs) {
  LatticeTables t = L.tables();
  LatFile file;
  file.n = t.n;
  file.leq = std::move(t.leq);
  file.mul = std::move(t.mul);
  bool default_names = true;
  for (Index i = 0; i < L.size(); ++i) default_names = default_names && L.name(i) == std::to_string(i);
  if (!default_names) file.names = L.names();
  file.sigmas = sigmas;
  file.homs = homs;
  return serialize_latfile(file);
}

MapPairs parse_homfile(std::string_view text) {
  MapPairs out;
  for (const Line& line : split_lines(text)) {
    const auto pair = parse_pair(line);
    for (const auto& [i, j] : out) {
      if (i == pair.first) {
        fail(ParseErrorKind::DuplicateSection, line.number, line.tokens[0].col,
             "one line for source " + std::to_string(i));
      }
    }
    out.push_back(pair);
  }
  return out;
}

std::vector<Index> map_table(const MapPairs& pairs, std::size_t source_size) {
  std::vector<std::optional<Index>> table(source_size);
  for (auto [i, j] : pairs) {
    if (i >= source_size) throw std::invalid_argument("map source " + std::to_string(i) + " is out of range");
    table[i] = j;
  }
  std::vector<Index> out(source_size);
  for (std::size_t i = 0; i < source_size; ++i) {
    if (!table[i]) throw std::invalid_argument("map has no image for source " + std::to_string(i));
    out[i] = *table[i];
  }
  return out;
}

std::string emit_dot(const MultLattice& L) {
  const std::string title = L.label().empty() ? "lattice" : L.label();
  std::string out = "digraph " + quoted(title) + " {\n  rankdir=BT;\n";
  for (Index x = 0; x < L.size(); ++x) out += "  n" + std::to_string(x) + " [label=" + quoted(L.name(x)) + "];\n";
  for (Index x = 0; x < L.size(); ++x)
    for (Index c : lower_covers(L, x)) out += "  n" + std::to_string(c) + " -> n" + std::to_string(x) + ";\n";
  std::vector<std::vector<Index>> ranks;
  for (Index x = 0; x < L.size(); ++x) {
    const std::size_t r = rank_of(L, x);
    if (ranks.size() <= r) ranks.resize(r + 1);
    ranks[r].push_back(x);
  }
  for (const auto& group : ranks) {
    out += "  { rank=same;";
    for (Index x : group) out += " n" + std::to_string(x) + ";";
    out += " }\n";
  }
  return out + "}\n";
}

std::string emit_dot(const LowerSpace& S) {
  const MultLattice& L = S.lattice();
  std::string title = L.label().empty() ? "lattice" : L.label();
  if (!S.label().empty()) title += " " + S.label();
  const std::vector<Index> pts = S.points().indices();
  std::vector<ElementSet> closure;
  for (Index p : pts) closure.push_back(S.point_closure(p));
  // below(a, b): a lies in the closure of b but not conversely.
  auto below = [&](std::size_t a, std::size_t b) {
    return closure[b].contains(pts[a]) && !closure[a].contains(pts[b]);
  };
  std::string out = "digraph " + quoted(title) + " {\n  rankdir=BT;\n";
  constexpr std::size_t kListedClosedSets = 64;
  const auto& family = S.closed_sets();
  std::string listing = "closed sets (" + std::to_string(family.size()) + "):";
  for (std::size_t i = 0; i < family.size() && i < kListedClosedSets; ++i) listing += " " + format_set(L, family[i]);
  if (family.size() > kListedClosedSets) listing += " ...";
  out += "  label=" + quoted(listing) + ";\n";
  for (Index p : pts) out += "  n" + std::to_string(p) + " [label=" + quoted(L.name(p)) + "];\n";
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (!below(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < pts.size() && cover; ++c) cover = !(below(a, c) && below(c, b));
      if (cover) out += "  n" + std::to_string(pts[a]) + " -> n" + std::to_string(pts[b]) + ";\n";
    }
  }
  return out + "}\n";
}

}  // namespace latkit
