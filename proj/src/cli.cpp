#include "latkit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "latkit/builders.hpp"
#include "latkit/classes.hpp"
#include "latkit/harness.hpp"
#include "latkit/hom.hpp"
#include "latkit/latfile.hpp"
#include "latkit/lower_space.hpp"

namespace latkit {

namespace {

namespace fs = std::filesystem;

// Usage problems that surface after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Loaded {
  LatFile file;
  MultLattice lattice;
};

Loaded load(const fs::path& path) {
  const std::string text = read_file(path);
  LatFile file;
  try {
    file = parse_latfile(text);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), e.col(), e.expected() + " in " + path.string());
  }
  MultLattice L = load_lattice(file, path.stem().string());
  return {std::move(file), std::move(L)};
}

ElementClass resolve_class(const std::string& token, const LatFile& file) {
  auto c = parse_class_token(token);
  if (!c) throw UsageError("unknown class '" + token + "'");
  if (c->tag == ClassTag::Custom) {
    const SigmaDecl* decl = file.find_sigma(c->custom_name);
    if (decl == nullptr) throw UsageError("no SIGMA " + c->custom_name + " in the file");
    c->custom = ElementSet::from_indices(decl->members);
  }
  return *c;
}

void print_members(std::ostream& out, const MultLattice& L, const ElementSet& s) {
  s.for_each([&](Index i) { out << i << ' ' << L.name(i) << '\n'; });
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Loaded f = load(path);
  const MultLattice& L = f.lattice;
  out << "valid: " << L.size() << " elements, bot " << L.name(L.bot()) << ", top " << L.name(L.top()) << '\n';
  return 0;
}

int cmd_classify(const std::string& path, const std::string& tag, std::ostream& out) {
  const Loaded f = load(path);
  const ElementSet members = classify(f.lattice, resolve_class(tag, f.file));
  out << "class " << tag << ": " << members.count() << " members\n";
  print_members(out, f.lattice, members);
  return 0;
}

int cmd_topology(const std::string& path, const std::string& tag, std::ostream& out) {
  const Loaded f = load(path);
  const MultLattice& L = f.lattice;
  const ElementClass c = resolve_class(tag, f.file);
  const LowerSpace S(L, classify(L, c), tag);
  out << "sigma: " << S.points().count() << ' ' << format_set(L, S.points()) << '\n';
  out << "subbasis: " << S.subbasis().size() << '\n';
  out << "closed_sets: " << S.closed_sets().size() << '\n';
  auto line = [&](const char* name, const Verdict& v) { out << name << ": " << describe(L, v) << '\n'; };
  line("closed_topology", forms_closed_topology(S));
  line("hkp", hkp_property(S));
  line("T0", is_T0(S));
  line("T1", is_T1(S));
  line("sober", is_sober(S));
  line("sober_criterion", sober_criterion(S));
  line("compact", is_compact_space(S));
  line("connected", is_connected(S));
  line("strongly_disconnects", strongly_disconnects(S));
  line("strongly_disconnects_subfamily", strongly_disconnects(S, SplitReading::Subfamily));
  line("spectral", is_spectral(S));
  line("v_radical", check_v_radical(S));
  line("hrx", check_hrx(S));
  line("lfc", check_lfc(S));
  return 0;
}

std::vector<TheoremId> parse_theorem_list(const std::string& text) {
  if (text == "all") return all_theorems();
  std::vector<TheoremId> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    auto id = parse_theorem(token);
    if (!id) throw UsageError("UnknownTheorem: " + token);
    out.push_back(*id);
  }
  if (out.empty()) throw UsageError("no theorems selected");
  return out;
}

int cmd_check(const std::string& path, const std::string& corpus_text, const std::string& theorems, unsigned threads,
              std::size_t cap, std::ostream& out) {
  RunOptions options;
  options.theorems = parse_theorem_list(theorems);
  options.threads = threads;
  Report report;
  if (!corpus_text.empty()) {
    report = run_corpus(CorpusSpec::parse(corpus_text), options);
  } else {
    const Loaded f = load(path);
    Corpus corpus;
    corpus.lattices.push_back(f.lattice);
    for (ClassTag t : sweep_tags()) options.classes.push_back(ElementClass::of(t));
    for (const SigmaDecl& s : f.file.sigmas)
      options.classes.push_back(ElementClass::custom_set(s.name, ElementSet::from_indices(s.members)));
    const fs::path dir = fs::path(path).parent_path();
    for (const HomBlock& h : f.file.homs) {
      auto resolve = [&](const std::string& ref) { return ref == "." ? f : load(dir / ref); };
      const Loaded src = resolve(h.source);
      const Loaded dst = resolve(h.target);
      corpus.homs.push_back(validate_hom(src.lattice, dst.lattice, map_table(h.pairs, src.lattice.size())));
    }
    report = run(corpus, options, fs::path(path).filename().string());
  }
  out << report.serialize(cap);
  return report.exit_code();
}

int cmd_hom(const std::string& src_path, const std::string& dst_path, const std::string& map_path,
            const std::string& tag, const std::string& what, std::ostream& out) {
  const Loaded src = load(src_path);
  const Loaded dst = load(dst_path);
  const MapPairs pairs = parse_homfile(read_file(map_path));
  std::vector<Index> table;
  try {
    table = map_table(pairs, src.lattice.size());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const LatticeHom h = validate_hom(src.lattice, dst.lattice, std::move(table));
  const ElementClass c = resolve_class(tag, src.file);
  const MultLattice& S = h.source();
  out << "hom: valid\n";
  out << "kernel_set: " << format_set(S, kernel_set(h)) << '\n';
  out << "kernel_element: " << S.name(kernel_element(h)) << '\n';
  out << "surjective: " << (is_surjective(h) ? "true" : "false") << '\n';
  const Verdict property = has_contraction_property(h, c);
  out << "contraction_property: " << describe(S, property) << '\n';
  if (!property.holds()) return 1;
  const InducedMap f = induced_map(h, c);
  out << "induced:";
  f.domain.for_each([&](Index y) { out << ' ' << h.target().name(y) << "->" << S.name(f.at(y)); });
  out << '\n';
  bool failed = false;
  auto report = [&](const char* name, const Verdict& v) {
    out << name << ": " << describe(S, v) << '\n';
    failed = failed || v.is_counterexample();
  };
  if (what == "continuity" || what == "all") report("continuity", check_continuity(h, c));
  if (what == "embedding" || what == "all") {
    if (is_surjective(h)) {
      report("embedding", check_embedding(h, c));
    } else if (what == "embedding") {
      throw HomError(HomErrorKind::NotSurjective, "NotSurjective: some target element is missed");
    } else {
      out << "embedding: skipped (not surjective)\n";
    }
  }
  if (what == "density" || what == "all") report("density", check_density(h, c));
  return failed ? 1 : 0;
}

int cmd_enumerate(unsigned max_size, const std::string& out_dir, std::ostream& out) {
  std::vector<std::size_t> per_size(max_size + 1, 0);
  std::size_t total = 0;
  if (!out_dir.empty()) fs::create_directories(out_dir);
  enumerate_lattices(max_size, [&](const MultLattice& L) {
    ++per_size[L.size()];
    ++total;
    if (!out_dir.empty()) {
      std::ofstream file(fs::path(out_dir) / (L.label() + ".lat"), std::ios::binary);
      if (!file) throw UsageError("cannot write into " + out_dir);
      file << serialize_latfile(L);
    } else {
      out << L.label() << '\n';
    }
  });
  for (unsigned n = 1; n <= max_size; ++n) out << "size " << n << ": " << per_size[n] << '\n';
  out << "total: " << total << '\n';
  return 0;
}

int cmd_dot(const std::string& path, const std::string& tag, std::ostream& out) {
  const Loaded f = load(path);
  if (tag.empty()) {
    out << emit_dot(f.lattice);
  } else {
    out << emit_dot(LowerSpace(f.lattice, classify(f.lattice, resolve_class(tag, f.file)), tag));
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite multiplicative lattices and their lower spaces", "latkit"};
  app.require_subcommand(1);

  std::string file, src, dst, homfile, tag, corpus, theorems = "all", what = "all", out_dir;
  unsigned max_size = 0, threads = 0;
  std::size_t cap = 3;

  auto* validate = app.add_subcommand("validate", "Check that a .lat file describes a multiplicative lattice");
  validate->add_option("file", file, "Lattice file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "List the members of an element class");
  classify_cmd->add_option("file", file, "Lattice file")->required();
  classify_cmd->add_option("--class", tag, "prop, spec, min-prime, max, irr, irr+, irr++, rad, prim, nil, idem, "
                                           "compact or custom:<sigma name>")
      ->required();

  auto* topology = app.add_subcommand("topology", "Describe the lower space of a class");
  topology->add_option("file", file, "Lattice file")->required();
  topology->add_option("--sigma", tag, "Element class")->required();

  auto* check = app.add_subcommand("check", "Run theorem checks on a file or a generated corpus");
  check->add_option("file", file, "Lattice file");
  check->add_option("--corpus", corpus, "default, none, or e.g. divisor=60,powerset=3,chain=8,products,enumerate=5,homs");
  check->add_option("--theorems", theorems, "all or a comma list such as hkt,zariski_t1");
  check->add_option("--threads", threads, "Worker threads (0 = one per core)");
  check->add_option("--cap", cap, "Counterexamples printed per theorem and reading");

  auto* hom = app.add_subcommand("hom", "Check a homomorphism between two lattice files");
  hom->add_option("source", src, "Source lattice file")->required();
  hom->add_option("target", dst, "Target lattice file")->required();
  hom->add_option("map", homfile, "Map file with lines 'i -> j'")->required();
  hom->add_option("--class", tag, "Element class")->required();
  hom->add_option("--check", what, "continuity, embedding, density or all")
      ->check(CLI::IsMember({"continuity", "embedding", "density", "all"}));

  auto* enumerate = app.add_subcommand("enumerate", "List multiplicative lattices up to isomorphism");
  enumerate->add_option("--max-size", max_size, "Largest carrier size")->required();
  enumerate->add_option("--out", out_dir, "Write one .lat file per lattice into this directory");

  auto* dot = app.add_subcommand("dot", "Print a DOT diagram of the lattice or of a lower space");
  dot->add_option("file", file, "Lattice file")->required();
  dot->add_option("--sigma", tag, "Draw the lower space of this class instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*classify_cmd) return cmd_classify(file, tag, out);
    if (*topology) return cmd_topology(file, tag, out);
    if (*check) {
      if (file.empty() == corpus.empty()) throw UsageError("check needs exactly one of <file> and --corpus");
      return cmd_check(file, corpus, theorems, threads, cap, out);
    }
    if (*hom) return cmd_hom(src, dst, homfile, tag, what, out);
    if (*enumerate) return cmd_enumerate(max_size, out_dir, out);
    if (*dot) return cmd_dot(file, tag, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const HarnessError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == LatticeErrorKind::BoundExceeded ? 2 : 1;
  } catch (const HomViolation& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const HomError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const TopologyError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace latkit
