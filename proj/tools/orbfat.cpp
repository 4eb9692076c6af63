// orbfat: build and verify cyclic fatgraphs over one-cusped orbifold groups.
//
// Exit codes: 0 success / certificate pass, 1 certificate fail or a build
// that violates its own contract, 2 bad input.  All output is deterministic
// byte-for-byte for identical inputs.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "orb/certificate.hpp"
#include "orb/io.hpp"
#include "orb/stability.hpp"

namespace {

using namespace orb;

Realization load_realization(const std::string& path) {
  OrbFile o = parse_orbifold(read_file(path));
  return Realization::create(o.alphabet, o.order);
}

// Realization for a fatgraph under `check`: an explicit orbifold file wins,
// else the order line embedded in the fatgraph file.
Realization realization_for(const FgFile& fg,
                            const std::string& orbifold_path) {
  if (!orbifold_path.empty()) return load_realization(orbifold_path);
  if (!fg.order)
    fail(ErrKind::Realization,
         "no --orbifold given and the fatgraph file carries no order line");
  return Realization::create(fg.graph.alphabet(), *fg.order);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

std::string build_report(const BuildResult& res) {
  std::string s;
  s += "pieces " + std::to_string(res.graph.piece_count()) + "\n";
  s += "base " + std::to_string(res.base) + "\n";
  s += "exponent " + std::to_string(res.exponent) + "\n";
  s += "degree " + std::to_string(res.degree) + "\n";
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"cyclic fatgraphs over orbifold groups"};
  app.require_subcommand(1);

  std::string orb_path, fg_path, word_text, out_path, orbifold_path;
  std::vector<std::string> fg_paths, word_texts;
  std::vector<long long> xs;
  std::optional<long long> target;
  std::optional<unsigned long long> seed;
  int n = 0;
  long long up_to = 0;
  bool reproduce_fig = false;

  CLI::App* derive = app.add_subcommand(
      "derive-boundary", "print the cusp word b of an orbifold file");
  derive->add_option("orbifold", orb_path)->required();

  CLI::App* classify = app.add_subcommand(
      "classify", "conjugacy class kind of a word over an orbifold");
  classify->add_option("orbifold", orb_path)->required();
  classify->add_option("--word", word_text)->required();

  CLI::App* check = app.add_subcommand(
      "check", "run the immersion certificate on fatgraph files");
  check->add_option("fatgraph", fg_paths)->required();
  check->add_option("--orbifold", orbifold_path);

  CLI::App* bound = app.add_subcommand(
      "boundary", "boundary components of a fatgraph file");
  bound->add_option("fatgraph", fg_path)->required();

  CLI::App* cen = app.add_subcommand(
      "census", "piece and unglued-edge counts of a fatgraph file");
  cen->add_option("fatgraph", fg_path)->required();

  CLI::App* pin = app.add_subcommand(
      "pinch", "complete fatgraph with the given boundary words");
  pin->add_option("orbifold", orb_path)->required();
  pin->add_option("--word", word_texts)->required();
  pin->add_option("--seed", seed);
  pin->add_option("--out", out_path);

  CLI::App* bdisk = app.add_subcommand(
      "build-disk", "certified surface over w b^(N + n g), disk shape");
  bdisk->add_option("orbifold", orb_path)->required();
  bdisk->add_option("--word", word_text)->required();
  bdisk->add_option("--n", n);
  bdisk->add_option("--out", out_path);

  CLI::App* bgen = app.add_subcommand(
      "build-genus", "certified surface over w b^(N + n), genus shape");
  bgen->add_option("orbifold", orb_path)->required();
  bgen->add_option("--word", word_text)->required();
  bgen->add_option("--n", n);
  bgen->add_flag("--reproduce-fig", reproduce_fig,
                 "skip the b^2 pad to match the worked figure");
  bgen->add_option("--out", out_path);

  CLI::App* nt = app.add_subcommand(
      "nt-witness", "adjacent-distinct run decomposition of a target sum");
  nt->add_option("xs", xs)->required()->expected(-3);
  nt->add_option("--target", target);

  CLI::App* ach = app.add_subcommand(
      "achievable", "exponents reachable by the matching builder");
  ach->add_option("orbifold", orb_path)->required();
  ach->add_option("--word", word_text)->required();
  ach->add_option("--up-to", up_to)->required();

  CLI::App* dot = app.add_subcommand(
      "export-dot", "DOT graph of an orbifold core graph or fatgraph spine");
  dot->add_option("file", fg_path)->required();
  dot->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (derive->parsed()) {
    Realization r = load_realization(orb_path);
    std::cout << word_tokens(r.boundary_rep()) << "\n";
    return 0;
  }

  if (classify->parsed()) {
    Realization r = load_realization(orb_path);
    Word w = parse_word(word_text, r.alphabet());
    std::cout << element_class_name(r.classify(w)) << "\n";
    return 0;
  }

  if (check->parsed()) {
    bool all_pass = true;
    for (const std::string& path : fg_paths) {
      FgFile fg = parse_fatgraph(read_file(path));
      Realization r = realization_for(fg, orbifold_path);
      CertificateReport rep = check_certificate(fg.graph, r);
      if (fg_paths.size() > 1) std::cout << path << ":\n";
      std::cout << certificate_lines(rep);
      all_pass = all_pass && rep.pass;
    }
    return all_pass ? 0 : 1;
  }

  if (bound->parsed()) {
    FgFile fg = parse_fatgraph(read_file(fg_path));
    BoundaryReport rep = boundary(fg.graph);
    for (const auto& comp : rep.components)
      std::cout << component_text(comp) << "\n";
    if (rep.ghost_cycles > 0)
      std::cout << "ghost cycles " << rep.ghost_cycles << "\n";
    return 0;
  }

  if (cen->parsed()) {
    FgFile fg = parse_fatgraph(read_file(fg_path));
    CensusReport c = census(fg.graph);
    std::cout << "pieces " << fg.graph.piece_count() << "\n";
    for (const auto& [i, k] : c.rectangles)
      std::cout << "rectangles z" << i << " " << k << "\n";
    for (const auto& [j, k] : c.group_polygons)
      std::cout << "group-polygons c" << j << " " << k << "\n";
    for (const auto& [size, k] : c.polygons_by_size)
      std::cout << "polygons size " << size << " " << k << "\n";
    for (const auto& [tok, k] : c.unglued)
      std::cout << "unglued " << tok << " " << k << "\n";
    std::cout << "euler " << euler_characteristic(fg.graph) << "\n";
    return 0;
  }

  if (pin->parsed()) {
    Realization r = load_realization(orb_path);
    std::vector<Word> words;
    for (const std::string& t : word_texts)
      words.push_back(parse_word(t, r.alphabet()));
    Fatgraph f = pinch(words, r.alphabet(), seed);
    emit(serialize_fatgraph(f, r.order()), out_path);
    return 0;
  }

  if (bdisk->parsed() || bgen->parsed()) {
    Realization r = load_realization(orb_path);
    Word w = parse_word(word_text, r.alphabet());
    BuildResult res = bdisk->parsed()
                          ? build_disk_surface(r, w, n)
                          : build_genus_surface(r, w, n, !reproduce_fig);
    std::cout << build_report(res);
    if (!out_path.empty())
      write_file(out_path, serialize_fatgraph(res.graph, r.order()));
    return 0;
  }

  if (nt->parsed()) {
    NTInstance inst = nt_bound(xs);
    std::cout << "g " << inst.g << "\n" << "s " << inst.s << "\n";
    std::cout << "coeffs";
    for (long long a : inst.coeffs) std::cout << " " << a;
    std::cout << "\n" << "bound " << inst.bound << "\n";
    if (target) {
      std::vector<int> runs = nt_witness(inst, *target);
      std::cout << "runs";
      for (int t : runs) std::cout << " " << t;
      std::cout << "\n";
    }
    return 0;
  }

  if (ach->parsed()) {
    Realization r = load_realization(orb_path);
    Word w = parse_word(word_text, r.alphabet());
    for (long long e : achievable_exponents(r, w, up_to))
      std::cout << e << "\n";
    return 0;
  }

  if (dot->parsed()) {
    const std::string text = read_file(fg_path);
    const std::string head = text.substr(0, text.find_first_of(" \t\r\n"));
    if (head == "orbifold") {
      OrbFile o = parse_orbifold(text);
      emit(Realization::create(o.alphabet, o.order).core_graph_dot(),
           out_path);
    } else {
      emit(spine_dot(parse_fatgraph(text).graph), out_path);
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const orb::Error& e) {
    std::fprintf(stderr, "orbfat: %s\n", e.what());
    return e.kind == orb::ErrKind::Contract ? 1 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "orbfat: %s\n", e.what());
    return 2;
  }
}
