#include "hecke/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hecke/rewrite.hpp"

namespace hecke {

using nlohmann::json;

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

int parse_family_size(std::string_view text, std::string_view prefix) {
  const std::string rest(text.substr(prefix.size()));
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(rest, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != rest.size() || rest.empty()) throw std::invalid_argument("bad size in \"" + std::string(text) + "\"");
  return n;
}

}  // namespace

std::vector<ListRow> cmd_list(const ListFilter& filter) {
  std::vector<ListRow> rows;
  auto keep = [&](bool trivalent, int n) {
    return (!filter.trivalent_only || trivalent) && (!filter.hecke || *filter.hecke == n);
  };
  auto add_templates = [&] {
    if (keep(true, 3)) rows.push_back({"II", "prism:n", "n-prism", "2n", "n+2", "3n", "(4,4,n)", "D_nh", true, 3, true});
    if (keep(false, 4))
      rows.push_back({"II", "antiprism:n", "n-antiprism", "2n", "2n+2", "4n", "(3,3,3,n)", "D_nd", false, 4, true});
  };
  bool templates_done = false;
  for (const auto& s : list_solids()) {
    if (s.category == Category::Exceptional && !templates_done) {
      add_templates();
      templates_done = true;
    }
    if (!keep(s.trivalent, s.hecke_n)) continue;
    rows.push_back({to_string(s.category), s.name, s.display_name, std::to_string(s.V), std::to_string(s.F),
                    std::to_string(s.E), join_ints(s.vertex_type), s.symmetry, s.trivalent, s.hecke_n, false});
  }
  if (!templates_done) add_templates();
  return rows;
}

ResolvedInput resolve_input(std::string_view text) {
  if (text.starts_with("prism:")) {
    const auto p = prism(parse_family_size(text, "prism:"));
    return {std::string(text), CleanDessin::from_perms(p.sigma0, p.sigma1, 3), {}};
  }
  if (text.starts_with("antiprism:")) {
    const auto p = antiprism(parse_family_size(text, "antiprism:"));
    return {std::string(text), CleanDessin::from_perms(p.sigma0, p.sigma1, 4), {}};
  }
  const std::string s(text);
  if (s.ends_with(".json") || std::filesystem::is_regular_file(s)) {
    const json j = read_json_file(s);
    ResolvedInput r{s, dessin_from_json(j), {}};
    if (j.contains("generators") && r.dessin.hecke_n())
      r.published = read_matrices(j.at("generators"), HeckeIndex(*r.dessin.hecke_n()));
    return r;
  }
  for (const auto& f : list_fixtures())
    if (f.name == text) return {f.name, f.dessin, f.generators};
  const SolidRecord& solid = get_solid(text);
  return {solid.name, solid.dessin(), solid.published_generators};
}

AnalysisReport cmd_analyze(std::string_view input, const AnalysisOptions& opts) {
  const ResolvedInput in = resolve_input(input);
  return analyze(in.dessin, in.descriptor, opts);
}

AnalysisReport cmd_flip(std::string_view input, std::size_t cycle_index, const AnalysisOptions& opts) {
  const ResolvedInput in = resolve_input(input);
  const auto cycles = in.dessin.sigma1().cycles();
  const CleanDessin flipped = flip_orientation(in.dessin, cycle_index);
  AnalysisReport r = analyze(flipped, in.descriptor, opts);
  std::vector<Dart> c = cycles[cycle_index];
  std::string text = "(";
  for (std::size_t i = 0; i < c.size(); ++i) text += (i ? "," : "") + std::to_string(c[i]);
  r.notes.insert(r.notes.begin(), "sigma1 cycle " + std::to_string(cycle_index + 1) + " " + text + ")" + " reversed");
  return r;
}

std::vector<MembershipVerdict> cmd_verify(const CleanDessin& d, const std::vector<Mat2>& matrices, Dart base) {
  if (!d.hecke_n()) throw std::invalid_argument("verify: needs a single-valency (Hecke) dessin");
  const CosetGraph cg = dessin_to_coset_graph(d, base);
  std::vector<MembershipVerdict> out;
  for (const auto& M : matrices) {
    MembershipVerdict v;
    v.matrix = M.to_string();
    try {
      const Word w = word_from_matrix(M);
      v.word = w.to_string();
      v.member = contains(cg, w);
    } catch (const RewriteError& e) {
      v.error = e.what();
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<MembershipVerdict> cmd_verify(std::string_view input, Dart base) {
  const ResolvedInput in = resolve_input(input);
  return cmd_verify(in.dessin, in.published, base);
}

std::vector<Mat2> read_matrices(const json& j, HeckeIndex n) {
  const json& list = j.is_object() ? j.at("matrices") : j;
  if (!list.is_array()) throw std::invalid_argument("matrices: expected a list");
  std::vector<Mat2> out;
  for (const auto& m : list) out.push_back(matrix_from_json(m, n));
  return out;
}

namespace {

std::filesystem::path output_path(const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative())
    if (const char* dir = std::getenv("HECKE_DESSIN_OUT"); dir && *dir) path = std::filesystem::path(dir) / path;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  return path;
}

void write_file(const std::string& p, const std::string& text) {
  const auto path = output_path(p);
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << text;
}

void print_list(const std::vector<ListRow>& rows, bool as_json, std::ostream& out) {
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back(json{{"category", r.category}, {"name", r.name}, {"display_name", r.display_name}, {"V", r.V},
                       {"F", r.F}, {"E", r.E}, {"vertex_type", r.vertex_type}, {"symmetry", r.symmetry},
                       {"trivalent", r.trivalent}, {"hecke_n", r.hecke_n}, {"template", r.is_template}});
    out << j.dump(2) << "\n";
    return;
  }
  out << std::left << std::setw(4) << "cat" << std::setw(32) << "name" << std::setw(6) << "V" << std::setw(6) << "F"
      << std::setw(6) << "E" << std::setw(12) << "type" << std::setw(6) << "sym" << std::setw(5) << "tri"
      << "group\n";
  for (const auto& r : rows)
    out << std::left << std::setw(4) << r.category << std::setw(32) << r.name << std::setw(6) << r.V << std::setw(6)
        << r.F << std::setw(6) << r.E << std::setw(12) << r.vertex_type << std::setw(6) << r.symmetry << std::setw(5)
        << (r.trivalent ? "yes" : "no") << "H" << r.hecke_n << "\n";
}

struct AnalysisFlags {
  bool json = false;
  std::string dot;
  std::string dessin_dot;
  Dart base = 1;
  std::vector<std::int64_t> moduli;
  std::uint64_t max_closure = kDefaultClosureCap;

  AnalysisOptions options() const { return AnalysisOptions{base, moduli, max_closure, true}; }
};

void add_analysis_flags(CLI::App* cmd, AnalysisFlags& f) {
  cmd->add_flag("--json", f.json, "Print the report as JSON");
  cmd->add_option("--dot", f.dot, "Write the coset graph as Graphviz DOT to this path");
  cmd->add_option("--dessin-dot", f.dessin_dot, "Write the dessin as Graphviz DOT to this path");
  cmd->add_option("--base", f.base, "Base dart of the stabilizer")->check(CLI::PositiveNumber);
  cmd->add_option("--mod", f.moduli, "Extra modulus for containment checks (repeatable)")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 30));
  cmd->add_option("--max-closure", f.max_closure, "Element cap for residue closures")->check(CLI::PositiveNumber);
}

void emit_report(const AnalysisReport& r, const CleanDessin& d, const AnalysisFlags& f, std::ostream& out) {
  if (!f.dot.empty()) write_file(f.dot, coset_graph_to_dot(dessin_to_coset_graph(d, f.base)));
  if (!f.dessin_dot.empty()) write_file(f.dessin_dot, dessin_to_dot(d));
  if (f.json)
    out << report_to_json(r).dump(2) << "\n";
  else
    out << report_to_text(r);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke-group dessins of the Archimedean solids: coset graphs, generators, congruence"};
  app.name("hecke-dessin");
  app.require_subcommand(1);

  ListFilter lf;
  int hecke = 0;
  bool list_json = false;
  auto* list = app.add_subcommand("list", "List the built-in solids");
  list->add_flag("--trivalent", lf.trivalent_only, "Only trivalent solids");
  list->add_option("--hecke", hecke, "Only solids whose dessin lives in H_n")->check(CLI::PositiveNumber);
  list->add_flag("--json", list_json, "Print JSON");

  std::string input;
  AnalysisFlags af;
  auto* an = app.add_subcommand("analyze", "Analyze a solid, fixture, JSON file, prism:n or antiprism:n");
  an->add_option("input", input, "What to analyze")->required();
  add_analysis_flags(an, af);

  std::size_t cycle = 0;
  Dart dart = 0;
  auto* fl = app.add_subcommand("flip", "Reverse one sigma1 cycle, then analyze");
  fl->add_option("input", input, "What to flip")->required();
  auto* cyc_opt = fl->add_option("--cycle", cycle, "1-based sigma1 cycle (cycles ordered by smallest dart)")
                      ->check(CLI::PositiveNumber);
  auto* dart_opt = fl->add_option("--dart", dart, "Reverse the cycle containing this dart")->check(CLI::PositiveNumber);
  cyc_opt->excludes(dart_opt);
  add_analysis_flags(fl, af);

  std::string matrices_file;
  bool verify_json = false;
  Dart verify_base = 1;
  auto* ve = app.add_subcommand("verify", "Check that matrices lie in the dessin's subgroup");
  ve->add_option("input", input, "Dessin")->required();
  ve->add_option("matrices", matrices_file, "JSON file of matrices (default: the input's published generators)");
  ve->add_flag("--json", verify_json, "Print JSON");
  ve->add_option("--base", verify_base, "Base dart")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (list->parsed()) {
      if (hecke) lf.hecke = hecke;
      print_list(cmd_list(lf), list_json, out);
      return 0;
    }
    if (an->parsed()) {
      const ResolvedInput in = resolve_input(input);
      emit_report(analyze(in.dessin, in.descriptor, af.options()), in.dessin, af, out);
      return 0;
    }
    if (fl->parsed()) {
      const ResolvedInput in = resolve_input(input);
      if (!cyc_opt->count() && !dart_opt->count()) {
        err << "flip: give --cycle or --dart\n";
        return 1;
      }
      std::size_t index = cycle ? cycle - 1 : 0;
      if (dart_opt->count()) {
        if (dart > in.dessin.degree()) throw std::out_of_range("flip: dart " + std::to_string(dart) + " out of range");
        const auto cycles = in.dessin.sigma1().cycles();
        for (std::size_t k = 0; k < cycles.size(); ++k)
          if (std::find(cycles[k].begin(), cycles[k].end(), dart) != cycles[k].end()) index = k;
      }
      const AnalysisReport r = cmd_flip(input, index, af.options());
      emit_report(r, flip_orientation(in.dessin, index), af, out);
      return 0;
    }
    if (ve->parsed()) {
      const ResolvedInput in = resolve_input(input);
      std::vector<Mat2> mats = in.published;
      if (!matrices_file.empty()) {
        if (!in.dessin.hecke_n()) throw std::invalid_argument("verify: needs a single-valency (Hecke) dessin");
        mats = read_matrices(read_json_file(matrices_file), HeckeIndex(*in.dessin.hecke_n()));
      }
      const auto verdicts = cmd_verify(in.dessin, mats, verify_base);
      if (verify_json) {
        json j = json::array();
        for (const auto& v : verdicts)
          j.push_back(json{{"matrix", v.matrix},
                           {"word", v.word ? json(*v.word) : json(nullptr)},
                           {"member", v.member},
                           {"error", v.error.empty() ? json(nullptr) : json(v.error)}});
        out << j.dump(2) << "\n";
      } else {
        std::size_t members = 0;
        for (const auto& v : verdicts) {
          members += v.member;
          out << (v.member ? "member     " : v.word ? "not member " : "error      ") << v.matrix;
          if (v.word) out << "  " << *v.word;
          if (!v.error.empty()) out << "  " << v.error;
          out << "\n";
        }
        out << members << "/" << verdicts.size() << " matrices in the subgroup\n";
      }
      return 0;
    }
  } catch (const ResourceExhausted& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RewriteError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace hecke
