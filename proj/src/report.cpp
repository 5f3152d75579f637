#include "hecke/report.hpp"

#include <chrono>
#include <sstream>

#include "hecke/schreier.hpp"

namespace hecke {

using nlohmann::json;

AnalysisReport analyze(const CleanDessin& d, const std::string& input, const AnalysisOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.input = input;
  r.degree = d.degree();
  r.n = d.hecke_n();
  r.free_product = d.is_free_product();
  r.valencies = d.n_list();
  r.sigma0 = print_cycles(d.sigma0());
  r.sigma1 = print_cycles(d.sigma1());
  r.base = opts.base;

  const PermTriple t = d.triple();
  r.genus = genus(t);
  const CosetGraph cg = dessin_to_coset_graph(d, opts.base);
  const GeneratorSet gens = schreier_generators(cg);
  r.index = gens.index;
  r.cusp_width_lcm = level(t);
  if (r.n == 3) r.level = r.cusp_width_lcm;

  for (std::size_t k = 0; k < gens.words.size(); ++k) {
    GeneratorEntry g{gens.words[k].to_string(), {}};
    if (k < gens.matrices.size()) {
      const Mat2& M = gens.matrices[k];
      g.matrix = {{M.a().to_string(), M.b().to_string()}, {M.c().to_string(), M.d().to_string()}};
    }
    r.generators.push_back(std::move(g));
  }

  if (r.free_product) {
    r.notes.push_back("mixed white valencies: free product of Hecke factors, words use y of order " +
                      std::to_string(d.relation_order()) + ", no matrices");
  } else if (opts.congruence) {
    CongruenceOptions co{opts.max_closure, opts.moduli};
    r.congruence = analyze_congruence(t, gens, co);
    for (const auto& f : r.congruence->family_matches)
      if (!f.equal) r.notes.push_back("index of " + family_name(f.family, f.m, *r.n) + " exceeds the closure cap");
  }
  if (r.n && *r.n > 6) r.notes.push_back("matrix rewriting for n > 6 is best-effort");

  r.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

json match_to_json(const FamilyMatch& f, int n) {
  return json{{"family", to_string(f.family)},
              {"name", family_name(f.family, f.m, n)},
              {"m", f.m},
              {"contained", f.contained},
              {"equal", f.equal ? json(*f.equal) : json(nullptr)},
              {"family_index", f.family_index}};
}

FamilyMatch match_from_json(const json& j) {
  FamilyMatch f;
  f.family = family_from_string(j.at("family").get<std::string>());
  f.m = j.at("m").get<std::int64_t>();
  f.contained = j.at("contained").get<bool>();
  if (!j.at("equal").is_null()) f.equal = j.at("equal").get<bool>();
  f.family_index = j.at("family_index").get<std::uint64_t>();
  return f;
}

}  // namespace

json congruence_to_json(const CongruenceReport& c, int n) {
  json matches = json::array();
  for (const auto& f : c.family_matches) matches.push_back(match_to_json(f, n));
  json j{{"level", c.level},
         {"verdict", to_string(c.verdict)},
         {"image_order", c.image_order},
         {"family_matches", matches},
         {"classification", c.classification ? match_to_json(*c.classification, n) : json(nullptr)}};
  return j;
}

CongruenceReport congruence_from_json(const json& j) {
  CongruenceReport c;
  c.level = j.at("level").get<std::uint64_t>();
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  c.image_order = j.at("image_order").get<std::uint64_t>();
  for (const auto& m : j.at("family_matches")) c.family_matches.push_back(match_from_json(m));
  if (!j.at("classification").is_null()) c.classification = match_from_json(j.at("classification"));
  return c;
}

json report_to_json(const AnalysisReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(json{{"word", g.word}, {"matrix", g.matrix}});
  json j{{"input", r.input},
         {"degree", r.degree},
         {"n", r.n ? json(*r.n) : json(nullptr)},
         {"free_product", r.free_product},
         {"valencies", r.valencies},
         {"sigma0", r.sigma0},
         {"sigma1", r.sigma1},
         {"base", r.base},
         {"index", r.index},
         {"genus", r.genus},
         {"cusp_width_lcm", r.cusp_width_lcm},
         {"level", r.level ? json(*r.level) : json(nullptr)},
         {"generators", gens},
         {"congruence", r.congruence ? congruence_to_json(*r.congruence, r.n.value_or(3)) : json(nullptr)},
         {"timing_us", r.timing_us},
         {"notes", r.notes}};
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.input = j.at("input").get<std::string>();
  r.degree = j.at("degree").get<std::size_t>();
  if (!j.at("n").is_null()) r.n = j.at("n").get<int>();
  r.free_product = j.at("free_product").get<bool>();
  r.valencies = j.at("valencies").get<std::vector<int>>();
  r.sigma0 = j.at("sigma0").get<std::string>();
  r.sigma1 = j.at("sigma1").get<std::string>();
  r.base = j.at("base").get<Dart>();
  r.index = j.at("index").get<std::size_t>();
  r.genus = j.at("genus").get<int>();
  r.cusp_width_lcm = j.at("cusp_width_lcm").get<std::uint64_t>();
  if (!j.at("level").is_null()) r.level = j.at("level").get<std::uint64_t>();
  for (const auto& g : j.at("generators"))
    r.generators.push_back(
        GeneratorEntry{g.at("word").get<std::string>(), g.at("matrix").get<std::vector<std::vector<std::string>>>()});
  if (!j.at("congruence").is_null()) r.congruence = congruence_from_json(j.at("congruence"));
  r.timing_us = j.at("timing_us").get<std::int64_t>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "input:      " << r.input << "\n";
  os << "darts:      " << r.degree << "\n";
  os << "group:      ";
  if (r.n)
    os << "H" << *r.n << "\n";
  else {
    os << "free product of";
    for (int v : r.valencies) os << " C" << v;
    os << " with C2\n";
  }
  os << "index:      " << r.index << "\n";
  os << "genus:      " << r.genus << "\n";
  if (r.level)
    os << "level:      " << *r.level << "\n";
  else
    os << "cusp lcm:   " << r.cusp_width_lcm << "\n";
  if (r.congruence) {
    const auto& c = *r.congruence;
    if (c.verdict != Verdict::NotApplicable) os << "congruence: " << (c.verdict == Verdict::Congruence ? "yes" : "no") << "\n";
    for (const auto& f : c.family_matches) {
      os << "  contained in " << family_name(f.family, f.m, r.n.value_or(3));
      if (f.equal == true) os << " (equal, index " << f.family_index << ")";
      os << "\n";
    }
    if (c.classification)
      os << "class:      " << family_name(c.classification->family, c.classification->m, r.n.value_or(3)) << "\n";
  }
  os << "generators: " << r.generators.size() << "\n";
  for (const auto& g : r.generators) {
    os << "  " << g.word;
    if (!g.matrix.empty())
      os << "  [[" << g.matrix[0][0] << ", " << g.matrix[0][1] << "], [" << g.matrix[1][0] << ", " << g.matrix[1][1]
         << "]]";
    os << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "time:       " << r.timing_us << " us\n";
  return os.str();
}

}  // namespace hecke
