#include "hecke/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace hecke {

using nlohmann::json;

namespace {

std::string normalize(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == ' ' || c == '_') c = '-';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

Category category_from(const std::string& s) {
  if (s == "I") return Category::Platonic;
  if (s == "II") return Category::Series;
  if (s == "III") return Category::Exceptional;
  throw std::invalid_argument("catalog: unknown category " + s);
}

AlgebraicInt entry_from_json(const json& j, HeckeIndex n) {
  if (j.is_number_integer()) return AlgebraicInt(n, j.get<long>());
  if (j.is_string()) return parse_algebraic(j.get<std::string>(), n);
  std::vector<BigInt> c;
  for (const auto& v : j) {
    if (v.is_string())
      c.emplace_back(v.get<std::string>());
    else
      c.emplace_back(v.get<long>());
  }
  return AlgebraicInt::from_coeffs(n, std::move(c));
}

std::vector<Mat2> matrices_from(const json& j, HeckeIndex n) {
  std::vector<Mat2> out;
  if (!j.is_array()) return out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, n));
  return out;
}

// Cycles in the order they are written.
std::vector<std::vector<Dart>> listed_cycles(const std::string& text) {
  std::vector<std::vector<Dart>> out;
  for (std::size_t pos = text.find('('); pos != std::string::npos; pos = text.find('(', pos)) {
    const std::size_t end = text.find(')', pos);
    if (end == std::string::npos) throw std::invalid_argument("cycle notation: unbalanced parenthesis");
    const Perm one = parse_cycles(text.substr(pos, end - pos + 1));
    const Dart first = static_cast<Dart>(std::stoul(text.substr(pos + 1)));
    for (const auto& cyc : one.cycles())
      if (std::find(cyc.begin(), cyc.end(), first) != cyc.end()) out.push_back(cyc);
    pos = end + 1;
  }
  return out;
}

CleanDessin build_dessin(const SolidRecord& r, bool repaired) {
  if (r.graph) {
    const CleanDessin d = clean_dessin_from_graph(*r.graph);
    return CleanDessin::from_perms(d.sigma0(), d.sigma1(), r.hecke_n);
  }
  const std::size_t N = 2 * static_cast<std::size_t>(r.E);
  const Perm s0 = parse_cycles(r.sigma0_text, N);
  auto cycles = listed_cycles(r.sigma1_text);
  if (repaired)
    for (std::size_t k : r.reversed_sigma1_cycles) {
      if (k < 1 || k > cycles.size()) throw std::logic_error("catalog: bad orientation repair index");
      std::reverse(cycles[k - 1].begin(), cycles[k - 1].end());
    }
  return CleanDessin::from_perms(s0, Perm::from_cycles(N, cycles), r.hecke_n);
}

SolidRecord solid_from_json(const json& j) {
  SolidRecord r;
  r.name = j.at("name").get<std::string>();
  r.display_name = j.value("display_name", r.name);
  r.category = category_from(j.at("category").get<std::string>());
  r.V = j.at("V").get<int>();
  r.F = j.at("F").get<int>();
  r.E = j.at("E").get<int>();
  r.vertex_type = j.at("vertex_type").get<std::vector<int>>();
  r.symmetry = j.at("symmetry").get<std::string>();
  r.trivalent = j.at("trivalent").get<bool>();
  r.hecke_n = j.at("hecke_n").get<int>();
  if (j.contains("sigma0")) {
    r.sigma0_text = j.at("sigma0").get<std::string>();
    r.sigma1_text = j.at("sigma1").get<std::string>();
  }
  if (j.contains("rotation")) r.graph = rotation_graph_from_json(j);
  if (j.contains("reversed_sigma1_cycles"))
    r.reversed_sigma1_cycles = j.at("reversed_sigma1_cycles").get<std::vector<std::size_t>>();
  if (j.contains("generators")) r.published_generators = matrices_from(j.at("generators"), HeckeIndex(r.hecke_n));
  if (j.contains("classification"))
    r.classification =
        Classification{j.at("classification").at("family").get<std::string>(), j.at("classification").at("level").get<int>()};
  return r;
}

}  // namespace

CleanDessin SolidRecord::dessin() const { return build_dessin(*this, true); }
CleanDessin SolidRecord::verbatim_dessin() const { return build_dessin(*this, false); }

const std::vector<SolidRecord>& list_solids() {
  static const std::vector<SolidRecord> solids = [] {
    std::vector<SolidRecord> out;
    for (const auto& doc : detail::embedded_documents())
      if (std::string_view(doc.kind) == "solids") out.push_back(solid_from_json(json::parse(doc.text)));
    return out;
  }();
  return solids;
}

const SolidRecord& get_solid(std::string_view name) {
  const std::string key = normalize(name);
  for (const auto& s : list_solids())
    if (s.name == key) return s;
  throw UnknownName("unknown solid \"" + std::string(name) + "\"");
}

PermPair prism(int n) {
  if (n < 3) throw std::invalid_argument("prism: n must be at least 3");
  const Dart N = static_cast<Dart>(6 * n);
  const Dart k = static_cast<Dart>(n);
  std::vector<std::vector<Dart>> s0{{3 * k - 2, 3}, {3 * k - 1, 6 * k - 2}, {6 * k - 1, 3 * k + 3}};
  for (Dart i = 0; i + 2 <= k; ++i) {
    s0.push_back({3 * i + 1, 3 * i + 6});
    s0.push_back({3 * i + 2, 3 * k + 3 * i + 1});
    s0.push_back({3 * k + 3 * i + 2, 3 * k + 3 * i + 6});
  }
  std::vector<std::vector<Dart>> s1;
  for (Dart i = 0; i < 2 * k; ++i) s1.push_back({3 * i + 1, 3 * i + 2, 3 * i + 3});
  return PermPair{Perm::from_cycles(N, s0), Perm::from_cycles(N, s1)};
}

PermPair antiprism(int n) {
  if (n < 3) throw std::invalid_argument("antiprism: n must be at least 3");
  const Dart N = static_cast<Dart>(8 * n);
  const Dart k = static_cast<Dart>(n);
  std::vector<std::vector<Dart>> s0{{4 * k - 3, 4}, {4 * k - 2, 8 * k - 2}, {3, 8 * k - 1}, {4 * k + 1, 8 * k}};
  for (Dart i = 0; i + 2 <= k; ++i) {
    s0.push_back({4 * i + 1, 4 * i + 8});
    s0.push_back({4 * i + 2, 4 * k + 4 * i + 2});
    s0.push_back({4 * i + 7, 4 * k + 4 * i + 3});
    s0.push_back({4 * k + 4 * i + 4, 4 * k + 4 * i + 5});
  }
  std::vector<std::vector<Dart>> s1;
  for (Dart i = 0; i < 2 * k; ++i) s1.push_back({4 * i + 1, 4 * i + 2, 4 * i + 3, 4 * i + 4});
  return PermPair{Perm::from_cycles(N, s0), Perm::from_cycles(N, s1)};
}

const std::vector<Fixture>& list_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out;
    for (const auto& doc : detail::embedded_documents()) {
      if (std::string_view(doc.kind) != "fixtures") continue;
      const json j = json::parse(doc.text);
      Fixture f{j.at("name").get<std::string>(), dessin_from_json(j), {}};
      if (j.contains("generators")) {
        const int n = f.dessin.hecke_n().value_or(3);
        f.generators = matrices_from(j.at("generators"), HeckeIndex(n));
      }
      out.push_back(std::move(f));
    }
    return out;
  }();
  return fixtures;
}

const Fixture& get_fixture(std::string_view name) {
  const std::string key = normalize(name);
  for (const auto& f : list_fixtures())
    if (f.name == key) return f;
  throw UnknownName("unknown fixture \"" + std::string(name) + "\"");
}

Mat2 matrix_from_json(const json& j, HeckeIndex n) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw std::invalid_argument("matrix JSON: expected [[a, b], [c, d]]");
  return Mat2(entry_from_json(j[0][0], n), entry_from_json(j[0][1], n), entry_from_json(j[1][0], n),
              entry_from_json(j[1][1], n));
}

json matrix_to_json(const Mat2& M) {
  auto entry = [](const AlgebraicInt& u) {
    json c = json::array();
    for (const auto& v : u.coeffs()) {
      if (v.fits_slong_p())
        c.push_back(v.get_si());
      else
        c.push_back(v.get_str());
    }
    return c;
  };
  return json::array({json::array({entry(M.a()), entry(M.b())}), json::array({entry(M.c()), entry(M.d())})});
}

std::string to_string(Category c) {
  switch (c) {
    case Category::Platonic: return "I";
    case Category::Series: return "II";
    case Category::Exceptional: return "III";
  }
  return "?";
}

}  // namespace hecke
