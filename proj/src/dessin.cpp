#include "hecke/dessin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hecke {

using nlohmann::json;

void RotationGraph::validate() const {
  if (edges.empty()) throw GraphError("rotation graph: no edges");
  std::map<Dart, std::size_t> owner;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (Dart e : vertices[v].ends)
      if (!owner.emplace(e, v).second)
        throw GraphError("rotation graph: dart-end " + std::to_string(e) + " appears in two rotations");
  std::set<Dart> paired;
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    for (Dart e : {a, b}) {
      if (!owner.count(e)) throw GraphError("rotation graph: edge uses unknown dart-end " + std::to_string(e));
      if (!paired.insert(e).second)
        throw GraphError("rotation graph: dart-end " + std::to_string(e) + " is in two edges");
    }
    const std::size_t va = owner[a], vb = owner[b];
    if (va == vb) throw GraphError("rotation graph: loop at vertex " + vertices[va].name);
    adj[va].push_back(vb);
    adj[vb].push_back(va);
  }
  if (paired.size() != owner.size()) throw GraphError("rotation graph: some dart-ends are not in any edge");
  std::vector<bool> seen(vertices.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != vertices.size()) throw GraphError("rotation graph: not connected");
}

CleanDessin CleanDessin::from_perms(Perm sigma0, Perm sigma1, std::optional<int> n) {
  if (sigma0.degree() != sigma1.degree() || sigma0.degree() == 0)
    throw TripleError(TripleError::Kind::DegreeMismatch, "dessin: sigma0 and sigma1 must act on the same darts");
  CleanDessin d;
  d.sigma0_ = std::move(sigma0);
  d.sigma1_ = std::move(sigma1);
  const auto lengths = d.sigma1_.cycle_type();
  if (n) {
    if (*n < 1) throw std::invalid_argument("dessin: n must be positive");
    d.order_ = *n;
    if (*n >= 3) d.hecke_n_ = *n;
  } else {
    const int top = static_cast<int>(lengths.back());
    const bool divides = std::all_of(lengths.begin(), lengths.end(), [&](std::size_t l) { return top % l == 0; });
    if (top >= 3 && divides) {
      d.hecke_n_ = top;
      d.order_ = top;
    } else {
      d.order_ = static_cast<int>(d.sigma1_.order());
    }
  }
  d.triple();
  return d;
}

std::vector<int> CleanDessin::valencies() const {
  std::vector<int> out;
  for (const auto& c : sigma1_.cycles()) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::vector<int> CleanDessin::n_list() const {
  auto v = valencies();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

PermTriple CleanDessin::triple() const { return make_triple(sigma0_, sigma1_, order_); }

namespace {

struct Relabel {
  std::map<Dart, Dart> to_dart;
};

Relabel relabel(const RotationGraph& g) {
  Relabel r;
  std::vector<Dart> ids;
  for (const auto& v : g.vertices) ids.insert(ids.end(), v.ends.begin(), v.ends.end());
  std::sort(ids.begin(), ids.end());
  for (std::size_t k = 0; k < ids.size(); ++k) r.to_dart[ids[k]] = static_cast<Dart>(k + 1);
  return r;
}

VertexType type_of(const std::vector<Dart>& ring, const std::vector<std::size_t>& face_size, const std::string& who) {
  if (ring.size() <= 2)
    throw GraphError("vertex types: vertex " + who + " has degree " + std::to_string(ring.size()) + " (need > 2)");
  VertexType t;
  for (Dart d : ring) t.push_back(static_cast<int>(face_size[d]));
  return t;
}

std::vector<std::size_t> face_sizes(const Perm& sigma0, const Perm& sigma1) {
  const Perm phi = sigma0 * sigma1.inverse();
  std::vector<std::size_t> size(phi.degree() + 1, 0);
  for (const auto& c : phi.cycles())
    for (Dart d : c) size[d] = c.size();
  return size;
}

std::vector<std::vector<Dart>> read_cycles(const json& j) {
  std::vector<std::vector<Dart>> out;
  for (const auto& c : j) out.push_back(c.get<std::vector<Dart>>());
  return out;
}

Perm read_perm(const json& j, std::size_t degree) {
  if (j.is_string()) return parse_cycles(j.get<std::string>(), degree);
  if (j.is_array()) return parse_cycles(read_cycles(j), degree);
  throw std::invalid_argument("dessin JSON: permutation must be a cycle string or an array of cycles");
}

std::size_t max_dart(const json& j) {
  std::size_t m = 0;
  if (j.is_string()) {
    const Perm p = parse_cycles(j.get<std::string>());
    return p.degree();
  }
  for (const auto& c : j)
    for (const auto& v : c) m = std::max<std::size_t>(m, v.get<std::size_t>());
  return m;
}

}  // namespace

CleanDessin clean_dessin_from_graph(const RotationGraph& g) {
  g.validate();
  const Relabel r = relabel(g);
  const std::size_t N = r.to_dart.size();
  std::vector<std::vector<Dart>> rot, pairs;
  for (const auto& v : g.vertices) {
    auto& c = rot.emplace_back();
    for (Dart e : v.ends) c.push_back(r.to_dart.at(e));
  }
  for (const auto& [a, b] : g.edges) pairs.push_back({r.to_dart.at(a), r.to_dart.at(b)});
  return CleanDessin::from_perms(Perm::from_cycles(N, pairs), Perm::from_cycles(N, rot));
}

CosetGraph dessin_to_coset_graph(const CleanDessin& d, Dart base) {
  CosetGraph cg = build_transversal(d.triple(), base);
  cg.free_product = d.is_free_product();
  return cg;
}

CleanDessin coset_graph_to_dessin(const CosetGraph& cg) {
  if (cg.free_product) return CleanDessin::from_perms(cg.x_action, cg.y_action);
  return CleanDessin::from_perms(cg.x_action, cg.y_action, cg.n);
}

CleanDessin flip_orientation(const CleanDessin& d, std::size_t cycle_index) {
  const auto cycles = d.sigma1().cycles();
  if (cycle_index >= cycles.size())
    throw std::out_of_range("flip: cycle index " + std::to_string(cycle_index) + " out of range (sigma1 has " +
                            std::to_string(cycles.size()) + " cycles)");
  auto flipped = cycles;
  std::reverse(flipped[cycle_index].begin(), flipped[cycle_index].end());
  Perm s1 = Perm::from_cycles(d.degree(), flipped);
  return CleanDessin::from_perms(d.sigma0(), std::move(s1), d.hecke_n());
}

CleanDessin flip_at_dart(const CleanDessin& d, Dart dart) {
  if (dart < 1 || dart > d.degree()) throw std::out_of_range("flip: dart " + std::to_string(dart) + " out of range");
  const auto cycles = d.sigma1().cycles();
  for (std::size_t k = 0; k < cycles.size(); ++k)
    if (std::find(cycles[k].begin(), cycles[k].end(), dart) != cycles[k].end()) return flip_orientation(d, k);
  throw std::logic_error("flip: dart not found in any cycle");
}

Perm face_permutation(const CleanDessin& d) { return d.sigma0() * d.sigma1().inverse(); }

std::vector<VertexType> vertex_types(const CleanDessin& d) {
  const auto size = face_sizes(d.sigma0(), d.sigma1());
  std::vector<VertexType> out;
  for (const auto& c : d.sigma1().cycles()) out.push_back(type_of(c, size, "at dart " + std::to_string(c.front())));
  return out;
}

std::vector<VertexType> vertex_types(const RotationGraph& g) {
  const CleanDessin d = clean_dessin_from_graph(g);
  const auto size = face_sizes(d.sigma0(), d.sigma1());
  const Relabel r = relabel(g);
  std::vector<VertexType> out;
  for (const auto& v : g.vertices) {
    std::vector<Dart> ring;
    for (Dart e : v.ends) ring.push_back(r.to_dart.at(e));
    out.push_back(type_of(ring, size, v.name));
  }
  return out;
}

VertexType canonical_type(const VertexType& t) {
  VertexType best = t;
  VertexType rev(t.rbegin(), t.rend());
  for (const VertexType* base : {&t, static_cast<const VertexType*>(&rev)}) {
    VertexType cur = *base;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      best = std::min(best, cur);
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    }
  }
  return best;
}

bool types_equivalent(const VertexType& a, const VertexType& b) {
  return a.size() == b.size() && canonical_type(a) == canonical_type(b);
}

namespace {

bool all_equivalent(const std::vector<VertexType>& types) {
  for (const auto& t : types)
    if (!types_equivalent(t, types.front())) return false;
  return true;
}

bool isomorphic_fixed(const Perm& a0, const Perm& a1, const Perm& b0, const Perm& b1) {
  const std::size_t N = a0.degree();
  for (Dart target = 1; target <= N; ++target) {
    std::vector<Dart> map(N + 1, 0), inv(N + 1, 0);
    map[1] = target;
    inv[target] = 1;
    std::vector<Dart> queue{1};
    bool ok = true;
    for (std::size_t k = 0; k < queue.size() && ok; ++k) {
      const Dart p = queue[k];
      for (auto [ga, gb] : {std::pair{&a0, &b0}, std::pair{&a1, &b1}}) {
        const Dart q = (*ga)(p), mq = (*gb)(map[p]);
        if (map[q] == 0 && inv[mq] == 0) {
          map[q] = mq;
          inv[mq] = q;
          queue.push_back(q);
        } else if (map[q] != mq || inv[mq] != q) {
          ok = false;
          break;
        }
      }
    }
    if (ok && queue.size() == N) return true;
  }
  return false;
}

}  // namespace

bool is_archimedean(const CleanDessin& d) { return all_equivalent(vertex_types(d)); }
bool is_archimedean(const RotationGraph& g) { return all_equivalent(vertex_types(g)); }

bool is_isomorphic(const CleanDessin& a, const CleanDessin& b, bool allow_mirror) {
  if (a.degree() != b.degree()) return false;
  if (a.sigma0().cycle_type() != b.sigma0().cycle_type() || a.sigma1().cycle_type() != b.sigma1().cycle_type())
    return false;
  if (isomorphic_fixed(a.sigma0(), a.sigma1(), b.sigma0(), b.sigma1())) return true;
  return allow_mirror && isomorphic_fixed(a.sigma0(), a.sigma1(), b.sigma0(), b.sigma1().inverse());
}

RotationGraph rotation_graph_from_json(const json& j) {
  if (!j.contains("rotation") || !j.contains("edges"))
    throw std::invalid_argument("rotation graph JSON: needs \"rotation\" and \"edges\"");
  RotationGraph g;
  for (const auto& [name, ends] : j.at("rotation").items())
    g.vertices.push_back({name, ends.get<std::vector<Dart>>()});
  std::sort(g.vertices.begin(), g.vertices.end(), [](const auto& a, const auto& b) {
    return a.name.size() != b.name.size() ? a.name.size() < b.name.size() : a.name < b.name;
  });
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("rotation graph JSON: edges must be pairs");
    g.edges.emplace_back(e[0].get<Dart>(), e[1].get<Dart>());
  }
  return g;
}

CleanDessin dessin_from_json(const json& j) {
  std::optional<int> n;
  if (j.contains("n") && !j.at("n").is_null()) n = j.at("n").get<int>();
  if (j.contains("rotation")) {
    CleanDessin d = clean_dessin_from_graph(rotation_graph_from_json(j));
    return n ? CleanDessin::from_perms(d.sigma0(), d.sigma1(), n) : d;
  }
  if (!j.contains("sigma0") || !j.contains("sigma1"))
    throw std::invalid_argument("dessin JSON: needs \"sigma0\" and \"sigma1\", or \"rotation\" and \"edges\"");
  std::size_t degree = std::max(max_dart(j.at("sigma0")), max_dart(j.at("sigma1")));
  if (j.contains("degree")) degree = j.at("degree").get<std::size_t>();
  Perm s1 = read_perm(j.at("sigma1"), degree);
  const std::string composition = j.value("composition", "right");
  if (composition == "left")
    s1 = s1.inverse();
  else if (composition != "right")
    throw std::invalid_argument("dessin JSON: composition must be \"left\" or \"right\"");
  return CleanDessin::from_perms(read_perm(j.at("sigma0"), degree), std::move(s1), n);
}

json dessin_to_json(const CleanDessin& d) {
  json j;
  j["n"] = d.hecke_n() ? json(*d.hecke_n()) : json(nullptr);
  j["degree"] = d.degree();
  j["sigma0"] = print_cycles(d.sigma0());
  j["sigma1"] = print_cycles(d.sigma1());
  return j;
}

std::string dessin_to_dot(const CleanDessin& d) {
  const auto white = d.sigma1().cycles();
  const auto black = d.sigma0().cycles();
  std::vector<std::size_t> w_of(d.degree() + 1), b_of(d.degree() + 1);
  for (std::size_t k = 0; k < white.size(); ++k)
    for (Dart x : white[k]) w_of[x] = k;
  for (std::size_t k = 0; k < black.size(); ++k)
    for (Dart x : black[k]) b_of[x] = k;
  std::ostringstream os;
  os << "graph dessin {\n  node [fontsize=10];\n";
  for (std::size_t k = 0; k < white.size(); ++k) os << "  w" << k + 1 << " [shape=circle, label=\"\"];\n";
  for (std::size_t k = 0; k < black.size(); ++k) os << "  b" << k + 1 << " [shape=point, width=0.1];\n";
  for (Dart x = 1; x <= d.degree(); ++x)
    os << "  w" << w_of[x] + 1 << " -- b" << b_of[x] + 1 << " [label=\"" << x << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hecke
