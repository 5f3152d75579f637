#include "hecke/schreier.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

CosetGraph build_transversal(const PermTriple& t, Dart base) {
  const std::size_t N = t.degree();
  if (base < 1 || base > N) throw std::invalid_argument("build_transversal: base point out of range");
  CosetGraph cg;
  cg.x_action = t.sigma0;
  cg.y_action = t.sigma1;
  cg.n = t.n;
  cg.base = base;
  for (auto len : t.sigma1.cycle_type())
    if (std::find(cg.valencies.begin(), cg.valencies.end(), static_cast<int>(len)) == cg.valencies.end())
      cg.valencies.push_back(static_cast<int>(len));
  std::sort(cg.valencies.begin(), cg.valencies.end());

  const Perm y_inv = t.sigma1.inverse();
  cg.transversal.assign(N + 1, Word(t.n));
  std::vector<bool> seen(N + 1, false);
  seen[base] = true;
  std::vector<Dart> frontier{base};
  cg.bfs_order.push_back(base);
  while (!frontier.empty()) {
    std::vector<Dart> next;
    for (Dart p : frontier) {
      const std::pair<Dart, Word> steps[] = {
          {t.sigma0(p), Word::x(t.n)}, {t.sigma1(p), Word::y(t.n, 1)}, {y_inv(p), Word::y(t.n, -1)}};
      for (const auto& [q, letter] : steps) {
        if (seen[q]) continue;
        seen[q] = true;
        cg.transversal[q] = cg.transversal[p] * letter;
        next.push_back(q);
      }
    }
    std::sort(next.begin(), next.end());
    cg.bfs_order.insert(cg.bfs_order.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  if (cg.bfs_order.size() != N) throw std::invalid_argument("build_transversal: coset graph is not connected");
  return cg;
}

GeneratorSet schreier_generators(const CosetGraph& cg) {
  GeneratorSet out;
  out.index = cg.size();
  std::set<std::string> seen;
  for (Dart i = 1; i <= cg.size(); ++i) {
    const std::pair<Dart, Word> edges[] = {{cg.x_action(i), Word::x(cg.n)}, {cg.y_action(i), Word::y(cg.n, 1)}};
    for (const auto& [target, letter] : edges) {
      Word w = cg.transversal[i] * letter * cg.transversal[target].inverse();
      if (w.empty()) continue;
      std::string key = w.to_string();
      if (seen.count(key)) continue;
      std::string inv_key = w.inverse().to_string();
      if (seen.count(inv_key)) continue;
      seen.insert(std::move(key));
      seen.insert(std::move(inv_key));
      out.words.push_back(std::move(w));
    }
  }
  if (!cg.free_product && cg.n >= 3) {
    const auto gens = hecke_generators(HeckeIndex(cg.n));
    out.matrices.reserve(out.words.size());
    for (const auto& w : out.words) out.matrices.push_back(eval_matrix(w, gens));
  }
  return out;
}

bool contains(const CosetGraph& cg, const Word& w) {
  if (w.order() != cg.n) throw std::invalid_argument("contains: word relation order differs from the coset graph");
  return act(cg.base, w, cg.x_action, cg.y_action) == cg.base;
}

std::string coset_graph_to_dot(const CosetGraph& cg) {
  std::ostringstream os;
  os << "digraph coset_graph {\n  node [shape=circle, fontsize=10];\n";
  os << "  " << cg.base << " [style=bold];\n";
  for (const auto& cyc : cg.y_action.cycles()) {
    if (cyc.size() == 1) {
      os << "  " << cyc[0] << " -> " << cyc[0] << " [color=red, label=\"y\"];\n";
      continue;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      os << "  " << cyc[k] << " -> " << cyc[(k + 1) % cyc.size()] << " [color=red];\n";
  }
  for (const auto& cyc : cg.x_action.cycles()) {
    if (cyc.size() == 2)
      os << "  " << cyc[0] << " -> " << cyc[1] << " [dir=both, color=blue];\n";
    else
      os << "  " << cyc[0] << " -> " << cyc[0] << " [dir=both, color=blue, label=\"x\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hecke
