#include "hecke/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hecke {

Perm::Perm(std::size_t degree) : img_(degree + 1) { std::iota(img_.begin(), img_.end(), Dart{0}); }

Perm Perm::from_images(std::vector<Dart> images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n + 1, false);
  Perm p;
  p.img_.reserve(n + 1);
  p.img_.push_back(0);
  for (Dart v : images) {
    if (v < 1 || v > n) throw std::invalid_argument("Perm: image " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("Perm: repeated image " + std::to_string(v));
    seen[v] = true;
    p.img_.push_back(v);
  }
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Dart>>& cycles) {
  Perm p(degree);
  std::vector<bool> seen(degree + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Dart v = c[k];
      if (v < 1 || v > degree)
        throw std::invalid_argument("cycle notation: dart " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(degree));
      if (seen[v]) throw std::invalid_argument("cycle notation: repeated dart " + std::to_string(v));
      seen[v] = true;
      p.img_[v] = c[(k + 1) % c.size()];
    }
  }
  return p;
}

Dart Perm::at(Dart i) const {
  if (i < 1 || i > degree()) throw std::out_of_range("Perm::at: dart " + std::to_string(i));
  return img_[i];
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("Perm: degree mismatch in product");
  Perm r(p.degree());
  for (std::size_t i = 1; i < p.img_.size(); ++i) r.img_[i] = q.img_[p.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (std::size_t i = 1; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Dart>(i);
  return r;
}

Perm Perm::pow(long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Perm result(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t i = 1; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<Dart>> Perm::cycles() const {
  std::vector<std::vector<Dart>> out;
  std::vector<bool> seen(img_.size(), false);
  for (Dart i = 1; i < img_.size(); ++i) {
    if (seen[i]) continue;
    auto& c = out.emplace_back();
    for (Dart j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
  }
  return out;
}

std::size_t Perm::cycle_count() const { return cycles().size(); }

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> t;
  for (const auto& c : cycles()) t.push_back(c.size());
  std::sort(t.begin(), t.end());
  return t;
}

std::uint64_t Perm::order() const {
  std::uint64_t l = 1;
  for (auto len : cycle_type()) l = std::lcm(l, static_cast<std::uint64_t>(len));
  return l;
}

Perm Perm::conjugate_by(const Perm& phi) const {
  if (phi.degree() != degree()) throw std::invalid_argument("Perm: degree mismatch in conjugation");
  Perm r(degree());
  for (std::size_t i = 1; i < img_.size(); ++i) r.img_[phi.img_[i]] = phi.img_[img_[i]];
  return r;
}

Perm parse_cycles(const std::vector<std::vector<Dart>>& cycles, std::size_t degree) {
  if (degree == 0)
    for (const auto& c : cycles)
      for (Dart v : c) degree = std::max<std::size_t>(degree, v);
  return Perm::from_cycles(degree, cycles);
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Dart>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    auto& c = cycles.emplace_back();
    for (;;) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("cycle notation: expected a dart number");
      c.push_back(static_cast<Dart>(std::stoul(std::string(text.substr(i, j - i)))));
      i = j;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && text[i] == ',') ++i;
    }
    skip();
  }
  return parse_cycles(cycles, degree);
}

std::string print_cycles(const Perm& p) {
  std::ostringstream os;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::vector<std::vector<Dart>> orbits(std::span<const Perm> gens) {
  if (gens.empty()) return {};
  const std::size_t n = gens.front().degree();
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<Dart>> out;
  for (Dart s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    auto& orb = out.emplace_back();
    orb.push_back(s);
    seen[s] = true;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& g : gens) {
        const Dart t = g(orb[k]);
        if (!seen[t]) {
          seen[t] = true;
          orb.push_back(t);
        }
      }
    std::sort(orb.begin(), orb.end());
  }
  return out;
}

bool is_transitive(std::span<const Perm> gens) { return orbits(gens).size() <= 1; }

PermTriple make_triple(const Perm& sigma0, const Perm& sigma1, int n) {
  using K = TripleError::Kind;
  if (sigma0.degree() != sigma1.degree() || sigma0.degree() == 0)
    throw TripleError(K::DegreeMismatch, "permutation triple: sigma0 and sigma1 must act on the same darts");
  if (n < 1) throw std::invalid_argument("permutation triple: relation order must be positive");
  if (!(sigma0 * sigma0).is_identity())
    throw TripleError(K::Sigma0NotInvolution, "permutation triple: sigma0^2 is not the identity");
  if (!sigma1.pow(n).is_identity())
    throw TripleError(K::Sigma1OrderMismatch,
                      "permutation triple: sigma1^" + std::to_string(n) + " is not the identity");
  const Perm gens[] = {sigma0, sigma1};
  if (!is_transitive(gens))
    throw TripleError(K::Intransitive, "permutation triple: <sigma0, sigma1> is not transitive");
  return PermTriple{sigma0, sigma1, (sigma0 * sigma1).inverse(), n};
}

int genus(const PermTriple& t) {
  const long chi = static_cast<long>(t.sigma0.cycle_count() + t.sigma1.cycle_count() + t.sigma_inf.cycle_count()) -
                   static_cast<long>(t.degree());
  if ((2 - chi) % 2 != 0 || 2 - chi < 0)
    throw std::invalid_argument("genus: Euler characteristic " + std::to_string(chi) + " is not of a closed surface");
  return static_cast<int>((2 - chi) / 2);
}

}  // namespace hecke
