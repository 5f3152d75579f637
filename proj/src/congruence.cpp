#include "hecke/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace hecke {

std::uint64_t level(const PermTriple& t) { return (t.sigma0 * t.sigma1).order(); }

namespace {

using Flat = std::vector<std::int64_t>;

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    ps.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

// Canonical representative of {M, -M}: the lexicographically smaller one.
void canonicalize(Flat& a, std::int64_t m) {
  Flat neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = a[i] ? m - a[i] : 0;
  if (neg < a) a.swap(neg);
}

struct PackedKeys {
  int bits;
  bool fits;
  std::uint64_t pack(const Flat& a) const {
    std::uint64_t k = 0;
    for (auto v : a) k = (k << bits) | static_cast<std::uint64_t>(v);
    return k;
  }
  Flat unpack(std::uint64_t k, std::size_t len) const {
    Flat a(len);
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (std::size_t i = len; i-- > 0;) {
      a[i] = static_cast<std::int64_t>(k & mask);
      k >>= bits;
    }
    return a;
  }
};

std::string string_key(const Flat& a) {
  return std::string(reinterpret_cast<const char*>(a.data()), a.size() * sizeof(std::int64_t));
}

Flat from_string_key(const std::string& s) {
  Flat a(s.size() / sizeof(std::int64_t));
  std::copy(s.begin(), s.end(), reinterpret_cast<char*>(a.data()));
  return a;
}

template <class Key, class Enc, class Dec>
std::uint64_t closure(const ResidueRing& ring, const std::vector<Flat>& gens, std::uint64_t cap, Enc enc, Dec dec) {
  const std::size_t len = static_cast<std::size_t>(4 * ring.degree());
  const std::int64_t m = ring.modulus();
  Flat id(len, 0);
  id[0] = 1 % m;
  id[3 * static_cast<std::size_t>(ring.degree())] = 1 % m;
  canonicalize(id, m);

  std::unordered_set<Key> seen{enc(id)};
  std::vector<Key> elems{enc(id)};
  std::vector<Flat> useful;
  Flat prod(len);
  // Right-multiplies elements [from, end) by every useful generator.
  auto expand = [&](std::size_t from) {
    for (std::size_t k = from; k < elems.size(); ++k) {
      const Flat e = dec(elems[k]);
      for (std::size_t g = 0; g < useful.size(); ++g) {
        ring.mat_mul(e, useful[g], prod);
        Flat c = prod;
        canonicalize(c, m);
        Key key = enc(c);
        if (seen.insert(key).second) {
          elems.push_back(std::move(key));
          if (elems.size() > cap)
            throw ResourceExhausted("closure mod " + std::to_string(m) + " exceeds " + std::to_string(cap) +
                                    " elements");
        }
      }
    }
  };
  for (const auto& g : gens) {
    Flat c = g;
    canonicalize(c, m);
    if (seen.count(enc(c))) continue;
    useful.push_back(g);
    const std::size_t old = elems.size();
    // Old elements only need the new generator; new elements need all.
    for (std::size_t k = 0; k < old; ++k) {
      const Flat e = dec(elems[k]);
      ring.mat_mul(e, useful.back(), prod);
      Flat p = prod;
      canonicalize(p, m);
      Key key = enc(p);
      if (seen.insert(key).second) elems.push_back(std::move(key));
    }
    expand(old);
    if (elems.size() > cap)
      throw ResourceExhausted("closure mod " + std::to_string(m) + " exceeds " + std::to_string(cap) + " elements");
  }
  return elems.size();
}

}  // namespace

std::uint64_t psl2_mod_image(std::span<const Mat2> gens, HeckeIndex n, std::int64_t m, std::uint64_t cap) {
  if (m < 2) throw std::invalid_argument("psl2_mod_image: modulus must be >= 2");
  const ResidueRing ring(n, m);
  std::vector<Flat> flat;
  for (const auto& g : gens) {
    if (g.index() != n) throw std::invalid_argument("psl2_mod_image: generator from a different Hecke group");
    flat.push_back(reduce_mod(g, m).plus.data);
  }
  const std::size_t len = static_cast<std::size_t>(4 * ring.degree());
  int bits = 1;
  while ((std::int64_t{1} << bits) < m) ++bits;
  const PackedKeys pk{bits, static_cast<std::size_t>(bits) * len <= 64};
  if (pk.fits)
    return closure<std::uint64_t>(
        ring, flat, cap, [&](const Flat& a) { return pk.pack(a); },
        [&](std::uint64_t k) { return pk.unpack(k, len); });
  return closure<std::string>(ring, flat, cap, string_key, from_string_key);
}

std::uint64_t psl2_order(std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t num = m * m * m;
  for (auto p : prime_factors(m)) num = num / (p * p) * (p * p - 1);
  return m > 2 ? num / 2 : num;
}

std::uint64_t gamma0_index(std::uint64_t m) {
  std::uint64_t r = m;
  for (auto p : prime_factors(m)) r = r / p * (p + 1);
  return r;
}

std::uint64_t gamma1_index(std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t r = m * m;
  for (auto p : prime_factors(m)) r = r / (p * p) * (p * p - 1);
  return m > 2 ? r / 2 : r;
}

std::uint64_t gamma_index(std::uint64_t m) { return psl2_order(m); }

std::string to_string(Family f) {
  switch (f) {
    case Family::Gamma: return "Gamma";
    case Family::Gamma0: return "Gamma0";
    case Family::Gamma1: return "Gamma1";
    case Family::HeckePrincipal: return "HeckePrincipal";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Congruence: return "congruence";
    case Verdict::Noncongruence: return "noncongruence";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::Gamma, Family::Gamma0, Family::Gamma1, Family::HeckePrincipal})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown family \"" + s + "\"");
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::Congruence, Verdict::Noncongruence, Verdict::NotApplicable})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict \"" + s + "\"");
}

std::string family_name(Family f, std::int64_t m, int n) {
  const std::string ms = std::to_string(m);
  switch (f) {
    case Family::Gamma: return "Γ(" + ms + ")";
    case Family::Gamma0: return "Γ0(" + ms + ")";
    case Family::Gamma1: return "Γ1(" + ms + ")";
    case Family::HeckePrincipal: return "H" + std::to_string(n) + "(" + ms + ")";
  }
  return "?";
}

namespace {

void classify_at(const GeneratorSet& gens, std::uint64_t m, std::vector<FamilyMatch>& out) {
  bool in0 = true, in1 = true, in = true;
  for (const auto& g : gens.matrices) {
    if (g.index().value() != 3) throw std::invalid_argument("classify_modular: needs n = 3 matrices");
    const auto r = reduce_mod(g, static_cast<std::int64_t>(m));
    in0 = in0 && r.lower_left_zero();
    in1 = in1 && r.is_pm_upper_unipotent();
    in = in && r.is_pm_identity();
  }
  const std::int64_t mm = static_cast<std::int64_t>(m);
  auto add = [&](Family f, bool c, std::uint64_t idx) {
    if (c) out.push_back(FamilyMatch{f, mm, true, gens.index == idx, idx});
  };
  add(Family::Gamma, in, gamma_index(m));
  add(Family::Gamma0, in0, gamma0_index(m));
  add(Family::Gamma1, in1, gamma1_index(m));
}

}  // namespace

std::vector<FamilyMatch> classify_modular(const GeneratorSet& gens, std::uint64_t max_m) {
  std::vector<FamilyMatch> out;
  for (std::uint64_t m = 2; m <= max_m; ++m) classify_at(gens, m, out);
  return out;
}

bool is_congruence_modular(const PermTriple& t, const GeneratorSet& gens, std::uint64_t cap) {
  const std::uint64_t N = level(t);
  if (N == 1) return gens.index == 1;
  const std::uint64_t image = psl2_mod_image(gens.matrices, HeckeIndex(3), static_cast<std::int64_t>(N), cap);
  return gens.index * image == psl2_order(N);
}

HeckeContainment hecke_principal_containment(const GeneratorSet& gens, HeckeIndex n, std::int64_t m,
                                             std::uint64_t cap) {
  HeckeContainment h;
  h.contained = std::all_of(gens.matrices.begin(), gens.matrices.end(),
                            [&](const Mat2& g) { return reduce_mod(g, m).is_pm_identity(); });
  if (!h.contained) return h;
  const auto xy = hecke_generators(n);
  const Mat2 both[] = {xy.x, xy.y};
  try {
    h.image_order = psl2_mod_image(both, n, m, cap);
    h.equality = h.image_order == gens.index;
  } catch (const ResourceExhausted&) {
    h.equality.reset();
  }
  return h;
}

namespace {

int rank(Family f) {
  switch (f) {
    case Family::Gamma: return 0;
    case Family::Gamma0: return 1;
    case Family::Gamma1: return 2;
    case Family::HeckePrincipal: return 3;
  }
  return 4;
}

}  // namespace

CongruenceReport analyze_congruence(const PermTriple& t, const GeneratorSet& gens, const CongruenceOptions& opts) {
  if (gens.matrices.empty() && gens.index > 1)
    throw std::invalid_argument("congruence: matrix generators are required");
  CongruenceReport rep;
  rep.level = level(t);
  const int n = t.n;
  std::vector<std::int64_t> moduli;
  for (std::uint64_t m = 2; m <= rep.level; ++m) moduli.push_back(static_cast<std::int64_t>(m));
  for (auto m : opts.extra_moduli)
    if (m >= 2 && std::find(moduli.begin(), moduli.end(), m) == moduli.end()) moduli.push_back(m);

  if (n == 3) {
    if (rep.level == 1) {
      rep.image_order = 1;
    } else {
      rep.image_order = psl2_mod_image(gens.matrices, HeckeIndex(3), static_cast<std::int64_t>(rep.level),
                                       opts.max_closure);
    }
    rep.verdict = gens.index * rep.image_order == psl2_order(rep.level) ? Verdict::Congruence : Verdict::Noncongruence;
    for (auto m : moduli) classify_at(gens, static_cast<std::uint64_t>(m), rep.family_matches);
  } else {
    rep.verdict = Verdict::NotApplicable;
    for (auto m : moduli) {
      const auto h = hecke_principal_containment(gens, HeckeIndex(n), m, opts.max_closure);
      if (!h.contained) continue;
      rep.family_matches.push_back(FamilyMatch{Family::HeckePrincipal, m, true, h.equality, h.image_order});
      if (rep.image_order == 0) rep.image_order = h.image_order;
    }
  }
  for (const auto& f : rep.family_matches) {
    if (f.equal != true) continue;
    if (!rep.classification || rank(f.family) < rank(rep.classification->family) ||
        (rank(f.family) == rank(rep.classification->family) && f.m < rep.classification->m))
      rep.classification = f;
  }
  return rep;
}

}  // namespace hecke
