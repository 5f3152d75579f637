#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <map>
#include <utility>

#include "hecke/perm.hpp"
#include "hecke/words.hpp"

namespace oracle {

// Letters for coset enumeration over <x, y | x^2 = y^n = 1>.
enum Letter : int { X = 0, Y = 1, YI = 2 };

inline std::vector<int> letters(const hecke::Word& w) {
  std::vector<int> out;
  for (const auto& s : w.syllables()) {
    if (s.is_x()) {
      out.push_back(X);
    } else {
      for (int k = 0; k < s.exp; ++k) out.push_back(Y);
    }
  }
  return out;
}

// Hasselgrove-Leech-Trotter coset enumeration with coincidence handling.
class ToddCoxeter {
 public:
  ToddCoxeter(int n, std::size_t max_cosets) : n_(n), max_(max_cosets) { new_coset(); }

  // Number of cosets of <gens> in C2 * Cn.
  std::size_t enumerate(const std::vector<std::vector<int>>& gens) {
    std::vector<std::vector<int>> rels{{X, X}, std::vector<int>(static_cast<std::size_t>(n_), Y)};
    for (const auto& g : gens) scan_and_fill(0, g);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (p_[c] != static_cast<int>(c)) continue;
      for (const auto& r : rels) {
        scan_and_fill(static_cast<int>(c), r);
        if (p_[c] != static_cast<int>(c)) break;
      }
      if (p_[c] != static_cast<int>(c)) continue;
      for (int a = 0; a < 3; ++a)
        if (table_[c][a] < 0) define(static_cast<int>(c), a);
    }
    std::size_t live = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) live += p_[c] == static_cast<int>(c);
    return live;
  }

 private:
  static int inv(int a) { return a == X ? X : (a == Y ? YI : Y); }

  int new_coset() {
    if (table_.size() >= max_) throw std::runtime_error("coset enumeration: too many cosets");
    table_.push_back({-1, -1, -1});
    p_.push_back(static_cast<int>(p_.size()));
    return static_cast<int>(table_.size() - 1);
  }

  void define(int c, int a) {
    const int d = new_coset();
    table_[c][a] = d;
    table_[d][inv(a)] = c;
  }

  int rep(int c) {
    int r = c;
    while (p_[r] != r) r = p_[r];
    while (p_[c] != r) {
      const int next = p_[c];
      p_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& q) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    p_[l] = k;
    q.push_back(l);
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      const int e = q.front();
      q.pop_front();
      for (int x = 0; x < 3; ++x) {
        const int f = table_[e][x];
        if (f < 0) continue;
        table_[f][inv(x)] = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] >= 0)
          merge(f1, table_[e1][x], q);
        else if (table_[f1][inv(x)] >= 0)
          merge(e1, table_[f1][inv(x)], q);
        else {
          table_[e1][x] = f1;
          table_[f1][inv(x)] = e1;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    std::size_t i = 0, j = w.size() - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] >= 0) {
        f = table_[f][w[i]];
        ++i;
        if (i == w.size()) break;
      }
      if (i > j || i == w.size()) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) {
        b = table_[b][inv(w[j])];
        if (j == 0) break;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int n_;
  std::size_t max_;
  std::vector<std::array<int, 3>> table_;
  std::vector<int> p_;
};

inline std::size_t coset_count(int n, const std::vector<hecke::Word>& gens, std::size_t max_cosets = 2'000'000) {
  std::vector<std::vector<int>> ls;
  for (const auto& g : gens) ls.push_back(letters(g));
  ToddCoxeter tc(n, max_cosets);
  return tc.enumerate(ls);
}

// |PSL(2, Z/N)| by counting determinant-one matrices.
inline std::uint64_t psl2_order_bruteforce(int N) {
  if (N == 1) return 1;
  std::uint64_t count = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d)
          if (((a * d - b * c) % N + N) % N == 1 % N) ++count;
  return N > 2 ? count / 2 : count;
}

// |PSL(2, Z/N)| = N^3/2 · prod over p | N of (1 - p^-2), no halving at N = 2.
inline std::uint64_t psl2_order_formula(int N) {
  double v = static_cast<double>(N) * N * N;
  int m = N;
  for (int p = 2; p <= m; ++p)
    if (m % p == 0) {
      v *= 1.0 - 1.0 / (static_cast<double>(p) * p);
      while (m % p == 0) m /= p;
    }
  if (N > 2) v /= 2;
  return static_cast<std::uint64_t>(v + 0.5);
}

inline hecke::Word random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), yexp(1, n - 1);
  hecke::Word w(n);
  const int L = len(rng);
  bool x_next = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  for (int i = 0; i < L; ++i) {
    if (x_next)
      w.push(hecke::Syllable::Kind::X, 1);
    else
      w.push(hecke::Syllable::Kind::Y, yexp(rng));
    x_next = !x_next;
  }
  return w;
}

// Right-regular action of the image of H_n in PSL(2, Z[λ]/(m)) on itself:
// points are group elements g, x sends g to g·x and y sends g to g·y.
inline std::pair<hecke::Perm, hecke::Perm> regular_action(int n, std::int64_t m) {
  using Key = std::vector<std::int64_t>;
  const hecke::HeckeIndex h(n);
  const auto g = hecke::hecke_generators(h);
  const auto d = static_cast<std::size_t>(hecke::minpoly(h).degree());
  // plain polynomial multiplication then reduction by the minimal polynomial
  const auto mp = hecke::minpoly(h);
  auto mod = [m](std::int64_t v) { return ((v % m) + m) % m; };
  auto mul_elt = [&](const std::int64_t* u, const std::int64_t* v, std::int64_t* out) {
    std::vector<std::int64_t> prod(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) prod[i + j] = mod(prod[i + j] + u[i] * v[j]);
    for (std::size_t k = 2 * d - 1; k >= d; --k) {
      const std::int64_t top = prod[k];
      prod[k] = 0;
      for (std::size_t j = 0; j < d; ++j) prod[k - d + j] = mod(prod[k - d + j] - top * mp.coeffs[j].get_si());
    }
    for (std::size_t i = 0; i < d; ++i) out[i] = prod[i];
  };
  auto mul = [&](const Key& A, const Key& B) {
    Key C(4 * d, 0);
    std::vector<std::int64_t> t(d);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        for (int k = 0; k < 2; ++k) {
          mul_elt(&A[(2 * r + k) * d], &B[(2 * k + c) * d], t.data());
          for (std::size_t i = 0; i < d; ++i) C[(2 * r + c) * d + i] = mod(C[(2 * r + c) * d + i] + t[i]);
        }
    return C;
  };
  auto canon = [&](Key A) {
    Key B = A;
    for (auto& v : B) v = mod(-v);
    return std::min(A, B);
  };
  auto key_of = [&](const hecke::Mat2& M) {
    Key k;
    for (const auto& e : M.entries())
      for (std::size_t i = 0; i < d; ++i) k.push_back(mod(hecke::BigInt(e.coeff(static_cast<int>(i)) % m).get_si()));
    return canon(k);
  };
  const Key X = key_of(g.x), Y = key_of(g.y), I = key_of(hecke::Mat2::identity(h));
  std::map<Key, hecke::Dart> id;
  std::vector<Key> elts{I};
  id[I] = 1;
  for (std::size_t i = 0; i < elts.size(); ++i)
    for (const Key* s : {&X, &Y}) {
      Key nk = canon(mul(elts[i], *s));
      if (!id.count(nk)) {
        id[nk] = static_cast<hecke::Dart>(elts.size() + 1);
        elts.push_back(nk);
      }
    }
  std::vector<hecke::Dart> xi, yi;
  for (const auto& e : elts) {
    xi.push_back(id.at(canon(mul(e, X))));
    yi.push_back(id.at(canon(mul(e, Y))));
  }
  return {hecke::Perm::from_images(xi), hecke::Perm::from_images(yi)};
}

}  // namespace oracle
