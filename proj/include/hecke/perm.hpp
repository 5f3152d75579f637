#pragma once

// Permutations on darts 1..N (1-based, as in the published listings) and the
// permutation triple of a dessin.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

using Dart = std::uint32_t;

class Perm {
 public:
  Perm() = default;
  /// Identity of the given degree.
  explicit Perm(std::size_t degree);
  /// images[i-1] is the image of dart i; must be a bijection of 1..N.
  static Perm from_images(std::vector<Dart> images);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Dart>>& cycles);

  std::size_t degree() const noexcept { return img_.empty() ? 0 : img_.size() - 1; }
  Dart operator()(Dart i) const { return img_[i]; }
  Dart at(Dart i) const;

  /// Right action: i·(p*q) = (i·p)·q.
  friend Perm operator*(const Perm& p, const Perm& q);
  Perm inverse() const;
  Perm pow(long k) const;
  bool is_identity() const;

  /// Cycles including fixed points, each starting at its smallest dart,
  /// sorted by that dart.
  std::vector<std::vector<Dart>> cycles() const;
  std::size_t cycle_count() const;
  /// Cycle lengths, ascending.
  std::vector<std::size_t> cycle_type() const;
  /// lcm of cycle lengths.
  std::uint64_t order() const;

  /// Relabels darts: result(phi(i)) = phi(this(i)).
  Perm conjugate_by(const Perm& phi) const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<Dart> img_;  // img_[0] unused
};

/// Parses "(1,2)(3,4)" style text; commas between cycles and whitespace are
/// ignored. When degree is 0 the maximal moved dart is used. Throws
/// std::invalid_argument on repeated or out-of-range darts.
Perm parse_cycles(std::string_view text, std::size_t degree = 0);
Perm parse_cycles(const std::vector<std::vector<Dart>>& cycles, std::size_t degree = 0);

/// Disjoint cycle notation without fixed points; "()" for the identity.
std::string print_cycles(const Perm& p);

/// Orbits of the group generated by the given permutations.
std::vector<std::vector<Dart>> orbits(std::span<const Perm> gens);
bool is_transitive(std::span<const Perm> gens);

class TripleError : public std::invalid_argument {
 public:
  enum class Kind { DegreeMismatch, Sigma0NotInvolution, Sigma1OrderMismatch, Intransitive };
  TripleError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// (sigma0, sigma1, sigma_inf) with sigma0·sigma1·sigma_inf = 1 and n the
/// order bound of sigma1 (the y relation).
struct PermTriple {
  Perm sigma0;
  Perm sigma1;
  Perm sigma_inf;
  int n = 1;

  std::size_t degree() const noexcept { return sigma0.degree(); }
};

/// sigma_inf = (sigma0·sigma1)^-1. Throws TripleError.
PermTriple make_triple(const Perm& sigma0, const Perm& sigma1, int n);

/// Genus from 2 - 2g = c(sigma0) + c(sigma1) + c(sigma_inf) - N.
int genus(const PermTriple& t);

}  // namespace hecke
