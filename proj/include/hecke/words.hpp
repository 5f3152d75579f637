#pragma once

// Normal-form words in the free product C2 * Cn = <x, y | x^2 = y^n = 1>.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/ring.hpp"

namespace hecke {

class Perm;

/// One syllable of a word: x, or y^k with 1 <= k <= n-1 once reduced.
struct Syllable {
  enum class Kind : std::uint8_t { X, Y };
  Kind kind = Kind::X;
  int exp = 1;

  static Syllable x() { return {Kind::X, 1}; }
  static Syllable y(int k) { return {Kind::Y, k}; }
  bool is_x() const { return kind == Kind::X; }

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Unreduced input token; exponents may be any integer.
struct RawToken {
  Syllable::Kind kind = Syllable::Kind::X;
  long exp = 1;

  static RawToken x(long e = 1) { return {Syllable::Kind::X, e}; }
  static RawToken y(long e = 1) { return {Syllable::Kind::Y, e}; }
};

/// Reduced word: no adjacent syllables of the same kind and every y exponent
/// in 1..n-1. The order n here is the y relation; it may be any n >= 1 so the
/// same type serves free-product dessins with a lcm relation.
class Word {
 public:
  explicit Word(int n);

  static Word reduce(std::span<const RawToken> raw, int n);
  static Word x(int n);
  static Word y(int n, int k = 1);

  int order() const noexcept { return n_; }
  const std::vector<Syllable>& syllables() const noexcept { return s_; }
  bool empty() const noexcept { return s_.empty(); }
  std::size_t size() const noexcept { return s_.size(); }

  /// Number of letters when y^k counts as min(k, n-k) letters y or y^-1.
  std::size_t letter_length() const;

  Word inverse() const;
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Appends one syllable and re-reduces at the seam.
  void push(Syllable::Kind kind, long exp);

  friend bool operator==(const Word&, const Word&) = default;

  /// Compact form such as "x.y2.x.y1"; the identity prints as "1".
  std::string to_string() const;
  /// Accepts the compact form; also "y" for y1, negative exponents, and
  /// "" or "1" for the identity.
  static Word parse(std::string_view text, int n);

 private:
  int n_;
  std::vector<Syllable> s_;
};

inline Word word_concat(const Word& u, const Word& v) { return u * v; }
inline Word word_inverse(const Word& u) { return u.inverse(); }

/// Product of the Hecke generator matrices in syllable order, in PSL.
Mat2 eval_matrix(const Word& w);
Mat2 eval_matrix(const Word& w, const HeckeGenerators& gens);

/// Image of w under x ↦ sigma0, y ↦ sigma1 with the right action
/// (point i under uv is (i·u)·v). Throws std::invalid_argument when
/// sigma0^2 or sigma1^n is not the identity.
Perm eval_perm(const Word& w, const Perm& sigma0, const Perm& sigma1);

/// Image of a single point under eval_perm(w, ...), without relation checks.
std::uint32_t act(std::uint32_t point, const Word& w, const Perm& sigma0, const Perm& sigma1);

}  // namespace hecke
