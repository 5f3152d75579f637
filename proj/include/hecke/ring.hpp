#pragma once

// Exact arithmetic in Z[λ_n], λ_n = 2cos(π/n), and 2×2 unimodular matrices
// over it taken modulo ±I.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

using BigInt = mpz_class;

/// Index n of the Hecke group H_n = <x, y | x^2 = y^n = 1>; always n >= 3.
class HeckeIndex {
 public:
  explicit HeckeIndex(int n);

  int value() const noexcept { return n_; }

  friend auto operator<=>(const HeckeIndex&, const HeckeIndex&) = default;

 private:
  int n_;
};

/// Monic integer polynomial, coefficients listed from the constant term up.
struct MinPoly {
  std::vector<BigInt> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const MinPoly&, const MinPoly&) = default;
};

/// Minimal polynomial of 2cos(π/n), derived from the cyclotomic polynomial of
/// order 2n. Its degree is φ(2n)/2.
MinPoly minpoly(HeckeIndex n);

/// Hard-coded minimal polynomials for n = 3..6; nullopt elsewhere.
std::optional<MinPoly> tabulated_minpoly(int n);

namespace detail {
struct RingData;
const RingData& ring_data(int n);
}  // namespace detail

/// Element of Z[λ_n] stored as its coefficient vector in the power basis
/// 1, λ, ..., λ^{d-1} (always fully reduced, so equality is structural).
class AlgebraicInt {
 public:
  explicit AlgebraicInt(HeckeIndex n);
  AlgebraicInt(HeckeIndex n, long value);
  AlgebraicInt(HeckeIndex n, const BigInt& value);

  /// Reduces a coefficient vector of any length modulo the minimal polynomial.
  static AlgebraicInt from_coeffs(HeckeIndex n, std::vector<BigInt> coeffs);
  static AlgebraicInt lambda(HeckeIndex n);

  HeckeIndex index() const noexcept;
  int degree() const noexcept { return static_cast<int>(c_.size()); }
  std::span<const BigInt> coeffs() const noexcept { return c_; }
  const BigInt& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const noexcept;
  bool is_integer() const noexcept;

  /// Sign under the real embedding λ_n ↦ 2cos(π/n). Exact.
  int sign() const;

  /// Floating-point value; for display and heuristics only.
  double approx() const;

  /// Polynomial in λ, e.g. "1+2λ", "-λ", "3λ^2".
  std::string to_string() const;

  AlgebraicInt& operator+=(const AlgebraicInt& o);
  AlgebraicInt& operator-=(const AlgebraicInt& o);
  AlgebraicInt& operator*=(const AlgebraicInt& o);

  friend AlgebraicInt operator+(AlgebraicInt u, const AlgebraicInt& v) { return u += v; }
  friend AlgebraicInt operator-(AlgebraicInt u, const AlgebraicInt& v) { return u -= v; }
  friend AlgebraicInt operator*(const AlgebraicInt& u, const AlgebraicInt& v);
  friend AlgebraicInt operator-(AlgebraicInt u);

  friend bool operator==(const AlgebraicInt& u, const AlgebraicInt& v);

  /// Total bit length of the coefficients.
  std::size_t bit_length() const;

 private:
  AlgebraicInt(const detail::RingData* ring, std::vector<BigInt> c) : ring_(ring), c_(std::move(c)) {}
  void check_same_ring(const AlgebraicInt& o) const;

  const detail::RingData* ring_;
  std::vector<BigInt> c_;
};

int sign(const AlgebraicInt& u);

/// Inverse of AlgebraicInt::to_string ("1+2λ", "-λ", "3λ^2"); "l" may stand
/// in for λ.
AlgebraicInt parse_algebraic(std::string_view text, HeckeIndex n);

/// 2×2 matrix of determinant 1 over Z[λ_n], stored in canonical PSL sign:
/// the first nonzero entry in the order a, b, c, d is positive.
class Mat2 {
 public:
  /// Throws std::invalid_argument unless ad - bc = 1 and all entries share n.
  Mat2(AlgebraicInt a, AlgebraicInt b, AlgebraicInt c, AlgebraicInt d);

  static Mat2 identity(HeckeIndex n);

  HeckeIndex index() const noexcept { return e_[0].index(); }
  const AlgebraicInt& a() const noexcept { return e_[0]; }
  const AlgebraicInt& b() const noexcept { return e_[1]; }
  const AlgebraicInt& c() const noexcept { return e_[2]; }
  const AlgebraicInt& d() const noexcept { return e_[3]; }
  const std::array<AlgebraicInt, 4>& entries() const noexcept { return e_; }

  bool is_identity() const;
  Mat2 inverse() const;
  std::size_t bit_length() const;
  std::string to_string() const;

  friend Mat2 operator*(const Mat2& A, const Mat2& B);
  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  struct Trusted {};
  Mat2(Trusted, std::array<AlgebraicInt, 4> e);
  void normalize_sign();

  std::array<AlgebraicInt, 4> e_;
};

inline Mat2 mat_mul(const Mat2& A, const Mat2& B) { return A * B; }
inline Mat2 mat_inv(const Mat2& A) { return A.inverse(); }

struct HeckeGenerators {
  Mat2 x;  // [[0,-1],[1,0]]
  Mat2 y;  // [[0,-1],[1,λ]]
  Mat2 S;  // equal to x
  Mat2 T;  // [[1,λ],[0,1]]
};

HeckeGenerators hecke_generators(HeckeIndex n);

/// Matrix over Z[λ_n]/(m): four entries, each a coefficient vector of
/// length d with components in [0, m).
struct ResidueMatrix {
  int n = 3;
  std::int64_t modulus = 2;
  int degree = 1;
  std::vector<std::int64_t> data;  // entry-major: a[0..d), b[0..d), c[0..d), d[0..d)

  std::span<const std::int64_t> entry(int k) const {
    return std::span<const std::int64_t>(data).subspan(static_cast<std::size_t>(k * degree),
                                                        static_cast<std::size_t>(degree));
  }
  bool entry_is_zero(int k) const;
  bool entry_is_one(int k) const;

  ResidueMatrix negated() const;
  bool is_identity() const;
  bool is_upper_unipotent() const;  // [[1,*],[0,1]]
  bool lower_left_zero() const;

  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;
};

/// Both sign representatives of a matrix reduced modulo (m).
struct ResiduePair {
  ResidueMatrix plus;
  ResidueMatrix minus;

  bool is_pm_identity() const { return plus.is_identity() || minus.is_identity(); }
  bool is_pm_upper_unipotent() const {
    return plus.is_upper_unipotent() || minus.is_upper_unipotent();
  }
  bool lower_left_zero() const { return plus.lower_left_zero(); }
};

ResiduePair reduce_mod(const Mat2& A, std::int64_t m);

/// Residue of a single element, components in [0, m).
std::vector<std::int64_t> reduce_mod(const AlgebraicInt& u, std::int64_t m);

/// Multiplication in Z[λ_n]/(m) on reduced coefficient vectors.
class ResidueRing {
 public:
  ResidueRing(HeckeIndex n, std::int64_t m);

  int degree() const noexcept { return d_; }
  std::int64_t modulus() const noexcept { return m_; }
  int index() const noexcept { return n_; }

  /// out = u * v; out may not alias u or v.
  void mul(std::span<const std::int64_t> u, std::span<const std::int64_t> v,
           std::span<std::int64_t> out) const;
  /// out = A * B for matrices laid out as in ResidueMatrix::data.
  void mat_mul(std::span<const std::int64_t> A, std::span<const std::int64_t> B,
               std::span<std::int64_t> out) const;

 private:
  int n_;
  std::int64_t m_;
  int d_;
  std::vector<std::int64_t> reduction_;  // λ^d = Σ reduction_[j] λ^j (mod m)
};

}  // namespace hecke
