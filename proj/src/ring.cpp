#include "hecke/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

HeckeIndex::HeckeIndex(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("Hecke index must be >= 3, got " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Minimal polynomials

namespace {

using Poly = std::vector<BigInt>;  // ascending coefficients

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact division by a monic polynomial; the remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) throw std::logic_error("poly_div_exact: degree too small");
  Poly q(num.size() - dn, BigInt(0));
  for (std::size_t k = num.size(); k-- > dn;) {
    BigInt coef = num[k];
    if (coef == 0) continue;
    q[k - dn] = coef;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= coef * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  trim(q);
  return q;
}

Poly cyclotomic(int m) {
  static std::mutex mu;
  static std::map<int, Poly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  Poly num(static_cast<std::size_t>(m) + 1, BigInt(0));
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  Poly den{BigInt(1)};
  for (int d = 1; d < m; ++d)
    if (m % d == 0) den = poly_mul(den, cyclotomic(d));
  Poly result = poly_div_exact(num, den);
  std::lock_guard lock(mu);
  memo.emplace(m, result);
  return result;
}

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace

MinPoly minpoly(HeckeIndex index) {
  const int n = index.value();
  // Φ_{2n}(z) is palindromic of degree 2k; z^{-k} Φ_{2n}(z) is a polynomial
  // in t = z + 1/z, using z^j + z^{-j} = D_j(t), D_j = t D_{j-1} - D_{j-2}.
  const Poly phi = cyclotomic(2 * n);
  const std::size_t k = (phi.size() - 1) / 2;
  std::vector<Poly> D;
  D.push_back(Poly{BigInt(2)});
  D.push_back(Poly{BigInt(0), BigInt(1)});
  for (std::size_t j = 2; j <= k; ++j) {
    Poly next = poly_mul(D[j - 1], Poly{BigInt(0), BigInt(1)});
    for (std::size_t i = 0; i < D[j - 2].size(); ++i) next[i] -= D[j - 2][i];
    trim(next);
    D.push_back(std::move(next));
  }
  Poly q(k + 1, BigInt(0));
  q[0] = phi[k];
  for (std::size_t j = 1; j <= k; ++j) {
    const BigInt& s = phi[k + j];
    for (std::size_t i = 0; i < D[j].size(); ++i) q[i] += s * D[j][i];
  }
  trim(q);
  if (static_cast<int>(q.size()) - 1 != euler_phi(2 * n) / 2 || q.back() != 1)
    throw std::logic_error("minpoly: unexpected degree");
  return MinPoly{q};
}

std::optional<MinPoly> tabulated_minpoly(int n) {
  auto P = [](std::initializer_list<long> c) {
    MinPoly p;
    for (long v : c) p.coeffs.emplace_back(v);
    return p;
  };
  switch (n) {
    case 3: return P({-1, 1});      // λ = 1
    case 4: return P({-2, 0, 1});   // λ = √2
    case 5: return P({-1, -1, 1});  // golden ratio
    case 6: return P({-3, 0, 1});   // λ = √3
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Ring context

namespace detail {

struct RingData {
  int n = 3;
  int d = 1;
  std::vector<BigInt> mp;  // monic minimal polynomial, size d + 1
  double lambda = 1.0;
  // λ lies in [lo, hi]; both endpoints are doubles and the rational
  // interval [qlo, qhi] has exactly the same endpoints.
  double lo = 1.0;
  double hi = 1.0;
  mpq_class qlo;
  mpq_class qhi;
  int sign_at_qlo = 0;
};

namespace {

int sign_of(const mpq_class& q) { return sgn(q); }

mpq_class eval_q(const std::vector<BigInt>& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + mpq_class(p[i]);
  return acc;
}

std::unique_ptr<RingData> make_ring(int n) {
  auto r = std::make_unique<RingData>();
  r->n = n;
  r->mp = minpoly(HeckeIndex(n)).coeffs;
  r->d = static_cast<int>(r->mp.size()) - 1;
  r->lambda = 2.0 * std::cos(std::numbers::pi / n);
  if (r->d == 1) {
    // n = 3 is the only case with λ rational.
    r->lambda = r->lo = r->hi = 1.0;
    r->qlo = r->qhi = 1;
    return r;
  }
  constexpr double kHalfWidth = 1e-12;
  r->lo = r->lambda - kHalfWidth;
  r->hi = r->lambda + kHalfWidth;
  r->qlo = mpq_class(r->lo);
  r->qhi = mpq_class(r->hi);
  const int slo = sign_of(eval_q(r->mp, r->qlo));
  const int shi = sign_of(eval_q(r->mp, r->qhi));
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::logic_error("ring: failed to isolate 2cos(pi/n) for n=" + std::to_string(n));
  // The other conjugates 2cos(jπ/n) must stay clear of the isolating interval.
  for (int j = 3; j < n; j += 2) {
    if (std::gcd(j, 2 * n) != 1) continue;
    const double other = 2.0 * std::cos(j * std::numbers::pi / n);
    if (std::abs(other - r->lambda) < 1e3 * kHalfWidth)
      throw std::invalid_argument("ring: n too large to isolate λ_n: " + std::to_string(n));
  }
  r->sign_at_qlo = slo;
  return r;
}

}  // namespace

const RingData& ring_data(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RingData>> rings;
  std::lock_guard lock(mu);
  auto& slot = rings[n];
  if (!slot) slot = make_ring(n);
  return *slot;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sign

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double v) { return std::nextafter(v, -kInf); }
double up(double v) { return std::nextafter(v, kInf); }

// Interval evaluation in doubles with outward rounding after every
// operation. Returns 0 when the enclosure straddles zero.
int filtered_sign(const detail::RingData& r, std::span<const BigInt> c) {
  double slo = 0.0, shi = 0.0, plo = 1.0, phi = 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) {
      if (mpz_sizeinbase(c[i].get_mpz_t(), 2) > 900) return 0;
      const double cd = c[i].get_d();  // truncated toward zero
      const double clo = down(cd), chi = up(cd);
      const double tlo = down(clo >= 0 ? clo * plo : clo * phi);
      const double thi = up(chi >= 0 ? chi * phi : chi * plo);
      slo = down(slo + tlo);
      shi = up(shi + thi);
    }
    plo = down(plo * r.lo);
    phi = up(phi * r.hi);
  }
  if (slo > 0) return 1;
  if (shi < 0) return -1;
  return 0;
}

int exact_sign(const detail::RingData& r, std::span<const BigInt> c) {
  mpq_class lo = r.qlo, hi = r.qhi;
  for (;;) {
    mpq_class slo = 0, shi = 0, plo = 1, phi = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] > 0) {
        slo += c[i] * plo;
        shi += c[i] * phi;
      } else if (c[i] < 0) {
        slo += c[i] * phi;
        shi += c[i] * plo;
      }
      plo *= lo;
      phi *= hi;
    }
    if (slo > 0) return 1;
    if (shi < 0) return -1;
    mpq_class mid = (lo + hi) / 2;
    const int smid = sgn(detail::eval_q(r.mp, mid));
    if (smid == 0) {
      // Only reachable if λ were rational, which needs d = 1.
      throw std::logic_error("exact_sign: λ hit a rational bisection point");
    }
    if (smid == r.sign_at_qlo)
      lo = mid;
    else
      hi = mid;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraicInt

AlgebraicInt::AlgebraicInt(HeckeIndex n)
    : ring_(&detail::ring_data(n.value())), c_(static_cast<std::size_t>(ring_->d), BigInt(0)) {}

AlgebraicInt::AlgebraicInt(HeckeIndex n, long value) : AlgebraicInt(n) { c_[0] = value; }

AlgebraicInt::AlgebraicInt(HeckeIndex n, const BigInt& value) : AlgebraicInt(n) { c_[0] = value; }

AlgebraicInt AlgebraicInt::from_coeffs(HeckeIndex n, std::vector<BigInt> p) {
  const auto& r = detail::ring_data(n.value());
  const std::size_t d = static_cast<std::size_t>(r.d);
  for (std::size_t k = p.size(); k-- > d;) {
    BigInt coef = p[k];
    if (coef == 0) continue;
    for (std::size_t j = 0; j < d; ++j) p[k - d + j] -= coef * r.mp[j];
    p[k] = 0;
  }
  p.resize(d, BigInt(0));
  return AlgebraicInt(&r, std::move(p));
}

AlgebraicInt AlgebraicInt::lambda(HeckeIndex n) {
  return from_coeffs(n, {BigInt(0), BigInt(1)});
}

HeckeIndex AlgebraicInt::index() const noexcept { return HeckeIndex(ring_->n); }

bool AlgebraicInt::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
}

bool AlgebraicInt::is_integer() const noexcept {
  return std::all_of(c_.begin() + 1, c_.end(), [](const BigInt& v) { return v == 0; });
}

int AlgebraicInt::sign() const {
  if (is_zero()) return 0;
  if (is_integer()) return sgn(c_[0]);
  if (int s = filtered_sign(*ring_, c_); s != 0) return s;
  return exact_sign(*ring_, c_);
}

int sign(const AlgebraicInt& u) { return u.sign(); }

double AlgebraicInt::approx() const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * ring_->lambda + c_[i].get_d();
  return acc;
}

std::string AlgebraicInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const BigInt& v = c_[i];
    if (v == 0) continue;
    BigInt mag = abs(v);
    if (v < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "λ";
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

void AlgebraicInt::check_same_ring(const AlgebraicInt& o) const {
  if (ring_ != o.ring_)
    throw std::invalid_argument("AlgebraicInt: mismatched Hecke indices " + std::to_string(ring_->n) +
                                " and " + std::to_string(o.ring_->n));
}

AlgebraicInt& AlgebraicInt::operator+=(const AlgebraicInt& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgebraicInt& AlgebraicInt::operator-=(const AlgebraicInt& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgebraicInt operator*(const AlgebraicInt& u, const AlgebraicInt& v) {
  u.check_same_ring(v);
  const std::size_t d = u.c_.size();
  if (d == 1) return AlgebraicInt(u.ring_, {u.c_[0] * v.c_[0]});
  std::vector<BigInt> p(2 * d - 1, BigInt(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (u.c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) p[i + j] += u.c_[i] * v.c_[j];
  }
  const auto& mp = u.ring_->mp;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) p[k - d + j] -= p[k] * mp[j];
  }
  p.resize(d);
  return AlgebraicInt(u.ring_, std::move(p));
}

AlgebraicInt& AlgebraicInt::operator*=(const AlgebraicInt& o) { return *this = *this * o; }

AlgebraicInt operator-(AlgebraicInt u) {
  for (auto& v : u.c_) v = -v;
  return u;
}

bool operator==(const AlgebraicInt& u, const AlgebraicInt& v) {
  return u.ring_ == v.ring_ && u.c_ == v.c_;
}

std::size_t AlgebraicInt::bit_length() const {
  std::size_t bits = 0;
  for (const auto& v : c_)
    if (v != 0) bits += mpz_sizeinbase(v.get_mpz_t(), 2);
  return bits;
}

// ---------------------------------------------------------------------------
// Mat2

Mat2::Mat2(AlgebraicInt a, AlgebraicInt b, AlgebraicInt c, AlgebraicInt d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  const HeckeIndex n = e_[0].index();
  for (const auto& v : e_)
    if (v.index() != n) throw std::invalid_argument("Mat2: entries from different rings");
  if (!(e_[0] * e_[3] - e_[1] * e_[2] == AlgebraicInt(n, 1)))
    throw std::invalid_argument("Mat2: determinant is not 1");
  normalize_sign();
}

Mat2::Mat2(Trusted, std::array<AlgebraicInt, 4> e) : e_(std::move(e)) { normalize_sign(); }

void Mat2::normalize_sign() {
  for (const auto& v : e_) {
    const int s = v.sign();
    if (s == 0) continue;
    if (s < 0)
      for (auto& w : e_) w = -std::move(w);
    return;
  }
}

Mat2 Mat2::identity(HeckeIndex n) {
  return Mat2(Trusted{}, {AlgebraicInt(n, 1), AlgebraicInt(n), AlgebraicInt(n), AlgebraicInt(n, 1)});
}

bool Mat2::is_identity() const { return *this == identity(index()); }

Mat2 Mat2::inverse() const { return Mat2(Trusted{}, {e_[3], -e_[1], -e_[2], e_[0]}); }

Mat2 operator*(const Mat2& A, const Mat2& B) {
  const auto& a = A.e_;
  const auto& b = B.e_;
  return Mat2(Mat2::Trusted{}, {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                                a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]});
}

std::size_t Mat2::bit_length() const {
  std::size_t bits = 0;
  for (const auto& v : e_) bits += v.bit_length();
  return bits;
}

std::string Mat2::to_string() const {
  return "[[" + e_[0].to_string() + "," + e_[1].to_string() + "],[" + e_[2].to_string() + "," +
         e_[3].to_string() + "]]";
}

HeckeGenerators hecke_generators(HeckeIndex n) {
  const AlgebraicInt zero(n), one(n, 1), lam = AlgebraicInt::lambda(n);
  Mat2 x(zero, -one, one, zero);
  Mat2 y(zero, -one, one, lam);
  Mat2 T(one, lam, zero, one);
  return HeckeGenerators{x, y, x, T};
}

// ---------------------------------------------------------------------------
// Residues

namespace {

std::int64_t mod_floor(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

std::vector<std::int64_t> reduce_mod(const AlgebraicInt& u, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(u.degree()));
  BigInt r;
  for (const auto& c : u.coeffs()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m));
    out.push_back(static_cast<std::int64_t>(r.get_ui()));
  }
  return out;
}

ResiduePair reduce_mod(const Mat2& A, std::int64_t m) {
  ResidueMatrix plus;
  plus.n = A.index().value();
  plus.modulus = m;
  plus.degree = A.a().degree();
  for (const auto& e : A.entries()) {
    auto r = reduce_mod(e, m);
    plus.data.insert(plus.data.end(), r.begin(), r.end());
  }
  ResidueMatrix minus = plus.negated();
  return ResiduePair{std::move(plus), std::move(minus)};
}

bool ResidueMatrix::entry_is_zero(int k) const {
  for (auto v : entry(k))
    if (v != 0) return false;
  return true;
}

bool ResidueMatrix::entry_is_one(int k) const {
  auto e = entry(k);
  if (e[0] != 1 % modulus) return false;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] != 0) return false;
  return true;
}

ResidueMatrix ResidueMatrix::negated() const {
  ResidueMatrix r = *this;
  for (auto& v : r.data) v = mod_floor(-v, modulus);
  return r;
}

bool ResidueMatrix::is_identity() const {
  return entry_is_one(0) && entry_is_zero(1) && entry_is_zero(2) && entry_is_one(3);
}

bool ResidueMatrix::is_upper_unipotent() const {
  return entry_is_one(0) && entry_is_zero(2) && entry_is_one(3);
}

bool ResidueMatrix::lower_left_zero() const { return entry_is_zero(2); }

ResidueRing::ResidueRing(HeckeIndex n, std::int64_t m) : n_(n.value()), m_(m) {
  if (m < 2 || m > (std::int64_t{1} << 30))
    throw std::invalid_argument("ResidueRing: modulus out of range");
  const auto& r = detail::ring_data(n_);
  d_ = r.d;
  if (d_ > 16) throw std::invalid_argument("ResidueRing: degree of λ_n too large");
  for (int j = 0; j < d_; ++j) {
    BigInt v = -r.mp[static_cast<std::size_t>(j)];
    BigInt rem;
    mpz_fdiv_r_ui(rem.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
    reduction_.push_back(static_cast<std::int64_t>(rem.get_ui()));
  }
}

void ResidueRing::mul(std::span<const std::int64_t> u, std::span<const std::int64_t> v,
                      std::span<std::int64_t> out) const {
  if (d_ == 1) {
    out[0] = (u[0] * v[0]) % m_;
    return;
  }
  std::int64_t p[64] = {};
  const int len = 2 * d_ - 1;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) p[i + j] = (p[i + j] + u[i] * v[j]) % m_;
  for (int k = len - 1; k >= d_; --k) {
    if (p[k] == 0) continue;
    for (int j = 0; j < d_; ++j) p[k - d_ + j] = (p[k - d_ + j] + p[k] * reduction_[j]) % m_;
  }
  for (int i = 0; i < d_; ++i) out[i] = p[i];
}

void ResidueRing::mat_mul(std::span<const std::int64_t> A, std::span<const std::int64_t> B,
                          std::span<std::int64_t> out) const {
  const std::size_t d = static_cast<std::size_t>(d_);
  std::int64_t t1[32], t2[32];
  auto blk = [d](auto s, int k) { return s.subspan(static_cast<std::size_t>(k) * d, d); };
  const int rows[4][4] = {{0, 0, 1, 2}, {0, 1, 1, 3}, {2, 0, 3, 2}, {2, 1, 3, 3}};
  for (int k = 0; k < 4; ++k) {
    mul(blk(A, rows[k][0]), blk(B, rows[k][1]), std::span<std::int64_t>(t1, d));
    mul(blk(A, rows[k][2]), blk(B, rows[k][3]), std::span<std::int64_t>(t2, d));
    auto o = blk(out, k);
    for (std::size_t i = 0; i < d; ++i) o[i] = (t1[i] + t2[i]) % m_;
  }
}

AlgebraicInt parse_algebraic(std::string_view text, HeckeIndex n) {
  static const std::string_view kLambda = "λ";
  std::vector<BigInt> coeffs;
  std::size_t i = 0;
  auto bad = [&] { return std::invalid_argument("cannot parse algebraic integer \"" + std::string(text) + "\""); };
  auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_ws();
  if (i == text.size()) throw bad();
  bool first = true;
  while (i < text.size()) {
    int sgn = 1;
    if (text[i] == '+' || text[i] == '-') {
      sgn = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw bad();
    }
    first = false;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    const bool has_digits = j > i;
    BigInt c = has_digits ? BigInt(std::string(text.substr(i, j - i))) : BigInt(1);
    i = j;
    std::size_t power = 0;
    const bool has_lambda = text.substr(i, kLambda.size()) == kLambda || (i < text.size() && (text[i] == 'l' || text[i] == 'L'));
    if (has_lambda) {
      i += text[i] == 'l' || text[i] == 'L' ? 1 : kLambda.size();
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == i) throw bad();
        power = std::stoul(std::string(text.substr(i, k - i)));
        i = k;
      }
    } else if (!has_digits) {
      throw bad();
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sgn * c;
    skip_ws();
  }
  return AlgebraicInt::from_coeffs(n, std::move(coeffs));
}

}  // namespace hecke
