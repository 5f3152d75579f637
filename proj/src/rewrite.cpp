#include "hecke/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hecke {

namespace {

struct Entries {
  AlgebraicInt a, b, c, d;
};

// Sign of |u| - |v|.
int compare_abs(const AlgebraicInt& u, const AlgebraicInt& v) { return (u * u - v * v).sign(); }

// Integer k minimizing |a - kλc| for c != 0; ties go to the even k.
BigInt nearest_multiple(const AlgebraicInt& a, const AlgebraicInt& lc) {
  const HeckeIndex n = a.index();
  const int sc = lc.sign();
  // side(k) >= 0 iff k <= a/(λc)
  auto side = [&](const BigInt& k) { return (a - AlgebraicInt(n, k) * lc).sign() * sc; };

  BigInt lo;
  const double guess = a.approx() / lc.approx();
  if (std::isfinite(guess) && std::fabs(guess) < 1e15) lo = static_cast<long>(std::floor(guess));
  BigInt hi = lo + 1;
  BigInt step = 1;
  while (side(lo) < 0) {
    hi = lo;
    lo -= step;
    step *= 2;
  }
  step = 1;
  while (side(hi) >= 0) {
    lo = hi;
    hi += step;
    step *= 2;
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (side(mid) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  const AlgebraicInt r_lo = a - AlgebraicInt(n, lo) * lc;
  const AlgebraicInt r_hi = a - AlgebraicInt(n, hi) * lc;
  const int cmp = compare_abs(r_lo, r_hi);
  if (cmp < 0) return lo;
  if (cmp > 0) return hi;
  return mpz_even_p(lo.get_mpz_t()) ? lo : hi;
}

void emit_T(Word& w, const BigInt& k, int n) {
  if (sgn(k) == 0) return;
  if (!k.fits_slong_p()) throw RewriteError(RewriteError::Kind::NonTermination, "rewrite: translation power too large");
  const long kk = k.get_si();
  for (long i = 0; i < std::labs(kk); ++i) {
    if (kk > 0) {
      w.push(Syllable::Kind::X, 1);
      w.push(Syllable::Kind::Y, 1);
    } else {
      w.push(Syllable::Kind::Y, n - 1);
      w.push(Syllable::Kind::X, 1);
    }
  }
}

}  // namespace

std::size_t rewrite_budget(const Mat2& M) { return std::max<std::size_t>(64, 10 * M.bit_length()); }

Word word_from_matrix(const Mat2& M, const RewriteOptions& opts) {
  const HeckeIndex index = M.index();
  const int n = index.value();
  const AlgebraicInt lam = AlgebraicInt::lambda(index);
  const std::size_t budget = opts.max_steps ? opts.max_steps : rewrite_budget(M);

  Entries e{M.a(), M.b(), M.c(), M.d()};
  Word w(n);
  std::size_t steps = 0;
  while (!e.c.is_zero()) {
    if (++steps > budget)
      throw RewriteError(RewriteError::Kind::NonTermination,
                         "rewrite: no reduction to upper-triangular form within " + std::to_string(budget) +
                             " steps for " + M.to_string());
    const AlgebraicInt lc = lam * e.c;
    const BigInt k = nearest_multiple(e.a, lc);
    emit_T(w, k, n);
    w.push(Syllable::Kind::X, 1);
    const AlgebraicInt kl = AlgebraicInt(index, k) * lam;
    AlgebraicInt a2 = e.a - kl * e.c;
    AlgebraicInt b2 = e.b - kl * e.d;
    e = Entries{-e.c, -e.d, std::move(a2), std::move(b2)};
  }

  // Upper triangular with ad = 1: need a = ±1 and ab = jλ.
  const AlgebraicInt one(index, 1);
  if (!(e.a == one || e.a == -one))
    throw RewriteError(RewriteError::Kind::ResidueNotUnit,
                       "rewrite: diagonal entry " + e.a.to_string() + " is not ±1, " + M.to_string() + " is not in H_" +
                           std::to_string(n));
  const AlgebraicInt shift = e.a * e.b;
  const int lam_slot = lam.degree() == 1 ? 0 : 1;
  const BigInt j = shift.coeff(lam_slot);
  if (!(AlgebraicInt(index, j) * lam == shift))
    throw RewriteError(RewriteError::Kind::ResidueNotUnit,
                       "rewrite: translation " + shift.to_string() + " is not an integer multiple of λ, " +
                           M.to_string() + " is not in H_" + std::to_string(n));
  emit_T(w, j, n);

  if (!(eval_matrix(w) == M))
    throw RewriteError(RewriteError::Kind::VerificationFailed, "rewrite: re-evaluation mismatch for " + M.to_string());
  return w;
}

}  // namespace hecke
