#pragma once

// Decomposition of a matrix of H_n into a word in x and y by nearest-λ-multiple
// descent on the lower-left entry.

#include <cstddef>
#include <stdexcept>

#include "hecke/ring.hpp"
#include "hecke/words.hpp"

namespace hecke {

class RewriteError : public std::runtime_error {
 public:
  enum class Kind {
    NonTermination,     // step budget exhausted
    ResidueNotUnit,     // final upper-triangular matrix is not ±T^j
    VerificationFailed  // re-evaluation did not reproduce the input
  };
  RewriteError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct RewriteOptions {
  /// 0 selects the default budget: 10 steps per coefficient bit, at least 64.
  std::size_t max_steps = 0;
};

/// A word w with eval_matrix(w) = M in PSL. Throws RewriteError when M is not
/// reachable (not in H_n, or the descent does not finish within budget).
Word word_from_matrix(const Mat2& M, const RewriteOptions& opts = {});

/// The default step budget for M.
std::size_t rewrite_budget(const Mat2& M);

}  // namespace hecke
