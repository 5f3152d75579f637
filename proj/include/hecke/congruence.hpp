#pragma once

// Congruence tests: Wohlfahrt level and verdict for the modular group,
// Γ/Γ1/Γ0 classification, and principal-congruence containment in H_n.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/perm.hpp"
#include "hecke/ring.hpp"
#include "hecke/schreier.hpp"

namespace hecke {

class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultClosureCap = 10'000'000;

/// lcm of the cycle lengths of sigma0·sigma1, the action of T = xy.
std::uint64_t level(const PermTriple& t);

/// Order of the group generated by the residues of `gens` in 2x2 matrices
/// over Z[λ_n]/(m), modulo ±I. Throws ResourceExhausted beyond `cap`.
std::uint64_t psl2_mod_image(std::span<const Mat2> gens, HeckeIndex n, std::int64_t m,
                             std::uint64_t cap = kDefaultClosureCap);

/// |PSL(2, Z/m)|, and the PSL(2, Z) indices of Γ0(m), ±Γ1(m) and Γ(m).
std::uint64_t psl2_order(std::uint64_t m);
std::uint64_t gamma0_index(std::uint64_t m);
std::uint64_t gamma1_index(std::uint64_t m);
std::uint64_t gamma_index(std::uint64_t m);

enum class Family { Gamma, Gamma0, Gamma1, HeckePrincipal };
enum class Verdict { Congruence, Noncongruence, NotApplicable };

std::string family_name(Family f, std::int64_t m, int n = 3);
std::string to_string(Family f);
std::string to_string(Verdict v);
Family family_from_string(const std::string& s);
Verdict verdict_from_string(const std::string& s);

struct FamilyMatch {
  Family family = Family::Gamma;
  std::int64_t m = 2;
  bool contained = false;
  std::optional<bool> equal;       // nullopt when the index witness was not computable
  std::uint64_t family_index = 0;  // index of the family member in H_n; 0 if unknown

  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

/// Γ0, Γ1 and Γ containment for each m in 2..max_m; only contained families
/// are returned. Equality when the subgroup index matches the family index.
std::vector<FamilyMatch> classify_modular(const GeneratorSet& gens, std::uint64_t max_m);

/// Subgroup index equals [PSL(2,Z/N) : image mod N] with N = level(t).
bool is_congruence_modular(const PermTriple& t, const GeneratorSet& gens, std::uint64_t cap = kDefaultClosureCap);

struct HeckeContainment {
  bool contained = false;
  std::optional<bool> equality;
  std::uint64_t image_order = 0;  // |image of H_n mod m| when contained
};

HeckeContainment hecke_principal_containment(const GeneratorSet& gens, HeckeIndex n, std::int64_t m,
                                             std::uint64_t cap = kDefaultClosureCap);

struct CongruenceOptions {
  std::uint64_t max_closure = kDefaultClosureCap;
  std::vector<std::int64_t> extra_moduli;
};

struct CongruenceReport {
  std::uint64_t level = 1;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<FamilyMatch> family_matches;
  /// n = 3: order of the subgroup's image mod level. Otherwise the order of
  /// the image of H_n modulo the smallest m with H_n(m) contained (0 if none).
  std::uint64_t image_order = 0;
  std::optional<FamilyMatch> classification;

  friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

/// Full congruence analysis; requires matrix generators (single valency n).
CongruenceReport analyze_congruence(const PermTriple& t, const GeneratorSet& gens, const CongruenceOptions& opts = {});

}  // namespace hecke
