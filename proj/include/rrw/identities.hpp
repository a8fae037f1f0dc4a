#pragma once

// Machine-readable catalog of weighted Rogers-Ramanujan identities and the
// engine that expands and compares both sides.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rrw/series.hpp"

namespace rrw {

inline constexpr int kDefaultOrder = 60;

/// A sum-side family indexed by m >= start. The q_shift of term_of(m) must be
/// strictly increasing in m so that truncation needs finitely many terms.
struct TailFamily {
  int start = 0;
  std::function<RationalTerm(int)> term_of;

  /// Terms with q_shift <= order, in index order.
  std::vector<RationalTerm> terms_up_to(int order) const;
};

/// prefactor * prod_e 1 / (1 - mu_e q^e) over the part sizes e admitted by a
/// congruence rule plus exceptions.
struct ProductSide {
  int modulus = 5;
  std::set<int> residues;
  /// Part size -> weight marking it; sizes must be admitted by the rule.
  std::map<int, WeightMonomial> weighted;
  std::set<int> removed;
  std::set<int> added;
  /// Multiplied together in front of the product.
  std::vector<RationalTerm> prefactor;

  bool admits(int part) const;
  /// Throws std::invalid_argument when a weighted size is not a part size.
  void validate() const;
  /// The denominator factors for part sizes 1..order.
  std::vector<DenominatorFactor> factors(int order) const;
};

enum class IdentityKind {
  /// Sum side equals a product side.
  product,
  /// Two finite lists of rational terms with equal sums.
  rational,
};

/// One concrete identity: all parameters bound, substitution pending.
struct IdentitySpec {
  std::string id;
  std::string title;
  IdentityKind kind = IdentityKind::product;
  std::map<std::string, int> params;
  std::vector<RationalTerm> sum_terms;
  std::optional<TailFamily> tail;
  std::optional<ProductSide> product;
  /// Right-hand term list of a rational identity.
  std::vector<RationalTerm> rhs_terms;
  /// Applied to every term and factor before expansion.
  Substitution substitution;
};

/// Explicit sum-side terms after substitution, followed by the tail terms
/// that reach degree <= order.
std::vector<RationalTerm> sum_side_terms(const IdentitySpec& spec, int order);
TruncatedSeries expand_sum_side(const IdentitySpec& spec, int order);
/// Product side; throws std::logic_error for rational identities.
TruncatedSeries expand_product_side(const IdentitySpec& spec, int order);
/// Product side, or the right-hand term list of a rational identity.
TruncatedSeries expand_right_side(const IdentitySpec& spec, int order);

struct VerificationReport {
  std::string id;
  std::map<std::string, int> params;
  int order = 0;
  bool passed = false;
  std::optional<SeriesMismatch> discrepancy;

  friend bool operator==(const VerificationReport& a, const VerificationReport& b);
};

VerificationReport verify(const IdentitySpec& spec, int order);

/// "PASS partM M=12 order=60" or
/// "FAIL miniprop order=40 at q^5: lhs=t, rhs=2*t".
std::string to_line(const VerificationReport& r);

enum class Classical { none, first, second };

struct ParameterDomain {
  std::string name = "M";
  std::string description;
  std::function<bool(int)> admits;
  /// Largest value swept by full-catalog verification.
  int sweep_max = 40;
};

struct CatalogEntry {
  std::string id;
  std::string title;
  IdentityKind kind = IdentityKind::product;
  std::optional<ParameterDomain> parameter;
  /// Floor on the verification order (explicit terms reaching high degree).
  int min_order = 0;
  /// Helper entries are intermediate rational identities, exempt from the
  /// numerator positivity check.
  bool helper = false;
  /// Sum side at all weights 1 reduces to this classical sum.
  Classical baseline = Classical::none;
  std::string note;
  std::function<IdentitySpec(std::optional<int>)> build;

  /// Throws ParameterDomainError for a missing, surplus or inadmissible value.
  IdentitySpec instantiate(std::optional<int> param = std::nullopt) const;
  /// Admissible parameter values up to sweep_max; empty for fixed entries.
  std::vector<int> sweep() const;
};

const std::vector<CatalogEntry>& catalog();
/// Throws UnknownId.
const CatalogEntry& catalog_entry(std::string_view id);
IdentitySpec instantiate(std::string_view id, std::optional<int> param = std::nullopt);

/// Classical sum side (weightless) of the first or second identity.
IdentitySpec classical_identity(Classical which);

}  // namespace rrw
