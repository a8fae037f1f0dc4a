#include "rrw/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "rrw/errors.hpp"
#include "rrw/polynomial_io.hpp"

namespace rrw {

std::vector<RationalTerm> TailFamily::terms_up_to(int order) const {
  std::vector<RationalTerm> out;
  int last_shift = -1;
  for (int m = start;; ++m) {
    RationalTerm t = term_of(m);
    if (t.q_shift <= last_shift) throw std::logic_error("tail q_shift must increase strictly");
    if (t.q_shift > order) break;
    last_shift = t.q_shift;
    out.push_back(std::move(t));
  }
  return out;
}

bool ProductSide::admits(int part) const {
  if (part < 1 || removed.contains(part)) return false;
  return residues.contains(part % modulus) || added.contains(part);
}

void ProductSide::validate() const {
  for (const auto& [part, mu] : weighted) {
    if (!admits(part)) {
      throw std::invalid_argument("weighted part size " + std::to_string(part) + " is not a part size of the product");
    }
  }
}

std::vector<DenominatorFactor> ProductSide::factors(int order) const {
  std::vector<DenominatorFactor> out;
  for (int e = 1; e <= order; ++e) {
    if (!admits(e)) continue;
    auto it = weighted.find(e);
    out.emplace_back(it == weighted.end() ? WeightMonomial{} : it->second, e);
  }
  return out;
}

std::vector<RationalTerm> sum_side_terms(const IdentitySpec& spec, int order) {
  std::vector<RationalTerm> out;
  for (const auto& t : spec.sum_terms) out.push_back(spec.substitution.apply(t));
  if (spec.tail) {
    for (const auto& t : spec.tail->terms_up_to(order)) out.push_back(spec.substitution.apply(t));
  }
  return out;
}

TruncatedSeries expand_sum_side(const IdentitySpec& spec, int order) {
  return expand(sum_side_terms(spec, order), order);
}

TruncatedSeries expand_product_side(const IdentitySpec& spec, int order) {
  if (!spec.product) throw std::logic_error(spec.id + " has no product side");
  const ProductSide& p = *spec.product;
  TruncatedSeries s = TruncatedSeries::one(order);
  for (const auto& pre : p.prefactor) s = s * expand(spec.substitution.apply(pre), order);
  for (const auto& f : p.factors(order)) {
    if (auto g = spec.substitution.apply(f)) s.divide_by(*g);
  }
  return s;
}

TruncatedSeries expand_right_side(const IdentitySpec& spec, int order) {
  if (spec.kind == IdentityKind::product) return expand_product_side(spec, order);
  TruncatedSeries s(order);
  for (const auto& t : spec.rhs_terms) s += expand(spec.substitution.apply(t), order);
  return s;
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
  if (a.id != b.id || a.params != b.params || a.order != b.order || a.passed != b.passed) return false;
  if (a.discrepancy.has_value() != b.discrepancy.has_value()) return false;
  if (!a.discrepancy) return true;
  return a.discrepancy->degree == b.discrepancy->degree && a.discrepancy->lhs == b.discrepancy->lhs &&
         a.discrepancy->rhs == b.discrepancy->rhs;
}

VerificationReport verify(const IdentitySpec& spec, int order) {
  const auto cmp = compare(expand_sum_side(spec, order), expand_right_side(spec, order));
  return {spec.id, spec.params, order, cmp.equal(), cmp.mismatch};
}

std::string to_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.id;
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
  os << " order=" << r.order;
  if (r.discrepancy) {
    os << " at q^" << r.discrepancy->degree << ": lhs=" << to_string(r.discrepancy->lhs)
       << ", rhs=" << to_string(r.discrepancy->rhs);
  }
  return os.str();
}

IdentitySpec CatalogEntry::instantiate(std::optional<int> param) const {
  if (parameter) {
    if (!param) throw ParameterDomainError(id + " requires parameter " + parameter->name);
    if (!parameter->admits(*param)) {
      throw ParameterDomainError(id + ": " + parameter->name + "=" + std::to_string(*param) + " is not admissible (" +
                                 parameter->description + ")");
    }
  } else if (param) {
    throw ParameterDomainError(id + " takes no parameter");
  }
  return build(param);
}

std::vector<int> CatalogEntry::sweep() const {
  std::vector<int> out;
  if (!parameter) return out;
  for (int m = 0; m <= parameter->sweep_max; ++m) {
    if (parameter->admits(m)) out.push_back(m);
  }
  return out;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw UnknownId("unknown identity id \"" + std::string(id) + "\"");
}

IdentitySpec instantiate(std::string_view id, std::optional<int> param) {
  return catalog_entry(id).instantiate(param);
}

}  // namespace rrw
