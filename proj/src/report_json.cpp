#include "rrw/report_json.hpp"

#include "rrw/errors.hpp"
#include "rrw/polynomial_io.hpp"

namespace rrw {

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"id", r.id}, {"params", r.params}, {"order", r.order}, {"status", r.passed ? "pass" : "fail"}};
  if (r.discrepancy) {
    j["discrepancy"] = {{"degree", r.discrepancy->degree},
                        {"lhs", to_string(r.discrepancy->lhs)},
                        {"rhs", to_string(r.discrepancy->rhs)}};
  }
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  try {
    r.id = j.at("id").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, int>>();
    r.order = j.at("order").get<int>();
    const auto status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw ParseError("status must be pass or fail");
    r.passed = status == "pass";
    r.discrepancy.reset();
    if (j.contains("discrepancy")) {
      const auto& d = j.at("discrepancy");
      r.discrepancy = SeriesMismatch{d.at("degree").get<int>(), parse_weight_polynomial(d.at("lhs").get<std::string>()),
                                     parse_weight_polynomial(d.at("rhs").get<std::string>())};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("verification report: ") + e.what());
  }
}

void to_json(nlohmann::json& j, const RefinementReport& r) {
  j = nlohmann::json{{"id", r.id},       {"params", r.params},
                     {"n_min", r.n_min}, {"n_max", r.n_max},
                     {"status", r.passed ? "pass" : "fail"}};
  if (r.mismatch) {
    j["mismatch"] = {{"n", r.mismatch->n},
                     {"signature", to_string(r.mismatch->signature)},
                     {"product", r.mismatch->product},
                     {"diff", r.mismatch->diff},
                     {"series", r.mismatch->series}};
  }
  if (!r.error.empty()) j["error"] = r.error;
}

void to_json(nlohmann::json& j, const TableRow& r) {
  j = nlohmann::json{{"mu", to_string(r.mu)},
                     {"lambda", to_string(r.lambda)},
                     {"image", to_string(r.image)},
                     {"signature", to_string(r.signature)}};
}

void to_json(nlohmann::json& j, const DiscoveryReport& r) {
  j = nlohmann::json{{"name", r.name},
                     {"status", to_string(r.status)},
                     {"match_order", r.match_order},
                     {"unknowns", r.unknowns.size()},
                     {"equations", r.equations},
                     {"rank", r.rank},
                     {"integral", r.integral}};
  if (r.sound) j["sound"] = *r.sound;
  nlohmann::json nums = nlohmann::json::object();
  for (std::size_t i = 0; i < r.numerators.size(); ++i) nums[r.labels.at(i)] = to_string(r.numerators[i]);
  j["numerators"] = nums;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : r.nullspace) {
    nlohmann::json entry = nlohmann::json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) entry[unknown_name(r, i)] = v[i].str();
    }
    basis.push_back(entry);
  }
  j["nullspace"] = basis;
}

}  // namespace rrw
