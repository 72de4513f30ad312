// SPDX-License-Identifier: Apache-2.0
// JSON serialization of library result records for the CLI. Field names
// are stable; schemas live in schemas/.
#pragma once

#include <json.hpp>

#include "fuzzymt/fuzzymt.hpp"

namespace fuzzymt::cli {

using json = nlohmann::ordered_json;

inline json to_json(const MTDiagnostic& d) {
  json j;
  j["code"] = d.code;
  j["message"] = d.message;
  j["offending"] = d.offending ? json(*d.offending) : json(nullptr);
  return j;
}

inline json to_json(const MTResult& r) {
  json j;
  j["status"] = r.consistent() ? "consistent" : "inconsistent";
  j["nu_not_h"] = r.nu_not_h ? json(r.nu_not_h->value()) : json(nullptr);
  j["nu_h"] = r.nu_h ? json(r.nu_h->value()) : json(nullptr);
  j["nu_consequent"] =
      r.nu_consequent ? json(r.nu_consequent->value()) : json(nullptr);
  j["diagnostic"] = r.diagnostic ? to_json(*r.diagnostic) : json(nullptr);
  j["boundary"] = r.boundary;
  j["generalized"] = r.generalized;
  return j;
}

inline json algebra_json(const Algebra& alg) {
  json j;
  j["tnorm"] = to_string(alg.tnorm().family());
  j["impl"] = to_string(alg.convention().implication);
  j["neg"] = to_string(alg.convention().negation);
  return j;
}

inline json to_json(const ShtVerdict& v, const Algebra& alg) {
  json j;
  j["alpha"] = v.alpha;
  j["p_err"] = v.p_err;
  j["model_n"] = v.model_n;
  j["algebra"] = algebra_json(alg);
  j["nu_p1"] = v.premises.nu_p1.value();
  j["nu_p2"] = v.premises.nu_p2.value();
  j["p_value"] = v.p_value ? json(*v.p_value) : json(nullptr);
  j["p2_established"] = v.p2_established;
  j["result"] = v.result ? to_json(*v.result) : json(nullptr);
  j["verdict"] = v.verdict;
  return j;
}

inline json to_json(const AxiomResult& a) {
  json j;
  j["pass"] = a.pass;
  if (a.counterexample) {
    j["counterexample"] = {(*a.counterexample)[0], (*a.counterexample)[1],
                           (*a.counterexample)[2]};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

inline json to_json(const LawReport& r, const std::string& tnorm_name) {
  json j;
  j["tnorm"] = tnorm_name;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["all_pass"] = r.all_pass();
  j["axioms"]["commutativity"] = to_json(r.commutativity);
  j["axioms"]["monotonicity"] = to_json(r.monotonicity);
  j["axioms"]["associativity"] = to_json(r.associativity);
  j["axioms"]["neutral_element"] = to_json(r.neutral);
  return j;
}

} // namespace fuzzymt::cli
