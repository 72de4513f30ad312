// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "json_io.hpp"

namespace {

using fuzzymt::Algebra;
using fuzzymt::AtomValuation;
using fuzzymt::Convention;
using fuzzymt::ImplicationConvention;
using fuzzymt::NegationConvention;
using fuzzymt::TNorm;
using fuzzymt::TruthValue;
using json = fuzzymt::cli::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitNumeric = 3;

struct AlgebraFlags {
  std::string tnorm = "product";
  std::string impl = "s";
  std::string neg = "s";

  void attach(CLI::App* cmd) {
    cmd->add_option("--tnorm", tnorm, "t-norm: godel|product|lukasiewicz")
        ->check(CLI::IsMember({"godel", "product", "lukasiewicz"}));
    cmd->add_option("--impl", impl, "implication convention: s|r")
        ->check(CLI::IsMember({"s", "r"}));
    cmd->add_option("--neg", neg, "negation convention: s|r")
        ->check(CLI::IsMember({"s", "r"}));
  }

  Algebra build() const {
    TNorm t = tnorm == "godel"   ? TNorm::godel()
              : tnorm == "lukasiewicz" ? TNorm::lukasiewicz()
                                       : TNorm::product();
    Convention c;
    c.implication = impl == "r" ? ImplicationConvention::R
                                : ImplicationConvention::S;
    c.negation = neg == "r" ? NegationConvention::R : NegationConvention::S;
    return Algebra(std::move(t), c);
  }
};

AtomValuation parse_assignments(const std::string& text) {
  AtomValuation v;
  if (text.empty()) return v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw fuzzymt::ValueError("bad assignment '" + item +
                                "', expected name=value");
    }
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(value, &used);
    } catch (const std::exception&) {
      throw fuzzymt::ValueError("bad truth value '" + value + "' for atom " +
                                name);
    }
    if (used != value.size()) {
      throw fuzzymt::ValueError("bad truth value '" + value + "' for atom " +
                                name);
    }
    v[name] = TruthValue(d);
  }
  return v;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"t-norm fuzzy logic engine: connectives, Modus Tollens, "
               "hypothesis-test verdicts and Bayes posterior maps"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula");
  std::string eval_formula, eval_assign, eval_format = "text";
  eval_cmd->add_option("--formula", eval_formula, "formula text")->required();
  eval_cmd->add_option("--assign", eval_assign,
                       "atom valuation, e.g. a=0.3,b=0.9");
  eval_cmd->add_option("--format", eval_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  AlgebraFlags eval_alg;
  eval_alg.attach(eval_cmd);

  // table
  auto* table_cmd = app.add_subcommand("table", "CSV truth table");
  std::string table_formula;
  double table_step = 0.25;
  table_cmd->add_option("--formula", table_formula, "formula text")
      ->required();
  table_cmd->add_option("--step", table_step, "grid step in (0,1]");
  AlgebraFlags table_alg;
  table_alg.attach(table_cmd);

  // mt
  auto* mt_cmd = app.add_subcommand("mt", "fuzzy Modus Tollens");
  double nu_p1 = 0.0, nu_p2 = 0.0;
  mt_cmd->add_option("--nu-p1", nu_p1, "valuation of P1")->required();
  mt_cmd->add_option("--nu-p2", nu_p2, "valuation of P2")->required();
  AlgebraFlags mt_alg;
  mt_alg.attach(mt_cmd);

  // sht
  auto* sht_cmd = app.add_subcommand("sht", "hypothesis-test scenario");
  double alpha = 0.0, p_err = 0.0, model_n = 1.0;
  double observed = 0.0, null_mean = 0.0, null_sd = 1.0;
  sht_cmd->add_option("--alpha", alpha, "significance level in (0,1]")
      ->required();
  sht_cmd->add_option("--p-err", p_err, "precision error of P2, in [0,1)");
  sht_cmd->add_option("--n", model_n, "valuation exponent, nu(P1)=1-alpha^n");
  auto* obs_opt = sht_cmd->add_option("--observed", observed,
                                      "observed test statistic");
  auto* mean_opt =
      sht_cmd->add_option("--null-mean", null_mean, "null-model mean");
  auto* sd_opt = sht_cmd->add_option("--null-sd", null_sd, "null-model sd");
  mean_opt->needs(obs_opt);
  sd_opt->needs(obs_opt);
  obs_opt->needs(mean_opt)->needs(sd_opt);
  AlgebraFlags sht_alg;
  sht_alg.attach(sht_cmd);

  // bayes-map
  auto* bayes_cmd = app.add_subcommand("bayes-map", "posterior grid export");
  double p_e_h = 0.04, threshold = 0.2;
  int resolution = 1001;
  std::string bayes_format = "csv", bayes_out;
  bayes_cmd->add_option("--p-e-h", p_e_h, "P(E|H)")->required();
  bayes_cmd->add_option("--resolution", resolution, "cells per axis (>=2)");
  bayes_cmd->add_option("--threshold", threshold, "exceedance threshold");
  bayes_cmd->add_option("--format", bayes_format, "csv|pgm")
      ->check(CLI::IsMember({"csv", "pgm"}));
  bayes_cmd->add_option("--out", bayes_out,
                        "output file (required for pgm; csv defaults to "
                        "stdout)");

  // check
  auto* check_cmd = app.add_subcommand("check", "t-norm law report");
  std::string check_tnorm;
  std::uint64_t samples = 1000, seed = 0;
  check_cmd
      ->add_option("--tnorm", check_tnorm, "godel|product|lukasiewicz")
      ->required()
      ->check(CLI::IsMember({"godel", "product", "lukasiewicz"}));
  check_cmd->add_option("--samples", samples, "number of samples (>=1)");
  check_cmd->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  if (eval_cmd->parsed()) {
    const auto f = fuzzymt::parse(eval_formula);
    const auto v = parse_assignments(eval_assign);
    const TruthValue result = fuzzymt::evaluate(f, v, eval_alg.build());
    if (eval_format == "json") {
      json j;
      j["value"] = result.value();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << format_value(result.value()) << "\n";
    }
    return kExitOk;
  }

  if (table_cmd->parsed()) {
    const auto f = fuzzymt::parse(table_formula);
    std::cout << fuzzymt::truth_table(f, table_alg.build(), table_step)
                     .to_csv();
    return kExitOk;
  }

  if (mt_cmd->parsed()) {
    const Algebra alg = mt_alg.build();
    const fuzzymt::MTPremises premises{TruthValue(nu_p1), TruthValue(nu_p2)};
    const fuzzymt::MTResult result = fuzzymt::modus_tollens(alg, premises);
    std::cout << fuzzymt::cli::to_json(result).dump() << "\n";
    return result.consistent() ? kExitOk : kExitInconsistent;
  }

  if (sht_cmd->parsed()) {
    const Algebra alg = sht_alg.build();
    const fuzzymt::ShtScenario scenario(alpha, p_err, model_n, alg);
    fuzzymt::ShtVerdict verdict =
        obs_opt->count()
            ? fuzzymt::run_sht(scenario,
                               {observed, null_mean, null_sd})
            : fuzzymt::run_sht(scenario);
    std::cout << fuzzymt::cli::to_json(verdict, alg).dump() << "\n";
    if (verdict.result && !verdict.result->consistent()) {
      return kExitInconsistent;
    }
    return kExitOk;
  }

  if (bayes_cmd->parsed()) {
    if (bayes_format == "pgm" && bayes_out.empty()) {
      throw fuzzymt::ValueError("--out is required with --format pgm");
    }
    const fuzzymt::PosteriorGrid grid =
        fuzzymt::posterior_grid(p_e_h, resolution);
    const double fraction = fuzzymt::exceedance_fraction(grid, threshold);
    json meta;
    meta["p_e_given_h"] = p_e_h;
    meta["resolution"] = resolution;
    meta["threshold"] = threshold;
    meta["exceedance_fraction"] = fraction;
    meta["undefined_count"] = grid.undefined_count();
    meta["format"] = bayes_format;
    meta["output"] = bayes_out.empty() ? json(nullptr) : json(bayes_out);
    if (bayes_out.empty()) {
      fuzzymt::write_csv(grid, std::cout);
      std::cerr << meta.dump() << "\n"; // keep stdout pure CSV
    } else {
      std::ofstream out(bayes_out, std::ios::binary);
      if (!out) {
        throw fuzzymt::ValueError("cannot open output file " + bayes_out);
      }
      if (bayes_format == "pgm") {
        fuzzymt::write_pgm(grid, out);
      } else {
        fuzzymt::write_csv(grid, out);
      }
      std::cout << meta.dump() << "\n";
    }
    return kExitOk;
  }

  // check
  const TNorm t = check_tnorm == "godel"   ? TNorm::godel()
                  : check_tnorm == "lukasiewicz" ? TNorm::lukasiewicz()
                                                 : TNorm::product();
  const fuzzymt::LawReport report =
      fuzzymt::check_tnorm_laws(t, samples, seed);
  std::cout << fuzzymt::cli::to_json(report, check_tnorm).dump() << "\n";
  return kExitOk;
}

int error_json(const char* code, const std::string& message, int exit_code) {
  json j;
  j["error"] = code;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
  return exit_code;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fuzzymt::ParseError& e) {
    return error_json("parse_error", e.what(), kExitUsage);
  } catch (const fuzzymt::CapacityError& e) {
    return error_json("capacity_error", e.what(), kExitUsage);
  } catch (const fuzzymt::ValueError& e) {
    return error_json("value_error", e.what(), kExitUsage);
  } catch (const fuzzymt::LawViolationError& e) {
    return error_json("law_violation", e.what(), kExitNumeric);
  } catch (const fuzzymt::EvaluationError& e) {
    return error_json("evaluation_error", e.what(), kExitNumeric);
  } catch (const std::exception& e) {
    return error_json("internal_error", e.what(), kExitNumeric);
  }
}
