// SPDX-License-Identifier: Apache-2.0
// End-to-end acceptance suite. Each check prints one PASS/FAIL line with
// its runtime; the process exits nonzero if any check fails.
//
// Usage: fuzzymt_acceptance <path-to-cli-binary> <golden-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fuzzymt/fuzzymt.hpp"

namespace {

using namespace fuzzymt;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int number, const std::string& name, bool pass, double ms,
            double limit_ms, const std::string& detail = "") {
  const bool in_time = ms < limit_ms;
  const bool ok = pass && in_time;
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %d: %s (%.3f ms, limit %.0f ms)%s%s\n",
              ok ? "PASS" : "FAIL", number, name.c_str(), ms, limit_ms,
              detail.empty() ? "" : " -- ", detail.c_str());
}

void run(int number, const std::string& name, double limit_ms,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = Clock::now();
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  report(number, name, pass, ms, limit_ms, detail);
}

Algebra make(TNorm t, ImplicationConvention i, NegationConvention n) {
  return Algebra(std::move(t), Convention{i, n});
}

std::vector<TNorm> builtins() {
  return {TNorm::godel(), TNorm::product(), TNorm::lukasiewicz()};
}

constexpr auto S = ImplicationConvention::S;
constexpr auto R = ImplicationConvention::R;
constexpr auto NS = NegationConvention::S;
constexpr auto NR = NegationConvention::R;

// ---- criterion bodies ------------------------------------------------------

bool c1_rejection_value(std::string& detail) {
  for (auto t : builtins()) {
    const ShtVerdict v = run_sht(ShtScenario(0.05, 0.0, 1.0, make(t, S, NS)));
    if (!v.result || !v.result->consistent() ||
        v.result->nu_not_h->value() != 0.95) {
      detail = "nu_not_h != 0.95 under " + to_string(t.family());
      return false;
    }
  }
  return true;
}

bool c2_contrapositive_suite(std::string& detail) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  bool godel_counter = false, product_counter = false;
  for (int i = 0; i < 10000; ++i) {
    const TruthValue x(unit(rng)), y(unit(rng));
    for (auto t : builtins()) {
      const auto rep = contrapositive_check(make(t, S, NS), x, y);
      if (std::abs(rep.forward.value() - rep.contrapositive.value()) >
          1e-12) {
        detail = "S-implication asymmetry under " + to_string(t.family());
        return false;
      }
    }
    const auto luka = contrapositive_check(
        make(TNorm::lukasiewicz(), R, NR), x, y);
    if (std::abs(luka.forward.value() - luka.contrapositive.value()) >
        1e-12) {
      detail = "Lukasiewicz R asymmetry";
      return false;
    }
    if (!contrapositive_check(make(TNorm::godel(), R, NR), x, y).symmetric) {
      godel_counter = true;
    }
    if (!contrapositive_check(make(TNorm::product(), R, NR), x, y)
             .symmetric) {
      product_counter = true;
    }
  }
  if (!godel_counter || !product_counter) {
    detail = "expected asymmetric counterexamples for Godel/product R";
    return false;
  }
  return true;
}

bool c3_axiom_suite(std::string& detail) {
  for (auto t : builtins()) {
    if (!check_tnorm_laws(t, 10000, 2024).all_pass()) {
      detail = "built-in " + to_string(t.family()) + " failed an axiom";
      return false;
    }
  }
  const TNorm avg =
      TNorm::custom([](double x, double y) { return 0.5 * (x + y); },
                    "average");
  const LawReport r = check_tnorm_laws(avg, 10000, 2024);
  if (r.associativity.pass || !r.associativity.counterexample) {
    detail = "averaging pseudo-t-norm not caught";
    return false;
  }
  const auto [x, y, z] = *r.associativity.counterexample;
  auto f = [](double a, double b) { return 0.5 * (a + b); };
  if (std::abs(f(x, f(y, z)) - f(f(x, y), z)) <= 1e-12) {
    detail = "reported counterexample is not one";
    return false;
  }
  return true;
}

bool c4_rr_incompatibility(std::string& detail) {
  const Algebra godel_rr = make(TNorm::godel(), R, NR);
  const Algebra product_rr = make(TNorm::product(), R, NR);
  const Algebra luka_rr = make(TNorm::lukasiewicz(), R, NR);
  const Algebra luka_ss = make(TNorm::lukasiewicz(), S, NS);
  for (int i = 0; i <= 100; ++i) {
    const double p1 = i * 0.01;
    for (int j = 0; j <= 100; ++j) {
      const double p2 = j * 0.01;
      const MTPremises premises{TruthValue(p1), TruthValue(p2)};
      if (p1 > 0.0 && p1 < 1.0) {
        if (modus_tollens(godel_rr, premises).consistent() ||
            modus_tollens(product_rr, premises).consistent()) {
          std::ostringstream os;
          os << "R/R consistent at nu_p1=" << p1 << " nu_p2=" << p2;
          detail = os.str();
          return false;
        }
      }
      const MTResult a = modus_tollens(luka_rr, premises);
      const MTResult b = modus_tollens(luka_ss, premises);
      if (!a.consistent() || !b.consistent() ||
          std::abs(a.nu_not_h->value() - b.nu_not_h->value()) > 1e-12) {
        detail = "Lukasiewicz R/R diverged from S/S";
        return false;
      }
    }
  }
  return true;
}

bool c5_product_rs_consistency(std::string& detail) {
  const Algebra a = make(TNorm::product(), R, NS);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int tested = 0;
  while (tested < 1000) {
    const double alpha = unit(rng);
    const double p = unit(rng) * (1.0 - alpha);
    if (alpha <= 0.0 || alpha >= 1.0 || p <= 0.0) continue;
    const double nu_p1 = 1.0 - alpha;
    const MTResult r =
        modus_tollens(a, {TruthValue(nu_p1), TruthValue(1.0 - p)});
    if (!r.consistent() || !r.nu_h || !r.nu_not_h) {
      detail = "inconsistent where a solution exists";
      return false;
    }
    const double recovered =
        a.tnorm().implies_r(*r.nu_h, TruthValue(p)).value();
    if (std::abs(recovered - nu_p1) > 1e-12 ||
        std::abs(r.nu_not_h->value() - (1.0 - r.nu_h->value())) > 1e-12) {
      std::ostringstream os;
      os << "back-substitution off at alpha=" << alpha << " p=" << p;
      detail = os.str();
      return false;
    }
    ++tested;
  }
  return true;
}

bool c6_classical_degeneration(std::string& detail) {
  const char* formulas[] = {"!a", "a & b", "a | b", "a -> b"};
  for (auto t : builtins()) {
    for (auto i : {S, R}) {
      for (auto n : {NS, NR}) {
        const Algebra alg = make(t, i, n);
        for (const char* text : formulas) {
          const Formula f = parse(text);
          const auto atoms = f.atoms();
          const int rows = atoms.size() == 1 ? 2 : 4;
          for (int row = 0; row < rows; ++row) {
            AtomValuation v;
            bool bits[2] = {};
            for (std::size_t k = 0; k < atoms.size(); ++k) {
              bits[k] = (row >> (atoms.size() - 1 - k)) & 1;
              v[atoms[k]] = TruthValue(bits[k] ? 1.0 : 0.0);
            }
            double expected = 0.0;
            const std::string op(text);
            if (op == "!a") expected = bits[0] ? 0.0 : 1.0;
            if (op == "a & b") expected = (bits[0] && bits[1]) ? 1.0 : 0.0;
            if (op == "a | b") expected = (bits[0] || bits[1]) ? 1.0 : 0.0;
            if (op == "a -> b") expected = (!bits[0] || bits[1]) ? 1.0 : 0.0;
            if (evaluate(f, v, alg).value() != expected) {
              std::ostringstream os;
              os << "mismatch for " << text << " under "
                 << to_string(t.family()) << " impl=" << to_string(i)
                 << " neg=" << to_string(n) << " row " << row;
              detail = os.str();
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool c7_bayes_map(std::string& detail) {
  if (*posterior(0.04, 0.5, 0.04) != 0.5) {
    detail = "posterior(0.04, 0.5, 0.04) != 0.5";
    return false;
  }
  // analytic oracle: area of { (h,q) : q < 0.16 h / (1-h) } in the unit
  // square, integral 0.16*(-h - ln(1-h)) on [0, 1/1.16] plus the strip
  // where the bound exceeds 1
  const double h0 = 1.0 / 1.16;
  const double oracle = 0.16 * (-h0 - std::log(1.0 - h0)) + (1.0 - h0);
  const PosteriorGrid grid = posterior_grid(0.04, 1001);
  const double fraction = exceedance_fraction(grid, 0.2);
  if (std::abs(fraction - oracle) > 0.01 ||
      std::abs(fraction - 0.317) > 0.01) {
    std::ostringstream os;
    os << "exceedance " << fraction << " vs oracle " << oracle;
    detail = os.str();
    return false;
  }
  return true;
}

bool c8_p_value(std::string& detail) {
  const double p = p_value_upper({1.6448536270, 0.0, 1.0});
  if (std::abs(p - 0.05) > 1e-6) {
    std::ostringstream os;
    os << "p-value " << p;
    detail = os.str();
    return false;
  }
  return true;
}

// ---- CLI golden files ------------------------------------------------------

struct CliRun {
  int exit_code;
  std::string stdout_bytes;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  const std::string tmp = "acceptance_cli_output.tmp";
  const std::string command = cli + " " + args + " > " + tmp;
  const int status = std::system(command.c_str());
  std::ifstream in(tmp, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(tmp.c_str());
  int code = -1;
  if (status != -1 && WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, buf.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read golden file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool c9_cli_golden(const std::string& cli, const std::string& golden_dir,
                   std::string& detail) {
  struct Case {
    const char* args;
    const char* golden;
    int exit_code;
  };
  const Case cases[] = {
      {"mt --nu-p1 0.95 --nu-p2 1 --tnorm product --impl s --neg s",
       "mt_product_ss.json", 0},
      {"mt --nu-p1 0.95 --nu-p2 1 --tnorm godel --impl r --neg r",
       "mt_godel_rr.json", 2},
      {"eval --formula \"!a\" --assign a=1 --tnorm godel --impl r --neg r",
       "eval_not_a_godel_rr.txt", 0},
  };
  for (const auto& c : cases) {
    const CliRun got = run_cli(cli, c.args);
    const std::string want = slurp(golden_dir + "/" + c.golden);
    if (got.exit_code != c.exit_code) {
      std::ostringstream os;
      os << "exit code " << got.exit_code << " != " << c.exit_code
         << " for: " << c.args;
      detail = os.str();
      return false;
    }
    if (got.stdout_bytes != want) {
      detail = std::string("output mismatch for: ") + c.args;
      return false;
    }
  }
  return true;
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <cli-binary> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden_dir = argv[2];

  run(1, "S/S rejection truth value 0.95 for all t-norms", 1.0,
      c1_rejection_value);
  run(2, "contrapositive symmetry suite (10k samples)", 1000.0,
      c2_contrapositive_suite);
  run(3, "t-norm axiom suite (10k samples)", 1000.0, c3_axiom_suite);
  run(4, "Godel/product R/R incompatibility on the 0.01 grid", 5000.0,
      c4_rr_incompatibility);
  run(5, "product R-impl + S-neg consistency (1k pairs)", 1000.0,
      c5_product_rs_consistency);
  run(6, "classical degeneration across 12 algebra variants", 1.0,
      c6_classical_degeneration);
  run(7, "Bayes map point value and exceedance vs analytic oracle", 2000.0,
      c7_bayes_map);
  run(8, "upper-tail p-value at the 0.05 quantile", 1.0, c8_p_value);
  run(9, "CLI golden files", 1000.0,
      [&](std::string& d) { return c9_cli_golden(cli, golden_dir, d); });

  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
