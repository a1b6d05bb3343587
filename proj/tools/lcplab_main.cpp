// Copyright 2026 The lcplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every invocation prints one JSON report to stdout
// and terminates with an exit code from the four-value contract:
//   0 affirmative, 1 negative determination, 2 inconclusive/unknown,
//   3 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lcplab/error.hpp"
#include "lcplab/gameval.hpp"
#include "lcplab/hiddenz.hpp"
#include "lcplab/jsonio.hpp"
#include "lcplab/labgen.hpp"
#include "lcplab/lcpsolve.hpp"
#include "lcplab/matclass.hpp"
#include "lcplab/ratmat.hpp"

namespace {

using lcplab::Certificate;
using lcplab::IndexSet;
using lcplab::InstanceFile;
using lcplab::LcpInstance;
using lcplab::Rat;
using lcplab::RatMatrix;
using lcplab::RatVec;
using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

InstanceFile load_instance(const std::string& path) {
  return lcplab::instance_from_json(lcplab::load_json_file(path));
}

// Certificate attached to the file (verified), otherwise the seeded search,
// otherwise the pair search. The source label records which one delivered.
struct FoundCertificate {
  Certificate cert;
  std::string source;
};

std::optional<FoundCertificate> obtain_certificate(const InstanceFile& file) {
  if (file.cert.has_value()) {
    lcplab::VerifyReport rep = lcplab::verify_certificate(file.a, *file.cert);
    if (!rep.valid) {
      std::string msg = "embedded certificate does not verify:";
      for (const std::string& v : rep.violations) msg += "\n  " + v;
      throw lcplab::InputError(msg);
    }
    return FoundCertificate{*file.cert, "embedded"};
  }
  if (auto c = lcplab::find_certificate(file.a)) {
    return FoundCertificate{std::move(*c), "seed-search"};
  }
  if (auto c = lcplab::find_certificate_pair_search(file.a)) {
    return FoundCertificate{std::move(*c), "pair-search"};
  }
  return std::nullopt;
}

json certificate_report(const RatMatrix& a, const FoundCertificate& fc) {
  lcplab::VerifyReport rep = lcplab::verify_certificate(a, fc.cert);
  return json{{"found", true},
              {"source", fc.source},
              {"certificate", lcplab::certificate_to_json(fc.cert)},
              {"combo", lcplab::vec_to_json(rep.combo)}};
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOptions {
  std::string path;
  std::string eps = "1";
  std::string delta = "1";
  std::vector<std::string> classes;
  int cap = lcplab::kSubsetCap;
  int jobs = 0;
};

bool wants(const std::vector<std::string>& filter, const std::string& name) {
  if (filter.empty()) return true;
  for (const std::string& f : filter) {
    if (f == name) return true;
  }
  return false;
}

int cmd_classify(const ClassifyOptions& opt) {
  InstanceFile file = load_instance(opt.path);
  const RatMatrix& a = file.a;

  json report{{"schema", lcplab::kSchemaTag},
              {"command", "classify"},
              {"n", a.rows()}};

  auto fc = obtain_certificate(file);
  report["hidden_z"] =
      fc.has_value() ? certificate_report(a, *fc) : json{{"found", false}};

  lcplab::HiddenClassifyParams params;
  params.eps = Rat::parse(opt.eps);
  params.delta = Rat::parse(opt.delta);
  lcplab::HiddenClassifyOutcome lp = lcplab::classify_hidden(a, params);
  json screen{{"conditional", !fc.has_value()}};
  switch (lp.verdict) {
    case lcplab::HiddenVerdict::PCertified:
      screen["verdict"] = "P";
      break;
    case lcplab::HiddenVerdict::P0Certified:
      screen["verdict"] = "P0";
      break;
    case lcplab::HiddenVerdict::Inconclusive:
      screen["verdict"] = "inconclusive";
      break;
  }
  if (lp.verdict != lcplab::HiddenVerdict::Inconclusive) {
    screen["step"] = lp.step;
    screen["witness_x"] = lcplab::vec_to_json(lp.x);
    screen["margin_s"] = lcplab::rat_to_json(lp.s);
  }
  report["lp_screen"] = screen;

  lcplab::ValueSignQueries q = lcplab::value_sign_queries(a);
  json vs{{"positive", q.positive},
          {"nonnegative", q.nonnegative},
          {"negative", q.negative},
          {"nonpositive", q.nonpositive}};
  if (q.positive) vs["positive_witness"] = lcplab::vec_to_json(q.positive_witness);
  if (q.nonnegative) {
    vs["nonnegative_witness"] = lcplab::vec_to_json(q.nonnegative_witness);
  }
  if (q.negative) vs["negative_witness"] = lcplab::vec_to_json(q.negative_witness);
  if (q.nonpositive) {
    vs["nonpositive_witness"] = lcplab::vec_to_json(q.nonpositive_witness);
  }
  report["value_sign"] = vs;

  json classes = json::object();
  if (wants(opt.classes, "z")) classes["Z"] = lcplab::is_z_matrix(a);
  bool need_minors = wants(opt.classes, "p") || wants(opt.classes, "p0") ||
                     wants(opt.classes, "almost-p") || wants(opt.classes, "n") ||
                     wants(opt.classes, "k") || wants(opt.classes, "k0");
  if (need_minors) {
    lcplab::MinorProfile mp = lcplab::minor_profile(a, opt.cap, opt.jobs);
    bool z = lcplab::is_z_matrix(a);
    if (wants(opt.classes, "p")) classes["P"] = mp.is_p;
    if (wants(opt.classes, "p0")) classes["P0"] = mp.is_p0;
    if (wants(opt.classes, "almost-p")) classes["almost_P"] = mp.is_almost_p;
    if (wants(opt.classes, "k")) classes["K"] = z && mp.is_p;
    if (wants(opt.classes, "k0")) classes["K0"] = z && mp.is_p0;
    if (wants(opt.classes, "n")) {
      switch (lcplab::n_category(a, opt.cap, opt.jobs)) {
        case lcplab::NCategory::NotN:
          classes["N"] = "none";
          break;
        case lcplab::NCategory::First:
          classes["N"] = "first";
          break;
        case lcplab::NCategory::Second:
          classes["N"] = "second";
          break;
      }
    }
  }
  if (wants(opt.classes, "s")) {
    lcplab::SWitness sw = lcplab::is_s_matrix(a);
    classes["S"] = sw.is_s;
    if (sw.is_s) classes["S_witness"] = lcplab::vec_to_json(sw.witness);
  }
  if (wants(opt.classes, "sbar")) {
    classes["Sbar"] = lcplab::is_sbar_matrix(a, opt.cap, opt.jobs);
  }
  if (wants(opt.classes, "e")) {
    classes["E"] = lcplab::is_e_matrix(a, opt.cap, opt.jobs);
  }
  if (wants(opt.classes, "e0")) {
    classes["E0"] = lcplab::is_e0_matrix(a, opt.cap, opt.jobs);
  }
  if (wants(opt.classes, "type-d")) {
    lcplab::TypeDProfile td = lcplab::is_type_d(a);
    json tdj{{"is_type_d", td.is_type_d}, {"positive", td.positive}};
    if (td.is_type_d) tdj["alphas"] = lcplab::vec_to_json(td.alphas);
    classes["type_D"] = tdj;
  }
  report["classes"] = classes;

  emit(report);
  bool inconclusive =
      !fc.has_value() || lp.verdict == lcplab::HiddenVerdict::Inconclusive;
  return inconclusive ? kExitUnknown : kExitYes;
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string path;
  std::string method = "lemke";
  bool cross_check = false;
  long max_iter = 0;
  int cap = lcplab::kEnumerateCap;
  int jobs = 0;
};

const char* status_str(lcplab::SolveStatus s) {
  switch (s) {
    case lcplab::SolveStatus::Solved:
      return "solved";
    case lcplab::SolveStatus::RayTermination:
      return "ray";
    case lcplab::SolveStatus::Infeasible:
      return "infeasible";
    case lcplab::SolveStatus::IterationCap:
      return "iteration-cap";
  }
  return "unknown";
}

json outcome_to_json(const lcplab::SolveOutcome& out, bool with_objective) {
  json j{{"status", status_str(out.status)}, {"pivots", out.pivots}};
  if (out.solution.has_value()) {
    j["solution"] = lcplab::solution_to_json(*out.solution);
  }
  if (with_objective && out.status == lcplab::SolveStatus::Solved) {
    j["lp_objective"] = lcplab::rat_to_json(out.lp_objective);
  }
  return j;
}

json enumeration_to_json(const lcplab::EnumerationResult& res) {
  json sols = json::array();
  for (const lcplab::LcpSolution& s : res.solutions) {
    sols.push_back(lcplab::solution_to_json(s));
  }
  json cont = json::array();
  for (const IndexSet& s : res.continuum_supports) {
    cont.push_back(lcplab::indexset_to_json(s));
  }
  return json{{"status", res.solutions.empty() ? "infeasible" : "solved"},
              {"count", res.solutions.size()},
              {"solutions", sols},
              {"continuum_supports", cont}};
}

int cmd_solve(const SolveOptions& opt) {
  InstanceFile file = load_instance(opt.path);
  if (!file.q.has_value()) {
    throw lcplab::InputError("solve requires an instance file with a q vector");
  }
  LcpInstance inst{file.a, *file.q};

  auto need_certificate = [&]() -> Certificate {
    auto fc = obtain_certificate(file);
    if (!fc.has_value()) {
      throw lcplab::InputError(
          "the lp method needs a hidden-Z certificate, but the file embeds "
          "none and both searches came up empty");
    }
    return fc->cert;
  };

  json report{{"schema", lcplab::kSchemaTag},
              {"command", "solve"},
              {"method", opt.method}};

  bool solved = false;
  if (opt.method == "lemke") {
    lcplab::SolveOutcome out = lcplab::lemke_solve(inst, opt.max_iter);
    report.update(outcome_to_json(out, false));
    solved = out.status == lcplab::SolveStatus::Solved;
  } else if (opt.method == "crisscross") {
    lcplab::SolveOutcome out = lcplab::crisscross_solve(inst, opt.max_iter);
    report.update(outcome_to_json(out, false));
    solved = out.status == lcplab::SolveStatus::Solved;
  } else if (opt.method == "lp") {
    lcplab::SolveOutcome out =
        lcplab::lp_reformulation_solve(inst, need_certificate());
    report.update(outcome_to_json(out, true));
    solved = out.status == lcplab::SolveStatus::Solved;
  } else {
    lcplab::EnumerationResult res =
        lcplab::enumerate_solutions(inst, opt.cap, opt.jobs);
    report.update(enumeration_to_json(res));
    solved = !res.solutions.empty();
  }

  if (opt.cross_check) {
    json methods = json::object();
    std::vector<RatVec> solved_z;
    auto record = [&](const std::string& name, const lcplab::SolveOutcome& out,
                      bool with_obj) {
      methods[name] = outcome_to_json(out, with_obj);
      if (out.status == lcplab::SolveStatus::Solved) {
        solved_z.push_back(out.solution->z);
      }
    };
    record("lemke", lcplab::lemke_solve(inst, opt.max_iter), false);
    record("crisscross", lcplab::crisscross_solve(inst, opt.max_iter), false);
    auto fc = obtain_certificate(file);
    if (fc.has_value()) {
      record("lp", lcplab::lp_reformulation_solve(inst, fc->cert), true);
    } else {
      methods["lp"] = json{{"status", "skipped"},
                           {"reason", "no certificate found"}};
    }
    std::optional<lcplab::EnumerationResult> enumerated;
    if (inst.a.rows() <= opt.cap) {
      enumerated = lcplab::enumerate_solutions(inst, opt.cap, opt.jobs);
      methods["enumerate"] = enumeration_to_json(*enumerated);
    } else {
      methods["enumerate"] = json{{"status", "skipped"},
                                  {"reason", "order exceeds enumeration cap"}};
    }
    bool agreement = true;
    for (const RatVec& z : solved_z) {
      if (z != solved_z.front()) agreement = false;
      if (enumerated.has_value()) {
        bool listed = false;
        for (const lcplab::LcpSolution& s : enumerated->solutions) {
          if (s.z == z) listed = true;
        }
        if (!listed) {
          throw lcplab::InternalError(
              "cross-check: a pivot method returned a solution the "
              "enumeration oracle does not list");
        }
      }
    }
    report["cross_check"] = json{{"methods", methods},
                                 {"agreement", agreement}};
  }

  emit(report);
  return solved ? kExitYes : kExitNo;
}

// ---------------------------------------------------------------------------
// hidden

int cmd_hidden_find(const std::string& path) {
  InstanceFile file = load_instance(path);
  json report{{"schema", lcplab::kSchemaTag}, {"command", "hidden-find"}};
  auto fc = obtain_certificate(file);
  if (fc.has_value()) {
    report.update(certificate_report(file.a, *fc));
    emit(report);
    return kExitYes;
  }
  report["found"] = false;
  report["result"] = "unknown";
  emit(report);
  return kExitUnknown;
}

int cmd_hidden_verify(const std::string& path) {
  InstanceFile file = load_instance(path);
  if (!file.cert.has_value()) {
    throw lcplab::InputError("verify needs a file with an embedded certificate");
  }
  lcplab::VerifyReport rep = lcplab::verify_certificate(file.a, *file.cert);
  json report{{"schema", lcplab::kSchemaTag},
              {"command", "hidden-verify"},
              {"valid", rep.valid},
              {"violations", rep.violations},
              {"combo", lcplab::vec_to_json(rep.combo)}};
  emit(report);
  return rep.valid ? kExitYes : kExitNo;
}

int cmd_hidden_perturb(const std::string& path, const std::string& eps_text) {
  InstanceFile file = load_instance(path);
  Rat eps = Rat::parse(eps_text);
  auto fc = obtain_certificate(file);
  if (!fc.has_value()) {
    throw lcplab::InputError(
        "perturb needs a certificate, but the file embeds none and both "
        "searches came up empty");
  }
  lcplab::PerturbationResult res = lcplab::perturb(file.a, fc->cert, eps);
  json report{{"schema", lcplab::kSchemaTag},
              {"command", "hidden-perturb"},
              {"eps", lcplab::rat_to_json(eps)},
              {"a_eps", lcplab::matrix_to_json(res.a_eps)},
              {"certificate", lcplab::certificate_to_json(res.cert_eps)}};
  report["bound"] = res.bound.has_value()
                        ? lcplab::rat_to_json(*res.bound)
                        : json("unbounded");
  emit(report);
  return kExitYes;
}

int cmd_hidden_submatrix(const std::string& path,
                         const std::vector<long>& alpha_members) {
  InstanceFile file = load_instance(path);
  auto fc = obtain_certificate(file);
  if (!fc.has_value()) {
    throw lcplab::InputError(
        "submatrix reduction needs a certificate, but the file embeds none "
        "and both searches came up empty");
  }
  IndexSet alpha =
      lcplab::indexset_from_members_1based(file.a.rows(), alpha_members);
  json report{{"schema", lcplab::kSchemaTag},
              {"command", "hidden-submatrix"},
              {"alpha", lcplab::indexset_to_json(alpha)}};
  try {
    Certificate reduced =
        lcplab::submatrix_certificate(file.a, fc->cert, alpha);
    report["certificate"] = lcplab::certificate_to_json(reduced);
    report["gate_passed"] = true;
    emit(report);
    return kExitYes;
  } catch (const lcplab::PreconditionError& e) {
    report["gate_passed"] = false;
    report["message"] = e.what();
    emit(report);
    return kExitNo;
  }
}

// ---------------------------------------------------------------------------
// suite

struct SuiteOptions {
  std::string id;
  long trials = 100;
  int n_max = 4;
  std::uint64_t seed = 1;
  int jobs = 0;
  std::string out_path;
};

int cmd_suite(const SuiteOptions& opt) {
  lcplab::SuiteReport rep =
      lcplab::run_suite(opt.id, opt.trials, opt.n_max, opt.seed, opt.jobs);
  json report = lcplab::suite_report_to_json(rep);
  emit(report);
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) throw lcplab::InputError("cannot write file: " + opt.out_path);
    out << report.dump(2) << "\n";
  }
  return rep.passed() ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for linear complementarity problems with "
               "hidden Z-matrices"};
  app.require_subcommand(1);

  ClassifyOptions copt;
  CLI::App* classify =
      app.add_subcommand("classify", "Class memberships, certificate search, "
                                     "and the LP P/P0 screen for a matrix");
  classify->add_option("path", copt.path, "matrix or instance JSON file")
      ->required();
  classify->add_option("--eps", copt.eps, "Step I margin (rational, > 0)");
  classify->add_option("--delta", copt.delta, "positivity floor (rational, > 0)");
  classify
      ->add_option("--classes", copt.classes,
                   "subset of z,k,k0,p,p0,almost-p,n,s,sbar,e,e0,type-d")
      ->delimiter(',');
  classify->add_option("--cap", copt.cap, "subset-sweep size cap");
  classify->add_option("--jobs", copt.jobs, "worker threads (0 = auto)");

  SolveOptions sopt;
  CLI::App* solve =
      app.add_subcommand("solve", "Solve LCP(q, A) from an instance file");
  solve->add_option("path", sopt.path, "instance JSON file")->required();
  solve
      ->add_option("--method", sopt.method,
                   "lemke | crisscross | lp | enumerate")
      ->check(CLI::IsMember({"lemke", "crisscross", "lp", "enumerate"}));
  solve->add_flag("--cross-check", sopt.cross_check,
                  "run every applicable method and compare");
  solve->add_option("--max-iter", sopt.max_iter,
                    "pivot cap (0 = default 10 * 2^n)");
  solve->add_option("--cap", sopt.cap, "enumeration size cap");
  solve->add_option("--jobs", sopt.jobs, "worker threads (0 = auto)");

  CLI::App* hidden =
      app.add_subcommand("hidden", "Hidden Z certificate operations");
  hidden->require_subcommand(1);
  std::string hpath;
  std::string heps;
  std::vector<long> halpha;
  CLI::App* hfind = hidden->add_subcommand(
      "find", "search for a certificate (seeded LPs, then the pair LP)");
  hfind->add_option("path", hpath, "matrix or instance JSON file")->required();
  CLI::App* hverify =
      hidden->add_subcommand("verify", "check the embedded certificate");
  hverify->add_option("path", hpath, "instance JSON file with certificate")
      ->required();
  CLI::App* hperturb = hidden->add_subcommand(
      "perturb", "diagonal perturbation A + eps I with adjusted certificate");
  hperturb->add_option("path", hpath, "matrix or instance JSON file")
      ->required();
  hperturb->add_option("--eps", heps, "perturbation size (rational)")
      ->required();
  CLI::App* hsub = hidden->add_subcommand(
      "submatrix", "certificate for a principal submatrix via Schur reduction");
  hsub->add_option("path", hpath, "matrix or instance JSON file")->required();
  hsub->add_option("--alpha", halpha, "1-based indices of the submatrix")
      ->required()
      ->delimiter(',');

  SuiteOptions uopt;
  CLI::App* suite =
      app.add_subcommand("suite", "randomized theorem-harness suites");
  suite->add_option("id", uopt.id, "suite identifier, e.g. T3.4")->required();
  suite->add_option("--trials", uopt.trials, "number of trials");
  suite->add_option("--n-max", uopt.n_max, "largest matrix order drawn");
  suite->add_option("--seed", uopt.seed, "base seed");
  suite->add_option("--jobs", uopt.jobs, "worker threads (0 = auto)");
  suite->add_option("--out", uopt.out_path, "also write the report here");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(classify)) return cmd_classify(copt);
    if (app.got_subcommand(solve)) return cmd_solve(sopt);
    if (app.got_subcommand(hidden)) {
      if (hidden->got_subcommand(hfind)) return cmd_hidden_find(hpath);
      if (hidden->got_subcommand(hverify)) return cmd_hidden_verify(hpath);
      if (hidden->got_subcommand(hperturb)) {
        return cmd_hidden_perturb(hpath, heps);
      }
      if (hidden->got_subcommand(hsub)) {
        return cmd_hidden_submatrix(hpath, halpha);
      }
    }
    if (app.got_subcommand(suite)) return cmd_suite(uopt);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const lcplab::Error& e) {
    emit(json{{"schema", lcplab::kSchemaTag}, {"error", e.what()}});
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
