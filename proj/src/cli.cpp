#include "sjtheta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sjtheta/classical.hpp"
#include "sjtheta/errors.hpp"
#include "sjtheta/json_io.hpp"
#include "sjtheta/suites.hpp"
#include "sjtheta/theta.hpp"

namespace sjtheta::cli {

using nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex_digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open \"" + path + "\"");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct EvalArgs {
  std::string point_file;
  double tol = 1e-9;
  bool direct = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const SiegelJacobiPoint p = io::point_from_json(parse_json(read_input(a.point_file), a.point_file));
  json j;
  if (a.direct) {
    j = io::to_json(theta_direct(p, a.tol));
    j["reduction_steps"] = 0;
  } else {
    const ThetaResult r = theta_with_trace(p, a.tol);
    j = io::to_json(r.value);
    j["reduction_steps"] = r.trace.steps.size();
    json kinds = json::array();
    for (const auto& s : r.trace.steps) kinds.push_back(to_string(s.kind));
    j["steps"] = std::move(kinds);
    j["multiplier"] = io::to_json(r.trace.multiplier);
    j["converged"] = r.trace.converged;
  }
  emit(out, j);
  err << "theta = " << j["value"][0].get<double>() << " + " << j["value"][1].get<double>()
      << "i  (tail <= " << j["tail_bound"].get<double>() << ", " << j["terms"] << " terms)\n";
  return kPass;
}

int cmd_reduce(const std::string& point_file, std::ostream& out, std::ostream& err) {
  const SiegelJacobiPoint p = io::point_from_json(parse_json(read_input(point_file), point_file));
  const ReductionTrace t = reduce_point(p);
  emit(out, io::to_json(t));
  err << t.steps.size() << " reduction steps" << (t.converged ? "" : " (step cap reached)")
      << ", reduced lambda_min(Im Omega) = " << t.reduced_point.min_eig_im_omega() << '\n';
  return kPass;
}

struct HeckeArgs {
  std::vector<std::int64_t> gamma;
  std::vector<double> tau;
  double tol = 1e-9;
};

int cmd_hecke(const HeckeArgs& a, std::ostream& out, std::ostream& err) {
  const Gamma0Element e{a.gamma[0], a.gamma[1], a.gamma[2], a.gamma[3]};
  const HeckeCheck h = verify_hecke(e, {a.tau[0], a.tau[1]}, a.tol);
  const double defect = std::abs(h.lhs - h.rhs);
  emit(out, {{"gamma", a.gamma},
             {"tau", io::to_json(cplx(a.tau[0], a.tau[1]))},
             {"ok", h.ok},
             {"lhs", io::to_json(h.lhs)},
             {"rhs", io::to_json(h.rhs)},
             {"defect", defect}});
  err << (h.ok ? "PASS" : "FAIL") << " hecke defect " << defect << '\n';
  return h.ok ? kPass : kPropertyViolation;
}

struct VerifyArgs {
  SuiteConfig cfg;
  std::string replay_file;
  std::string failures_file;
};

json config_json(const SuiteConfig& c) {
  return {{"suite", c.suite}, {"g", c.g},     {"m", c.m},     {"count", c.count},
          {"word_len", c.word_len}, {"seed", c.seed}, {"tol", c.tol}};
}

SuiteConfig config_from_json(const json& j) {
  SuiteConfig c;
  c.suite = j.at("suite").get<std::string>();
  c.g = j.at("g").get<std::size_t>();
  c.m = j.at("m").get<std::size_t>();
  c.word_len = j.value("word_len", c.word_len);
  c.seed = j.value("seed", c.seed);
  c.tol = j.at("tol").get<double>();
  return c;
}

int cmd_verify(const VerifyArgs& a, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteConfig cfg = a.cfg;
  std::vector<json> cases;
  std::string digest_input;

  if (!a.replay_file.empty()) {
    const std::string text = read_input(a.replay_file);
    json doc = parse_json(text, a.replay_file);
    // a full report is accepted as well as its "replay" block
    if (doc.contains("replay")) doc = doc.at("replay");
    try {
      cfg = config_from_json(doc.at("config"));
      for (const auto& c : doc.at("cases")) cases.push_back(c);
    } catch (const json::exception& e) {
      throw ValidationError(a.replay_file + ": not a replay file (" + e.what() + ")");
    }
    cfg.count = cases.size();
    check_config(cfg);
    digest_input = text;
  } else {
    check_config(cfg);
    cases.reserve(cfg.count);
    for (std::size_t i = 0; i < cfg.count; ++i) cases.push_back(generate_case(cfg, i));
    digest_input = config_json(cfg).dump();
  }

  json results = json::array();
  json failing = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0, errors = 0;
  for (const auto& c : cases) {
    const CaseOutcome o = run_case(cfg, c);
    json r = {{"index", c.value("index", results.size())}, {"status", to_string(o.status)},
              {"detail", o.detail}};
    if (!o.message.empty()) r["message"] = o.message;
    results.push_back(std::move(r));
    switch (o.status) {
      case CaseStatus::Pass: ++passed; break;
      case CaseStatus::Skipped: ++skipped; break;
      case CaseStatus::Fail: ++failed; failing.push_back(c); break;
      case CaseStatus::Error: ++errors; failing.push_back(c); break;
    }
  }

  json report = {{"command", args},
                 {"inputs_digest", hex_digest(digest_input)},
                 {"config", config_json(cfg)},
                 {"results", std::move(results)},
                 {"counts",
                  {{"cases", cases.size()},
                   {"passed", passed},
                   {"failed", failed},
                   {"skipped", skipped},
                   {"errors", errors}}}};
  if (!failing.empty()) {
    json replay = {{"config", config_json(cfg)}, {"cases", failing}};
    if (!a.failures_file.empty()) {
      std::ofstream f(a.failures_file, std::ios::binary);
      if (!f) throw ValidationError("cannot write \"" + a.failures_file + "\"");
      f << replay.dump(2) << '\n';
    }
    report["replay"] = std::move(replay);
  }
  emit(out, report);

  err << cfg.suite << " (g=" << cfg.g << ", m=" << cfg.m << "): " << cases.size() << " cases, "
      << passed << " passed, " << failed << " failed, " << skipped << " skipped, " << errors
      << " errors in " << seconds_since(t0) << " s\n";
  for (const auto& r : report["results"])
    if (r.contains("message"))
      err << "  case " << r["index"] << ": " << r["status"].get<std::string>() << ": "
          << r["message"].get<std::string>() << '\n';

  if (failed > 0) return kPropertyViolation;
  if (errors > 0) return kNumericFailure;
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Theta series on the Siegel-Jacobi space: evaluation and verification"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate Theta(Omega, Z) at a point read from JSON");
  eval->add_option("point", eval_args.point_file, "Point file ({\"omega\", \"z\"}), - for stdin")
      ->required();
  eval->add_option("--tol", eval_args.tol, "Absolute tolerance")->capture_default_str();
  eval->add_flag("--direct", eval_args.direct, "Skip argument reduction");

  std::string reduce_file;
  auto* reduce = app.add_subcommand("reduce", "Print the reduction trace of a point");
  reduce->add_option("point", reduce_file, "Point file, - for stdin")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a seeded property suite");
  auto& cfg = verify_args.cfg;
  auto* suite_opt = verify->add_option("--suite", cfg.suite, "action|cocycle|theorem|hecke|lemma|poisson");
  verify->add_option("--tol", cfg.tol, "Evaluation tolerance")->capture_default_str();
  verify->add_option("--g", cfg.g, "Genus")->capture_default_str();
  verify->add_option("--m", cfg.m, "Rows of Z")->capture_default_str();
  verify->add_option("--count", cfg.count, "Number of cases")->capture_default_str();
  verify->add_option("--word-len", cfg.word_len, "Maximum word length")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  auto* replay_opt =
      verify->add_option("--replay", verify_args.replay_file, "Re-run the cases of a failure report");
  verify->add_option("--failures", verify_args.failures_file, "Write failing cases to this file");
  suite_opt->excludes(replay_opt);

  HeckeArgs hecke_args;
  auto* hecke = app.add_subcommand("hecke", "Check Hecke's formula for one element of Gamma_0(4)");
  hecke->add_option("--gamma", hecke_args.gamma, "a b c d")->expected(4)->required();
  hecke->add_option("--tau", hecke_args.tau, "Re Im")->expected(2)->required();
  hecke->add_option("--tol", hecke_args.tol, "Absolute tolerance")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*eval) return cmd_eval(eval_args, out, err);
    if (*reduce) return cmd_reduce(reduce_file, out, err);
    if (*hecke) return cmd_hecke(hecke_args, out, err);
    if (verify_args.replay_file.empty() && cfg.suite.empty())
      throw ValidationError("verify needs --suite or --replay");
    return cmd_verify(verify_args, args, out, err);
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
}

}  // namespace sjtheta::cli
