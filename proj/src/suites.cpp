#include "sjtheta/suites.hpp"

#include <algorithm>
#include <cmath>

#include "sjtheta/automorphy.hpp"
#include "sjtheta/classical.hpp"
#include "sjtheta/errors.hpp"
#include "sjtheta/oracles.hpp"
#include "sjtheta/sampling.hpp"

namespace sjtheta {

using nlohmann::json;

namespace {

constexpr std::size_t kTheoremPoints = 3;

GeneratorWord random_word(Rng& rng, const SuiteConfig& cfg) {
  const auto len = static_cast<std::size_t>(
      rng.uniform_int(cfg.word_len == 0 ? 0 : 1, static_cast<std::int64_t>(cfg.word_len)));
  return random_theta_word(cfg.g, cfg.m, len, rng.next());
}

const std::vector<Gamma0Element>& hecke_pool() {
  static const std::vector<Gamma0Element> pool = gamma0_elements(4, 20);
  return pool;
}

double relative_point_defect(const SiegelJacobiPoint& a, const SiegelJacobiPoint& b) {
  const double scale = std::max({1.0, max_abs(a.omega()), max_abs(a.z())});
  return point_distance(a, b) / scale;
}

CaseOutcome verdict(bool ok, json detail, const std::string& what) {
  return {ok ? CaseStatus::Pass : CaseStatus::Fail, std::move(detail), ok ? "" : what};
}

CaseOutcome run_action(const SuiteConfig& cfg, const json& c) {
  const JacobiGroupElement x = compose_word(io::word_from_json(c.at("x")), cfg.g, cfg.m);
  const JacobiGroupElement y = compose_word(io::word_from_json(c.at("y")), cfg.g, cfg.m);
  const SiegelJacobiPoint p = io::point_from_json(c.at("point"));

  const SiegelJacobiPoint once = act(jacobi_mul(x, y), p);
  const SiegelJacobiPoint twice = act(x, act(y, p));
  const double defect = relative_point_defect(once, twice);
  const double min_eig = once.min_eig_im_omega();
  const bool theta_x = is_theta_element(x.gamma);
  const bool theta_inv = is_theta_element(x.gamma.inverse());
  json detail = {{"action_defect", defect},
                 {"min_eig_im_omega", min_eig},
                 {"theta_element", theta_x},
                 {"theta_element_inverse", theta_inv}};
  if (!(defect < kActionTolerance)) return verdict(false, detail, "act(xy, p) != act(x, act(y, p))");
  if (!(min_eig > 0.0)) return verdict(false, detail, "image left the Siegel-Jacobi space");
  if (!theta_x || !theta_inv) return verdict(false, detail, "word left the theta group");
  return verdict(true, detail, "");
}

CaseOutcome run_cocycle(const SuiteConfig& cfg, const json& c) {
  const JacobiGroupElement x1 = compose_word(io::word_from_json(c.at("x")), cfg.g, cfg.m);
  const JacobiGroupElement x2 = compose_word(io::word_from_json(c.at("y")), cfg.g, cfg.m);
  const SiegelJacobiPoint p = io::point_from_json(c.at("point"));
  const JacobiGroupElement x12 = jacobi_mul(x1, x2);
  const SiegelJacobiPoint p2 = act(x2, p);

  // compared through logs, J itself can overflow for long words
  const cplx l1 = log_factor_J(x1, p2), l2 = log_factor_J(x2, p), l12 = log_factor_J(x12, p);
  const cplx j_log_ratio = l1 + l2 - l12;
  const double j_defect = std::abs(std::exp(j_log_ratio) - 1.0);

  const cplx ratio = std::exp(log_factor_Jstar(x12, p) - log_factor_Jstar(x1, p2) -
                              log_factor_Jstar(x2, p));
  const double jstar_defect = std::abs(ratio * ratio - 1.0);
  const double log_scale = std::max({std::abs(l1), std::abs(l2), std::abs(l12)});
  json detail = {{"j_defect", j_defect}, {"log_scale", log_scale}, {"jstar_ratio", io::to_json(ratio)},
                 {"jstar_defect", jstar_defect}};
  if (!std::isfinite(j_defect) || !std::isfinite(jstar_defect))
    return {CaseStatus::Error, detail, "non-finite automorphic factor"};
  if (!(j_defect < kCocycleTolerance)) return verdict(false, detail, "J cocycle relation violated");
  if (!(jstar_defect < kCocycleTolerance))
    return verdict(false, detail, "J_* cocycle ratio squared differs from 1");
  return verdict(true, detail, "");
}

CaseOutcome run_theorem(const SuiteConfig& cfg, const json& c) {
  const JacobiGroupElement x = compose_word(io::word_from_json(c.at("word")), cfg.g, cfg.m);
  json per_point = json::array();
  std::size_t evaluated = 0;
  bool ok = true;
  for (const auto& jp : c.at("points")) {
    const SiegelJacobiPoint p = io::point_from_json(jp);
    try {
      const TransformationReport r = extract_zeta(x, p, cfg.tol);
      const bool pass =
          r.modulus_defect < kTheoremTolerance && r.zeta_eighth_defect < kTheoremTolerance;
      ok = ok && pass;
      ++evaluated;
      per_point.push_back({{"zeta", io::to_json(r.zeta)},
                           {"modulus_defect", r.modulus_defect},
                           {"zeta_eighth_defect", r.zeta_eighth_defect},
                           {"terms", r.terms_used}});
    } catch (const ThetaTooSmallError& e) {
      per_point.push_back({{"skipped", e.what()}});
    }
  }
  json detail = {{"points", std::move(per_point)}};
  if (evaluated == 0) return {CaseStatus::Skipped, detail, "Theta too small at every point"};
  return verdict(ok, detail, "zeta is not an eighth root of unity");
}

CaseOutcome run_hecke(const SuiteConfig& cfg, const json& c) {
  const auto v = c.at("gamma").get<std::vector<std::int64_t>>();
  if (v.size() != 4) throw ValidationError("hecke case: gamma must be [a, b, c, d]");
  const cplx tau = io::complex_from_json(c.at("tau"));
  const HeckeCheck h = verify_hecke({v[0], v[1], v[2], v[3]}, tau, cfg.tol);
  json detail = {{"lhs", io::to_json(h.lhs)}, {"rhs", io::to_json(h.rhs)},
                 {"defect", std::abs(h.lhs - h.rhs)}};
  return verdict(h.ok, detail, "Hecke transformation formula violated");
}

CaseOutcome run_lemma(const SuiteConfig&, const json& c) {
  const SiegelJacobiPoint p = io::point_from_json(c.at("point"));
  const cplx closed = gaussian_integral_closed(p);
  const cplx quad = gaussian_integral_quadrature(p, QuadratureSpec::defaults_for(p));
  const double defect = std::abs(closed - quad);
  json detail = {{"closed", io::to_json(closed)}, {"quadrature", io::to_json(quad)},
                 {"defect", defect}};
  return verdict(defect < kQuadratureTolerance, detail, "quadrature disagrees with closed form");
}

CaseOutcome run_poisson(const SuiteConfig& cfg, const json& c) {
  const SiegelJacobiPoint p = io::point_from_json(c.at("point"));
  const PoissonCheck pc = poisson_check(p, cfg.tol);
  json detail = {{"direct", io::to_json(pc.direct)}, {"dual", io::to_json(pc.dual)},
                 {"defect", pc.defect}};
  return verdict(pc.defect < cfg.tol, detail, "Poisson summation defect above tol");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"action", "cocycle", "theorem",
                                                 "hecke",  "lemma",   "poisson"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

void check_config(const SuiteConfig& cfg) {
  if (!is_suite(cfg.suite)) throw ValidationError("unknown suite \"" + cfg.suite + "\"");
  if (cfg.g == 0 || cfg.m == 0) throw ValidationError("g and m must be positive");
  if (!(cfg.tol > 0.0)) throw ValidationError("tol must be positive");
  if (cfg.word_len > 64) throw ValidationError("word length is capped at 64");
  if (cfg.suite == "lemma" && cfg.g * cfg.m > 2)
    throw ValidationError("lemma suite needs mg <= 2");
}

json generate_case(const SuiteConfig& cfg, std::size_t index) {
  Rng rng(derive_seed(cfg.seed, index));
  json c = {{"index", index}};
  const std::string& s = cfg.suite;
  if (s == "action" || s == "cocycle") {
    c["x"] = io::to_json(random_word(rng, cfg));
    c["y"] = io::to_json(random_word(rng, cfg));
    c["point"] = io::to_json(random_point(rng, cfg.g, cfg.m));
  } else if (s == "theorem") {
    c["word"] = io::to_json(random_word(rng, cfg));
    json pts = json::array();
    for (std::size_t k = 0; k < kTheoremPoints; ++k)
      pts.push_back(io::to_json(random_point(rng, cfg.g, cfg.m)));
    c["points"] = std::move(pts);
  } else if (s == "hecke") {
    const auto& pool = hecke_pool();
    const auto& e = pool[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
    c["gamma"] = {e.a, e.b, e.c, e.d};
    const double re = rng.uniform(-0.5, 0.5);
    c["tau"] = io::to_json(cplx(re, rng.uniform(0.3, 2.0)));
  } else if (s == "lemma") {
    PointSampling ps;
    ps.eig_lo = 0.3;
    c["point"] = io::to_json(random_point(rng, cfg.g, cfg.m, ps));
  } else if (s == "poisson") {
    c["point"] = io::to_json(random_point(rng, cfg.g, cfg.m));
  } else {
    throw ValidationError("unknown suite \"" + s + "\"");
  }
  return c;
}

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
    case CaseStatus::Error: return "error";
  }
  return "?";
}

CaseOutcome run_case(const SuiteConfig& cfg, const json& instance) {
  try {
    const std::string& s = cfg.suite;
    if (s == "action") return run_action(cfg, instance);
    if (s == "cocycle") return run_cocycle(cfg, instance);
    if (s == "theorem") return run_theorem(cfg, instance);
    if (s == "hecke") return run_hecke(cfg, instance);
    if (s == "lemma") return run_lemma(cfg, instance);
    if (s == "poisson") return run_poisson(cfg, instance);
    throw ValidationError("unknown suite \"" + s + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed case: ") + e.what());
  } catch (const NumericError& e) {
    return {CaseStatus::Error, json::object(), e.what()};
  }
}

}  // namespace sjtheta
