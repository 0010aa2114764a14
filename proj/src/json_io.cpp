#include "sjtheta/json_io.hpp"

#include <string>

namespace sjtheta::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError("json: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T, class Entry>
Matrix<T> matrix_from_json(const json& j, Entry entry) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = entry(j[i][k]);
  }
  return m;
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  bad("complex entry must be a number or [re, im]");
}

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix complex_matrix_from_json(const json& j) {
  return matrix_from_json<cplx>(j, complex_from_json);
}

IntMatrix int_matrix_from_json(const json& j) {
  return matrix_from_json<std::int64_t>(j, [](const json& e) -> std::int64_t {
    if (!e.is_number_integer()) bad("integer matrix entry expected");
    return e.get<std::int64_t>();
  });
}

json to_json(const SiegelJacobiPoint& p) {
  return {{"omega", to_json(p.omega())}, {"z", to_json(p.z())}};
}

SiegelJacobiPoint point_from_json(const json& j) {
  return SiegelJacobiPoint(complex_matrix_from_json(field(j, "omega")),
                           complex_matrix_from_json(field(j, "z")));
}

json to_json(const SymplecticElement& s) {
  return {{"g", s.g()}, {"matrix", to_json(s.matrix())}};
}

SymplecticElement symplectic_from_json(const json& j) {
  SymplecticElement s(int_matrix_from_json(field(j, "matrix")));
  if (j.contains("g") && j.at("g").get<std::size_t>() != s.g()) bad("\"g\" disagrees with matrix size");
  return s;
}

json to_json(const HeisenbergElement& h) {
  return {{"lambda", to_json(h.lambda())}, {"mu", to_json(h.mu())}, {"kappa", to_json(h.kappa())}};
}

HeisenbergElement heisenberg_from_json(const json& j) {
  return HeisenbergElement(int_matrix_from_json(field(j, "lambda")),
                           int_matrix_from_json(field(j, "mu")),
                           int_matrix_from_json(field(j, "kappa")));
}

json to_json(const JacobiGroupElement& x) {
  return {{"gamma", to_json(x.gamma)}, {"heisenberg", to_json(x.h)}};
}

JacobiGroupElement jacobi_from_json(const json& j) {
  return {symplectic_from_json(field(j, "gamma")), heisenberg_from_json(field(j, "heisenberg"))};
}

json to_json(const GeneratorWord& w) {
  json out = json::array();
  for (const auto& letter : w) {
    std::visit(
        [&](const auto& l) {
          using L = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<L, SLetter>)
            out.push_back({{"kind", "s"},
                           {"lambda", to_json(l.lambda)},
                           {"mu", to_json(l.mu)},
                           {"kappa", to_json(l.kappa)}});
          else if constexpr (std::is_same_v<L, TLetter>)
            out.push_back({{"kind", "t"}, {"b", to_json(l.b)}});
          else if constexpr (std::is_same_v<L, GLetter>)
            out.push_back({{"kind", "g"}, {"alpha", to_json(l.alpha)}});
          else
            out.push_back({{"kind", "sigma"}});
        },
        letter);
  }
  return out;
}

GeneratorWord word_from_json(const json& j) {
  if (!j.is_array()) bad("word must be an array of letters");
  GeneratorWord w;
  for (const auto& l : j) {
    const auto kind = field(l, "kind").get<std::string>();
    if (kind == "s")
      w.emplace_back(SLetter{int_matrix_from_json(field(l, "lambda")),
                             int_matrix_from_json(field(l, "mu")),
                             int_matrix_from_json(field(l, "kappa"))});
    else if (kind == "t")
      w.emplace_back(TLetter{int_matrix_from_json(field(l, "b"))});
    else if (kind == "g")
      w.emplace_back(GLetter{int_matrix_from_json(field(l, "alpha"))});
    else if (kind == "sigma")
      w.emplace_back(SigmaLetter{});
    else
      bad("unknown letter kind \"" + kind + "\"");
  }
  return w;
}

json to_json(const ThetaValue& v) {
  return {{"value", to_json(v.value)},
          {"tail_bound", v.tail_bound},
          {"terms", v.terms_used},
          {"rounding_estimate", v.rounding_estimate}};
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json js = {{"kind", to_string(s.kind)}, {"factor", to_json(s.factor)}};
    switch (s.kind) {
      case ReductionStep::Kind::ZShift:
        js["lambda"] = to_json(s.lambda);
        js["mu"] = to_json(s.mu);
        break;
      case ReductionStep::Kind::Translation:
        js["b"] = to_json(s.b);
        js["z_shift"] = to_json(s.z_shift);
        break;
      case ReductionStep::Kind::Inversion:
      case ReductionStep::Kind::PartialInversion:
        js["det_omega_over_i"] = to_json(s.det_omega_over_i);
        break;
      case ReductionStep::Kind::Basis:
        js["alpha"] = to_json(s.alpha);
        break;
    }
    js["log_factor"] = to_json(s.log_factor);
    steps.push_back(std::move(js));
  }
  json dets = json::array();
  for (cplx d : t.det_factors) dets.push_back(to_json(d));
  return {{"reduced_point", to_json(t.reduced_point)},
          {"multiplier", to_json(t.multiplier)},
          {"log_multiplier", to_json(t.log_multiplier)},
          {"det_factors", std::move(dets)},
          {"steps", std::move(steps)},
          {"converged", t.converged}};
}

json to_json(const TransformationReport& r) {
  return {{"element", to_json(r.element)},
          {"point", to_json(r.point)},
          {"lhs", to_json(r.lhs)},
          {"rhs_core", to_json(r.rhs_core)},
          {"zeta", to_json(r.zeta)},
          {"modulus_defect", r.modulus_defect},
          {"zeta_eighth_defect", r.zeta_eighth_defect}};
}

}  // namespace sjtheta::io
