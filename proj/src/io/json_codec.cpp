#include "slelab/io/json_codec.hpp"

#include "slelab/io/format.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slelab::io {

using algebra::ParamPoly;
using algebra::Partition;
using algebra::PBWVector;
using algebra::VermaParams;

namespace {

Json parts_json(const Partition& p) {
  Json out = Json::array();
  for (int k : p.parts()) {
    out.push_back(k);
  }
  return out;
}

Json rational_list(const std::vector<algebra::Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) {
    out.push_back(x.str());
  }
  return out;
}

Json upoly_json(const algebra::UPoly& p) { return p.str("kappa"); }

}  // namespace

Json to_json(const PBWVector& v) {
  Json terms = Json::array();
  for (const auto& [p, coeff] : v.terms()) {
    terms.push_back({{"partition", parts_json(p)}, {"coeff", coeff.str()}});
  }
  return {{"level", v.level()},
          {"c", v.params().c.str()},
          {"delta", v.params().delta.str()},
          {"terms", std::move(terms)}};
}

PBWVector pbw_from_json(const Json& j) {
  VermaParams params{ParamPoly::parse(j.at("c").get<std::string>()),
                     ParamPoly::parse(j.at("delta").get<std::string>())};
  PBWVector v(j.at("level").get<int>(), params);
  for (const auto& term : j.at("terms")) {
    v.add_term(Partition(term.at("partition").get<std::vector<int>>()),
               ParamPoly::parse(term.at("coeff").get<std::string>()));
  }
  return v;
}

Json to_json(const algebra::GramMatrix& g) {
  Json basis = Json::array();
  for (const auto& p : g.basis) {
    basis.push_back(parts_json(p));
  }
  Json rows = Json::array();
  for (const auto& row : g.entries) {
    Json r = Json::array();
    for (const auto& e : row) {
      r.push_back(e.str());
    }
    rows.push_back(std::move(r));
  }
  return {{"level", g.level}, {"basis", std::move(basis)}, {"matrix", std::move(rows)}};
}

Json to_json(const bridge::NullSolution& s) {
  Json generators = Json::array();
  for (const auto& g : s.generators) {
    generators.push_back(to_json(g));
  }
  Json certificates = Json::array();
  for (const auto& root : s.roots) {
    certificates.push_back({{"kappa", root.kappa.str()},
                            {"non_negative", root.non_negative},
                            {"residue", to_json(root.certificate)}});
  }
  Json out{{"n", s.n},
           {"s", s.s},
           {"model", {s.model.p, s.model.p_prime}},
           {"module", {s.label.r, s.label.s}},
           {"c", s.params.c.str()},
           {"delta", s.params.delta.str()},
           {"kappa", rational_list(s.non_negative_roots())},
           {"rejected_negative", rational_list(s.negative_roots())},
           {"every_kappa", s.every_kappa},
           {"unique", s.roots.size() == 1 && s.residue_kappa_degree <= 1},
           {"residue_kappa_degree", s.residue_kappa_degree},
           {"generators", std::move(generators)},
           {"residue", s.residue ? to_json(*s.residue) : Json()},
           {"certificate", std::move(certificates)},
           {"note", s.diagnostic}};
  return out;
}

Json to_json(const bridge::SingularSolution& s) {
  static const char* kinds[] = {"empty", "family", "isolated", "underdetermined"};
  Json out{{"kind", kinds[static_cast<int>(s.kind)]}};
  if (s.family) {
    out["family"] = {{"c", {{"numerator", upoly_json(s.family->c_num)}, {"denominator", upoly_json(s.family->c_den)}}},
                     {"delta",
                      {{"numerator", upoly_json(s.family->delta_num)}, {"denominator", upoly_json(s.family->delta_den)}}}};
  }
  Json isolated = Json::array();
  for (const auto& sol : s.isolated) {
    isolated.push_back({{"kappa", sol.kappa.str()},
                        {"c", sol.c ? Json(sol.c->str()) : Json()},
                        {"delta", sol.delta ? Json(sol.delta->str()) : Json()}});
  }
  out["isolated"] = std::move(isolated);
  out["kappa_constraint"] = s.kappa_constraint ? Json(upoly_json(*s.kappa_constraint)) : Json();
  out["note"] = s.diagnostic;
  return out;
}

Json to_json(const stochastic::ExperimentReport& r) {
  const auto& p = r.params;
  auto component = [](const stochastic::TestReport& t) {
    return Json{{"statistic", t.statistic}, {"p_value", t.p_value}, {"n_x", t.n_x}, {"n_y", t.n_y}};
  };
  return {{"experiment", r.experiment},
          {"n", p.n},
          {"kappa", p.kappa},
          {"N", p.samples},
          {"statistic", std::max(r.real_part.statistic, r.imag_part.statistic)},
          {"p_value", std::min(r.real_part.p_value, r.imag_part.p_value)},
          {"swallow_fraction", r.swallow_fraction},
          {"seed", p.seed},
          {"components", {{"re", component(r.real_part)}, {"im", component(r.imag_part)}}},
          {"params",
           {{"alpha", p.alpha},
            {"t", p.t},
            {"t0", p.t0},
            {"t1", p.t1},
            {"z", format_complex(p.z)},
            {"dt", p.step},
            {"eps_swallow", p.eps_swallow},
            {"shared_streams", p.shared_streams}}},
          {"threshold", p.threshold},
          {"status", stochastic::status_name(r.status)},
          {"swallowed", r.swallowed},
          {"note", r.note}};
}

Json to_json(const flow::TraceCurve& curve) {
  Json points = Json::array();
  for (const auto& pt : curve.points) {
    points.push_back({{"t", pt.t}, {"re", pt.point.real()}, {"im", pt.point.imag()}});
  }
  return {{"n", curve.n}, {"s", curve.s}, {"basepoint_radius", curve.basepoint_radius}, {"points", std::move(points)}};
}

flow::TraceCurve trace_from_json(const Json& j) {
  flow::TraceCurve curve;
  curve.n = j.value("n", 1);
  curve.s = j.value("s", 1);
  curve.basepoint_radius = j.value("basepoint_radius", 1e-6);
  for (const auto& pt : j.at("points")) {
    curve.points.push_back({pt.at("t").get<double>(), {pt.at("re").get<double>(), pt.at("im").get<double>()}});
  }
  return curve;
}

std::string trace_csv(const flow::TraceCurve& curve) {
  std::string out = "t,re,im\n";
  for (const auto& pt : curve.points) {
    out += format_double(pt.t) + "," + format_double(pt.point.real()) + "," + format_double(pt.point.imag()) + "\n";
  }
  return out;
}

flow::TraceCurve trace_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "t,re,im") {
    throw std::invalid_argument("trace csv: missing header t,re,im");
  }
  flow::TraceCurve curve;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    if (a == std::string::npos || b == std::string::npos) {
      throw std::invalid_argument("trace csv: malformed row '" + line + "'");
    }
    curve.points.push_back({parse_double(line.substr(0, a)),
                            {parse_double(line.substr(a + 1, b - a - 1)), parse_double(line.substr(b + 1))}});
  }
  return curve;
}

Json to_json(const flow::HullGrid& hull) {
  Json cells = Json::array();
  for (std::size_t i = 0; i < hull.cells.size(); ++i) {
    const auto& cell = hull.cells[i];
    cells.push_back({{"re", cell.z.real()},
                     {"im", cell.z.imag()},
                     {"tau", cell.tau ? Json(*cell.tau) : Json()},
                     {"swallowed", hull.swallowed(i)}});
  }
  return {{"n", hull.n},
          {"t", hull.t},
          {"grid", {{"r_max", hull.grid.r_max}, {"n_r", hull.grid.n_r}, {"n_theta", hull.grid.n_theta}}},
          {"swallowed_count", hull.swallowed_count()},
          {"cells", std::move(cells)}};
}

std::string hull_csv(const flow::HullGrid& hull) {
  std::string out = "re,im,tau\n";
  for (const auto& cell : hull.cells) {
    out += format_double(cell.z.real()) + "," + format_double(cell.z.imag()) + "," +
           format_double(cell.tau ? *cell.tau : INFINITY) + "\n";
  }
  return out;
}

}  // namespace slelab::io
