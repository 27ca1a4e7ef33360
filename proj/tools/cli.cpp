#include "cli.hpp"

#include "slelab/acceptance/criteria.hpp"
#include "slelab/algebra/minimal_model.hpp"
#include "slelab/algebra/verma.hpp"
#include "slelab/bridge/cft_bridge.hpp"
#include "slelab/errors.hpp"
#include "slelab/flow/loewner.hpp"
#include "slelab/io/format.hpp"
#include "slelab/io/json_codec.hpp"
#include "slelab/stochastic/brownian.hpp"
#include "slelab/stochastic/experiments.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef SLELAB_VERSION
#define SLELAB_VERSION "dev"
#endif

namespace slelab::cli {

namespace {

using algebra::ParamPoly;
using algebra::Partition;
using algebra::PBWVector;
using algebra::Rational;
using algebra::VermaParams;
using io::Json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IdentityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    out.push_back(item);
  }
  return out;
}

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": expected a rational p/q, got '" + text + "'");
  }
}

std::vector<int> parse_ints(const std::string& text, std::size_t count, const char* what) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": expected integers, got '" + text + "'");
    }
  }
  if (count != 0 && out.size() != count) {
    throw UsageError(std::string(what) + ": expected " + std::to_string(count) + " comma-separated integers");
  }
  return out;
}

algebra::MinimalModel parse_model(const std::string& text) {
  const auto v = parse_ints(text, 2, "--model");
  algebra::MinimalModel m{v[0], v[1]};
  try {
    algebra::minimal_model_c(m);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--model: ") + e.what());
  }
  return m;
}

algebra::KacLabel parse_label(const std::string& text, algebra::MinimalModel m) {
  const auto v = parse_ints(text, 2, "--module");
  algebra::KacLabel label{v[0], v[1]};
  try {
    algebra::minimal_model_weight(m, label);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--module: ") + e.what());
  }
  return label;
}

// Everything a subcommand needs to report where its data went.
struct Context {
  std::vector<std::string> args;
  std::ostream& out;
  std::ostream& err;
  const CLI::App* active = nullptr;
  std::string path;
};

Json manifest(const Context& ctx, const std::vector<std::string>& outputs, std::optional<std::uint64_t> seed) {
  Json flags = Json::object();
  for (const CLI::App* app = ctx.active; app != nullptr; app = app->get_parent()) {
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->get_name() == "--help" || opt->get_name() == "--version" || opt->get_lnames().empty()) {
        continue;
      }
      std::string value;
      if (opt->count() > 0) {
        for (const auto& r : opt->results()) {
          value += (value.empty() ? "" : ";") + r;
        }
      } else {
        value = opt->get_default_str();
      }
      flags[opt->get_lnames().front()] = value;
    }
  }
  return {{"tool", "sle-lab"},
          {"version", SLELAB_VERSION},
          {"subcommand", ctx.path},
          {"args", ctx.args},
          {"flags", std::move(flags)},
          {"seed", seed ? Json(*seed) : Json()},
          {"outputs", outputs}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw UsageError("cannot open '" + path + "' for writing");
  }
  f << content;
  if (!f) {
    throw UsageError("failed writing '" + path + "'");
  }
}

// Writes `content` to `out_path` (plus a manifest next to it) or to stdout.
void emit(const Context& ctx, const std::string& out_path, const std::string& content,
          std::optional<std::uint64_t> seed) {
  if (out_path.empty()) {
    ctx.out << content;
    return;
  }
  const std::string manifest_path = out_path + ".manifest.json";
  write_file(out_path, content);
  write_file(manifest_path, manifest(ctx, {out_path, manifest_path}, seed).dump(2) + "\n");
  ctx.out << out_path << "\n";
}

void emit_json(const Context& ctx, const std::string& out_path, Json body, std::optional<std::uint64_t> seed) {
  body["manifest"] = manifest(ctx, out_path.empty() ? std::vector<std::string>{}
                                                    : std::vector<std::string>{out_path, out_path + ".manifest.json"},
                              seed);
  emit(ctx, out_path, body.dump(2) + "\n", seed);
}

// ---- flows ------------------------------------------------------------------

struct DriveOptions {
  int grade = 1;
  double kappa = 0.0;
  double dt = 1e-4;
  double eps = 1e-8;
  std::optional<std::uint64_t> seed;

  void add(CLI::App* app) {
    app->add_option("--grade,-n", grade, "grade n of the hierarchy")->check(CLI::PositiveNumber);
    app->add_option("--kappa", kappa, "diffusion constant (drive sqrt(kappa) B)")->check(CLI::NonNegativeNumber);
    app->add_option("--dt", dt, "time step")->check(CLI::PositiveNumber);
    app->add_option("--eps", eps, "swallow tolerance")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "master seed (required when kappa > 0)");
  }

  flow::DrivePath drive(double horizon, bool two_sided) const {
    if (kappa == 0.0) {
      return flow::DrivePath::zero(std::max(horizon, dt), dt, two_sided);
    }
    if (!seed) {
      throw UsageError("--seed is required for stochastic commands");
    }
    return stochastic::sample_brownian(std::max(horizon, dt), dt, {*seed, 0, 0}, kappa, two_sided);
  }
};

std::vector<double> trace_times(const std::string& times, int points, double horizon, double dt) {
  std::vector<double> out;
  if (!times.empty()) {
    for (const auto& item : split(times, ',')) {
      try {
        out.push_back(io::parse_double(item));
      } catch (const std::invalid_argument&) {
        throw UsageError("--times: malformed value '" + item + "'");
      }
    }
    for (double t : out) {
      if (t < 0.0 || t > horizon * (1 + 1e-12)) {
        throw UsageError("--times: values must lie in [0, T]");
      }
      flow::grid_steps(t, dt);
    }
    return out;
  }
  const std::int64_t total = flow::grid_steps(horizon, dt);
  for (int k = 0; k <= points; ++k) {
    const std::int64_t idx = (total * k + points / 2) / points;
    const double t = static_cast<double>(idx) * dt;
    if (out.empty() || t > out.back()) {
      out.push_back(t);
    }
  }
  return out;
}

void setup_trace(CLI::App& root, Context& ctx, std::function<int()>& action) {
  auto* app = root.add_subcommand("trace", "sample the trace gamma_n(t)");
  struct Opts {
    DriveOptions drive;
    double horizon = 1.0;
    int sign = 1;
    std::string times;
    int points = 100;
    double basepoint = 1e-6;
    std::string out;
    std::string format = "csv";
  };
  auto o = std::make_shared<Opts>();
  o->drive.add(app);
  app->add_option("--T", o->horizon, "time horizon")->check(CLI::PositiveNumber);
  app->add_option("--sign,-s", o->sign, "1: forward f-map, 2: backward f-map")->check(CLI::IsMember({1, 2}));
  app->add_option("--times", o->times, "comma-separated sample times (grid multiples)");
  app->add_option("--points", o->points, "number of uniform intervals when --times is absent")
      ->check(CLI::PositiveNumber);
  app->add_option("--basepoint", o->basepoint, "basepoint radius eps of z0 = eps e^{i pi/(2n)}")
      ->check(CLI::PositiveNumber);
  app->add_option("--out,-o", o->out, "output file (stdout when absent)");
  app->add_option("--format", o->format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->callback([&ctx, &action, app, o] {
    ctx.active = app;
    ctx.path = "trace";
    action = [&ctx, o] {
      const flow::FlowConfig cfg{o->drive.grade, o->sign, o->drive.dt, o->drive.eps};
      const auto drive = o->drive.drive(o->horizon, o->sign == 2);
      const auto curve =
          flow::trace_sample(drive, cfg, trace_times(o->times, o->points, o->horizon, o->drive.dt), o->basepoint);
      if (o->format == "json") {
        emit_json(ctx, o->out, io::to_json(curve), o->drive.seed);
      } else {
        emit(ctx, o->out, io::trace_csv(curve), o->drive.seed);
      }
      return kOk;
    };
  });
}

void setup_hull(CLI::App& root, Context& ctx, std::function<int()>& action) {
  auto* app = root.add_subcommand("hull", "mark grid points swallowed by time t");
  struct Opts {
    DriveOptions drive;
    double t = 1.0;
    std::string grid = "2,40,21";
    std::string out;
    std::string format = "csv";
  };
  auto o = std::make_shared<Opts>();
  o->drive.add(app);
  app->add_option("--t", o->t, "time")->check(CLI::NonNegativeNumber);
  app->add_option("--grid", o->grid, "r_max,n_r,n_theta of the polar grid");
  app->add_option("--out,-o", o->out, "output file (stdout when absent)");
  app->add_option("--format", o->format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->callback([&ctx, &action, app, o] {
    ctx.active = app;
    ctx.path = "hull";
    action = [&ctx, o] {
      const auto parts = split(o->grid, ',');
      if (parts.size() != 3) {
        throw UsageError("--grid: expected r_max,n_r,n_theta");
      }
      flow::PolarGrid grid;
      try {
        grid.r_max = io::parse_double(parts[0]);
      } catch (const std::invalid_argument&) {
        throw UsageError("--grid: malformed r_max");
      }
      const auto counts = parse_ints(parts[1] + "," + parts[2], 2, "--grid");
      grid.n_r = counts[0];
      grid.n_theta = counts[1];
      if (!(grid.r_max > 0.0) || grid.n_r < 1 || grid.n_theta < 1) {
        throw UsageError("--grid: sizes must be positive");
      }
      const flow::FlowConfig cfg{o->drive.grade, 1, o->drive.dt, o->drive.eps};
      const auto hull = flow::hull_grid(o->drive.drive(o->t, false), cfg, o->t, grid);
      if (o->format == "json") {
        emit_json(ctx, o->out, io::to_json(hull), o->drive.seed);
      } else {
        emit(ctx, o->out, io::hull_csv(hull), o->drive.seed);
      }
      return kOk;
    };
  });
}

// ---- algebra ----------------------------------------------------------------

VermaParams numeric_params(const std::string& c, const std::string& delta) {
  return VermaParams::numeric(parse_rational(c, "--c"), parse_rational(delta, "--delta"));
}

Json partition_list(int level) {
  Json out = Json::array();
  for (const auto& p : algebra::partitions_of(level)) {
    Json parts = Json::array();
    for (int k : p.parts()) {
      parts.push_back(k);
    }
    out.push_back(std::move(parts));
  }
  return out;
}

void setup_virasoro(CLI::App& root, Context& ctx, std::function<int()>& action) {
  auto* app = root.add_subcommand("virasoro", "exact Verma-module computations");
  app->require_subcommand(1);
  struct Opts {
    int level = 1;
    std::string c;
    std::string delta;
    std::vector<std::string> terms;
    std::string model;
    std::string module = "1,1";
    int max_level = 0;
    bool expect_null = false;
  };
  auto o = std::make_shared<Opts>();

  auto* singular = app->add_subcommand("singular", "singular vectors at a level");
  singular->add_option("--level", o->level, "level")->required()->check(CLI::PositiveNumber);
  singular->add_option("--c", o->c, "central charge p/q")->required();
  singular->add_option("--delta", o->delta, "highest weight p/q")->required();
  singular->callback([&ctx, &action, singular, o] {
    ctx.active = singular;
    ctx.path = "virasoro singular";
    action = [&ctx, o] {
      const auto params = numeric_params(o->c, o->delta);
      Json vectors = Json::array();
      Json coefficients = Json::array();
      const auto basis = algebra::partitions_of(o->level);
      for (const auto& v : algebra::find_singular_vectors(o->level, params)) {
        Json row = Json::array();
        for (const auto& p : basis) {
          row.push_back(v.coefficient(p).str());
        }
        coefficients.push_back(std::move(row));
        vectors.push_back(io::to_json(v));
      }
      emit_json(ctx, "",
                {{"level", o->level},
                 {"c", params.c.str()},
                 {"delta", params.delta.str()},
                 {"basis", partition_list(o->level)},
                 {"coefficients", std::move(coefficients)},
                 {"vectors", std::move(vectors)}},
                std::nullopt);
      return kOk;
    };
  });

  auto* gram = app->add_subcommand("gram", "Gram (Shapovalov) matrix; symbolic when --c/--delta are absent");
  gram->add_option("--level", o->level, "level")->required()->check(CLI::PositiveNumber);
  gram->add_option("--c", o->c, "central charge p/q");
  gram->add_option("--delta", o->delta, "highest weight p/q");
  gram->callback([&ctx, &action, gram, o] {
    ctx.active = gram;
    ctx.path = "virasoro gram";
    action = [&ctx, o] {
      if (o->c.empty() != o->delta.empty()) {
        throw UsageError("give both --c and --delta, or neither");
      }
      const bool numeric = !o->c.empty();
      const auto params = numeric ? numeric_params(o->c, o->delta) : VermaParams::symbolic();
      Json body = io::to_json(algebra::gram_matrix(o->level, params));
      body["c"] = params.c.str();
      body["delta"] = params.delta.str();
      body["determinant"] = numeric ? Json(algebra::gram_determinant(o->level, params).str()) : Json();
      emit_json(ctx, "", std::move(body), std::nullopt);
      return kOk;
    };
  });

  auto* reduce = app->add_subcommand("reduce", "reduce a vector modulo the singular submodule");
  reduce->add_option("--term", o->terms, "partition=coeff, e.g. 2,2=-5/3 (repeatable)")->required();
  reduce->add_option("--model", o->model, "minimal model p,p' (sets c and delta)");
  reduce->add_option("--module", o->module, "Kac label r,s within --model");
  reduce->add_option("--c", o->c, "central charge p/q (without --model)");
  reduce->add_option("--delta", o->delta, "highest weight p/q (without --model)");
  reduce->add_option("--max-level", o->max_level, "collect singular vectors up to this level (default: vector level)");
  reduce->add_flag("--expect-null", o->expect_null, "exit 3 unless the vector is null");
  reduce->callback([&ctx, &action, reduce, o] {
    ctx.active = reduce;
    ctx.path = "virasoro reduce";
    action = [&ctx, o] {
      VermaParams params;
      if (!o->model.empty()) {
        const auto model = parse_model(o->model);
        const auto label = parse_label(o->module, model);
        params = VermaParams::numeric(algebra::minimal_model_c(model), algebra::minimal_model_weight(model, label));
      } else if (!o->c.empty() && !o->delta.empty()) {
        params = numeric_params(o->c, o->delta);
      } else {
        throw UsageError("reduce needs --model (and --module) or both --c and --delta");
      }
      std::vector<std::pair<Partition, ParamPoly>> terms;
      for (const auto& term : o->terms) {
        const auto eq = term.find('=');
        if (eq == std::string::npos) {
          throw UsageError("--term: expected partition=coeff, got '" + term + "'");
        }
        std::vector<int> parts = parse_ints(term.substr(0, eq), 0, "--term");
        ParamPoly coeff;
        try {
          coeff = ParamPoly::parse(term.substr(eq + 1));
          terms.emplace_back(Partition(parts), coeff);
        } catch (const std::exception& e) {
          throw UsageError("--term '" + term + "': " + e.what());
        }
      }
      const int level = terms.front().first.level();
      PBWVector v(level, params);
      for (const auto& [p, coeff] : terms) {
        if (p.level() != level) {
          throw UsageError("--term: all terms must have the same level");
        }
        v.add_term(p, coeff);
      }
      const int max_level = o->max_level > 0 ? o->max_level : level;
      const auto quotient = algebra::primitive_singular_submodule(params, max_level);
      const PBWVector residue = algebra::submodule_reduce(v, quotient.generators);
      Json generators = Json::array();
      for (const auto& g : quotient.generators) {
        generators.push_back(io::to_json(g));
      }
      emit_json(ctx, "",
                {{"vector", io::to_json(v)},
                 {"generators", std::move(generators)},
                 {"residue", io::to_json(residue)},
                 {"null", residue.is_zero()}},
                std::nullopt);
      if (o->expect_null && !residue.is_zero()) {
        throw IdentityFailure("vector is not null in the quotient");
      }
      return kOk;
    };
  });
}

void setup_bridge(CLI::App& root, Context& ctx, std::function<int()>& action) {
  auto* app = root.add_subcommand("bridge", "kappa solvers linking the walk to Verma modules");
  app->require_subcommand(1);
  struct Opts {
    int grade = 2;
    int sign = 2;
    std::string model = "5,2";
    std::string module = "1,1";
    std::string kappa;
    std::vector<std::string> expect;
    bool expect_none = false;
  };
  auto o = std::make_shared<Opts>();

  auto* solve = app->add_subcommand("solve-kappa", "kappa making the candidate null in a minimal-model module");
  solve->add_option("--grade,-n", o->grade, "grade n")->check(CLI::PositiveNumber);
  solve->add_option("--sign,-s", o->sign, "sign s")->check(CLI::IsMember({1, 2}));
  solve->add_option("--model", o->model, "minimal model p,p'");
  solve->add_option("--module", o->module, "Kac label r,s");
  solve->add_option("--expect", o->expect, "expected non-negative roots (exit 3 on mismatch)")->delimiter(',');
  solve->add_flag("--expect-none", o->expect_none, "expect no non-negative root (exit 3 otherwise)");
  solve->callback([&ctx, &action, solve, o] {
    ctx.active = solve;
    ctx.path = "bridge solve-kappa";
    action = [&ctx, o] {
      const auto model = parse_model(o->model);
      const auto label = parse_label(o->module, model);
      const auto solution = bridge::solve_kappa_null(o->grade, o->sign, model, label);
      emit_json(ctx, "", io::to_json(solution), std::nullopt);
      const auto roots = solution.non_negative_roots();
      if (o->expect_none && !roots.empty()) {
        throw IdentityFailure("expected no non-negative root");
      }
      if (!o->expect.empty()) {
        std::vector<Rational> expected;
        for (const auto& e : o->expect) {
          expected.push_back(parse_rational(e, "--expect"));
        }
        std::sort(expected.begin(), expected.end());
        if (expected != roots) {
          throw IdentityFailure("kappa roots differ from --expect");
        }
      }
      return kOk;
    };
  });

  auto* obstruction = app->add_subcommand("obstruction", "L_1 applied to the candidate vector");
  obstruction->add_option("--grade,-n", o->grade, "grade n >= 2")->check(CLI::PositiveNumber);
  obstruction->add_option("--sign,-s", o->sign, "sign s")->check(CLI::IsMember({1, 2}));
  obstruction->add_option("--kappa", o->kappa, "numeric kappa p/q (symbolic when absent)");
  obstruction->callback([&ctx, &action, obstruction, o] {
    ctx.active = obstruction;
    ctx.path = "bridge obstruction";
    action = [&ctx, o] {
      if (o->grade < 2) {
        throw UsageError("obstruction needs --grade >= 2");
      }
      const auto spec = o->kappa.empty()
                            ? bridge::CandidateSpec::symbolic(o->grade, o->sign)
                            : bridge::CandidateSpec::numeric(o->grade, o->sign, parse_rational(o->kappa, "--kappa"));
      const auto params = VermaParams::symbolic();
      emit_json(ctx, "",
                {{"n", o->grade},
                 {"s", o->sign},
                 {"kappa", spec.kappa.str()},
                 {"candidate", io::to_json(bridge::candidate_vector(spec, params))},
                 {"L1_candidate", io::to_json(bridge::obstruction_L1(spec, params))}},
                std::nullopt);
      return kOk;
    };
  });

  auto* singular = app->add_subcommand("singular", "(kappa, c, delta) making the candidate singular");
  singular->add_option("--grade,-n", o->grade, "grade n")->check(CLI::PositiveNumber);
  singular->add_option("--sign,-s", o->sign, "sign s")->check(CLI::IsMember({1, 2}));
  singular->callback([&ctx, &action, singular, o] {
    ctx.active = singular;
    ctx.path = "bridge singular";
    action = [&ctx, o] {
      Json body = io::to_json(bridge::solve_kappa_singular(o->grade, o->sign));
      body["n"] = o->grade;
      body["s"] = o->sign;
      emit_json(ctx, "", std::move(body), std::nullopt);
      return kOk;
    };
  });
}

// ---- statistics -------------------------------------------------------------

void setup_stats(CLI::App& root, Context& ctx, std::function<int()>& action) {
  auto* app = root.add_subcommand("stats", "Monte Carlo tests of the law identities");
  app->require_subcommand(1);
  struct Opts {
    stochastic::ExperimentParams p;
    std::optional<std::uint64_t> seed;
    std::string z;
    std::string out;
  };
  auto o = std::make_shared<Opts>();
  for (const char* kind : {"scale-invariance", "stationarity", "backward-law"}) {
    auto* sub = app->add_subcommand(kind, std::string(kind) + " experiment");
    sub->add_option("--grade,-n", o->p.n, "grade n")->check(CLI::PositiveNumber);
    sub->add_option("--kappa", o->p.kappa, "diffusion constant")->check(CLI::NonNegativeNumber);
    sub->add_option("--alpha", o->p.alpha, "scale factor (scale-invariance)")->check(CLI::PositiveNumber);
    sub->add_option("--t", o->p.t, "time (scale-invariance, backward-law)")->check(CLI::NonNegativeNumber);
    sub->add_option("--t0", o->p.t0, "shift time (stationarity)")->check(CLI::NonNegativeNumber);
    sub->add_option("--t1", o->p.t1, "end time (stationarity)")->check(CLI::NonNegativeNumber);
    sub->add_option("--z", o->z, "start point a+bi (default 2i for n = 1, 1.5 e^{i pi/(2n)} otherwise)");
    sub->add_option("--N", o->p.samples, "samples per side")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o->seed, "master seed")->required();
    sub->add_option("--dt", o->p.step, "time step")->check(CLI::PositiveNumber);
    sub->add_option("--eps", o->p.eps_swallow, "swallow tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--shared-streams", o->p.shared_streams, "drive both sides from the same random streams");
    sub->add_option("--out,-o", o->out, "output file (stdout when absent)");
    sub->callback([&ctx, &action, sub, o, name = std::string(kind)] {
      ctx.active = sub;
      ctx.path = "stats " + name;
      action = [&ctx, o, name] {
        auto p = o->p;
        p.seed = *o->seed;
        if (o->z.empty()) {
          p.z = p.n == 1 ? flow::CPoint(0.0, 2.0) : 1.5 * flow::Wedge{p.n}.bisector();
        } else {
          try {
            p.z = io::parse_complex(o->z);
          } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--z: ") + e.what());
          }
        }
        const auto report = name == "scale-invariance" ? stochastic::scale_invariance_experiment(p)
                            : name == "stationarity"   ? stochastic::stationarity_experiment(p)
                                                       : stochastic::backward_law_experiment(p);
        emit_json(ctx, o->out, io::to_json(report), p.seed);
        return kOk;
      };
    });
  }
}

void setup_selftest(CLI::App& root, Context& ctx, std::function<int()>& action) {
  auto* app = root.add_subcommand("selftest", "run the acceptance suite");
  auto ids = std::make_shared<std::vector<int>>();
  app->add_option("--only", *ids, "criterion ids to run (default: all)")->delimiter(',');
  app->callback([&ctx, &action, app, ids] {
    ctx.active = app;
    ctx.path = "selftest";
    action = [&ctx, ids] {
      const auto results = acceptance::run_suite(*ids, ctx.out);
      const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      ctx.out << "\ncriterion  status\n";
      for (const auto& r : results) {
        ctx.out << (r.id < 10 ? " " : "") << r.id << "         " << (r.passed ? "pass" : "FAIL") << "  " << r.name
                << "\n";
      }
      ctx.out << passed << "/" << results.size() << " criteria passed\n";
      return passed == static_cast<long>(results.size()) ? kOk : kIdentity;
    };
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sle-lab: SLE hierarchy and Virasoro null-vector lab", "sle-lab"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", SLELAB_VERSION);
  Context ctx{args, out, err, nullptr, ""};
  std::function<int()> action;
  setup_trace(app, ctx, action);
  setup_hull(app, ctx, action);
  setup_virasoro(app, ctx, action);
  setup_bridge(app, ctx, action);
  setup_stats(app, ctx, action);
  setup_selftest(app, ctx, action);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const IdentityFailure& e) {
    err << "identity failure: " << e.what() << "\n";
    return kIdentity;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << (ctx.active ? ctx.active->help() : app.help());
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kNumeric;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << (ctx.active ? ctx.active->help() : app.help());
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace slelab::cli
