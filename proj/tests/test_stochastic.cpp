#include "slelab/stochastic/brownian.hpp"
#include "slelab/stochastic/experiments.hpp"
#include "slelab/stochastic/ks.hpp"
#include "slelab/stochastic/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace slelab;
using namespace slelab::stochastic;

namespace {

struct Moments {
  double mean = 0.0;
  double var = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) {
    ss += (x - mean) * (x - mean);
  }
  return {mean, ss / (n - 1)};
}

}  // namespace

TEST_CASE("stream derivation") {
  CHECK(derive_seed({1, 2, 3}) == derive_seed({1, 2, 3}));
  CHECK(derive_seed({1, 2, 3}) != derive_seed({1, 2, 4}));
  CHECK(derive_seed({1, 2, 3}) != derive_seed({1, 3, 3}));
  CHECK(derive_seed({1, 2, 3}) != derive_seed({2, 2, 3}));
  // reference value of splitmix64 from state 0
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("normal stream moments") {
  NormalStream s(StreamKey{7, 0, 0});
  std::vector<double> xs(200000);
  for (double& x : xs) {
    x = s.next();
  }
  const auto m = moments(xs);
  const double n = static_cast<double>(xs.size());
  CHECK(std::abs(m.mean) < 3.0 / std::sqrt(n));
  CHECK(std::abs(m.var - 1.0) < 3.0 * std::sqrt(2.0 / n));
  NormalStream u(StreamKey{7, 0, 1});
  for (int i = 0; i < 10000; ++i) {
    const double v = u.uniform();
    CHECK((v > 0.0 && v <= 1.0));
  }
}

TEST_CASE("brownian paths are reproducible and zero at kappa = 0") {
  const auto a = sample_brownian(1.0, 1e-2, {3, 4, 0}, 2.0, true);
  CHECK(a == sample_brownian(1.0, 1e-2, {3, 4, 0}, 2.0, true));
  CHECK_FALSE(a == sample_brownian(1.0, 1e-2, {3, 5, 0}, 2.0, true));
  CHECK(a.at(0) == 0.0);
  CHECK(a.min_index() == -100);
  for (double y : sample_brownian(1.0, 1e-2, {3, 4, 0}, 0.0, true).samples()) {
    CHECK(y == 0.0);
  }
}

TEST_CASE("brownian covariance structure") {
  const double kappa = 3.0, dt = 1e-2;
  const int paths = 4000;
  std::vector<double> end, mid, back, prod, lag;
  for (int i = 0; i < paths; ++i) {
    const auto p = sample_brownian(1.0, dt, {11, static_cast<std::uint64_t>(i), 0}, kappa, true);
    end.push_back(p.at(100));
    mid.push_back(p.at(40));
    back.push_back(p.at(-100));
    prod.push_back(p.at(40) * p.at(100));
    lag.push_back((p.at(1) - p.at(0)) * (p.at(2) - p.at(1)));
  }
  const double n = paths;
  const auto me = moments(end);
  CHECK(std::abs(me.var - kappa) < 3.0 * kappa * std::sqrt(2.0 / n));
  const auto mb = moments(back);
  CHECK(std::abs(mb.var - kappa) < 3.0 * kappa * std::sqrt(2.0 / n));
  // E[Y_s Y_t] = kappa min(s, t)
  const auto mp = moments(prod);
  CHECK(std::abs(mp.mean - 0.4 * kappa) < 3.0 * std::sqrt(mp.var / n));
  // increments are uncorrelated
  const auto ml = moments(lag);
  CHECK(std::abs(ml.mean) < 3.0 * std::sqrt(ml.var / n));
  // the two branches are independent
  std::vector<double> cross;
  for (int i = 0; i < paths; ++i) {
    cross.push_back(end[static_cast<std::size_t>(i)] * back[static_cast<std::size_t>(i)]);
  }
  const auto mc = moments(cross);
  CHECK(std::abs(mc.mean) < 3.0 * std::sqrt(mc.var / n));
}

TEST_CASE("Kolmogorov tail values") {
  CHECK(kolmogorov_q(0.5) == doctest::Approx(0.9639452436648751).epsilon(1e-12));
  CHECK(kolmogorov_q(1.0) == doctest::Approx(0.26999967167735456).epsilon(1e-12));
  CHECK(kolmogorov_q(1.36) == doctest::Approx(0.049485876755377876).epsilon(1e-12));
  CHECK(kolmogorov_q(1.63) == doctest::Approx(0.009846364888486529).epsilon(1e-12));
  CHECK(kolmogorov_q(2.0) == doctest::Approx(0.0006709252557796953).epsilon(1e-12));
  CHECK(kolmogorov_q(0.0) == 1.0);
}

TEST_CASE("two-sample KS statistic with ties") {
  const auto r = ks_two_sample({0.1, 0.4, 0.7, 1.5, 0.4}, {0.2, 0.3, 0.5, 0.6, 2.0, 0.4});
  CHECK(r.statistic == doctest::Approx(0.23333333333333334).epsilon(1e-14));
  CHECK(r.p_value == doctest::Approx(0.9928572484449283).epsilon(1e-10));
  CHECK(r.n_x == 5);
  CHECK(r.n_y == 6);
  const auto same = ks_two_sample({1, 2, 3}, {1, 2, 3});
  CHECK(same.statistic == 0.0);
  CHECK(same.p_value == 1.0);
}

TEST_CASE("KS separates shifted samples and is calibrated under the null") {
  NormalStream s(StreamKey{21, 0, 0});
  std::vector<double> xs(500), ys(500);
  for (std::size_t i = 0; i < 500; ++i) {
    xs[i] = s.next();
    ys[i] = s.next() + 1.0;
  }
  CHECK(ks_two_sample(xs, ys).p_value < 1e-6);
  int passes = 0;
  for (std::uint64_t run = 0; run < 100; ++run) {
    NormalStream r(StreamKey{22, run, 0});
    std::vector<double> a(200), b(200);
    for (std::size_t i = 0; i < 200; ++i) {
      a[i] = r.next();
      b[i] = r.next();
    }
    passes += ks_two_sample(a, b).pass() ? 1 : 0;
  }
  CHECK(passes >= 95);
}

TEST_CASE("experiment comparison") {
  ExperimentParams p;
  p.samples = 300;
  p.seed = 4;
  p.alpha = 1.0;
  p.shared_streams = true;
  const auto shared = scale_invariance_experiment(p);
  CHECK(shared.real_part.p_value == 1.0);
  CHECK(shared.status == ExperimentStatus::pass);

  PairedSamples shifted;
  NormalStream s(StreamKey{5, 0, 0});
  for (int i = 0; i < 400; ++i) {
    shifted.left.emplace_back(s.next(), 1.0 + s.next());
    shifted.right.emplace_back(s.next() + 0.5, 1.0 + s.next());
    shifted.keep.push_back(true);
  }
  const auto bad = compare("shifted", p, shifted);
  CHECK(bad.status == ExperimentStatus::fail);
  CHECK(bad.real_part.p_value < 1e-6);

  PairedSamples mostly_lost = shifted;
  std::fill(mostly_lost.keep.begin(), mostly_lost.keep.begin() + 100, false);
  CHECK(compare("lost", p, mostly_lost).status == ExperimentStatus::inconclusive);
}

TEST_CASE("stationarity and backward law at small sample size") {
  ExperimentParams p;
  p.samples = 400;
  p.seed = 8;
  p.step = 1e-3;
  p.t0 = 0.1;
  p.t1 = 0.3;
  p.t = 0.2;
  CHECK(stationarity_experiment(p).status == ExperimentStatus::pass);
  CHECK(backward_law_experiment(p).status == ExperimentStatus::pass);
}
