// Copyright 2026 The fracop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fracop/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "fracop/catalogue.hpp"
#include "fracop/errors.hpp"
#include "fracop/oracles.hpp"
#include "fracop/spaces.hpp"

namespace fracop {
namespace {

// Default tolerances: closed-form targets, then anything that needs
// differentiation or a boundary limit.
constexpr double kClosedTol = 1e-6;
constexpr double kNumericTol = 1e-5;
constexpr double kEquivalenceTol = 1e-8;
constexpr double kLimitTol = 1e-4;
constexpr double kInequalitySlack = 1.0 + 1e-6;

struct Case {
  std::string name;
  std::string params;
  double tolerance;
  bool scalable;  // false for ratio-type tolerances
  std::function<double()> residual;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

SuiteReport run_cases(const std::string& suite, std::vector<Case> cases,
                      const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = suite;
  report.seed = opts.seed;
  report.cases.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const Case& c = cases[i];
      CaseRecord& rec = report.cases[i];
      rec.name = c.name;
      rec.params = c.params;
      rec.tolerance = c.scalable ? c.tolerance * opts.tol_scale : c.tolerance;
      try {
        rec.residual = c.residual();
        rec.status = rec.residual <= rec.tolerance ? CaseStatus::Passed : CaseStatus::Violated;
      } catch (const std::exception& e) {
        rec.residual = NAN;
        rec.status = CaseStatus::EvaluationFailed;
        rec.message = e.what();
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, cases.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& rec : report.cases) {
    if (!rec.passed()) report.passed = false;
    if (std::isfinite(rec.residual)) report.max_residual = std::max(report.max_residual, rec.residual);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

struct TestMap {
  std::string name;
  MonotoneMap map;
  Interval interval;
};

// Intervals with Ψ(a) = 1.
std::vector<TestMap> test_maps() {
  return {{"identity", parse_map("identity"), {1.0, 3.0}},
          {"sqrt", parse_map("sqrt"), {1.0, 3.0}},
          {"power:2", parse_map("power:2"), {1.0, 3.0}},
          {"exp", parse_map("exp"), {0.0, 2.0}}};
}

// Intervals with Ψ(a) = 1 and Ψ(b) = e.
std::vector<TestMap> holder_maps() {
  return {{"identity", parse_map("identity"), {1.0, std::exp(1.0)}},
          {"sqrt", parse_map("sqrt"), {1.0, std::exp(2.0)}},
          {"power:2", parse_map("power:2"), {1.0, std::exp(0.5)}},
          {"exp", parse_map("exp"), {0.0, 1.0}}};
}

struct TestFunction {
  std::string name;
  Integrand f;
};

std::vector<TestFunction> test_functions(const MonotoneMap& map, double s, double a) {
  std::vector<TestFunction> out;
  for (double nu : {0.8, 1.0, 2.0, 3.5}) {
    out.push_back({"logpow:" + num(nu), catalogue::logpow(map, nu, s, a).integrand()});
  }
  out.push_back({"const:1", catalogue::constant(map, 1.0).integrand()});
  out.push_back({"logpoly:1,-0.5,0.25", catalogue::logpoly(map, {1.0, -0.5, 0.25}, a).integrand()});
  out.push_back({"psi_inv", catalogue::psi_power(map, -1.0).integrand()});
  return out;
}

std::vector<double> interior_grid(Interval iv, int points) {
  std::vector<double> xs;
  for (int i = 1; i <= points; ++i) xs.push_back(iv.lo + (iv.hi - iv.lo) * i / points);
  return xs;
}

// D^order with the sign convention of the semigroup laws: positive orders are
// RL derivatives, negative ones integrals, zero the identity.
OperatorSpec signed_operator(const MonotoneMap& map, double s, double a, double order,
                             Side side = Side::Left) {
  OperatorSpec spec{.map = map, .side = side, .s = s, .anchor = a};
  spec.kind = order > 0.0 ? Kind::DerivativeRL : Kind::Integral;
  spec.mu = std::abs(order);
  return spec;
}

double value(const OperatorSpec& spec, const Integrand& f, double x) {
  return evaluate(spec, f, x).value;
}

double relative(double got, double want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

std::string header(const TestMap& m, double s) { return "psi=" + m.name + " s=" + num(s); }

}  // namespace

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

SuiteReport check_semigroup(const SuiteOptions& opts) {
  std::vector<Case> cases;
  const std::vector<double> orders{0.3, 0.5, 0.7, 1.2};
  for (const auto& m : test_maps()) {
    const double a = m.interval.lo;
    const auto xs = interior_grid(m.interval, 11);
    for (double s : {0.0, 1.0}) {
      for (const auto& tf : test_functions(m.map, s, a)) {
        const std::string base = header(m, s) + " f=" + tf.name;
        for (double mu : orders) {
          for (double nu : orders) {
            const std::string p = base + " mu=" + num(mu) + " nu=" + num(nu);
            cases.push_back({"integral-integral", p, kClosedTol, true, [=] {
              const auto inner = as_integrand(signed_operator(m.map, s, a, -mu), tf.f);
              const auto outer = signed_operator(m.map, s, a, -nu);
              const auto target = signed_operator(m.map, s, a, -(mu + nu));
              double r = 0.0;
              for (double x : xs) r = std::max(r, relative(value(outer, inner, x), value(target, tf.f, x)));
              return r;
            }});
            cases.push_back({"derivative-integral", p, mu == nu ? kNumericTol : kClosedTol, true, [=] {
              const auto inner = as_integrand(signed_operator(m.map, s, a, -nu), tf.f);
              const auto outer = signed_operator(m.map, s, a, mu);
              const auto target = signed_operator(m.map, s, a, mu - nu);
              double r = 0.0;
              for (double x : xs) r = std::max(r, relative(value(outer, inner, x), value(target, tf.f, x)));
              return r;
            }});
          }
          for (double order : {mu, -mu}) {
            for (int n : {1, 2}) {
              const std::string p = base + " order=" + num(order) + " n=" + num(n);
              cases.push_back({"delta-power", p, kClosedTol, true, [=] {
                const auto inner = as_integrand(signed_operator(m.map, s, a, order), tf.f);
                const auto target = signed_operator(m.map, s, a, order + n);
                double r = 0.0;
                for (double x : xs) {
                  r = std::max(r, relative(oriented_delta(m.map, 1, s, n, inner, Site::at(x)), value(target, tf.f, x)));
                }
                return r;
              }});
            }
          }
        }
        cases.push_back({"zero-order", base, 0.0, false, [=] {
          double r = 0.0;
          const auto id = signed_operator(m.map, s, a, 0.0);
          for (double x : xs) r = std::max(r, std::abs(value(id, tf.f, x) - tf.f(x)));
          return r;
        }});
      }
    }
  }
  return run_cases("semigroup", std::move(cases), opts);
}

SuiteReport check_equivalence(const SuiteOptions& opts) {
  std::vector<Case> cases;
  for (const auto& m : test_maps()) {
    const double a = m.interval.lo;
    const auto xs = interior_grid(m.interval, 11);
    for (double s : {0.0, 1.0, 2.5}) {
      for (double nu : {0.8, 1.0, 2.0, 3.5}) {
        const auto f = catalogue::logpow(m.map, nu, s, a).integrand();
        for (double mu : {0.3, 0.7, 1.5}) {
          const std::string p = header(m, s) + " f=logpow:" + num(nu) + " mu=" + num(mu);
          cases.push_back({"three-way", p, kEquivalenceTol, true, [=] {
            const auto spec = signed_operator(m.map, s, a, -mu);
            QuadratureConfig cfg;
            double r = 0.0;
            for (double x : xs) {
              const double direct = value(spec, f, x);
              const double h = conjugation_h(spec, f, x, cfg);
              const double t = conjugation_t(spec, f, x, cfg);
              const double scale = std::max(1.0, std::abs(direct));
              r = std::max({r, std::abs(direct - h) / scale, std::abs(direct - t) / scale,
                            std::abs(h - t) / scale});
            }
            return r;
          }});
        }
      }
    }
  }
  return run_cases("equivalence", std::move(cases), opts);
}

SuiteReport check_newton_leibniz(const SuiteOptions& opts) {
  std::vector<Case> cases;
  for (const auto& m : test_maps()) {
    const double a = m.interval.lo;
    const double width = m.interval.hi - a;
    const auto xs = interior_grid(m.interval, 11);
    for (double s : {0.0, 1.0}) {
      for (double mu : {0.3, 0.5, 0.7, 1.3, 1.5, 1.7}) {
        auto lp = [&](double nu) { return catalogue::logpow(m.map, nu, s, a); };
        std::vector<TestFunction> fs{{"logpow:2", lp(2.0).integrand()},
                                     {"logpow:3.5", lp(3.5).integrand()},
                                     {"logpow:mu", lp(mu).integrand()},
                                     {"logpow:mu+0.3", lp(mu + 0.3).integrand()}};
        fs.push_back({"logpow:mu+logpow:2", (lp(mu) + lp(2.0)).integrand()});
        for (const auto& tf : fs) {
          const std::string p = header(m, s) + " mu=" + num(mu) + " f=" + tf.name;
          cases.push_back({"integral-of-derivative", p, kNumericTol, true, [=] {
            const auto deriv = signed_operator(m.map, s, a, mu);
            const auto integ = signed_operator(m.map, s, a, -mu);
            const auto lhs_fn = as_integrand(deriv, tf.f);
            const auto limits = newton_leibniz_limits(deriv, tf.f, width);
            double r = 0.0;
            for (double x : xs) {
              const double lhs = value(integ, lhs_fn, x);
              const double rhs = tf.f(x) - newton_leibniz_boundary(deriv, limits, x);
              r = std::max(r, std::abs(lhs - rhs) / (1.0 + std::abs(tf.f(x))));
            }
            return r;
          }});
        }
      }
    }
  }
  return run_cases("newton-leibniz", std::move(cases), opts);
}

namespace {

// ∫_a^b F dy in y = log Ψ. F receives the point twice: as an exact log
// offset from a and as an exact log offset from b, so that operators
// anchored at either end never see their anchor through rounding.
double integrate_dy(const MonotoneMap& map, Interval iv,
                    const std::function<double(const Site&, const Site&)>& F) {
  const double ya = map.log_value(iv.lo);
  const double L = map.log_increment(iv.lo, iv.hi - iv.lo);
  auto g = [&](GradedNode n) {
    const double x = map.inverse_log(ya + n.from_lo);
    return F(Site{x, iv.lo, n.from_lo}, Site{x, iv.hi, -n.from_hi});
  };
  return graded_integrate(g, L);
}

// |∫ f I_a g dy - ∫ g I_b f dy| / (1 + |∫ f I_a g dy|).
double swap_residual(const MonotoneMap& map, Interval iv, double s, double mu, const Integrand& f,
                     const Integrand& g) {
  const auto left = signed_operator(map, s, iv.lo, -mu);
  const auto right = signed_operator(map, s, iv.hi, -mu, Side::Right);
  const double lhs = integrate_dy(map, iv, [&](const Site& sa, const Site&) {
    return f.value(sa) * evaluate(left, g, sa).value;
  });
  const double rhs = integrate_dy(map, iv, [&](const Site& sa, const Site& sb) {
    return g.value(sa) * evaluate(right, f, sb).value;
  });
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

}  // namespace

SuiteReport check_integration_by_parts(const SuiteOptions& opts) {
  std::vector<Case> cases;
  cases.push_back({"fractional-integrals", "psi=identity s=0 mu=0.5 interval=[1,e] f=const:1 g=const:1",
                   1e-7, true, [] {
    const auto map = parse_map("identity");
    const auto one = catalogue::constant(map, 1.0).integrand();
    return swap_residual(map, {1.0, std::exp(1.0)}, 0.0, 0.5, one, one);
  }});
  for (const auto& m : test_maps()) {
    const double a = m.interval.lo;
    const double b = m.interval.hi;
    const double width = b - a;
    const auto& map = m.map;
    for (double s : {0.0, 1.0}) {
      for (double mu : {0.5, 1.5}) {
        const std::string base = header(m, s) + " mu=" + num(mu);
        // Swapping the sides: ∫ f I_a g dy = ∫ g I_b f dy.
        const std::vector<std::pair<std::string, std::pair<Integrand, Integrand>>> pairs{
            {"f=const:1 g=const:1",
             {catalogue::constant(map, 1.0).integrand(), catalogue::constant(map, 1.0).integrand()}},
            {"f=logpoly:0.5,1 g=logpow:0.8",
             {catalogue::logpoly(map, {0.5, 1.0}, a).integrand(),
              catalogue::logpow(map, 0.8, s, a).integrand()}},
            {"f=psi_inv g=logpow:2",
             {catalogue::psi_power(map, -1.0).integrand(), catalogue::logpow(map, 2.0, s, a).integrand()}}};
        for (const auto& [label, fg] : pairs) {
          const auto f = fg.first;
          const auto g = fg.second;
          cases.push_back({"fractional-integrals", base + " " + label, kClosedTol, true,
                           [=] { return swap_residual(map, m.interval, s, mu, f, g); }});
        }
        const int n = static_cast<int>(std::floor(mu)) + 1;
        // h = (Ψ/Ψ') f is the catalogue function; f dx = h dy.
        for (const bool zero : {false, true}) {
          const auto h = zero ? catalogue::constant(map, 0.0).integrand()
                              : catalogue::logpoly(map, {0.5, 1.0, -0.3}, a).integrand();
          const std::string hl = zero ? " h=0" : " h=logpoly:0.5,1,-0.3";
          // First identity: left RL derivative of g, right Caputo of h.
          const auto g1 = catalogue::logpow(map, 2.0, s, a).integrand();
          cases.push_back({"left-derivative", base + hl + " g=logpow:2", kNumericTol, true, [=] {
            const auto d_left = signed_operator(map, s, a, mu);
            OperatorSpec caputo_right{.map = map, .kind = Kind::DerivativeCaputo, .side = Side::Right,
                                      .mu = mu, .s = s, .anchor = b};
            const double lhs = integrate_dy(map, m.interval, [&](const Site& st, const Site&) {
              return h.value(st) * evaluate(d_left, g1, st).value;
            });
            double rhs = integrate_dy(map, m.interval, [&](const Site& st, const Site& sb) {
              return g1.value(st) * evaluate(caputo_right, h, sb).value;
            });
            for (int k = 0; k < n; ++k) {
              const auto op = signed_operator(map, s, a, mu - k - 1.0);
              const double at_b = oriented_delta(map, -1, s, k, h, Site::at(b)) * value(op, g1, b);
              const double at_a =
                  oriented_delta(map, -1, s, k, h, Site::at(a)) * evaluate_with_limit(op, g1, a, width).value;
              rhs += at_b - at_a;
            }
            return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
          }});
          // Second identity: right RL derivative of g, left Caputo of h.
          const auto g2 = catalogue::logpow_right(map, 2.0, s, b).integrand();
          cases.push_back({"right-derivative", base + hl + " g=rlogpow:2", kNumericTol, true, [=] {
            const auto d_right = signed_operator(map, s, b, mu, Side::Right);
            OperatorSpec caputo_left{.map = map, .kind = Kind::DerivativeCaputo, .side = Side::Left,
                                     .mu = mu, .s = s, .anchor = a};
            const double lhs = integrate_dy(map, m.interval, [&](const Site& st, const Site& sb) {
              return h.value(st) * evaluate(d_right, g2, sb).value;
            });
            double rhs = integrate_dy(map, m.interval, [&](const Site& st, const Site& sb) {
              return g2.value(sb) * evaluate(caputo_left, h, st).value;
            });
            for (int k = 0; k < n; ++k) {
              const auto op = signed_operator(map, s, b, mu - k - 1.0, Side::Right);
              const double at_b =
                  oriented_delta(map, 1, s, k, h, Site::at(b)) * evaluate_with_limit(op, g2, b, width).value;
              const double at_a = oriented_delta(map, 1, s, k, h, Site::at(a)) * value(op, g2, a);
              rhs -= at_b - at_a;
            }
            return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
          }});
        }
      }
    }
  }
  return run_cases("int-by-parts", std::move(cases), opts);
}

SuiteReport check_limits(const SuiteOptions& opts) {
  std::vector<Case> cases;
  for (const auto& m : test_maps()) {
    const double a = m.interval.lo;
    const auto xs = interior_grid(m.interval, 11);
    for (double s : {0.0, 1.0}) {
      const auto smooth = (catalogue::constant(m.map, 1.0) +
                           catalogue::logpoly(m.map, {0.0, 0.5, 0.2}, a)).integrand();
      const auto cubic = catalogue::logpow(m.map, 3.0, s, a).integrand();
      const auto general = (catalogue::logpow(m.map, 3.0, s, a) + catalogue::constant(m.map, 1.0) +
                            catalogue::logpoly(m.map, {0.0, 0.4}, a)).integrand();
      const std::string base = header(m, s);
      // |op^μ f - f| along μ = 0.1, 0.01, 0.001; residual is the largest
      // ratio of successive rungs.
      for (const bool derivative : {false, true}) {
        cases.push_back({derivative ? "derivative-order-to-zero" : "integral-order-to-zero",
                         base + " f=1+logpoly:0,0.5,0.2", 0.5, false, [=] {
          std::vector<double> rung;
          for (double mu : {0.1, 0.01, 0.001}) {
            const auto spec = signed_operator(m.map, s, a, derivative ? mu : -mu);
            double r = 0.0;
            for (double x : xs) r = std::max(r, std::abs(value(spec, smooth, x) - smooth(x)));
            rung.push_back(r);
          }
          return std::max(rung[1] / rung[0], rung[2] / rung[1]);
        }});
      }
      for (int n : {1, 2}) {
        const double eps = 1e-6;
        auto compare = [=](Kind kind, double mu, int order, const Integrand& f) {
          OperatorSpec spec{.map = m.map, .kind = kind, .mu = mu, .s = s, .anchor = a};
          double r = 0.0;
          for (double x : xs) r = std::max(r, relative(value(spec, f, x), oriented_delta(m.map, 1, s, order, f, Site::at(x))));
          return r;
        };
        const std::string p = base + " n=" + num(n);
        cases.push_back({"rl-order-to-n", p + " f=logpow:3", kLimitTol, true,
                         [=] { return compare(Kind::DerivativeRL, n - eps, n, cubic); }});
        cases.push_back({"caputo-order-to-n", p + " f=logpow:3", kLimitTol, true,
                         [=] { return compare(Kind::DerivativeCaputo, n - eps, n, cubic); }});
        cases.push_back({"rl-order-above-n-1", p + " f=logpow:3+1+logpoly:0,0.4", kLimitTol, true,
                         [=] { return compare(Kind::DerivativeRL, n - 1 + eps, n - 1, general); }});
        cases.push_back({"caputo-order-above-n-1", p + " f=logpow:3", kLimitTol, true,
                         [=] { return compare(Kind::DerivativeCaputo, n - 1 + eps, n - 1, cubic); }});
      }
      cases.push_back({"order-zero", base + " f=logpow:3+1+logpoly:0,0.4", 0.0, false, [=] {
        double r = 0.0;
        for (Kind kind : {Kind::Integral, Kind::DerivativeRL, Kind::DerivativeCaputo}) {
          OperatorSpec spec{.map = m.map, .kind = kind, .mu = 0.0, .s = s, .anchor = a};
          for (double x : xs) r = std::max(r, std::abs(value(spec, general, x) - general(x)));
        }
        return r;
      }});
    }
  }
  return run_cases("limits", std::move(cases), opts);
}

SuiteReport check_norm_bounds(const SuiteOptions& opts) {
  std::vector<Case> cases;
  for (const auto& m : test_maps()) {
    const double a = m.interval.lo;
    for (double p : {1.0, 2.0, kInfinityNorm}) {
      for (double c : {0.0, 0.5}) {
        for (double s : {c, c + 1.0}) {
          for (double mu : {0.5, 1.5}) {
            std::vector<TestFunction> fs{
                {"logpow:2", catalogue::logpow(m.map, 2.0, s, a).integrand()},
                {"logpoly:1,-0.5,0.25", catalogue::logpoly(m.map, {1.0, -0.5, 0.25}, a).integrand()},
                {"psi_inv", catalogue::psi_power(m.map, -1.0).integrand()},
                {"zero", catalogue::constant(m.map, 0.0).integrand()}};
            for (const auto& tf : fs) {
              const std::string params = "psi=" + m.name + " p=" + num(p) + " c=" + num(c) +
                                         " s=" + num(s) + " mu=" + num(mu) + " f=" + tf.name;
              cases.push_back({"boundedness", params, kInequalitySlack, false, [=] {
                const SpaceSpec space{.map = m.map, .p = p, .c = c, .interval = m.interval};
                const auto image = as_integrand(signed_operator(m.map, s, a, -mu), tf.f);
                const double lhs = x_norm(space, image);
                const double rhs = bound_constant_k(mu, s, c, space) * x_norm(space, tf.f);
                if (rhs == 0.0) return lhs == 0.0 ? 0.0 : HUGE_VAL;
                return lhs / rhs;
              }});
            }
          }
        }
      }
    }
  }
  std::uint64_t stream = 0;
  for (const auto& m : holder_maps()) {
    const double a = m.interval.lo;
    for (double mu : {0.5, 1.0, 1.6}) {
      const double p = mu < 1.0 ? 3.0 : 2.0;
      const double s = 0.8;
      const std::uint64_t seed = opts.seed + 1000003ULL * ++stream;
      const std::string params = "psi=" + m.name + " mu=" + num(mu) + " p=" + num(p) +
                                 " s=" + num(s) + " pairs=200 f=logpow:1.7-0.4";
      cases.push_back({"holder", params, kInequalitySlack, false, [=] {
        const SpaceSpec space{.map = m.map, .p = p, .c = 0.0, .interval = m.interval};
        const auto f = (catalogue::logpow(m.map, 1.7, 0.0, a) + catalogue::constant(m.map, -0.4)).integrand();
        const double fn = lp_norm(f, p, m.interval);
        const auto image = as_integrand(signed_operator(m.map, s, a, -mu), f);
        std::mt19937_64 rng(seed);
        const double width = m.interval.hi - a;
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
          double x1 = a + width * unit_uniform(rng());
          double x2 = a + width * unit_uniform(rng());
          if (x1 > x2) std::swap(x1, x2);
          if (x1 == x2) continue;
          const double lhs = std::abs(std::pow(m.map.value(x2), s) * image(x2) -
                                      std::pow(m.map.value(x1), s) * image(x1));
          worst = std::max(worst, lhs / holder_estimate_bound(mu, s, p, space, fn, x1, x2));
        }
        return worst;
      }});
    }
  }
  return run_cases("norm-bounds", std::move(cases), opts);
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"semigroup", "equivalence", "newton-leibniz",
                                            "int-by-parts", "limits", "norm-bounds"};
  return ids;
}

SuiteReport run_suite(std::string_view id, const SuiteOptions& opts) {
  if (id == "semigroup") return check_semigroup(opts);
  if (id == "equivalence") return check_equivalence(opts);
  if (id == "newton-leibniz") return check_newton_leibniz(opts);
  if (id == "int-by-parts") return check_integration_by_parts(opts);
  if (id == "limits") return check_limits(opts);
  if (id == "norm-bounds") return check_norm_bounds(opts);
  throw DomainError("unknown suite '" + std::string(id) + "'");
}

namespace {

const char* status_word(CaseStatus s) {
  switch (s) {
    case CaseStatus::Passed: return "PASS";
    case CaseStatus::Violated: return "FAIL";
    default: return "ERROR";
  }
}

}  // namespace

std::string to_text(const SuiteReport& report, bool with_timing) {
  std::ostringstream out;
  out << "suite " << report.suite << " seed " << report.seed << "\n";
  std::size_t failed = 0;
  for (const auto& c : report.cases) {
    if (!c.passed()) ++failed;
    out << status_word(c.status) << " " << c.name << " [" << c.params << "] residual=" << sci(c.residual)
        << " tol=" << sci(c.tolerance);
    if (!c.message.empty()) out << " error=\"" << c.message << "\"";
    out << "\n";
  }
  out << "summary " << report.suite << " cases=" << report.cases.size() << " failed=" << failed
      << " max_residual=" << sci(report.max_residual) << " " << (report.passed ? "PASS" : "FAIL");
  if (with_timing) out << " wall=" << num(report.wall_seconds) << "s";
  out << "\n";
  return out.str();
}

std::string to_json_lines(const SuiteReport& report, bool with_timing) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : report.cases) {
    if (!c.passed()) ++failed;
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["case"] = c.name;
    j["params"] = c.params;
    j["residual"] = std::isfinite(c.residual) ? nlohmann::ordered_json(c.residual) : nullptr;
    j["tolerance"] = c.tolerance;
    j["status"] = status_word(c.status);
    if (!c.message.empty()) j["error"] = c.message;
    out << j.dump() << "\n";
  }
  nlohmann::ordered_json s;
  s["suite"] = report.suite;
  s["summary"] = true;
  s["seed"] = report.seed;
  s["cases"] = report.cases.size();
  s["failed"] = failed;
  s["max_residual"] = report.max_residual;
  s["passed"] = report.passed;
  if (with_timing) s["wall_seconds"] = report.wall_seconds;
  out << s.dump() << "\n";
  return out.str();
}

}  // namespace fracop
