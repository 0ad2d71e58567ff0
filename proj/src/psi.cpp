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

#include "fracop/psi.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

#include "fracop/errors.hpp"
#include "fracop/integrand.hpp"
#include "fracop/specialfn.hpp"

namespace fracop {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTiny = std::numeric_limits<double>::min();

std::string format_param(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double bisect_inverse(const MonotoneMap::Fn& value, Interval dom, double target) {
  double lo = dom.lo;
  double hi = dom.hi;
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("custom map needs a finite domain to invert");
  }
  const double flo = value(lo);
  const double fhi = value(hi);
  if (target < flo || target > fhi) {
    throw DomainError("inverse: value " + std::to_string(target) +
                      " is outside the range of the map");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-14 * std::max(1.0, std::abs(mid))) break;
    if (value(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void fill_defaults(MonotoneMap::Parts& p) {
  if (!p.log_value) {
    p.log_value = [v = p.value](double x) { return std::log(v(x)); };
  }
  if (!p.inverse) {
    p.inverse = [v = p.value, dom = p.domain](double t) {
      return bisect_inverse(v, dom, t);
    };
  }
  if (!p.inverse_log) {
    p.inverse_log = [inv = p.inverse](double y) { return inv(std::exp(y)); };
  }
  if (!p.log_increment) {
    p.log_increment = [lv = p.log_value](double x, double d) {
      return lv(x + d) - lv(x);
    };
  }
  if (!p.dlog) {
    p.dlog = [v = p.value, dv = p.derivative](double x) { return dv(x) / v(x); };
  }
}

MonotoneMap power_map(double rho, std::string tag) {
  MonotoneMap::Parts p;
  p.value = [rho](double x) { return std::pow(x, rho); };
  p.derivative = [rho](double x) { return rho * std::pow(x, rho - 1.0); };
  p.log_value = [rho](double x) { return rho * std::log(x); };
  p.inverse = [rho](double v) { return std::pow(v, 1.0 / rho); };
  p.inverse_log = [rho](double y) { return std::exp(y / rho); };
  p.log_increment = [rho](double x, double d) { return rho * std::log1p(d / x); };
  p.dlog = [rho](double x) { return rho / x; };
  p.domain = {kTiny, kInf};
  p.tag = std::move(tag);
  return MonotoneMap(std::move(p));
}

}  // namespace

MonotoneMap::MonotoneMap(Parts parts) {
  if (!parts.value || !parts.derivative) {
    throw DomainError("a monotone map needs a value and a derivative");
  }
  if (!(parts.domain.lo < parts.domain.hi)) {
    throw DomainError("map domain must satisfy lo < hi");
  }
  fill_defaults(parts);
  key_ = parts.tag;
  p_ = std::make_shared<const Parts>(std::move(parts));
}

MonotoneMap MonotoneMap::custom(Fn value, Fn derivative, Interval domain,
                                std::string tag) {
  static std::atomic<unsigned long> counter{0};
  Parts p;
  p.value = std::move(value);
  p.derivative = std::move(derivative);
  p.domain = domain;
  p.tag = std::move(tag);
  MonotoneMap m(std::move(p));
  // Two custom maps never share analytic derivatives.
  m.key_ = m.p_->tag + "#" + std::to_string(counter.fetch_add(1));
  return m;
}

bool MonotoneMap::contains(double x) const {
  return x >= p_->domain.lo && x <= p_->domain.hi;
}

MonotoneMap make_builtin(std::string_view tag, std::span<const double> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw DomainError("map '" + std::string(tag) + "' takes " +
                        std::to_string(k) + " parameter(s)");
    }
  };
  if (tag == "identity") {
    need(0);
    MonotoneMap::Parts p;
    p.value = [](double x) { return x; };
    p.derivative = [](double) { return 1.0; };
    p.log_value = [](double x) { return std::log(x); };
    p.inverse = [](double v) { return v; };
    p.inverse_log = [](double y) { return std::exp(y); };
    p.log_increment = [](double x, double d) { return std::log1p(d / x); };
    p.dlog = [](double x) { return 1.0 / x; };
    p.domain = {kTiny, kInf};
    p.tag = "identity";
    return MonotoneMap(std::move(p));
  }
  if (tag == "exp") {
    need(0);
    MonotoneMap::Parts p;
    p.value = [](double x) { return std::exp(x); };
    p.derivative = [](double x) { return std::exp(x); };
    p.log_value = [](double x) { return x; };
    p.inverse = [](double v) { return std::log(v); };
    p.inverse_log = [](double y) { return y; };
    p.log_increment = [](double, double d) { return d; };
    p.dlog = [](double) { return 1.0; };
    p.domain = {-kInf, kInf};
    p.tag = "exp";
    return MonotoneMap(std::move(p));
  }
  if (tag == "sqrt") {
    need(0);
    return power_map(0.5, "sqrt");
  }
  if (tag == "power" || tag == "exp_power") {
    need(1);
    const double rho = params[0];
    if (!(rho > 0.0) || !std::isfinite(rho)) {
      throw DomainError("map parameter rho must be positive");
    }
    const std::string full = std::string(tag) + ":" + format_param(rho);
    if (tag == "power") return power_map(rho, full);
    MonotoneMap::Parts p;
    p.value = [rho](double x) { return std::exp(std::pow(x, rho) / rho); };
    p.derivative = [rho](double x) {
      return std::pow(x, rho - 1.0) * std::exp(std::pow(x, rho) / rho);
    };
    p.log_value = [rho](double x) { return std::pow(x, rho) / rho; };
    p.inverse = [rho](double v) { return std::pow(rho * std::log(v), 1.0 / rho); };
    p.inverse_log = [rho](double y) { return std::pow(rho * y, 1.0 / rho); };
    p.log_increment = [rho](double x, double d) {
      return std::pow(x, rho) * std::expm1(rho * std::log1p(d / x)) / rho;
    };
    p.dlog = [rho](double x) { return std::pow(x, rho - 1.0); };
    p.domain = {kTiny, kInf};
    p.tag = full;
    return MonotoneMap(std::move(p));
  }
  throw DomainError("unknown map '" + std::string(tag) + "'");
}

MonotoneMap parse_map(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return make_builtin(spec);
  const std::string_view tag = spec.substr(0, colon);
  const std::string num(spec.substr(colon + 1));
  double rho = 0.0;
  std::size_t used = 0;
  try {
    rho = std::stod(num, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != num.size()) {
    throw DomainError("cannot parse map parameter in '" + std::string(spec) + "'");
  }
  const double params[] = {rho};
  return make_builtin(tag, params);
}

ValidationReport validate(const MonotoneMap& map, Interval iv, int grid_size) {
  if (!(iv.lo < iv.hi) || !map.contains(iv.lo) || !map.contains(iv.hi)) {
    throw DomainError("validation interval lies outside the map domain");
  }
  if (grid_size < 2) throw DomainError("validation grid needs at least 2 points");
  ValidationReport report;
  double prev = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double x = iv.lo + (iv.hi - iv.lo) * i / (grid_size - 1);
    const double v = map.value(x);
    const double d = map.derivative(x);
    if (!(v > 0.0)) report.violations.push_back({x, "positivity"});
    if (!(d > 0.0) || (i > 0 && !(v > prev))) {
      report.violations.push_back({x, "monotonicity"});
    }
    prev = v;
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    const double lo = std::max(iv.lo, x - h);
    const double hi = std::min(iv.hi, x + h);
    const double fd = (map.value(hi) - map.value(lo)) / (hi - lo);
    // A one-sided difference at the ends carries O(h) error.
    const double tol = (lo == x || hi == x) ? 1e-5 : 1e-6;
    if (!(std::abs(fd - d) <= tol * std::max(std::abs(d), 1e-300))) {
      report.violations.push_back({x, "derivative"});
    }
    double back = std::numeric_limits<double>::quiet_NaN();
    try {
      back = map.inverse(v);
    } catch (const Error&) {
    }
    if (!(std::abs(back - x) <= 1e-12 * std::max(1.0, std::abs(x)))) {
      report.violations.push_back({x, "inverse"});
    }
  }
  return report;
}

namespace {

// Fornberg's algorithm: weights c[j][i] so that the j-th derivative at 0 is
// approximated by Σ_i c[j][i] f(z_i).
std::vector<std::vector<double>> fornberg(std::span<const double> z, int order) {
  const int n = static_cast<int>(z.size());
  std::vector<std::vector<double>> c(order + 1, std::vector<double>(n, 0.0));
  double c1 = 1.0;
  double c4 = z[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = z[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = z[i] - z[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      }
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

}  // namespace

std::vector<double> numeric_log_derivatives(const std::function<double(double)>& h,
                                            int n, double y0, double lo_offset,
                                            double hi_offset) {
  if (n < 0) throw DomainError("derivative order must be non-negative");
  if (n > kMaxNumericOrder) {
    throw DomainError("numeric differentiation is limited to order " +
                      std::to_string(kMaxNumericOrder));
  }
  std::vector<double> out(n + 1, 0.0);
  out[0] = h(0.0);
  if (n == 0) return out;

  const double nominal = std::pow(std::numeric_limits<double>::epsilon(),
                                  1.0 / (n + 4)) * std::max(1.0, std::abs(y0));
  double step = nominal;
  const int m = (n + 1) / 2;
  std::vector<double> pos;
  if (-m * step >= lo_offset && m * step <= hi_offset) {
    for (int k = -m; k <= m; ++k) pos.push_back(k);
  } else {
    const int count = n + 2;
    const double width = hi_offset - lo_offset;
    if (width < (count - 1) * step) step = 0.999 * width / (count - 1);
    if (!(step >= 1e-3 * nominal)) {
      throw NumericalError("numeric differentiation step underflow near the edge", step);
    }
    // Slide the integer stencil until it fits inside the window.
    int first = -m;
    if (first * step < lo_offset) first = static_cast<int>(std::ceil(lo_offset / step));
    if ((first + count - 1) * step > hi_offset) {
      first = static_cast<int>(std::floor(hi_offset / step)) - (count - 1);
    }
    for (int k = 0; k < count; ++k) pos.push_back(first + k);
  }

  auto level = [&](double hs) {
    std::vector<double> z(pos.size());
    std::vector<double> f(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
      z[i] = pos[i] * hs;
      f[i] = (pos[i] == 0) ? out[0] : h(z[i]);
    }
    const auto w = fornberg(z, n);
    std::vector<double> d(n + 1, 0.0);
    for (int j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < pos.size(); ++i) d[j] += w[j][i] * f[i];
    }
    return d;
  };
  const auto coarse = level(step);
  const auto fine = level(0.5 * step);
  for (int j = 1; j <= n; ++j) out[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
  return out;
}

std::vector<double> log_derivatives(const MonotoneMap& map, const Integrand& f,
                                    const Site& site, int n, Interval window) {
  if (f.has_derivatives(map, n)) {
    std::vector<double> out(n + 1);
    f.evaluate(site, out);
    return out;
  }
  const Interval dom = map.domain();
  const double lo = std::max(window.lo, dom.lo);
  const double hi = std::min(window.hi, dom.hi);
  if (site.x < lo || site.x > hi) {
    throw DomainError("evaluation point outside the differentiation window");
  }
  const double lo_off = std::isfinite(lo) ? -map.log_increment(lo, site.x - lo) : -kInf;
  const double hi_off = std::isfinite(hi) ? map.log_increment(site.x, hi - site.x) : kInf;
  const double y0 = map.log_value(site.x);
  auto h = [&](double o) {
    if (o == 0.0) return f.value(site);
    return f.value(Site{map.inverse_log(y0 + o), site.ref, site.offset + o});
  };
  return numeric_log_derivatives(h, n, y0, lo_off, hi_off);
}

double tempered_combination(std::span<const double> d, double s, int n) {
  double acc = 0.0;
  double spow = 1.0;
  for (int j = n; j >= 0; --j) {
    acc += specialfn::binomial(n, j) * spow * d[j];
    spow *= s;
  }
  return acc;
}

double apply_delta(const DeltaOperatorSpec& spec, const Integrand& f,
                   const Site& site, Interval window) {
  if (spec.n < 0) throw DomainError("delta repetition count must be non-negative");
  if (spec.n == 0) return f.value(site);
  const auto d = log_derivatives(spec.map, f, site, spec.n, window);
  return tempered_combination(d, spec.s, spec.n);
}

double apply_delta(const DeltaOperatorSpec& spec, const Integrand& f, double x,
                   Interval window) {
  if (!spec.map.contains(x)) throw DomainError("apply_delta: x outside the map domain");
  return apply_delta(spec, f, Site::at(x), window);
}

}  // namespace fracop
