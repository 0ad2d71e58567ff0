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

#include "fracop/catalogue.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>

#include "fracop/errors.hpp"
#include "fracop/specialfn.hpp"

namespace fracop {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Log-distance from the term's anchor, oriented by its side.
double oriented_distance(const MonotoneMap& map, const LogTerm& t, const Site& site) {
  double from_anchor = site.offset;
  if (site.ref != t.anchor) {
    from_anchor += map.log_increment(t.anchor, site.ref - t.anchor);
  }
  return t.side > 0 ? from_anchor : -from_anchor;
}

}  // namespace

LogSeries::LogSeries(MonotoneMap map, std::vector<LogTerm> terms, std::string tag)
    : map_(std::move(map)), terms_(std::move(terms)), tag_(std::move(tag)) {}

Integrand LogSeries::integrand() const {
  auto eval = [map = map_, terms = terms_](const Site& site, std::span<double> out) {
    const int order = static_cast<int>(out.size()) - 1;
    for (double& v : out) v = 0.0;
    const double y = map.log_value(site.x);
    for (const LogTerm& t : terms) {
      const double rho = oriented_distance(map, t, site);
      const double scale = t.coef * std::exp(t.lambda * y);
      // D^j ρ^p = side^j (p)_j ρ^{p-j}, with (p)_j the falling factorial.
      double dj[LogSeries::kMaxOrder + 1];
      double falling = 1.0;
      double sign = 1.0;
      for (int j = 0; j <= order; ++j) {
        dj[j] = (falling == 0.0) ? 0.0 : sign * falling * std::pow(rho, t.power - j);
        falling *= (t.power - j);
        sign *= t.side;
      }
      for (int k = 0; k <= order; ++k) {
        double acc = 0.0;
        double lpow = 1.0;
        for (int j = k; j >= 0; --j) {
          if (dj[j] != 0.0) acc += specialfn::binomial(k, j) * lpow * dj[j];
          lpow *= t.lambda;
        }
        out[k] += scale * acc;
      }
    }
  };
  return Integrand(std::move(eval), kMaxOrder, map_.key(), tag_);
}

LogSeries LogSeries::operator+(const LogSeries& other) const {
  if (other.map_.key() != map_.key()) {
    throw DomainError("cannot add catalogue functions built on different maps");
  }
  auto terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return LogSeries(map_, std::move(terms), tag_ + "+" + other.tag_);
}

LogSeries LogSeries::operator*(double factor) const {
  auto terms = terms_;
  for (auto& t : terms) t.coef *= factor;
  return LogSeries(map_, std::move(terms), num(factor) + "*" + tag_);
}

namespace catalogue {

LogSeries logpow(const MonotoneMap& map, double nu, double s, double a) {
  if (!(nu > 0.0)) throw DomainError("logpow needs nu > 0");
  return LogSeries(map, {LogTerm{1.0, -s, nu - 1.0, a, +1}}, "logpow:nu=" + num(nu));
}

LogSeries logpow_right(const MonotoneMap& map, double nu, double s, double b) {
  if (!(nu > 0.0)) throw DomainError("logpow needs nu > 0");
  return LogSeries(map, {LogTerm{1.0, s, nu - 1.0, b, -1}}, "rlogpow:nu=" + num(nu));
}

LogSeries constant(const MonotoneMap& map, double c) {
  return LogSeries(map, {LogTerm{c, 0.0, 0.0, 0.0, +1}}, "const:" + num(c));
}

LogSeries logpoly(const MonotoneMap& map, std::vector<double> coeffs, double a) {
  std::vector<LogTerm> terms;
  std::string tag = "logpoly:";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    terms.push_back(LogTerm{coeffs[k], 0.0, static_cast<double>(k), a, +1});
    tag += (k ? "," : "") + num(coeffs[k]);
  }
  return LogSeries(map, std::move(terms), tag);
}

LogSeries psi_power(const MonotoneMap& map, double lambda) {
  const std::string tag = lambda == -1.0 ? "psi_inv" : "psi_pow:" + num(lambda);
  return LogSeries(map, {LogTerm{1.0, lambda, 0.0, 0.0, +1}}, tag);
}

namespace {

double parse_number(std::string_view text, std::string_view context) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw DomainError("cannot parse number '" + s + "' in '" + std::string(context) + "'");
  }
  return v;
}

std::vector<std::string_view> split_terms(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const bool exponent = i > 0 && (spec[i - 1] == 'e' || spec[i - 1] == 'E') &&
                          i > 1 && (std::isdigit(static_cast<unsigned char>(spec[i - 2])) ||
                                    spec[i - 2] == '.');
    if (spec[i] == '+' && !exponent && i > start) {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(spec.substr(start));
  return parts;
}

LogSeries parse_term(std::string_view term, const MonotoneMap& map, double s, double a,
                     double b) {
  double factor = 1.0;
  if (const auto star = term.find('*'); star != std::string_view::npos) {
    factor = parse_number(term.substr(0, star), term);
    term = term.substr(star + 1);
  }
  const auto colon = term.find(':');
  const std::string_view name = term.substr(0, colon);
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : term.substr(colon + 1);
  auto nu_arg = [&]() {
    if (args.substr(0, 3) != "nu=") {
      throw DomainError("expected nu=<value> in '" + std::string(term) + "'");
    }
    return parse_number(args.substr(3), term);
  };
  LogSeries out = [&]() -> LogSeries {
    if (name == "logpow") return logpow(map, nu_arg(), s, a);
    if (name == "rlogpow") return logpow_right(map, nu_arg(), s, b);
    if (name == "const") return constant(map, parse_number(args, term));
    if (name == "psi_inv") return psi_power(map, -1.0);
    if (name == "psi_pow") return psi_power(map, parse_number(args, term));
    if (name == "logpoly") {
      std::vector<double> c;
      std::size_t start = 0;
      while (start <= args.size()) {
        const auto comma = args.find(',', start);
        const auto piece = args.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start);
        c.push_back(parse_number(piece, term));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      return logpoly(map, std::move(c), a);
    }
    throw DomainError("unknown test function '" + std::string(name) + "'");
  }();
  return factor == 1.0 ? out : out * factor;
}

}  // namespace

LogSeries parse(std::string_view spec, const MonotoneMap& map, double s, double a,
                double b) {
  if (spec.empty()) throw DomainError("empty function specification");
  const auto parts = split_terms(spec);
  LogSeries acc = parse_term(parts[0], map, s, a, b);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = acc + parse_term(parts[i], map, s, a, b);
  }
  return LogSeries(acc.map(), acc.terms(), std::string(spec));
}

}  // namespace catalogue
}  // namespace fracop
