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

// Command-line front end for the fracop library.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracop/catalogue.hpp"
#include "fracop/errors.hpp"
#include "fracop/operators.hpp"
#include "fracop/spaces.hpp"
#include "fracop/verify.hpp"

namespace {

using namespace fracop;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Config {
  std::string command;
  std::string kind = "integral";
  std::string side = "left";
  std::string path = "auto";
  std::string psi = "identity";
  std::string f = "const:1";
  double mu = 0.5;
  double s = 0.0;
  double a = 1.0;
  std::optional<double> b;
  std::optional<double> x;
  std::string mus = "0.1:0.9:9";
  std::string xs = "1:5:81";
  std::string p = "2";
  double c = 0.0;
  bool bound = false;
  std::string suite = "all";
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  unsigned threads = 0;
  bool timing = false;
  std::string format;
  std::string output;
  double abs_tol = QuadratureConfig{}.abs_tol;
  double rel_tol = QuadratureConfig{}.rel_tol;
};

std::string format_number(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

Kind parse_kind(const std::string& k) {
  if (k == "integral") return Kind::Integral;
  if (k == "deriv-rl") return Kind::DerivativeRL;
  if (k == "deriv-caputo") return Kind::DerivativeCaputo;
  throw DomainError("unknown kind '" + k + "'");
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw DomainError("unknown side '" + s + "'");
}

DerivativePath parse_path(const std::string& p) {
  if (p == "auto") return DerivativePath::Auto;
  if (p == "dilation") return DerivativePath::Dilation;
  if (p == "representation") return DerivativePath::Representation;
  if (p == "direct") return DerivativePath::Direct;
  throw DomainError("unknown path '" + p + "'");
}

double parse_p(const std::string& p) {
  if (p == "inf") return kInfinityNorm;
  try {
    std::size_t used = 0;
    const double v = std::stod(p, &used);
    if (used == p.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("cannot parse p '" + p + "'");
}

// "lo:hi:count" (inclusive, evenly spaced) or "v1,v2,...".
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  auto number = [&](const std::string& t) {
    try {
      std::size_t used = 0;
      const double v = std::stod(t, &used);
      if (used == t.size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("cannot parse grid '" + text + "'");
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw DomainError("grid range must be lo:hi:count");
    const double lo = number(parts[0]);
    const double hi = number(parts[1]);
    const double count = number(parts[2]);
    if (count < 1 || count != std::floor(count)) throw DomainError("grid count must be a positive integer");
    const int n = static_cast<int>(count);
    if (n == 1) return {lo};
    // Rounded to 15 digits so that 0.1:0.9:9 yields 0.3 rather than 0.30000000000000004.
    for (int i = 0; i < n; ++i) {
      out.push_back(i + 1 == n ? hi : std::stod(format_number("%.15g", lo + (hi - lo) * i / (n - 1))));
    }
    return out;
  }
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(number(item));
  if (out.empty()) throw DomainError("empty grid '" + text + "'");
  return out;
}

OperatorSpec make_spec(const Config& cfg, const MonotoneMap& map, double mu) {
  OperatorSpec spec{.map = map, .kind = parse_kind(cfg.kind), .side = parse_side(cfg.side),
                    .mu = mu, .s = cfg.s, .anchor = cfg.a};
  spec.check();
  return spec;
}

EvalOptions make_options(const Config& cfg) {
  EvalOptions opts;
  opts.quad.abs_tol = cfg.abs_tol;
  opts.quad.rel_tol = cfg.rel_tol;
  opts.quad.check();
  opts.path = parse_path(cfg.path);
  return opts;
}

// Writes to --output when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DomainError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads && t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

struct Cell {
  double x;
  double mu;
  double value;
};

// Cells in (x, μ) order; failed cells hold NaN. Returns true if any failed.
bool sweep_cells(const OperatorSpec& base, const Integrand& f, const std::vector<double>& xs,
                 const std::vector<double>& mus, const EvalOptions& opts, unsigned threads,
                 double limit_scale, std::vector<Cell>& cells) {
  std::vector<double> sx = xs;
  std::vector<double> smu = mus;
  std::sort(sx.begin(), sx.end());
  std::sort(smu.begin(), smu.end());
  cells.clear();
  for (double x : sx) {
    for (double mu : smu) cells.push_back({x, mu, NAN});
  }
  std::atomic<bool> failed{false};
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    OperatorSpec spec = base;
    spec.mu = cells[i].mu;
    try {
      spec.check();
      cells[i].value = evaluate_with_limit(spec, f, cells[i].x, limit_scale, opts).value;
    } catch (const Error&) {
      cells[i].value = NAN;
    }
    if (!std::isfinite(cells[i].value)) failed = true;
  });
  return failed;
}

void write_cells(std::ostream& out, const std::vector<Cell>& cells, const std::string& format) {
  if (format == "json-lines") {
    for (const auto& c : cells) {
      nlohmann::ordered_json j;
      j["x"] = c.x;
      j["mu"] = c.mu;
      j["value"] = std::isfinite(c.value) ? nlohmann::ordered_json(c.value) : nullptr;
      out << j.dump() << "\n";
    }
    return;
  }
  out << "x,mu,value\n";
  for (const auto& c : cells) {
    out << format_number("%.17g", c.x) << "," << format_number("%.17g", c.mu) << ","
        << (std::isfinite(c.value) ? format_number("%.17g", c.value) : "nan") << "\n";
  }
}

int cmd_eval(const Config& cfg) {
  if (!cfg.x) throw DomainError("eval needs --x");
  const auto map = parse_map(cfg.psi);
  const auto spec = make_spec(cfg, map, cfg.mu);
  const auto f = catalogue::parse(cfg.f, map, cfg.s, cfg.a, cfg.b.value_or(cfg.a)).integrand();
  const auto r = evaluate(spec, f, *cfg.x, make_options(cfg));
  if (!std::isfinite(r.value)) throw NumericalError("non-finite result", r.error);
  std::cout << format_number("%.12g", r.value) << " error=" << format_number("%.3g", r.error) << "\n";
  return kExitOk;
}

int cmd_sweep(const Config& cfg) {
  const auto map = parse_map(cfg.psi);
  const auto base = make_spec(cfg, map, cfg.mu);
  const auto f = catalogue::parse(cfg.f, map, cfg.s, cfg.a, cfg.b.value_or(cfg.a)).integrand();
  const auto xs = parse_grid(cfg.xs);
  const auto mus = parse_grid(cfg.mus);
  double scale = 0.0;
  for (double x : xs) scale = std::max(scale, std::abs(x - cfg.a));
  std::vector<Cell> cells;
  const bool failed = sweep_cells(base, f, xs, mus, make_options(cfg), cfg.threads,
                                  scale > 0.0 ? scale : 1.0, cells);
  Sink sink(cfg.output);
  write_cells(sink.stream(), cells, cfg.format.empty() ? "csv" : cfg.format);
  return failed ? kExitNumerical : kExitOk;
}

int cmd_verify(const Config& cfg) {
  std::vector<std::string> ids;
  if (cfg.suite == "all") {
    ids = suite_ids();
  } else {
    ids.push_back(cfg.suite);
  }
  const SuiteOptions opts{.seed = cfg.seed, .tol_scale = cfg.tol_scale, .threads = cfg.threads};
  if (!(opts.tol_scale > 0.0)) throw DomainError("--tol-scale must be positive");
  Sink sink(cfg.output);
  bool passed = true;
  for (const auto& id : ids) {
    const auto report = run_suite(id, opts);
    passed = passed && report.passed;
    sink.stream() << (cfg.format == "json-lines" ? to_json_lines(report, cfg.timing)
                                                  : to_text(report, cfg.timing));
    sink.stream().flush();
  }
  return passed ? kExitOk : kExitVerify;
}

int cmd_norm(const Config& cfg) {
  if (!cfg.b) throw DomainError("norm needs --b");
  const auto map = parse_map(cfg.psi);
  const SpaceSpec space{.map = map, .p = parse_p(cfg.p), .c = cfg.c, .interval = {cfg.a, *cfg.b}};
  space.check();
  double value = 0.0;
  if (cfg.bound) {
    value = bound_constant_k(cfg.mu, cfg.s, cfg.c, space);
  } else {
    value = x_norm(space, catalogue::parse(cfg.f, map, cfg.s, cfg.a, *cfg.b).integrand());
  }
  std::cout << format_number("%.12g", value) << "\n";
  return kExitOk;
}

int cmd_figures(const Config& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.output.empty() ? fs::path("figures") : fs::path(cfg.output);
  fs::create_directories(dir);
  const auto xs = parse_grid(cfg.xs);
  const auto mus = parse_grid(cfg.mus);
  constexpr double kS = 1.0;
  constexpr double kA = 1.0;
  double scale = 0.0;
  for (double x : xs) scale = std::max(scale, std::abs(x - kA));
  if (!(scale > 0.0)) scale = 1.0;
  bool failed = false;
  std::ostringstream plot;
  plot << "# gnuplot script: one surface per CSV, value over (x, mu).\n"
       << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'x'\nset ylabel 'mu'\nset zlabel 'value'\n"
       << "set terminal pngcairo size 900,700\n";
  const std::vector<std::pair<std::string, Kind>> figures{{"integral", Kind::Integral},
                                                          {"derivative", Kind::DerivativeRL}};
  for (const auto& [figure, kind] : figures) {
    for (const std::string psi : {"sqrt", "identity", "power:2"}) {
      const auto map = parse_map(psi);
      // f = Ψ^{-1} log(Ψ(x)/Ψ(1)).
      const auto f = catalogue::logpow(map, 2.0, kS, kA).integrand();
      OperatorSpec base{.map = map, .kind = kind, .mu = mus.front(), .s = kS, .anchor = kA};
      std::vector<Cell> cells;
      failed = sweep_cells(base, f, xs, mus, make_options(cfg), cfg.threads, scale, cells) || failed;
      std::string stem = figure + "_" + psi;
      std::replace(stem.begin(), stem.end(), ':', '_');
      std::ofstream out(dir / (stem + ".csv"), std::ios::binary);
      if (!out) throw DomainError("cannot write " + (dir / (stem + ".csv")).string());
      write_cells(out, cells, "csv");
      plot << "set output '" << stem << ".png'\n"
           << "set title '" << (kind == Kind::Integral ? "integral" : "RL derivative") << ", psi = " << psi
           << "'\n"
           << "splot '" << stem << ".csv' using 1:2:3 with points pointtype 7 pointsize 0.4 notitle\n";
    }
  }
  std::ofstream script(dir / "figures.gp", std::ios::binary);
  script << plot.str();
  std::cout << "wrote " << figures.size() * 3 << " CSV files and figures.gp to " << dir.string() << "\n";
  return failed ? kExitNumerical : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* env = std::getenv("FRACOP_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: FRACOP_SEED must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Fractional integrals and derivatives with respect to a monotone map"};
  app.set_config("--config", "", "flat key=value file mirroring the long flags");
  app.add_option("command", cfg.command, "eval | sweep | verify | norm | figures")
      ->required()
      ->check(CLI::IsMember({"eval", "sweep", "verify", "norm", "figures"}));
  app.add_option("--kind", cfg.kind, "integral | deriv-rl | deriv-caputo")
      ->check(CLI::IsMember({"integral", "deriv-rl", "deriv-caputo"}));
  app.add_option("--side", cfg.side, "left | right")->check(CLI::IsMember({"left", "right"}));
  app.add_option("--path", cfg.path, "derivative path: auto | dilation | representation | direct")
      ->check(CLI::IsMember({"auto", "dilation", "representation", "direct"}));
  app.add_option("--psi", cfg.psi, "identity, exp, sqrt, power:R, exp_power:R");
  app.add_option("--f", cfg.f, "test function, e.g. logpow:nu=2 or 2*const:1+psi_inv");
  app.add_option("--mu", cfg.mu, "order");
  app.add_option("--s", cfg.s, "tempering parameter");
  app.add_option("--a", cfg.a, "left end and left anchor");
  app.add_option("--b", cfg.b, "right end and right anchor");
  app.add_option("--x", cfg.x, "evaluation point");
  app.add_option("--mus", cfg.mus, "order grid: lo:hi:count or comma list");
  app.add_option("--xs", cfg.xs, "point grid: lo:hi:count or comma list");
  app.add_option("--p", cfg.p, "norm exponent, or inf");
  app.add_option("--c", cfg.c, "norm weight exponent");
  app.add_flag("--bound", cfg.bound, "print the boundedness constant K instead of a norm");
  app.add_option("--suite", cfg.suite, "suite id or all");
  app.add_option("--seed", cfg.seed, "random seed (default 42, or FRACOP_SEED)");
  app.add_option("--tol-scale", cfg.tol_scale, "multiplier on residual tolerances");
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
  app.add_flag("--timing", cfg.timing, "include wall time in verify reports");
  app.add_option("--format", cfg.format, "csv | json-lines for sweep, text | json-lines for verify")
      ->check(CLI::IsMember({"csv", "json-lines", "text"}));
  app.add_option("--output", cfg.output, "output file (sweep, verify) or directory (figures)");
  app.add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
  app.add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cfg.command == "eval") return cmd_eval(cfg);
    if (cfg.command == "sweep") return cmd_sweep(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "norm") return cmd_norm(cfg);
    return cmd_figures(cfg);
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitUsage;
  }
}
