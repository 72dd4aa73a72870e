#include "latzeta/cli_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "latzeta/lattice_energy.hpp"

namespace latzeta {

namespace {

using ordered_json = nlohmann::ordered_json;

real_t parse_number(std::string_view text, std::string_view what) {
  const std::string buf(text);
  char* end = nullptr;
  const real_t value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(value))
    throw DomainError("cannot parse " + std::string(what) + " '" + buf + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// JSON numbers carry the same rounding as the CSV text.
ordered_json rounded(real_t x, int digits) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_real(x, digits).c_str(), nullptr);
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write " + path.string());
  return file;
}

// CLI11 reads "-1,2,0,3" as a short flag; glue such values to their option.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.size() > 2 && a.find('=') == std::string::npos &&
        i + 1 < args.size()) {
      const std::string& next = args[i + 1];
      if (next.size() >= 2 && next[0] == '-' &&
          (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.' || next[1] == 'i')) {
        out.push_back(a + "=" + next);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

ordered_json zero_json(const ZeroRecord& z, int digits) {
  ordered_json j;
  j["rho_x"] = rounded(z.rho.real(), digits);
  j["rho_y"] = rounded(z.rho.imag(), digits);
  j["kind"] = std::string(to_string(z.kind));
  j["residual"] = rounded(z.residual, digits);
  return j;
}

}  // namespace

void RunConfig::validate() const {
  precision.validate();
  window.validate();
  if (!(step > 0.0 && step <= 0.01)) throw DomainError("step must lie in (0, 0.01]");
  if (!(delta_min > 0.0 && delta_min < delta_max && delta_max < 1.0))
    throw DomainError("delta range must satisfy 0 < min < max < 1");
  if (digits < 1 || digits > 17) throw DomainError("precision must lie in [1, 17] digits");
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return kExitDomain;
    case ErrorKind::pole_proximity: return kExitPole;
    default: return kExitFailure;
  }
}

complex_t parse_complex(std::string_view text) {
  const std::string buf(text);
  if (buf.empty()) throw DomainError("empty complex number");
  if (buf.back() != 'i') return {parse_number(buf, "complex number"), 0.0};

  const std::string body = buf.substr(0, buf.size() - 1);
  // Split at the last sign that is not the leading one or part of an exponent.
  std::size_t split_at = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const auto imag_part = [&](const std::string& t) -> real_t {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_number(t, "complex number");
  };
  if (split_at == std::string::npos) return {0.0, imag_part(body)};
  return {parse_number(body.substr(0, split_at), "complex number"),
          imag_part(body.substr(split_at))};
}

real_t parse_delta(std::string_view text) {
  const auto slash = text.find('/');
  real_t delta;
  if (slash == std::string_view::npos) {
    delta = parse_number(text, "delta");
  } else {
    const real_t p = parse_number(text.substr(0, slash), "delta numerator");
    const real_t q = parse_number(text.substr(slash + 1), "delta denominator");
    if (q == 0.0) throw DomainError("delta denominator is zero");
    delta = p / q;
  }
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  return delta;
}

SearchWindow parse_window(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw DomainError("window needs four values x0,x1,y0,y1");
  SearchWindow w;
  w.x_min = parse_number(parts[0], "window");
  w.x_max = parse_number(parts[1], "window");
  w.y_min = parse_number(parts[2], "window");
  w.y_max = parse_number(parts[3], "window");
  w.validate();
  return w;
}

std::vector<real_t> parse_real_list(std::string_view text) {
  std::vector<real_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_number(part, "list entry"));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto part : split(text, ',')) {
    const real_t v = parse_number(part, "integer");
    if (v != std::floor(v) || std::abs(v) > 1e6) throw DomainError("expected an integer");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string format_real(real_t x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string format_complex(complex_t z, int digits) {
  const real_t im = z.imag() == 0.0 ? 0.0 : z.imag();
  return format_real(z.real(), digits) + (std::signbit(im) ? "-" : "+") +
         format_real(std::abs(im), digits) + "i";
}

void write_scan_csv(std::ostream& out, const std::vector<ZeroRecord>& zeros, int digits) {
  std::vector<ZeroRecord> rows = zeros;
  std::stable_sort(rows.begin(), rows.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    return a.rho.imag() < b.rho.imag();
  });
  out << "delta,rho_x,rho_y,kind,residual\n";
  for (const auto& z : rows)
    out << format_real(z.delta, digits) << ',' << format_real(z.rho.real(), digits) << ','
        << format_real(z.rho.imag(), digits) << ',' << to_string(z.kind) << ','
        << format_real(z.residual, digits) << '\n';
}

void write_scan_json(std::ostream& out, real_t delta, const std::vector<ZeroRecord>& zeros,
                     int digits) {
  std::vector<ZeroRecord> rows = zeros;
  std::stable_sort(rows.begin(), rows.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    return a.rho.imag() < b.rho.imag();
  });
  ordered_json j;
  j["delta"] = rounded(delta, digits);
  j["zeros"] = ordered_json::array();
  for (const auto& z : rows) j["zeros"].push_back(zero_json(z, digits));
  out << j.dump(2) << '\n';
}

void write_branch_csv(std::ostream& out, const BranchCurve& curve, int digits, real_t delta_lo,
                      real_t delta_hi) {
  out << "branch_id,branch_kind,k_index,delta,rho_x,rho_y,residual\n";
  const std::string k = curve.k_index ? std::to_string(*curve.k_index) : "";
  for (const auto& s : curve.samples) {
    if (s.delta < delta_lo - 1e-12 || s.delta > delta_hi + 1e-12) continue;
    out << curve.branch_id << ',' << to_string(curve.branch_kind) << ',' << k << ','
        << format_real(s.delta, digits) << ',' << format_real(s.rho.real(), digits) << ','
        << format_real(s.rho.imag(), digits) << ',' << format_real(s.residual, digits) << '\n';
  }
}

std::string sweep_manifest(const std::vector<BranchCurve>& curves, const RunConfig& config) {
  const int d = config.digits;
  ordered_json j;
  j["delta_min"] = rounded(config.delta_min, d);
  j["delta_max"] = rounded(config.delta_max, d);
  j["step"] = rounded(config.step, d);
  j["window"] = {rounded(config.window.x_min, d), rounded(config.window.x_max, d),
                 rounded(config.window.y_min, d), rounded(config.window.y_max, d)};
  j["seed_delta"] = 0.5;
  j["branches"] = ordered_json::array();
  for (const auto& c : curves) {
    ordered_json b;
    b["branch_id"] = c.branch_id;
    b["file"] = "branch_" + std::to_string(c.branch_id) + ".csv";
    b["branch_kind"] = std::string(to_string(c.branch_kind));
    b["k_index"] = c.k_index ? ordered_json(*c.k_index) : ordered_json(nullptr);
    b["status"] = std::string(to_string(c.status));
    if (!c.stop_reason.empty()) b["stop_reason"] = c.stop_reason;
    const auto seed = std::find_if(c.samples.begin(), c.samples.end(), [](const BranchSample& s) {
      return std::abs(s.delta - 0.5) <= 1e-12;
    });
    if (seed != c.samples.end())
      b["seed"] = {{"delta", rounded(seed->delta, d)},
                   {"rho_x", rounded(seed->rho.real(), d)},
                   {"rho_y", rounded(seed->rho.imag(), d)}};
    if (!c.samples.empty()) {
      const auto& last = c.samples.back();
      b["terminal"] = {{"delta", rounded(last.delta, d)},
                       {"rho_x", rounded(last.rho.real(), d)},
                       {"rho_y", rounded(last.rho.imag(), d)}};
    }
    j["branches"].push_back(std::move(b));
  }
  return j.dump(2) + "\n";
}

void write_deviation_csv(std::ostream& out, const std::vector<DeviationRow>& rows, int digits) {
  out << "k,epsilon,measured_drho_x,measured_drho_y,predicted_drho_x,predicted_drho_y,"
         "fitted_exponent\n";
  for (const auto& r : rows)
    out << r.k << ',' << format_real(r.epsilon, digits) << ','
        << format_real(r.measured_drho_x, digits) << ',' << format_real(r.measured_drho_y, digits)
        << ',' << format_real(r.predicted_drho_x, digits) << ','
        << format_real(r.predicted_drho_y, digits) << ','
        << format_real(r.fitted_exponent, digits) << '\n';
}

std::string validation_report(const std::vector<SuiteResult>& suites, int digits) {
  ordered_json j;
  bool all = true;
  j["suites"] = ordered_json::array();
  for (const auto& s : suites) {
    all = all && s.pass;
    j["suites"].push_back({{"name", s.name},
                           {"pass", s.pass},
                           {"worst_residual", rounded(s.worst_residual, digits)},
                           {"threshold", rounded(s.threshold, digits)},
                           {"cases", s.cases},
                           {"worst_case", s.worst_case}});
  }
  j["pass"] = all;
  return j.dump(2) + "\n";
}

namespace {

struct Flags {
  std::string s = "";
  std::string delta = "";
  std::string to = "0.99";
  std::string window = "";
  std::string delta_min = "0.05";
  std::string delta_max = "0.99";
  real_t step = 0.01;
  int digits = 12;
  std::string out;
  std::string format = "csv";
  std::string ks = "0,1,2";
  std::string eps = "0.02,0.01,0.005";
  int depth = -1;
};

RunConfig make_config(const Flags& f) {
  RunConfig c;
  c.digits = f.digits;
  c.step = f.step;
  c.output_dir = f.out;
  if (f.format == "csv") c.output_format = OutputFormat::csv;
  else if (f.format == "json") c.output_format = OutputFormat::json;
  else throw DomainError("format must be csv or json");
  if (!f.window.empty()) c.window = parse_window(f.window);
  if (f.depth >= 0) c.window.max_subdivision_depth = f.depth;
  c.delta_min = parse_delta(f.delta_min);
  c.delta_max = parse_delta(f.delta_max);
  c.validate();
  return c;
}

// Runs `body` with a stream that is either stdout or the file named by --out.
template <typename Body>
void with_output(const std::string& path, std::ostream& out, Body&& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  auto file = open_output(path);
  body(file);
}

int cmd_energy(const Flags& f, std::ostream& out) {
  const RunConfig c = make_config(f);
  const complex_t s = parse_complex(f.s);
  const real_t delta = parse_delta(f.delta);
  const auto e = energy_evaluate(s, delta, c.precision, false);
  if (c.output_format == OutputFormat::json) {
    ordered_json j;
    j["s"] = {rounded(s.real(), c.digits), rounded(s.imag(), c.digits)};
    j["delta"] = rounded(delta, c.digits);
    j["value"] = {rounded(e.value.real(), c.digits), rounded(e.value.imag(), c.digits)};
    j["error_estimate"] = rounded(e.error_estimate, 3);
    out << j.dump(2) << '\n';
  } else {
    out << "value " << format_complex(e.value, c.digits) << '\n'
        << "error_estimate " << format_real(e.error_estimate, 3) << '\n';
  }
  return kExitOk;
}

int cmd_scan(const Flags& f, std::ostream& out) {
  const RunConfig c = make_config(f);
  const real_t delta = parse_delta(f.delta);
  const auto zeros = scan(c.window, delta, c.precision);
  with_output(c.output_dir, out, [&](std::ostream& o) {
    if (c.output_format == OutputFormat::json) write_scan_json(o, delta, zeros, c.digits);
    else write_scan_csv(o, zeros, c.digits);
  });
  return kExitOk;
}

int cmd_trace(const Flags& f, std::ostream& out) {
  const RunConfig c = make_config(f);
  const real_t start = parse_delta(f.delta);
  const real_t target = parse_delta(f.to);
  const ZeroRecord seed = refine_zero(parse_complex(f.s), start, c.precision);
  BranchCurve curve = trace_branch(seed, target, c.step, c.precision);
  if (std::max(start, target) >= 0.95) {
    try {
      const auto verdict = classify_branch(curve, c.precision);
      curve.branch_kind = verdict.kind;
      curve.k_index = verdict.k_index;
    } catch (const Unclassifiable&) {
    }
  }
  if (target < start) std::reverse(curve.samples.begin(), curve.samples.end());
  with_output(c.output_dir, out, [&](std::ostream& o) { write_branch_csv(o, curve, c.digits); });
  return kExitOk;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
  RunConfig c = make_config(f);
  if (c.output_dir.empty()) c.output_dir = "sweep_out";
  const auto curves = sweep_figure_data(c.delta_min, c.delta_max, c.step, c.window, c.precision);
  const std::filesystem::path dir(c.output_dir);
  std::filesystem::create_directories(dir);
  for (const auto& curve : curves) {
    auto file = open_output(dir / ("branch_" + std::to_string(curve.branch_id) + ".csv"));
    write_branch_csv(file, curve, c.digits, c.delta_min, c.delta_max);
  }
  auto manifest = open_output(dir / "manifest.json");
  manifest << sweep_manifest(curves, c);
  out << "wrote " << curves.size() << " branches to " << dir.string() << '\n';
  return kExitOk;
}

int cmd_asymptotics(const Flags& f, std::ostream& out) {
  const RunConfig c = make_config(f);
  const auto ks = parse_int_list(f.ks);
  const auto eps = parse_real_list(f.eps);
  for (int k : ks)
    if (k < 0) throw DomainError("k must be non-negative");
  for (real_t e : eps)
    if (!(e > 0.0 && e <= 0.02)) throw DomainError("epsilon must lie in (0, 0.02]");
  const auto rows = deviation_table(ks, eps, c.precision, c.step);
  with_output(c.output_dir, out, [&](std::ostream& o) {
    if (c.output_format == OutputFormat::json) {
      ordered_json j = ordered_json::array();
      for (const auto& r : rows)
        j.push_back({{"k", r.k},
                     {"epsilon", rounded(r.epsilon, c.digits)},
                     {"measured_drho_x", rounded(r.measured_drho_x, c.digits)},
                     {"measured_drho_y", rounded(r.measured_drho_y, c.digits)},
                     {"predicted_drho_x", rounded(r.predicted_drho_x, c.digits)},
                     {"predicted_drho_y", rounded(r.predicted_drho_y, c.digits)},
                     {"fitted_exponent", rounded(r.fitted_exponent, c.digits)}});
      o << j.dump(2) << '\n';
    } else {
      write_deviation_csv(o, rows, c.digits);
    }
  });
  return kExitOk;
}

int cmd_validate(const Flags& f, std::ostream& out) {
  const RunConfig c = make_config(f);
  const auto suites = run_validation_suites(c.precision);
  const bool pass = std::all_of(suites.begin(), suites.end(),
                                [](const SuiteResult& s) { return s.pass; });
  with_output(c.output_dir, out,
              [&](std::ostream& o) { o << validation_report(suites, c.digits); });
  return pass ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating-lattice Riesz energy: evaluation, zeros and branch tracing"};
  app.require_subcommand(1);
  Flags f;

  const auto common = [&](CLI::App* cmd) {
    cmd->add_option("--precision", f.digits, "significant digits in output")->capture_default_str();
    cmd->add_option("--format", f.format, "csv or json")->capture_default_str();
    cmd->add_option("--out", f.out, "output file (directory for sweep)");
  };

  auto* energy_cmd = app.add_subcommand("energy", "evaluate E(s, delta)");
  energy_cmd->add_option("--s", f.s, "complex exponent a+bi")->required();
  energy_cmd->add_option("--delta", f.delta, "lattice parameter, decimal or p/q")->required();
  common(energy_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "locate zeros in a window");
  scan_cmd->add_option("--delta", f.delta, "lattice parameter")->required();
  scan_cmd->add_option("--window", f.window, "x0,x1,y0,y1 (default -1,2,0,25)");
  scan_cmd->add_option("--depth", f.depth, "maximum subdivision depth");
  common(scan_cmd);

  auto* trace_cmd = app.add_subcommand("trace", "follow one zero in delta");
  trace_cmd->add_option("--s", f.s, "approximate zero at the starting delta")->required();
  trace_cmd->add_option("--delta", f.delta, "starting delta")->required();
  trace_cmd->add_option("--to", f.to, "target delta")->capture_default_str();
  trace_cmd->add_option("--step", f.step, "output step in delta")->capture_default_str();
  common(trace_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "trace every zero found at delta = 1/2");
  sweep_cmd->add_option("--delta-min", f.delta_min)->capture_default_str();
  sweep_cmd->add_option("--delta-max", f.delta_max)->capture_default_str();
  sweep_cmd->add_option("--step", f.step)->capture_default_str();
  sweep_cmd->add_option("--window", f.window, "seed window x0,x1,y0,y1");
  common(sweep_cmd);

  auto* asym_cmd = app.add_subcommand("asymptotics", "deviation table near delta = 1");
  asym_cmd->add_option("--k", f.ks, "branch indices")->capture_default_str();
  asym_cmd->add_option("--eps", f.eps, "epsilon values in (0, 0.02]")->capture_default_str();
  asym_cmd->add_option("--step", f.step)->capture_default_str();
  common(asym_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "run the residual suites");
  common(validate_cmd);

  args = glue_negative_values(args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitDomain;
  }

  try {
    if (energy_cmd->parsed()) return cmd_energy(f, out);
    if (scan_cmd->parsed()) return cmd_scan(f, out);
    if (trace_cmd->parsed()) return cmd_trace(f, out);
    if (sweep_cmd->parsed()) return cmd_sweep(f, out);
    if (asym_cmd->parsed()) return cmd_asymptotics(f, out);
    if (validate_cmd->parsed()) return cmd_validate(f, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace latzeta
