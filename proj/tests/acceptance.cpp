// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latzeta/asymptotics.hpp"
#include "latzeta/lattice_energy.hpp"
#include "latzeta/theta_validation.hpp"
#include "latzeta/validation.hpp"
#include "latzeta/zero_finder.hpp"
#include "latzeta/zeta_kernel.hpp"

using namespace latzeta;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Verdict from_suite(const SuiteResult& r) {
  return {r.pass, fmt("worst residual %.3g (limit %.0e)", r.worst_residual, r.threshold) +
                      ", " + std::to_string(r.cases) + " cases"};
}

// Ordinates of the first zeta zeros, from standard tables.
constexpr double kZetaZeros[] = {14.134725141734693, 21.022039638771555};

Verdict identities() {
  const auto t0 = std::chrono::steady_clock::now();
  auto v = from_suite(identity_suite({}));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.pass = v.pass && secs < 5.0;
  v.detail += fmt(", %.2f s", secs);
  return v;
}

Verdict factorization() { return from_suite(factorization_suite({})); }

Verdict fifth_zero() {
  SearchWindow w;
  w.y_max = 3.0;
  const complex_t want(0.635084, 1.07885);
  double best = INFINITY;
  for (const auto& z : scan(w, 0.2, {})) best = std::min(best, std::abs(z.rho - want));
  return {best <= 5e-6, fmt("closest zero at distance %.2e (limit 5e-6)", best)};
}

Verdict half_zero_set() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto zeros = scan(SearchWindow{}, 0.5, {});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::set<int> ks;
  int critical = 0;
  double worst = 0.0;
  bool stray = false;
  for (const auto& z : zeros) {
    const real_t k = (z.rho.imag() * std::log(3.0) / kPi - 1.0) / 2.0;
    const int ki = static_cast<int>(std::lround(k));
    const complex_t imaginary(0.0, (2 * ki + 1) * kPi / std::log(3.0));
    if (ki >= 0 && ki <= 3 && std::abs(z.rho - imaginary) <= 1e-6) {
      worst = std::max(worst, std::abs(z.rho - imaginary));
      stray = stray || !ks.insert(ki).second;
      continue;
    }
    double d = INFINITY;
    for (double y : kZetaZeros) d = std::min(d, std::abs(z.rho - complex_t(0.5, y)));
    if (d <= 1e-6) {
      worst = std::max(worst, d);
      ++critical;
    } else {
      stray = true;
    }
  }
  const bool pass = !stray && ks.size() == 4 && critical == 2 && worst <= 1e-8 && secs < 60.0;
  return {pass, std::to_string(zeros.size()) + " zeros (4 imaginary, " + std::to_string(critical) +
                    " critical expected 2), " +
                    fmt("worst distance %.2e (limit 1e-8), %.2f s", worst, secs)};
}

Verdict third_critical() {
  const auto zeros = scan(SearchWindow{}, 1.0 / 3.0, {});
  double worst = 0.0;
  for (const auto& z : zeros) worst = std::max(worst, std::abs(z.rho.real() - 0.5));
  return {!zeros.empty() && worst <= 1e-8,
          std::to_string(zeros.size()) + " zeros, " + fmt("max |rho_x - 1/2| = %.2e", worst)};
}

Verdict taylor_order() {
  const complex_t s(0.3, 2.0);
  const auto residual = [&](real_t eps) {
    return std::abs(energy(s, 1.0 - eps) - taylor_energy(s, eps));
  };
  const double r04 = residual(0.04), r02 = residual(0.02), r01 = residual(0.01);
  const double q1 = r04 / r02, q2 = r02 / r01;
  return {q1 >= 32 && q1 <= 128 && q2 >= 32 && q2 <= 128,
          fmt("ratios %.2f, %.2f", q1, q2) + fmt(" (residual at 0.01: %.2e)", r01)};
}

std::vector<DeviationRow> k0_rows() {
  static const auto rows = deviation_table({0}, {0.02, 0.01, 0.005}, {});
  return rows;
}

Verdict asymptotic_fit() {
  const auto rows = k0_rows();
  const auto& last = rows.back();
  const double rel = std::abs(last.measured_drho_y - last.predicted_drho_y) /
                     std::abs(last.predicted_drho_y);
  const double p = last.fitted_exponent;
  return {p >= 3.02 && p <= 3.32 && rel <= 0.1,
          fmt("exponent %.4f, drho_y at eps=0.005 measured %.4e", p, last.measured_drho_y) +
              fmt(" vs %.4e (rel. diff %.3f)", last.predicted_drho_y, rel)};
}

Verdict divergence_law() {
  double worst = 0.0;
  for (const auto& r : k0_rows()) worst = std::max(worst, std::abs(r.measured_drho_x));
  return {worst <= 1e-3, fmt("max |rho_x - series through eps^3| = %.2e (limit 1e-3)", worst)};
}

Verdict theta() { return from_suite(theta_suite({})); }

Verdict direct_sum() {
  double worst = 0.0;
  for (const real_t delta : {0.3, 0.7})
    for (const real_t s : {2.0, 3.0, 4.0})
      worst = std::max(worst, std::abs(energy(s, delta) - energy_direct_sum(s, delta, 1000000).value));
  return {worst <= 1e-9, fmt("worst difference %.2e (limit 1e-9)", worst)};
}

Verdict symmetry_residue() {
  const auto sym = symmetry_suite({});
  const auto res = residue_suite({});
  double folded = 0.0;
  for (const complex_t s : identity_sample())
    for (const real_t delta : {0.2, 0.45, 0.8})
      folded = std::max(folded, std::abs(energy(s, delta) - energy(s, 1.0 / delta)) /
                                    std::max(1.0, std::abs(energy(s, delta))));
  return {sym.pass && res.pass && folded <= 1e-10,
          fmt("symmetry %.2e, folded %.2e, residue error %.2e", sym.worst_residual, folded,
              res.worst_residual)};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Concatenated file names and bytes of a directory, in name order.
std::string snapshot(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::string out;
  for (const auto& f : files) out += f.filename().string() + "\n" + slurp(f);
  return out;
}

Verdict determinism() {
  const fs::path root = fs::temp_directory_path() / "latzeta_acceptance_sweep";
  fs::remove_all(root);
  std::vector<std::string> snaps;
  int run = 0;
  for (const int threads : {1, 1, 8, 8}) {
    const fs::path dir = root / std::to_string(run++);
    const std::string cmd = "LATZETA_THREADS=" + std::to_string(threads) + " \"" +
                            std::string(LATZETA_CLI_PATH) + "\" sweep --out \"" + dir.string() +
                            "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) return {false, "sweep command failed: " + cmd};
    snaps.push_back(snapshot(dir));
  }
  fs::remove_all(root);
  bool same = !snaps[0].empty();
  for (const auto& s : snaps) same = same && s == snaps[0];
  return {same, "4 runs (threads 1, 1, 8, 8), " + std::to_string(snaps[0].size()) +
                    " bytes each, " + (same ? "identical" : "differ")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"identity suite", identities},
      {"factorization equivalence", factorization},
      {"delta=1/5 off-critical zero", fifth_zero},
      {"delta=1/2 zero set", half_zero_set},
      {"delta=1/3 criticality", third_critical},
      {"taylor order", taylor_order},
      {"asymptotic fit", asymptotic_fit},
      {"divergence law", divergence_law},
      {"theta cross-check", theta},
      {"oracle equivalence", direct_sum},
      {"symmetry and residue", symmetry_residue},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
