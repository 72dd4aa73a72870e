#include "latzeta/zero_finder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "latzeta/errors.hpp"
#include "latzeta/lattice_energy.hpp"
#include "latzeta/parallel.hpp"

namespace latzeta {

namespace {

constexpr int kMaxNewtonIters = 50;
constexpr real_t kBoundaryZeroLevel = 1e-8;
constexpr real_t kMaxPhaseStep = 0.25 * kPi;
constexpr std::size_t kMaxBoundarySamples = std::size_t{1} << 20;
constexpr real_t kPoleMargin = 1e-5;
constexpr real_t kInflation = 1e-4;
constexpr int kMaxInflations = 5;
constexpr real_t kDerivativeFloor = 1e-14;

// Off-centre split points keep cell edges away from symmetric features such
// as zeros on Re s = 0 or Re s = 1/2; alternates are tried on a boundary zero.
constexpr std::array<std::array<real_t, 2>, 3> kSplits = {{
    {0.4871, 0.5129},
    {0.4637, 0.5353},
    {0.5219, 0.4783},
}};

const complex_t kPole{1.0, 0.0};

real_t distance_to_boundary(const SearchWindow& w, complex_t p) {
  const real_t dx = std::max({w.x_min - p.real(), 0.0, p.real() - w.x_max});
  const real_t dy = std::max({w.y_min - p.imag(), 0.0, p.imag() - w.y_max});
  if (dx > 0.0 || dy > 0.0) return std::hypot(dx, dy);
  return std::min({p.real() - w.x_min, w.x_max - p.real(), p.imag() - w.y_min, w.y_max - p.imag()});
}

bool strictly_inside(const SearchWindow& w, complex_t p) {
  return p.real() > w.x_min && p.real() < w.x_max && p.imag() > w.y_min && p.imag() < w.y_max;
}

class BoundaryWalker {
 public:
  BoundaryWalker(real_t delta, const PrecisionPolicy& policy) : delta_(delta), policy_(policy) {}

  complex_t sample(complex_t s) {
    if (++samples_ > kMaxBoundarySamples)
      throw PhaseStepFailure("boundary refinement exceeded 2^20 samples");
    const complex_t value = energy_evaluate(s, delta_, policy_, false).value;
    if (std::abs(value) < kBoundaryZeroLevel) {
      std::ostringstream msg;
      msg << "E vanishes to " << std::abs(value) << " on the boundary at " << s;
      throw BoundaryZero(msg.str());
    }
    return value;
  }

  // Accumulated change of arg E along the straight segment a -> b.
  real_t edge_phase(complex_t a, complex_t b, int initial) {
    const int pieces = std::max(initial, static_cast<int>(std::ceil(4.0 * std::abs(b - a))));
    real_t total = 0.0;
    complex_t prev_point = a;
    complex_t prev_value = sample(a);
    for (int i = 1; i <= pieces; ++i) {
      const complex_t point = a + (b - a) * (static_cast<real_t>(i) / pieces);
      const complex_t value = sample(point);
      total += refine(prev_point, prev_value, point, value, 0);
      prev_point = point;
      prev_value = value;
    }
    return total;
  }

 private:
  real_t refine(complex_t pa, complex_t va, complex_t pb, complex_t vb, int depth) {
    const real_t step = std::arg(vb / va);
    if (std::abs(step) <= kMaxPhaseStep) return step;
    if (depth > 60) throw PhaseStepFailure("boundary bisection depth exhausted");
    const complex_t pm = 0.5 * (pa + pb);
    const complex_t vm = sample(pm);
    return refine(pa, va, pm, vm, depth + 1) + refine(pm, vm, pb, vb, depth + 1);
  }

  real_t delta_;
  const PrecisionPolicy& policy_;
  std::size_t samples_ = 0;
};

int winding_unchecked(const SearchWindow& w, real_t delta, const PrecisionPolicy& policy) {
  if (distance_to_boundary(w, kPole) < kPoleMargin)
    throw BoundaryZero("pole at s = 1 lies on the window boundary");
  BoundaryWalker walker(delta, policy);
  const complex_t c00{w.x_min, w.y_min}, c10{w.x_max, w.y_min};
  const complex_t c11{w.x_max, w.y_max}, c01{w.x_min, w.y_max};
  const int n = w.boundary_samples_init;
  const real_t total = walker.edge_phase(c00, c10, n) + walker.edge_phase(c10, c11, n) +
                       walker.edge_phase(c11, c01, n) + walker.edge_phase(c01, c00, n);
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

int count_unchecked(const SearchWindow& w, real_t delta, const PrecisionPolicy& policy) {
  int count = winding_unchecked(w, delta, policy);
  if (w.pole_correction && strictly_inside(w, kPole)) count += 1;
  return count;
}

SearchWindow inflated(const SearchWindow& w, real_t by) {
  SearchWindow out = w;
  out.x_min -= by;
  out.x_max += by;
  out.y_min -= by;
  out.y_max += by;
  return out;
}

std::array<SearchWindow, 4> quadrants(const SearchWindow& w, int split_set) {
  const auto& f = kSplits[static_cast<std::size_t>(split_set)];
  const real_t xm = w.x_min + f[0] * (w.x_max - w.x_min);
  const real_t ym = w.y_min + f[1] * (w.y_max - w.y_min);
  std::array<SearchWindow, 4> out{w, w, w, w};
  out[0].x_max = xm; out[0].y_max = ym;
  out[1].x_min = xm; out[1].y_max = ym;
  out[2].x_min = xm; out[2].y_min = ym;
  out[3].x_max = xm; out[3].y_min = ym;
  return out;
}

struct Cell {
  SearchWindow window;
  int count = 0;
  int depth = 0;
};

// Children of a cell with their counts, trying alternate split points when a
// child edge runs through a zero or the pole.
std::vector<Cell> split_and_count(const Cell& parent, real_t delta, const PrecisionPolicy& policy) {
  for (int set = 0; set < static_cast<int>(kSplits.size()); ++set) {
    try {
      std::vector<Cell> children;
      int sum = 0;
      for (const auto& child : quadrants(parent.window, set)) {
        const int count = count_unchecked(child, delta, policy);
        sum += count;
        if (count != 0) children.push_back({child, count, parent.depth + 1});
      }
      if (sum == parent.count) return children;
    } catch (const BoundaryZero&) {
    }
  }
  std::ostringstream msg;
  msg << "could not split cell [" << parent.window.x_min << ", " << parent.window.x_max << "] x ["
      << parent.window.y_min << ", " << parent.window.y_max << "] consistently";
  throw PhaseStepFailure(msg.str());
}

std::optional<ZeroRecord> try_newton_in(const Cell& cell, real_t delta,
                                        const PrecisionPolicy& policy) {
  const SearchWindow& w = cell.window;
  const real_t slack = 1e-9 * std::max(1.0, std::abs(w.centroid()));
  try {
    ZeroRecord rec = refine_zero(w.centroid(), delta, policy);
    if (w.contains(rec.rho, slack)) return rec;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ZeroKind kind) noexcept {
  switch (kind) {
    case ZeroKind::critical: return "critical";
    case ZeroKind::off_critical: return "off_critical";
    case ZeroKind::trivial: return "trivial";
  }
  return "off_critical";
}

void SearchWindow::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max))
    throw DomainError("search window needs x_min < x_max and y_min < y_max");
  if (max_subdivision_depth < 0 || boundary_samples_init < 1)
    throw DomainError("search window depth/sample settings out of range");
}

bool SearchWindow::contains(complex_t s, real_t slack) const noexcept {
  return s.real() >= x_min - slack && s.real() <= x_max + slack && s.imag() >= y_min - slack &&
         s.imag() <= y_max + slack;
}

ZeroKind classify(const ZeroRecord& record, const PrecisionPolicy& policy) {
  if (std::abs(record.rho.imag()) <= policy.trivial_tol && record.rho.real() < 0.0)
    return ZeroKind::trivial;
  if (std::abs(record.rho.real() - 0.5) <= policy.critical_tol) return ZeroKind::critical;
  return ZeroKind::off_critical;
}

ZeroRecord refine_zero(complex_t seed, real_t delta, const PrecisionPolicy& policy,
                       std::vector<real_t>* step_history) {
  const real_t folded = LatticeParams::from_delta(delta).delta;
  complex_t rho = seed;
  int converged_for = 0;
  for (int iter = 1; iter <= kMaxNewtonIters; ++iter) {
    const EnergyEvaluation eval = energy_evaluate(rho, folded, policy, true);
    if (!std::isfinite(eval.value.real()) || !std::isfinite(eval.value.imag()))
      throw NoConvergence("Newton iterate left the region where E is finite");
    if (std::abs(eval.derivative) < kDerivativeFloor) {
      std::ostringstream msg;
      msg << "|E'| = " << std::abs(eval.derivative) << " at " << rho;
      throw DerivativeUnderflow(msg.str());
    }
    const complex_t step = eval.value / eval.derivative;
    rho -= step;
    if (step_history) step_history->push_back(std::abs(step));

    const real_t step_floor = 8.0 * std::numeric_limits<real_t>::epsilon() * std::max(1.0, std::abs(rho));
    const real_t residual = std::abs(eval.value) / std::max(1.0, eval.scale);
    // One polishing step after the residual test passes, then stop once the
    // step is down at rounding level.
    if (residual <= policy.newton_tol) ++converged_for;
    if (converged_for >= 2 || (converged_for >= 1 && std::abs(step) <= step_floor)) {
      const EnergyEvaluation final_eval = energy_evaluate(rho, folded, policy, false);
      ZeroRecord rec;
      rec.delta = folded;
      rec.rho = rho;
      rec.abs_residual = std::abs(final_eval.value);
      rec.residual = rec.abs_residual / std::max(1.0, final_eval.scale);
      rec.newton_iters = iter;
      if (rec.residual > policy.newton_tol) continue;
      rec.kind = classify(rec, policy);
      return rec;
    }
  }
  std::ostringstream msg;
  msg << "Newton did not converge from seed " << seed << " at delta = " << delta;
  throw NoConvergence(msg.str());
}

int winding_number(const SearchWindow& window, real_t delta, const PrecisionPolicy& policy) {
  window.validate();
  return winding_unchecked(window, delta, policy);
}

int count_zeros(const SearchWindow& window, real_t delta, const PrecisionPolicy& policy) {
  window.validate();
  return count_unchecked(window, delta, policy);
}

ScanReport scan_report(const SearchWindow& window, real_t delta, const PrecisionPolicy& policy) {
  window.validate();
  const real_t folded = LatticeParams::from_delta(delta).delta;

  ScanReport report;
  report.window = window;
  for (int attempt = 0;; ++attempt) {
    try {
      report.total_count = count_unchecked(report.window, folded, policy);
      break;
    } catch (const BoundaryZero&) {
      if (attempt >= kMaxInflations) throw;
      report.window = inflated(report.window, kInflation);
    }
  }

  std::vector<Cell> level;
  if (report.total_count > 0) level.push_back({report.window, report.total_count, 0});
  while (!level.empty()) {
    // Unit cells first try Newton from their centroid.
    std::vector<std::optional<ZeroRecord>> found(level.size());
    parallel_for(level.size(), [&](std::size_t i) {
      if (level[i].count == 1) found[i] = try_newton_in(level[i], folded, policy);
    });

    std::vector<const Cell*> to_split;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (found[i]) {
        report.zeros.push_back(*found[i]);
      } else if (level[i].depth >= window.max_subdivision_depth) {
        report.clusters.push_back({level[i].window, level[i].count});
      } else {
        to_split.push_back(&level[i]);
      }
    }

    std::vector<std::vector<Cell>> children(to_split.size());
    parallel_for(to_split.size(), [&](std::size_t i) {
      children[i] = split_and_count(*to_split[i], folded, policy);
    });
    std::vector<Cell> next;
    for (auto& group : children)
      for (auto& cell : group) next.push_back(cell);
    level = std::move(next);
  }

  std::sort(report.zeros.begin(), report.zeros.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    if (a.rho.imag() != b.rho.imag()) return a.rho.imag() < b.rho.imag();
    return a.rho.real() < b.rho.real();
  });
  return report;
}

std::vector<ZeroRecord> scan(const SearchWindow& window, real_t delta,
                             const PrecisionPolicy& policy) {
  ScanReport report = scan_report(window, delta, policy);
  if (!report.clusters.empty()) {
    std::ostringstream msg;
    msg << report.clusters.size() << " cell(s) still hold more than one zero (or resist Newton) at depth "
        << window.max_subdivision_depth;
    throw DepthExceeded(msg.str());
  }
  return std::move(report.zeros);
}

}  // namespace latzeta
