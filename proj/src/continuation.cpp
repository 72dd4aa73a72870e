#include "latzeta/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "latzeta/errors.hpp"
#include "latzeta/lattice_energy.hpp"
#include "latzeta/parallel.hpp"

namespace latzeta {

namespace {

constexpr real_t kReferenceStep = 0.01;
constexpr real_t kClassifyFrom = 0.95;

// Grid values are snapped to 1e-12 so that traces with different steps share
// bit-identical common points.
real_t snap(real_t delta) { return std::round(delta * 1e12) / 1e12; }

std::vector<real_t> output_grid(real_t start, real_t target, real_t step,
                                const std::vector<real_t>& pinned) {
  const real_t dir = target > start ? 1.0 : -1.0;
  std::vector<real_t> grid;
  for (long i = 1;; ++i) {
    const real_t d = snap(start + dir * static_cast<real_t>(i) * step);
    if (dir * (target - d) <= 1e-12) break;
    grid.push_back(d);
  }
  grid.push_back(target);
  for (real_t p : pinned)
    if (dir * (p - start) > 1e-12 && dir * (target - p) > 1e-12) grid.push_back(p);
  std::sort(grid.begin(), grid.end(), [dir](real_t a, real_t b) { return dir * a < dir * b; });
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](real_t a, real_t b) { return std::abs(a - b) <= 1e-12; }),
             grid.end());
  return grid;
}

// d rho / d delta = -(dE/d delta) / (dE/ds) at a zero, with dE/d delta from a
// central difference. Used only to predict the first step.
complex_t zero_velocity(complex_t rho, real_t delta, const PrecisionPolicy& policy) {
  const real_t eta = 1e-6;
  const real_t hi = std::min(delta + eta, 1.0);
  const real_t lo = delta - eta;
  const complex_t de_ddelta =
      (energy(rho, hi, policy) - energy(rho, lo, policy)) / (hi - lo);
  const complex_t de_ds = energy_ds(rho, delta, policy);
  return -de_ddelta / de_ds;
}

}  // namespace

std::string_view to_string(BranchKind kind) noexcept {
  switch (kind) {
    case BranchKind::standard: return "standard";
    case BranchKind::non_standard: return "non_standard";
    case BranchKind::unclassified: return "unclassified";
  }
  return "unclassified";
}

std::string_view to_string(TraceStatus status) noexcept {
  switch (status) {
    case TraceStatus::completed: return "completed";
    case TraceStatus::divergence_detected: return "divergence_detected";
    case TraceStatus::stopped: return "stopped";
  }
  return "stopped";
}

BranchCurve trace_branch(const ZeroRecord& seed, real_t delta_target, real_t step,
                         const PrecisionPolicy& policy, const TraceOptions& options) {
  if (!(step > 0.0 && step <= 0.01)) throw DomainError("trace step must lie in (0, 0.01]");
  if (!(seed.delta > 0.0 && seed.delta < 1.0) || !(delta_target > 0.0 && delta_target < 1.0))
    throw DomainError("trace path must stay inside (0, 1)");
  if (!(seed.residual <= policy.newton_tol))
    throw DomainError("trace seed is not a refined zero");

  BranchCurve curve;
  curve.samples.push_back({seed.delta, seed.rho, seed.residual});
  if (std::abs(delta_target - seed.delta) <= 1e-12) return curve;

  const real_t dir = delta_target > seed.delta ? 1.0 : -1.0;
  const auto grid = output_grid(seed.delta, delta_target, step, options.pinned_deltas);

  real_t cur_delta = seed.delta;
  complex_t cur_rho = seed.rho;
  bool have_prev = false;
  real_t prev_delta = 0.0;
  complex_t prev_rho{};
  real_t h = step;
  int accepted_run = 0;
  // The tangent predictor serves the first step and any step whose secant
  // prediction was rejected; the secant resumes after the next acceptance.
  bool use_tangent = true;
  complex_t velocity{};
  const auto update_velocity = [&] {
    try {
      velocity = zero_velocity(cur_rho, cur_delta, policy);
    } catch (const Error&) {
      velocity = {};
    }
  };
  update_velocity();

  const auto stop = [&](const std::string& reason, ErrorKind kind) {
    if (options.throw_on_failure) {
      if (kind == ErrorKind::step_collapse) throw StepCollapse(reason);
      throw NoConvergence(reason);
    }
    curve.status = TraceStatus::stopped;
    curve.stop_reason = reason;
  };

  for (const real_t target : grid) {
    while (cur_delta != target) {
      const real_t remaining = std::abs(target - cur_delta);
      const real_t h_try = std::min(h, remaining);
      // Land exactly on the grid point rather than leave a sliver behind.
      const real_t next_delta =
          remaining - h_try <= 1e-9 * step ? target : cur_delta + dir * h_try;
      const complex_t predicted =
          !use_tangent && have_prev ? cur_rho + (cur_rho - prev_rho) * ((next_delta - cur_delta) /
                                                        (cur_delta - prev_delta))
                    : cur_rho + velocity * (next_delta - cur_delta);

      bool accepted = false;
      ZeroRecord corrected;
      try {
        corrected = refine_zero(predicted, next_delta, policy);
        accepted =
            std::abs(corrected.rho - predicted) <= options.jump_guard * h_try / kReferenceStep &&
            std::abs(corrected.rho - cur_rho) <= options.jump_guard;
      } catch (const Error&) {
        accepted = false;
      }

      if (!accepted) {
        if (!use_tangent) {
          use_tangent = true;
          update_velocity();
        }
        h = 0.5 * h_try;
        accepted_run = 0;
        if (h < options.min_step) {
          std::ostringstream msg;
          msg << "continuation step collapsed below " << options.min_step << " at delta = "
              << cur_delta << ", rho = " << cur_rho;
          stop(msg.str(), ErrorKind::step_collapse);
          return curve;
        }
        continue;
      }

      prev_delta = cur_delta;
      prev_rho = cur_rho;
      have_prev = true;
      use_tangent = false;
      cur_delta = next_delta;
      cur_rho = corrected.rho;
      curve.samples.push_back({cur_delta, cur_rho, corrected.residual});
      if (++accepted_run >= 2) {
        h = std::min(step, 2.0 * h);
        accepted_run = 0;
      }
      if (cur_rho.real() < options.divergence_floor) {
        curve.status = TraceStatus::divergence_detected;
        return curve;
      }
    }
  }
  return curve;
}

int branch_index(complex_t rho) noexcept {
  return static_cast<int>(std::lround((rho.imag() * kLn2 / kPi - 1.0) / 2.0));
}

BranchClassification classify_branch(const BranchCurve& curve, const PrecisionPolicy& policy,
                                     const ClassifyOptions& options) {
  (void)policy;
  if (curve.samples.empty()) throw Unclassifiable("empty branch");
  const auto last = std::max_element(
      curve.samples.begin(), curve.samples.end(),
      [](const BranchSample& a, const BranchSample& b) { return a.delta < b.delta; });

  if (curve.status == TraceStatus::divergence_detected)
    return {BranchKind::non_standard, branch_index(last->rho)};

  if (last->delta < kClassifyFrom) {
    std::ostringstream msg;
    msg << "branch ends at delta = " << last->delta << " before " << kClassifyFrom;
    throw Unclassifiable(msg.str());
  }
  if (last->delta >= 1.0 - options.standard_window &&
      std::abs(last->rho.real() - 0.5) <= options.standard_tol)
    return {BranchKind::standard, std::nullopt};

  // Real parts over delta >= 0.95, in increasing delta.
  std::vector<BranchSample> tail;
  for (const auto& s : curve.samples)
    if (s.delta >= kClassifyFrom) tail.push_back(s);
  std::sort(tail.begin(), tail.end(),
            [](const BranchSample& a, const BranchSample& b) { return a.delta < b.delta; });
  bool decreasing = tail.size() >= 2;
  for (std::size_t i = 1; i < tail.size(); ++i)
    decreasing = decreasing && tail[i].rho.real() < tail[i - 1].rho.real();
  if (decreasing && last->rho.real() < options.divergence_trend)
    return {BranchKind::non_standard, branch_index(last->rho)};

  std::ostringstream msg;
  msg << "branch end rho = " << last->rho << " at delta = " << last->delta
      << " is neither near the critical line nor running off to the left";
  throw Unclassifiable(msg.str());
}

std::vector<BranchCurve> sweep_figure_data(real_t delta_min, real_t delta_max, real_t step,
                                           const SearchWindow& window,
                                           const PrecisionPolicy& policy,
                                           const SweepOptions& options) {
  if (!(delta_min > 0.0 && delta_min < delta_max && delta_max < 1.0))
    throw DomainError("sweep needs 0 < delta_min < delta_max < 1");
  if (!(delta_min <= options.seed_delta && options.seed_delta <= delta_max))
    throw DomainError("sweep range must contain the seed delta");

  std::vector<ZeroRecord> seeds;
  for (const auto& z : scan(window, options.seed_delta, policy))
    if (std::abs(z.rho.imag()) > policy.trivial_tol) seeds.push_back(z);

  const real_t right_target = std::max(delta_max, options.classification_delta);
  TraceOptions trace_opts = options.trace;
  trace_opts.throw_on_failure = false;

  std::vector<BranchCurve> curves(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) {
    BranchCurve left = trace_branch(seeds[i], delta_min, step, policy, trace_opts);
    BranchCurve right = trace_branch(seeds[i], right_target, step, policy, trace_opts);

    BranchCurve& curve = curves[i];
    curve.branch_id = static_cast<int>(i);
    curve.samples.assign(left.samples.rbegin(), left.samples.rend());
    curve.samples.insert(curve.samples.end(), right.samples.begin() + 1, right.samples.end());
    curve.status = right.status;
    curve.stop_reason = right.stop_reason;
    if (left.status == TraceStatus::stopped && right.status != TraceStatus::stopped)
      curve.stop_reason = "left: " + left.stop_reason;
    try {
      const auto verdict = classify_branch(curve, policy, options.classify);
      curve.branch_kind = verdict.kind;
      curve.k_index = verdict.k_index;
    } catch (const Unclassifiable&) {
      curve.branch_kind = BranchKind::unclassified;
    }
  });
  return curves;
}

}  // namespace latzeta
