#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latzeta/arithmetic.hpp"
#include "latzeta/precision.hpp"
#include "latzeta/zero_finder.hpp"

namespace latzeta {

enum class BranchKind { standard, non_standard, unclassified };
enum class TraceStatus { completed, divergence_detected, stopped };

[[nodiscard]] std::string_view to_string(BranchKind kind) noexcept;
[[nodiscard]] std::string_view to_string(TraceStatus status) noexcept;

struct BranchSample {
  real_t delta = 0.0;
  complex_t rho{};
  real_t residual = 0.0;
};

struct BranchCurve {
  int branch_id = 0;
  BranchKind branch_kind = BranchKind::unclassified;
  std::optional<int> k_index;
  std::vector<BranchSample> samples;  // strictly monotone in delta
  TraceStatus status = TraceStatus::completed;
  std::string stop_reason;  // set when status == stopped
};

struct TraceOptions {
  real_t jump_guard = 0.5;          // allowed |corrected - predicted| per 0.01 in delta
  real_t divergence_floor = -40.0;  // stop with divergence_detected below this rho_x
  real_t min_step = 1e-6;           // StepCollapse below this internal step
  // Extra output points (besides delta_seed + i * step) where a sample is
  // forced, when they lie on the traced interval.
  std::vector<real_t> pinned_deltas = {0.2, 1.0 / 3.0, 0.5};
  // When false, a step collapse or corrector failure ends the curve with
  // status stopped instead of throwing.
  bool throw_on_failure = true;
};

/// Predictor-corrector continuation of the zero `seed` from seed.delta to
/// delta_target. Emits every accepted internal step, which always includes
/// the output grid.
[[nodiscard]] BranchCurve trace_branch(const ZeroRecord& seed, real_t delta_target, real_t step,
                                       const PrecisionPolicy& policy,
                                       const TraceOptions& options = {});

struct BranchClassification {
  BranchKind kind = BranchKind::unclassified;
  std::optional<int> k_index;
};

struct ClassifyOptions {
  real_t standard_tol = 1e-3;      // |rho_x - 1/2| at delta >= 1 - standard_window
  real_t standard_window = 1e-3;
  // Without a detected divergence, a branch is non-standard when its real part
  // has fallen below this value and keeps decreasing over delta >= 0.95.
  real_t divergence_trend = -5.0;
};

/// k = round((rho_y ln 2 / pi - 1) / 2) at the last sample.
[[nodiscard]] int branch_index(complex_t rho) noexcept;

/// Throws Unclassifiable if the curve ends before delta = 0.95 without
/// divergence, or its end fits neither kind.
[[nodiscard]] BranchClassification classify_branch(const BranchCurve& curve,
                                                   const PrecisionPolicy& policy,
                                                   const ClassifyOptions& options = {});

struct SweepOptions {
  TraceOptions trace;
  ClassifyOptions classify;
  real_t seed_delta = 0.5;
  // Right-going traces continue to here for classification; samples beyond
  // delta_max are kept in the curve and flagged by the caller if unwanted.
  real_t classification_delta = 0.999;
};

/// Seeds every branch from a scan at seed_delta, traces left to delta_min and
/// right to max(delta_max, classification_delta), and classifies each.
/// Ordered by seed (rho_y, rho_x); branch_id is the position in that order.
[[nodiscard]] std::vector<BranchCurve> sweep_figure_data(real_t delta_min, real_t delta_max,
                                                         real_t step, const SearchWindow& window,
                                                         const PrecisionPolicy& policy,
                                                         const SweepOptions& options = {});

}  // namespace latzeta
