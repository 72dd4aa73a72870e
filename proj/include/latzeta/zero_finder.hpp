#pragma once

#include <string_view>
#include <vector>

#include "latzeta/arithmetic.hpp"
#include "latzeta/precision.hpp"

namespace latzeta {

/// Axis-aligned rectangle [x_min, x_max] x [y_min, y_max] in the s-plane.
struct SearchWindow {
  real_t x_min = -1.0;
  real_t x_max = 2.0;
  real_t y_min = 0.0;
  real_t y_max = 25.0;
  int max_subdivision_depth = 14;
  int boundary_samples_init = 32;  // initial samples per edge, before refinement
  bool pole_correction = true;     // add 1 when s = 1 lies inside

  void validate() const;
  [[nodiscard]] bool contains(complex_t s, real_t slack = 0.0) const noexcept;
  [[nodiscard]] complex_t centroid() const noexcept {
    return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)};
  }
};

enum class ZeroKind { critical, off_critical, trivial };

[[nodiscard]] std::string_view to_string(ZeroKind kind) noexcept;

struct ZeroRecord {
  real_t delta = 1.0;
  complex_t rho{};
  ZeroKind kind = ZeroKind::off_critical;
  // |E(rho)| / max(1, scale), scale being the magnitude of the terms that
  // cancel into E at rho (see EnergyEvaluation::scale).
  real_t residual = 0.0;
  real_t abs_residual = 0.0;  // |E(rho)|
  int newton_iters = 0;
};

/// Newton iteration on E(., delta). `step_history`, when given, receives |step| per iteration.
[[nodiscard]] ZeroRecord refine_zero(complex_t seed, real_t delta, const PrecisionPolicy& policy,
                                     std::vector<real_t>* step_history = nullptr);

/// Zeros minus poles enclosed by the window boundary, plus one when the pole
/// at s = 1 is inside and window.pole_correction is set.
[[nodiscard]] int count_zeros(const SearchWindow& window, real_t delta,
                              const PrecisionPolicy& policy);

/// Raw winding number of E along the counter-clockwise boundary.
[[nodiscard]] int winding_number(const SearchWindow& window, real_t delta,
                                 const PrecisionPolicy& policy);

struct UnresolvedCell {
  SearchWindow cell;
  int count = 0;
};

struct ScanReport {
  std::vector<ZeroRecord> zeros;          // sorted by (rho_y, rho_x)
  std::vector<UnresolvedCell> clusters;   // cells still holding > 1 zero at max depth
  SearchWindow window;                    // after any boundary inflation
  int total_count = 0;                    // count_zeros on `window`
};

/// Quadrisection with argument-principle counts and Newton refinement.
[[nodiscard]] ScanReport scan_report(const SearchWindow& window, real_t delta,
                                     const PrecisionPolicy& policy);

/// The located zeros; throws DepthExceeded if any cluster stays unresolved.
[[nodiscard]] std::vector<ZeroRecord> scan(const SearchWindow& window, real_t delta,
                                           const PrecisionPolicy& policy);

/// critical: |rho_x - 1/2| <= critical_tol; trivial: |rho_y| <= trivial_tol and
/// rho_x < 0; off_critical otherwise.
[[nodiscard]] ZeroKind classify(const ZeroRecord& record, const PrecisionPolicy& policy);

}  // namespace latzeta
