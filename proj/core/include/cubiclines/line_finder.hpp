#pragma once

#include <cstdint>
#include <vector>

#include "cubiclines/lines.hpp"

namespace cubiclines {

struct FinderOptions {
  int newton_starts = 200;        // random starts per chart
  int newton_max_iter = 50;       // Newton iterations per start
  double tol_step = 1e-13;        // convergence: step norm below this
  double tol_residual = 1e-10;    // accepted max residual after polish
  double tol_dedupe = 1e-6;       // projective distance identifying duplicates
  double simplicity_ratio = 1e-6; // min/max singular value of the Jacobian
  double start_radius = 2.0;      // Newton starts sampled from this disc
  int retry_budget = 32;          // resampling bound for random surfaces
  int threads = 1;                // worker threads for the per-chart starts
};

struct NewtonStats {
  long starts = 0;     // Newton starts launched
  long converged = 0;  // starts that converged to a zero
  long deduped = 0;    // converged starts dropped as duplicates
};

struct LineFinderReport {
  std::vector<ProjectiveLine> lines;  // canonical order (rounded-Plücker lex)
  std::vector<double> residuals;      // max |r_i| per line, after polish
  NewtonStats stats;
  std::uint64_t seed = 0;
};

// Multistart Newton on the 4x4 system restrict_to_line(f, chart) = 0 over all
// six charts, with per-(chart, start) random streams derived from the seed so
// the result is independent of thread count. Exactly 27 distinct simple lines
// or DegenerateSurfaceError.
LineFinderReport find_lines(const CubicSurface& f, std::uint64_t seed, const FinderOptions& opts = {});

// True iff the restriction Jacobian at the line (in its best chart) is
// nonsingular: smallest singular value > ratio * largest.
bool is_simple_zero(const CubicSurface& f, const ProjectiveLine& line, double ratio = 1e-6);

// Gaussian coefficients on the symmetric cubic basis, resampled until
// find_lines certifies 27 simple zeros. Throws BudgetExhaustedError.
CubicSurface random_symmetric_cubic(std::uint64_t seed, const FinderOptions& opts = {});

}  // namespace cubiclines
