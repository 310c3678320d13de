#include "cubiclines/line_finder.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>

#include "cubiclines/errors.hpp"
#include "rng.hpp"

namespace cubiclines {

namespace {

using Params = std::array<Complexd, 4>;

Eigen::Matrix4cd to_eigen(const std::array<std::array<Complexd, 4>, 4>& jac) {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

double residual_norm(const std::array<Complexd, 4>& r) {
  double mx = 0.0;
  for (const Complexd& c : r) mx = std::max(mx, std::abs(c));
  return mx;
}

// Newton on restrict_to_line(f, chart, ·) = 0. Returns the refined parameters
// on convergence (step norm below tol_step).
std::optional<Params> newton_solve(const CubicSurface& f, const LineChart& chart, Params params,
                                   int max_iter, double tol_step) {
  for (int it = 0; it < max_iter; ++it) {
    const auto res = restrict_to_line(f, chart, params);
    const Eigen::Matrix4cd jac = to_eigen(restriction_jacobian(f, chart, params));
    Eigen::Vector4cd rhs;
    for (int i = 0; i < 4; ++i) rhs(i) = res[static_cast<std::size_t>(i)];
    const Eigen::Vector4cd step = jac.partialPivLu().solve(rhs);
    if (!step.allFinite()) return std::nullopt;
    double step_norm = 0.0, param_norm = 0.0;
    for (int i = 0; i < 4; ++i) {
      params[static_cast<std::size_t>(i)] -= step(i);
      step_norm += std::norm(step(i));
      param_norm += std::norm(params[static_cast<std::size_t>(i)]);
    }
    if (param_norm > 1e16) return std::nullopt;  // running off to infinity
    if (std::sqrt(step_norm) < tol_step) return params;
  }
  return std::nullopt;
}

// Lexicographic key on Plücker coordinates rounded to a 1e-9 grid; distinct
// lines sit >= tol_dedupe apart, far above the grid.
std::array<std::int64_t, 12> sort_key(const ProjectiveLine& line) {
  std::array<std::int64_t, 12> key{};
  for (int i = 0; i < 6; ++i) {
    key[static_cast<std::size_t>(2 * i)] = std::llround(line.plucker[static_cast<std::size_t>(i)].real() * 1e9);
    key[static_cast<std::size_t>(2 * i + 1)] = std::llround(line.plucker[static_cast<std::size_t>(i)].imag() * 1e9);
  }
  return key;
}

}  // namespace

bool is_simple_zero(const CubicSurface& f, const ProjectiveLine& line, double ratio) {
  const LineChart& chart = line_charts()[static_cast<std::size_t>(chart_of_line(line))];
  const Eigen::Matrix4cd jac = to_eigen(restriction_jacobian(f, chart, chart_params(line, chart)));
  const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(jac);
  const auto& sv = svd.singularValues();
  return sv(3) > ratio * sv(0) && sv(0) > 0.0;
}

LineFinderReport find_lines(const CubicSurface& f, std::uint64_t seed, const FinderOptions& opts) {
  if (f.is_zero()) throw DegenerateSurfaceError("the zero polynomial has no well-defined line count");

  LineFinderReport report;
  report.seed = seed;

  std::vector<ProjectiveLine> found;
  std::vector<int> found_chart;  // chart index used to polish each line

  for (int chart_idx = 0; chart_idx < 6 && static_cast<int>(found.size()) < 27; ++chart_idx) {
    const LineChart& chart = line_charts()[static_cast<std::size_t>(chart_idx)];

    // Per-start results land in indexed slots; the merge below walks them in
    // start order, so the outcome does not depend on thread scheduling.
    std::vector<std::optional<Params>> slots(static_cast<std::size_t>(opts.newton_starts));
    auto run_range = [&](int lo, int hi) {
      for (int s = lo; s < hi; ++s) {
        detail::Rng rng(seed, static_cast<std::uint64_t>(chart_idx), static_cast<std::uint64_t>(s));
        Params start;
        for (auto& p : start) p = rng.next_in_disc(opts.start_radius);
        slots[static_cast<std::size_t>(s)] =
            newton_solve(f, chart, start, opts.newton_max_iter, opts.tol_step);
      }
    };
    const int n_threads = std::max(1, std::min(opts.threads, opts.newton_starts));
    if (n_threads == 1) {
      run_range(0, opts.newton_starts);
    } else {
      std::vector<std::thread> workers;
      const int per = (opts.newton_starts + n_threads - 1) / n_threads;
      for (int t = 0; t < n_threads; ++t) {
        const int lo = t * per;
        const int hi = std::min(opts.newton_starts, lo + per);
        if (lo < hi) workers.emplace_back(run_range, lo, hi);
      }
      for (auto& w : workers) w.join();
    }
    report.stats.starts += opts.newton_starts;

    for (const auto& slot : slots) {
      if (!slot) continue;
      ++report.stats.converged;
      ProjectiveLine line;
      try {
        line = line_from_chart(chart, *slot);
      } catch (const DependentSpanError&) {
        continue;
      }
      bool duplicate = false;
      for (const ProjectiveLine& known : found) {
        if (projective_distance(line.plucker, known.plucker) < opts.tol_dedupe) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) {
        ++report.stats.deduped;
        continue;
      }
      found.push_back(line);
      found_chart.push_back(chart_idx);
    }
  }

  if (found.size() != 27)
    throw DegenerateSurfaceError("expected 27 lines, found " + std::to_string(found.size()) +
                                 " (surface singular or numerically ill-conditioned)");

  // Re-polish each representative in its own best chart and certify.
  for (auto& line : found) {
    const int ci = chart_of_line(line);
    const LineChart& chart = line_charts()[static_cast<std::size_t>(ci)];
    if (auto polished = newton_solve(f, chart, chart_params(line, chart), 20, 1e-15))
      line = line_from_chart(chart, *polished);
  }

  report.residuals.reserve(27);
  std::vector<std::pair<std::array<std::int64_t, 12>, int>> order;
  order.reserve(27);
  for (int i = 0; i < 27; ++i) order.emplace_back(sort_key(found[static_cast<std::size_t>(i)]), i);
  std::sort(order.begin(), order.end());

  LineFinderReport out;
  out.seed = seed;
  out.stats = report.stats;
  for (const auto& [key, idx] : order) {
    const ProjectiveLine& line = found[static_cast<std::size_t>(idx)];
    const LineChart& chart = line_charts()[static_cast<std::size_t>(chart_of_line(line))];
    const double res = residual_norm(restrict_to_line(f, chart, chart_params(line, chart)));
    if (res > opts.tol_residual)
      throw DegenerateSurfaceError("line residual " + std::to_string(res) + " exceeds tolerance after polish");
    if (!is_simple_zero(f, line, opts.simplicity_ratio))
      throw DegenerateSurfaceError("a zero of the line section is not simple");
    out.lines.push_back(line);
    out.residuals.push_back(res);
  }
  return out;
}

CubicSurface random_symmetric_cubic(std::uint64_t seed, const FinderOptions& opts) {
  for (int attempt = 0; attempt < opts.retry_budget; ++attempt) {
    detail::Rng rng(seed, 0x5f3759df, static_cast<std::uint64_t>(attempt));
    const CubicSurface f =
        CubicSurface::symmetric_basis(rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian());
    if (f.max_abs_coeff() < 1e-8) continue;
    try {
      find_lines(f, seed + static_cast<std::uint64_t>(attempt), opts);
      return f;
    } catch (const DegenerateSurfaceError&) {
      continue;
    }
  }
  throw BudgetExhaustedError("no smooth symmetric cubic found within the retry budget");
}

}  // namespace cubiclines
