#pragma once

#include <optional>
#include <vector>

#include "cubiclines/line_finder.hpp"

namespace cubiclines {

enum class LineType { hyperbolic, elliptic };

// A line is real iff its phase-corrected Plücker vector is real: the stored
// normalization already divides by the largest entry, so the test is that the
// imaginary part has small norm.
bool is_real_line(const ProjectiveLine& line, double tol = 1e-8);

// Two orthonormal real 4-vectors spanning a real line (the real and imaginary
// parts of the complex span generate the real locus). Throws NotRealLineError.
std::array<std::array<double, 4>, 2> real_span(const ProjectiveLine& line, double tol = 1e-8);

// Topological type of a real line on a real cubic. The tangent plane at each
// point of the line sweeps the pencil of planes through it by a degree-2 map
// [alpha(s,t) : beta(s,t)]; the fixed points of the induced involution are
// the roots of the Jacobian quadratic, and their reality decides the type:
// real branch points <=> hyperbolic. degenerate_tol guards a vanishing
// discriminant (DegenerateInvolutionError) instead of guessing.
LineType line_type(const CubicSurface& f, const ProjectiveLine& line, double degenerate_tol = 1e-9);

struct RealLineAnalysis {
  int real_count = 0;
  int hyperbolic_count = 0;
  int elliptic_count = 0;
  struct Entry {
    int index = 0;
    bool real = false;
    std::optional<LineType> type;  // empty for non-real lines
  };
  std::vector<Entry> per_line;
};

// Classification of an already-found line set on a real cubic. Checks the
// invariant hyperbolic - elliptic = 3 (SegreViolationError otherwise).
RealLineAnalysis classify_real_lines(const CubicSurface& f, const std::vector<ProjectiveLine>& lines,
                                     double tol_real = 1e-8);

// find_lines + classify_real_lines.
RealLineAnalysis analyze_real(const CubicSurface& f, std::uint64_t seed, const FinderOptions& opts = {});

}  // namespace cubiclines
