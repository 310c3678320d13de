#include "cubiclines/real_lines.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "cubiclines/errors.hpp"

namespace cubiclines {

bool is_real_line(const ProjectiveLine& line, double tol) {
  double imag2 = 0.0;
  for (const Complexd& c : line.plucker) imag2 += c.imag() * c.imag();
  return std::sqrt(imag2) < tol;
}

std::array<std::array<double, 4>, 2> real_span(const ProjectiveLine& line, double tol) {
  if (!is_real_line(line, tol)) throw NotRealLineError("line is not defined over the reals");
  // Real and imaginary parts of the complex span lie in the real locus; an
  // SVD extracts an orthonormal basis of their 2-dimensional row space.
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i) {
    m(0, i) = line.span[0][static_cast<std::size_t>(i)].real();
    m(1, i) = line.span[0][static_cast<std::size_t>(i)].imag();
    m(2, i) = line.span[1][static_cast<std::size_t>(i)].real();
    m(3, i) = line.span[1][static_cast<std::size_t>(i)].imag();
  }
  const Eigen::JacobiSVD<Eigen::Matrix4d> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(1) < 1e-8 * sv(0) || sv(2) > 1e-6 * sv(0))
    throw NotRealLineError("real locus of the line is not 2-dimensional");
  std::array<std::array<double, 4>, 2> out{};
  for (int i = 0; i < 4; ++i) {
    out[0][static_cast<std::size_t>(i)] = svd.matrixV()(i, 0);
    out[1][static_cast<std::size_t>(i)] = svd.matrixV()(i, 1);
  }
  return out;
}

LineType line_type(const CubicSurface& f, const ProjectiveLine& line, double degenerate_tol) {
  if (!f.is_real()) throw Error("line_type requires a real surface");
  const auto span = real_span(line);

  // Orthonormal basis (A, B) of the annihilator of the span: the pencil of
  // planes through the line.
  Eigen::Matrix<double, 2, 4> rows;
  for (int i = 0; i < 4; ++i) {
    rows(0, i) = span[0][static_cast<std::size_t>(i)];
    rows(1, i) = span[1][static_cast<std::size_t>(i)];
  }
  const Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(rows, Eigen::ComputeFullV);
  Eigen::Vector4d a = svd.matrixV().col(2);
  Eigen::Vector4d b = svd.matrixV().col(3);

  // The gradient along the line decomposes as alpha(s,t) A + beta(s,t) B with
  // alpha, beta binary quadratics; three samples determine the coefficients.
  auto gradient_at = [&](double s, double t) {
    std::array<Complexd, 4> x;
    for (int i = 0; i < 4; ++i)
      x[static_cast<std::size_t>(i)] = s * span[0][static_cast<std::size_t>(i)] + t * span[1][static_cast<std::size_t>(i)];
    const auto g = f.gradient(x);
    Eigen::Vector4d gr;
    for (int i = 0; i < 4; ++i) gr(i) = g[static_cast<std::size_t>(i)].real();
    // Tangency along the line: the gradient annihilates the span.
    const double in_span = std::abs(gr.dot(rows.row(0).transpose())) + std::abs(gr.dot(rows.row(1).transpose()));
    if (in_span > 1e-6 * (gr.norm() + 1e-30) && gr.norm() > 1e-12)
      throw Error("line does not lie on the surface; cannot classify its type");
    return std::array<double, 2>{gr.dot(a), gr.dot(b)};
  };

  const auto g10 = gradient_at(1.0, 0.0);
  const auto g01 = gradient_at(0.0, 1.0);
  const auto g11 = gradient_at(1.0, 1.0);
  const double a0 = g10[0], a2 = g01[0], a1 = g11[0] - a0 - a2;
  const double b0 = g10[1], b2 = g01[1], b1 = g11[1] - b0 - b2;

  // Discriminant of the Jacobian quadratic of (alpha, beta): its roots are the
  // branch points of the degree-2 sweep, i.e. the fixed points of the
  // tangent-plane involution.
  const double disc = (a0 * b2 - a2 * b0) * (a0 * b2 - a2 * b0) - (a0 * b1 - a1 * b0) * (a1 * b2 - a2 * b1);
  double scale = 0.0;
  for (double c : {a0, a1, a2, b0, b1, b2}) scale = std::max(scale, std::abs(c));
  if (std::abs(disc) < degenerate_tol * scale * scale * scale * scale)
    throw DegenerateInvolutionError("tangent-plane involution has a vanishing discriminant");
  return disc > 0.0 ? LineType::hyperbolic : LineType::elliptic;
}

RealLineAnalysis classify_real_lines(const CubicSurface& f, const std::vector<ProjectiveLine>& lines,
                                     double tol_real) {
  if (!f.is_real()) throw Error("surface not real");
  RealLineAnalysis out;
  out.per_line.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    RealLineAnalysis::Entry entry;
    entry.index = static_cast<int>(i);
    entry.real = is_real_line(lines[i], tol_real);
    if (entry.real) {
      ++out.real_count;
      entry.type = line_type(f, lines[i]);
      if (*entry.type == LineType::hyperbolic) ++out.hyperbolic_count;
      else ++out.elliptic_count;
    }
    out.per_line.push_back(entry);
  }
  if (out.hyperbolic_count - out.elliptic_count != 3)
    throw SegreViolationError("hyperbolic - elliptic = " +
                              std::to_string(out.hyperbolic_count - out.elliptic_count) +
                              ", expected 3 (numerical classification failure)");
  return out;
}

RealLineAnalysis analyze_real(const CubicSurface& f, std::uint64_t seed, const FinderOptions& opts) {
  const LineFinderReport report = find_lines(f, seed, opts);
  return classify_real_lines(f, report.lines);
}

}  // namespace cubiclines
