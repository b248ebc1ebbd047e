#include "sdqm/interpolate.hpp"

#include <cmath>

namespace sdqm {

Poly1 interpolate_poly(const std::vector<std::pair<Scalar, Scalar>>& points, int degree_bound,
                       double tol, char var) {
  const int need = degree_bound + 1;
  if (static_cast<int>(points.size()) < need)
    throw InterpolationError("too few interpolation points");

  bool exact = true;
  for (const auto& p : points) exact = exact && p.first.is_exact() && p.second.is_exact();

  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      const Scalar d = points[i].first - points[j].first;
      if (exact ? d.is_zero() : d.abs() < 1e-12)
        throw InterpolationError("duplicate interpolation abscissae");
    }

  // Newton divided differences on the first `need` points
  std::vector<Scalar> xs(need), dd(need);
  for (int i = 0; i < need; ++i) {
    xs[i] = points[i].first;
    dd[i] = points[i].second;
  }
  for (int level = 1; level < need; ++level)
    for (int i = need - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

  Poly1 result({}, var);
  Poly1 basis = Poly1::constant(Scalar(1), var);
  for (int i = 0; i < need; ++i) {
    result = result + basis * dd[i];
    basis = basis.shift_up() - basis * xs[i];
  }

  // consistency of the unused points
  double max_res = 0;
  for (size_t i = need; i < points.size(); ++i) {
    const Scalar r = result.eval(points[i].first) - points[i].second;
    if (exact) {
      if (!r.is_zero())
        throw InterpolationError("inconsistent over-determined interpolation data", r.abs());
    } else {
      max_res = std::max(max_res, r.abs());
    }
  }
  if (!exact && max_res > tol)
    throw InterpolationError("inconsistent over-determined interpolation data (max residual " +
                                 std::to_string(max_res) + ")",
                             max_res);
  return result;
}

}  // namespace sdqm
