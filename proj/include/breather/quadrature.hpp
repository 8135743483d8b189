#pragma once

#include <vector>

namespace breather::quadrature {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

// Composite Gauss-Legendre over [a, b] split into equal panels.
template <class F>
double integrate(F&& f, double a, double b, int panels, const GaussRule& rule) {
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    sum += 0.5 * h * s;
  }
  return sum;
}

}  // namespace breather::quadrature
