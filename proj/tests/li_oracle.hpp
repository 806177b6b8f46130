#ifndef CHEBLAB_TESTS_LI_ORACLE_HPP
#define CHEBLAB_TESTS_LI_ORACLE_HPP

#include <cmath>

// Test-only quadrature oracle for the offset logarithmic integral, independent
// of the library's adaptive Simpson path: composite 16-point Gauss-Legendre on
// log-spaced panels.
inline double li_gauss_legendre_oracle(double x, int panels = 64) {
  static const double nodes[8] = {0.0950125098376374, 0.2816035507792589,
                                  0.4580167776572274, 0.6178762444026438,
                                  0.7554044083550030, 0.8656312023878318,
                                  0.9445750230732326, 0.9894009349916499};
  static const double weights[8] = {0.1894506104550685, 0.1826034150449236,
                                    0.1691565193950025, 0.1495959888165767,
                                    0.1246289712555339, 0.0951585116824928,
                                    0.0622535239386479, 0.0271524594117541};
  double total = 0.0;
  const double la = std::log(2.0);
  const double lb = std::log(x);
  for (int panel = 0; panel < panels; ++panel) {
    const double a = std::exp(la + (lb - la) * panel / panels);
    const double b = std::exp(la + (lb - la) * (panel + 1) / panels);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int k = 0; k < 8; ++k) {
      sum += weights[k] * (1.0 / std::log(mid - half * nodes[k]) +
                           1.0 / std::log(mid + half * nodes[k]));
    }
    total += half * sum;
  }
  return total;
}

#endif
