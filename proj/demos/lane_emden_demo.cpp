// Solves the Lane-Emden equation for a few polytropic indices and prints
// the first zero and a handful of solution values.

#include <cstdio>

#include "icsrbf/icsrbf.hpp"

int main() {
  struct Case {
    double m;
    icsrbf::SetupParams setup;
  };
  auto setup = [](int n, double r, double L) {
    icsrbf::SetupParams p;
    p.n = n;
    p.support_radius = r;
    p.length = L;
    return p;
  };
  const Case cases[] = {{1.0, setup(40, 6.5, 10.0)}, {2.0, setup(20, 4.0, 6.0)}, {3.0, setup(20, 6.5, 8.0)}};

  for (const auto& c : cases) {
    const auto problem = icsrbf::standard_lane_emden(c.m);
    const auto sol = icsrbf::solve(problem.spec, icsrbf::make_setup(c.setup));
    const auto zero = icsrbf::first_zero(sol, c.setup.length);
    std::printf("m = %.1f  (N=%d, r=%.1f, L=%.1f)  converged=%s  iterations=%d\n", c.m, c.setup.n,
                c.setup.support_radius, c.setup.length, sol.converged() ? "yes" : "no", sol.diagnostics().iterations);
    std::printf("  first zero  %.8f\n", zero ? *zero : 0.0);
    for (double x : {0.5, 1.0, 2.0, 3.0}) std::printf("  y(%.1f) = %.7f\n", x, sol.y(x));
  }
}
