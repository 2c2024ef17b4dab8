// Prints xi for small paths and cycles three ways (engine, recurrence,
// generating function) and evaluates the closed forms at a sample point.
#include <iomanip>
#include <iostream>

#include "elimpoly/elimpoly.hpp"

int main() {
    using namespace elimpoly;
    constexpr unsigned kMax = 6;
    const Series paths = path_series(kMax);
    const Series cycles = cycle_series(kMax);
    const FloatPoint pt{0.75, -0.5, -0.25};

    std::cout << std::setprecision(12);
    for (unsigned n = 1; n <= kMax; ++n) {
        const Poly p = xi(path_graph(n));
        const Poly c = xi(cycle_graph(n));
        std::cout << "P_" << n << ": " << p << '\n';
        std::cout << "C_" << n << ": " << c << '\n';
        if (!(p == xi_path_poly(n) && p == paths[n] && c == xi_cycle_poly(n) && c == cycles[n])) {
            std::cerr << "mismatch at n = " << n << '\n';
            return 1;
        }
        std::cout << "  at (0.75, -0.5, -0.25): path " << xi_path_closed(n, pt) << " vs " << eval_float(p, pt)
                  << ", cycle " << xi_cycle_closed(n, pt) << " vs " << eval_float(c, pt) << '\n';
    }
    return 0;
}
