// The same Fourier coefficient from three directions: the exact q-expansion,
// the Kloosterman/Bessel sum, and (for the constant term) the Eisenstein
// closed form. Prints values, errors, and the rigorous tail bounds.

#include <gamma0/gamma0.hpp>

#include <cmath>
#include <iostream>

namespace g0 = gamma0;

int main() {
    const long long N = 2;
    const long long c_max = 20000;

    std::cout << "level " << N << ", c_max = " << c_max << "\n\n";

    for (long long r = 1; r <= 3; ++r) {
        double exact = g0::to_double(g0::hauptmodul::hauptmodul_coefficient(
            static_cast<long>(N), static_cast<long>(r)));
        auto p = g0::kernels::poincare_coeff(N, 1, r, c_max);
        // the normalized sum recovers -r * a(r)
        double recovered = -p.value / static_cast<double>(r);
        std::cout << "a(" << r << ") = " << exact << "\n"
                  << "  from the Bessel-weighted Kloosterman sum: " << recovered
                  << "  (err " << std::abs(recovered - exact) << ", tail/r "
                  << p.tail_bound / static_cast<double>(r) << ")\n";
    }

    std::cout << "\nconstant terms e(r) from the Eisenstein closed form, with the\n"
                 "truncated Kloosterman/zeta sum chasing them:\n";
    for (long long r = 1; r <= 4; ++r) {
        auto exact = g0::kernels::eisenstein_exact(N, r);
        auto num = g0::kernels::eisenstein_numeric(N, r, c_max);
        std::cout << "  e(" << r << ") = " << g0::io::fmt_rational(exact)
                  << ", sum = " << num.value << " +- " << num.tail_bound << '\n';
    }
    return 0;
}
