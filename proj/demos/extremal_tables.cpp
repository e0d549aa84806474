// Print the coefficient tables of the power-basis members f_n (w = z^n)
// next to their exact references, and confirm each one passes the
// pointwise membership check at deep radii.

#include <cstdio>

#include "petal/petal_all.hpp"

int main() {
    using namespace petal;
    for (int n = 1; n <= 6; ++n) {
        const auto f = extremal_fn(n, membership_order);
        const auto table = extremal_reference(n);
        std::printf("f_%d:", n);
        for (std::size_t k = 0; k < table.size(); ++k) {
            const double got = f.coeff(static_cast<int>(k) + 1).real();
            std::printf(" %.10g", got);
            if (std::abs(got - table[k]) > 1e-12) std::printf("(!)");
        }
        const auto rep = f.check_membership();
        std::printf("  [membership %s, worst modulus %.6f]\n",
                    rep.member ? "ok" : "FAILED", rep.worst_modulus);
    }
    return 0;
}
