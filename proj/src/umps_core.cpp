#include "umps/mps.hpp"

#include <stdexcept>

namespace umps {

int generic_injectivity_estimate(int D, int d, int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("generic_injectivity_estimate: trials >= 1 required");
    if (D < 1 || d < 1) throw std::invalid_argument("generic_injectivity_estimate: D, d >= 1 required");
    Rng rng(seed);
    int worst = 0;
    for (int t = 0; t < trials; ++t) {
        MatrixTuple<Rational> m = random_tuple<Rational>(rng, D, d);
        MatrixSpace<Rational> L = MatrixSpace<Rational>::span_of(D, m.mats);
        int found = -1;
        for (int k = 1; k <= D * D; ++k) {
            if (span_growth(L, k) == D * D) {
                found = k;
                break;
            }
        }
        if (found < 0) return -1;
        if (found > worst) worst = found;
    }
    return worst;
}

} // namespace umps
