#pragma once

#include <random>

#include "stc/scalars.hpp"

// Deterministic generators for property tests.

namespace testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240613u);
    return gen;
}

// rational with numerator in [-max, max] and denominator in [1, dmax]
inline stc::Rational random_rational(int max = 6, int dmax = 3) {
    std::uniform_int_distribution<int> num(-max, max);
    std::uniform_int_distribution<int> den(1, dmax);
    return stc::rat(num(rng()), den(rng()));
}

inline stc::Gaussian random_gaussian(int max = 6, int dmax = 3) {
    return stc::Gaussian(random_rational(max, dmax), random_rational(max, dmax));
}

inline int random_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng());
}

}  // namespace testutil
