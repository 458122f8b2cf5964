#pragma once

#include <random>

#include "cubeprog/arith.hpp"

namespace cubeprog::testutil {

// Deterministic small rationals for property tests.
class RationalGen {
public:
    explicit RationalGen(unsigned seed = 0x5eed) : rng_(seed) {}

    Rational next(long num_bound = 50, long den_bound = 8) {
        std::uniform_int_distribution<long> num(-num_bound, num_bound);
        std::uniform_int_distribution<long> den(1, den_bound);
        return make_rational(Integer(num(rng_)), Integer(den(rng_)));
    }

    Rational next_nonzero(long num_bound = 50, long den_bound = 8) {
        for (;;) {
            Rational r = next(num_bound, den_bound);
            if (r != 0) return r;
        }
    }

    long next_long(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

private:
    std::mt19937 rng_;
};

}  // namespace cubeprog::testutil
