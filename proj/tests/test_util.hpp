#ifndef DFSTAB_TEST_UTIL_HPP
#define DFSTAB_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "dfstab/poly.hpp"
#include "dfstab/rat.hpp"

namespace dfstab::testutil {

// Deterministic small-value generator for property tests.
class Rng {
public:
    explicit Rng(unsigned seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rat rational(long span = 5, long max_den = 3) {
        long num = integer(-span, span);
        long den = integer(1, max_den);
        return rat(num, den);
    }

    Rat nonzero_rational(long span = 5, long max_den = 3) {
        while (true) {
            Rat r = rational(span, max_den);
            if (r != 0) return r;
        }
    }

    Poly poly(int max_deg, long span = 4, bool nonzero = false) {
        while (true) {
            int d = static_cast<int>(integer(0, max_deg));
            std::vector<Rat> c;
            for (int i = 0; i <= d; ++i) c.push_back(rat(integer(-span, span)));
            Poly p{std::vector<Rat>(c)};
            if (!nonzero || !p.is_zero()) return p;
        }
    }

    std::mt19937& engine() { return eng_; }

private:
    std::mt19937 eng_;
};

inline Poly ipoly(std::vector<long> coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(Rat(c));
    return Poly(std::move(v));
}

} // namespace dfstab::testutil

#endif
