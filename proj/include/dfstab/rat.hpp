#ifndef DFSTAB_RAT_HPP
#define DFSTAB_RAT_HPP

#include <gmpxx.h>
#include <string>

namespace dfstab {

// Exact rational scalar. mpq_class keeps the canonical form we need:
// reduced fraction, positive denominator, zero stored as 0/1.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool fits_long(const Rat& q) {
    return is_integer(q) && q.get_num().fits_slong_p();
}

inline long to_long(const Rat& q) { return q.get_num().get_si(); }

// Canonical rendering: "a" for integers, "a/b" otherwise.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    r.canonicalize();
    return r;
}

} // namespace dfstab

#endif
