#ifndef DFSTAB_RATFUN_HPP
#define DFSTAB_RATFUN_HPP

#include <string>
#include <utility>
#include <vector>

#include "dfstab/poly.hpp"

namespace dfstab {

/// Reduced quotient of two polynomials: gcd(num, den) = 1, den monic,
/// zero is 0/1.
class RatFun {
public:
    RatFun() : den_(Rat(1)) {}
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {} // NOLINT
    RatFun(const Poly& p) : num_(p), den_(Rat(1)) {} // NOLINT
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFun derivative() const;
    RatFun inverse() const;

private:
    Poly num_, den_;
};

/// Order of the Laurent expansion at x = c. Throws on zero input.
int order_at(const RatFun& f, const Rat& c);
/// Coefficient of (x-c)^{-1} in the Laurent expansion at c.
Rat residue_at(const RatFun& f, const Rat& c);
/// deg(den) - deg(num). Throws on zero input.
int order_at_infinity(const RatFun& f);
/// -[x^{-1}] f, the standard convention (minus the coefficient of 1/x in
/// the expansion at infinity).
Rat residue_at_infinity(const RatFun& f);

/// Simple poles with uniform negative-integer residue, detected factor-wise
/// over the refined factorization of the denominator, and the resulting
/// polynomial delta = prod factor^(-residue).
struct PoleProfile {
    struct SimplePole {
        Poly factor; // monic, simple in den(f)
        Rat residue; // negative integer
    };
    std::vector<SimplePole> simple_neg_int_poles;
    Poly delta = Poly(Rat(1));
    long s_count = 0; // roots counted with factor degrees
    std::vector<std::string> warnings;
};

PoleProfile pole_profile(const RatFun& f, int factor_cap);

/// f = g' + h with den(h) square-free and deg num(h) < deg den(h).
std::pair<RatFun, RatFun> hermite_reduce(const RatFun& f);
/// True iff the Hermite remainder vanishes, i.e. f = g' for some rational g.
bool is_rationally_integrable(const RatFun& f);

} // namespace dfstab

#endif
