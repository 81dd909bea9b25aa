#ifndef DFSTAB_POLY_HPP
#define DFSTAB_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dfstab/rat.hpp"

namespace dfstab {

/// Dense univariate polynomial over the rationals.
///
/// Coefficient i is the coefficient of x^i; no trailing zeros are stored,
/// so degree() is canonical. The zero polynomial has an empty coefficient
/// vector and degree -1 (standing in for degree -infinity).
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { // NOLINT: implicit by design, constants embed
        if (c != 0) c_.push_back(c);
    }
    Poly(long c) : Poly(Rat(c)) {} // NOLINT
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(1, 1); }
    static Poly monomial(const Rat& c, int k);
    /// x - c
    static Poly linear_root(const Rat& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[i];
    }
    const Rat& lc() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    /// Exact antiderivative with zero constant term.
    Poly antiderivative() const;
    Rat eval(const Rat& x) const;
    Poly pow(unsigned e) const;
    Poly monic() const;
    /// p(x + c)
    Poly taylor_shift(const Rat& c) const;
    /// x^deg * p(1/x): coefficient vector reversed.
    Poly reversed() const;

private:
    std::vector<Rat> c_;
    void trim();
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws if the division leaves a remainder.
Poly poly_div_exact(const Poly& a, const Poly& b);
/// Monic gcd. Throws if both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);
/// g = u*a + v*b with g the monic gcd.
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd poly_ext_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);
/// Largest v with p^v | a, plus the cofactor a / p^v. deg p >= 1, a != 0.
std::pair<int, Poly> poly_valuation(const Poly& a, const Poly& p);
Poly poly_mod(const Poly& a, const Poly& p);
/// Inverse of a modulo p. Empty when gcd(a, p) != 1.
std::optional<Poly> poly_mod_inverse(const Poly& a, const Poly& p);

enum class FactorStatus {
    linear,            // degree 1, trivially irreducible
    proved_irreducible, // certified by the exhaustive divisor search
    unverified_block,  // square-free but not refined past the cap
};

struct FactorPart {
    Poly factor; // monic
    int multiplicity = 1;
    FactorStatus status = FactorStatus::unverified_block;
};

struct Factorization {
    Rat unit = 1;
    std::vector<FactorPart> factors;
    Poly expand() const;
};

/// Yun decomposition: pairwise-coprime square-free monic factors with
/// multiplicities, unit * prod factor^mult == input. Throws on zero input.
Factorization squarefree_factor(const Poly& a);

/// Splits every square-free block by rational-root extraction, then by an
/// exhaustive integer-coefficient divisor search (Kronecker) for blocks of
/// degree <= exhaustive_degree_cap. Blocks above the cap, and blocks whose
/// divisor search exceeds the internal budget, keep FactorStatus::unverified_block.
Factorization refine_factors(const Factorization& f, int exhaustive_degree_cap);

/// All rational roots with exact multiplicities, sorted ascending.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& a);

/// s(s-1)...(s-j+1) as a polynomial in s.
Poly falling_factorial(int j);

} // namespace dfstab

#endif
