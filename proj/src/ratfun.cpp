#include "dfstab/ratfun.hpp"

#include <stdexcept>

namespace dfstab {

RatFun::RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    num = poly_div_exact(num, g);
    den = poly_div_exact(den, g);
    Rat s = Rat(1) / den.lc();
    num_ = s * num;
    den_ = s * den;
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero rational function");
    return RatFun(den_, num_);
}

int order_at(const RatFun& f, const Rat& c) {
    if (f.is_zero()) throw std::invalid_argument("order of zero rational function");
    Poly lin = Poly::linear_root(c);
    int vn = f.num().is_zero() ? 0 : poly_valuation(f.num(), lin).first;
    int vd = f.den().is_one() ? 0 : poly_valuation(f.den(), lin).first;
    return vn - vd;
}

namespace {

// Power-series quotient num/den to the requested order; den[0] != 0.
std::vector<Rat> series_div(const std::vector<Rat>& num, const std::vector<Rat>& den,
                            int order) {
    std::vector<Rat> q(static_cast<size_t>(order) + 1, Rat(0));
    Rat d0 = den.empty() ? Rat(0) : den[0];
    for (int k = 0; k <= order; ++k) {
        Rat acc = k < static_cast<int>(num.size()) ? num[static_cast<size_t>(k)] : Rat(0);
        for (int j = 0; j < k; ++j) {
            int i = k - j;
            if (i < static_cast<int>(den.size()))
                acc -= q[static_cast<size_t>(j)] * den[static_cast<size_t>(i)];
        }
        q[static_cast<size_t>(k)] = acc / d0;
    }
    return q;
}

std::vector<Rat> padded_coeffs(const Poly& p, int order) {
    std::vector<Rat> v = p.coeffs();
    v.resize(static_cast<size_t>(order) + 1, Rat(0));
    return v;
}

} // namespace

Rat residue_at(const RatFun& f, const Rat& c) {
    if (f.is_zero()) throw std::invalid_argument("residue of zero rational function");
    int v = order_at(f, c);
    if (v >= 0) return Rat(0);
    int m = -v;
    // den = (x-c)^m * e with e(c) != 0; residue is the (m-1)-st Taylor
    // coefficient of num/e at c.
    auto [vd, e] = poly_valuation(f.den(), Poly::linear_root(c));
    Poly nsh = f.num().taylor_shift(c);
    Poly esh = e.taylor_shift(c);
    (void)vd;
    auto q = series_div(padded_coeffs(nsh, m - 1), padded_coeffs(esh, m - 1), m - 1);
    return q[static_cast<size_t>(m - 1)];
}

int order_at_infinity(const RatFun& f) {
    if (f.is_zero()) throw std::invalid_argument("order of zero rational function");
    return f.den().degree() - f.num().degree();
}

Rat residue_at_infinity(const RatFun& f) {
    int t = order_at_infinity(f);
    if (t > 1) return Rat(0);
    // f(1/u) = u^t * numrev(u)/denrev(u); the 1/x coefficient of f is the
    // u^{1-t} series coefficient of numrev/denrev.
    int k = 1 - t;
    auto q = series_div(padded_coeffs(f.num().reversed(), k),
                        padded_coeffs(f.den().reversed(), k), k);
    return -q[static_cast<size_t>(k)];
}

PoleProfile pole_profile(const RatFun& f, int factor_cap) {
    PoleProfile out;
    if (f.is_zero() || f.is_polynomial()) return out;
    Factorization fac = refine_factors(squarefree_factor(f.den()), factor_cap);
    Poly dder = f.den().derivative();
    // worklist so a block discovered reducible by a failed inversion can be
    // split and reprocessed
    std::vector<FactorPart> work(fac.factors.begin(), fac.factors.end());
    while (!work.empty()) {
        FactorPart part = work.back();
        work.pop_back();
        if (part.status == FactorStatus::unverified_block)
            out.warnings.push_back("factor block of degree " +
                                   std::to_string(part.factor.degree()) +
                                   " not certified irreducible; pole data assumes it is");
        if (part.multiplicity != 1) continue; // not a simple pole
        // residue class at the block: num * (den')^{-1} mod p
        auto inv = poly_mod_inverse(dder, part.factor);
        if (!inv) {
            // den' shares a factor with p, so p is reducible: split and retry
            Poly g = poly_gcd(dder, part.factor);
            FactorPart a{g.monic(), part.multiplicity, FactorStatus::unverified_block};
            FactorPart b{poly_div_exact(part.factor, g).monic(), part.multiplicity,
                         FactorStatus::unverified_block};
            if (a.factor.degree() == 1) a.status = FactorStatus::linear;
            if (b.factor.degree() == 1) b.status = FactorStatus::linear;
            work.push_back(a);
            work.push_back(b);
            continue;
        }
        Poly res = poly_mod(f.num() * *inv, part.factor);
        if (res.degree() != 0) continue; // residue varies across the block
        Rat r = res.coeff(0);
        if (!is_integer(r) || r >= 0) continue;
        out.simple_neg_int_poles.push_back({part.factor, r});
        out.s_count += part.factor.degree();
        out.delta = out.delta * part.factor.pow(static_cast<unsigned>(to_long(-r)));
    }
    // deterministic order
    std::sort(out.simple_neg_int_poles.begin(), out.simple_neg_int_poles.end(),
              [](const auto& a, const auto& b) {
                  if (a.factor.degree() != b.factor.degree())
                      return a.factor.degree() < b.factor.degree();
                  const auto& ca = a.factor.coeffs();
                  const auto& cb = b.factor.coeffs();
                  for (size_t i = 0; i < ca.size(); ++i)
                      if (ca[i] != cb[i]) return ca[i] < cb[i];
                  return false;
              });
    return out;
}

std::pair<RatFun, RatFun> hermite_reduce(const RatFun& f) {
    RatFun g; // accumulated integrated part
    if (f.is_zero()) return {g, RatFun()};
    // split off and integrate the polynomial part
    auto [polypart, rem] = poly_divmod(f.num(), f.den());
    g = g + RatFun(polypart.antiderivative());
    RatFun cur(rem, f.den());
    while (!cur.is_zero()) {
        Factorization fac = squarefree_factor(cur.den());
        int m = 0;
        Poly q;
        for (const auto& part : fac.factors)
            if (part.multiplicity > m) {
                m = part.multiplicity;
                q = part.factor;
            }
        if (m <= 1) break; // denominator already square-free
        Poly b = poly_div_exact(cur.den(), q.pow(static_cast<unsigned>(m)));
        // sigma*(b q') + tau*q = num, deg sigma < deg q
        Poly bq = b * q.derivative();
        ExtGcd e = poly_ext_gcd(bq, q);
        // gcd(b q', q) = 1 since q is square-free and coprime to b
        if (e.g.degree() != 0) throw std::logic_error("hermite_reduce: gcd invariant violated");
        Poly sigma = poly_mod(e.u * cur.num(), q);
        Poly tau = poly_div_exact(cur.num() - sigma * bq, q);
        Rat mm1(m - 1);
        // num/(b q^m) = d/dx(-sigma/((m-1) q^{m-1})) + (tau + sigma' b/(m-1)) / (b q^{m-1})
        g = g + RatFun(-sigma, mm1 * q.pow(static_cast<unsigned>(m - 1)));
        cur = RatFun(mm1 * tau + sigma.derivative() * b,
                     mm1 * (b * q.pow(static_cast<unsigned>(m - 1))));
    }
    // keep the remainder proper: fold its polynomial part into g
    if (!cur.is_zero() && cur.num().degree() >= cur.den().degree()) {
        auto [p2, r2] = poly_divmod(cur.num(), cur.den());
        g = g + RatFun(p2.antiderivative());
        cur = RatFun(r2, cur.den());
    }
    return {g, cur};
}

bool is_rationally_integrable(const RatFun& f) { return hermite_reduce(f).second.is_zero(); }

} // namespace dfstab
