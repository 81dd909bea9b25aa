#include "dfstab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfstab {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, int k) {
    if (c == 0) return Poly();
    std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
    v[static_cast<size_t>(k)] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_root(const Rat& c) { return Poly(std::vector<Rat>{-c, Rat(1)}); }

const Rat& Poly::lc() const {
    if (c_.empty()) throw std::invalid_argument("lc of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s == 0) return Poly();
    Poly r(p);
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Rat> v(c_.size() + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
    return Poly(std::move(v));
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(Rat(1));
    Poly base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
    return (Rat(1) / lc()) * *this;
}

Poly Poly::taylor_shift(const Rat& c) const {
    // Horner in (x + c): fold coefficients from the top.
    Poly r;
    Poly shift(std::vector<Rat>{c, Rat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * shift + Poly(*it);
    return r;
}

Poly Poly::reversed() const {
    std::vector<Rat> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly r(a);
    if (a.degree() < b.degree()) return {Poly(), r};
    std::vector<Rat> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat inv_lc = Rat(1) / b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rat c = r.lc() * inv_lc;
        q[static_cast<size_t>(k)] = c;
        r -= Poly::monomial(c, k) * b;
    }
    return {Poly(std::move(q)), r};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    Poly x(a), y(b);
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        // monic remainders keep the coefficients small
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

ExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    Poly r0(a), r1(b);
    Poly u0(Rat(1)), u1, v0, v1(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    Rat s = Rat(1) / r0.lc();
    return {s * r0, s * u0, s * v0};
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return poly_div_exact(a * b, poly_gcd(a, b)).monic();
}

std::pair<int, Poly> poly_valuation(const Poly& a, const Poly& p) {
    if (a.is_zero()) throw std::invalid_argument("valuation of zero polynomial");
    if (p.degree() < 1) throw std::invalid_argument("valuation by constant");
    int v = 0;
    Poly cur(a);
    while (true) {
        auto [q, r] = poly_divmod(cur, p);
        if (!r.is_zero()) return {v, cur};
        cur = q;
        ++v;
    }
}

Poly poly_mod(const Poly& a, const Poly& p) { return poly_divmod(a, p).second; }

std::optional<Poly> poly_mod_inverse(const Poly& a, const Poly& p) {
    Poly am = poly_mod(a, p);
    if (am.is_zero()) return std::nullopt;
    ExtGcd e = poly_ext_gcd(am, p);
    if (e.g.degree() != 0) return std::nullopt;
    return poly_mod(e.u, p);
}

Poly Factorization::expand() const {
    Poly r(unit);
    for (const auto& f : factors) r = r * f.factor.pow(static_cast<unsigned>(f.multiplicity));
    return r;
}

static FactorStatus initial_status(const Poly& p) {
    return p.degree() == 1 ? FactorStatus::linear : FactorStatus::unverified_block;
}

Factorization squarefree_factor(const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
    Factorization out;
    out.unit = a.lc();
    if (a.degree() == 0) return out;
    Poly w = a.monic();
    // Yun's algorithm.
    Poly g = poly_gcd(w, w.derivative());
    Poly b = poly_div_exact(w, g);
    Poly c = poly_div_exact(w.derivative(), g);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly ai = poly_gcd(b, d);
        if (ai.degree() > 0)
            out.factors.push_back({ai, i, initial_status(ai)});
        b = poly_div_exact(b, ai);
        c = poly_div_exact(d, ai);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational roots and factor refinement
// ---------------------------------------------------------------------------

namespace {

// Scale to integer coefficients and divide out the content.
Poly primitive_integer_part(const Poly& a) {
    Int den_lcm(1);
    for (const auto& c : a.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Rat> v;
    v.reserve(a.coeffs().size());
    Int content(0);
    for (const auto& c : a.coeffs()) {
        Rat s = c * Rat(den_lcm);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num().get_mpz_t());
        v.push_back(s);
    }
    if (content == 0) return Poly();
    for (auto& c : v) c /= Rat(content);
    return Poly(std::move(v));
}

std::vector<Int> positive_divisors(const Int& n) {
    std::vector<Int> divs, high;
    Int a = abs(n);
    for (Int d(1); d * d <= a; ++d) {
        if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
            divs.push_back(d);
            Int q = a / d;
            if (q != d) high.push_back(q);
        }
    }
    divs.insert(divs.end(), high.rbegin(), high.rend());
    return divs;
}

// Kronecker split: find a monic rational factor of degree in [2, deg/2], or
// certify there is none. `work` is monic, square-free, has no rational roots.
// Returns nullopt and sets `exhausted` to false if the divisor-tuple budget
// ran out before the search completed.
std::optional<std::pair<Poly, Poly>> kronecker_split(const Poly& work, bool& complete) {
    complete = true;
    const Poly zint = primitive_integer_part(work);
    const int n = zint.degree();
    constexpr long kBudget = 2000000;
    for (int k = 2; 2 * k <= n; ++k) {
        // evaluation points 0, 1, -1, 2, -2, ...
        std::vector<Rat> pts;
        for (int j = 0; static_cast<int>(pts.size()) < k + 1; ++j) {
            pts.push_back(Rat((j + 1) / 2 * ((j % 2) ? 1 : -1)));
        }
        std::vector<std::vector<Int>> choices;
        long combos = 1;
        for (const auto& x : pts) {
            Rat val = zint.eval(x);
            // no rational roots -> nonzero at every integer
            std::vector<Int> ds = positive_divisors(val.get_num());
            std::vector<Int> signed_ds;
            signed_ds.reserve(ds.size() * 2);
            for (const auto& d : ds) {
                signed_ds.push_back(d);
                signed_ds.push_back(-d);
            }
            combos *= static_cast<long>(signed_ds.size());
            if (combos > kBudget) {
                complete = false;
                return std::nullopt;
            }
            choices.push_back(std::move(signed_ds));
        }
        // odometer over divisor tuples, Lagrange-interpolate a candidate
        std::vector<size_t> idx(pts.size(), 0);
        while (true) {
            Poly cand;
            for (size_t i = 0; i < pts.size(); ++i) {
                Poly li(Rat(1));
                Rat denom(1);
                for (size_t j = 0; j < pts.size(); ++j) {
                    if (j == i) continue;
                    li = li * Poly::linear_root(pts[j]);
                    denom *= pts[i] - pts[j];
                }
                cand += (Rat(choices[i][idx[i]]) / denom) * li;
            }
            if (cand.degree() == k) {
                auto [q, r] = poly_divmod(zint, cand);
                if (r.is_zero()) return std::make_pair(cand.monic(), q.monic());
            }
            size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == choices[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<std::pair<Rat, int>> rational_roots(const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("rational roots of zero polynomial");
    std::vector<std::pair<Rat, int>> out;
    Poly cur(a);
    // root at 0
    {
        int v = 0;
        while (!cur.is_zero() && cur.coeff(0) == 0) {
            cur = poly_div_exact(cur, Poly::variable());
            ++v;
        }
        if (v > 0) out.emplace_back(Rat(0), v);
    }
    if (cur.degree() >= 1) {
        Poly zint = primitive_integer_part(cur);
        std::vector<Int> ps = positive_divisors(zint.coeff(0).get_num());
        std::vector<Int> qs = positive_divisors(zint.lc().get_num());
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                Int g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                for (int sign : {1, -1}) {
                    Rat r = rat(sign * p, q);
                    if (cur.eval(r) != 0) continue;
                    int mult = 0;
                    Poly lin = Poly::linear_root(r);
                    while (true) {
                        auto [quo, rem] = poly_divmod(cur, lin);
                        if (!rem.is_zero()) break;
                        cur = quo;
                        ++mult;
                    }
                    out.emplace_back(r, mult);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a_, const auto& b_) { return a_.first < b_.first; });
    return out;
}

Factorization refine_factors(const Factorization& f, int exhaustive_degree_cap) {
    Factorization out;
    out.unit = f.unit;
    for (const auto& part : f.factors) {
        if (part.factor.degree() == 1) {
            out.factors.push_back({part.factor.monic(), part.multiplicity, FactorStatus::linear});
            continue;
        }
        Poly work = part.factor.monic();
        for (const auto& [root, mult] : rational_roots(work)) {
            // square-free block: every root is simple
            (void)mult;
            out.factors.push_back(
                {Poly::linear_root(root), part.multiplicity, FactorStatus::linear});
            work = poly_div_exact(work, Poly::linear_root(root));
        }
        if (work.degree() == 0) continue;
        if (work.degree() == 1) {
            out.factors.push_back({work.monic(), part.multiplicity, FactorStatus::linear});
            continue;
        }
        // exhaustive stage on what is left
        std::vector<Poly> stack{work};
        while (!stack.empty()) {
            Poly w = stack.back();
            stack.pop_back();
            if (w.degree() == 1) {
                out.factors.push_back({w.monic(), part.multiplicity, FactorStatus::linear});
                continue;
            }
            if (exhaustive_degree_cap <= 0 || w.degree() > exhaustive_degree_cap) {
                out.factors.push_back({w, part.multiplicity, FactorStatus::unverified_block});
                continue;
            }
            bool complete = true;
            auto split = kronecker_split(w, complete);
            if (split) {
                stack.push_back(split->first);
                stack.push_back(split->second);
            } else {
                out.factors.push_back({w, part.multiplicity,
                                       complete ? FactorStatus::proved_irreducible
                                                : FactorStatus::unverified_block});
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const FactorPart& a, const FactorPart& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        const auto& ca = a.factor.coeffs();
        const auto& cb = b.factor.coeffs();
        for (size_t i = 0; i < ca.size(); ++i)
            if (ca[i] != cb[i]) return ca[i] < cb[i];
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

Poly falling_factorial(int j) {
    Poly r(Rat(1));
    for (int t = 0; t < j; ++t) r = r * Poly(std::vector<Rat>{Rat(-t), Rat(1)});
    return r;
}

} // namespace dfstab
