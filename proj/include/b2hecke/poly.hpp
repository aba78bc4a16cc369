#ifndef B2HECKE_POLY_HPP
#define B2HECKE_POLY_HPP

#include <b2hecke/gaussian_rational.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace b2hecke {

/// Univariate polynomial over Q(i), coefficients stored low to high with no
/// trailing zeros. deg(0) is reported as -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs) : _c(std::move(coeffs)) { trim(); }
    static Poly constant(GaussianRational c) { return Poly({std::move(c)}); }
    static Poly x() { return Poly({GaussianRational(0), GaussianRational(1)}); }

    static Poly from_roots(const std::vector<GaussianRational>& roots) {
        Poly p = constant(GaussianRational(1));
        for (const auto& r : roots) p = p * Poly({-r, GaussianRational(1)});
        return p;
    }

    long long degree() const { return static_cast<long long>(_c.size()) - 1; }
    bool is_zero() const { return _c.empty(); }
    const std::vector<GaussianRational>& coeffs() const { return _c; }

    GaussianRational coeff(size_t k) const {
        return k < _c.size() ? _c[k] : GaussianRational(0);
    }
    const GaussianRational& lead() const {
        if (_c.empty()) throw std::domain_error("Poly: leading coefficient of zero");
        return _c.back();
    }

    GaussianRational eval(const GaussianRational& x) const {
        GaussianRational acc(0);
        for (size_t k = _c.size(); k-- > 0;) acc = acc * x + _c[k];
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<GaussianRational> c(std::max(a._c.size(), b._c.size()));
        for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<GaussianRational> c(std::max(a._c.size(), b._c.size()));
        for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<GaussianRational> c(a._c.size() + b._c.size() - 1);
        for (size_t i = 0; i < a._c.size(); ++i)
            for (size_t j = 0; j < b._c.size(); ++j) c[i + j] = c[i + j] + a._c[i] * b._c[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const GaussianRational& s, const Poly& a) {
        std::vector<GaussianRational> c(a._c.size());
        for (size_t k = 0; k < c.size(); ++k) c[k] = s * a._c[k];
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a._c == b._c; }

    /// Euclidean division by a nonzero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
        if (den.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly r = num;
        std::vector<GaussianRational> q(
            num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0);
        GaussianRational lead_inv = den.lead().inv();
        while (!r.is_zero() && r.degree() >= den.degree()) {
            size_t shift = r.degree() - den.degree();
            GaussianRational f = r.lead() * lead_inv;
            q[shift] = f;
            std::vector<GaussianRational> c = r._c;
            for (size_t k = 0; k < den._c.size(); ++k)
                c[k + shift] = c[k + shift] - f * den._c[k];
            c.pop_back();
            r = Poly(std::move(c));
        }
        return {Poly(std::move(q)), r};
    }

    Poly derivative() const {
        if (_c.size() <= 1) return Poly();
        std::vector<GaussianRational> c(_c.size() - 1);
        for (size_t k = 1; k < _c.size(); ++k) c[k - 1] = GaussianRational((long long)k) * _c[k];
        return Poly(std::move(c));
    }

    Poly conj() const {
        std::vector<GaussianRational> c(_c.size());
        for (size_t k = 0; k < _c.size(); ++k) c[k] = _c[k].conj();
        return Poly(std::move(c));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return lead().inv() * *this;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Poly squarefree_part() const {
        if (is_zero() || degree() == 0) return monic();
        return divmod(*this, gcd(*this, derivative())).first.monic();
    }

private:
    std::vector<GaussianRational> _c;
    void trim() {
        while (!_c.empty() && _c.back().is_zero()) _c.pop_back();
    }
};

/// Exact square root of a nonnegative rational, if it exists in Q.
inline std::optional<GaussianRational> rational_sqrt(const GaussianRational& x) {
    if (!x.is_real()) return std::nullopt;
    if (x.re_num() < 0) return std::nullopt;
    BigInt sn = boost::multiprecision::sqrt(x.re_num());
    BigInt sd = boost::multiprecision::sqrt(x.re_den());
    if (sn * sn != x.re_num() || sd * sd != x.re_den()) return std::nullopt;
    return GaussianRational(sn, sd);
}

namespace detail {

// ---- integer polynomial helpers for the rational-factor search ----
//
// Everything below serves roots_in_qi: extract the degree <= 2 rational
// factors of a square-free integer polynomial by one modular factorization
// plus Hensel lifting, then read roots off those factors. Coefficients are
// cpp_int; moduli are p^k for a single odd prime p.

using ZPoly = std::vector<BigInt>;  // low to high, no trailing zeros

inline void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline BigInt mod_pos(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline ZPoly zp_mod(ZPoly a, const BigInt& m) {
    for (auto& c : a) c = mod_pos(c, m);
    zp_trim(a);
    return a;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = mod_pos(c[i + j] + a[i] * b[j], m);
    zp_trim(c);
    return c;
}

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly c(std::max(a.size(), b.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        BigInt v = 0;
        if (k < a.size()) v += a[k];
        if (k < b.size()) v += b[k];
        c[k] = mod_pos(v, m);
    }
    zp_trim(c);
    return c;
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly c(std::max(a.size(), b.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        BigInt v = 0;
        if (k < a.size()) v += a[k];
        if (k < b.size()) v -= b[k];
        c[k] = mod_pos(v, m);
    }
    zp_trim(c);
    return c;
}

inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = mod_pos(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt quot = old_r / r;
        BigInt tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod_pos(old_s, m);
}

/// Division with remainder mod m; the divisor's leading coefficient must be
/// invertible mod m (always true for the monic divisors used here).
inline std::pair<ZPoly, ZPoly> zp_divmod(const ZPoly& num, const ZPoly& den, const BigInt& m) {
    if (den.empty()) throw std::domain_error("zp_divmod: zero divisor");
    BigInt lead_inv = mod_inverse(den.back(), m);
    ZPoly r = num;
    zp_trim(r);
    ZPoly q(r.size() >= den.size() ? r.size() - den.size() + 1 : 0);
    while (r.size() >= den.size() && !r.empty()) {
        size_t shift = r.size() - den.size();
        BigInt f = mod_pos(r.back() * lead_inv, m);
        q[shift] = f;
        for (size_t k = 0; k < den.size(); ++k)
            r[k + shift] = mod_pos(r[k + shift] - f * den[k], m);
        zp_trim(r);
    }
    zp_trim(q);
    return {q, r};
}

inline ZPoly zp_gcd(ZPoly a, ZPoly b, const BigInt& p) {
    a = zp_mod(std::move(a), p);
    b = zp_mod(std::move(b), p);
    while (!b.empty()) {
        ZPoly r = zp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        BigInt inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = mod_pos(c * inv, p);
    }
    return a;
}

inline ZPoly zp_powmod(const ZPoly& base, BigInt e, const ZPoly& mod, const BigInt& p) {
    ZPoly acc{1};
    ZPoly b = zp_divmod(base, mod, p).second;
    while (e > 0) {
        if ((e & 1) == 1) acc = zp_divmod(zp_mul(acc, b, p), mod, p).second;
        b = zp_divmod(zp_mul(b, b, p), mod, p).second;
        e >>= 1;
    }
    return acc;
}

inline ZPoly zp_derivative(const ZPoly& a, const BigInt& m) {
    if (a.size() <= 1) return {};
    ZPoly d(a.size() - 1);
    for (size_t k = 1; k < a.size(); ++k) d[k - 1] = mod_pos(a[k] * BigInt((long long)k), m);
    zp_trim(d);
    return d;
}

/// Cantor-Zassenhaus over F_p for a monic square-free input. Deterministic
/// via a fixed-seed generator.
inline std::vector<ZPoly> factor_mod_p(const ZPoly& f, const BigInt& p) {
    std::vector<ZPoly> irreducible;
    std::mt19937_64 rng(0x5eedULL + f.size());
    auto random_poly = [&](size_t deg) {
        ZPoly r(deg + 1);
        for (auto& c : r) c = mod_pos(BigInt(rng()), p);
        r[deg] = 1;
        return r;
    };

    // distinct-degree split
    std::vector<std::pair<ZPoly, size_t>> by_degree;
    ZPoly rest = f;
    ZPoly x{0, 1};
    ZPoly xp = x;
    for (size_t d = 1; !rest.empty() && rest.size() > 1; ++d) {
        if (2 * d > rest.size() - 1) {
            by_degree.push_back({rest, rest.size() - 1});
            break;
        }
        xp = zp_powmod(xp, p, rest, p);  // x^{p^d} mod rest
        ZPoly g = zp_gcd(zp_sub(xp, x, p), rest, p);
        if (g.size() > 1) {
            by_degree.push_back({g, d});
            rest = zp_divmod(rest, g, p).first;
            xp = zp_divmod(xp, rest, p).second;
        }
    }

    // equal-degree split (p odd)
    for (auto& [part, d] : by_degree) {
        std::vector<ZPoly> stack{part};
        while (!stack.empty()) {
            ZPoly g = stack.back();
            stack.pop_back();
            if (g.size() - 1 == d) {
                irreducible.push_back(g);
                continue;
            }
            for (;;) {
                ZPoly a = random_poly(g.size() - 2 > 0 ? g.size() - 2 : 1);
                BigInt e = (boost::multiprecision::pow(p, (unsigned)d) - 1) / 2;
                ZPoly b = zp_powmod(a, e, g, p);
                b = zp_sub(b, ZPoly{1}, p);
                ZPoly h = zp_gcd(b, g, p);
                if (h.size() > 1 && h.size() < g.size()) {
                    stack.push_back(h);
                    stack.push_back(zp_divmod(g, h, p).first);
                    break;
                }
            }
        }
    }
    std::sort(irreducible.begin(), irreducible.end());
    return irreducible;
}

/// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
/// to the same congruences mod m^2. All of f, g, h monic.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const BigInt& m) {
    BigInt m2 = m * m;
    ZPoly e = zp_sub(zp_mod(f, m2), zp_mul(g, h, m2), m2);
    auto [q, r] = zp_divmod(zp_mul(s, e, m2), h, m2);
    ZPoly g_new = zp_add(g, zp_add(zp_mul(t, e, m2), zp_mul(q, g, m2), m2), m2);
    ZPoly h_new = zp_add(h, r, m2);
    ZPoly b = zp_sub(zp_add(zp_mul(s, g_new, m2), zp_mul(t, h_new, m2), m2), ZPoly{1}, m2);
    auto [c, d] = zp_divmod(zp_mul(s, b, m2), h_new, m2);
    s = zp_sub(s, d, m2);
    t = zp_sub(zp_sub(t, zp_mul(t, b, m2), m2), zp_mul(c, g_new, m2), m2);
    g = std::move(g_new);
    h = std::move(h_new);
}

/// Lift a mod-p factorization of monic f to mod p^(2^steps) via a factor
/// tree. Factors must be pairwise coprime mod p (true for irreducibles of a
/// square-free f).
inline std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<ZPoly>& factors,
                                           const BigInt& p, int steps) {
    if (factors.size() == 1) {
        BigInt m = p;
        for (int k = 0; k < steps; ++k) m *= m;
        return {zp_mod(f, m)};
    }
    size_t half = factors.size() / 2;
    ZPoly g{1}, h{1};
    for (size_t k = 0; k < half; ++k) g = zp_mul(g, factors[k], p);
    for (size_t k = half; k < factors.size(); ++k) h = zp_mul(h, factors[k], p);
    // Bezout s g + t h = 1 mod p via extended Euclid over F_p
    ZPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [quot, rem] = zp_divmod(r0, r1, p);
        ZPoly s2 = zp_sub(s0, zp_mul(quot, s1, p), p);
        ZPoly t2 = zp_sub(t0, zp_mul(quot, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("hensel_lift_tree: factors not coprime");
    BigInt inv = mod_inverse(r0[0], p);
    for (auto& c : s0) c = mod_pos(c * inv, p);
    for (auto& c : t0) c = mod_pos(c * inv, p);

    ZPoly gl = g, hl = h, s = s0, t = t0;
    BigInt m = p;
    for (int k = 0; k < steps; ++k) {
        hensel_step(zp_mod(f, m * m), gl, hl, s, t, m);
        m *= m;
    }
    std::vector<ZPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ZPoly> right(factors.begin() + half, factors.end());
    auto out = hensel_lift_tree(gl, left, p, steps);
    auto rout = hensel_lift_tree(hl, right, p, steps);
    out.insert(out.end(), rout.begin(), rout.end());
    return out;
}

inline BigInt zpoly_height(const ZPoly& a) {
    BigInt h = 0;
    for (const auto& c : a) h = std::max(h, c < 0 ? BigInt(-c) : c);
    return h;
}

/// Exact division test over Z for monic divisor candidates.
inline bool zp_divides_exactly(const ZPoly& f, const ZPoly& g) {
    ZPoly r = f;
    zp_trim(r);
    if (g.empty() || g.back() != 1) return false;
    while (r.size() >= g.size()) {
        BigInt f0 = r.back();
        size_t shift = r.size() - g.size();
        for (size_t k = 0; k < g.size(); ++k) r[k + shift] -= f0 * g[k];
        zp_trim(r);
    }
    return r.empty();
}

/// All monic integer factors of degree 1 or 2 of a monic square-free
/// integer polynomial.
inline std::vector<ZPoly> small_integer_factors(const ZPoly& f) {
    if (f.size() <= 1) return {};
    if (f.size() == 2) return {f};
    // prime with square-free reduction
    const long long prime_pool[] = {1000003, 1000033, 1000037, 1000039, 1000081,
                                    1000099, 1000117, 1000121, 1000133, 1000151,
                                    1000159, 1000171, 1000183, 1000187, 1000193};
    BigInt p = 0;
    for (long long cand : prime_pool) {
        BigInt pc(cand);
        ZPoly fm = zp_mod(f, pc);
        if (fm.size() != f.size()) continue;  // leading coefficient vanished (monic: cannot)
        if (zp_gcd(fm, zp_derivative(fm, pc), pc).size() == 1) {
            p = pc;
            break;
        }
    }
    if (p == 0) throw std::runtime_error("small_integer_factors: no usable prime in pool");

    std::vector<ZPoly> modular = factor_mod_p(zp_mod(f, p), p);

    // Landau-Mignotte style bound for degree <= 2 monic factors:
    // each coefficient bounded by 2 * (two-norm of f).
    BigInt norm2_sq = 0;
    for (const auto& c : f) norm2_sq += c * c;
    BigInt bound = 2 * (boost::multiprecision::sqrt(norm2_sq) + 1) + 1;
    int steps = 0;
    BigInt m = p;
    while (m <= 2 * bound) {
        m *= m;
        ++steps;
    }
    std::vector<ZPoly> lifted = hensel_lift_tree(zp_mod(f, m), modular, p, steps);

    auto symmetric = [&m](ZPoly a) {
        for (auto& c : a) {
            c = mod_pos(c, m);
            if (2 * c > m) c -= m;
        }
        zp_trim(a);
        return a;
    };

    std::vector<ZPoly> found;
    auto consider = [&](const ZPoly& cand_mod) {
        ZPoly cand = symmetric(cand_mod);
        if (cand.empty() || cand.back() != 1) return;
        if (zpoly_height(cand) > bound) return;
        if (!zp_divides_exactly(f, cand)) return;
        if (std::find(found.begin(), found.end(), cand) == found.end()) found.push_back(cand);
    };
    for (const auto& g : lifted)
        if (g.size() == 2 || g.size() == 3) consider(g);
    for (size_t i = 0; i < lifted.size(); ++i)
        for (size_t j = i + 1; j < lifted.size(); ++j)
            if (lifted[i].size() == 2 && lifted[j].size() == 2)
                consider(zp_mul(lifted[i], lifted[j], m));
    return found;
}

}  // namespace detail

/// All roots of f in Q(i), exactly. Every root of f divides the rational
/// polynomial f * conj(f) through a monic factor of degree at most 2, so the
/// search reduces to integer factor extraction plus the quadratic formula
/// with an exact square-root test.
inline std::vector<GaussianRational> roots_in_qi(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("roots_in_qi: zero polynomial");
    if (f.degree() == 0) return {};

    Poly big = (f * f.conj()).squarefree_part();
    for (const auto& c : big.coeffs())
        if (!c.is_real()) throw std::logic_error("roots_in_qi: f*conj(f) must be rational");

    // clear denominators -> integer; monicize via t -> t / lead
    BigInt den_lcm = 1;
    for (const auto& c : big.coeffs())
        den_lcm = boost::multiprecision::lcm(den_lcm, c.re_den());
    std::vector<BigInt> zc(big.coeffs().size());
    for (size_t k = 0; k < zc.size(); ++k)
        zc[k] = big.coeffs()[k].re_num() * (den_lcm / big.coeffs()[k].re_den());
    BigInt lead = zc.back();
    size_t n = zc.size() - 1;
    // G(t) = lead^(n-1) * F(t/lead) is monic integral; roots scale by lead.
    detail::ZPoly monic(zc.size());
    for (size_t k = 0; k < n; ++k)
        monic[k] = zc[k] * boost::multiprecision::pow(lead, (unsigned)(n - 1 - k));
    monic[n] = 1;

    GaussianRational lead_gr(lead, BigInt(1));
    std::vector<GaussianRational> roots;
    auto consider_root = [&](const GaussianRational& scaled) {
        GaussianRational alpha = scaled / lead_gr;
        if (!f.eval(alpha).is_zero()) return;
        if (std::find(roots.begin(), roots.end(), alpha) == roots.end()) roots.push_back(alpha);
    };

    for (const auto& fac : detail::small_integer_factors(monic)) {
        if (fac.size() == 2) {
            consider_root(GaussianRational(-fac[0], BigInt(1)));
        } else if (fac.size() == 3) {
            // t^2 + b t + c: roots (-b +- sqrt(b^2 - 4c)) / 2
            GaussianRational b(fac[1], BigInt(1)), c(fac[0], BigInt(1));
            GaussianRational disc = b * b - GaussianRational(4) * c;
            std::optional<GaussianRational> s = rational_sqrt(disc);
            GaussianRational root_part;
            if (s.has_value()) {
                root_part = *s;
            } else {
                std::optional<GaussianRational> si = rational_sqrt(-disc);
                if (!si.has_value()) continue;  // roots quadratic over Q but outside Q(i)
                root_part = *si * GaussianRational::i();
            }
            GaussianRational half = GaussianRational::fraction(1, 2);
            consider_root(half * (-b + root_part));
            consider_root(half * (-b - root_part));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace b2hecke

#endif  // B2HECKE_POLY_HPP
