#ifndef B2HECKE_HECKE_HPP
#define B2HECKE_HECKE_HPP

#include <b2hecke/gaussian_rational.hpp>
#include <b2hecke/weyl.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace b2hecke {

/// Hecke parameters: q attached to the W-orbit of alpha1^ (short coroots
/// eps1 +- eps2), p to the orbit of alpha2^ (2*eps1, 2*eps2). Both must be
/// nonzero and not roots of unity.
struct Parameters {
    GaussianRational p;
    GaussianRational q;

    Parameters(GaussianRational p_, GaussianRational q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p.is_zero() || q.is_zero()) throw std::invalid_argument("Parameters: zero parameter");
        if (p.is_root_of_unity() || q.is_root_of_unity())
            throw std::invalid_argument("Parameters: root-of-unity parameter");
    }

    const GaussianRational& qi(int i) const {
        if (i == 1) return q;
        if (i == 2) return p;
        throw std::invalid_argument("Parameters: simple index");
    }

    friend bool operator==(const Parameters& a, const Parameters& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const Parameters& a, const Parameters& b) { return !(a == b); }
};

/// nu - s_i(nu) = k * alpha_i^; k is integral on this lattice.
inline long long coroot_pairing(WeightVector nu, int i) {
    if (i == 1) return nu.a - nu.b;
    if (i == 2) return nu.b;
    throw std::invalid_argument("coroot_pairing: simple index");
}

/// Element of the affine Hecke algebra of type B2 in Bernstein normal form:
/// a finite sum of monomials T_w X^lambda with coefficients in Q(i). Terms
/// are kept in a sparse map ordered length-lex on the word, then lex on
/// lambda, so equal elements have equal term maps.
class HeckeElement {
public:
    struct TermKey {
        WeylElem w;
        WeightVector lambda;
        friend bool operator<(const TermKey& l, const TermKey& r) {
            if (l.w.length() != r.w.length()) return l.w.length() < r.w.length();
            if (l.w != r.w) return l.w < r.w;
            return l.lambda < r.lambda;
        }
        friend bool operator==(const TermKey& l, const TermKey& r) {
            return l.w == r.w && l.lambda == r.lambda;
        }
    };
    using TermMap = std::map<TermKey, GaussianRational>;

    explicit HeckeElement(Parameters params) : _params(std::move(params)) {}

    static HeckeElement zero(const Parameters& params) { return HeckeElement(params); }

    static HeckeElement monomial(const Parameters& params, WeylElem w, WeightVector lambda,
                                 GaussianRational coef = GaussianRational(1)) {
        HeckeElement e(params);
        e.add_term(w, lambda, coef);
        return e;
    }

    static HeckeElement one(const Parameters& params) {
        return monomial(params, WeylElem::identity(), {0, 0});
    }

    /// T1, T2, X1, X2, X1inv, X2inv as normal-form elements.
    static HeckeElement generator(const Parameters& params, const std::string& name) {
        if (name == "T1") return monomial(params, WeylElem::s(1), {0, 0});
        if (name == "T2") return monomial(params, WeylElem::s(2), {0, 0});
        if (name == "X1") return monomial(params, WeylElem::identity(), kEps1);
        if (name == "X2") return monomial(params, WeylElem::identity(), kEps2);
        if (name == "X1inv") return monomial(params, WeylElem::identity(), {-1, 0});
        if (name == "X2inv") return monomial(params, WeylElem::identity(), {0, -1});
        throw std::invalid_argument("HeckeElement: unknown generator " + name);
    }

    static HeckeElement t_w(const Parameters& params, WeylElem w) {
        return monomial(params, w, {0, 0});
    }

    const Parameters& params() const { return _params; }
    const TermMap& terms() const { return _terms; }
    bool is_zero() const { return _terms.empty(); }

    void add_term(WeylElem w, WeightVector lambda, const GaussianRational& coef) {
        if (coef.is_zero()) return;
        TermKey key{w, lambda};
        auto it = _terms.find(key);
        if (it == _terms.end()) {
            _terms.emplace(key, coef);
        } else {
            it->second = it->second + coef;
            if (it->second.is_zero()) _terms.erase(it);
        }
    }

    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
        a.require_same_params(b);
        HeckeElement r = a;
        for (const auto& [key, c] : b._terms) r.add_term(key.w, key.lambda, c);
        return r;
    }

    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
        a.require_same_params(b);
        HeckeElement r = a;
        for (const auto& [key, c] : b._terms) r.add_term(key.w, key.lambda, -c);
        return r;
    }

    friend HeckeElement operator*(const GaussianRational& c, const HeckeElement& a) {
        HeckeElement r(a._params);
        for (const auto& [key, coef] : a._terms) r.add_term(key.w, key.lambda, c * coef);
        return r;
    }

    friend HeckeElement operator-(const HeckeElement& a) { return GaussianRational(-1) * a; }

    /// Normal-form product. Each right factor T_w' X^mu is absorbed by
    /// peeling the letters of the canonical reduced word of w' one at a
    /// time: X^nu T_i rewrites to T_i X^{s_i nu} plus the divided-difference
    /// correction expanded as a finite geometric sum, and T_w T_i follows
    /// the length/quadratic rule.
    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
        a.require_same_params(b);
        HeckeElement result(a._params);
        for (const auto& [bkey, bcoef] : b._terms) {
            HeckeElement partial = bcoef * a;
            if (!bkey.w.is_identity())
                for (char letter : bkey.w.word()) partial = partial.times_ti(letter - '0');
            for (const auto& [key, c] : partial._terms)
                result.add_term(key.w, key.lambda + bkey.lambda, c);
        }
        return result;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a._params == b._params && a._terms == b._terms;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    /// Sum of "coef * T[word] * X[a,b]" in term order; "0" when empty.
    std::string to_string() const {
        if (_terms.empty()) return "0";
        std::string out;
        for (const auto& [key, c] : _terms) {
            if (!out.empty()) out += " + ";
            out += c.to_string() + " * T[" + key.w.word() + "] * X[" + std::to_string(key.lambda.a) +
                   "," + std::to_string(key.lambda.b) + "]";
        }
        return out;
    }

private:
    Parameters _params;
    TermMap _terms;

    void require_same_params(const HeckeElement& o) const {
        if (_params != o._params) throw std::invalid_argument("HeckeElement: parameter mismatch");
    }

    /// Right-multiply by T_i.
    HeckeElement times_ti(int i) const {
        const GaussianRational qi = _params.qi(i);
        const GaussianRational qdiff = qi - qi.inv();
        const WeylElem si = WeylElem::s(i);
        const WeightVector alpha = (i == 1) ? kAlpha1Coroot : kAlpha2Coroot;
        HeckeElement r(_params);
        for (const auto& [key, c] : _terms) {
            WeightVector nu = key.lambda;
            WeightVector snu = si.act(nu);
            WeylElem wsi = key.w * si;
            // T_w (T_i X^{s_i nu}): length rule for T_w T_i
            r.add_term(wsi, snu, c);
            if (wsi.length() < key.w.length()) r.add_term(key.w, snu, c * qdiff);
            // correction: (q_i - q_i^-1) * geometric sum, nu - s_i nu = k alpha
            long long k = coroot_pairing(nu, i);
            if (k > 0) {
                for (long long j = 0; j < k; ++j) r.add_term(key.w, nu - j * alpha, c * qdiff);
            } else if (k < 0) {
                for (long long j = 1; j <= -k; ++j) r.add_term(key.w, nu + j * alpha, -(c * qdiff));
            }
        }
        return r;
    }
};

}  // namespace b2hecke

#endif  // B2HECKE_HECKE_HPP
