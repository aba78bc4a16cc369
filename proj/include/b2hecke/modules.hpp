#ifndef B2HECKE_MODULES_HPP
#define B2HECKE_MODULES_HPP

#include <b2hecke/hecke.hpp>
#include <b2hecke/matrix.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace b2hecke {

/// A point of the torus: the values of X1 and X2, extended multiplicatively
/// to every X^lambda.
class Character {
public:
    Character(GaussianRational x1, GaussianRational x2, Parameters params)
        : _x1(std::move(x1)), _x2(std::move(x2)), _params(std::move(params)) {
        if (_x1.is_zero() || _x2.is_zero()) throw std::invalid_argument("Character: zero value");
    }

    const GaussianRational& x1() const { return _x1; }
    const GaussianRational& x2() const { return _x2; }
    const Parameters& params() const { return _params; }

    GaussianRational eval(WeightVector lambda) const {
        return _x1.pow(lambda.a) * _x2.pow(lambda.b);
    }

    /// (w.chi)(X^lambda) = chi(X^{w^-1 lambda}).
    Character acted_by(WeylElem w) const {
        WeylElem winv = w.inverse();
        return Character(eval(winv.act(kEps1)), eval(winv.act(kEps2)), _params);
    }

    Character negated() const { return Character(-_x1, -_x2, _params); }

    /// Distinct values in the W-orbit, in the order first reached by the
    /// canonical element list.
    std::vector<Character> orbit() const {
        std::vector<Character> out;
        for (WeylElem w : WeylElem::all()) {
            Character c = acted_by(w);
            bool seen = false;
            for (const Character& prev : out) seen = seen || prev.same_values(c);
            if (!seen) out.push_back(c);
        }
        return out;
    }

    bool same_values(const Character& o) const { return _x1 == o._x1 && _x2 == o._x2; }

    std::string to_string() const { return "(" + _x1.to_string() + ", " + _x2.to_string() + ")"; }

private:
    GaussianRational _x1, _x2;
    Parameters _params;
};

/// One-dimensional representation of the parabolic subalgebra
/// H_i = <T_i, X1, X2>: the values on X1, X2 and T_i. The quadratic relation
/// forces t in {q_i, -1/q_i}; T1 X2 T1 = X1 forces x1 = t^2 x2 when i = 1,
/// and T2 X2^-1 T2 = X2 forces x2^2 = t^2 when i = 2.
class OneDimRep {
public:
    OneDimRep(int subalgebra, GaussianRational x1, GaussianRational x2, GaussianRational t,
              Parameters params)
        : _subalgebra(subalgebra),
          _x1(std::move(x1)),
          _x2(std::move(x2)),
          _t(std::move(t)),
          _params(std::move(params)) {
        if (_subalgebra != 1 && _subalgebra != 2)
            throw std::invalid_argument("OneDimRep: subalgebra index");
        if (_x1.is_zero() || _x2.is_zero()) throw std::invalid_argument("OneDimRep: zero value");
        const GaussianRational& qi = _params.qi(_subalgebra);
        if (_t != qi && _t != -qi.inv())
            throw std::invalid_argument("OneDimRep: T value violates the quadratic relation");
        if (_subalgebra == 1) {
            if (_x1 != _t * _t * _x2)
                throw std::invalid_argument("OneDimRep: x1 != t^2 x2 on subalgebra 1");
        } else {
            if (_x2 * _x2 != _t * _t)
                throw std::invalid_argument("OneDimRep: x2^2 != t^2 on subalgebra 2");
        }
    }

    int subalgebra() const { return _subalgebra; }
    const GaussianRational& x1() const { return _x1; }
    const GaussianRational& x2() const { return _x2; }
    const GaussianRational& t() const { return _t; }
    const Parameters& params() const { return _params; }

    GaussianRational eval_x(WeightVector lambda) const {
        return _x1.pow(lambda.a) * _x2.pow(lambda.b);
    }

    OneDimRep negated() const { return OneDimRep(_subalgebra, -_x1, -_x2, _t, _params); }

private:
    int _subalgebra;
    GaussianRational _x1, _x2, _t;
    Parameters _params;
};

/// Pass/fail record for the defining relations evaluated as matrix
/// identities, plus the invertibility preconditions on X1, X2.
struct RelationReport {
    bool x1_invertible = false;
    bool x2_invertible = false;
    bool quad_t1 = false;
    bool quad_t2 = false;
    bool braid = false;
    bool t1_x2_t1_eq_x1 = false;
    bool t2_x2inv_t2_eq_x2 = false;
    bool t2_x1_commute = false;
    bool x1_x2_commute = false;

    bool pass() const {
        return x1_invertible && x2_invertible && quad_t1 && quad_t2 && braid && t1_x2_t1_eq_x1 &&
               t2_x2inv_t2_eq_x2 && t2_x1_commute && x1_x2_commute;
    }

    std::string failures() const {
        std::string out;
        auto note = [&out](bool ok, const char* name) {
            if (!ok) {
                if (!out.empty()) out += ", ";
                out += name;
            }
        };
        note(x1_invertible, "X1 singular");
        note(x2_invertible, "X2 singular");
        note(quad_t1, "(T1-q)(T1+1/q)=0");
        note(quad_t2, "(T2-p)(T2+1/p)=0");
        note(braid, "T1T2T1T2=T2T1T2T1");
        note(t1_x2_t1_eq_x1, "T1X2T1=X1");
        note(t2_x2inv_t2_eq_x2, "T2X2^-1T2=X2");
        note(t2_x1_commute, "T2X1=X1T2");
        note(x1_x2_commute, "X1X2=X2X1");
        return out;
    }
};

inline RelationReport verify_relations(const Matrix& t1, const Matrix& t2, const Matrix& x1,
                                       const Matrix& x2, const Parameters& params) {
    RelationReport rep;
    size_t n = t1.rows();
    if (t1.cols() != n || t2.rows() != n || t2.cols() != n || x1.rows() != n || x1.cols() != n ||
        x2.rows() != n || x2.cols() != n)
        throw DimensionMismatch("verify_relations: generator shapes");
    Matrix id = Matrix::identity(n);
    rep.x1_invertible = x1.rank() == n;
    rep.x2_invertible = x2.rank() == n;
    rep.quad_t1 = ((t1 - params.q * id) * (t1 + params.q.inv() * id)).is_zero();
    rep.quad_t2 = ((t2 - params.p * id) * (t2 + params.p.inv() * id)).is_zero();
    rep.braid = (t1 * t2 * t1 * t2 - t2 * t1 * t2 * t1).is_zero();
    rep.t1_x2_t1_eq_x1 = (t1 * x2 * t1 - x1).is_zero();
    if (rep.x2_invertible)
        rep.t2_x2inv_t2_eq_x2 = (t2 * x2.inverse() * t2 - x2).is_zero();
    rep.t2_x1_commute = (t2 * x1 - x1 * t2).is_zero();
    rep.x1_x2_commute = (x1 * x2 - x2 * x1).is_zero();
    return rep;
}

/// Finite-dimensional module over the affine Hecke algebra, given by the
/// four generator matrices. The defining relations are verified at
/// construction. The optional seed character records one known weight; all
/// weights of every module built here lie in its W-orbit.
class HModule {
public:
    HModule(std::string label, Parameters params, Matrix t1, Matrix t2, Matrix x1, Matrix x2,
            std::optional<Character> seed)
        : _label(std::move(label)),
          _params(std::move(params)),
          _t1(std::move(t1)),
          _t2(std::move(t2)),
          _x1(std::move(x1)),
          _x2(std::move(x2)),
          _seed(std::move(seed)) {
        _dim = _t1.rows();
        RelationReport rep = verify_relations(_t1, _t2, _x1, _x2, _params);
        if (!rep.pass())
            throw std::invalid_argument("HModule '" + _label + "': relations fail: " +
                                        rep.failures());
        _x1inv = _x1.inverse();
        _x2inv = _x2.inverse();
    }

    const std::string& label() const { return _label; }
    const Parameters& params() const { return _params; }
    size_t dim() const { return _dim; }
    const Matrix& t1() const { return _t1; }
    const Matrix& t2() const { return _t2; }
    const Matrix& x1() const { return _x1; }
    const Matrix& x2() const { return _x2; }
    const Matrix& x1inv() const { return _x1inv; }
    const Matrix& x2inv() const { return _x2inv; }
    const std::optional<Character>& seed() const { return _seed; }

    /// The four defining generators, in the fixed order T1, T2, X1, X2.
    std::vector<Matrix> generator_matrices() const { return {_t1, _t2, _x1, _x2}; }

    /// Generators together with inverses, the word alphabet used by span
    /// closures and trace vectors: T1, T2, X1, X2, X1^-1, X2^-1.
    std::vector<Matrix> word_alphabet() const { return {_t1, _t2, _x1, _x2, _x1inv, _x2inv}; }

    HModule with_label(std::string label) const {
        HModule copy = *this;
        copy._label = std::move(label);
        return copy;
    }

private:
    std::string _label;
    Parameters _params;
    size_t _dim = 0;
    Matrix _t1, _t2, _x1, _x2, _x1inv, _x2inv;
    std::optional<Character> _seed;
};

namespace detail {

inline size_t weyl_position(const std::vector<WeylElem>& order, WeylElem w) {
    for (size_t k = 0; k < order.size(); ++k)
        if (order[k] == w) return k;
    throw std::logic_error("weyl_position: element not in basis order");
}

}  // namespace detail

/// Principal series M(chi) on the basis {T_w (x) v} with w running over the
/// canonical length-lex order e, 1, 2, 12, 21, 121, 212, 1212. A generator g
/// acts by multiplying g * T_w into Bernstein normal form and evaluating chi
/// on each X^lambda factor.
inline HModule principal_series(const Character& chi) {
    const Parameters& pr = chi.params();
    std::vector<WeylElem> basis(WeylElem::all().begin(), WeylElem::all().end());
    const char* names[4] = {"T1", "T2", "X1", "X2"};
    Matrix mats[4];
    for (int g = 0; g < 4; ++g) {
        Matrix m(8, 8);
        HeckeElement gen = HeckeElement::generator(pr, names[g]);
        for (size_t j = 0; j < 8; ++j) {
            HeckeElement prod = gen * HeckeElement::t_w(pr, basis[j]);
            for (const auto& [key, c] : prod.terms()) {
                size_t i = detail::weyl_position(basis, key.w);
                m.at(i, j) = m.at(i, j) + c * chi.eval(key.lambda);
            }
        }
        mats[g] = std::move(m);
    }
    return HModule("M" + chi.to_string(), pr, mats[0], mats[1], mats[2], mats[3], chi);
}

/// Module induced from a one-dimensional representation of H_i, on the basis
/// {T_w (x) v} with w over min_coset_reps(i). Each normal-form term T_w' X^l
/// is split as w' = rep * u with u in {e, s_i}; T_u X^l lies in H_i and acts
/// through rho.
inline HModule induce(const OneDimRep& rho, const std::string& label = "") {
    const Parameters& pr = rho.params();
    int i = rho.subalgebra();
    const std::vector<WeylElem>& basis = min_coset_reps(i);
    const char* names[4] = {"T1", "T2", "X1", "X2"};
    Matrix mats[4];
    for (int g = 0; g < 4; ++g) {
        Matrix m(4, 4);
        HeckeElement gen = HeckeElement::generator(pr, names[g]);
        for (size_t j = 0; j < 4; ++j) {
            HeckeElement prod = gen * HeckeElement::t_w(pr, basis[j]);
            for (const auto& [key, c] : prod.terms()) {
                auto [rep, rem] = coset_decompose(key.w, i);
                size_t row = detail::weyl_position(basis, rep);
                GaussianRational coef = c * rho.eval_x(key.lambda);
                if (rem) coef = coef * rho.t();
                m.at(row, j) = m.at(row, j) + coef;
            }
        }
        mats[g] = std::move(m);
    }
    std::string name = label.empty() ? "Ind_H" + std::to_string(i) + "(" + rho.x1().to_string() +
                                           "," + rho.x2().to_string() + ";" + rho.t().to_string() +
                                           ")"
                                     : label;
    // T_e (x) v is an honest weight vector for (x1, x2).
    return HModule(name, pr, mats[0], mats[1], mats[2], mats[3],
                   Character(rho.x1(), rho.x2(), pr));
}

inline HModule one_dim_module(const std::string& label, const Parameters& pr,
                              const GaussianRational& x1, const GaussianRational& x2,
                              const GaussianRational& t1, const GaussianRational& t2) {
    auto m1 = [](const GaussianRational& v) { return Matrix(1, 1, {v}); };
    return HModule(label, pr, m1(t1), m1(t2), m1(x1), m1(x2), Character(x1, x2, pr));
}

struct WeightEntry {
    Character weight;
    size_t eig_dim = 0;
    size_t gen_dim = 0;
    Basis eig_basis;
    Basis gen_basis;
};

struct WeightDecomposition {
    std::vector<WeightEntry> entries;

    bool calibrated() const {
        for (const auto& e : entries)
            if (e.eig_dim != e.gen_dim) return false;
        return true;
    }

    size_t total_gen_dim() const {
        size_t s = 0;
        for (const auto& e : entries) s += e.gen_dim;
        return s;
    }
};

/// Simultaneous (generalized) eigenspace decomposition of the commuting
/// X-action. Candidate weights are the W-orbit of the module's seed weight;
/// if the generalized dimensions do not exhaust the module, some eigenvalue
/// lies outside the scanned orbit and the computation refuses to guess.
inline WeightDecomposition weight_decomposition(const HModule& m) {
    if (!m.seed().has_value())
        throw std::invalid_argument("weight_decomposition: module has no seed weight");
    size_t n = m.dim();
    Matrix id = Matrix::identity(n);
    WeightDecomposition wd;
    for (const Character& cand : m.seed()->orbit()) {
        Matrix dx1 = m.x1() - cand.x1() * id;
        Matrix dx2 = m.x2() - cand.x2() * id;
        Basis gen = subspace_intersection(generalized_kernel(dx1, n), generalized_kernel(dx2, n), n);
        if (gen.empty()) continue;
        WeightEntry entry{cand, 0, gen.size(), kernel(dx1.stacked(dx2)), gen};
        entry.eig_dim = entry.eig_basis.size();
        wd.entries.push_back(std::move(entry));
    }
    if (wd.total_gen_dim() != n)
        throw std::runtime_error("weight_decomposition: weight outside the scanned W-orbit in '" +
                                 m.label() + "'");
    return wd;
}

inline bool is_calibrated(const HModule& m) { return weight_decomposition(m).calibrated(); }

/// T2 |-> -T2 carries a module at (p, q) to one at (-p, q); the quadratic
/// relation holds because p - 1/p changes sign with p.
inline HModule twist_t2(const HModule& m) {
    Parameters twisted(-m.params().p, m.params().q);
    return HModule("twist(" + m.label() + ")", twisted, m.t1(), -m.t2(), m.x1(), m.x2(),
                   m.seed().has_value()
                       ? std::optional<Character>(Character(m.seed()->x1(), m.seed()->x2(), twisted))
                       : std::nullopt);
}

/// X1 |-> -X1, X2 |-> -X2 is an algebra automorphism (the sign character of
/// the lattice); this realizes the passage from M(chi) to M(-chi).
inline HModule negate_module(const HModule& m) {
    return HModule("neg(" + m.label() + ")", m.params(), m.t1(), m.t2(), -m.x1(), -m.x2(),
                   m.seed().has_value() ? std::optional<Character>(m.seed()->negated())
                                        : std::nullopt);
}

/// Transposing all four generators is again a module (every defining
/// relation is a palindrome), with the same weight multiset. Its invariant
/// subspaces are the annihilators of quotients of m.
inline HModule transpose_module(const HModule& m) {
    return HModule("transpose(" + m.label() + ")", m.params(), m.t1().transpose(),
                   m.t2().transpose(), m.x1().transpose(), m.x2().transpose(), m.seed());
}

/// Basis change by an invertible g: A |-> g^-1 A g.
inline HModule conjugate_module(const HModule& m, const Matrix& g) {
    Matrix ginv = g.inverse();
    return HModule(m.label() + "'", m.params(), ginv * m.t1() * g, ginv * m.t2() * g,
                   ginv * m.x1() * g, ginv * m.x2() * g, m.seed());
}

}  // namespace b2hecke

#endif  // B2HECKE_MODULES_HPP
