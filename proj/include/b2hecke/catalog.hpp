#ifndef B2HECKE_CATALOG_HPP
#define B2HECKE_CATALOG_HPP

#include <b2hecke/analysis.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace b2hecke {

struct UnknownLabel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExcludedParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Hard-coded transcription of every explicit representation in the source
/// tables, evaluated at concrete parameters, plus the named characters and
/// the one-dimensional subalgebra representations they induce from. The
/// matrices are transcribed, never re-derived, so they stay independent of
/// the computed composition factors they certify.
class Catalog {
public:
    Catalog(Parameters params, GaussianRational v, GaussianRational u)
        : _params(std::move(params)), _v(std::move(v)), _u(std::move(u)) {
        for (RegimeKind k :
             {RegimeKind::generic, RegimeKind::p_eq_q, RegimeKind::p_eq_q2, RegimeKind::p2_eq_neg_q2})
            if (validate_regime(_params, k).accepted()) {
                _regime = k;
                break;
            }
        if (!_regime.has_value())
            throw std::invalid_argument("Catalog: parameters fit no base regime");
        check_v(_v);
        check_u(_u);
    }

    const Parameters& params() const { return _params; }
    const GaussianRational& v() const { return _v; }
    const GaussianRational& u() const { return _u; }
    RegimeKind regime() const { return *_regime; }

    // ---- characters of the classification ----

    /// Base character names, in table order.
    static const std::vector<std::string>& base_character_names() {
        static const std::vector<std::string> names = {"chi_a",  "chi_b",  "chi_c",  "chi_d1",
                                                       "chi_d2", "chi_d3", "chi_d4", "chi_d5",
                                                       "chi_f",  "chi_g"};
        return names;
    }

    Character character(const std::string& name) const {
        if (!name.empty() && name[0] == '-') return character(name.substr(1)).negated();
        const GaussianRational &p = _params.p, &q = _params.q;
        GaussianRational q2 = q * q;
        if (name == "chi_a") return Character(q2 * p, p, _params);
        if (name == "chi_b") return Character(q2 * p.inv(), p.inv(), _params);
        if (name == "chi_c") return Character(-p.inv(), p, _params);
        if (name == "chi_d1") return Character(q2, GaussianRational(1), _params);
        if (name == "chi_d2") return Character(q, q.inv(), _params);
        if (name == "chi_d3") return Character(p, p, _params);
        if (name == "chi_d4") return Character(GaussianRational(1), p, _params);
        if (name == "chi_d5") return Character(GaussianRational(-1), p, _params);
        if (name == "chi_f") return Character(p * _v, p, _params);
        if (name == "chi_g") return Character(q2 * _u, _u, _params);
        throw UnknownLabel("Catalog: unknown character " + name);
    }

    /// The ten listed characters plus the eight negated ones (-chi_c is
    /// W-conjugate to chi_c and -chi_g(u) is chi_g(-u), so neither appears).
    std::vector<std::pair<std::string, Character>> characters() const {
        std::vector<std::pair<std::string, Character>> out;
        for (const std::string& name : base_character_names()) out.push_back({name, character(name)});
        for (const std::string& name : {"-chi_a", "-chi_b", "-chi_d1", "-chi_d2", "-chi_d3",
                                        "-chi_d4", "-chi_d5", "-chi_f"})
            out.push_back({name, character(name)});
        return out;
    }

    /// Subalgebra index through which the decomposition lemma applies:
    /// chi(X^{alpha_i^}) = q_i^2.
    static int lemma_subalgebra(const std::string& chi_name) {
        std::string base = chi_name[0] == '-' ? chi_name.substr(1) : chi_name;
        if (base == "chi_b" || base == "chi_d1" || base == "chi_d2" || base == "chi_g") return 1;
        if (base == "chi_a" || base == "chi_c" || base == "chi_d3" || base == "chi_d4" ||
            base == "chi_d5" || base == "chi_f")
            return 2;
        throw UnknownLabel("Catalog: unknown character " + chi_name);
    }

    struct LemmaData {
        int subalgebra;
        OneDimRep rho1;
        OneDimRep rho2;
    };

    /// rho1 = (chi, q_i), rho2 = (s_i chi, -1/q_i) on H_i.
    LemmaData decomposition_data(const std::string& chi_name) const {
        Character chi = character(chi_name);
        int i = lemma_subalgebra(chi_name);
        const GaussianRational& qi = _params.qi(i);
        Character schi = chi.acted_by(WeylElem::s(i));
        return {i, OneDimRep(i, chi.x1(), chi.x2(), qi, _params),
                OneDimRep(i, schi.x1(), schi.x2(), -qi.inv(), _params)};
    }

    // ---- one-dimensional subalgebra representations (the rho tables) ----

    static const std::vector<std::string>& rho_labels() {
        static const std::vector<std::string> names = {
            "rho_1^a",  "rho_2^a",  "rho_1^b",  "rho_2^b",  "rho_1^c",  "rho_2^c",  "rho_1^d1",
            "rho_2^d1", "rho_1^d2", "rho_2^d2", "rho_1^d3", "rho_2^d3", "rho_1^d4", "rho_2^d4",
            "rho_1^d5", "rho_2^d5", "rho_1^f",  "rho_2^f",  "rho_1^g",  "rho_2^g"};
        return names;
    }

    OneDimRep build_rho(const std::string& label) const {
        bool negated = !label.empty() && label[0] == '-';
        std::string base = negated ? label.substr(1) : label;
        if (base.size() < 7 || base.substr(0, 4) != "rho_" || base[5] != '^')
            throw UnknownLabel("Catalog: unknown rho label " + label);
        int j = base[4] - '0';
        if (j != 1 && j != 2) throw UnknownLabel("Catalog: unknown rho label " + label);
        std::string chi_name = "chi_" + base.substr(6);
        LemmaData data = decomposition_data(chi_name);
        OneDimRep rho = j == 1 ? data.rho1 : data.rho2;
        return negated ? rho.negated() : rho;
    }

    // ---- explicit transcribed modules and induced modules ----

    std::vector<std::string> module_labels() const {
        std::vector<std::string> out;
        for (int k = 1; k <= 8; ++k) out.push_back("onedim_" + std::to_string(k));
        out.insert(out.end(), {"U_a^1", "U_a^2"});
        if (*_regime != RegimeKind::p2_eq_neg_q2) out.insert(out.end(), {"U_b^1", "U_b^2"});
        out.insert(out.end(), {"U_c^1", "U_c^2", "U_c^3", "U_c^4", "IndExplicit(rho_1^d5)"});
        for (const std::string& rho : rho_labels()) out.push_back("Ind(" + rho + ")");
        return out;
    }

    /// Build a catalog module by label. Induced labels accept a leading '-'
    /// inside Ind(...) for the lattice-sign twist, and "U_-a^1" style labels
    /// denote the twist of the corresponding entry.
    HModule build_module(const std::string& label) const {
        const GaussianRational &p = _params.p, &q = _params.q;
        GaussianRational one(1), q2 = q * q, p2 = p * p;
        if (label.rfind("onedim_", 0) == 0) {
            int k = std::stoi(label.substr(7));
            if (k < 1 || k > 8) throw UnknownLabel("Catalog: unknown label " + label);
            int col = (k - 1) % 4 + 1;  // columns 5..8 are the sign twists of 1..4
            GaussianRational t1 = (col == 1 || col == 3) ? q : -q.inv();
            GaussianRational t2 = (col == 1 || col == 4) ? p : -p.inv();
            GaussianRational x2 = (col == 2 || col == 3) ? p.inv() : p;
            if (k >= 5) x2 = -x2;
            GaussianRational x1 = t1 * t1 * x2;
            return one_dim_module(label, _params, x1, x2, t1, t2);
        }
        if (label.rfind("U_-", 0) == 0)
            return negate_module(build_module("U_" + label.substr(3))).with_label(label);
        if (label.rfind("Ind(", 0) == 0 && label.back() == ')')
            return induce(build_rho(label.substr(4, label.size() - 5)), label);
        if (label == "IndExplicit(rho_1^d5)") return explicit_ind_rho1_d5();
        if (label == "U_a^1" || label == "U_a^2") return build_u_a(label);
        if (label == "U_b^1" || label == "U_b^2") return build_u_b(label);
        if (label == "U_c^1" || label == "U_c^2" || label == "U_c^3" || label == "U_c^4")
            return build_u_c(label);
        (void)one;
        (void)q2;
        (void)p2;
        throw UnknownLabel("Catalog: unknown label " + label);
    }

    // ---- verification claims (irreducibility and calibration per regime) ----

    struct Claim {
        std::string label;
        bool irreducible;
        std::optional<bool> calibrated;  // checked only when irreducible
    };

    std::vector<Claim> claims() const {
        std::vector<Claim> out;
        for (int k = 1; k <= 8; ++k) out.push_back({"onedim_" + std::to_string(k), true, true});
        for (const char* lab : {"U_a^1", "U_a^2", "U_-a^1", "U_-a^2"}) out.push_back({lab, true, true});
        if (*_regime != RegimeKind::p2_eq_neg_q2) {
            bool calibrated = (*_regime == RegimeKind::generic);
            for (const char* lab : {"U_b^1", "U_b^2", "U_-b^1", "U_-b^2"})
                out.push_back({lab, true, calibrated});
        }
        bool uc34_irreducible = (*_regime != RegimeKind::p2_eq_neg_q2);
        out.push_back({"U_c^1", true, true});
        out.push_back({"U_c^2", true, true});
        out.push_back({"U_c^3", uc34_irreducible, true});
        out.push_back({"U_c^4", uc34_irreducible, true});
        for (int i : irreducible_d_indices()) {
            for (int j : {1, 2}) {
                std::string rho = "rho_" + std::to_string(j) + "^d" + std::to_string(i);
                out.push_back({"Ind(" + rho + ")", true, false});
                out.push_back({"Ind(-" + rho + ")", true, false});
            }
        }
        out.push_back({"IndExplicit(rho_1^d5)", true, false});
        for (const char* rho : {"rho_1^f", "rho_2^f", "-rho_1^f", "-rho_2^f", "rho_1^g", "rho_2^g"})
            out.push_back({"Ind(" + std::string(rho) + ")", true, true});
        return out;
    }

    /// d-families whose induced modules stay irreducible in the active
    /// regime; the remaining characters merge into other table rows.
    std::vector<int> irreducible_d_indices() const {
        switch (*_regime) {
            case RegimeKind::p_eq_q: return {1, 4, 5};
            case RegimeKind::p_eq_q2: return {2, 3, 5};
            default: return {1, 2, 3, 4, 5};
        }
    }

    /// Comparison set for factor identification: one entry per isomorphism
    /// class of non-principal irreducible in the active regime.
    IdentifySet identify_set(const WordSet* words) const {
        std::vector<IdentifySet::Entry> entries;
        for (int k = 1; k <= 8; ++k) {
            std::string lab = "onedim_" + std::to_string(k);
            entries.push_back({lab, build_module(lab)});
        }
        for (const char* lab : {"U_a^1", "U_a^2", "U_-a^1", "U_-a^2"})
            entries.push_back({lab, build_module(lab)});
        if (*_regime != RegimeKind::p2_eq_neg_q2)
            for (const char* lab : {"U_b^1", "U_b^2", "U_-b^1", "U_-b^2"})
                entries.push_back({lab, build_module(lab)});
        std::vector<std::string> uc = {"U_c^1", "U_c^2"};
        if (*_regime != RegimeKind::p2_eq_neg_q2) {
            uc.push_back("U_c^3");
            uc.push_back("U_c^4");
        }
        for (const std::string& lab : uc) entries.push_back({lab, build_module(lab)});
        for (int i : irreducible_d_indices())
            for (int j : {1, 2}) {
                std::string rho = "rho_" + std::to_string(j) + "^d" + std::to_string(i);
                entries.push_back({"Ind(" + rho + ")", build_module("Ind(" + rho + ")")});
                entries.push_back({"Ind(-" + rho + ")", build_module("Ind(-" + rho + ")")});
            }
        for (const char* rho : {"rho_1^f", "rho_2^f", "-rho_1^f", "-rho_2^f", "rho_1^g", "rho_2^g"})
            entries.push_back(
                {"Ind(" + std::string(rho) + ")", build_module("Ind(" + std::string(rho) + ")")});
        return IdentifySet(std::move(entries), words);
    }

private:
    Parameters _params;
    GaussianRational _v, _u;
    std::optional<RegimeKind> _regime;

    void check_v(const GaussianRational& v) const {
        const GaussianRational &p = _params.p, &q = _params.q;
        GaussianRational pinv2 = (p * p).inv(), q2 = q * q;
        const GaussianRational excluded[] = {pinv2,     -pinv2,        p.inv(),  -p.inv(),
                                             GaussianRational(1),      GaussianRational(-1),
                                             q2,        q2.inv(),      q2 * pinv2, q2.inv() * pinv2};
        for (const auto& e : excluded)
            if (v == e)
                throw ExcludedParameter("Catalog: v = " + v.to_string() + " is excluded");
    }

    void check_u(const GaussianRational& u) const {
        const GaussianRational &p = _params.p, &q = _params.q;
        GaussianRational qinv2 = (q * q).inv();
        const GaussianRational excluded[] = {p,
                                             -p,
                                             p.inv(),
                                             -p.inv(),
                                             GaussianRational(1),
                                             GaussianRational(-1),
                                             qinv2,
                                             -qinv2,
                                             q.inv(),
                                             -q.inv(),
                                             qinv2 * p,
                                             -qinv2 * p,
                                             qinv2 * p.inv(),
                                             -qinv2 * p.inv()};
        for (const auto& e : excluded)
            if (u == e)
                throw ExcludedParameter("Catalog: u = " + u.to_string() + " is excluded");
    }

    static Matrix mat(size_t n, std::vector<GaussianRational> entries) {
        return Matrix(n, n, std::move(entries));
    }

    HModule build_u_a(const std::string& label) const {
        const GaussianRational &p = _params.p, &q = _params.q;
        GaussianRational one(1), p2 = p * p, q2 = q * q, q4 = q2 * q2;
        GaussianRational d1 = p2 * q2 - one;   // p^2 q^2 - 1
        GaussianRational d2 = p2 * q4 - one;   // p^2 q^4 - 1
        if (d1.is_zero() || d2.is_zero())
            throw ExcludedParameter("Catalog: " + label + " undefined at these parameters");
        GaussianRational z(0);
        if (label == "U_a^1") {
            Matrix x1 = Matrix::diagonal({p, p, (p * q2).inv()});
            Matrix x2 = Matrix::diagonal({p * q2, (p * q2).inv(), p});
            Matrix t1 = mat(3, {-q.inv(), z, z,
                                z, p2 * q * (q2 - one) / d1, (p2 - one) * d2 / (d1 * d1),
                                z, one, -(q2 - one) / (q * d1)});
            Matrix t2 = mat(3, {p * (p2 - one) * q4 / d2, (q4 - one) * (p2 * p2 * q4 - one) / (d2 * d2), z,
                                one, -(p2 - one) / (p * d2), z,
                                z, z, p});
            return HModule(label, _params, t1, t2, x1, x2, Character(p, p * q2, _params));
        }
        Matrix x1 = Matrix::diagonal({p.inv(), p * q2, p.inv()});
        Matrix x2 = Matrix::diagonal({p * q2, p.inv(), (p * q2).inv()});
        Matrix t1 = mat(3, {-(q2 - one) / (q * d1), one, z,
                            (p2 - one) * d2 / (d1 * d1), p2 * q * (q2 - one) / d1, z,
                            z, z, q});
        // (0,0) carries the q^4 factor (as in U_a^1); it is the unique value
        // giving trace p - 1/p and determinant -1 on the T2 block.
        Matrix t2 = mat(3, {p * (p2 - one) * q4 / d2, z, (q4 - one) * (p2 * p2 * q4 - one) / (d2 * d2),
                            z, -p.inv(), z,
                            one, z, -(p2 - one) / (p * d2)});
        return HModule(label, _params, t1, t2, x1, x2, Character(p.inv(), p * q2, _params));
    }

    HModule build_u_b(const std::string& label) const {
        switch (*_regime) {
            case RegimeKind::generic: return build_u_b_generic(label);
            case RegimeKind::p_eq_q: return build_u_b_equal(label);
            case RegimeKind::p_eq_q2: return build_u_b_square(label);
            default:
                throw ExcludedParameter("Catalog: " + label + " undefined when p^2 = -q^2");
        }
    }

    HModule build_u_b_generic(const std::string& label) const {
        const GaussianRational &p = _params.p, &q = _params.q;
        GaussianRational one(1), z(0), p2 = p * p, q2 = q * q, q4 = q2 * q2;
        GaussianRational da = q2 - p2;  // q^2 - p^2
        GaussianRational db = p2 - q4;  // p^2 - q^4
        if (da.is_zero() || db.is_zero())
            throw ExcludedParameter("Catalog: " + label + " undefined at these parameters");
        Matrix t2 = mat(3, {z, z, z,
                            z, p * (p2 - one) / db, one,
                            z, -(p2 - q2) * (q4 - one) * (p2 + q2) / (db * db),
                            -(p2 - one) * q4 / (p * db)});
        if (label == "U_b^1") {
            t2.at(0, 0) = p;
            Matrix x1 = Matrix::diagonal({q2 * p.inv(), p, p});
            Matrix x2 = Matrix::diagonal({p, p * q2.inv(), q2 * p.inv()});
            Matrix t1 = mat(3, {q * (q2 - one) / da, z, -(p2 - one) * (q4 - p2) / (da * da),
                                z, q, z,
                                one, z, -p2 * (q2 - one) / (da * q)});
            return HModule(label, _params, t1, t2, x1, x2, Character(q2 * p.inv(), p, _params));
        }
        t2.at(0, 0) = -p.inv();
        Matrix x1 = Matrix::diagonal({p * q2.inv(), p.inv(), p.inv()});
        Matrix x2 = Matrix::diagonal({p.inv(), p * q2.inv(), q2 * p.inv()});
        // (0,0) carries the 1/q (as in U_a^1's partner entry); unique value
        // with trace q - 1/q and determinant -1 on the T1 block.
        Matrix t1 = mat(3, {-p2 * (q2 - one) / (q * da), one, z,
                            -(p2 - one) * (q4 - p2) / (da * da), (q2 - one) * q / da, z,
                            z, z, -q.inv()});
        return HModule(label, _params, t1, t2, x1, x2, Character(p * q2.inv(), p.inv(), _params));
    }

    HModule build_u_b_equal(const std::string& label) const {
        const GaussianRational& q = _params.q;
        GaussianRational one(1), z(0), q2 = q * q;
        if (label == "U_b^1") {
            Matrix x1 = mat(3, {q, z, z, z, q, q2, z, z, q});
            Matrix x2 = mat(3, {q.inv(), z, (one + 2 * q2) / q, z, q, -q2, z, z, q});
            Matrix t1 = mat(3, {q, (one + 2 * q2) / q2, z,
                                z, -q.inv(), z,
                                z, (q2 - one) / q2, q});
            Matrix t2 = mat(3, {-q.inv(), z, (one + q2) / (q * (q2 - one)),
                                one, q, -(q2 - one).inv(),
                                z, z, q});
            return HModule(label, _params, t1, t2, x1, x2, Character(q, q.inv(), _params));
        }
        Matrix x1 = mat(3, {q.inv(), z, -(q2 - one) / (q2 * q), z, q.inv(), z, z, z, q.inv()});
        Matrix x2 = mat(3, {q.inv(), z, (q2 - one) / (q2 * q),
                            z, q, (q2 - one) * (q2 + 2) / q,
                            z, z, q.inv()});
        Matrix t1 = mat(3, {q, z, z, q * (2 + q2), -q.inv(), z, -q, z, -q.inv()});
        Matrix t2 = mat(3, {-q.inv(), q.inv(), q, z, q, q * (q2 + one), z, z, -q.inv()});
        return HModule(label, _params, t1, t2, x1, x2, Character(q.inv(), q.inv(), _params));
    }

    HModule build_u_b_square(const std::string& label) const {
        const GaussianRational& q = _params.q;
        GaussianRational one(1), z(0), q2 = q * q, q4 = q2 * q2;
        if (label == "U_b^1") {
            Matrix x1 = Matrix::diagonal({one, q2, q2});
            Matrix x2 = mat(3, {q2, z, z, z, one, (q4 - one) / q2, z, z, one});
            Matrix t1 = mat(3, {-q.inv(), z, -(q2 + one) * (q2 + one) / q2,
                                one, q, (q2 + one) / q,
                                z, z, q});
            Matrix t2 = mat(3, {q2, z, z, z, z, one, z, one, (q4 - one) / q2});
            return HModule(label, _params, t1, t2, x1, x2, Character(one, q2, _params));
        }
        Matrix x1 = Matrix::diagonal({q2.inv(), q2.inv(), one});
        Matrix x2 = mat(3, {one, (q4 - one) / q2, z, z, one, z, z, z, q2.inv()});
        Matrix t1 = mat(3, {-q.inv(), (q2 + one) / q, (q2 + one) * (q2 + one) / q2,
                            z, -q.inv(), z,
                            z, one, q});
        Matrix t2 = mat(3, {z, one, z, one, (q4 - one) / q2, z, z, z, -q2.inv()});
        return HModule(label, _params, t1, t2, x1, x2, Character(q2.inv(), one, _params));
    }

    HModule build_u_c(const std::string& label) const {
        const GaussianRational &p = _params.p, &q = _params.q;
        GaussianRational one(1), z(0), p2 = p * p, q2 = q * q;
        Matrix t1_short = mat(2, {(q2 - one) / (2 * q), (one + q2) * (one + q2) / (4 * q2),
                                  one, (q2 - one) / (2 * q)});
        GaussianRational dc = p2 + one;
        Matrix t1_long = mat(2, {(q2 - one) / (dc * q), (p2 + q2) * (one + p2 * q2) / (dc * dc * q2),
                                 one, p2 * (q2 - one) / (dc * q)});
        if (label == "U_c^1")
            return HModule(label, _params, t1_short, Matrix::diagonal({p, p}),
                           Matrix::diagonal({p, -p}), Matrix::diagonal({-p, p}),
                           Character(p, -p, _params));
        if (label == "U_c^2")
            return HModule(label, _params, t1_short, Matrix::diagonal({-p.inv(), -p.inv()}),
                           Matrix::diagonal({-p.inv(), p.inv()}), Matrix::diagonal({p.inv(), -p.inv()}),
                           Character(-p.inv(), p.inv(), _params));
        if (label == "U_c^3")
            return HModule(label, _params, t1_long, Matrix::diagonal({p, -p.inv()}),
                           Matrix::diagonal({-p.inv(), p}), Matrix::diagonal({p, -p.inv()}),
                           Character(-p.inv(), p, _params));
        if (label == "U_c^4")
            return HModule(label, _params, t1_long, Matrix::diagonal({p, -p.inv()}),
                           Matrix::diagonal({p.inv(), -p}), Matrix::diagonal({-p, p.inv()}),
                           Character(p.inv(), -p, _params));
        (void)z;
        throw UnknownLabel("Catalog: unknown label " + label);
    }

    /// The printed 4x4 presentation of Ind(rho_1^d5); kept separate from the
    /// induced construction so the two can certify each other.
    HModule explicit_ind_rho1_d5() const {
        const GaussianRational &p = _params.p, &q = _params.q;
        GaussianRational one(1), z(0), p2 = p * p, q2 = q * q;
        GaussianRational op = one + p;        // 1 + p
        GaussianRational qm = q2 - one;       // q^2 - 1
        GaussianRational f = (p + q2) * (one + p * q2);
        Matrix t1 = mat(4, {p * qm / (op * q), -(p - one) * qm / (op * q), one, -p * qm * qm / (op * op * q2),
                            z, p * qm / (op * q), z, f / (op * op * q2),
                            f / (op * op * q2), (one - p + p2) * qm * qm / (op * op * q2),
                            qm / (op * q), (p - one) * qm * f / (op * op * op * q2 * q),
                            z, one, z, qm / (op * q)});
        Matrix t2 = mat(4, {z, one, z, z,
                            one, (p2 - one) / p, z, z,
                            z, z, p, z,
                            z, z, z, p});
        Matrix x1 = mat(4, {p, z, z, z,
                            z, p, z, z,
                            z, z, -one, -(p - one) * f / (p * op * q2),
                            z, z, z, -one});
        Matrix x2 = mat(4, {-one, -(p2 - one) / p, z, z,
                            z, -one, z, z,
                            z, z, p, z,
                            z, z, z, p});
        return HModule("IndExplicit(rho_1^d5)", _params, t1, t2, x1, x2,
                       Character(p, -one, _params));
    }
};

}  // namespace b2hecke

#endif  // B2HECKE_CATALOG_HPP
