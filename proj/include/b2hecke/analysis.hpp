#ifndef B2HECKE_ANALYSIS_HPP
#define B2HECKE_ANALYSIS_HPP

#include <b2hecke/modules.hpp>
#include <b2hecke/poly.hpp>

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace b2hecke {

// ---- Kato criterion ----

struct PositiveCoroot {
    WeightVector coroot;
    const char* root_label;  // the root-side name used in the tables
    char param;              // 'q' or 'p'
};

/// The four positive coroots with their attached parameters: q on the
/// W-orbit of alpha1^, p on the orbit of alpha2^.
inline const std::vector<PositiveCoroot>& positive_coroots() {
    static const std::vector<PositiveCoroot> data = {
        {{1, -1}, "alpha1", 'q'},
        {{0, 2}, "alpha2", 'p'},
        {{1, 1}, "alpha1+alpha2", 'q'},
        {{2, 0}, "2alpha1+alpha2", 'p'},
    };
    return data;
}

struct KatoResult {
    std::vector<std::string> p_chi;  // labels of coroots with chi value q_a^{+-2}
    bool irreducible = false;        // iff p_chi empty
};

/// M(chi) is irreducible exactly when no positive coroot evaluates to the
/// square or inverse square of its attached parameter.
inline KatoResult kato(const Character& chi) {
    KatoResult out;
    for (const PositiveCoroot& pc : positive_coroots()) {
        const GaussianRational& qa = pc.param == 'q' ? chi.params().q : chi.params().p;
        GaussianRational val = chi.eval(pc.coroot);
        GaussianRational sq = qa * qa;
        if (val == sq || val == sq.inv()) out.p_chi.push_back(pc.root_label);
    }
    out.irreducible = out.p_chi.empty();
    return out;
}

// ---- parameter regimes ----

enum class RegimeKind {
    generic,
    p_eq_q,
    p_eq_q2,
    p2_eq_neg_q2,
    // twist-transported kinds
    p_eq_neg_q,
    p_eq_inv_q,
    p_eq_neg_inv_q,
    p_eq_neg_q2,
    p_eq_inv_q2,
    p_eq_neg_inv_q2,
    p2_eq_neg_inv_q2,
};

inline const char* regime_name(RegimeKind k) {
    switch (k) {
        case RegimeKind::generic: return "generic";
        case RegimeKind::p_eq_q: return "p-eq-q";
        case RegimeKind::p_eq_q2: return "p-eq-q2";
        case RegimeKind::p2_eq_neg_q2: return "p2-eq-neg-q2";
        case RegimeKind::p_eq_neg_q: return "p-eq-neg-q";
        case RegimeKind::p_eq_inv_q: return "p-eq-inv-q";
        case RegimeKind::p_eq_neg_inv_q: return "p-eq-neg-inv-q";
        case RegimeKind::p_eq_neg_q2: return "p-eq-neg-q2";
        case RegimeKind::p_eq_inv_q2: return "p-eq-inv-q2";
        case RegimeKind::p_eq_neg_inv_q2: return "p-eq-neg-inv-q2";
        case RegimeKind::p2_eq_neg_inv_q2: return "p2-eq-neg-inv-q2";
    }
    return "?";
}

/// Expected value of p^a q^b under the intended relation: +1, -1, or "not a
/// unit" (nullopt). Every relation kind is generated by one monomial
/// identity; membership is a lattice condition with a sign.
inline std::optional<int> expected_unit(RegimeKind k, long long a, long long b) {
    auto sign_pow = [](long long e) { return (e % 2 == 0) ? 1 : -1; };
    switch (k) {
        case RegimeKind::generic:
            return (a == 0 && b == 0) ? std::optional<int>(1) : std::nullopt;
        case RegimeKind::p_eq_q:
            return (a + b == 0) ? std::optional<int>(1) : std::nullopt;
        case RegimeKind::p_eq_q2:
            return (2 * a + b == 0) ? std::optional<int>(1) : std::nullopt;
        case RegimeKind::p2_eq_neg_q2:
            return (a + b == 0 && a % 2 == 0) ? std::optional<int>(sign_pow(a / 2)) : std::nullopt;
        case RegimeKind::p_eq_neg_q:
            return (a + b == 0) ? std::optional<int>(sign_pow(a)) : std::nullopt;
        case RegimeKind::p_eq_inv_q:
            return (a == b) ? std::optional<int>(1) : std::nullopt;
        case RegimeKind::p_eq_neg_inv_q:
            return (a == b) ? std::optional<int>(sign_pow(a)) : std::nullopt;
        case RegimeKind::p_eq_neg_q2:
            return (2 * a + b == 0) ? std::optional<int>(sign_pow(a)) : std::nullopt;
        case RegimeKind::p_eq_inv_q2:
            return (b == 2 * a) ? std::optional<int>(1) : std::nullopt;
        case RegimeKind::p_eq_neg_inv_q2:
            return (b == 2 * a) ? std::optional<int>(sign_pow(a)) : std::nullopt;
        case RegimeKind::p2_eq_neg_inv_q2:
            return (a == b && a % 2 == 0) ? std::optional<int>(sign_pow(a / 2)) : std::nullopt;
    }
    return std::nullopt;
}

struct Regime {
    RegimeKind kind;
    std::vector<std::string> violations;
    bool accepted() const { return violations.empty(); }
};

/// Scans every relation p^a q^b = +-1 for |a|, |b| <= 4 and flags any that
/// is not a consequence of the intended relation (and any intended relation
/// that fails to hold).
inline Regime validate_regime(const Parameters& params, RegimeKind intended) {
    Regime out{intended, {}};
    for (long long a = -4; a <= 4; ++a) {
        for (long long b = -4; b <= 4; ++b) {
            GaussianRational val = params.p.pow(a) * params.q.pow(b);
            std::optional<int> actual;
            if (val == GaussianRational(1)) actual = 1;
            if (val == GaussianRational(-1)) actual = -1;
            std::optional<int> expected = expected_unit(intended, a, b);
            if (actual == expected) continue;
            std::string rel = "p^" + std::to_string(a) + " q^" + std::to_string(b);
            if (actual.has_value())
                out.violations.push_back("unexpected relation " + rel + " = " +
                                         (*actual == 1 ? "1" : "-1"));
            else
                out.violations.push_back("intended relation " + rel + " = " +
                                         (*expected == 1 ? "1" : "-1") + " fails");
        }
    }
    return out;
}

// ---- Burnside irreducibility ----

struct BurnsideResult {
    bool irreducible = false;
    size_t env_dim = 0;
};

/// Span of all words in {I, T1, T2, X1, X2, X1^-1, X2^-1} inside n x n
/// matrix space, by breadth-first closure. Absolute irreducibility holds
/// exactly when the words fill the full matrix algebra.
inline BurnsideResult burnside_irreducible(const HModule& m) {
    size_t n = m.dim();
    std::vector<Matrix> alphabet = m.word_alphabet();
    auto flatten = [n](const Matrix& a) {
        Vec v(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
        return v;
    };
    detail::SpanBuilder span(n * n);
    std::deque<Matrix> queue;
    Matrix id = Matrix::identity(n);
    span.add(flatten(id));
    queue.push_back(id);
    while (!queue.empty() && span.dim() < n * n) {
        Matrix cur = std::move(queue.front());
        queue.pop_front();
        for (const Matrix& g : alphabet) {
            Matrix next = cur * g;
            if (span.add(flatten(next))) queue.push_back(std::move(next));
        }
    }
    return {span.dim() == n * n, span.dim()};
}

// ---- intertwiners ----

/// Basis of Hom(m, n): all matrices F (dim n x dim m) with F g_m = g_n F
/// for the four generators. Solved as one exact linear system.
inline std::vector<Matrix> hom_space(const HModule& m, const HModule& n) {
    if (m.params() != n.params()) throw std::invalid_argument("hom_space: parameter mismatch");
    size_t dm = m.dim(), dn = n.dim();
    size_t unknowns = dm * dn;  // F[i][j], i < dn, j < dm
    std::vector<Matrix> gm = m.generator_matrices();
    std::vector<Matrix> gn = n.generator_matrices();
    Matrix sys(4 * unknowns, unknowns);
    size_t row = 0;
    for (size_t g = 0; g < 4; ++g) {
        // (F gm - gn F)[i][j] = sum_k F[i][k] gm[k][j] - gn[i][k] F[k][j]
        for (size_t i = 0; i < dn; ++i) {
            for (size_t j = 0; j < dm; ++j) {
                for (size_t k = 0; k < dm; ++k)
                    sys.at(row, i * dm + k) = sys.at(row, i * dm + k) + gm[g].at(k, j);
                for (size_t k = 0; k < dn; ++k)
                    sys.at(row, k * dm + j) = sys.at(row, k * dm + j) - gn[g].at(i, k);
                ++row;
            }
        }
    }
    Basis sols = kernel(sys);
    std::vector<Matrix> out;
    for (const Vec& v : sols) {
        Matrix f(dn, dm);
        for (size_t i = 0; i < dn; ++i)
            for (size_t j = 0; j < dm; ++j) f.at(i, j) = v[i * dm + j];
        out.push_back(std::move(f));
    }
    return out;
}

// ---- canonical word set and trace vectors ----

namespace detail {

/// Incremental echelon structure over sparse normal-form elements, keyed by
/// the largest term.
struct HeckeSpan {
    std::map<HeckeElement::TermKey, HeckeElement> rows;

    bool add(HeckeElement e) {
        while (!e.is_zero()) {
            auto lead = std::prev(e.terms().end());
            auto it = rows.find(lead->first);
            if (it == rows.end()) {
                HeckeElement normalized = lead->second.inv() * e;
                rows.emplace(lead->first, std::move(normalized));
                return true;
            }
            e = e - lead->second * it->second;
        }
        return false;
    }
};

}  // namespace detail

/// Canonical word set for Brauer-Nesbitt trace comparison: breadth-first
/// words of length <= 6 over T1, T2, X1, X2, X1^-1, X2^-1, keeping only
/// words that are linearly independent in the algebra itself (normal-form
/// span). Kept words form a prefix tree, so evaluating them in a module
/// costs one matrix product per word.
class WordSet {
public:
    static constexpr size_t kMaxLength = 6;

    struct Node {
        int parent;  // -1 for the empty word
        int letter;  // index into the six-letter alphabet
    };

    static const std::vector<std::string>& letters() {
        static const std::vector<std::string> names = {"T1", "T2", "X1", "X2", "X1inv", "X2inv"};
        return names;
    }

    static WordSet build(const Parameters& params) {
        WordSet ws;
        std::vector<HeckeElement> gens;
        for (const std::string& name : letters())
            gens.push_back(HeckeElement::generator(params, name));

        detail::HeckeSpan span;
        std::deque<std::pair<size_t, HeckeElement>> queue;
        HeckeElement one = HeckeElement::one(params);
        span.add(one);
        ws._nodes.push_back({-1, -1});
        queue.push_back({0, one});
        std::vector<size_t> lengths{0};
        while (!queue.empty()) {
            auto [node, elem] = std::move(queue.front());
            queue.pop_front();
            if (lengths[node] >= kMaxLength) continue;
            for (size_t g = 0; g < gens.size(); ++g) {
                HeckeElement next = elem * gens[g];
                if (!span.add(next)) continue;
                ws._nodes.push_back({static_cast<int>(node), static_cast<int>(g)});
                lengths.push_back(lengths[node] + 1);
                queue.push_back({ws._nodes.size() - 1, std::move(next)});
            }
        }
        return ws;
    }

    size_t size() const { return _nodes.size(); }

    std::string word(size_t k) const {
        if (_nodes[k].parent < 0) return "1";
        std::string prefix = word(_nodes[k].parent);
        if (prefix == "1") prefix.clear();
        if (!prefix.empty()) prefix += ".";
        return prefix + letters()[_nodes[k].letter];
    }

    /// Traces of every canonical word, in word order.
    std::vector<GaussianRational> trace_vector(const HModule& m) const {
        std::vector<Matrix> alphabet = m.word_alphabet();
        std::vector<Matrix> mats(_nodes.size());
        std::vector<GaussianRational> out(_nodes.size());
        for (size_t k = 0; k < _nodes.size(); ++k) {
            if (_nodes[k].parent < 0)
                mats[k] = Matrix::identity(m.dim());
            else
                mats[k] = mats[_nodes[k].parent] * alphabet[_nodes[k].letter];
            out[k] = mats[k].trace();
        }
        return out;
    }

private:
    std::vector<Node> _nodes;
};

// ---- submodule and quotient construction ----

/// Restriction of the action to an invariant subspace, in the given basis.
inline HModule restrict_module(const HModule& m, const Basis& basis, const std::string& label) {
    size_t n = m.dim(), d = basis.size();
    if (d == 0 || d >= n) throw std::invalid_argument("restrict_module: improper subspace");
    Matrix cols(n, d);
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < n; ++i) cols.at(i, j) = basis[j][i];
    auto solve_action = [&](const Matrix& g) {
        Matrix aug(n, d + d);
        Matrix gu = g * cols;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < d; ++j) aug.at(i, j) = cols.at(i, j);
            for (size_t j = 0; j < d; ++j) aug.at(i, d + j) = gu.at(i, j);
        }
        auto pivots = aug.rref();
        if (pivots.size() != d)
            throw std::logic_error("restrict_module: subspace not invariant or basis dependent");
        Matrix a(d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) a.at(i, j) = aug.at(i, d + j);
        return a;
    };
    return HModule(label, m.params(), solve_action(m.t1()), solve_action(m.t2()),
                   solve_action(m.x1()), solve_action(m.x2()), m.seed());
}

/// Quotient by an invariant subspace, on the coordinates complementary to
/// the echelon pivots of the subspace basis.
inline HModule quotient_module(const HModule& m, const Basis& basis, const std::string& label) {
    size_t n = m.dim(), d = basis.size();
    if (d == 0 || d >= n) throw std::invalid_argument("quotient_module: improper subspace");
    std::vector<bool> pivot(n, false);
    for (const Vec& v : basis) {
        size_t k = 0;
        while (k < n && v[k].is_zero()) ++k;
        if (k == n) throw std::invalid_argument("quotient_module: zero basis vector");
        pivot[k] = true;
    }
    std::vector<size_t> comp;
    for (size_t k = 0; k < n; ++k)
        if (!pivot[k]) comp.push_back(k);
    if (comp.size() != n - d) throw std::invalid_argument("quotient_module: basis not echelon");

    Matrix p(n, n);
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < n; ++i) p.at(i, j) = basis[j][i];
    for (size_t j = 0; j < comp.size(); ++j) p.at(comp[j], d + j) = GaussianRational(1);
    Matrix pinv = p.inverse();
    auto quotient_action = [&](const Matrix& g) {
        Matrix conj = pinv * g * p;
        for (size_t i = d; i < n; ++i)
            for (size_t j = 0; j < d; ++j)
                if (!conj.at(i, j).is_zero())
                    throw std::logic_error("quotient_module: subspace not invariant");
        Matrix q(n - d, n - d);
        for (size_t i = 0; i < n - d; ++i)
            for (size_t j = 0; j < n - d; ++j) q.at(i, j) = conj.at(d + i, d + j);
        return q;
    };
    return HModule(label, m.params(), quotient_action(m.t1()), quotient_action(m.t2()),
                   quotient_action(m.x1()), quotient_action(m.x2()), m.seed());
}

// ---- proper invariant subspace search ----

namespace detail {

struct WitnessSpin {
    size_t dim = 0;
    std::vector<std::vector<int>> words;  // generator-index sequences, first applied first
};

inline WitnessSpin spin_with_witnesses(const Vec& seed, const std::vector<Matrix>& ops) {
    size_t n = seed.size();
    SpanBuilder span(n);
    WitnessSpin out;
    std::deque<std::pair<Vec, std::vector<int>>> queue;
    if (span.add(seed)) {
        out.words.push_back({});
        queue.push_back({seed, {}});
    }
    while (!queue.empty() && span.dim() < n) {
        auto [v, word] = std::move(queue.front());
        queue.pop_front();
        for (size_t g = 0; g < ops.size(); ++g) {
            Vec next = ops[g].apply(v);
            if (!span.add(next)) continue;
            std::vector<int> next_word = word;
            next_word.push_back(static_cast<int>(g));
            out.words.push_back(next_word);
            queue.push_back({std::move(next), std::move(next_word)});
        }
    }
    out.dim = span.dim();
    return out;
}

inline Vec apply_word(const std::vector<int>& word, const Vec& v,
                      const std::vector<Matrix>& ops) {
    Vec cur = v;
    for (int g : word) cur = ops[static_cast<size_t>(g)].apply(cur);
    return cur;
}

inline Poly interpolate(const std::vector<std::pair<GaussianRational, GaussianRational>>& pts) {
    Poly acc;
    for (size_t k = 0; k < pts.size(); ++k) {
        Poly term = Poly::constant(pts[k].second);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (j == k) continue;
            GaussianRational scale = (pts[k].first - pts[j].first).inv();
            term = term * Poly({-pts[j].first * scale, scale});
        }
        acc = acc + term;
    }
    return acc;
}

/// Pencil search on a two-dimensional eigenspace span{v1, v2}: the t with
/// proper spin(v1 + t v2) are among the roots of det of a square spin
/// matrix built from witness words at a generic t, because those rows all
/// lie inside any invariant subspace containing v1 + t v2. Each candidate
/// root is then checked by an honest spin.
inline std::optional<Basis> pencil_search(const Vec& v1, const Vec& v2,
                                          const std::vector<Matrix>& ops) {
    size_t n = v1.size();
    std::vector<int> tried;
    WitnessSpin witness;
    GaussianRational tstar;
    for (long long t = 1;; ++t) {
        tstar = GaussianRational(t);
        Vec v(n);
        for (size_t k = 0; k < n; ++k) v[k] = v1[k] + tstar * v2[k];
        witness = spin_with_witnesses(v, ops);
        if (witness.dim < n) {
            Basis proper = span_closure({v}, ops);
            if (!proper.empty() && proper.size() < n) return proper;
        } else {
            break;
        }
        if (t > 3) return std::nullopt;  // generic spin keeps collapsing: give up to caller
    }
    // Rows w_j (v1 + t v2) are linear in t; interpolate det on n+1 points.
    std::vector<Vec> rows_a, rows_b;
    for (const auto& word : witness.words) {
        rows_a.push_back(apply_word(word, v1, ops));
        rows_b.push_back(apply_word(word, v2, ops));
    }
    std::vector<std::pair<GaussianRational, GaussianRational>> pts;
    for (long long k = 0; k <= static_cast<long long>(n); ++k) {
        GaussianRational t(k);
        Matrix s(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) s.at(i, j) = rows_a[i][j] + t * rows_b[i][j];
        pts.push_back({t, s.det()});
    }
    Poly f = interpolate(pts);
    if (f.is_zero()) return std::nullopt;  // cannot happen: f(tstar) != 0
    for (const GaussianRational& t0 : roots_in_qi(f)) {
        Vec v(n);
        for (size_t k = 0; k < n; ++k) v[k] = v1[k] + t0 * v2[k];
        Basis spin = span_closure({v}, ops);
        if (!spin.empty() && spin.size() < n) return spin;
    }
    return std::nullopt;
}

/// Search for a proper nonzero invariant subspace by spinning eigenspace
/// basis vectors, then the pencil on two-dimensional eigenspaces.
inline std::optional<Basis> invariant_from_eigenvectors(const HModule& m) {
    size_t n = m.dim();
    std::vector<Matrix> ops = m.generator_matrices();
    WeightDecomposition wd = weight_decomposition(m);
    for (const WeightEntry& entry : wd.entries) {
        for (const Vec& v : entry.eig_basis) {
            Basis spin = span_closure({v}, ops);
            if (!spin.empty() && spin.size() < n) return spin;
        }
    }
    for (const WeightEntry& entry : wd.entries) {
        if (entry.eig_dim != 2) continue;
        if (auto found = pencil_search(entry.eig_basis[0], entry.eig_basis[1], ops)) return found;
    }
    return std::nullopt;
}

inline Basis orthogonal_complement(const Basis& basis, size_t n) {
    Matrix rows(basis.size(), n);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < n; ++j) rows.at(i, j) = basis[i][j];
    return kernel(rows);
}

}  // namespace detail

/// A proper nonzero invariant subspace of a reducible module, or nullopt if
/// the search is exhausted (reported upstream as "undecided", never guessed).
/// Submodule side first, then the transposed action for quotient-side
/// structure.
inline std::optional<Basis> find_proper_invariant_subspace(const HModule& m) {
    if (auto direct = detail::invariant_from_eigenvectors(m)) return direct;
    HModule mt = transpose_module(m);
    if (auto dual = detail::invariant_from_eigenvectors(mt))
        return detail::orthogonal_complement(*dual, m.dim());
    return std::nullopt;
}

// ---- composition factors ----

/// Labeled comparison set for factor identification; weight and trace data
/// of entries are computed lazily and cached.
class IdentifySet {
public:
    struct Entry {
        std::string label;
        HModule mod;
    };

    IdentifySet(std::vector<Entry> entries, const WordSet* words)
        : _entries(std::move(entries)), _words(words), _cache(_entries.size()) {}

    const std::vector<Entry>& entries() const { return _entries; }

    /// Catalog label of an irreducible module: match by dimension, weight
    /// multiset, then trace vector. "unlisted" when nothing matches; more
    /// than one match is an error (trace vectors separate irreducibles).
    std::string identify(const HModule& m) const {
        std::string weights = weight_multiset_string(m);
        std::vector<GaussianRational> trace = _words->trace_vector(m);
        std::vector<std::string> matches;
        for (size_t k = 0; k < _entries.size(); ++k) {
            if (_entries[k].mod.dim() != m.dim()) continue;
            if (entry_weights(k) != weights) continue;
            if (entry_trace(k) != trace) continue;
            matches.push_back(_entries[k].label);
        }
        if (matches.empty()) return "unlisted";
        if (matches.size() > 1) {
            std::string joined;
            for (const auto& s : matches) joined += (joined.empty() ? "" : ", ") + s;
            throw std::runtime_error("IdentifySet: ambiguous match: " + joined);
        }
        return matches.front();
    }

    static std::string weight_multiset_string(const HModule& m) {
        std::map<std::pair<std::string, std::string>, size_t> mult;
        for (const WeightEntry& e : weight_decomposition(m).entries)
            mult[{e.weight.x1().to_string(), e.weight.x2().to_string()}] += e.gen_dim;
        std::string out;
        for (const auto& [w, c] : mult)
            out += "(" + w.first + "," + w.second + ")x" + std::to_string(c) + ";";
        return out;
    }

private:
    struct Cache {
        std::optional<std::string> weights;
        std::optional<std::vector<GaussianRational>> trace;
    };

    std::vector<Entry> _entries;
    const WordSet* _words;
    mutable std::vector<Cache> _cache;

    const std::string& entry_weights(size_t k) const {
        if (!_cache[k].weights) _cache[k].weights = weight_multiset_string(_entries[k].mod);
        return *_cache[k].weights;
    }
    const std::vector<GaussianRational>& entry_trace(size_t k) const {
        if (!_cache[k].trace) _cache[k].trace = _words->trace_vector(_entries[k].mod);
        return *_cache[k].trace;
    }
};

struct Factor {
    HModule module;
    std::string label;
    bool calibrated = false;
    std::vector<std::pair<Character, size_t>> weights;  // (weight, generalized dim)
};

struct FactorReport {
    std::vector<Factor> factors;
    std::vector<GaussianRational> trace_vec;  // of the analyzed module
    bool certified = false;
    bool undecided = false;

    size_t total_dim() const {
        size_t s = 0;
        for (const auto& f : factors) s += f.module.dim();
        return s;
    }

    std::vector<size_t> dims() const {
        std::vector<size_t> out;
        for (const auto& f : factors) out.push_back(f.module.dim());
        return out;
    }
};

/// Full composition-factor extraction: Burnside certifies irreducibility,
/// eigenvector spins and the pencil search produce proper invariant
/// subspaces, and the result is certified by Brauer-Nesbitt trace equality
/// against the factor multiset. An exhausted search marks the report
/// undecided rather than guessing.
inline FactorReport composition_factors(const HModule& m, const WordSet& words,
                                        const IdentifySet* identify = nullptr) {
    FactorReport report;
    report.trace_vec = words.trace_vector(m);

    std::vector<HModule> pending{m};
    std::vector<HModule> irreducibles;
    while (!pending.empty()) {
        HModule cur = std::move(pending.back());
        pending.pop_back();
        if (burnside_irreducible(cur).irreducible) {
            irreducibles.push_back(std::move(cur));
            continue;
        }
        std::optional<Basis> inv = find_proper_invariant_subspace(cur);
        if (!inv.has_value()) {
            report.undecided = true;
            continue;
        }
        pending.push_back(restrict_module(cur, *inv, cur.label() + ".sub"));
        pending.push_back(quotient_module(cur, *inv, cur.label() + ".quo"));
    }

    for (HModule& f : irreducibles) {
        Factor fac{std::move(f), "unlisted", false, {}};
        WeightDecomposition wd = weight_decomposition(fac.module);
        fac.calibrated = wd.calibrated();
        for (const WeightEntry& e : wd.entries) fac.weights.push_back({e.weight, e.gen_dim});
        if (identify) fac.label = identify->identify(fac.module);
        report.factors.push_back(std::move(fac));
    }
    std::sort(report.factors.begin(), report.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.module.dim() != b.module.dim()) return a.module.dim() < b.module.dim();
        if (a.label != b.label) return a.label < b.label;
        return IdentifySet::weight_multiset_string(a.module) <
               IdentifySet::weight_multiset_string(b.module);
    });

    if (!report.undecided && report.total_dim() == m.dim()) {
        std::vector<GaussianRational> sum(report.trace_vec.size(), GaussianRational(0));
        for (const Factor& f : report.factors) {
            std::vector<GaussianRational> tv = words.trace_vector(f.module);
            for (size_t k = 0; k < sum.size(); ++k) sum[k] = sum[k] + tv[k];
        }
        report.certified = (sum == report.trace_vec);
    }
    return report;
}

}  // namespace b2hecke

#endif  // B2HECKE_ANALYSIS_HPP
