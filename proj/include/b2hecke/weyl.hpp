#ifndef B2HECKE_WEYL_HPP
#define B2HECKE_WEYL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace b2hecke {

/// Integral coweight a*eps1 + b*eps2.
struct WeightVector {
    long long a = 0;
    long long b = 0;

    friend WeightVector operator+(WeightVector l, WeightVector r) { return {l.a + r.a, l.b + r.b}; }
    friend WeightVector operator-(WeightVector l, WeightVector r) { return {l.a - r.a, l.b - r.b}; }
    friend WeightVector operator*(long long c, WeightVector v) { return {c * v.a, c * v.b}; }
    friend bool operator==(WeightVector l, WeightVector r) { return l.a == r.a && l.b == r.b; }
    friend bool operator!=(WeightVector l, WeightVector r) { return !(l == r); }
    friend bool operator<(WeightVector l, WeightVector r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
};

inline constexpr WeightVector kEps1{1, 0};
inline constexpr WeightVector kEps2{0, 1};
// Simple coroots: alpha1^ = eps1 - eps2, alpha2^ = 2*eps2.
inline constexpr WeightVector kAlpha1Coroot{1, -1};
inline constexpr WeightVector kAlpha2Coroot{0, 2};

namespace detail {

struct WeylTables {
    // Canonical reduced words in length-lex order.
    std::array<std::string, 8> words = {"e", "1", "2", "12", "21", "121", "212", "1212"};
    // act[w] = 2x2 integer matrix (row major) of w on (a, b).
    std::array<std::array<int, 4>, 8> act{};
    std::array<std::array<uint8_t, 8>, 8> mult{};
    std::array<uint8_t, 8> inverse{};
    std::array<uint8_t, 8> length{};

    WeylTables() {
        auto compose = [](const std::array<int, 4>& l, const std::array<int, 4>& r) {
            return std::array<int, 4>{l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
                                      l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
        };
        const std::array<int, 4> s1{0, 1, 1, 0};   // swap coordinates
        const std::array<int, 4> s2{1, 0, 0, -1};  // negate second
        for (size_t w = 0; w < 8; ++w) {
            std::array<int, 4> m{1, 0, 0, 1};
            if (words[w] != "e") {
                for (char c : words[w]) m = compose(m, c == '1' ? s1 : s2);
            }
            act[w] = m;
            length[w] = words[w] == "e" ? 0 : static_cast<uint8_t>(words[w].size());
        }
        auto find = [this](const std::array<int, 4>& m) -> uint8_t {
            for (uint8_t k = 0; k < 8; ++k)
                if (act[k] == m) return k;
            throw std::logic_error("WeylTables: element not found");
        };
        for (uint8_t i = 0; i < 8; ++i) {
            for (uint8_t j = 0; j < 8; ++j) mult[i][j] = find(compose(act[i], act[j]));
            const std::array<int, 4> id{1, 0, 0, 1};
            for (uint8_t j = 0; j < 8; ++j)
                if (mult[i][j] == find(id)) inverse[i] = j;
        }
    }
};

inline const WeylTables& weyl_tables() {
    static const WeylTables tables;
    return tables;
}

}  // namespace detail

/// Element of the Weyl group W(B2) (order 8), stored as an index into the
/// fixed list of canonical reduced words over {1, 2}.
class WeylElem {
public:
    WeylElem() : _idx(0) {}

    static WeylElem identity() { return WeylElem(0); }
    static WeylElem s(int i) {
        if (i != 1 && i != 2) throw std::invalid_argument("WeylElem: simple index");
        return WeylElem(static_cast<uint8_t>(i));
    }

    static WeylElem from_word(const std::string& word) {
        WeylElem w;
        if (word == "e" || word.empty()) return w;
        for (char c : word) {
            if (c != '1' && c != '2') throw std::invalid_argument("WeylElem: bad word");
            w = w * s(c - '0');
        }
        return w;
    }

    static const std::array<WeylElem, 8>& all() {
        static const std::array<WeylElem, 8> elems = [] {
            std::array<WeylElem, 8> a{};
            for (uint8_t k = 0; k < 8; ++k) a[k] = WeylElem(k);
            return a;
        }();
        return elems;
    }

    uint8_t index() const { return _idx; }
    size_t length() const { return detail::weyl_tables().length[_idx]; }
    const std::string& word() const { return detail::weyl_tables().words[_idx]; }
    bool is_identity() const { return _idx == 0; }

    friend WeylElem operator*(WeylElem l, WeylElem r) {
        return WeylElem(detail::weyl_tables().mult[l._idx][r._idx]);
    }

    WeylElem inverse() const { return WeylElem(detail::weyl_tables().inverse[_idx]); }

    WeightVector act(WeightVector v) const {
        const auto& m = detail::weyl_tables().act[_idx];
        return {m[0] * v.a + m[1] * v.b, m[2] * v.a + m[3] * v.b};
    }

    friend bool operator==(WeylElem l, WeylElem r) { return l._idx == r._idx; }
    friend bool operator!=(WeylElem l, WeylElem r) { return l._idx != r._idx; }
    friend bool operator<(WeylElem l, WeylElem r) { return l._idx < r._idx; }

private:
    explicit WeylElem(uint8_t idx) : _idx(idx) {}
    uint8_t _idx;
};

/// Minimal-length representatives of W / {e, s_i}, in length-lex order.
/// Every w factors uniquely as rep * u with u in {e, s_i} and lengths adding.
inline const std::vector<WeylElem>& min_coset_reps(int i) {
    static const std::vector<WeylElem> reps1 = [] {
        std::vector<WeylElem> out;
        for (WeylElem w : WeylElem::all())
            if ((w * WeylElem::s(1)).length() > w.length()) out.push_back(w);
        return out;
    }();
    static const std::vector<WeylElem> reps2 = [] {
        std::vector<WeylElem> out;
        for (WeylElem w : WeylElem::all())
            if ((w * WeylElem::s(2)).length() > w.length()) out.push_back(w);
        return out;
    }();
    if (i == 1) return reps1;
    if (i == 2) return reps2;
    throw std::invalid_argument("min_coset_reps: simple index");
}

/// Factorization w = rep * u with rep in min_coset_reps(i), u in {e, s_i}.
/// Returns (rep, has_si_remainder).
inline std::pair<WeylElem, bool> coset_decompose(WeylElem w, int i) {
    WeylElem si = WeylElem::s(i);
    WeylElem shorter = w * si;
    if (shorter.length() > w.length()) return {w, false};
    return {shorter, true};
}

}  // namespace b2hecke

#endif  // B2HECKE_WEYL_HPP
