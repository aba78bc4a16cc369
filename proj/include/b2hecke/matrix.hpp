#ifndef B2HECKE_MATRIX_HPP
#define B2HECKE_MATRIX_HPP

#include <b2hecke/gaussian_rational.hpp>

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace b2hecke {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

using Vec = std::vector<GaussianRational>;

/// Dense matrix over Q(i), row-major. All operations are exact and pure.
class Matrix {
public:
    Matrix() : _rows(0), _cols(0) {}

    Matrix(size_t rows, size_t cols) : _rows(rows), _cols(cols), _entries(rows * cols) {}

    Matrix(size_t rows, size_t cols, std::vector<GaussianRational> entries)
        : _rows(rows), _cols(cols), _entries(std::move(entries)) {
        if (_entries.size() != rows * cols) throw DimensionMismatch("Matrix: entry count");
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t k = 0; k < n; ++k) m.at(k, k) = GaussianRational(1);
        return m;
    }

    static Matrix diagonal(const Vec& d) {
        Matrix m(d.size(), d.size());
        for (size_t k = 0; k < d.size(); ++k) m.at(k, k) = d[k];
        return m;
    }

    size_t rows() const { return _rows; }
    size_t cols() const { return _cols; }

    GaussianRational& at(size_t i, size_t j) { return _entries[i * _cols + j]; }
    const GaussianRational& at(size_t i, size_t j) const { return _entries[i * _cols + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r(a._rows, a._cols);
        for (size_t k = 0; k < a._entries.size(); ++k) r._entries[k] = a._entries[k] + b._entries[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r(a._rows, a._cols);
        for (size_t k = 0; k < a._entries.size(); ++k) r._entries[k] = a._entries[k] - b._entries[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a._cols != b._rows) throw DimensionMismatch("Matrix: product shapes");
        Matrix r(a._rows, b._cols);
        for (size_t i = 0; i < a._rows; ++i)
            for (size_t k = 0; k < a._cols; ++k) {
                const GaussianRational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b._cols; ++j) {
                    const GaussianRational& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + aik * bkj;
                }
            }
        return r;
    }

    friend Matrix operator*(const GaussianRational& c, const Matrix& a) {
        Matrix r(a._rows, a._cols);
        for (size_t k = 0; k < a._entries.size(); ++k) r._entries[k] = c * a._entries[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a) { return GaussianRational(-1) * a; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a._rows == b._rows && a._cols == b._cols && a._entries == b._entries;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& e : _entries)
            if (!e.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix r(_cols, _rows);
        for (size_t i = 0; i < _rows; ++i)
            for (size_t j = 0; j < _cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix pow(size_t e) const {
        require_square();
        Matrix acc = identity(_rows);
        Matrix base = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    GaussianRational trace() const {
        require_square();
        GaussianRational t;
        for (size_t k = 0; k < _rows; ++k) t = t + at(k, k);
        return t;
    }

    Vec row(size_t i) const {
        Vec v(_cols);
        for (size_t j = 0; j < _cols; ++j) v[j] = at(i, j);
        return v;
    }

    Vec col(size_t j) const {
        Vec v(_rows);
        for (size_t i = 0; i < _rows; ++i) v[i] = at(i, j);
        return v;
    }

    /// Apply to a column vector.
    Vec apply(const Vec& v) const {
        if (v.size() != _cols) throw DimensionMismatch("Matrix: apply shape");
        Vec r(_rows);
        for (size_t i = 0; i < _rows; ++i)
            for (size_t j = 0; j < _cols; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < _cols && r < _rows; ++c) {
            size_t sel = r;
            while (sel < _rows && at(sel, c).is_zero()) ++sel;
            if (sel == _rows) continue;
            if (sel != r)
                for (size_t j = 0; j < _cols; ++j) std::swap(at(sel, j), at(r, j));
            GaussianRational inv = at(r, c).inv();
            for (size_t j = c; j < _cols; ++j) at(r, j) = inv * at(r, j);
            for (size_t i = 0; i < _rows; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                GaussianRational f = at(i, c);
                for (size_t j = c; j < _cols; ++j) at(i, j) = at(i, j) - f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix tmp = *this;
        return tmp.rref().size();
    }

    GaussianRational det() const {
        require_square();
        Matrix tmp = *this;
        GaussianRational d(1);
        for (size_t c = 0; c < _cols; ++c) {
            size_t sel = c;
            while (sel < _rows && tmp.at(sel, c).is_zero()) ++sel;
            if (sel == _rows) return GaussianRational(0);
            if (sel != c) {
                for (size_t j = 0; j < _cols; ++j) std::swap(tmp.at(sel, j), tmp.at(c, j));
                d = -d;
            }
            d = d * tmp.at(c, c);
            GaussianRational inv = tmp.at(c, c).inv();
            for (size_t i = c + 1; i < _rows; ++i) {
                if (tmp.at(i, c).is_zero()) continue;
                GaussianRational f = inv * tmp.at(i, c);
                for (size_t j = c; j < _cols; ++j) tmp.at(i, j) = tmp.at(i, j) - f * tmp.at(c, j);
            }
        }
        return d;
    }

    Matrix inverse() const {
        require_square();
        size_t n = _rows;
        Matrix aug(n, 2 * n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, n + i) = GaussianRational(1);
        }
        auto pivots = aug.rref();
        if (pivots.size() != n || pivots.back() != n - 1) throw SingularMatrix("Matrix: singular");
        Matrix r(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
        return r;
    }

    /// Stack another matrix (with the same column count) below this one.
    Matrix stacked(const Matrix& below) const {
        if (_cols != below._cols) throw DimensionMismatch("Matrix: stack shapes");
        Matrix r(_rows + below._rows, _cols);
        for (size_t i = 0; i < _rows; ++i)
            for (size_t j = 0; j < _cols; ++j) r.at(i, j) = at(i, j);
        for (size_t i = 0; i < below._rows; ++i)
            for (size_t j = 0; j < _cols; ++j) r.at(_rows + i, j) = below.at(i, j);
        return r;
    }

    /// "r00,r01;r10,r11" with entries in the exact-field serialization.
    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < _rows; ++i) {
            if (i) out += ";";
            for (size_t j = 0; j < _cols; ++j) {
                if (j) out += ",";
                out += at(i, j).to_string();
            }
        }
        return out;
    }

    static Matrix parse(const std::string& text);

private:
    size_t _rows, _cols;
    std::vector<GaussianRational> _entries;

    void require_square() const {
        if (_rows != _cols) throw DimensionMismatch("Matrix: square required");
    }
    void require_same_shape(const Matrix& o) const {
        if (_rows != o._rows || _cols != o._cols) throw DimensionMismatch("Matrix: shape mismatch");
    }
};

inline Matrix Matrix::parse(const std::string& text) {
    std::vector<GaussianRational> entries;
    size_t cols = 0, rows = 0;
    size_t start = 0;
    size_t row_entries = 0;
    auto flush_entry = [&](size_t end) {
        entries.push_back(GaussianRational::parse(text.substr(start, end - start)));
        ++row_entries;
        start = end + 1;
    };
    for (size_t k = 0; k <= text.size(); ++k) {
        if (k == text.size() || text[k] == ';') {
            if (k > start || row_entries > 0 || k < text.size()) flush_entry(k);
            if (cols == 0)
                cols = row_entries;
            else if (row_entries != cols)
                throw std::invalid_argument("Matrix: ragged rows");
            ++rows;
            row_entries = 0;
        } else if (text[k] == ',') {
            flush_entry(k);
        }
    }
    return Matrix(rows, cols, std::move(entries));
}

// ---- subspace utilities ----
//
// A basis is a list of vectors of one common length. The canonical form of a
// subspace is the reduced row echelon basis (pivots 1, zero rows dropped,
// rows ordered by pivot column), which makes subspace equality a plain
// basis comparison.

using Basis = std::vector<Vec>;

inline Basis echelon_basis(const Basis& vectors, size_t length) {
    Matrix m(vectors.size(), length);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != length) throw DimensionMismatch("echelon_basis: vector length");
        for (size_t j = 0; j < length; ++j) m.at(i, j) = vectors[i][j];
    }
    auto pivots = m.rref();
    Basis out;
    for (size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
    return out;
}

/// Basis of the right null space, canonicalized; empty iff full column rank.
inline Basis kernel(const Matrix& a) {
    Matrix m = a;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    Basis out;
    for (size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(a.cols());
        v[c] = GaussianRational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, c);
        out.push_back(std::move(v));
    }
    return echelon_basis(out, a.cols());
}

/// Basis of ker(a^power).
inline Basis generalized_kernel(const Matrix& a, size_t power) {
    if (a.rows() != a.cols()) throw DimensionMismatch("generalized_kernel: square required");
    if (power == 0) throw std::invalid_argument("generalized_kernel: power >= 1");
    return kernel(a.pow(power));
}

namespace detail {

/// Incremental echelon structure for span computations.
struct SpanBuilder {
    size_t length;
    // rows kept in echelon (not fully reduced) form, sorted by pivot
    std::vector<std::pair<size_t, Vec>> rows;

    explicit SpanBuilder(size_t len) : length(len) {}

    size_t dim() const { return rows.size(); }

    // Reduces v against the kept rows; if a nonzero remainder survives it is
    // normalized, inserted, and true is returned.
    bool add(Vec v) {
        for (const auto& [piv, row] : rows) {
            if (v[piv].is_zero()) continue;
            GaussianRational f = v[piv];
            for (size_t j = piv; j < length; ++j)
                if (!row[j].is_zero()) v[j] = v[j] - f * row[j];
        }
        size_t piv = 0;
        while (piv < length && v[piv].is_zero()) ++piv;
        if (piv == length) return false;
        GaussianRational inv = v[piv].inv();
        for (size_t j = piv; j < length; ++j) v[j] = inv * v[j];
        auto it = rows.begin();
        while (it != rows.end() && it->first < piv) ++it;
        rows.insert(it, {piv, std::move(v)});
        return true;
    }

    bool contains(Vec v) {
        for (const auto& [piv, row] : rows) {
            if (v[piv].is_zero()) continue;
            GaussianRational f = v[piv];
            for (size_t j = piv; j < length; ++j)
                if (!row[j].is_zero()) v[j] = v[j] - f * row[j];
        }
        for (const auto& e : v)
            if (!e.is_zero()) return false;
        return true;
    }

    Basis basis() const {
        Basis b;
        for (const auto& [piv, row] : rows) b.push_back(row);
        return b;
    }
};

}  // namespace detail

/// Smallest subspace containing the seed vectors and stable under every
/// operator, as a canonical echelonized basis.
inline Basis span_closure(const Basis& seed, const std::vector<Matrix>& operators) {
    if (seed.empty()) return {};
    size_t n = seed.front().size();
    for (const auto& op : operators)
        if (op.rows() != n || op.cols() != n) throw DimensionMismatch("span_closure: operator shape");
    detail::SpanBuilder span(n);
    std::deque<Vec> queue;
    for (const auto& v : seed)
        if (span.add(v)) queue.push_back(v);
    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        for (const auto& op : operators) {
            Vec w = op.apply(v);
            if (span.add(w)) queue.push_back(std::move(w));
        }
        if (span.dim() == n) break;
    }
    return echelon_basis(span.basis(), n);
}

/// Intersection of two subspaces given by bases (vectors of length n).
inline Basis subspace_intersection(const Basis& a, const Basis& b, size_t n) {
    if (a.empty() || b.empty()) return {};
    // Solve u*alpha = v*beta: kernel of [A | -B] columns.
    Matrix m(n, a.size() + b.size());
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < n; ++i) m.at(i, j) = a[j][i];
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t i = 0; i < n; ++i) m.at(i, a.size() + j) = -b[j][i];
    Basis relations = kernel(m);
    Basis out;
    for (const auto& rel : relations) {
        Vec v(n);
        for (size_t j = 0; j < a.size(); ++j)
            for (size_t i = 0; i < n; ++i) v[i] = v[i] + rel[j] * a[j][i];
        out.push_back(std::move(v));
    }
    return echelon_basis(out, n);
}

}  // namespace b2hecke

#endif  // B2HECKE_MATRIX_HPP
