#ifndef B2HECKE_GAUSSIAN_RATIONAL_HPP
#define B2HECKE_GAUSSIAN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace b2hecke {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of Q(i), stored as two reduced fractions re + im*i.
///
/// Canonical form: denominators are strictly positive, each fraction is in
/// lowest terms, and zero is 0/1 + 0/1*i. Two values are equal exactly when
/// their four integer fields are equal. Values are immutable in spirit:
/// every operation returns a fresh canonical value.
class GaussianRational {
public:
    GaussianRational() : _re_num(0), _re_den(1), _im_num(0), _im_den(1) {}

    GaussianRational(long long n) : GaussianRational(BigInt(n), BigInt(1), BigInt(0), BigInt(1)) {}

    GaussianRational(const BigInt& num, const BigInt& den)
        : GaussianRational(num, den, BigInt(0), BigInt(1)) {}

    GaussianRational(BigInt re_num, BigInt re_den, BigInt im_num, BigInt im_den)
        : _re_num(std::move(re_num)),
          _re_den(std::move(re_den)),
          _im_num(std::move(im_num)),
          _im_den(std::move(im_den)) {
        if (_re_den == 0 || _im_den == 0) throw std::domain_error("GaussianRational: zero denominator");
        reduce(_re_num, _re_den);
        reduce(_im_num, _im_den);
    }

    static GaussianRational i() { return GaussianRational(0, 1, 1, 1); }

    static GaussianRational fraction(long long num, long long den) {
        return GaussianRational(BigInt(num), BigInt(den));
    }

    const BigInt& re_num() const { return _re_num; }
    const BigInt& re_den() const { return _re_den; }
    const BigInt& im_num() const { return _im_num; }
    const BigInt& im_den() const { return _im_den; }

    bool is_zero() const { return _re_num == 0 && _im_num == 0; }
    bool is_one() const { return _re_num == 1 && _re_den == 1 && _im_num == 0; }
    bool is_real() const { return _im_num == 0; }

    /// The only roots of unity in Q(i) are 1, -1, i and -i.
    bool is_root_of_unity() const {
        if (_re_den != 1 || _im_den != 1) return false;
        if (_im_num == 0) return _re_num == 1 || _re_num == -1;
        if (_re_num == 0) return _im_num == 1 || _im_num == -1;
        return false;
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a._re_num * b._re_den + b._re_num * a._re_den, a._re_den * b._re_den,
                                a._im_num * b._im_den + b._im_num * a._im_den, a._im_den * b._im_den);
    }

    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a._re_num * b._re_den - b._re_num * a._re_den, a._re_den * b._re_den,
                                a._im_num * b._im_den - b._im_num * a._im_den, a._im_den * b._im_den);
    }

    friend GaussianRational operator-(const GaussianRational& a) {
        GaussianRational r = a;
        r._re_num = -r._re_num;
        r._im_num = -r._im_num;
        return r;
    }

    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        // (x + yi)(u + vi) = (xu - yv) + (xv + yu)i, componentwise on fractions
        BigInt re_n = a._re_num * b._re_num * a._im_den * b._im_den -
                      a._im_num * b._im_num * a._re_den * b._re_den;
        BigInt im_n = a._re_num * b._im_num * a._im_den * b._re_den +
                      a._im_num * b._re_num * a._re_den * b._im_den;
        BigInt d = a._re_den * b._re_den * a._im_den * b._im_den;
        return GaussianRational(re_n, d, im_n, d);
    }

    GaussianRational conj() const {
        GaussianRational r = *this;
        r._im_num = -r._im_num;
        return r;
    }

    /// re^2 + im^2 as a (real) value.
    GaussianRational norm() const {
        return GaussianRational(_re_num * _re_num * _im_den * _im_den + _im_num * _im_num * _re_den * _re_den,
                                _re_den * _re_den * _im_den * _im_den);
    }

    GaussianRational inv() const {
        if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational n = norm();  // real, nonzero
        GaussianRational c = conj();
        // c / n with n = nn/nd real: multiply componentwise by nd/nn
        return GaussianRational(c._re_num * n._re_den, c._re_den * n._re_num,
                                c._im_num * n._re_den, c._im_den * n._re_num);
    }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }

    GaussianRational pow(long long e) const {
        if (e == 0) return GaussianRational(1);
        GaussianRational base = e < 0 ? inv() : *this;
        unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                     : static_cast<unsigned long long>(e);
        GaussianRational acc(1);
        while (n > 0) {
            if (n & 1ULL) acc = acc * base;
            base = base * base;
            n >>= 1ULL;
        }
        return acc;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a._re_num == b._re_num && a._re_den == b._re_den && a._im_num == b._im_num &&
               a._im_den == b._im_den;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Lexicographic order on (re, im). Purely for deterministic containers
    /// and sorted output; carries no algebraic meaning on complex values.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        BigInt lre = a._re_num * b._re_den, rre = b._re_num * a._re_den;
        if (lre != rre) return lre < rre;
        return a._im_num * b._im_den < b._im_num * a._im_den;
    }

    /// "a/b" for rationals, "a/b+c/d*i" for complex values; unit denominators
    /// omitted, signs attached to numerators, unit imaginary part printed "i".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        if (_re_num != 0) out += frac_str(_re_num, _re_den);
        if (_im_num != 0) {
            if (_im_num > 0 && !out.empty()) out += "+";
            if (_im_num == 1 && _im_den == 1)
                out += "i";
            else if (_im_num == -1 && _im_den == 1)
                out += "-i";
            else
                out += frac_str(_im_num, _im_den) + "*i";
        }
        return out;
    }

    /// Inverse of to_string; also accepts omitted unit denominators and an
    /// omitted '*' before i ("3i" = "3/1*i").
    static GaussianRational parse(std::string_view text);

private:
    BigInt _re_num, _re_den, _im_num, _im_den;

    static void reduce(BigInt& num, BigInt& den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            den = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static std::string frac_str(const BigInt& num, const BigInt& den) {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }
};

inline GaussianRational operator*(long long a, const GaussianRational& b) {
    return GaussianRational(a) * b;
}

namespace detail {

struct GrParser {
    std::string_view s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    BigInt integer() {
        size_t start = pos;
        if (!done() && (peek() == '+' || peek() == '-')) ++pos;
        size_t digits = 0;
        while (!done() && peek() >= '0' && peek() <= '9') {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw std::invalid_argument("GaussianRational: expected digits");
        return BigInt(std::string(s.substr(start, pos - start)));
    }

    // term := [sign] ( 'i' | number ['/' number] ['*'] ['i'] )
    // Returns (re_contrib, im_contrib) as exact fractions.
    void term(BigInt& num, BigInt& den, bool& imaginary) {
        den = 1;
        imaginary = false;
        BigInt sign = 1;
        if (!done() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos;
        }
        if (!done() && peek() == 'i') {
            ++pos;
            num = sign;
            imaginary = true;
            return;
        }
        num = sign * integer();
        if (!done() && peek() == '/') {
            ++pos;
            den = integer();
        }
        if (!done() && peek() == '*') ++pos;
        if (!done() && peek() == 'i') {
            ++pos;
            imaginary = true;
        }
    }
};

}  // namespace detail

inline GaussianRational GaussianRational::parse(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') cleaned += c;
    if (cleaned.empty()) throw std::invalid_argument("GaussianRational: empty input");

    detail::GrParser p{cleaned};
    BigInt re_n = 0, re_d = 1, im_n = 0, im_d = 1;
    bool seen_re = false, seen_im = false;
    while (!p.done()) {
        BigInt n, d;
        bool imag = false;
        p.term(n, d, imag);
        if (imag) {
            if (seen_im) throw std::invalid_argument("GaussianRational: repeated imaginary part");
            im_n = n;
            im_d = d;
            seen_im = true;
        } else {
            if (seen_re) throw std::invalid_argument("GaussianRational: repeated real part");
            re_n = n;
            re_d = d;
            seen_re = true;
        }
    }
    if (!seen_re && !seen_im) throw std::invalid_argument("GaussianRational: no value");
    return GaussianRational(re_n, re_d, im_n, im_d);
}

}  // namespace b2hecke

#endif  // B2HECKE_GAUSSIAN_RATIONAL_HPP
