#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

// Exact scalar arithmetic: rationals, Gaussian rationals Q(i), and real
// quadratic extensions Q(sqrt(d)).  Everything downstream (linear algebra,
// exterior calculus, cohomology ranks) runs on these types; no floating
// point anywhere in the library.

namespace stc {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& n, const Integer& d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_text(const Rational& q) { return q.get_str(); }

// Accepts "p", "p/q", optional leading sign and whitespace.
std::optional<Rational> parse_rational(const std::string& text);

/// Element of Q(i).
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(long n) : re(n, 1), im(0) {}  // NOLINT: implicit by design
    Gaussian(const Rational& r) : re(r), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return Gaussian(re, -im); }
    Rational norm2() const { return re * re + im * im; }  // |.|^2

    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Gaussian inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero in Q(i)");
        Rational n = norm2();
        return Gaussian(re / n, -im / n);
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inv(); }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
    friend bool operator<(const Gaussian& a, const Gaussian& b) {  // order for map keys only
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

inline Gaussian conj(const Gaussian& g) { return g.conj(); }

// Rendering is canonical: "0", "3/2", "i", "-i", "3/4*i", "1/2-3/4*i".
std::string to_text(const Gaussian& g);

// Accepts the canonical grammar plus the CLI sugar "i", "i/2", "2i/3", "2+3i".
std::optional<Gaussian> parse_gaussian(const std::string& text);

/// Element of Q(sqrt(d)), value a + b*sqrt(d).  d = 0 marks a plain rational
/// that combines with any radicand; arithmetic mixing two distinct nonzero
/// radicands throws.  d need not be squarefree (d = n^2 - 4(-1)^s is used as
/// produced).
struct Quadratic {
    long d = 0;
    Rational a, b;

    Quadratic() : a(0), b(0) {}
    Quadratic(long n) : a(n, 1), b(0) {}  // NOLINT: implicit by design
    Quadratic(const Rational& r) : a(r), b(0) {}
    Quadratic(long radicand, Rational ra, Rational rb)
        : d(radicand), a(std::move(ra)), b(std::move(rb)) {
        if (d < 0) throw std::invalid_argument("radicand must be positive");
        normalize();
    }

    static Quadratic sqrt_of(long radicand) {
        return Quadratic(radicand, Rational(0), Rational(1));
    }

    void normalize() {
        if (b == 0) d = 0;
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    // Galois conjugate a - b*sqrt(d).
    Quadratic conj_sqrt() const { return b == 0 ? *this : Quadratic(d, a, -b); }

    static long merge_radicand(const Quadratic& x, const Quadratic& y) {
        if (x.d == 0) return y.d;
        if (y.d == 0) return x.d;
        if (x.d != y.d) throw std::domain_error("mixing distinct radicands in Q(sqrt d)");
        return x.d;
    }

    Quadratic operator-() const { Quadratic r = *this; r.a = -r.a; r.b = -r.b; return r; }
    friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
        long d = merge_radicand(x, y);
        return Quadratic(d, x.a + y.a, x.b + y.b);
    }
    friend Quadratic operator-(const Quadratic& x, const Quadratic& y) { return x + (-y); }
    friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
        long d = merge_radicand(x, y);
        Rational rd(d);
        return Quadratic(d, x.a * y.a + rd * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    Quadratic inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt d)");
        Rational n = a * a - Rational(d) * b * b;
        if (n == 0) throw std::domain_error("zero divisor: radicand is a perfect square");
        return Quadratic(d, a / n, -b / n);
    }
    friend Quadratic operator/(const Quadratic& x, const Quadratic& y) { return x * y.inv(); }
    Quadratic& operator+=(const Quadratic& o) { return *this = *this + o; }
    Quadratic& operator-=(const Quadratic& o) { return *this = *this - o; }
    Quadratic& operator*=(const Quadratic& o) { return *this = *this * o; }
    Quadratic& operator/=(const Quadratic& o) { return *this = *this / o; }

    friend bool operator==(const Quadratic& x, const Quadratic& y) {
        if (x.b == 0 && y.b == 0) return x.a == y.a;
        return x.d == y.d && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }
};

inline Quadratic conj(const Quadratic& q) { return q; }  // complex conjugation: reals fixed

std::string to_text(const Quadratic& q);

// --- field helpers used by the generic matrix kernel -----------------------

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Gaussian& x) { return x.is_zero(); }
inline bool is_zero(const Quadratic& x) { return x.is_zero(); }

inline Rational conj(const Rational& x) { return x; }

inline Rational inv(const Rational& x) {
    if (x == 0) throw std::domain_error("inverse of zero rational");
    return 1 / x;
}
inline Gaussian inv(const Gaussian& x) { return x.inv(); }
inline Quadratic inv(const Quadratic& x) { return x.inv(); }

// Least common multiple of the denominators appearing in a scalar; rows are
// scaled by this before fraction-free elimination.
inline Integer denominator_lcm(const Rational& x) { return x.get_den(); }
inline Integer denominator_lcm(const Gaussian& x) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), x.re.get_den_mpz_t(), x.im.get_den_mpz_t());
    return l;
}
inline Integer denominator_lcm(const Quadratic& x) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), x.a.get_den_mpz_t(), x.b.get_den_mpz_t());
    return l;
}

// --- implementations --------------------------------------------------------

inline std::optional<Rational> parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s[0] == '+') s = s.substr(1);  // gmp rejects a leading '+'
    if (s.empty()) return std::nullopt;
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(s);
            return Rational(n);
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty() || ds.find('/') != std::string::npos) return std::nullopt;
        Integer n(ns), d(ds);
        if (d == 0) return std::nullopt;
        return rat(n, d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

inline std::string to_text(const Gaussian& g) {
    if (g.is_zero()) return "0";
    std::string out;
    if (g.re != 0) out += to_text(g.re);
    if (g.im != 0) {
        if (g.im == 1)
            out += out.empty() ? "i" : "+i";
        else if (g.im == -1)
            out += "-i";
        else {
            std::string im = to_text(g.im) + "*i";
            if (!out.empty() && sgn(g.im) > 0) out += "+";
            out += im;
        }
    }
    return out;
}

namespace detail {
// One summand of the complex grammar: rational, "i", "r*i", "ri", "ri/q".
inline std::optional<Gaussian> parse_complex_term(const std::string& t) {
    if (t.empty()) return std::nullopt;
    size_t ipos = t.find('i');
    if (ipos == std::string::npos) {
        auto r = parse_rational(t);
        if (!r) return std::nullopt;
        return Gaussian(*r);
    }
    if (t.find('i', ipos + 1) != std::string::npos) return std::nullopt;
    std::string head = t.substr(0, ipos);   // e.g. "2", "2*", "-", ""
    std::string tail = t.substr(ipos + 1);  // e.g. "", "/3"
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (head.empty() || head == "+") head = "1";
    if (head == "-") head = "-1";
    Rational coeff;
    if (auto r = parse_rational(head))
        coeff = *r;
    else
        return std::nullopt;
    if (!tail.empty()) {
        if (tail[0] != '/') return std::nullopt;
        auto q = parse_rational(tail.substr(1));
        if (!q || *q == 0) return std::nullopt;
        coeff /= *q;
    }
    return Gaussian(Rational(0), coeff);
}
}  // namespace detail

inline std::optional<Gaussian> parse_gaussian(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;
    Gaussian total;
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        size_t next = pos + (first || s[pos] == '+' || s[pos] == '-' ? 1 : 0);
        while (next < s.size() && s[next] != '+' && s[next] != '-') ++next;
        auto term = detail::parse_complex_term(s.substr(pos, next - pos));
        if (!term) return std::nullopt;
        total += *term;
        pos = next;
        first = false;
    }
    return total;
}

inline std::string to_text(const Quadratic& q) {
    if (q.is_zero()) return "0";
    std::string out;
    if (q.a != 0) out += to_text(q.a);
    if (q.b != 0) {
        std::string rad = "sqrt(" + std::to_string(q.d) + ")";
        std::string part;
        if (q.b == 1)
            part = rad;
        else if (q.b == -1)
            part = "-" + rad;
        else
            part = to_text(q.b) + "*" + rad;
        if (!out.empty() && sgn(q.b) > 0) out += "+";
        out += part;
    }
    return out;
}

}  // namespace stc
