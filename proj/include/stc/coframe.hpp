#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stc/exterior.hpp"
#include "stc/lie_algebra.hpp"
#include "stc/matrix.hpp"

// Invariant complexified exterior calculus: a (1,0)-coframe w^1..w^n with
// constant structure equations d w^i expanded over the 2n generators
// w^1..w^n, conj(w^1)..conj(w^n).  Bit g < n is w^{g+1}; bit n+g is its
// conjugate.

namespace stc {

using CForm = ExtForm<Gaussian>;

struct SplittingParams {
    enum class Family { C2, KT };
    Family family = Family::C2;
    Gaussian A, B;   // unused for KT
    int eps = 0;     // 0 or 1

    static SplittingParams c2(Gaussian a, Gaussian b, int eps) {
        if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
        SplittingParams p;
        p.family = Family::C2;
        p.A = std::move(a);
        p.B = std::move(b);
        p.eps = eps;
        return p;
    }
    static SplittingParams kt(int eps) {
        if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
        SplittingParams p;
        p.family = Family::KT;
        p.eps = eps;
        return p;
    }
};

class Coframe {
  public:
    Coframe(int n, std::vector<CForm> d_unbarred) : n_(n), d_(2 * n) {
        if (int(d_unbarred.size()) != n)
            throw std::invalid_argument("coframe needs one structure equation per generator");
        for (int i = 0; i < n; ++i) {
            d_[i] = std::move(d_unbarred[i]);
            d_[n + i] = conj_form(d_[i], n);
        }
        for (int i = 0; i < 2 * n; ++i)
            if (!apply_derivation(d_[i], d_).is_zero_form())
                throw std::invalid_argument("coframe violates d^2 = 0");
    }

    int n() const { return n_; }
    const std::vector<CForm>& d_images() const { return d_; }
    const CForm& d_of_generator(int g) const { return d_[g]; }

    CForm d(const CForm& f) const { return apply_derivation(f, d_); }

    bool integrable() const {
        for (int i = 0; i < n_; ++i)
            for (const auto& [mask, c] : d_[i].terms) {
                (void)c;
                if (bidegree(mask, n_).first == 0) return false;
            }
        return true;
    }

    /// (0,2) parts of the d w^i, nonzero only for non-integrable data.
    std::vector<CForm> integrability_defect() const {
        std::vector<CForm> out(n_);
        for (int i = 0; i < n_; ++i)
            out[i] = d_[i].filtered([&](Mask m) { return bidegree(m, n_).first == 0; });
        return out;
    }

    CForm partial(const CForm& f) const {
        require_integrable("partial");
        return typed_part(f, +1, 0);
    }
    CForm dbar(const CForm& f) const {
        require_integrable("dbar");
        return typed_part(f, 0, +1);
    }

    /// w^{1...n}, the canonical (n,0)-form.
    CForm top_holomorphic() const {
        return CForm::monomial((Mask(1) << n_) - 1, Gaussian(1));
    }

    /// d(w^{1..n}) = 0, i.e. the invariant canonical bundle is trivial.
    bool canonical_trivial() const { return d(top_holomorphic()).is_zero_form(); }

    friend bool operator==(const Coframe& a, const Coframe& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }

  private:
    void require_integrable(const char* op) const {
        if (!integrable())
            throw std::domain_error(std::string(op) + " on a non-integrable coframe");
    }

    // (p+dp, q+dq)-component of d applied degreewise.
    CForm typed_part(const CForm& f, int dp, int dq) const {
        CForm out;
        for (const auto& [mask, coeff] : f.terms) {
            auto [p, q] = bidegree(mask, n_);
            CForm dterm = d(CForm::monomial(mask, coeff));
            out += dterm.filtered([&](Mask m) {
                auto [tp, tq] = bidegree(m, n_);
                return tp == p + dp && tq == q + dq;
            });
        }
        return out;
    }

    int n_;
    std::vector<CForm> d_;
};

/// Structure equations of the two reduced splitting families.
inline Coframe splitting_coframe(const SplittingParams& p) {
    auto w = [](int a) { return Mask(1) << (a - 1); };          // w^a
    auto wb = [](int n, int a) { return Mask(1) << (n + a - 1); };  // conj(w^a)
    if (p.family == SplittingParams::Family::C2) {
        // d w1 = A w13 + B w1~3,  d w2 = -(A+conj B+eps) w23 + eps w2~3,  d w3 = 0
        CForm d1, d2, d3;
        d1.add_term(w(1) | w(3), p.A);
        d1.add_term(w(1) | wb(3, 3), p.B);
        d2.add_term(w(2) | w(3), -(p.A + p.B.conj() + Gaussian(p.eps)));
        d2.add_term(w(2) | wb(3, 3), Gaussian(p.eps));
        return Coframe(3, {d1, d2, d3});
    }
    // KT: d w1 = eps (w13 - w1~3),  d w2 = w1~1,  d w3 = 0
    CForm d1, d2, d3;
    d1.add_term(w(1) | w(3), Gaussian(p.eps));
    d1.add_term(w(1) | wb(3, 3), Gaussian(-p.eps));
    d2.add_term(w(1) | wb(3, 1), Gaussian(1));
    return Coframe(3, {d1, d2, d3});
}

/// Real structure constants in the basis w^i = a^{2i-1} + i a^{2i}.
inline RealLieAlgebra realify(const Coframe& cf) {
    const int n = cf.n();
    // images of the complex generators as complex combinations of the 2n
    // real generators
    std::vector<CForm> real_images(2 * n);
    for (int j = 0; j < n; ++j) {
        CForm u;
        u.add_term(Mask(1) << (2 * j), Gaussian(1));
        u.add_term(Mask(1) << (2 * j + 1), Gaussian::i());
        real_images[j] = u;
        CForm v;
        v.add_term(Mask(1) << (2 * j), Gaussian(1));
        v.add_term(Mask(1) << (2 * j + 1), -Gaussian::i());
        real_images[n + j] = v;
    }
    RealLieAlgebra g(2 * n);
    for (int j = 0; j < n; ++j) {
        CForm img = substitute(cf.d_of_generator(j), real_images);
        ExtForm<Rational> re, im;
        for (const auto& [mask, c] : img.terms) {
            if (c.re != 0) re.add_term(mask, c.re);
            if (c.im != 0) im.add_term(mask, c.im);
        }
        g.d[2 * j] = std::move(re);
        g.d[2 * j + 1] = std::move(im);
    }
    if (!jacobi_check(g)) throw std::logic_error("realify produced non-Lie structure constants");
    return g;
}

/// The complex structure induced on the realified algebra:
/// J e_{2i-1} = e_{2i}, J e_{2i} = -e_{2i-1}.
inline Matrix<Rational> standard_complex_structure(int n) {
    Matrix<Rational> j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(2 * i + 1, 2 * i) = Rational(1);
        j(2 * i, 2 * i + 1) = Rational(-1);
    }
    return j;
}

/// All components Nij(e_i, e_j) of the Nijenhuis tensor of J on g.
inline std::vector<std::vector<std::vector<Rational>>> nijenhuis(const Matrix<Rational>& J,
                                                                 const RealLieAlgebra& g) {
    const int n = g.dim;
    if (J.rows() != n || J.cols() != n) throw std::invalid_argument("nijenhuis: shape mismatch");
    Matrix<Rational> j2 = J * J;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (j2(i, k) != (i == k ? Rational(-1) : Rational(0)))
                throw std::invalid_argument("nijenhuis: J^2 != -Id");
    auto bracket_vec = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        std::vector<Rational> out(n, Rational(0));
        for (int a = 0; a < n; ++a) {
            if (x[a] == 0) continue;
            for (int b = 0; b < n; ++b) {
                if (y[b] == 0 || a == b) continue;
                auto br = g.bracket(a, b);
                for (int k = 0; k < n; ++k) out[k] += x[a] * y[b] * br[k];
            }
        }
        return out;
    };
    auto apply_j = [&](const std::vector<Rational>& x) { return J.apply(x); };
    std::vector<std::vector<std::vector<Rational>>> nij(n);
    for (int i = 0; i < n; ++i) {
        nij[i].resize(n);
        std::vector<Rational> ei(n, Rational(0));
        ei[i] = Rational(1);
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> ej(n, Rational(0));
            ej[j] = Rational(1);
            auto t1 = bracket_vec(apply_j(ei), apply_j(ej));
            auto t2 = apply_j(bracket_vec(apply_j(ei), ej));
            auto t3 = apply_j(bracket_vec(ei, apply_j(ej)));
            auto t4 = bracket_vec(ei, ej);
            std::vector<Rational> comp(n, Rational(0));
            for (int k = 0; k < n; ++k) comp[k] = t1[k] - t2[k] - t3[k] - t4[k];
            nij[i][j] = std::move(comp);
        }
    }
    return nij;
}

inline bool nijenhuis_vanishes(const Matrix<Rational>& J, const RealLieAlgebra& g) {
    auto nij = nijenhuis(J, g);
    for (const auto& row : nij)
        for (const auto& comp : row)
            for (const auto& v : comp)
                if (v != 0) return false;
    return true;
}

/// New coframe w'^a = sum_b p[a][b] w^b + q[a][b] conj(w^b).  The (0,2)
/// defect of the result, if any, is retained (query integrability_defect).
inline Coframe deform_coframe(const Coframe& cf, const Matrix<Gaussian>& p,
                              const Matrix<Gaussian>& q) {
    const int n = cf.n();
    if (p.rows() != n || p.cols() != n || q.rows() != n || q.cols() != n)
        throw std::invalid_argument("deform_coframe: matrix shape mismatch");
    // block matrix (p q; conj q, conj p) sends (w, conj w) to (w', conj w')
    Matrix<Gaussian> block(2 * n, 2 * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            block(a, b) = p(a, b);
            block(a, n + b) = q(a, b);
            block(n + a, b) = q(a, b).conj();
            block(n + a, n + b) = p(a, b).conj();
        }
    auto binv = inverse(block);
    if (!binv) throw std::invalid_argument("deform_coframe: singular block matrix");
    // old generators in terms of the new ones
    std::vector<CForm> old_in_new(2 * n);
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b)
            old_in_new[a].add_term(Mask(1) << b, (*binv)(a, b));
    std::vector<CForm> d_new(n);
    for (int a = 0; a < n; ++a) {
        CForm dw;  // d w'^a in old coordinates
        for (int b = 0; b < n; ++b) {
            if (!p(a, b).is_zero()) dw += p(a, b) * cf.d_of_generator(b);
            if (!q(a, b).is_zero()) dw += q(a, b) * cf.d_of_generator(n + b);
        }
        d_new[a] = substitute(dw, old_in_new);
    }
    return Coframe(n, d_new);
}

// Text rendering of structure equations: "d w1 = A*w13 + B*w1~3".

inline std::string render_monomial_name(Mask mask, int n) {
    std::string unb, bar;
    for (int g = 0; g < n; ++g)
        if (mask & (Mask(1) << g)) unb += std::to_string(g + 1);
    for (int g = 0; g < n; ++g)
        if (mask & (Mask(1) << (n + g))) bar += "~" + std::to_string(g + 1);
    return "w" + unb + bar;
}

inline std::string render_form(const CForm& f, int n) {
    if (f.is_zero_form()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mask, c] : f.terms) {
        std::string coeff = to_text(c);
        bool negated = false;
        if (coeff.size() > 1 && coeff[0] == '-' && coeff.find('+', 1) == std::string::npos &&
            coeff.find('-', 1) == std::string::npos) {
            coeff = coeff.substr(1);
            negated = true;
        }
        if (!first)
            out += negated ? " - " : " + ";
        else if (negated)
            out += "-";
        bool composite = coeff.find('+') != std::string::npos ||
                         coeff.find('-') != std::string::npos;
        if (mask == 0) {
            out += composite ? "(" + coeff + ")" : coeff;
        } else {
            if (coeff != "1") out += (composite ? "(" + coeff + ")" : coeff) + "*";
            out += render_monomial_name(mask, n);
        }
        first = false;
    }
    return out;
}

inline std::string render_coframe(const Coframe& cf) {
    std::string out;
    for (int i = 0; i < cf.n(); ++i) {
        out += "d w" + std::to_string(i + 1) + " = " + render_form(cf.d_of_generator(i), cf.n());
        if (i + 1 < cf.n()) out += "\n";
    }
    return out;
}

}  // namespace stc
