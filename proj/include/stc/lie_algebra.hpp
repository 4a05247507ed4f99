#pragma once

#include <string>
#include <vector>

#include "stc/exterior.hpp"
#include "stc/matrix.hpp"
#include "stc/scalars.hpp"

// Real Lie algebras presented by their Chevalley-Eilenberg differential:
// for each k, the 2-form d e^k with rational coefficients.  This is the
// coframe-side convention; brackets are derived on demand via
// de^k(e_i, e_j) = -e^k([e_i, e_j]).

namespace stc {

struct RealLieAlgebra {
    int dim = 0;
    std::vector<ExtForm<Rational>> d;  // d e^k, one 2-form per generator

    RealLieAlgebra() = default;
    explicit RealLieAlgebra(int n) : dim(n), d(n) {}

    static RealLieAlgebra abelian(int n) { return RealLieAlgebra(n); }

    /// Coefficient c^k_{ij} of e^{ij} (i < j, 0-based) in d e^k.
    Rational c(int k, int i, int j) const {
        if (i == j) return Rational(0);
        Mask m = (Mask(1) << i) | (Mask(1) << j);
        Rational v = d[k].coefficient(m);
        return i < j ? v : -v;
    }

    /// Bracket [e_i, e_j] as a coefficient vector.
    std::vector<Rational> bracket(int i, int j) const {
        std::vector<Rational> v(dim, Rational(0));
        for (int k = 0; k < dim; ++k) v[k] = -c(k, i, j);
        return v;
    }

    friend bool operator==(const RealLieAlgebra& a, const RealLieAlgebra& b) {
        return a.dim == b.dim && a.d == b.d;
    }
};

/// d(d e^k) = 0 for all k, with d extended as a derivation; equivalent to the
/// Jacobi identity.
inline bool jacobi_check(const RealLieAlgebra& g) {
    for (int k = 0; k < g.dim; ++k)
        if (!apply_derivation(g.d[k], g.d).is_zero_form()) return false;
    return true;
}

/// trace(ad_x) = 0 for every basis vector x.
inline bool unimodular_check(const RealLieAlgebra& g) {
    for (int i = 0; i < g.dim; ++i) {
        Rational tr(0);
        for (int j = 0; j < g.dim; ++j) {
            if (i == j) continue;
            tr += g.bracket(i, j)[j];  // e^j-component of [e_i, e_j]
        }
        if (tr != 0) return false;
    }
    return true;
}

/// Betti numbers b_0..b_dim of the Chevalley-Eilenberg complex.
inline std::vector<int> ce_cohomology(const RealLieAlgebra& g) {
    if (!jacobi_check(g)) throw std::domain_error("ce_cohomology requires the Jacobi identity");
    const int n = g.dim;
    std::vector<Matrix<Rational>> dk(n + 1);  // d: Lambda^k -> Lambda^{k+1}
    std::vector<int> dims(n + 2, 0);
    for (int k = 0; k <= n; ++k) {
        auto src = masks_of_weight(n, k);
        auto dst = masks_of_weight(n, k + 1);
        dims[k] = int(src.size());
        std::map<Mask, int> index;
        for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = int(i);
        Matrix<Rational> m(int(dst.size()), int(src.size()));
        for (size_t j = 0; j < src.size(); ++j) {
            auto img = apply_derivation(ExtForm<Rational>::monomial(src[j], Rational(1)), g.d);
            for (const auto& [mask, coeff] : img.terms) m(index.at(mask), int(j)) = coeff;
        }
        dk[k] = std::move(m);
    }
    std::vector<int> betti(n + 1, 0);
    int prev_rank = 0;
    for (int k = 0; k <= n; ++k) {
        int rk = (k < n) ? rank(dk[k]) : 0;
        betti[k] = dims[k] - rk - prev_rank;
        prev_rank = rk;
    }
    return betti;
}

/// Invertible real change of basis f^i = sum_j m[i][j] e^j.
using BasisChange = Matrix<Rational>;

/// Structure constants of src in the coframe f^i = sum_j m[i][j] e^j_src:
/// each d f^i is computed in src coordinates and re-expressed in the
/// f-coframe.
inline RealLieAlgebra transport_structure(const RealLieAlgebra& src, const BasisChange& m) {
    if (m.rows() != src.dim || m.cols() != src.dim)
        throw std::invalid_argument("transport_structure: matrix shape mismatch");
    auto minv = inverse(m);
    if (!minv) throw std::invalid_argument("transport_structure: basis change not invertible");
    // images of src generators in the f-coframe: e^a = sum_b (m^-1)[a][b] f^b
    std::vector<ExtForm<Rational>> e_in_f(src.dim);
    for (int a = 0; a < src.dim; ++a)
        for (int b = 0; b < src.dim; ++b)
            e_in_f[a].add_term(Mask(1) << b, (*minv)(a, b));
    RealLieAlgebra out(src.dim);
    for (int i = 0; i < src.dim; ++i) {
        ExtForm<Rational> dfi;  // in src coordinates
        for (int j = 0; j < src.dim; ++j)
            if (m(i, j) != 0) dfi += m(i, j) * src.d[j];
        out.d[i] = substitute(dfi, e_in_f);
    }
    return out;
}

/// True iff transporting src's structure constants through m (read as
/// f^i = sum_j m[i][j] e^j_src) yields exactly tgt's constants.
inline bool verify_isomorphism(const RealLieAlgebra& src, const RealLieAlgebra& tgt,
                               const BasisChange& m) {
    if (src.dim != tgt.dim) throw std::invalid_argument("verify_isomorphism: dimension mismatch");
    return transport_structure(src, m) == tgt;
}

}  // namespace stc
