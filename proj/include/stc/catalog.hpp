#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "stc/lie_algebra.hpp"

// The catalog s_1..s_12 of unimodular (non-nilpotent) solvable Lie algebras
// carrying splitting-type complex structures, and the parameter-reduction
// basis changes ChA..ChH.

namespace stc {

struct CatalogLabel {
    int k = 0;  // 1..12
    std::optional<Rational> alpha;
    std::optional<Rational> beta;

    CatalogLabel() = default;
    explicit CatalogLabel(int index, std::optional<Rational> a = std::nullopt,
                          std::optional<Rational> b = std::nullopt)
        : k(index), alpha(std::move(a)), beta(std::move(b)) {
        validate();
    }

    void validate() const {
        auto need = [&](bool cond, const char* msg) {
            if (!cond) throw std::invalid_argument(std::string("catalog parameter out of range: ") + msg);
        };
        switch (k) {
            case 1: case 2: case 3: case 4: case 9: case 12:
                need(!alpha && !beta, "no parameters expected");
                break;
            case 5:
                need(alpha && !beta && *alpha > 0, "s5 needs alpha > 0");
                break;
            case 6:
                need(alpha && beta && *alpha > 0 && *beta > 0 && *beta < 1,
                     "s6 needs alpha > 0, 0 < beta < 1");
                break;
            case 7:
                need(alpha && !beta && *alpha > 0 && *alpha <= 1, "s7 needs 0 < alpha <= 1");
                break;
            case 8:
                need(alpha && !beta && *alpha > 0, "s8 needs alpha > 0");
                break;
            case 10:
                need(alpha && beta && *alpha != 0, "s10 needs alpha != 0");
                break;
            case 11:
                need(alpha && !beta && *alpha > 0 && *alpha < 1, "s11 needs 0 < alpha < 1");
                break;
            default:
                throw std::invalid_argument("catalog index must be 1..12");
        }
    }

    std::string name() const {
        std::string s = "s" + std::to_string(k);
        if (alpha) {
            s += "^(" + to_text(*alpha);
            if (beta) s += "," + to_text(*beta);
            s += ")";
        }
        return s;
    }

    friend bool operator==(const CatalogLabel& a, const CatalogLabel& b) {
        return a.k == b.k && a.alpha == b.alpha && a.beta == b.beta;
    }
};

namespace detail {

// d e^k += c * e^{ij}, 1-based indices
inline void put(RealLieAlgebra& g, int k, const Rational& c, int i, int j) {
    g.d[k - 1].add_term((Mask(1) << (i - 1)) | (Mask(1) << (j - 1)), c);
}

}  // namespace detail

/// Structure constants of the s_k shape for arbitrary parameter values,
/// range checks skipped; used internally to pattern-match table rows whose
/// raw parameters land outside the catalog ranges.
inline RealLieAlgebra catalog_unchecked(int k, const Rational& alpha_v = Rational(0),
                                        const Rational& beta_v = Rational(0));

inline RealLieAlgebra catalog(const CatalogLabel& label) {
    label.validate();
    return catalog_unchecked(label.k, label.alpha.value_or(Rational(0)),
                             label.beta.value_or(Rational(0)));
}

inline RealLieAlgebra catalog_unchecked(int k, const Rational& alpha_v, const Rational& beta_v) {
    if (k < 1 || k > 12) throw std::invalid_argument("catalog index must be 1..12");
    CatalogLabel label;
    label.k = k;
    label.alpha = alpha_v;
    label.beta = beta_v;
    RealLieAlgebra g(6);
    using detail::put;
    const Rational one(1);
    switch (label.k) {
        case 1:  // (e^{23}, e^{34}, -e^{24}, 0,0,0)
            put(g, 1, one, 2, 3);
            put(g, 2, one, 3, 4);
            put(g, 3, -one, 2, 4);
            break;
        case 2:  // (0, -e^{13}, e^{12}, 0,0,0)
            put(g, 2, -one, 1, 3);
            put(g, 3, one, 1, 2);
            break;
        case 3:  // (0, -e^{13}, e^{12}, 0, -e^{46}, e^{45})
            put(g, 2, -one, 1, 3);
            put(g, 3, one, 1, 2);
            put(g, 5, -one, 4, 6);
            put(g, 6, one, 4, 5);
            break;
        case 4:  // (e^{15}, -e^{25}, -e^{35}, e^{45}, 0,0)
            put(g, 1, one, 1, 5);
            put(g, 2, -one, 2, 5);
            put(g, 3, -one, 3, 5);
            put(g, 4, one, 4, 5);
            break;
        case 5: {  // (e^{15}, e^{25}, -e^{35}+a e^{45}, -a e^{35}-e^{45}, 0,0)
            const Rational a = *label.alpha;
            put(g, 1, one, 1, 5);
            put(g, 2, one, 2, 5);
            put(g, 3, -one, 3, 5);
            put(g, 3, a, 4, 5);
            put(g, 4, -a, 3, 5);
            put(g, 4, -one, 4, 5);
            break;
        }
        case 6: {  // (a e^{15}+e^{25}, -e^{15}+a e^{25}, -a e^{35}+b e^{45}, -b e^{35}-a e^{45}, 0,0)
            const Rational a = *label.alpha, b = *label.beta;
            put(g, 1, a, 1, 5);
            put(g, 1, one, 2, 5);
            put(g, 2, -one, 1, 5);
            put(g, 2, a, 2, 5);
            put(g, 3, -a, 3, 5);
            put(g, 3, b, 4, 5);
            put(g, 4, -b, 3, 5);
            put(g, 4, -a, 4, 5);
            break;
        }
        case 7: {  // (e^{25}, -e^{15}, a e^{45}, -a e^{35}, 0,0)
            const Rational a = *label.alpha;
            put(g, 1, one, 2, 5);
            put(g, 2, -one, 1, 5);
            put(g, 3, a, 4, 5);
            put(g, 4, -a, 3, 5);
            break;
        }
        case 8: {  // s6 with beta = 1
            const Rational a = *label.alpha;
            put(g, 1, a, 1, 5);
            put(g, 1, one, 2, 5);
            put(g, 2, -one, 1, 5);
            put(g, 2, a, 2, 5);
            put(g, 3, -a, 3, 5);
            put(g, 3, one, 4, 5);
            put(g, 4, -one, 3, 5);
            put(g, 4, -a, 4, 5);
            break;
        }
        case 9:  // (-e^{16}, -e^{26}, e^{36}-e^{45}, e^{35}+e^{46}, 0,0)
            put(g, 1, -one, 1, 6);
            put(g, 2, -one, 2, 6);
            put(g, 3, one, 3, 6);
            put(g, 3, -one, 4, 5);
            put(g, 4, one, 3, 5);
            put(g, 4, one, 4, 6);
            break;
        case 10: {  // (e^{15}+b e^{16}-e^{26}, e^{16}+e^{25}+b e^{26},
                    //  -e^{35}-b e^{36}-a e^{45}, a e^{35}-e^{45}-b e^{46}, 0,0)
            const Rational a = *label.alpha, b = *label.beta;
            put(g, 1, one, 1, 5);
            put(g, 1, b, 1, 6);
            put(g, 1, -one, 2, 6);
            put(g, 2, one, 1, 6);
            put(g, 2, one, 2, 5);
            put(g, 2, b, 2, 6);
            put(g, 3, -one, 3, 5);
            put(g, 3, -b, 3, 6);
            put(g, 3, -a, 4, 5);
            put(g, 4, a, 3, 5);
            put(g, 4, -one, 4, 5);
            put(g, 4, -b, 4, 6);
            break;
        }
        case 11: {  // (e^{16}-e^{25}, e^{15}+e^{26}, -e^{36}-a e^{45}, a e^{35}-e^{46}, 0,0)
            const Rational a = *label.alpha;
            put(g, 1, one, 1, 6);
            put(g, 1, -one, 2, 5);
            put(g, 2, one, 1, 5);
            put(g, 2, one, 2, 6);
            put(g, 3, -one, 3, 6);
            put(g, 3, -a, 4, 5);
            put(g, 4, a, 3, 5);
            put(g, 4, -one, 4, 6);
            break;
        }
        case 12:  // (e^{16}-e^{25}, e^{15}+e^{26}, -e^{36}+e^{45}, -e^{35}-e^{46}, 0,0)
            put(g, 1, one, 1, 6);
            put(g, 1, -one, 2, 5);
            put(g, 2, one, 1, 5);
            put(g, 2, one, 2, 6);
            put(g, 3, -one, 3, 6);
            put(g, 3, one, 4, 5);
            put(g, 4, -one, 3, 5);
            put(g, 4, -one, 4, 6);
            break;
    }
    return g;
}

enum class ReductionChange { ChA, ChB, ChC, ChD, ChE, ChF, ChG, ChH };

inline const char* name_of(ReductionChange c) {
    switch (c) {
        case ReductionChange::ChA: return "ChA";
        case ReductionChange::ChB: return "ChB";
        case ReductionChange::ChC: return "ChC";
        case ReductionChange::ChD: return "ChD";
        case ReductionChange::ChE: return "ChE";
        case ReductionChange::ChF: return "ChF";
        case ReductionChange::ChG: return "ChG";
        case ReductionChange::ChH: return "ChH";
    }
    return "?";
}

/// The 6x6 matrix of the listed substitution f^i = sum_j m[i][j] e^j.
/// lambda is used by ChE and ChH only and must be nonzero there.
inline BasisChange reduction_change(ReductionChange which, const Rational& lambda = Rational(1)) {
    BasisChange m(6, 6);
    auto set = [&](int f, int e, const Rational& c) { m(f - 1, e - 1) = c; };
    const Rational one(1);
    switch (which) {
        case ReductionChange::ChA:
            set(1, 1, one); set(2, 4, one); set(3, 3, one);
            set(4, 2, one); set(5, 5, one); set(6, 6, one);
            break;
        case ReductionChange::ChB:
            set(1, 1, one); set(2, 2, one); set(3, 4, one);
            set(4, 3, one); set(5, 5, one); set(6, 6, one);
            break;
        case ReductionChange::ChC:
            set(1, 1, one); set(2, 2, -one); set(3, 3, one);
            set(4, 4, -one); set(5, 5, -one); set(6, 6, one);
            break;
        case ReductionChange::ChD:
            set(1, 1, one); set(2, 2, one); set(3, 3, one);
            set(4, 4, -one); set(5, 5, one); set(6, 6, one);
            break;
        case ReductionChange::ChE:
            if (lambda == 0) throw std::invalid_argument("ChE requires lambda != 0");
            set(1, 3, one); set(2, 4, -one); set(3, 1, one);
            set(4, 2, -one); set(5, 5, -lambda); set(6, 6, one);
            break;
        case ReductionChange::ChF:
            set(1, 5, -one); set(2, 2, one); set(3, 1, one);
            set(4, 4, one); set(5, 3, one); set(6, 6, one);
            break;
        case ReductionChange::ChG:
            set(1, 3, one); set(2, 4, one); set(3, 1, one);
            set(4, 2, one); set(5, 5, one); set(6, 6, one);
            break;
        case ReductionChange::ChH:
            if (lambda == 0) throw std::invalid_argument("ChH requires lambda != 0");
            set(1, 3, one); set(2, 4, one); set(3, 1, one);
            set(4, 2, one); set(5, 5, lambda); set(6, 6, -one);
            break;
    }
    return m;
}

}  // namespace stc
