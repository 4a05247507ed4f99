#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stc/coframe.hpp"
#include "stc/matrix.hpp"

// Finite bigraded double complexes with exact del / dbar matrices over Q(i):
// Dolbeault, Bott-Chern, Aeppli, and de Rham dimensions, the direct
// del-dbar-lemma decision, and verification of harmonic representatives in
// the orthonormal-basis convention.

namespace stc {

enum class CohomologyTheory { dolbeault, bott_chern, aeppli, de_rham };

inline const char* name_of(CohomologyTheory t) {
    switch (t) {
        case CohomologyTheory::dolbeault: return "dolbeault";
        case CohomologyTheory::bott_chern: return "bott-chern";
        case CohomologyTheory::aeppli: return "aeppli";
        case CohomologyTheory::de_rham: return "de-rham";
    }
    return "?";
}

class DoubleComplex {
  public:
    /// labels, del, dbar are (n+1)x(n+1) grids; del[p][q] maps (p,q) ->
    /// (p+1,q) (empty matrix with 0 rows at the boundary), dbar[p][q] maps
    /// (p,q) -> (p,q+1).  conj_to[p][q], when present for all bidegrees,
    /// expresses conj(basis_{p,q}[j]) = sum_i conj_to[p][q](i,j) basis_{q,p}[i].
    DoubleComplex(int n, std::vector<std::vector<std::vector<std::string>>> labels,
                  std::vector<std::vector<Matrix<Gaussian>>> del,
                  std::vector<std::vector<Matrix<Gaussian>>> dbar,
                  std::vector<std::vector<std::optional<Matrix<Gaussian>>>> conj_to = {})
        : n_(n), labels_(std::move(labels)), del_(std::move(del)), dbar_(std::move(dbar)),
          conj_to_(std::move(conj_to)) {
        validate();
    }

    /// Placeholder with a single zero bidegree; used before assembly.
    static DoubleComplex empty() {
        return DoubleComplex(0, {{{}}}, {{Matrix<Gaussian>(0, 0)}}, {{Matrix<Gaussian>(0, 0)}});
    }

    int n() const { return n_; }
    int dim(int p, int q) const {
        if (p < 0 || q < 0 || p > n_ || q > n_) return 0;
        return int(labels_[p][q].size());
    }
    const std::vector<std::string>& basis_labels(int p, int q) const { return labels_[p][q]; }

    const Matrix<Gaussian>& del(int p, int q) const { return del_[p][q]; }
    const Matrix<Gaussian>& dbar(int p, int q) const { return dbar_[p][q]; }

    bool conjugation_closed() const {
        if (conj_to_.empty()) return false;
        for (int p = 0; p <= n_; ++p)
            for (int q = 0; q <= n_; ++q)
                if (!conj_to_[p][q]) return false;
        return true;
    }
    const std::optional<Matrix<Gaussian>>& conj_to(int p, int q) const { return conj_to_[p][q]; }

    /// del dbar as a single map (p,q) -> (p+1,q+1).
    Matrix<Gaussian> del_dbar(int p, int q) const {
        if (dim(p, q) == 0 || p + 1 > n_ || q + 1 > n_)
            return Matrix<Gaussian>(dim(p + 1, q + 1), dim(p, q));
        return del_[p][q + 1] * dbar_[p][q];
    }

    // --- total (de Rham) complex ---------------------------------------

    int total_dim(int k) const {
        int d = 0;
        for (int p = 0; p <= n_; ++p) d += dim(p, k - p);
        return d;
    }

    /// offset of the (p, k-p) block inside degree k
    int block_offset(int k, int p) const {
        int off = 0;
        for (int pp = 0; pp < p; ++pp) off += dim(pp, k - pp);
        return off;
    }

    Matrix<Gaussian> total_d(int k) const {
        Matrix<Gaussian> m(total_dim(k + 1), total_dim(k));
        for (int p = 0; p <= n_; ++p) {
            int q = k - p;
            if (dim(p, q) == 0) continue;
            int src = block_offset(k, p);
            const auto& dl = del_[p][q];
            int dst_del = block_offset(k + 1, p + 1);
            for (int i = 0; i < dl.rows(); ++i)
                for (int j = 0; j < dl.cols(); ++j) m(dst_del + i, src + j) = dl(i, j);
            const auto& db = dbar_[p][q];
            int dst_dbar = block_offset(k + 1, p);
            for (int i = 0; i < db.rows(); ++i)
                for (int j = 0; j < db.cols(); ++j) m(dst_dbar + i, src + j) = db(i, j);
        }
        return m;
    }

  private:
    void validate() const {
        auto grid_ok = [&](const auto& g) { return int(g.size()) == n_ + 1; };
        if (!grid_ok(labels_) || !grid_ok(del_) || !grid_ok(dbar_))
            throw std::invalid_argument("double complex grids must be (n+1)x(n+1)");
        for (int p = 0; p <= n_; ++p)
            for (int q = 0; q <= n_; ++q) {
                if (del_[p][q].cols() != dim(p, q) || dbar_[p][q].cols() != dim(p, q))
                    throw std::invalid_argument("differential has wrong source dimension");
                if (del_[p][q].rows() != dim(p + 1, q) || dbar_[p][q].rows() != dim(p, q + 1))
                    throw std::invalid_argument("differential has wrong target dimension");
            }
        for (int p = 0; p <= n_; ++p)
            for (int q = 0; q <= n_; ++q) {
                if (dim(p, q) == 0) continue;
                if (p + 1 <= n_ && !(del_[p + 1][q] * del_[p][q]).all_zero())
                    throw std::invalid_argument("del^2 != 0");
                if (q + 1 <= n_ && !(dbar_[p][q + 1] * dbar_[p][q]).all_zero())
                    throw std::invalid_argument("dbar^2 != 0");
                if (p + 1 <= n_ && q + 1 <= n_) {
                    Matrix<Gaussian> anti = del_[p][q + 1] * dbar_[p][q] + dbar_[p + 1][q] * del_[p][q];
                    if (!anti.all_zero()) throw std::invalid_argument("del dbar + dbar del != 0");
                }
            }
        if (!conj_to_.empty() && int(conj_to_.size()) != n_ + 1)
            throw std::invalid_argument("conjugation grid must be (n+1)x(n+1)");
    }

    int n_;
    std::vector<std::vector<std::vector<std::string>>> labels_;
    std::vector<std::vector<Matrix<Gaussian>>> del_, dbar_;
    std::vector<std::vector<std::optional<Matrix<Gaussian>>>> conj_to_;
};

/// The full invariant complex Lambda^{p,q} of an integrable coframe.
inline DoubleComplex from_coframe(const Coframe& cf) {
    if (!cf.integrable()) throw std::domain_error("from_coframe requires an integrable coframe");
    const int n = cf.n();
    std::vector<std::vector<std::vector<std::string>>> labels(
        n + 1, std::vector<std::vector<std::string>>(n + 1));
    std::vector<std::vector<Matrix<Gaussian>>> del(n + 1, std::vector<Matrix<Gaussian>>(n + 1)),
        dbar(n + 1, std::vector<Matrix<Gaussian>>(n + 1));
    std::vector<std::vector<std::optional<Matrix<Gaussian>>>> conj(
        n + 1, std::vector<std::optional<Matrix<Gaussian>>>(n + 1));
    std::vector<std::vector<std::vector<Mask>>> bases(n + 1, std::vector<std::vector<Mask>>(n + 1));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            bases[p][q] = masks_of_bidegree(n, p, q);
            for (Mask m : bases[p][q]) labels[p][q].push_back(render_monomial_name(m, n));
        }
    auto index_of = [&](int p, int q, Mask m) {
        const auto& b = bases[p][q];
        return int(std::lower_bound(b.begin(), b.end(), m) - b.begin());
    };
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            int cols = int(bases[p][q].size());
            Matrix<Gaussian> dl(p + 1 <= n ? int(bases[p + 1][q].size()) : 0, cols);
            Matrix<Gaussian> db(q + 1 <= n ? int(bases[p][q + 1].size()) : 0, cols);
            Matrix<Gaussian> cj(int(bases[q][p].size()), cols);
            for (int j = 0; j < cols; ++j) {
                CForm mono = CForm::monomial(bases[p][q][j], Gaussian(1));
                if (p + 1 <= n)
                    for (const auto& [m, c] : cf.partial(mono).terms)
                        dl(index_of(p + 1, q, m), j) = c;
                if (q + 1 <= n)
                    for (const auto& [m, c] : cf.dbar(mono).terms)
                        db(index_of(p, q + 1, m), j) = c;
                for (const auto& [m, c] : conj_form(mono, n).terms) cj(index_of(q, p, m), j) = c;
            }
            del[p][q] = std::move(dl);
            dbar[p][q] = std::move(db);
            conj[p][q] = std::move(cj);
        }
    return DoubleComplex(n, std::move(labels), std::move(del), std::move(dbar), std::move(conj));
}

// --- cohomology dimensions ---------------------------------------------

inline int dolbeault_dim(const DoubleComplex& dc, int p, int q) {
    if (dc.dim(p, q) == 0) return 0;
    int cycles = dc.dim(p, q) - rank(dc.dbar(p, q));
    int boundaries = (q > 0 && dc.dim(p, q - 1) > 0) ? rank(dc.dbar(p, q - 1)) : 0;
    return cycles - boundaries;
}

inline int bott_chern_dim(const DoubleComplex& dc, int p, int q) {
    if (dc.dim(p, q) == 0) return 0;
    Matrix<Gaussian> stacked = Matrix<Gaussian>::vcat(dc.del(p, q), dc.dbar(p, q));
    int cycles = dc.dim(p, q) - rank(stacked);
    int boundaries = (p > 0 && q > 0 && dc.dim(p - 1, q - 1) > 0) ? rank(dc.del_dbar(p - 1, q - 1)) : 0;
    return cycles - boundaries;
}

inline int aeppli_dim(const DoubleComplex& dc, int p, int q) {
    if (dc.dim(p, q) == 0) return 0;
    int cycles = dc.dim(p, q) - rank(dc.del_dbar(p, q));
    Matrix<Gaussian> img(dc.dim(p, q), 0);
    if (p > 0 && dc.dim(p - 1, q) > 0) img = Matrix<Gaussian>::hcat(img, dc.del(p - 1, q));
    if (q > 0 && dc.dim(p, q - 1) > 0) img = Matrix<Gaussian>::hcat(img, dc.dbar(p, q - 1));
    return cycles - (img.cols() ? rank(img) : 0);
}

inline std::vector<int> de_rham_dims(const DoubleComplex& dc) {
    const int top = 2 * dc.n();
    std::vector<int> betti(top + 1, 0);
    int prev_rank = 0;
    for (int k = 0; k <= top; ++k) {
        int dk = dc.total_dim(k);
        int rk = k < top ? rank(dc.total_d(k)) : 0;
        betti[k] = dk - rk - prev_rank;
        prev_rank = rk;
    }
    return betti;
}

struct CohomologyTable {
    CohomologyTheory theory;
    std::vector<std::vector<int>> dims;  // [p][q]; for de_rham, dims[0][k] = b_k
};

inline CohomologyTable cohomology(const DoubleComplex& dc, CohomologyTheory theory) {
    CohomologyTable t;
    t.theory = theory;
    if (theory == CohomologyTheory::de_rham) {
        t.dims.push_back(de_rham_dims(dc));
        return t;
    }
    t.dims.assign(dc.n() + 1, std::vector<int>(dc.n() + 1, 0));
    for (int p = 0; p <= dc.n(); ++p)
        for (int q = 0; q <= dc.n(); ++q) {
            switch (theory) {
                case CohomologyTheory::dolbeault: t.dims[p][q] = dolbeault_dim(dc, p, q); break;
                case CohomologyTheory::bott_chern: t.dims[p][q] = bott_chern_dim(dc, p, q); break;
                case CohomologyTheory::aeppli: t.dims[p][q] = aeppli_dim(dc, p, q); break;
                default: break;
            }
        }
    return t;
}

// --- the del-dbar lemma, decided directly ---------------------------------

struct DdbarReport {
    bool holds = true;
    int p = -1, q = -1;  // first failing bidegree when !holds
};

/// Direct decision: in every bidegree, every del- and dbar-closed form that
/// is exact in the total complex must lie in the image of del dbar.
inline DdbarReport ddbar_lemma_report(const DoubleComplex& dc) {
    for (int p = 0; p <= dc.n(); ++p)
        for (int q = 0; q <= dc.n(); ++q) {
            int d = dc.dim(p, q);
            if (d == 0) continue;
            const int k = p + q;
            // pure-type closed forms
            auto closed = kernel_basis(Matrix<Gaussian>::vcat(dc.del(p, q), dc.dbar(p, q)));
            if (closed.empty()) continue;
            Matrix<Gaussian> v = Matrix<Gaussian>::from_columns(d, closed);
            // subspace of forms whose inclusion into degree k is d-exact:
            // solve D y = iota(x) jointly in (y, x)
            Matrix<Gaussian> dd = k > 0 ? dc.total_d(k - 1) : Matrix<Gaussian>(dc.total_dim(k), 0);
            Matrix<Gaussian> iota(dc.total_dim(k), d);
            int off = dc.block_offset(k, p);
            for (int i = 0; i < d; ++i) iota(off + i, i) = Gaussian(-1);
            Matrix<Gaussian> joint = Matrix<Gaussian>::hcat(dd, iota);
            std::vector<std::vector<Gaussian>> exact_cols;
            for (const auto& ker : kernel_basis(joint))
                exact_cols.emplace_back(ker.begin() + dd.cols(), ker.end());
            if (exact_cols.empty()) continue;
            Matrix<Gaussian> u = Matrix<Gaussian>::from_columns(d, exact_cols);
            Matrix<Gaussian> candidates = column_span_intersection(v, u);
            if (candidates.cols() == 0) continue;
            // must be del dbar exact
            Matrix<Gaussian> img = dc.del_dbar(p - 1, q - 1);
            if (!columns_contained(img, candidates)) return {false, p, q};
        }
    return {};
}

inline bool ddbar_lemma(const DoubleComplex& dc) { return ddbar_lemma_report(dc).holds; }

/// Sufficiency test: del and dbar vanish identically and the complex is
/// conjugation-closed (then C = B + conj(B) = B and the lemma holds).
inline bool ddbar_sufficient(const DoubleComplex& b) {
    for (int p = 0; p <= b.n(); ++p)
        for (int q = 0; q <= b.n(); ++q)
            if (!b.del(p, q).all_zero() || !b.dbar(p, q).all_zero()) return false;
    return b.conjugation_closed();
}

// --- representative verification -----------------------------------------

/// Coordinate vectors (in the dc basis of each bidegree) of claimed
/// representatives for one theory.
using RepresentativeSet = std::map<std::pair<int, int>, std::vector<std::vector<Gaussian>>>;

inline bool verify_representatives(const DoubleComplex& dc, CohomologyTheory theory,
                                   const RepresentativeSet& reps) {
    for (const auto& [pq, forms] : reps) {
        auto [p, q] = pq;
        const int d = dc.dim(p, q);
        for (const auto& f : forms)
            if (int(f.size()) != d)
                throw std::invalid_argument("representative not in the stated bidegree");
        int expected = 0;
        Matrix<Gaussian> boundaries(d, 0);
        std::vector<Matrix<Gaussian>> cocycle_conds;   // matrices that must kill each rep
        std::vector<Matrix<Gaussian>> harmonic_conds;  // adjoint conditions
        switch (theory) {
            case CohomologyTheory::dolbeault:
                expected = dolbeault_dim(dc, p, q);
                cocycle_conds.push_back(dc.dbar(p, q));
                if (q > 0) boundaries = dc.dbar(p, q - 1);
                if (q > 0) harmonic_conds.push_back(dc.dbar(p, q - 1).conj_transpose());
                break;
            case CohomologyTheory::bott_chern:
                expected = bott_chern_dim(dc, p, q);
                cocycle_conds.push_back(dc.del(p, q));
                cocycle_conds.push_back(dc.dbar(p, q));
                if (p > 0 && q > 0) boundaries = dc.del_dbar(p - 1, q - 1);
                if (p > 0 && q > 0)
                    harmonic_conds.push_back(dc.del_dbar(p - 1, q - 1).conj_transpose());
                break;
            case CohomologyTheory::aeppli: {
                expected = aeppli_dim(dc, p, q);
                cocycle_conds.push_back(dc.del_dbar(p, q));
                if (p > 0) boundaries = Matrix<Gaussian>::hcat(boundaries, dc.del(p - 1, q));
                if (q > 0) boundaries = Matrix<Gaussian>::hcat(boundaries, dc.dbar(p, q - 1));
                if (p > 0) harmonic_conds.push_back(dc.del(p - 1, q).conj_transpose());
                if (q > 0) harmonic_conds.push_back(dc.dbar(p, q - 1).conj_transpose());
                break;
            }
            case CohomologyTheory::de_rham:
                throw std::invalid_argument("representatives are bigraded; use a bigraded theory");
        }
        if (int(forms.size()) != expected) return false;
        for (const auto& f : forms) {
            for (const auto& cond : cocycle_conds) {
                auto img = cond.apply(f);
                for (const auto& c : img)
                    if (!is_zero(c)) return false;
            }
            for (const auto& cond : harmonic_conds) {
                auto img = cond.apply(f);
                for (const auto& c : img)
                    if (!is_zero(c)) return false;
            }
        }
        // classes independent modulo boundaries
        Matrix<Gaussian> all = boundaries;
        for (const auto& f : forms) all = Matrix<Gaussian>::hcat(all, Matrix<Gaussian>::from_columns(d, {f}));
        int base = boundaries.cols() ? rank(boundaries) : 0;
        if (rank(all) != base + int(forms.size())) return false;
    }
    return true;
}

}  // namespace stc
