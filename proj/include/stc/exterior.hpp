#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "stc/scalars.hpp"

// Sparse exterior algebra over up to 16 anticommuting generators.  A monomial
// is a bitmask (bit g set = generator g present, canonical order = ascending
// bit index); a form is a mask -> coefficient map.  The same engine carries
// the real Chevalley-Eilenberg complex (generators e^1..e^n over Q) and the
// complexified coframe calculus (generators w^1..w^n, conj(w^1)..conj(w^n)
// over Q(i)).

namespace stc {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Sign of w^a wedge w^b in canonical order; 0 when they share a generator.
inline int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int swaps = 0;
    int above = popcount(a);
    for (int g = 0; g < 16; ++g) {
        if (a & (Mask(1) << g)) --above;  // generators of a strictly above g
        if (b & (Mask(1) << g)) swaps += above;
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

template <typename T>
struct ExtForm {
    std::map<Mask, T> terms;

    ExtForm() = default;

    static ExtForm scalar(const T& c) {
        ExtForm f;
        if (!is_zero(c)) f.terms[0] = c;
        return f;
    }
    static ExtForm monomial(Mask m, const T& c) {
        ExtForm f;
        if (!is_zero(c)) f.terms[m] = c;
        return f;
    }
    static ExtForm generator(int g) { return monomial(Mask(1) << g, T(1)); }

    bool is_zero_form() const { return terms.empty(); }

    void add_term(Mask m, const T& c) {
        if (is_zero(c)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    ExtForm& operator+=(const ExtForm& o) {
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    ExtForm& operator-=(const ExtForm& o) {
        for (const auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend ExtForm operator+(ExtForm a, const ExtForm& b) { return a += b; }
    friend ExtForm operator-(ExtForm a, const ExtForm& b) { return a -= b; }
    ExtForm operator-() const {
        ExtForm f;
        for (const auto& [m, c] : terms) f.terms[m] = -c;
        return f;
    }
    friend ExtForm operator*(const T& s, const ExtForm& f) {
        ExtForm g;
        if (is_zero(s)) return g;
        for (const auto& [m, c] : f.terms) g.add_term(m, s * c);
        return g;
    }
    friend bool operator==(const ExtForm& a, const ExtForm& b) { return a.terms == b.terms; }
    friend bool operator!=(const ExtForm& a, const ExtForm& b) { return !(a == b); }

    friend ExtForm wedge(const ExtForm& a, const ExtForm& b) {
        ExtForm f;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) {
                int s = wedge_sign(ma, mb);
                if (s == 0) continue;
                T c = ca * cb;
                if (s < 0) c = -c;
                f.add_term(ma | mb, c);
            }
        return f;
    }

    /// Keep only terms whose mask satisfies the predicate.
    ExtForm filtered(const std::function<bool(Mask)>& keep) const {
        ExtForm f;
        for (const auto& [m, c] : terms)
            if (keep(m)) f.terms.emplace(m, c);
        return f;
    }

    T coefficient(Mask m) const {
        auto it = terms.find(m);
        return it == terms.end() ? T(0) : it->second;
    }
};

/// Extension of d to arbitrary forms given d on generators:
/// d(w^{g1..gk}) = sum_j (-1)^{j-1} w^{g1..} ^ d(w^{gj}) ^ {..gk}.
template <typename T>
ExtForm<T> apply_derivation(const ExtForm<T>& f, const std::vector<ExtForm<T>>& dgen) {
    ExtForm<T> out;
    for (const auto& [mask, coeff] : f.terms) {
        int pos = 0;
        for (int g = 0; g < 16; ++g) {
            Mask bit = Mask(1) << g;
            if (!(mask & bit)) continue;
            if (g < int(dgen.size()) && !dgen[g].is_zero_form()) {
                Mask rest = mask & ~bit;
                // move d(w^g) to the front: sign (-1)^pos, then wedge back
                for (const auto& [dm, dc] : dgen[g].terms) {
                    int s = wedge_sign(dm, rest);
                    if (s == 0) continue;
                    T c = coeff * dc;
                    if ((pos % 2 == 1) != (s < 0)) {
                        // exactly one sign flip
                        c = -c;
                    }
                    out.add_term(dm | rest, c);
                }
            }
            ++pos;
        }
    }
    return out;
}

/// Substitute generators by 1-forms (linear change of coframe).
template <typename T>
ExtForm<T> substitute(const ExtForm<T>& f, const std::vector<ExtForm<T>>& images) {
    ExtForm<T> out;
    for (const auto& [mask, coeff] : f.terms) {
        ExtForm<T> prod = ExtForm<T>::scalar(T(1));
        for (int g = 0; g < 16 && !prod.is_zero_form(); ++g)
            if (mask & (Mask(1) << g)) {
                if (g >= int(images.size()))
                    throw std::invalid_argument("substitute: missing generator image");
                prod = wedge(prod, images[g]);
            }
        out += coeff * prod;
    }
    return out;
}

/// Complex conjugation on the complexified algebra with n unbarred (bits
/// 0..n-1) and n barred (bits n..2n-1) generators.
inline std::pair<Mask, int> conj_mask(Mask m, int n) {
    std::vector<int> mapped;
    for (int g = 0; g < 2 * n; ++g)
        if (m & (Mask(1) << g)) mapped.push_back(g < n ? g + n : g - n);
    Mask out = 0;
    int inversions = 0;
    for (size_t i = 0; i < mapped.size(); ++i) {
        out |= Mask(1) << mapped[i];
        for (size_t j = i + 1; j < mapped.size(); ++j)
            if (mapped[i] > mapped[j]) ++inversions;
    }
    return {out, inversions % 2 == 0 ? 1 : -1};
}

inline ExtForm<Gaussian> conj_form(const ExtForm<Gaussian>& f, int n) {
    ExtForm<Gaussian> out;
    for (const auto& [m, c] : f.terms) {
        auto [cm, s] = conj_mask(m, n);
        Gaussian cc = c.conj();
        if (s < 0) cc = -cc;
        out.add_term(cm, cc);
    }
    return out;
}

/// Bidegree of a pure monomial in the complexified algebra.
inline std::pair<int, int> bidegree(Mask m, int n) {
    Mask low = (Mask(1) << n) - 1;
    return {popcount(m & low), popcount(m >> n)};
}

/// All masks over `gens` generators with given popcount, ascending.
inline std::vector<Mask> masks_of_weight(int gens, int k) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask(1) << gens); ++m)
        if (popcount(m) == k) out.push_back(m);
    return out;
}

/// Masks of bidegree (p, q) in the complexified algebra, ascending.
inline std::vector<Mask> masks_of_bidegree(int n, int p, int q) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask(1) << (2 * n)); ++m) {
        auto [mp, mq] = bidegree(m, n);
        if (mp == p && mq == q) out.push_back(m);
    }
    return out;
}

}  // namespace stc
