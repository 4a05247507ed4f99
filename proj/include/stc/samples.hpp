#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "stc/coframe.hpp"

// Sampled splitting parameters exercising every classification row and
// landing on each catalog algebra; shared by the table emitters and the
// acceptance suite.

namespace stc {

inline Gaussian gq(long re_n, long re_d, long im_n, long im_d) {
    return Gaussian(rat(re_n, re_d), rat(im_n, im_d));
}

/// One representative input per classification-table row.
inline std::vector<std::pair<std::string, SplittingParams>> classification_row_samples() {
    auto g = [](long re, long im = 0) { return Gaussian(rat(re), rat(im)); };
    std::vector<std::pair<std::string, SplittingParams>> rows;
    rows.push_back({"KT, eps=1", SplittingParams::kt(1)});
    // eps = 0 (tabla 2)
    rows.push_back({"eps=0, A=-conj(B)!=0", SplittingParams::c2(g(2, 1), -g(2, -1), 0)});
    rows.push_back({"eps=0, B'=-1", SplittingParams::c2(g(0), g(-5), 0)});
    rows.push_back({"eps=0, B'=-1/2", SplittingParams::c2(gq(-1, 2, 0, 1), gq(-1, 2, 0, 1), 0)});
    rows.push_back({"eps=0, B'=0", SplittingParams::c2(g(-1), g(0), 0)});
    rows.push_back({"eps=0, B' real generic", SplittingParams::c2(gq(-3, 10, 0, 1), gq(-7, 10, 0, 1), 0)});
    rows.push_back({"eps=0, Im B' != 0", SplittingParams::c2(-g(1) - gq(5, 2, -3, 2), gq(5, 2, 3, 2), 0)});
    // eps = 1, A and B real (tabla 3)
    rows.push_back({"eps=1 real, A=-B=0", SplittingParams::c2(g(0), g(0), 1)});
    rows.push_back({"eps=1 real, A=-B!=0", SplittingParams::c2(g(3), g(-3), 1)});
    rows.push_back({"eps=1 real, A=B=-1", SplittingParams::c2(g(-1), g(-1), 1)});
    rows.push_back({"eps=1 real, A=B!=0,-1", SplittingParams::c2(g(2), g(2), 1)});
    rows.push_back({"eps=1 real, A=-1", SplittingParams::c2(g(-1), g(3), 1)});
    rows.push_back({"eps=1 real, B=-1", SplittingParams::c2(g(3), g(-1), 1)});
    rows.push_back({"eps=1 real, A+B=-2", SplittingParams::c2(g(-3), g(1), 1)});
    rows.push_back({"eps=1 real, generic", SplittingParams::c2(g(2), g(3), 1)});
    // eps = 1, Im A = Im B != 0 (tabla 4)
    rows.push_back({"eps=1 ImA=ImB, ReA=-ReB", SplittingParams::c2(g(1, 1), g(-1, 1), 1)});
    rows.push_back({"eps=1 ImA=ImB, ReA=ReB=-1", SplittingParams::c2(g(-1, 2), g(-1, 2), 1)});
    rows.push_back({"eps=1 ImA=ImB, ReA=ReB generic", SplittingParams::c2(g(2, 1), g(2, 1), 1)});
    rows.push_back({"eps=1 ImA=ImB, ReA+ReB=-2", SplittingParams::c2(g(-3, 1), g(1, 1), 1)});
    rows.push_back({"eps=1 ImA=ImB, generic", SplittingParams::c2(g(2, 3), g(1, 3), 1)});
    // eps = 1, Delta = 0 (tabla 5)
    rows.push_back({"eps=1 Delta=0, B=conj(A)", SplittingParams::c2(gq(-1, 2, 1, 2), gq(-1, 2, -1, 2), 1)});
    rows.push_back({"eps=1 Delta=0, B=-1", SplittingParams::c2(gq(-3, 5, 4, 5), g(-1), 1)});
    rows.push_back({"eps=1 Delta=0, A=-1", SplittingParams::c2(g(-1), gq(-3, 5, 4, 5), 1)});
    rows.push_back({"eps=1 Delta=0, |A|=|B| generic",
                    SplittingParams::c2(gq(-39, 37, 12, 37), gq(-33, 37, 24, 37), 1)});
    rows.push_back({"eps=1 Delta=0, |A|!=|B|", SplittingParams::c2(gq(3, 2, 0, 1), gq(-5, 2, -1, 1), 1)});
    // eps = 1, Delta != 0 (tabla 6)
    rows.push_back({"eps=1 Delta!=0, X=Y=0", SplittingParams::c2(g(1, 1), g(1, -1), 1)});
    rows.push_back({"eps=1 Delta!=0, X=0, Y!=0", SplittingParams::c2(g(1, 2), g(2, 1), 1)});
    rows.push_back({"eps=1 Delta!=0, Y=0 (s12 locus)", SplittingParams::c2(g(0, 2), g(-1), 1)});
    rows.push_back({"eps=1 Delta!=0, Y=0 generic", SplittingParams::c2(g(1, 2), g(0, -1), 1)});
    rows.push_back({"eps=1 Delta!=0, X,Y!=0", SplittingParams::c2(g(1, 2), g(0, 1), 1)});
    return rows;
}

/// Splitting structures landing on each catalog algebra s_k (verified by the
/// classifier at use sites).
inline std::vector<SplittingParams> algebra_samples(int k) {
    auto g = [](long re, long im = 0) { return Gaussian(rat(re), rat(im)); };
    switch (k) {
        case 1: return {SplittingParams::kt(1)};
        case 2: return {SplittingParams::c2(g(1), g(-1), 0), SplittingParams::c2(g(0), g(0), 1),
                        SplittingParams::c2(g(2, 1), -g(2, -1), 0)};
        case 3: return {SplittingParams::c2(g(1, 1), g(-1, 1), 1),
                        SplittingParams::c2(gq(1, 2, 2, 1), gq(-1, 2, 2, 1), 1)};
        case 4: return {SplittingParams::c2(g(-1), g(-1), 1)};
        case 5: return {SplittingParams::c2(g(-1, 1), g(-1, 1), 1),
                        SplittingParams::c2(g(-1, 2), g(-1, 2), 1),
                        SplittingParams::c2(gq(-1, 2, 1, 2), gq(-1, 2, -1, 2), 1)};
        case 6: return {SplittingParams::c2(gq(-39, 37, 12, 37), gq(-33, 37, 24, 37), 1),
                        SplittingParams::c2(gq(-38, 37, 6, 37), gq(-34, 37, 18, 37), 1)};
        case 7: return {SplittingParams::c2(gq(1, 2, 0, 1), gq(-1, 2, 0, 1), 1),
                        SplittingParams::c2(g(1), g(-1), 1), SplittingParams::c2(g(3), g(-3), 1)};
        case 8: return {SplittingParams::c2(gq(-3, 5, 4, 5), g(-1), 1),
                        SplittingParams::c2(g(-1), gq(-3, 5, 4, 5), 1)};
        case 9: return {SplittingParams::c2(g(1), g(1), 1),
                        SplittingParams::c2(gq(-1, 2, 0, 1), gq(-1, 2, 0, 1), 0),
                        SplittingParams::c2(g(-3, 1), g(1, 1), 1),
                        SplittingParams::c2(g(1, 1), g(1, -1), 1)};
        case 10: return {SplittingParams::c2(-g(1) - gq(5, 2, -3, 2), gq(5, 2, 3, 2), 0),
                         SplittingParams::c2(g(2, 1), g(2, 1), 1),
                         SplittingParams::c2(g(1, 2), g(0, 1), 1),
                         SplittingParams::c2(gq(3, 2, 0, 1), gq(-5, 2, -1, 1), 1)};
        case 11: return {SplittingParams::c2(gq(-3, 10, 0, 1), gq(-7, 10, 0, 1), 0),
                         SplittingParams::c2(g(2), g(3), 1),
                         SplittingParams::c2(g(1, 2), g(0, -1), 1)};
        case 12: return {SplittingParams::c2(g(2), g(-1), 1), SplittingParams::c2(g(0), g(-1), 1),
                         SplittingParams::c2(g(-1), Gaussian(rat(1, 2)), 1),
                         SplittingParams::c2(g(-1), g(0), 0), SplittingParams::c2(g(0), g(-5), 0),
                         SplittingParams::c2(g(0, 2), g(-1), 1)};
        default: throw std::invalid_argument("catalog index must be 1..12");
    }
}

/// Expected cells of the metric-existence table, in column order
/// kahler, hermitian-symplectic, skt, 1-gauduchon, balanced, strongly-gauduchon.
inline std::vector<std::array<bool, 6>> expected_metric_table() {
    return {
        {false, false, true, true, false, false},  // s1
        {true, true, true, true, true, true},      // s2
        {true, true, true, true, true, true},      // s3
        {false, false, false, false, true, true},  // s4
        {false, false, false, false, true, true},  // s5
        {false, false, false, false, true, true},  // s6
        {true, true, true, true, true, true},      // s7
        {false, false, false, false, true, true},  // s8
        {false, false, false, false, true, true},  // s9
        {false, false, false, false, true, true},  // s10
        {false, false, false, false, true, true},  // s11
        {false, false, false, false, true, true},  // s12
    };
}

/// The C samples of the three lattice classes used throughout section-3 checks.
inline std::vector<std::vector<Gaussian>> nakamura_c_classes() {
    auto gi = [](long n, long d) { return Gaussian(rat(0), rat(n, d)); };
    return {{gi(1, 1), gi(1, 3)},                                     // C = i/(2k+1)
            {gi(1, 2), gi(1, 4)},                                     // C = i/2k
            {Gaussian(rat(1), rat(1)), Gaussian(rat(2), rat(3)), gi(2, 3)}};  // generic
}

inline std::vector<Gaussian> deformation_t_samples() {
    return {Gaussian(rat(1, 2)), Gaussian(rat(1, 4)), Gaussian(rat(1, 4), rat(1, 4))};
}

}  // namespace stc
