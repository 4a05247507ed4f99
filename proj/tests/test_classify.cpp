#include "doctest.h"
#include "stc/classify.hpp"
#include "test_helpers.hpp"

using namespace stc;

namespace {

Gaussian g(long re, long im = 0) { return Gaussian(rat(re), rat(im)); }

SplittingParams random_valid_params() {
    while (true) {
        int eps = testutil::random_int(0, 1);
        Gaussian a = testutil::random_gaussian(4, 2), b = testutil::random_gaussian(4, 2);
        if (eps == 0 && (a + b.conj()).is_zero() && a.is_zero()) continue;
        return SplittingParams::c2(a, b, eps);
    }
}

// targeted parameters landing on rows random sampling almost never hits
std::vector<SplittingParams> crafted_params() {
    std::vector<SplittingParams> out;
    // eps=0 rows
    out.push_back(SplittingParams::c2(g(-1, 0), g(0), 0));            // B'=... A=-1,B=0
    out.push_back(SplittingParams::c2(g(0), g(-5), 0));               // B'=-1 -> s12
    out.push_back(SplittingParams::c2(Gaussian(rat(-1, 2)), Gaussian(rat(-1, 2)), 0));  // B'=-1/2 -> s9
    out.push_back(SplittingParams::c2(g(2, 1), -g(2, -1), 0));        // A=-conj B -> s2
    out.push_back(SplittingParams::c2(g(-1), Gaussian(rat(0), rat(1, 2)), 0));  // Im B' != 0
    // real-parameter rows
    out.push_back(SplittingParams::c2(g(0), g(0), 1));
    out.push_back(SplittingParams::c2(g(3), g(-3), 1));
    out.push_back(SplittingParams::c2(g(-1), g(-1), 1));
    out.push_back(SplittingParams::c2(g(2), g(2), 1));
    out.push_back(SplittingParams::c2(g(-1), g(3), 1));
    out.push_back(SplittingParams::c2(g(3), g(-1), 1));
    out.push_back(SplittingParams::c2(g(-3), g(1), 1));               // A+B=-2
    out.push_back(SplittingParams::c2(g(2), g(3), 1));
    // ImA=ImB rows
    out.push_back(SplittingParams::c2(g(1, 1), g(-1, 1), 1));         // s3
    out.push_back(SplittingParams::c2(g(-1, 2), g(-1, 2), 1));        // s5
    out.push_back(SplittingParams::c2(g(2, 1), g(2, 1), 1));          // s10^(a,0)
    out.push_back(SplittingParams::c2(g(-3, 1), g(1, 1), 1));         // s9
    out.push_back(SplittingParams::c2(g(2, 3), g(1, 3), 1));          // s10 generic
    // Delta=0 rows
    out.push_back(SplittingParams::c2(Gaussian(rat(-1, 2), rat(1, 2)),
                                      Gaussian(rat(-1, 2), rat(-1, 2)), 1));  // B = conj A
    out.push_back(SplittingParams::c2(Gaussian(rat(-1, 5), rat(3, 5)), g(-1), 1));   // B=-1: |A|=1? check below
    out.push_back(SplittingParams::c2(g(-1), Gaussian(rat(-3, 5), rat(4, 5)), 1));   // A=-1, |B|=1
    out.push_back(SplittingParams::c2(Gaussian(rat(0), rat(1)), Gaussian(rat(-8, 5), rat(-1, 5)), 1));  // s6 candidate
    out.push_back(SplittingParams::c2(Gaussian(rat(-1, 2), rat(1, 2)), g(0, 1), 1));  // Delta=0, |A| != |B|
    // Delta!=0 rows
    out.push_back(SplittingParams::c2(g(1, 1), g(1, -1), 1));         // B = conj A, Delta != 0 -> s9
    out.push_back(SplittingParams::c2(g(0, 1), g(2, -1), 1));         // |A|=|B|? no -> generic; keep anyway
    out.push_back(SplittingParams::c2(g(0, 2), g(-1, 0), 1));         // Y = 0 branch candidates
    out.push_back(SplittingParams::c2(g(1, 2), g(0, 1), 1));
    out.push_back(SplittingParams::c2(g(0, 1), g(2, 0), 1));
    out.push_back(SplittingParams::kt(1));
    return out;
}

}  // namespace

TEST_CASE("case invariants") {
    // A = i, B = -1: Delta = 1 + (2+0-1)(0-1) = 0
    auto inv = case_invariants(g(0, 1), g(-1, 0));
    CHECK(inv.delta == 0);
    REQUIRE(inv.x);
    REQUIRE(inv.y);

    // A = B: X and Y undefined
    auto same = case_invariants(g(1, 2), g(1, 2));
    CHECK(!same.x);
    CHECK(!same.y);

    // B = conj A with Im A != Im B forces X = Y = 0
    auto conj_case = case_invariants(g(2, 3), g(2, -3));
    CHECK(*conj_case.x == 0);
    CHECK(*conj_case.y == 0);

    // Delta in its expanded form |A|^2+|B|^2+2(ReA+ReB+ReA ReB-ImA ImB)
    Gaussian a = testutil::random_gaussian(5, 3), b = testutil::random_gaussian(5, 3);
    Rational expanded = a.norm2() + b.norm2() +
                        2 * (a.re + b.re + a.re * b.re - a.im * b.im);
    CHECK(case_invariants(a, b).delta == expanded);
}

TEST_CASE("classification of reference inputs") {
    // (C2, eps=0, B=-1/2, A=-1-conj(B)) -> s9
    auto r = classify(SplittingParams::c2(Gaussian(rat(-1, 2)), Gaussian(rat(-1, 2)), 0));
    CHECK(r.label == CatalogLabel(9));

    // (C2, eps=1, A=B=-1+2i) -> s5^2
    auto r5 = classify(SplittingParams::c2(g(-1, 2), g(-1, 2), 1));
    CHECK(r5.label == CatalogLabel(5, rat(2)));

    // (C2, eps=1, A=2, B=3) -> s11^(1/7)
    auto r11 = classify(SplittingParams::c2(g(2), g(3), 1));
    CHECK(r11.label == CatalogLabel(11, rat(1, 7)));

    // (KT, eps=1) -> s1
    CHECK(classify(SplittingParams::kt(1)).label == CatalogLabel(1));
}

TEST_CASE("classification degenerate inputs are rejected") {
    CHECK_THROWS_AS(classify(SplittingParams::c2(g(0), g(0), 0)), std::domain_error);
    CHECK_THROWS_AS(classify(SplittingParams::kt(0)), std::domain_error);
}

TEST_CASE("normalize_label") {
    // s7^3 -> s7^(1/3)
    auto n7 = normalize_label(7, rat(3));
    CHECK(n7.label == CatalogLabel(7, rat(1, 3)));
    // s11^(-1) -> s12
    auto n11 = normalize_label(11, rat(-1));
    CHECK(n11.label == CatalogLabel(12));
    // s5^(1/2) unchanged
    auto n5 = normalize_label(5, rat(1, 2));
    CHECK(n5.label == CatalogLabel(5, rat(1, 2)));
    CHECK(n5.steps.empty());
    // s6 chains: s6^{-2,3} -> ... -> in-range
    auto n6 = normalize_label(6, rat(-2), rat(3));
    CHECK(n6.label == CatalogLabel(6, rat(2, 3), rat(1, 3)));
    // s6^{a,1} -> s8^a, s6^{0,b} -> s7^b, s6^{a,0} -> s5^{1/a}
    CHECK(normalize_label(6, rat(3), rat(1)).label == CatalogLabel(8, rat(3)));
    CHECK(normalize_label(6, rat(0), rat(1, 2)).label == CatalogLabel(7, rat(1, 2)));
    CHECK(normalize_label(6, rat(4), rat(0)).label == CatalogLabel(5, rat(1, 4)));
    CHECK(normalize_label(8, rat(0)).label == CatalogLabel(7, rat(1)));
    CHECK(normalize_label(11, rat(0)).label == CatalogLabel(9));
}

TEST_CASE("gauge coherence on the eps=0 s2 family") {
    // (A, -conj A, 0) yields s2 regardless of |A|
    for (int t = 0; t < 15; ++t) {
        Gaussian a = testutil::random_gaussian(5, 3);
        if (a.is_zero()) continue;
        auto r = classify(SplittingParams::c2(a, -a.conj(), 0));
        CHECK(r.label == CatalogLabel(2));
    }
}

TEST_CASE("J_B and J_{1/B} classify identically") {
    // family (iii): splitting(-1, B, 1); swap B -> 1/B
    Gaussian b(rat(1, 2), rat(0));
    auto r1 = classify(SplittingParams::c2(g(-1), b, 1));
    auto r2 = classify(SplittingParams::c2(g(-1), Gaussian(1) / b, 1));
    CHECK(r1.label == r2.label);
    CHECK(r1.label == CatalogLabel(12));
}

TEST_CASE("crafted rows classify and verify") {
    for (const auto& p : crafted_params()) {
        auto r = classify(p);  // classify() verifies internally; reaching here is the test
        CHECK(r.label.k >= 1);
        CHECK(r.label.k <= 12);
    }
}

TEST_CASE("random classification sample: total, verified, canonical-bundle consistent") {
    int canonical_count = 0;
    for (int t = 0; t < 120; ++t) {
        SplittingParams p = random_valid_params();
        ClassificationResult r = classify(p);
        bool in_set = r.label == CatalogLabel(4) || (r.label.k == 7 && *r.label.alpha == 1) ||
                      r.label.k == 8 || r.label.k == 12;
        bool b_is_minus_eps = p.B == Gaussian(-p.eps);
        CHECK(splitting_coframe(p).canonical_trivial() == b_is_minus_eps);
        if (b_is_minus_eps) {
            CHECK(in_set);
            ++canonical_count;
        }
    }
    (void)canonical_count;
    // the four canonical-bundle labels are each realized by an explicit B = -eps structure
    CHECK(classify(SplittingParams::c2(g(-1), g(-1), 1)).label == CatalogLabel(4));
    CHECK(classify(SplittingParams::c2(g(1), g(-1), 1)).label == CatalogLabel(7, rat(1)));
    Gaussian a8(rat(-3, 5), rat(4, 5));  // (1-a^2+2ia)/(1+a^2) for a = 2
    CHECK(classify(SplittingParams::c2(a8, g(-1), 1)).label == CatalogLabel(8, rat(2)));
    CHECK(classify(SplittingParams::c2(g(2), g(-1), 1)).label == CatalogLabel(12));
}

TEST_CASE("theorem witnesses hit their intended algebras") {
    // the "if part" witnesses from the classification theorem
    CHECK(classify(SplittingParams::c2(g(-1, 3), g(-1, 3), 1)).label == CatalogLabel(5, rat(3)));
    // s6^{2,1/3}: parameters derived from the Delta=0 row formulas
    // (the displayed witness in the theorem proof misses the Delta=0 locus)
    Gaussian a6(rat(-39, 37), rat(12, 37)), b6(rat(-33, 37), rat(24, 37));
    CHECK(classify(SplittingParams::c2(a6, b6, 1)).label == CatalogLabel(6, rat(2), rat(1, 3)));
    CHECK(classify(SplittingParams::c2(Gaussian(rat(1, 2)), Gaussian(rat(-1, 2)), 1)).label ==
          CatalogLabel(7, rat(1, 2)));
    // s10 via eps=0: B = (ab - 1 + ib)/2 with (a,b) = (2,3); the table-2 row
    // realizes this input as s10^{3,2} (the proof's witness line swaps the pair)
    Gaussian b10v(rat(5, 2), rat(3, 2));
    CHECK(classify(SplittingParams::c2(g(-1) - b10v.conj(), b10v, 0)).label ==
          CatalogLabel(10, rat(3), rat(2)));
    // s11^a via eps=0: B = -(1+a)/2, A = -1-B
    Rational av = rat(2, 5);
    Gaussian b11(-(1 + av) / 2);
    CHECK(classify(SplittingParams::c2(g(-1) - b11, b11, 0)).label == CatalogLabel(11, av));
}
