#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stc/matrix.hpp"

// Lattice certificates for the groups G_5^{alpha_{s,n}}: the matrix
// exp(tau_{s,n} ad_{e_5}) is conjugated to an integer unimodular matrix B_s
// over the field Q(sqrt D), D = n^2 - 4(-1)^s.  tau and alpha stay symbolic
// (the defining logarithm data); everything asserted here is algebraic.

namespace stc {

struct LatticeCertificate {
    long s = 0;                     // nonzero integer
    long n = 0;                     // >= 3
    long d = 0;                     // n^2 - 4(-1)^s
    Matrix<Quadratic> m;            // exp(tau_{s,n} ad_{e_5}), diagonal
    Matrix<Rational> bs;            // the integer matrix
    Matrix<Quadratic> q;            // conjugating matrix: q m q^{-1} = bs
    std::vector<Integer> charpoly_coeffs;  // of m, low degree first, monic
};

/// exp(tau ad_{e_5}) at tau = tau_{s,n}: cos(alpha tau) = (-1)^s and
/// sin(alpha tau) = 0 make it diag(e^-tau, e^-tau, (-1)^s e^tau, (-1)^s e^tau)
/// with e^-tau = (n + sqrt D)/2.
inline Matrix<Quadratic> exp_ad_at_tau(long s, long n) {
    if (s == 0) throw std::invalid_argument("certificate requires s != 0");
    if (n < 3) throw std::invalid_argument("certificate requires n >= 3");
    long sign = (s % 2 == 0) ? 1 : -1;
    long d = n * n - 4 * sign;
    Quadratic e_minus(d, rat(n, 2), rat(1, 2));          // (n + sqrt d)/2
    Quadratic e_plus_signed = e_minus.inv() * Quadratic(sign);  // (-1)^s e^{tau}
    Matrix<Quadratic> m(4, 4);
    m(0, 0) = e_minus;
    m(1, 1) = e_minus;
    m(2, 2) = e_plus_signed;
    m(3, 3) = e_plus_signed;
    return m;
}

inline LatticeCertificate certificate(long s, long n) {
    LatticeCertificate cert;
    cert.s = s;
    cert.n = n;
    long sign = (s % 2 == 0) ? 1 : -1;
    cert.d = n * n - 4 * sign;
    cert.m = exp_ad_at_tau(s, n);

    // B_s has 2x2 blocks (0, (-1)^{s+1}; 1, n)
    cert.bs = Matrix<Rational>(4, 4);
    for (int blk : {0, 2}) {
        cert.bs(blk + 0, blk + 1) = rat(-sign);
        cert.bs(blk + 1, blk + 0) = rat(1);
        cert.bs(blk + 1, blk + 1) = rat(n);
    }

    // Q with beta_pm = (-n +- sqrt d)/2
    Quadratic beta_p(cert.d, rat(-n, 2), rat(1, 2));
    Quadratic beta_m = beta_p.conj_sqrt();
    cert.q = Matrix<Quadratic>(4, 4);
    cert.q(0, 1) = beta_p;
    cert.q(0, 3) = beta_m;
    cert.q(1, 1) = Quadratic(1);
    cert.q(1, 3) = Quadratic(1);
    cert.q(2, 0) = beta_p;
    cert.q(2, 2) = beta_m;
    cert.q(3, 0) = Quadratic(1);
    cert.q(3, 2) = Quadratic(1);

    // verify the conjugation identity q m q^{-1} = bs exactly over Q(sqrt d)
    auto qinv = inverse(cert.q);
    if (!qinv) throw std::logic_error("lattice certificate: Q is singular");
    Matrix<Quadratic> conjugated = cert.q * cert.m * (*qinv);
    Matrix<Quadratic> bs_quadratic(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) bs_quadratic(i, j) = Quadratic(cert.bs(i, j));
    if (!(conjugated == bs_quadratic))
        throw std::logic_error("lattice certificate: conjugation identity failed");

    // charpoly(m) must equal (x^2 - n x + (-1)^s)^2 with integer coefficients
    auto cp = charpoly(cert.m);
    for (const auto& c : cp) {
        if (!c.is_rational() || !is_integer(c.a))
            throw std::logic_error("lattice certificate: charpoly not integral");
        cert.charpoly_coeffs.push_back(c.a.get_num());
    }
    // (x^2 - n x + s')^2 = x^4 - 2n x^3 + (n^2 + 2s') x^2 - 2n s' x + s'^2, s' = (-1)^s
    std::vector<Integer> target = {Integer(1), Integer(-2 * n * sign),
                                   Integer(n * n + 2 * sign), Integer(-2 * n), Integer(1)};
    if (cert.charpoly_coeffs != target)
        throw std::logic_error("lattice certificate: charpoly mismatch");
    return cert;
}

/// trace(exp(tau ad)) = 2(e^-tau + (-1)^s e^tau) = 2n.
inline Quadratic certificate_trace(const LatticeCertificate& cert) {
    Quadratic tr(0);
    for (int i = 0; i < 4; ++i) tr += cert.m(i, i);
    return tr;
}

}  // namespace stc
