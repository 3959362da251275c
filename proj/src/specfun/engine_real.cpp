#include "detail.hpp"

#include <cmath>

// Real-argument engine for J, Y (and hence H1) of complex order.
//   x < 2 : ascending series for J, Temme's series for Y at the reduced
//           order, then upward recurrence.
//   x >= 2: Miller ladder for J, Steed's CF2 for H1'/H1 at the reduced order,
//           H1 from the Wronskian with J, then upward recurrence for H1.
// The Temme series and CF2 below are the classic real-order algorithms with
// the order allowed to go complex; every operation in them is analytic in the
// order, so the complexification is legitimate as long as the reduced order
// keeps |Re mu| <= 1/2.

namespace vortexab::specfun::detail {

namespace {

// pi*mu/sin(pi*mu), stable at mu -> 0.
Cx fact_sinc(Cx mu) {
    Cx pm = kPi * mu;
    if (std::abs(pm) < 1e-4) {
        Cx p2 = pm * pm;
        return 1.0 + p2 * (1.0 / 6.0) + p2 * p2 * (7.0 / 360.0);
    }
    return pm / std::sin(pm);
}

// sinh(e)/e, stable at e -> 0.
Cx sinhc(Cx e) {
    if (std::abs(e) < 1e-4) {
        Cx e2 = e * e;
        return 1.0 + e2 * (1.0 / 6.0) + e2 * e2 * (1.0 / 120.0);
    }
    return std::sinh(e) / e;
}

// Temme's series for Y_mu(x), Y_{mu+1}(x); x <= 2, |Re mu| <= 1/2.
void temme_y(Cx mu, double x, Cx* ymu, Cx* ymu1) {
    Cx gam1, gam2, gp, gm;
    temme_gammas(mu, &gam1, &gam2, &gp, &gm);
    const double d = -std::log(0.5 * x);
    Cx e = mu * d;
    Cx fact = fact_sinc(mu);
    Cx ff = (2.0 / kPi) * fact * (gam1 * std::cosh(e) + gam2 * sinhc(e) * d);
    Cx E = std::exp(e);
    Cx p = E / (kPi * gp);        // gp = 1/Gamma(1+mu)
    Cx q = 1.0 / (E * kPi * gm);  // gm = 1/Gamma(1-mu)
    Cx pimu2 = 0.5 * kPi * mu;
    Cx fact3 = (std::abs(pimu2) < 1e-4)
                   ? 1.0 - pimu2 * pimu2 * (1.0 / 6.0)
                   : std::sin(pimu2) / pimu2;
    Cx r = kPi * pimu2 * fact3 * fact3;
    Cx c(1.0, 0.0);
    const double d2 = -0.25 * x * x;
    Cx sum = ff + r * q;
    Cx sum1 = p;
    Cx mu2 = mu * mu;
    for (int i = 1; i <= 300; ++i) {
        double di = i;
        ff = (di * ff + p + q) / (di * di - mu2);
        c *= d2 / di;
        p /= (di - mu);
        q /= (di + mu);
        Cx del = c * (ff + r * q);
        sum += del;
        Cx del1 = c * p - di * del;
        sum1 += del1;
        if (std::abs(del) < (1.0 + std::abs(sum)) * 1e-17 && i > 2) break;
    }
    *ymu = -sum;
    *ymu1 = -sum1 * (2.0 / x);
}

// Steed's CF2: H1'_mu(x)/H1_mu(x) for x >= 2, via a complex modified Lentz
// on  -1/(2x) + i + (i/x) * K_k [ ((k-1/2)^2 - mu^2) / (2(x + ik)) ].
Cx cf2_h1(Cx mu, double x) {
    const Cx I(0.0, 1.0);
    const Cx mu2 = mu * mu;
    const double tiny = 1e-290;
    Cx f(tiny, 0.0), C(tiny, 0.0), D(0.0, 0.0);
    for (int k = 1; k <= 8000; ++k) {
        double km = k - 0.5;
        Cx a = Cx(km * km, 0.0) - mu2;
        Cx b(2.0 * x, 2.0 * k);
        D = b + a * D;
        if (std::abs(D) < tiny) D = Cx(tiny, 0.0);
        D = 1.0 / D;
        C = b + a / C;
        if (std::abs(C) < tiny) C = Cx(tiny, 0.0);
        Cx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            return -0.5 / x + I + I * f / x;
        }
    }
    throw ConvergenceError("CF2 for H1'/H1 did not converge");
}

} // namespace

// Three-term upward recurrence F_{p+1} = (2(mu+p)/z) F_p + sign*F_{p-1},
// carried with an exact power-of-two ledger.  sign=-1 serves J/Y/H1,
// sign=+1 serves K.
void up_recurrence(Cx mu, Cx z, int ell, double sign, Scaled f0, Scaled f1,
                   Scaled* out0, Scaled* out1) {
    if (ell == 0) {
        *out0 = f0;
        *out1 = f1;
        return;
    }
    // bring both to a common exponent
    long e2 = std::max(f0.e2, f1.e2);
    Cx a(std::ldexp(f0.m.real(), static_cast<int>(f0.e2 - e2)),
         std::ldexp(f0.m.imag(), static_cast<int>(f0.e2 - e2)));
    Cx b(std::ldexp(f1.m.real(), static_cast<int>(f1.e2 - e2)),
         std::ldexp(f1.m.imag(), static_cast<int>(f1.e2 - e2)));
    Cx inv2z = 2.0 / z;
    for (int p = 1; p <= ell; ++p) {
        Cx c = (mu + static_cast<double>(p)) * inv2z * b + sign * a;
        a = b;
        b = c;
        double m = std::max(std::fabs(b.real()), std::fabs(b.imag()));
        if (m > 0x1p500) {
            a *= 0x1p-600;
            b *= 0x1p-600;
            e2 += 600;
        }
    }
    *out0 = Scaled{a, e2};
    out0->normalize();
    *out1 = Scaled{b, e2};
    out1->normalize();
}

JyPair jy_real(Cx nu, double x, bool need_y, double tol) {
    Reduced rd = reduce_order(nu);
    JyPair out;
    if (x < 2.0) {
        double e1, e2;
        out.j0 = j_series_one(nu, Cx(x, 0.0), false, &e1);
        out.j1 = j_series_one(nu + 1.0, Cx(x, 0.0), false, &e2);
        if (need_y) {
            Cx ymu, ymu1;
            temme_y(rd.mu, x, &ymu, &ymu1);
            up_recurrence(rd.mu, Cx(x, 0.0), rd.ell, -1.0,
                          Scaled::of(ymu), Scaled::of(ymu1), &out.y0, &out.y1);
            out.has_y = true;
        }
        return out;
    }

    MillerOut mo = miller_j(rd.mu, Cx(x, 0.0), rd.ell, false);
    if (mo.rel_err > tol)
        throw ConvergenceError("Miller normalization lost too many digits");
    out.j0 = mo.at_ell;
    out.j1 = mo.at_ell1;
    if (need_y) {
        Cx jmu = mo.at_mu.value();
        Cx jmu1 = mo.at_mu1.value();
        Cx jpmu = (rd.mu / x) * jmu - jmu1;     // J'_mu
        Cx w = cf2_h1(rd.mu, x);
        // Wronskian W[J, H1] = 2i/(pi x); the J*(cf2) - J' form keeps the
        // expression finite across zeros of J_mu.
        Cx h1mu = Cx(0.0, 2.0 / (kPi * x)) / (jmu * w - jpmu);
        Cx h1mu1 = (rd.mu / x - w) * h1mu;
        Scaled h0, h1;
        up_recurrence(rd.mu, Cx(x, 0.0), rd.ell, -1.0,
                      Scaled::of(h1mu), Scaled::of(h1mu1), &h0, &h1);
        const Cx mi(0.0, -1.0);
        out.y0 = Scaled::sub(h0, out.j0).times(mi);   // Y = -i (H1 - J)
        out.y1 = Scaled::sub(h1, out.j1).times(mi);
        out.has_y = true;
    }
    return out;
}

} // namespace vortexab::specfun::detail
