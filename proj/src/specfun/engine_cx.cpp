#include "detail.hpp"

#include <cmath>

// Modified functions I, K for complex argument in the right half-plane, the
// complex-argument J/I ladder paths, the K-rotation route to H1, and the
// large-argument Hankel asymptotics.  Together with engine_real.cpp this
// covers every regime the public API dispatches to.

namespace vortexab::specfun::detail {

namespace {

// CF1 (Lentz): I_{nu+1}(z)/I_nu(z) = K_k [ 1 / (2(nu+k)/z) ].
Cx cf1_i_ratio(Cx nu, Cx z) {
    const double tiny = 1e-290;
    Cx f(tiny, 0.0), C(tiny, 0.0), D(0.0, 0.0);
    for (int k = 1; k <= 30000; ++k) {
        Cx b = 2.0 * (nu + static_cast<double>(k)) / z;
        D = b + D;
        if (std::abs(D) < tiny) D = Cx(tiny, 0.0);
        D = 1.0 / D;
        C = b + 1.0 / C;
        if (std::abs(C) < tiny) C = Cx(tiny, 0.0);
        Cx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return f;
    }
    throw ConvergenceError("CF1 for I ratio did not converge");
}

// Temme's series for K_mu(z), K_{mu+1}(z); |z| <= 2, |Re mu| <= 1/2.
void temme_k(Cx mu, Cx z, Cx* kmu, Cx* kmu1) {
    Cx gam1, gam2, gp, gm;
    temme_gammas(mu, &gam1, &gam2, &gp, &gm);
    Cx d = -std::log(0.5 * z);
    Cx e = mu * d;
    Cx pm = kPi * mu;
    Cx fact = (std::abs(pm) < 1e-4)
                  ? 1.0 + pm * pm * (1.0 / 6.0)
                  : pm / std::sin(pm);
    Cx sh = (std::abs(e) < 1e-4)
                ? 1.0 + e * e * (1.0 / 6.0)
                : std::sinh(e) / e;
    Cx ff = fact * (gam1 * std::cosh(e) + gam2 * sh * d);
    Cx E = std::exp(e);
    Cx p = 0.5 * E / gp;        // = Gamma(1+mu) e^{mu d} / 2
    Cx q = 0.5 / (E * gm);      // = Gamma(1-mu) e^{-mu d} / 2
    Cx c(1.0, 0.0);
    Cx d2 = 0.25 * z * z;
    Cx sum = ff;
    Cx sum1 = p;
    Cx mu2 = mu * mu;
    for (int i = 1; i <= 300; ++i) {
        double di = i;
        ff = (di * ff + p + q) / (di * di - mu2);
        c *= d2 / di;
        p /= (di - mu);
        q /= (di + mu);
        Cx del = c * ff;
        sum += del;
        Cx del1 = c * (p - di * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * 1e-17 && i > 2) break;
    }
    *kmu = sum;
    *kmu1 = sum1 * (2.0 / z);
}

// Thompson-Barnett CF2 for K_mu(z), K_{mu+1}(z); |z| > 2, Re z > 0.
// Returns e^{+z}-scaled values (the caller multiplies expc(-z) back in).
void cf2_k(Cx mu, Cx z, Cx* kmu_scaled, Cx* kmu1_scaled) {
    Cx b = 2.0 * (1.0 + z);
    Cx d = 1.0 / b;
    Cx h = d, delh = d;
    Cx q1(0.0, 0.0), q2(1.0, 0.0);
    Cx a1 = 0.25 - mu * mu;
    Cx q = a1, c = a1;
    Cx a = -a1;
    Cx s = 1.0 + q * delh;
    bool converged = false;
    for (int i = 2; i <= 20000; ++i) {
        a -= 2.0 * (i - 1.0);
        c = -a * c / static_cast<double>(i);
        Cx qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        Cx dels = q * delh;
        s += dels;
        if (std::abs(dels) < std::abs(s) * 1e-16) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError("CF2 for K did not converge");
    h = a1 * h;
    *kmu_scaled = std::sqrt(kPi / (2.0 * z)) / s;
    *kmu1_scaled = *kmu_scaled * (mu + z + 0.5 - h) / z;
}

// Shared coefficient walk for the Hankel-type asymptotic series:
// t_k = t_{k-1} * (4 nu^2 - (2k-1)^2) / (8k) * fac.  Stops when converged or
// at the smallest term; *est reports the truncation size.
Cx asym_sum(Cx nu, Cx fac, double* est) {
    Cx nu4 = 4.0 * nu * nu;
    Cx t(1.0, 0.0), s(1.0, 0.0);
    double prev = 1.0;
    *est = 0.0;
    for (int k = 1; k <= 120; ++k) {
        double tk = 2.0 * k - 1.0;
        t *= (nu4 - tk * tk) / (8.0 * k) * fac;
        double at = std::abs(t);
        if (at >= prev && k > 2) {
            *est = at / std::max(std::abs(s), 1e-300);
            return s;   // divergence onset: stop at smallest term
        }
        s += t;
        prev = at;
        if (at < 1e-17 * std::abs(s)) {
            *est = at / std::abs(s);
            return s;
        }
    }
    *est = prev / std::max(std::abs(s), 1e-300);
    return s;
}

} // namespace

Scaled h_asym(int which, Cx nu, Cx z, double tol, bool* ok) {
    const Cx I(0.0, 1.0);
    Cx sgn = (which == 1) ? I : -I;
    double est;
    Cx s = asym_sum(nu, sgn / z, &est);
    *ok = est < 0.25 * tol;
    Cx omega = z - (0.5 * nu + 0.25) * kPi;
    Scaled e = Scaled::expc(sgn * omega);   // e^{+i omega} or e^{-i omega}
    return e.times(std::sqrt(2.0 / (kPi * z))).times(s);
}

Scaled k_asym(Cx nu, Cx z, double tol, bool* ok) {
    double est;
    Cx s = asym_sum(nu, 1.0 / z, &est);
    *ok = est < 0.25 * tol;
    return Scaled::expc(-z).times(std::sqrt(kPi / (2.0 * z))).times(s);
}

static Scaled i_asym(Cx nu, Cx z, double tol, bool* ok) {
    double est1, est2;
    Cx s1 = asym_sum(nu, -1.0 / z, &est1);
    Cx s2 = asym_sum(nu, 1.0 / z, &est2);
    *ok = (est1 < 0.25 * tol) && (est2 < 0.25 * tol);
    double sg = (z.imag() >= 0.0) ? 1.0 : -1.0;
    Cx rsq = 1.0 / std::sqrt(2.0 * kPi * z);
    Scaled grow = Scaled::expc(z).times(rsq).times(s1);
    Scaled decay = Scaled::expc(-z + sg * Cx(0.0, kPi) * (nu + 0.5)).times(rsq).times(s2);
    return Scaled::add(grow, decay);
}

IkPair ik_engine(Cx nu, Cx z, double tol) {
    Reduced rd = reduce_order(nu);
    IkPair out;

    // CF1 ratio at the full order, then run the pair down to mu.
    Cx rnu = cf1_i_ratio(nu, z);
    Cx a(1.0, 0.0);        // ladder I*_p, starting at p = nu
    Cx b = rnu;            // I*_{p+1}
    long e2 = 0;
    Cx inv2z = 2.0 / z;
    for (int p = rd.ell; p >= 1; --p) {
        // I_{p-1} = I_{p+1} + (2(mu+p)/z) I_p
        Cx nxt = b + (rd.mu + static_cast<double>(p)) * inv2z * a;
        b = a;
        a = nxt;
        double m = std::max(std::fabs(a.real()), std::fabs(a.imag()));
        if (m > 0x1p500) {
            a *= 0x1p-600;
            b *= 0x1p-600;
            e2 += 600;
        }
    }
    // Now a = I*_mu * 2^{e2'}, b = I*_{mu+1}; the original seed was I*_nu = 1.
    Cx rmu = b / a;

    Scaled kmu, kmu1;
    if (std::abs(z) <= 2.0) {
        Cx k0, k1;
        temme_k(rd.mu, z, &k0, &k1);
        kmu = Scaled::of(k0);
        kmu1 = Scaled::of(k1);
    } else {
        Cx k0s, k1s;
        cf2_k(rd.mu, z, &k0s, &k1s);
        Scaled damp = Scaled::expc(-z);
        kmu = damp.times(k0s);
        kmu1 = damp.times(k1s);
    }

    // Wronskian  I_mu (K_{mu+1} + r_mu K_mu) = 1/z.
    Scaled denom = Scaled::add(kmu1, kmu.times(rmu)).times(z);
    Scaled imu = Scaled{Cx(1.0, 0.0), 0}.over(denom);

    // Rescale the ladder: I_nu = I_mu * (I*_nu / I*_mu).
    Scaled imu_ladder{a, e2};
    imu_ladder.normalize();
    Scaled seed{Cx(1.0, 0.0), 0};
    out.i0 = imu.times(seed.over(imu_ladder));
    out.i1 = out.i0.times(rnu);

    up_recurrence(rd.mu, z, rd.ell, 1.0, kmu, kmu1, &out.k0, &out.k1);
    (void)tol;
    return out;
}

CxPair k_pair(Cx nu, Cx z, double tol) {
    // K alone (the H1 rotation needs no I): asymptotic shortcut when valid,
    // else Temme/CF2 at the reduced order plus the upward ladder.
    double anu = std::abs(nu);
    if (std::abs(z) >= 30.0 + 0.5 * (anu + 1.0) * (anu + 1.0)) {
        bool ok0, ok1;
        Scaled k0 = k_asym(nu, z, tol, &ok0);
        Scaled k1 = k_asym(nu + 1.0, z, tol, &ok1);
        if (ok0 && ok1) return {k0, k1};
    }
    Reduced rd = reduce_order(nu);
    Scaled kmu, kmu1;
    if (std::abs(z) <= 2.0) {
        Cx k0, k1;
        temme_k(rd.mu, z, &k0, &k1);
        kmu = Scaled::of(k0);
        kmu1 = Scaled::of(k1);
    } else {
        Cx k0s, k1s;
        cf2_k(rd.mu, z, &k0s, &k1s);
        Scaled damp = Scaled::expc(-z);
        kmu = damp.times(k0s);
        kmu1 = damp.times(k1s);
    }
    CxPair out;
    up_recurrence(rd.mu, z, rd.ell, 1.0, kmu, kmu1, &out.f0, &out.f1);
    return out;
}

CxPair h1_cx(Cx nu, Cx z, double tol) {
    // Upper half-plane only: H1_nu(z) = -(2i/pi) e^{-i pi nu/2} K_nu(-iz).
    Cx w = Cx(z.imag(), -z.real());   // -i z, Re w = Im z > 0
    CxPair kp = k_pair(nu, w, tol);
    Scaled rot = Scaled::expc(Cx(0.0, -0.5 * kPi) * nu).times(Cx(0.0, -2.0 / kPi));
    CxPair out;
    out.f0 = kp.f0.times(rot);
    out.f1 = kp.f1.times(rot).times(Cx(0.0, -1.0));  // extra e^{-i pi/2} for order nu+1
    return out;
}

// Complex-argument J (modified=false) / I (modified=true) at orders nu, nu+1.
static CxPair ji_cx(Cx nu, Cx z, bool modified, double tol) {
    double az = std::abs(z);
    double anu = std::abs(nu);
    CxPair out;

    // Series first whenever it has a chance; its own estimate decides.
    if (az <= 14.0 || anu >= az) {
        double e0, e1;
        Scaled f0 = j_series_one(nu, z, modified, &e0);
        Scaled f1 = j_series_one(nu + 1.0, z, modified, &e1);
        if (std::max(e0, e1) < 0.25 * tol) {
            out.f0 = f0;
            out.f1 = f1;
            return out;
        }
    }
    // Large argument: Hankel asymptotics.
    if (az >= 30.0 + 0.5 * (anu + 1.0) * (anu + 1.0)) {
        if (!modified) {
            bool o1, o2, o3, o4;
            Scaled a0 = h_asym(1, nu, z, tol, &o1);
            Scaled b0 = h_asym(2, nu, z, tol, &o2);
            Scaled a1 = h_asym(1, nu + 1.0, z, tol, &o3);
            Scaled b1 = h_asym(2, nu + 1.0, z, tol, &o4);
            if (o1 && o2 && o3 && o4) {
                out.f0 = Scaled::add(a0, b0).times(0.5);
                out.f1 = Scaled::add(a1, b1).times(0.5);
                return out;
            }
        } else {
            bool o1, o2;
            Scaled a0 = i_asym(nu, z, tol, &o1);
            Scaled a1 = i_asym(nu + 1.0, z, tol, &o2);
            if (o1 && o2) {
                out.f0 = a0;
                out.f1 = a1;
                return out;
            }
        }
    }
    // Middle ground: Miller ladder with the Neumann normalization.
    Reduced rd = reduce_order(nu);
    MillerOut mo = miller_j(rd.mu, z, rd.ell, modified);
    if (mo.rel_err <= tol) {
        out.f0 = mo.at_ell;
        out.f1 = mo.at_ell1;
        return out;
    }

    // Miller's estimate flags heavy cancellation in the normalization sum,
    // which happens when the argument hugs the imaginary axis (plain basis)
    // or sits deep in the right half-plane (modified basis).  The I/K engine
    // normalizes through the Wronskian instead and has no such sum; rotate
    // a plain-basis request onto it.
    if (!modified) {
        double sg = (z.imag() > 0.0) ? 1.0 : -1.0;
        Cx w = z * Cx(0.0, -sg);               // z e^{-i sg pi/2}, Re w = |Im z|
        if (w.real() > 1.0) {
            IkPair ik = ik_engine(nu, w, tol);
            Scaled rot = Scaled::expc(Cx(0.0, sg * kPi / 2.0) * nu);
            out.f0 = ik.i0.times(rot);
            out.f1 = ik.i1.times(rot).times(Cx(0.0, sg));
            return out;
        }
    } else if (z.real() > 1.0) {
        IkPair ik = ik_engine(nu, z, tol);
        out.f0 = ik.i0;
        out.f1 = ik.i1;
        return out;
    }
    throw ConvergenceError("no evaluation path met the accuracy target");
}

CxPair j_cx(Cx nu, Cx z, double tol) { return ji_cx(nu, z, false, tol); }
CxPair i_cx(Cx nu, Cx z, double tol) { return ji_cx(nu, z, true, tol); }

} // namespace vortexab::specfun::detail
