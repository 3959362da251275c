#ifndef VORTEXAB_SPECFUN_DETAIL_HPP
#define VORTEXAB_SPECFUN_DETAIL_HPP

#include <cmath>
#include <complex>
#include <limits>

#include "vortexab/errors.hpp"
#include "vortexab/specfun.hpp"

// Internal machinery shared by the specfun translation units.  Nothing here is
// part of the public surface.

namespace vortexab::specfun::detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEps = 2.220446049250313e-16;

// Envelope limits advertised in the public header.
inline constexpr double kOrderMax = 150.0;
inline constexpr double kArgMax = 250.0;

// Accuracy targets; the evaluators throw ConvergenceError when their internal
// error estimate exceeds the applicable target.
inline constexpr double kTolReal = 1e-10;
inline constexpr double kTolComplex = 1e-8;

// A complex number carried as m * 2^e2 so recurrence ladders can span many
// hundreds of decades without over/underflowing.  Renormalization uses exact
// powers of two, so it introduces no rounding.
struct Scaled {
    Cx m{0.0, 0.0};
    long e2 = 0;

    static Scaled zero() { return {Cx(0.0, 0.0), 0}; }

    static Scaled of(Cx v) {
        Scaled s{v, 0};
        s.normalize();
        return s;
    }

    // e^{w} as a Scaled value, for arbitrary complex w (Re w far outside the
    // double exponent range included).
    static Scaled expc(Cx w) {
        const double ln2 = 0.6931471805599453094172321;
        double sh = std::floor(w.real() / ln2);
        if (!std::isfinite(sh)) throw EnvelopeError("exponent not finite in scaled exp");
        Cx rest = Cx(w.real() - sh * ln2, w.imag());
        return Scaled{std::exp(rest), static_cast<long>(sh)};
    }

    bool is_zero() const { return m.real() == 0.0 && m.imag() == 0.0; }

    void normalize() {
        double a = std::max(std::fabs(m.real()), std::fabs(m.imag()));
        if (a == 0.0) { e2 = 0; return; }
        int ex = std::ilogb(a);
        if (ex > 60 || ex < -60) {
            m = Cx(std::ldexp(m.real(), -ex), std::ldexp(m.imag(), -ex));
            e2 += ex;
        }
    }

    Scaled times(const Scaled& o) const {
        Scaled r{m * o.m, e2 + o.e2};
        r.normalize();
        return r;
    }

    Scaled times(Cx c) const {
        Scaled r{m * c, e2};
        r.normalize();
        return r;
    }

    Scaled over(const Scaled& o) const {
        Scaled r{m / o.m, e2 - o.e2};
        r.normalize();
        return r;
    }

    // Collapse to a plain complex double.  Overflow -> EnvelopeError, deep
    // underflow -> exact zero (documented behavior).
    Cx value() const {
        if (is_zero()) return Cx(0.0, 0.0);
        if (e2 > 1020) throw EnvelopeError("result magnitude overflows double precision");
        if (e2 < -1070) return Cx(0.0, 0.0);
        return Cx(std::ldexp(m.real(), static_cast<int>(e2)),
                  std::ldexp(m.imag(), static_cast<int>(e2)));
    }

    double abs_log2() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return std::log2(std::abs(m)) + static_cast<double>(e2);
    }

    static Scaled add(const Scaled& a, const Scaled& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long d = a.e2 - b.e2;
        if (d > 120) return a;
        if (d < -120) return b;
        // express b in a's exponent: b = (b.m * 2^{-d}) * 2^{a.e2}
        Cx bm(std::ldexp(b.m.real(), static_cast<int>(-d)),
              std::ldexp(b.m.imag(), static_cast<int>(-d)));
        Scaled r{a.m + bm, a.e2};
        r.normalize();
        return r;
    }

    static Scaled sub(const Scaled& a, const Scaled& b) {
        return add(a, Scaled{-b.m, b.e2});
    }
};

inline Cx ratio_of(const Scaled& num, const Scaled& den) {
    if (den.is_zero()) throw ZeroDenominator("denominator function vanishes");
    Scaled r = num.over(den);
    return r.value();
}

// Reduced order: nu = mu + ell with ell integral >= 0 and Re mu in [-1/2, 1/2).
struct Reduced {
    Cx mu;
    int ell;
};

inline Reduced reduce_order(Cx nu) {
    int ell = static_cast<int>(std::floor(nu.real() + 0.5));
    if (ell < 0) ell = 0; // callers guarantee Re nu >= -1/2 already
    return {nu - static_cast<double>(ell), ell};
}

inline bool near_integer(Cx nu, double* intpart) {
    double r = std::round(nu.real());
    if (std::fabs(nu.imag()) < 1e-14 && std::fabs(nu.real() - r) < 1e-14) {
        *intpart = r;
        return true;
    }
    return false;
}

// --- gamma helpers (gamma.cpp) ---------------------------------------------

// 1/Gamma(1+mu) by the Taylor series of the reciprocal gamma function;
// accurate for |mu| <= ~0.6 and free of the cancellation that the direct
// Lanczos difference has near mu = 0.
Cx recip_gamma1p(Cx mu);

// Temme's auxiliary pair:
//   gam1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu)   (-> -EulerGamma at 0)
//   gam2 = [1/Gamma(1-mu) + 1/Gamma(1+mu)] / 2
// valid for reduced |Re mu| <= 1/2 (series for small |mu|, Lanczos otherwise).
void temme_gammas(Cx mu, Cx* gam1, Cx* gam2, Cx* rg_plus, Cx* rg_minus);

// --- engine results ---------------------------------------------------------

struct JyPair {
    Scaled j0, j1;   // J_nu, J_{nu+1}
    Scaled y0, y1;   // Y_nu, Y_{nu+1} (valid when has_y)
    bool has_y = false;
};

struct IkPair {
    Scaled i0, i1;   // I_nu, I_{nu+1}
    Scaled k0, k1;   // K_nu, K_{nu+1}
};

// Real-argument engine, Re nu >= -1/2, x > 0.
JyPair jy_real(Cx nu, double x, bool need_y, double tol);

// Modified-function engine, Re nu >= -1/2, Re z > 0 (real positive included).
IkPair ik_engine(Cx nu, Cx z, double tol);

// Complex-argument J (and the I variant) for Re nu >= -1/2, any z off the
// negative real axis; picks series / Miller / asymptotics internally.
struct CxPair { Scaled f0, f1; };   // F_nu, F_{nu+1}
CxPair j_cx(Cx nu, Cx z, double tol);
CxPair i_cx(Cx nu, Cx z, double tol);

// H1 for complex z (Im z != 0), Re nu >= -1/2, via the K rotation.
CxPair h1_cx(Cx nu, Cx z, double tol);

// Power series for J (or I) at a single order; returns the value and a
// relative cancellation estimate.  Always converges; the caller decides
// whether the estimate is acceptable.
Scaled j_series_one(Cx nu, Cx z, bool modified, double* rel_err);

// Miller backward recurrence from above the turning point, normalized with
// the Neumann sum.  Returns the values at the reduced order mu, mu+1 and at
// the target orders mu+ell, mu+ell+1, plus a cancellation estimate for the
// normalization sum.  modified=true runs the I-function variant.
struct MillerOut {
    Scaled at_mu, at_mu1, at_ell, at_ell1;
    double rel_err = 0.0;
};
MillerOut miller_j(Cx mu, Cx z, int ell, bool modified);

// K_nu, K_{nu+1} without the I-side machinery (used by the H1 rotation).
CxPair k_pair(Cx nu, Cx z, double tol);

// pi-accurate trigonometry of pi*v, overflow-safe in Im v.
Scaled sinpi_scaled(Cx v);
Scaled cospi_scaled(Cx v);

// Shared ledgered three-term upward recurrence (sign=-1: J/Y/H1, +1: K).
void up_recurrence(Cx mu, Cx z, int ell, double sign, Scaled f0, Scaled f1,
                   Scaled* out0, Scaled* out1);

// Asymptotic H1/H2/I/K for large |z|; *ok=false when the expansion cannot
// reach tol (caller falls back).
Scaled h_asym(int which /*1 or 2*/, Cx nu, Cx z, double tol, bool* ok);
Scaled k_asym(Cx nu, Cx z, double tol, bool* ok);

} // namespace vortexab::specfun::detail

#endif
