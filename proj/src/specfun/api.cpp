#include "detail.hpp"

#include <cmath>
#include <sstream>

// Public dispatch: envelope checks, branch bookkeeping (negative orders,
// negative real axis, lower half-plane), and assembly of the five kinds from
// the three engines.  Everything internal moves in Scaled (mantissa,
// power-of-two) form; only the outermost call collapses to a double complex.

namespace vortexab::specfun {

using namespace detail;

namespace {

struct Pair { Scaled f0, f1; };   // F_nu, F_{nu+1}

Pair pair_core(Kind kind, Cx nu, Cx z, double tol);

void check_inputs(Cx nu, Cx z) {
    if (!std::isfinite(nu.real()) || !std::isfinite(nu.imag()) ||
        !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("non-finite order or argument");
    if (std::abs(nu) > kOrderMax * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "order magnitude " << std::abs(nu) << " exceeds envelope " << kOrderMax;
        throw EnvelopeError(os.str());
    }
    if (std::abs(z) > kArgMax * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "argument magnitude " << std::abs(z) << " exceeds envelope " << kArgMax;
        throw EnvelopeError(os.str());
    }
}

double pick_tol(Cx nu, Cx z) {
    double anu = std::max(1.0, std::abs(nu));
    bool plain_order = std::fabs(nu.imag()) <= 1e-13 * anu ||
                       std::fabs(nu.real()) <= 1e-13 * anu;   // real or purely imaginary
    bool real_arg = z.imag() == 0.0;
    return (plain_order && real_arg) ? kTolReal : kTolComplex;
}

// Snap nearly-real arguments onto the axis (keeping the side of the cut).
Cx snap(Cx z) {
    if (z.imag() != 0.0 && std::fabs(z.imag()) <= 1e-14 * std::abs(z))
        return Cx(z.real(), std::copysign(0.0, z.imag()));
    return z;
}

Pair pair_at_zero(Kind kind, Cx nu) {
    if (kind == Kind::Y || kind == Kind::H1 || kind == Kind::K)
        throw DomainError("Y/H1/K are singular at argument 0");
    // J and I at 0: 1 at order 0, 0 for Re nu > 0 and negative integers.
    auto val = [](Cx order) -> Scaled {
        if (std::abs(order) < 1e-300) return Scaled{Cx(1.0, 0.0), 0};
        double oip;
        if (order.real() > 1e-13 || near_integer(order, &oip)) return Scaled::zero();
        throw DomainError("J/I at argument 0 need a non-negative or integer order");
    };
    return {val(nu), val(nu + 1.0)};
}

// Reflection to Re nu >= -1/2.  nt = -nu has Re nt > 1/2; the positive-order
// pair at (nt-1, nt) provides everything.
Pair reflect_pair(Kind kind, Cx nu, Cx z, double tol) {
    Cx nt = -nu;
    double ip;
    if (near_integer(nt, &ip)) {
        // exact integer orders: no Y/K admixture
        Cx m(ip, 0.0);
        Pair base = pair_core(kind, m - 1.0, z, tol);   // (F_{m-1}, F_m)
        double s = (std::fmod(ip, 2.0) == 0.0) ? 1.0 : -1.0;
        if (kind == Kind::J || kind == Kind::Y || kind == Kind::H1) {
            // F_{-m} = (-1)^m F_m (J, Y); H1 likewise at integer order
            return {base.f1.times(s), base.f0.times(-s)};
        }
        return {base.f1, base.f0};   // I_{-m} = I_m, K_{-m} = K_m
    }

    Scaled c = cospi_scaled(nt);
    Scaled s = sinpi_scaled(nt);
    switch (kind) {
        case Kind::J: {
            Pair j = pair_core(Kind::J, nt - 1.0, z, tol);
            Pair y = pair_core(Kind::Y, nt - 1.0, z, tol);
            // J_{-m} = cos(m pi) J_m - sin(m pi) Y_m ; at m-1 both trig flip sign
            Scaled f0 = Scaled::sub(j.f1.times(c), y.f1.times(s));
            Scaled f1 = Scaled::sub(y.f0.times(s), j.f0.times(c));
            return {f0, f1};
        }
        case Kind::Y: {
            Pair j = pair_core(Kind::J, nt - 1.0, z, tol);
            Pair y = pair_core(Kind::Y, nt - 1.0, z, tol);
            // Y_{-m} = sin(m pi) J_m + cos(m pi) Y_m
            Scaled f0 = Scaled::add(j.f1.times(s), y.f1.times(c));
            Scaled f1 = Scaled::sub(Scaled::zero(), Scaled::add(j.f0.times(s), y.f0.times(c)));
            return {f0, f1};
        }
        case Kind::H1: {
            Pair h = pair_core(Kind::H1, nt - 1.0, z, tol);
            // H1_{-m} = e^{i m pi} H1_m
            Scaled rot = Scaled::expc(Cx(0.0, kPi) * nt);
            return {h.f1.times(rot), h.f0.times(rot).times(-1.0)};
        }
        case Kind::I: {
            Pair i = pair_core(Kind::I, nt - 1.0, z, tol);
            Pair k = pair_core(Kind::K, nt - 1.0, z, tol);
            // I_{-m} = I_m + (2/pi) sin(m pi) K_m
            Scaled f0 = Scaled::add(i.f1, k.f1.times(s).times(2.0 / kPi));
            Scaled f1 = Scaled::sub(i.f0, k.f0.times(s).times(2.0 / kPi));
            return {f0, f1};
        }
        case Kind::K: {
            Pair k = pair_core(Kind::K, nt - 1.0, z, tol);
            return {k.f1, k.f0};   // K is even in the order
        }
    }
    throw DomainError("unreachable kind");
}

Pair from_jy(const JyPair& jy, Kind kind) {
    switch (kind) {
        case Kind::J: return {jy.j0, jy.j1};
        case Kind::Y: return {jy.y0, jy.y1};
        case Kind::H1: {
            const Cx I(0.0, 1.0);
            return {Scaled::add(jy.j0, jy.y0.times(I)), Scaled::add(jy.j1, jy.y1.times(I))};
        }
        default: break;
    }
    throw DomainError("unreachable kind");
}

// z exactly on the negative real axis; w = -z > 0, sg follows the signed zero.
Pair negative_axis(Kind kind, Cx nu, Cx z, double tol) {
    double w = -z.real();
    double sg = (std::signbit(z.imag())) ? -1.0 : 1.0;
    Scaled ep = Scaled::expc(Cx(0.0, sg * kPi) * nu);    // e^{i sg pi nu}
    Scaled em = Scaled::expc(Cx(0.0, -sg * kPi) * nu);   // e^{-i sg pi nu}
    switch (kind) {
        case Kind::J: {
            JyPair jy = jy_real(nu, w, false, tol);
            return {jy.j0.times(ep), jy.j1.times(ep).times(-1.0)};
        }
        case Kind::I: {
            IkPair ik = ik_engine(nu, Cx(w, 0.0), tol);
            return {ik.i0.times(ep), ik.i1.times(ep).times(-1.0)};
        }
        case Kind::K: {
            IkPair ik = ik_engine(nu, Cx(w, 0.0), tol);
            // K_nu(w e^{i sg pi}) = e^{-i sg pi nu} K_nu(w) - i sg pi I_nu(w)
            Cx f(0.0, -sg * kPi);
            Scaled f0 = Scaled::add(ik.k0.times(em), ik.i0.times(f));
            Scaled f1 = Scaled::add(ik.k1.times(em).times(-1.0), ik.i1.times(f));
            return {f0, f1};
        }
        case Kind::H1:
        case Kind::Y: {
            JyPair jy = jy_real(nu, w, true, tol);
            Pair j = from_jy(jy, Kind::J);
            Pair h = from_jy(jy, Kind::H1);
            // H1_nu(w e^{+i pi}) = e^{-i pi nu} (H1_nu(w) - 2 J_nu(w))
            // H1_nu(w e^{-i pi}) = e^{+i pi nu} H1_nu(w) + 2 e^{-i pi nu} J_nu(w)
            Scaled h0, h1;
            if (sg > 0.0) {
                h0 = Scaled::sub(h.f0, j.f0.times(2.0)).times(em);
                h1 = Scaled::sub(h.f1, j.f1.times(2.0)).times(em).times(-1.0);
            } else {
                // J coefficient e^{-i pi nu} = ep, H1 coefficient e^{+i pi nu} = em
                h0 = Scaled::add(h.f0.times(em), j.f0.times(ep).times(2.0));
                h1 = Scaled::add(h.f1.times(em), j.f1.times(ep).times(2.0)).times(-1.0);
            }
            if (kind == Kind::H1) return {h0, h1};
            // Y = -i (H1 - J) with J continued to the left axis
            Pair jneg = {j.f0.times(ep), j.f1.times(ep).times(-1.0)};
            const Cx mi(0.0, -1.0);
            return {Scaled::sub(h0, jneg.f0).times(mi), Scaled::sub(h1, jneg.f1).times(mi)};
        }
    }
    throw DomainError("unreachable kind");
}

Pair complex_plane(Kind kind, Cx nu, Cx z, double tol) {
    switch (kind) {
        case Kind::J: {
            CxPair p = j_cx(nu, z, tol);
            return {p.f0, p.f1};
        }
        case Kind::I: {
            if (z.real() >= 0.0) {
                CxPair p = i_cx(nu, z, tol);
                return {p.f0, p.f1};
            }
            double sg = (z.imag() > 0.0) ? 1.0 : -1.0;
            Cx w = z * std::exp(Cx(0.0, -sg * kPi));
            CxPair p = i_cx(nu, w, tol);
            Scaled rot = Scaled::expc(Cx(0.0, sg * kPi) * nu);
            return {p.f0.times(rot), p.f1.times(rot).times(-1.0)};
        }
        case Kind::K: {
            if (z.real() > 0.0) {
                CxPair p = k_pair(nu, z, tol);
                return {p.f0, p.f1};
            }
            double sg = (z.imag() > 0.0) ? 1.0 : -1.0;
            Cx w = z * std::exp(Cx(0.0, -sg * kPi));
            CxPair kp = k_pair(nu, w, tol);
            CxPair ip = i_cx(nu, w, tol);
            Scaled em = Scaled::expc(Cx(0.0, -sg * kPi) * nu);
            Cx f(0.0, -sg * kPi);
            return {Scaled::add(kp.f0.times(em), ip.f0.times(f)),
                    Scaled::add(kp.f1.times(em).times(-1.0), ip.f1.times(f))};
        }
        case Kind::H1: {
            if (z.imag() > 0.0) {
                CxPair p = h1_cx(nu, z, tol);
                return {p.f0, p.f1};
            }
            // Im z < 0: H1 = 2J - H2, H2_nu(z) = conj(H1_conj(nu)(conj z))
            CxPair j = j_cx(nu, z, tol);
            CxPair hup = h1_cx(std::conj(nu), std::conj(z), tol);
            Scaled h2_0{std::conj(hup.f0.m), hup.f0.e2};
            Scaled h2_1{std::conj(hup.f1.m), hup.f1.e2};
            return {Scaled::sub(j.f0.times(2.0), h2_0), Scaled::sub(j.f1.times(2.0), h2_1)};
        }
        case Kind::Y: {
            Pair h = complex_plane(Kind::H1, nu, z, tol);
            CxPair j = j_cx(nu, z, tol);
            const Cx mi(0.0, -1.0);
            return {Scaled::sub(h.f0, j.f0).times(mi), Scaled::sub(h.f1, j.f1).times(mi)};
        }
    }
    throw DomainError("unreachable kind");
}

Pair pair_core(Kind kind, Cx nu, Cx z, double tol) {
    if (nu.real() < -0.5 - 1e-13) return reflect_pair(kind, nu, z, tol);
    z = snap(z);
    if (z.real() == 0.0 && z.imag() == 0.0) return pair_at_zero(kind, nu);
    if (z.imag() == 0.0) {
        if (z.real() > 0.0) {
            double x = z.real();
            if (kind == Kind::I || kind == Kind::K) {
                IkPair ik = ik_engine(nu, Cx(x, 0.0), tol);
                if (kind == Kind::I) return {ik.i0, ik.i1};
                return {ik.k0, ik.k1};
            }
            JyPair jy = jy_real(nu, x, kind != Kind::J, tol);
            return from_jy(jy, kind);
        }
        return negative_axis(kind, nu, z, tol);
    }
    return complex_plane(kind, nu, z, tol);
}

Scaled scale_factor(Kind kind, Cx z) {
    switch (kind) {
        case Kind::J:
        case Kind::Y: return Scaled::expc(Cx(-std::fabs(z.imag()), 0.0));
        case Kind::I: return Scaled::expc(Cx(-z.real(), 0.0));
        case Kind::K: return Scaled::expc(z);
        case Kind::H1: return Scaled::expc(Cx(0.0, -1.0) * z);
    }
    return Scaled{Cx(1.0, 0.0), 0};
}

} // namespace

Cx cyl_eval(const EvalRequest& req) {
    check_inputs(req.order, req.argument);
    double tol = pick_tol(req.order, snap(req.argument));
    Pair p = pair_core(req.kind, req.order, req.argument, tol);
    Scaled v = p.f0;
    if (req.scaled) v = v.times(scale_factor(req.kind, snap(req.argument)));
    return v.value();
}

Cx cyl_eval(Kind kind, Cx order, Cx argument, bool scaled) {
    return cyl_eval(EvalRequest{kind, order, argument, scaled});
}

Cx cyl_derivative(Kind kind, Cx order, Cx argument) {
    check_inputs(order, argument);
    Cx z = snap(argument);
    if (z.real() == 0.0 && z.imag() == 0.0)
        throw DomainError("derivative at argument 0 is not provided");
    double tol = pick_tol(order, z);
    // two passes give Z_{v-1}, Z_v, Z_{v+1}
    Pair lo = pair_core(kind, order - 1.0, z, tol);
    Pair hi = pair_core(kind, order, z, tol);
    Scaled d;
    switch (kind) {
        case Kind::J:
        case Kind::Y:
        case Kind::H1: d = Scaled::sub(lo.f0, hi.f1).times(0.5); break;
        case Kind::I: d = Scaled::add(lo.f0, hi.f1).times(0.5); break;
        case Kind::K: d = Scaled::add(lo.f0, hi.f1).times(-0.5); break;
    }
    return d.value();
}

Cx cyl_ratio(Kind kind, Cx order, Cx argument) {
    check_inputs(order, argument);
    Cx z = snap(argument);
    if (z.real() == 0.0 && z.imag() == 0.0) {
        // J/I ratio has the finite limit 0 at the origin for Re order >= 0
        if (kind == Kind::J || kind == Kind::I) {
            if (std::abs(order) < 1e-300 || order.real() > 1e-13) return Cx(0.0, 0.0);
            throw ZeroDenominator("denominator order vanishes at argument 0");
        }
        throw DomainError("Y/H1/K are singular at argument 0");
    }
    double tol = pick_tol(order, z);
    Pair p = pair_core(kind, order, z, tol);
    return ratio_of(p.f1, p.f0);
}

JandH1 eval_j_h1(Cx order, double x) {
    check_inputs(order, Cx(x, 0.0));
    if (x <= 0.0) throw DomainError("eval_j_h1 needs a positive real argument");
    if (order.real() < -0.5 - 1e-13) {
        // cold path; callers in this project keep Re order >= 0
        JandH1 r;
        r.j = cyl_eval(Kind::J, order, Cx(x, 0.0));
        r.h1 = cyl_eval(Kind::H1, order, Cx(x, 0.0));
        return r;
    }
    double tol = pick_tol(order, Cx(x, 0.0));
    JyPair jy = jy_real(order, x, true, tol);
    const Cx I(0.0, 1.0);
    JandH1 r;
    r.j = jy.j0.value();
    r.h1 = Scaled::add(jy.j0, jy.y0.times(I)).value();
    return r;
}

} // namespace vortexab::specfun
