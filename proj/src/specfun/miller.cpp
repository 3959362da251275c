#include "detail.hpp"

#include <cmath>

// Miller's backward recurrence for J (and for I with the sign-flipped
// recurrence).  The ladder starts well above both the target order and the
// turning point |z|, runs down to the reduced order mu, and is normalized at
// the end with the Neumann identity
//     sum_k (mu+2k) Gamma(mu+k)/k! * J_{mu+2k}(z) = (z/2)^mu
// (for I the same sum with alternating signs).  All running quantities share
// a power-of-two ledger so ladders spanning hundreds of decades never leave
// the double range, and renormalization is exact.

namespace vortexab::specfun::detail {

namespace {

// How far above max(ell, |z|) the ladder has to start so the contamination of
// the minimal solution has decayed below ~e^-48.
int start_index(double az, int ell) {
    int p = std::max(ell + 1, static_cast<int>(std::ceil(az)));
    double acc = 0.0;
    while (acc > -48.0 && p < 5000) {
        ++p;
        acc += std::log(az / (2.0 * p));
    }
    return p;
}

} // namespace

MillerOut miller_j(Cx mu, Cx z, int ell, bool modified) {
    const double az = std::abs(z);
    const int pstart = start_index(az, ell);
    const int ktop = pstart / 2;
    const Cx inv2z = 2.0 / z;
    const double rsign = modified ? 1.0 : -1.0;   // J: J_{p-1} = (2p/z)J_p - J_{p+1}

    // Leading normalization coefficient c_ktop = (mu+2k) Gamma(mu+k)/k!,
    // with the alternating sign for the modified variant folded in.
    Cx ck = (mu + 2.0 * ktop) *
            std::exp(log_gamma_cx(mu + static_cast<double>(ktop)) -
                     log_gamma_cx(static_cast<double>(ktop) + 1.0));
    double csign = (modified && (ktop % 2 != 0)) ? -1.0 : 1.0;

    Cx jp1(0.0, 0.0);          // ladder value at p+1
    Cx jp0(1e-130, 0.0);       // ladder value at p
    Cx sum(0.0, 0.0);
    long shift = 0;            // running values are (true * C) * 2^{-shift}
    Scaled at_ell, at_ell1;
    double max_term_log2 = -1e30;

    for (int p = pstart; p >= 0; --p) {
        if (p == ell) {
            at_ell = Scaled{jp0, shift};
            at_ell.normalize();
            at_ell1 = Scaled{jp1, shift};
            at_ell1.normalize();
        }
        if (p % 2 == 0) {
            Cx term = csign * ck * jp0;
            sum += term;
            double at = std::abs(term);
            if (at > 0.0) {
                double l2 = std::log2(at) + static_cast<double>(shift);
                if (l2 > max_term_log2) max_term_log2 = l2;
            }
            int k = p / 2;
            if (k >= 1) {
                // c_{k-1} from c_k; the k = 1 step is written pole-free.
                if (k == 1)
                    ck = ck / (mu + 2.0);
                else
                    ck = ck * (mu + 2.0 * (k - 1.0)) * static_cast<double>(k) /
                         ((mu + 2.0 * k) * (mu + (static_cast<double>(k) - 1.0)));
                if (modified) csign = -csign;
            }
        }
        if (p == 0) break;
        // step down to p-1
        Cx nxt = (mu + static_cast<double>(p)) * inv2z * jp0 + rsign * jp1;
        jp1 = jp0;
        jp0 = nxt;
        double m = std::max(std::fabs(jp0.real()), std::fabs(jp0.imag()));
        if (m > 0x1p500) {
            jp0 *= 0x1p-600;
            jp1 *= 0x1p-600;
            sum *= 0x1p-600;
            shift += 600;
        }
    }

    Scaled at_mu{jp0, shift};
    at_mu.normalize();
    Scaled at_mu1{jp1, shift};
    at_mu1.normalize();
    Scaled snorm{sum, shift};
    snorm.normalize();
    if (snorm.is_zero()) {
        // total cancellation; report an unusable estimate so callers reroute
        MillerOut bad;
        bad.at_mu = bad.at_mu1 = bad.at_ell = bad.at_ell1 = Scaled::zero();
        bad.rel_err = 1e300;
        return bad;
    }

    // sigma = (z/2)^mu / S maps ladder values to true function values.
    Scaled sigma = Scaled::expc(mu * std::log(0.5 * z)).over(snorm);

    MillerOut out;
    out.at_mu = at_mu.times(sigma);
    out.at_mu1 = at_mu1.times(sigma);
    out.at_ell = at_ell.times(sigma);
    out.at_ell1 = at_ell1.times(sigma);
    out.rel_err = kEps * std::exp2(std::min(600.0, max_term_log2 - snorm.abs_log2())) + 4e-15;
    return out;
}

} // namespace vortexab::specfun::detail
