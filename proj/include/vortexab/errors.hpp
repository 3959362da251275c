#ifndef VORTEXAB_ERRORS_HPP
#define VORTEXAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vortexab {

// Base class for everything thrown on purpose by this library.  The category()
// string is stable across releases and is what the CLI prints on stderr, so
// scripts can match on it without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& what)
        : std::runtime_error(what), cat_(std::move(category)) {}
    const std::string& category() const noexcept { return cat_; }
private:
    std::string cat_;
};

// --- special-function layer ------------------------------------------------

// Gamma evaluated at a non-positive integer.
struct PoleError : Error {
    explicit PoleError(const std::string& w) : Error("E_GAMMA_POLE", w) {}
};

// Argument outside the mathematical domain of the requested function
// (e.g. Y/K/H1 at z = 0).
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error("E_SPECFUN_DOMAIN", w) {}
};

// Input outside the supported order/argument envelope, or a result whose
// magnitude is not representable in double precision.
struct EnvelopeError : Error {
    explicit EnvelopeError(const std::string& w) : Error("E_SPECFUN_ENVELOPE", w) {}
};

// An iteration failed to meet the accuracy target.  Thrown instead of
// returning a silently wrong value.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& w) : Error("E_SPECFUN_CONVERGENCE", w) {}
};

// Ratio request whose denominator function vanishes to working precision.
struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& w) : Error("E_ZERO_DENOMINATOR", w) {}
};

// --- medium / scattering layer ---------------------------------------------

// Dispersion relation degenerate: depth h equals sqrt(3) * capillary length,
// so the quartic coefficient vanishes and delta is undefined.
struct DegenerateDispersion : Error {
    explicit DegenerateDispersion(const std::string& w) : Error("E_DISPERSION_DEGENERATE", w) {}
};

// Modal linear system numerically singular.
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& w) : Error("E_SINGULAR_SYSTEM", w) {}
};

// delta in [-1, 0): the squared phase velocity is non-positive and no
// propagating wave exists.
struct NonPropagating : Error {
    explicit NonPropagating(const std::string& w) : Error("E_NON_PROPAGATING", w) {}
};

// Cubic dispersion model produced a non-positive squared frequency.
struct EvanescentError : Error {
    explicit EvanescentError(const std::string& w) : Error("E_EVANESCENT", w) {}
};

// delta in [-1, 0): the extra outer wavenumber q*a = beta*sqrt(|delta|-1)
// would be imaginary, so the second scattered branch cannot radiate.
struct EvanescentOuter : Error {
    explicit EvanescentOuter(const std::string& w) : Error("E_EVANESCENT_OUTER", w) {}
};

// --- configuration layer ----------------------------------------------------

// Config file syntax error (carries a line number in the message).
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("E_CONFIG_PARSE", w) {}
};

// Config parsed fine but violates a physical or structural constraint.
struct ConstraintError : Error {
    ConstraintError(std::string category, const std::string& w) : Error(std::move(category), w) {}
    explicit ConstraintError(const std::string& w) : Error("E_CONFIG_CONSTRAINT", w) {}
};

// Figure-preset name outside the published set.
struct UnknownPreset : Error {
    explicit UnknownPreset(const std::string& w) : Error("E_UNKNOWN_PRESET", w) {}
};

// Filesystem trouble while writing outputs.
struct OutputError : Error {
    explicit OutputError(const std::string& w) : Error("E_OUTPUT", w) {}
};

} // namespace vortexab

#endif
