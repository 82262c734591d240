#pragma once

#include <stdexcept>
#include <string>

namespace infobridge {

/// Base class for all domain errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class NonIntegrable : public Error {
public:
    using Error::Error;
};

/// Posterior normalizing integral underflowed (observation implausibly far
/// from the support of the bridge marginals).
class DegenerateObservation : public Error {
public:
    using Error::Error;
};

/// The defaulted branch of the posterior needs the realized default time,
/// which is not a function of the observed value alone.
class DefaultedNeedsTau : public Error {
public:
    using Error::Error;
};

/// Survival probability vanishes on the pricing horizon.
class ZeroSurvival : public Error {
public:
    using Error::Error;
};

/// Fee-leg integral vanishes; fair spread undefined.
class DegenerateFeeLeg : public Error {
public:
    using Error::Error;
};

/// A conditioning bin received no samples.
class EmptyBin : public Error {
public:
    using Error::Error;
};

/// Precondition violation on an operation's inputs.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Config file problem; carries the 1-based line where parsing failed
/// (0 when not tied to a specific line).
class ConfigError : public Error {
public:
    ConfigError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

}  // namespace infobridge
