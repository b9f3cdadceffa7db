#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace greenkern {

// Base class for all typed errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation
// (r <= 0, spectral parameter on the spectrum, wrong dimension, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Evaluation requested within 1e-12 of a Gamma/digamma pole.  For the
// Coulomb model these poles are the bound-state energies, so callers
// must be able to distinguish them from ordinary domain errors.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

// A series did not converge within its SeriesBudget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// Adaptive quadrature ran out of subdivisions; carries the best value
// obtained together with its error estimate.
class ToleranceNotMet : public Error {
public:
    ToleranceNotMet(const std::string& what, std::complex<double> best,
                    double estimate)
        : Error(what), best_value(best), error_estimate(estimate) {}

    std::complex<double> best_value;
    double error_estimate;
};

// An integrand returned NaN or Inf at a quadrature node.
class NonFiniteIntegrand : public Error {
public:
    explicit NonFiniteIntegrand(const std::string& what) : Error(what) {}
};

// Least-squares system too ill-conditioned to solve (radii clustered).
class IllConditioned : public Error {
public:
    explicit IllConditioned(const std::string& what) : Error(what) {}
};

// Richardson extrapolation produced growing estimates.
class ExtrapolationDiverged : public Error {
public:
    explicit ExtrapolationDiverged(const std::string& what) : Error(what) {}
};

// Q(zeta) - diag(alpha) is numerically singular (zeta is a perturbed
// eigenvalue).
class SingularQ : public Error {
public:
    explicit SingularQ(const std::string& what) : Error(what) {}
};

// Bound-state search window reaches into the essential spectrum.
class WindowTouchesSpectrum : public Error {
public:
    explicit WindowTouchesSpectrum(const std::string& what) : Error(what) {}
};

}  // namespace greenkern
