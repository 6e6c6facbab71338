#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <variant>

#include "errors.hpp"

namespace laddernet {

using Complex = std::complex<double>;

// Spectral parameter. Zero is excluded everywhere: every edge admittance
// carries a factor lambda and nothing downstream is defined at 0.
class ComplexParam {
public:
    explicit ComplexParam(Complex v) : v_(v) {
        if (v == Complex(0.0, 0.0))
            throw std::invalid_argument("spectral parameter must be nonzero");
    }
    Complex value() const noexcept { return v_; }

private:
    Complex v_;
};

// Series resistance, inductance and inverse capacitance D = 1/C of one edge.
// Impedance z(lambda) = R + L*lambda + D/lambda. At least one of the three
// must be positive, none may be negative.
struct EdgeParams {
    double R = 0.0;
    double L = 0.0;
    double D = 0.0;

    EdgeParams(double r, double l, double d) : R(r), L(l), D(d) {
        if (R < 0.0 || L < 0.0 || D < 0.0)
            throw std::invalid_argument("edge parameters must be nonnegative");
        if (R + L + D <= 0.0)
            throw std::invalid_argument("edge needs at least one positive parameter");
    }
};

// A lambda-independent edge weight: the admittance itself, given directly.
// Zero would mean a non-edge, so it is rejected.
struct FixedAdmittance {
    Complex value;

    explicit FixedAdmittance(Complex v) : value(v) {
        if (v == Complex(0.0, 0.0))
            throw std::invalid_argument("fixed admittance must be nonzero");
    }
};

using EdgeWeight = std::variant<EdgeParams, FixedAdmittance>;

namespace detail {

// |denominator| measured against the sizes of its three summands, so the
// zero test behaves the same at every scale of lambda, R, L, D.
inline bool rlc_denominator_vanishes(const EdgeParams& p, Complex z, Complex& den) {
    den = p.L * z * z + p.R * z + p.D;
    const double scale =
        std::max({1.0, std::norm(z) * p.L, std::abs(z) * p.R, p.D});
    return std::abs(den) <= 1e-14 * scale;
}

}  // namespace detail

// rho(lambda) = lambda / (L*lambda^2 + R*lambda + D), the reciprocal of the
// edge impedance.
inline Complex edge_admittance(const EdgeParams& p, ComplexParam lambda) {
    const Complex z = lambda.value();
    Complex den;
    if (detail::rlc_denominator_vanishes(p, z, den))
        throw zero_impedance_error("edge impedance vanishes at this lambda");
    return z / den;
}

inline Complex edge_admittance(const EdgeWeight& w, ComplexParam lambda) {
    if (const auto* p = std::get_if<EdgeParams>(&w))
        return edge_admittance(*p, lambda);
    return std::get<FixedAdmittance>(w).value;
}

inline bool edge_impedance_nonzero(const EdgeWeight& w, ComplexParam lambda) {
    if (const auto* p = std::get_if<EdgeParams>(&w)) {
        Complex den;
        return !detail::rlc_denominator_vanishes(*p, lambda.value(), den);
    }
    return true;  // fixed admittances are finite and nonzero by construction
}

}  // namespace laddernet
