#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "ladder.hpp"
#include "types.hpp"

namespace laddernet {

// Where a spectral point sits for the inductor-backbone ladder: the two open
// branch domains, the discontinuity curve between them, the purely imaginary
// non-convergence segment, or its endpoints.
enum class RegionLC {
    Omega1,
    Omega2,
    LambdaBarCurve,
    SegmentInterior,
    SegmentEndpoint,
    Zero
};

// Same for the capacitor-backbone ladder, whose non-convergence set is a
// pair of imaginary rays and whose curve splits the far side in two.
enum class RegionCL {
    Omega1,
    Omega2,
    Omega3,
    LambdaBarCurve,
    RayInterior,
    RayEndpoint,
    Zero
};

// Square roots of gamma on the plane cut along the negative imaginary axis:
// writing gamma = r e^{i phi} with phi in (-pi/2, 3pi/2),
//   xi1 = sqrt(r) e^{i phi/2},   xi2 = -xi1.
// xi1 ranges over the closed half-plane arg in [-pi/4, 3pi/4].
struct GammaBranch {
    Complex gamma;
    Complex xi1;
    Complex xi2;
};

inline GammaBranch xi_roots(Complex gamma) {
    if (gamma == Complex(0.0))
        throw on_cut_error("gamma = 0 admits no branch value");
    if (std::real(gamma) == 0.0 && std::imag(gamma) < 0.0)
        throw on_cut_error("gamma lies on the negative imaginary axis");
    double phi = std::arg(gamma);  // (-pi, pi]
    if (phi < -0.5 * std::numbers::pi) phi += 2.0 * std::numbers::pi;
    const Complex xi1 = std::polar(std::sqrt(std::abs(gamma)), 0.5 * phi);
    return {gamma, xi1, -xi1};
}

// Classification for series inductance L, rung capacitance C. The curve is
// 1 + LC (Re^2 - Im^2) / 4 = 0 restricted to Re * Im < 0; the segment is
// {Re = 0, |Im| < 2/sqrt(LC)}, whose endpoints carry mu = -4.
inline RegionLC classify_lc(Complex lambda, double L, double C) {
    if (!(L > 0.0) || !(C > 0.0))
        throw std::invalid_argument("L and C must be positive");
    if (lambda == Complex(0.0)) return RegionLC::Zero;
    const double re = std::real(lambda), im = std::imag(lambda);
    const double lc = L * C;

    if (std::abs(re) <= 1e-9 * std::max(1.0, std::abs(im))) {
        const Complex mu = lc * lambda * lambda;
        if (std::abs(mu + 4.0) <= 1e-9) return RegionLC::SegmentEndpoint;
        if (im * im * lc < 4.0) return RegionLC::SegmentInterior;
        // axis points beyond the endpoints fall through to the split below
    }

    const double h = re * re - im * im;
    const double expr = 1.0 + 0.25 * lc * h;
    const double expr_scale = std::max(1.0, 0.25 * lc * (re * re + im * im));
    if (std::abs(expr) <= 1e-9 * expr_scale && re * im < 0.0)
        return RegionLC::LambdaBarCurve;

    if (h >= -4.0 / lc) return re > 0.0 ? RegionLC::Omega1 : RegionLC::Omega2;
    return im > 0.0 ? RegionLC::Omega1 : RegionLC::Omega2;
}

// Classification for series capacitance C, rung inductance L. The curve is
// 4CL (Re^2 - Im^2) + 1 = 0 restricted to Re * Im < 0; the rays are
// {Re = 0, |Im| > 1/(2 sqrt(CL))} with endpoints +-i/(2 sqrt(CL)).
inline RegionCL classify_cl(Complex lambda, double L, double C) {
    if (!(L > 0.0) || !(C > 0.0))
        throw std::invalid_argument("L and C must be positive");
    if (lambda == Complex(0.0)) return RegionCL::Zero;
    const double re = std::real(lambda), im = std::imag(lambda);
    const double cl = C * L;
    const double y0 = 1.0 / (2.0 * std::sqrt(cl));

    if (std::abs(lambda - Complex(0.0, y0)) <= 1e-12 ||
        std::abs(lambda - Complex(0.0, -y0)) <= 1e-12)
        return RegionCL::RayEndpoint;
    if (std::abs(re) <= 1e-9 * std::max(1.0, std::abs(im))) {
        if (im * im > y0 * y0) return RegionCL::RayInterior;
        return RegionCL::Omega1;  // the short axis piece through 0 converges
    }

    const double h = re * re - im * im;
    const double expr = 4.0 * cl * h + 1.0;
    const double expr_scale = std::max(1.0, 4.0 * cl * (re * re + im * im));
    if (std::abs(expr) <= 1e-9 * expr_scale && re * im < 0.0)
        return RegionCL::LambdaBarCurve;

    if (h >= -1.0 / (4.0 * cl)) return RegionCL::Omega1;
    if (re * im > 0.0) return RegionCL::Omega1;
    return im > 0.0 ? RegionCL::Omega2 : RegionCL::Omega3;
}

// value is absent on the non-convergence set; psi1 is reported either way.
template <typename RegionT>
struct LimitResult {
    std::optional<Complex> value;
    Complex psi1;
    RegionT region;

    bool convergent() const { return value.has_value(); }
};

// Infinite-depth admittance of the inductor-backbone ladder,
//   P = (1 - psi1) / (L lambda),  mu = LC lambda^2,
// with psi1 the smaller-modulus characteristic root. On the open segment the
// roots are unimodular and no limit exists; the endpoints keep the finite
// limit 2/(L lambda) of the double-root stages alpha (2n-1)/n.
inline LimitResult<RegionLC> lc_infinite_admittance(ComplexParam lambda, double L,
                                                    double C) {
    const Complex z = lambda.value();
    const RegionLC region = classify_lc(z, L, C);
    if (region == RegionLC::SegmentEndpoint)
        return {Complex(2.0) / (L * z), Complex(-1.0), region};

    const Complex mu = L * C * z * z;
    const CharRoots roots = characteristic_roots(mu);
    if (region == RegionLC::SegmentInterior)
        return {std::nullopt, roots.psi1, region};
    if (std::abs(std::abs(roots.psi1) - 1.0) <= 1e-9)
        return {std::nullopt, roots.psi1, region};
    return {(1.0 - roots.psi1) / (L * z), roots.psi1, region};
}

// Infinite-depth admittance of the capacitor-backbone ladder,
//   P = C lambda (1 - psi1),  mu = 1/(CL lambda^2).
// The ray endpoints keep the finite limit +-i sqrt(C/L).
inline LimitResult<RegionCL> cl_infinite_admittance(ComplexParam lambda, double L,
                                                    double C) {
    const Complex z = lambda.value();
    const RegionCL region = classify_cl(z, L, C);
    if (region == RegionCL::RayEndpoint) {
        const double sign = std::imag(z) > 0.0 ? 1.0 : -1.0;
        return {Complex(0.0, sign * std::sqrt(C / L)), Complex(-1.0), region};
    }

    const Complex mu = 1.0 / (C * L * z * z);
    const CharRoots roots = characteristic_roots(mu);
    if (region == RegionCL::RayInterior)
        return {std::nullopt, roots.psi1, region};
    if (std::abs(std::abs(roots.psi1) - 1.0) <= 1e-9)
        return {std::nullopt, roots.psi1, region};
    return {C * z * (1.0 - roots.psi1), roots.psi1, region};
}

inline Complex lc_gamma(ComplexParam lambda, double L, double C) {
    const Complex z = lambda.value();
    return L * C + 0.25 * L * L * C * C * z * z;
}

inline Complex cl_gamma(ComplexParam lambda, double L, double C) {
    const Complex z = lambda.value();
    return 4.0 * C * L * z * z + 1.0;
}

// psi1 rebuilt from the cut square root instead of by modulus comparison:
//   psi1 = 1 + LC lambda^2 / 2 + lambda xi(gamma),
// with xi = xi2 on Omega1 and xi = xi1 on Omega2. Defined only on the two
// open domains; everywhere else the choice is not meaningful.
inline Complex lc_psi1_branch(ComplexParam lambda, double L, double C) {
    const Complex z = lambda.value();
    const RegionLC region = classify_lc(z, L, C);
    if (region != RegionLC::Omega1 && region != RegionLC::Omega2)
        throw out_of_range_error("branch table covers only the two open domains");
    const Complex head = 1.0 + 0.5 * L * C * z * z;
    const GammaBranch g = xi_roots(lc_gamma(lambda, L, C));
    return region == RegionLC::Omega1 ? head + z * g.xi2 : head + z * g.xi1;
}

// Capacitor-backbone analogue:
//   psi1 = 1 + (1 + xi(gamma)) / (2CL lambda^2),
// with xi = xi2 on Omega1 and xi = xi1 on Omega2 and Omega3.
inline Complex cl_psi1_branch(ComplexParam lambda, double L, double C) {
    const Complex z = lambda.value();
    const RegionCL region = classify_cl(z, L, C);
    if (region != RegionCL::Omega1 && region != RegionCL::Omega2 &&
        region != RegionCL::Omega3)
        throw out_of_range_error("branch table covers only the open domains");
    const Complex w = 1.0 / (2.0 * C * L * z * z);
    const GammaBranch g = xi_roots(cl_gamma(lambda, L, C));
    if (region == RegionCL::Omega1) return 1.0 + w * (1.0 + g.xi2);
    return 1.0 + w * (1.0 + g.xi1);
}

enum class Side { Right, Left };

// Limit of the inductor-backbone admittance onto the segment point i*omega,
// approached horizontally from Re > 0 (Right) or Re < 0 (Left):
//   -C i omega / 2 +- sqrt(C/L - C^2 omega^2 / 4)
// with a real square root. Requires 0 < |omega| < 2/sqrt(LC).
inline Complex lc_boundary_limit(double omega, double L, double C, Side side) {
    if (!(L > 0.0) || !(C > 0.0))
        throw std::invalid_argument("L and C must be positive");
    const double bound = 2.0 / std::sqrt(L * C);
    if (omega == 0.0 || std::abs(omega) >= bound)
        throw out_of_range_error("omega outside the open segment");
    const double root = std::sqrt(C / L - 0.25 * C * C * omega * omega);
    const Complex base(0.0, -0.5 * C * omega);
    return side == Side::Right ? base + root : base - root;
}

// Limit of the capacitor-backbone admittance onto the ray point i*omega:
//   i/(2 L omega) +- sqrt(C/L - 1/(4 L^2 omega^2)).
// Requires |omega| > 1/(2 sqrt(CL)); the lower ray follows by conjugation
// and is covered by the same expression.
inline Complex cl_boundary_limit(double omega, double L, double C, Side side) {
    if (!(L > 0.0) || !(C > 0.0))
        throw std::invalid_argument("L and C must be positive");
    const double bound = 1.0 / (2.0 * std::sqrt(C * L));
    if (std::abs(omega) <= bound)
        throw out_of_range_error("omega inside the convergent gap");
    const double root = std::sqrt(C / L - 1.0 / (4.0 * L * L * omega * omega));
    const Complex base(0.0, 1.0 / (2.0 * L * omega));
    return side == Side::Right ? base + root : base - root;
}

}  // namespace laddernet
