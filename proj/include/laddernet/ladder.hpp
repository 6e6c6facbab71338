#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dirichlet.hpp"
#include "network.hpp"
#include "types.hpp"

namespace laddernet {

namespace detail {

inline Complex ipow(Complex base, int e) {
    Complex r = 1.0;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Pascal rows in exact 64-bit integers. Safe through m = 60.
inline std::vector<std::uint64_t> binomial_row(int m) {
    std::vector<std::uint64_t> row(m + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    return row;
}

}  // namespace detail

// Roots of psi^2 - (2 + mu) psi + 1 = 0. Their product is 1 and their sum
// 2 + mu; they are ordered |psi1| <= |psi2|, and when both sit on the unit
// circle (a conjugate pair) the tie breaks by ascending argument in (-pi, pi].
// degenerate marks the double root psi = -1 at mu = -4.
struct CharRoots {
    Complex psi1;
    Complex psi2;
    bool degenerate;
};

inline CharRoots characteristic_roots(Complex mu) {
    if (mu == Complex(0.0))
        throw mu_zero_error("mu = 0 collapses the quadratic to (psi - 1)^2");
    if (std::abs(mu + 4.0) <= 1e-12 * std::max(1.0, std::abs(mu)))
        return {Complex(-1.0), Complex(-1.0), true};

    const Complex s = 2.0 + mu;
    Complex sq = std::sqrt(s * s - 4.0);
    // sign choice avoids cancellation in the larger root
    if (std::real(std::conj(s) * sq) < 0.0) sq = -sq;
    const Complex big = 0.5 * (s + sq);
    const Complex small = 1.0 / big;

    if (std::abs(std::abs(big) - 1.0) <= 1e-12) {
        // unit circle: conjugate pair e^{+-i theta}
        if (std::arg(small) <= std::arg(big)) return {small, big, false};
        return {big, small, false};
    }
    return {small, big, false};
}

namespace detail {

inline void require_stage_count(int n) {
    if (n < 1) throw invalid_size_error("ladder needs at least one stage");
}

inline Complex ladder_mu(Complex alpha, Complex beta) {
    if (alpha == Complex(0.0) || beta == Complex(0.0))
        throw std::invalid_argument("alpha and beta must be nonzero");
    return beta / alpha;
}

}  // namespace detail

// Rung-line voltages v_0..v_n of the n-stage ladder, from the recurrence
// v_{k+1} - (2 + mu) v_k + v_{k-1} = 0 with v_0 = 1, v_n = 0. Everything is
// evaluated in powers of psi1, so large |psi2| cannot overflow:
//   v_k = (psi1^k - psi1^{2n-k}) / (1 - psi1^{2n}).
struct LadderVoltages {
    std::vector<Complex> v;  // size n + 1; v[0] = 1 and v[n] = 0 exactly
    Complex c1;              // v_k = c1 psi1^k + c2 psi2^k off the double root
    Complex c2;
};

inline LadderVoltages ladder_voltages(Complex alpha, Complex beta, int n) {
    detail::require_stage_count(n);
    const Complex mu = detail::ladder_mu(alpha, beta);
    const CharRoots roots = characteristic_roots(mu);

    LadderVoltages out;
    out.v.resize(n + 1);
    if (roots.degenerate) {
        // v_k = (c1 + c2 k)(-1)^k with c1 = 1, c2 = -1/n
        out.c1 = 1.0;
        out.c2 = -1.0 / n;
        for (int k = 0; k <= n; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            out.v[k] = sign * (1.0 - static_cast<double>(k) / n);
        }
        return out;
    }

    const Complex p2n = detail::ipow(roots.psi1, 2 * n);
    if (std::abs(p2n - 1.0) <= 1e-10)
        throw unit_circle_degeneracy_error(
            "psi1^(2n) = 1: boundary system is singular");
    const Complex denom = 1.0 - p2n;
    out.c1 = 1.0 / denom;
    out.c2 = -p2n / denom;  // equals 1/(1 - psi2^{2n})
    out.v[0] = 1.0;
    out.v[n] = 0.0;
    for (int k = 1; k < n; ++k)
        out.v[k] = (detail::ipow(roots.psi1, k) - detail::ipow(roots.psi1, 2 * n - k)) / denom;
    return out;
}

// Effective admittance of the n-stage ladder:
//   P_n = alpha (psi1^{2n-1} + 1)(psi1 - 1) / (psi1^{2n} - 1),
// symmetric in psi1 <-> psi2. The double-root direction mu = -4 gives
// alpha (2n - 1)/n, and a narrow band around it is routed through the
// generic network solver, where the conditioning is harmless.
inline Complex finite_ladder_admittance(Complex alpha, Complex beta, int n) {
    detail::require_stage_count(n);
    const Complex mu = detail::ladder_mu(alpha, beta);
    const CharRoots roots = characteristic_roots(mu);
    if (roots.degenerate)
        return alpha * (static_cast<double>(2 * n - 1) / static_cast<double>(n));

    if (std::abs(mu + 4.0) < 1e-6) {
        const Network net = build_ladder(
            LadderSpec::general(FixedAdmittance(alpha), FixedAdmittance(beta)), n);
        const AdmittanceResult r = effective_admittance(net, ComplexParam(Complex(1.0)));
        if (!r.solvable)
            throw unit_circle_degeneracy_error(
                "boundary system is singular near the double root");
        return *r.value;
    }

    const Complex p2n = detail::ipow(roots.psi1, 2 * n);
    if (std::abs(p2n - 1.0) <= 1e-10)
        throw unit_circle_degeneracy_error(
            "psi1^(2n) = 1: boundary system is singular");
    return alpha * (detail::ipow(roots.psi1, 2 * n - 1) + 1.0) * (roots.psi1 - 1.0) /
           (p2n - 1.0);
}

// The same admittance through expanded numerator and denominator:
//   P_n = alpha (1 - (2 + mu - 2 S1) / (2 - 2 S2)),
//   S1 = sum_{k=0}^{n-1} C(2n-1, 2k) a^{2n-1-2k} d^k,
//   S2 = sum_{k=0}^{n}   C(2n, 2k)   a^{2n-2k}   d^k,
// with a = 1 + mu/2 and d = mu + mu^2/4, using exact integer binomials.
// 64-bit coefficients cap the size at n = 30. Undefined at mu = -4, where
// the denominator vanishes identically.
inline Complex finite_ladder_admittance_binomial(Complex alpha, Complex beta, int n) {
    detail::require_stage_count(n);
    if (n > 30)
        throw out_of_range_error("binomial coefficients overflow past n = 30");
    const Complex mu = detail::ladder_mu(alpha, beta);

    const Complex a = 1.0 + 0.5 * mu;
    const Complex d = mu + 0.25 * mu * mu;
    const std::vector<std::uint64_t> odd = detail::binomial_row(2 * n - 1);
    const std::vector<std::uint64_t> even = detail::binomial_row(2 * n);

    Complex s1 = 0.0, s2 = 0.0;
    for (int k = 0; k < n; ++k)
        s1 += static_cast<double>(odd[2 * k]) * detail::ipow(a, 2 * n - 1 - 2 * k) *
              detail::ipow(d, k);
    for (int k = 0; k <= n; ++k)
        s2 += static_cast<double>(even[2 * k]) * detail::ipow(a, 2 * n - 2 * k) *
              detail::ipow(d, k);

    const Complex den = 2.0 - 2.0 * s2;
    if (std::abs(den) <= 1e-10 * std::max(1.0, 2.0 * std::abs(s2)))
        throw unit_circle_degeneracy_error(
            "expanded denominator vanishes: psi1^(2n) = 1");
    return alpha * (1.0 - (2.0 + mu - 2.0 * s1) / den);
}

}  // namespace laddernet
