#pragma once

#include <stdexcept>
#include <string>

namespace laddernet {

// Base of every failure the library reports at runtime.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// An edge impedance z(lambda) = R + L*lambda + D/lambda vanished, so the
// edge admittance is undefined at this lambda.
class zero_impedance_error : public error {
public:
    using error::error;
};

// Some edge of a network has zero impedance at the requested lambda.
// Carries the labels of the offending edge for diagnostics.
class not_in_lambda_set_error : public error {
public:
    not_in_lambda_set_error(int u, int v, const std::string& what)
        : error(what), u_(u), v_(v) {}
    int u() const noexcept { return u_; }
    int v() const noexcept { return v_; }

private:
    int u_;
    int v_;
};

// Ladder stage count below 1, or another structurally impossible size.
class invalid_size_error : public error {
public:
    using error::error;
};

// The interior Dirichlet system is inconsistent: no voltage profile meets
// the boundary conditions, and the effective admittance is infinite.
class no_solution_error : public error {
public:
    using error::error;
};

// mu = beta/alpha = 0 collapses the characteristic quadratic to (psi - 1)^2.
class mu_zero_error : public error {
public:
    using error::error;
};

// psi1^(2n) = 1: the finite-ladder boundary system is singular and the
// closed form divides by zero.
class unit_circle_degeneracy_error : public error {
public:
    using error::error;
};

// gamma lies on the negative imaginary axis, where the square-root branch
// cut runs; no branch value is defined there.
class on_cut_error : public error {
public:
    using error::error;
};

// A frequency outside the admissible interval of a boundary-limit formula,
// or a size past a hard numeric cap.
class out_of_range_error : public error {
public:
    using error::error;
};

// Convergence diagnostics need more sequence terms than were supplied.
class too_few_terms_error : public error {
public:
    using error::error;
};

// Rate verification was asked for a lambda whose ladder sequence does not
// converge (characteristic root on the unit circle).
class non_convergent_input_error : public error {
public:
    using error::error;
};

// Malformed network description file.
class schema_error : public error {
public:
    using error::error;
};

}  // namespace laddernet
