#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "linear_solver.hpp"
#include "network.hpp"

namespace laddernet {

// Interior equations of the voltage problem with v(a0) = 1 and v = 0 on the
// grounded boundary. Row for interior x:
//   (sum_y rho_xy) u(x) - sum_{y interior} rho_xy u(y) = rho_{x,a0}.
struct LinearSystem {
    std::vector<int> interior;    // ascending labels; row and column order
    std::vector<Complex> matrix;  // dense row-major, interior x interior
    std::vector<Complex> rhs;
};

inline LinearSystem assemble_system(const Network& net, ComplexParam lambda) {
    require_in_lambda_set(net, lambda);
    LinearSystem sys;
    sys.interior = net.interior_vertices();
    const int m = static_cast<int>(sys.interior.size());
    sys.matrix.assign(static_cast<std::size_t>(m) * m, Complex(0.0));
    sys.rhs.assign(m, Complex(0.0));

    std::unordered_map<int, int> pos;
    pos.reserve(sys.interior.size());
    for (int i = 0; i < m; ++i) pos[sys.interior[i]] = i;

    for (int i = 0; i < m; ++i) {
        const int x = sys.interior[i];
        Complex diag = 0.0;
        for (const auto& [y, ei] : net.neighbors(x)) {
            const Complex rho = edge_admittance(net.edges()[ei].weight, lambda);
            diag += rho;
            if (y == net.a0()) {
                sys.rhs[i] += rho;
            } else if (auto it = pos.find(y); it != pos.end()) {
                sys.matrix[static_cast<std::size_t>(i) * m + it->second] -= rho;
            }
            // grounded neighbors contribute to the diagonal only
        }
        sys.matrix[static_cast<std::size_t>(i) * m + i] = diag;
    }
    return sys;
}

struct VoltageSolution {
    Complex lambda;
    std::map<int, Complex> values;  // one entry per vertex, keyed by label
    bool unique = true;
};

// A solution plus the directions it can be shifted in when the interior
// system is singular but consistent. Null directions vanish on a0 and on
// the boundary.
struct DirichletDetail {
    VoltageSolution solution;
    std::vector<std::map<int, Complex>> null_space;
};

inline DirichletDetail solve_dirichlet_detail(const Network& net, ComplexParam lambda) {
    const LinearSystem sys = assemble_system(net, lambda);
    const int m = static_cast<int>(sys.interior.size());
    linear::Solution sol = linear::solve(m, sys.matrix, sys.rhs);
    if (!sol.consistent)
        throw no_solution_error("voltage problem has no solution at this lambda");

    DirichletDetail out;
    out.solution.lambda = lambda.value();
    out.solution.unique = sol.unique();
    out.solution.values[net.a0()] = 1.0;
    for (int b : net.boundary()) out.solution.values[b] = 0.0;
    for (int i = 0; i < m; ++i)
        out.solution.values[sys.interior[i]] = sol.particular[i];

    for (auto& w : sol.null_basis) {
        std::map<int, Complex> dir;
        dir[net.a0()] = 0.0;
        for (int b : net.boundary()) dir[b] = 0.0;
        for (int i = 0; i < m; ++i) dir[sys.interior[i]] = w[i];
        out.null_space.push_back(std::move(dir));
    }
    return out;
}

inline VoltageSolution solve_dirichlet(const Network& net, ComplexParam lambda) {
    return solve_dirichlet_detail(net, lambda).solution;
}

// P = sum over neighbors x of a0 of (1 - v(x)) rho_{x,a0}. The value is the
// same for every solution of a consistent singular system.
inline Complex admittance_from_solution(const Network& net, ComplexParam lambda,
                                        const std::map<int, Complex>& voltages) {
    Complex p = 0.0;
    for (const auto& [y, ei] : net.neighbors(net.a0()))
        p += (Complex(1.0) - voltages.at(y)) *
             edge_admittance(net.edges()[ei].weight, lambda);
    return p;
}

// value is absent exactly when the voltage problem is unsolvable, in which
// case the effective admittance is infinite (zero effective impedance).
struct AdmittanceResult {
    std::optional<Complex> value;
    bool solvable = false;

    bool infinite() const { return !solvable; }
};

inline AdmittanceResult effective_admittance(const Network& net, ComplexParam lambda) {
    try {
        const VoltageSolution v = solve_dirichlet(net, lambda);
        return {admittance_from_solution(net, lambda, v.values), true};
    } catch (const no_solution_error&) {
        return {std::nullopt, false};
    }
}

}  // namespace laddernet
