#include <catch2/catch_amalgamated.hpp>

#include <laddernet/dirichlet.hpp>
#include <laddernet/network.hpp>

#include <set>
#include <utility>
#include <vector>

#include "oracles.hpp"

using laddernet::Complex;
using laddernet::ComplexParam;
using laddernet::Edge;
using laddernet::EdgeParams;
using laddernet::FixedAdmittance;
using laddernet::LadderSpec;
using laddernet::Network;

TEST_CASE("interior system assembly on the two-stage ladder", "[dirichlet]") {
    const Network net = laddernet::build_ladder(LadderSpec::lc(1.0, 1.0), 2);
    const ComplexParam two(Complex(2.0, 0.0));
    const laddernet::LinearSystem sys = laddernet::assemble_system(net, two);

    // interior vertex 2 only; alpha = 1/2 on both series edges, beta = 2
    REQUIRE(sys.interior == std::vector<int>{2});
    REQUIRE(sys.matrix.size() == 1);
    CHECK(std::abs(sys.matrix[0] - Complex(3.0, 0.0)) < 1e-14);
    CHECK(std::abs(sys.rhs[0] - Complex(0.5, 0.0)) < 1e-14);

    const laddernet::VoltageSolution v = laddernet::solve_dirichlet(net, two);
    CHECK(v.unique);
    CHECK(v.values.at(0) == Complex(1.0));
    CHECK(v.values.at(1) == Complex(0.0));
    CHECK(v.values.at(4) == Complex(0.0));
    CHECK(std::abs(v.values.at(2) - Complex(1.0 / 6.0, 0.0)) < 1e-14);

    const laddernet::AdmittanceResult p = laddernet::effective_admittance(net, two);
    REQUIRE(p.solvable);
    CHECK(std::abs(*p.value - Complex(5.0 / 12.0, 0.0)) < 1e-14);
}

TEST_CASE("two-vertex resistor network", "[dirichlet]") {
    const Network net({0, 1}, {{0, 1, EdgeParams(2.0, 0.0, 0.0)}}, 0, {1});
    const laddernet::AdmittanceResult p =
        laddernet::effective_admittance(net, ComplexParam(Complex(1.0, 0.0)));
    REQUIRE(p.solvable);
    CHECK(std::abs(*p.value - Complex(0.5, 0.0)) < 1e-15);  // 1/R
}

TEST_CASE("ladder solves match the series-parallel reduction", "[dirichlet]") {
    auto gen = oracles::rng(2024);
    const ComplexParam one(Complex(1.0, 0.0));
    int checked = 0;
    while (checked < 40) {
        const Complex alpha = oracles::random_complex(gen, -2.0, 2.0);
        const Complex beta = oracles::random_complex(gen, -2.0, 2.0);
        if (std::abs(alpha) < 0.2 || std::abs(beta) < 0.2) continue;
        const int n = 1 + checked % 8;
        const Network net = laddernet::build_ladder(
            LadderSpec::general(FixedAdmittance(alpha), FixedAdmittance(beta)), n);
        const laddernet::AdmittanceResult got = laddernet::effective_admittance(net, one);
        if (!got.solvable) continue;  // random resonance; astronomically rare
        const Complex want = oracles::ladder_series_parallel(alpha, beta, n);
        CHECK(std::abs(*got.value - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        ++checked;
    }
}

TEST_CASE("singular but consistent system keeps the admittance pinned", "[dirichlet]") {
    const Network net = oracles::singular_consistent_network();
    const ComplexParam one(Complex(1.0, 0.0));

    const laddernet::DirichletDetail detail =
        laddernet::solve_dirichlet_detail(net, one);
    CHECK_FALSE(detail.solution.unique);
    REQUIRE(detail.null_space.size() == 1);

    const Complex p =
        laddernet::admittance_from_solution(net, one, detail.solution.values);
    CHECK(std::abs(p - Complex(-1.0, 0.0)) <= 1e-12);

    // the admittance must not move along the null direction
    std::map<int, Complex> shifted = detail.solution.values;
    for (const auto& [vertex, dir] : detail.null_space[0])
        shifted[vertex] += Complex(3.25, 1.5) * dir;
    const Complex p2 = laddernet::admittance_from_solution(net, one, shifted);
    CHECK(std::abs(p2 - p) <= 1e-12);

    const laddernet::AdmittanceResult r = laddernet::effective_admittance(net, one);
    REQUIRE(r.solvable);
    CHECK(std::abs(*r.value - Complex(-1.0, 0.0)) <= 1e-12);
}

TEST_CASE("inconsistent system means infinite admittance", "[dirichlet]") {
    const Network net = oracles::inconsistent_at_minus_one();
    const ComplexParam minus_one(Complex(-1.0, 0.0));

    CHECK_THROWS_AS(laddernet::solve_dirichlet(net, minus_one),
                    laddernet::no_solution_error);
    const laddernet::AdmittanceResult r =
        laddernet::effective_admittance(net, minus_one);
    CHECK(r.infinite());
    CHECK_FALSE(r.value.has_value());

    // away from the bad point the same network solves fine
    const laddernet::AdmittanceResult ok =
        laddernet::effective_admittance(net, ComplexParam(Complex(1.0, 0.0)));
    CHECK(ok.solvable);
}

TEST_CASE("lambda outside the admissible set is rejected during assembly",
          "[dirichlet]") {
    const Network net({0, 1, 2},
                      {{0, 1, EdgeParams(2.0, 1.0, 1.0)},
                       {1, 2, EdgeParams(1.0, 0.0, 0.0)}},
                      0, {2});
    CHECK_THROWS_AS(laddernet::assemble_system(net, ComplexParam(Complex(-1.0, 0.0))),
                    laddernet::not_in_lambda_set_error);
}

namespace {

// path 0-1-...-m plus a few random chords, random positive resistances
Network random_resistor_network(std::mt19937_64& gen, int m) {
    std::uniform_real_distribution<double> res(0.5, 3.0);
    std::uniform_int_distribution<int> pick(0, m);
    std::vector<int> verts;
    for (int v = 0; v <= m; ++v) verts.push_back(v);
    std::vector<Edge> edges;
    for (int v = 0; v + 1 <= m; ++v)
        edges.push_back({v, v + 1, EdgeParams(res(gen), 0.0, 0.0)});
    std::set<std::pair<int, int>> used;
    for (int v = 0; v + 1 <= m; ++v) used.insert({v, v + 1});
    for (int tries = 0; tries < 2 * m; ++tries) {
        int u = pick(gen), v = pick(gen);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) continue;
        edges.push_back({u, v, EdgeParams(res(gen), 0.0, 0.0)});
    }
    return Network(std::move(verts), std::move(edges), 0, {m});
}

}  // namespace

TEST_CASE("resistor networks obey the maximum principle", "[dirichlet]") {
    auto gen = oracles::rng(77);
    const ComplexParam one(Complex(1.0, 0.0));
    for (int rep = 0; rep < 10; ++rep) {
        const Network net = random_resistor_network(gen, 6 + rep);
        const laddernet::VoltageSolution v = laddernet::solve_dirichlet(net, one);
        REQUIRE(v.unique);
        double rho_sum = 0.0;
        for (const auto& [y, ei] : net.neighbors(net.a0()))
            rho_sum += std::real(laddernet::edge_admittance(
                net.edges()[ei].weight, one));
        for (const auto& [vertex, value] : v.values) {
            CHECK(std::abs(std::imag(value)) <= 1e-12);
            CHECK(std::real(value) >= -1e-12);
            CHECK(std::real(value) <= 1.0 + 1e-12);
        }
        const Complex p = laddernet::admittance_from_solution(net, one, v.values);
        CHECK(std::real(p) > 0.0);
        CHECK(std::real(p) <= rho_sum + 1e-12);
        CHECK(std::abs(std::imag(p)) <= 1e-12);
    }
}

TEST_CASE("solutions are harmonic at interior vertices", "[dirichlet]") {
    auto gen = oracles::rng(31337);
    const ComplexParam lambda(Complex(0.7, 0.3));
    std::uniform_real_distribution<double> part(0.2, 2.0);
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<Edge> edges;
        const int m = 5 + rep;
        std::vector<int> verts;
        for (int v = 0; v <= m; ++v) verts.push_back(v);
        for (int v = 0; v + 1 <= m; ++v)
            edges.push_back({v, v + 1, EdgeParams(part(gen), part(gen), part(gen))});
        edges.push_back({0, m / 2, EdgeParams(part(gen), 0.0, part(gen))});
        const Network net(std::move(verts), std::move(edges), 0, {m});

        const laddernet::VoltageSolution v = laddernet::solve_dirichlet(net, lambda);
        for (int x : net.interior_vertices()) {
            Complex flux = 0.0;
            for (const auto& [y, ei] : net.neighbors(x))
                flux += (v.values.at(y) - v.values.at(x)) *
                        laddernet::edge_admittance(net.edges()[ei].weight, lambda);
            CHECK(std::abs(flux) <= 1e-9);
        }
    }
}
