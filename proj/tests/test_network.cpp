#include <catch2/catch_amalgamated.hpp>

#include <laddernet/network.hpp>
#include <laddernet/types.hpp>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using laddernet::Complex;
using laddernet::ComplexParam;
using laddernet::Edge;
using laddernet::EdgeParams;
using laddernet::FixedAdmittance;
using laddernet::LadderSpec;
using laddernet::Network;

TEST_CASE("spectral parameter rejects zero", "[network]") {
    CHECK_THROWS_AS(ComplexParam(Complex(0.0, 0.0)), std::invalid_argument);
    CHECK(ComplexParam(Complex(2.0, -1.0)).value() == Complex(2.0, -1.0));
}

TEST_CASE("edge parameter validation", "[network]") {
    CHECK_THROWS_AS(EdgeParams(-1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(EdgeParams(0.0, -0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(EdgeParams(0.0, 0.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(EdgeParams(0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_NOTHROW(EdgeParams(1.0, 0.0, 0.0));
    CHECK_THROWS_AS(FixedAdmittance(Complex(0.0)), std::invalid_argument);
}

TEST_CASE("edge admittance is lambda over the impedance polynomial", "[network]") {
    const ComplexParam two(Complex(2.0, 0.0));

    // pure resistor: rho = 1/R at every lambda
    CHECK(laddernet::edge_admittance(EdgeParams(2.0, 0.0, 0.0), two) ==
          Complex(0.5, 0.0));
    // pure inductor: rho = 1/(L lambda)
    CHECK(std::abs(laddernet::edge_admittance(EdgeParams(0.0, 1.0, 0.0), two) -
                   Complex(0.5, 0.0)) < 1e-15);
    // pure capacitor, D = 1/C: rho = lambda/D
    CHECK(std::abs(laddernet::edge_admittance(EdgeParams(0.0, 0.0, 1.0), two) -
                   Complex(2.0, 0.0)) < 1e-15);

    auto gen = oracles::rng(412);
    for (int i = 0; i < 25; ++i) {
        const Complex z = oracles::random_complex(gen, -2.0, 2.0);
        if (std::abs(z) < 0.1) continue;
        const EdgeParams p(0.3, 1.2, 0.7);
        const Complex expect = z / (1.2 * z * z + 0.3 * z + 0.7);
        const Complex got = laddernet::edge_admittance(p, ComplexParam(z));
        CHECK(std::abs(got - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("vanishing impedance is rejected", "[network]") {
    // z = 2 + lambda + 1/lambda vanishes at lambda = -1
    const EdgeParams p(2.0, 1.0, 1.0);
    CHECK_THROWS_AS(laddernet::edge_admittance(p, ComplexParam(Complex(-1.0, 0.0))),
                    laddernet::zero_impedance_error);
    CHECK_NOTHROW(laddernet::edge_admittance(p, ComplexParam(Complex(2.0, 0.0))));

    const laddernet::EdgeWeight w = p;
    CHECK_FALSE(laddernet::edge_impedance_nonzero(w, ComplexParam(Complex(-1.0, 0.0))));
    CHECK(laddernet::edge_impedance_nonzero(w, ComplexParam(Complex(1.0, 1.0))));

    const laddernet::EdgeWeight fixed = FixedAdmittance(Complex(0.0, 3.0));
    CHECK(laddernet::edge_impedance_nonzero(fixed, ComplexParam(Complex(-1.0, 0.0))));
    CHECK(laddernet::edge_admittance(fixed, ComplexParam(Complex(5.0, 0.0))) ==
          Complex(0.0, 3.0));
}

namespace {

Edge resistor(int u, int v) { return {u, v, EdgeParams(1.0, 0.0, 0.0)}; }

}  // namespace

TEST_CASE("network construction validates its input", "[network]") {
    CHECK_THROWS_AS(Network({0}, {}, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 0, 1}, {resistor(0, 1)}, 0, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 1}, {resistor(0, 2)}, 0, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 1}, {{0, 0, EdgeParams(1, 0, 0)}, resistor(0, 1)},
                            0, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 1}, {resistor(0, 1), resistor(1, 0)}, 0, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 1}, {resistor(0, 1)}, 7, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 1}, {resistor(0, 1)}, 0, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 1}, {resistor(0, 1)}, 0, {1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 1}, {resistor(0, 1)}, 0, {5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 1}, {resistor(0, 1)}, 0, {0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Network({0, 1, 2, 3}, {resistor(0, 1), resistor(2, 3)}, 0, {1}),
                    std::invalid_argument);
    CHECK_NOTHROW(Network({0, 1}, {resistor(0, 1)}, 0, {1}));
}

TEST_CASE("network accessors", "[network]") {
    // labels need not be contiguous
    const Network net({5, 2, 9, 7}, {resistor(2, 5), resistor(5, 7), resistor(7, 9)},
                      2, {9});
    CHECK(net.vertices() == std::vector<int>{2, 5, 7, 9});
    CHECK(net.a0() == 2);
    CHECK(net.boundary() == std::vector<int>{9});
    CHECK(net.contains(7));
    CHECK_FALSE(net.contains(3));
    CHECK(net.is_boundary(9));
    CHECK(net.is_interior(5));
    CHECK(net.is_interior(7));
    CHECK_FALSE(net.is_interior(2));
    CHECK(net.interior_vertices() == std::vector<int>{5, 7});
    CHECK(net.neighbors(5).size() == 2);
    CHECK(net.neighbors(9).size() == 1);
}

TEST_CASE("ladder graph shape", "[network]") {
    const LadderSpec spec = LadderSpec::lc(1.0, 1.0);

    CHECK_THROWS_AS(laddernet::build_ladder(spec, 0), laddernet::invalid_size_error);

    for (int n = 1; n <= 5; ++n) {
        const Network net = laddernet::build_ladder(spec, n);
        CHECK(net.vertices().size() == static_cast<std::size_t>(2 * n));
        CHECK(net.edges().size() == static_cast<std::size_t>(2 * n - 1));
        CHECK(net.boundary().size() == static_cast<std::size_t>(n));
        CHECK(net.a0() == 0);
        CHECK(net.contains(2 * n));
        CHECK_FALSE(net.contains(2 * n - 1));  // the far rung foot is absent
        CHECK(net.is_boundary(2 * n));
    }

    const Network two = laddernet::build_ladder(spec, 2);
    CHECK(two.vertices() == std::vector<int>{0, 1, 2, 4});
    CHECK(two.boundary() == std::vector<int>{1, 4});

    std::set<std::pair<int, int>> got;
    for (const Edge& e : two.edges())
        got.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    CHECK(got == std::set<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 4}});
}

TEST_CASE("ladder spec weights", "[network]") {
    const ComplexParam two(Complex(2.0, 0.0));

    const LadderSpec lc = LadderSpec::lc(2.0, 3.0);
    CHECK(lc.kind() == LadderSpec::Kind::LC);
    CHECK(lc.inductance() == 2.0);
    CHECK(lc.capacitance() == 3.0);
    CHECK(std::abs(lc.alpha_at(two) - Complex(0.25, 0.0)) < 1e-15);  // 1/(L lambda)
    CHECK(std::abs(lc.beta_at(two) - Complex(6.0, 0.0)) < 1e-15);    // C lambda

    const LadderSpec cl = LadderSpec::cl(2.0, 3.0);
    CHECK(std::abs(cl.alpha_at(two) - Complex(6.0, 0.0)) < 1e-15);
    CHECK(std::abs(cl.beta_at(two) - Complex(0.25, 0.0)) < 1e-15);

    const LadderSpec ab = LadderSpec::general(FixedAdmittance(Complex(0.5)),
                                              FixedAdmittance(Complex(2.0)));
    CHECK(ab.alpha_at(two) == Complex(0.5));
    CHECK(ab.beta_at(two) == Complex(2.0));
    CHECK_THROWS_AS(ab.inductance(), std::logic_error);
    CHECK_THROWS_AS(ab.capacitance(), std::logic_error);

    CHECK_THROWS_AS(LadderSpec::lc(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LadderSpec::cl(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("lambda set membership names the offending edge", "[network]") {
    const Network net({0, 1, 2},
                      {{0, 1, EdgeParams(2.0, 1.0, 1.0)}, resistor(1, 2)}, 0, {2});
    CHECK(laddernet::in_lambda_set(net, ComplexParam(Complex(2.0, 0.0))));
    CHECK_FALSE(laddernet::in_lambda_set(net, ComplexParam(Complex(-1.0, 0.0))));
    CHECK_NOTHROW(laddernet::require_in_lambda_set(net, ComplexParam(Complex(1.0, 1.0))));
    try {
        laddernet::require_in_lambda_set(net, ComplexParam(Complex(-1.0, 0.0)));
        FAIL("expected not_in_lambda_set_error");
    } catch (const laddernet::not_in_lambda_set_error& e) {
        CHECK(e.u() == 0);
        CHECK(e.v() == 1);
        CHECK(std::string(e.what()).find("edge (0,1)") != std::string::npos);
    }
}
