#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "types.hpp"

namespace laddernet {

struct Edge {
    int u;
    int v;
    EdgeWeight weight;
};

// Finite connected network with a distinguished source vertex a0 and a
// nonempty grounded boundary B with a0 not in B. Vertex labels are arbitrary
// integers; they need not be contiguous.
class Network {
public:
    Network(std::vector<int> vertices, std::vector<Edge> edges, int a0,
            std::vector<int> boundary)
        : verts_(std::move(vertices)),
          edges_(std::move(edges)),
          a0_(a0),
          boundary_(std::move(boundary)) {
        std::sort(verts_.begin(), verts_.end());
        if (verts_.size() < 2)
            throw std::invalid_argument("network needs at least two vertices");
        if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
            throw std::invalid_argument("duplicate vertex label");
        slot_.reserve(verts_.size());
        for (std::size_t i = 0; i < verts_.size(); ++i)
            slot_[verts_[i]] = static_cast<int>(i);

        adj_.resize(verts_.size());
        std::vector<std::pair<int, int>> seen;
        for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
            const Edge& e = edges_[ei];
            if (!contains(e.u) || !contains(e.v))
                throw std::invalid_argument("edge endpoint is not a vertex");
            if (e.u == e.v)
                throw std::invalid_argument("self loops are not allowed");
            seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
            adj_[slot_.at(e.u)].emplace_back(e.v, static_cast<int>(ei));
            adj_[slot_.at(e.v)].emplace_back(e.u, static_cast<int>(ei));
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::invalid_argument("duplicate edge");

        if (!contains(a0_))
            throw std::invalid_argument("source vertex is not in the network");
        std::sort(boundary_.begin(), boundary_.end());
        if (boundary_.empty())
            throw std::invalid_argument("boundary must be nonempty");
        if (std::adjacent_find(boundary_.begin(), boundary_.end()) != boundary_.end())
            throw std::invalid_argument("duplicate boundary vertex");
        is_boundary_.assign(verts_.size(), false);
        for (int b : boundary_) {
            if (!contains(b))
                throw std::invalid_argument("boundary vertex is not in the network");
            if (b == a0_)
                throw std::invalid_argument("source vertex cannot be grounded");
            is_boundary_[slot_.at(b)] = true;
        }

        if (!connected())
            throw std::invalid_argument("network must be connected");
    }

    const std::vector<int>& vertices() const noexcept { return verts_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    int a0() const noexcept { return a0_; }
    const std::vector<int>& boundary() const noexcept { return boundary_; }

    bool contains(int v) const { return slot_.count(v) != 0; }
    bool is_boundary(int v) const { return is_boundary_[slot_.at(v)]; }
    bool is_interior(int v) const { return v != a0_ && !is_boundary(v); }

    // (neighbor label, index into edges()) pairs incident to v.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adj_[slot_.at(v)];
    }

    std::vector<int> interior_vertices() const {
        std::vector<int> out;
        for (int v : verts_)
            if (is_interior(v)) out.push_back(v);
        return out;  // ascending: verts_ is sorted
    }

private:
    bool connected() const {
        std::vector<bool> vis(verts_.size(), false);
        std::queue<int> q;
        q.push(verts_[0]);
        vis[slot_.at(verts_[0])] = true;
        std::size_t reached = 1;
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (const auto& [y, ei] : adj_[slot_.at(x)]) {
                (void)ei;
                const int s = slot_.at(y);
                if (!vis[s]) {
                    vis[s] = true;
                    ++reached;
                    q.push(y);
                }
            }
        }
        return reached == verts_.size();
    }

    std::vector<int> verts_;
    std::vector<Edge> edges_;
    int a0_;
    std::vector<int> boundary_;
    std::unordered_map<int, int> slot_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<bool> is_boundary_;
};

// Description of one ladder family. alpha is the weight of every series
// (backbone) edge, beta the weight of every rung.
class LadderSpec {
public:
    enum class Kind { LC, CL, GeneralAB };

    // Series inductors, capacitor rungs: alpha = 1/(L*lambda), beta = C*lambda.
    static LadderSpec lc(double L, double C) {
        check_positive(L, C);
        return LadderSpec(Kind::LC, L, C, EdgeParams(0.0, L, 0.0),
                          EdgeParams(0.0, 0.0, 1.0 / C));
    }

    // Series capacitors, inductor rungs: alpha = C*lambda, beta = 1/(L*lambda).
    static LadderSpec cl(double L, double C) {
        check_positive(L, C);
        return LadderSpec(Kind::CL, L, C, EdgeParams(0.0, 0.0, 1.0 / C),
                          EdgeParams(0.0, L, 0.0));
    }

    static LadderSpec general(EdgeWeight alpha, EdgeWeight beta) {
        return LadderSpec(Kind::GeneralAB, 0.0, 0.0, std::move(alpha),
                          std::move(beta));
    }

    Kind kind() const noexcept { return kind_; }

    double inductance() const {
        require_physical();
        return L_;
    }
    double capacitance() const {
        require_physical();
        return C_;
    }

    const EdgeWeight& series_weight() const noexcept { return series_; }
    const EdgeWeight& rung_weight() const noexcept { return rung_; }

    Complex alpha_at(ComplexParam lambda) const { return edge_admittance(series_, lambda); }
    Complex beta_at(ComplexParam lambda) const { return edge_admittance(rung_, lambda); }

private:
    LadderSpec(Kind k, double L, double C, EdgeWeight series, EdgeWeight rung)
        : kind_(k), L_(L), C_(C), series_(std::move(series)), rung_(std::move(rung)) {}

    static void check_positive(double L, double C) {
        if (!(L > 0.0) || !(C > 0.0))
            throw std::invalid_argument("L and C must be positive");
    }
    void require_physical() const {
        if (kind_ == Kind::GeneralAB)
            throw std::logic_error("general ladders carry no L, C values");
    }

    Kind kind_;
    double L_;
    double C_;
    EdgeWeight series_;
    EdgeWeight rung_;
};

// The n-stage ladder: backbone 0 - 2 - 4 - ... - 2n of alpha edges, rungs
// (2k-1, 2k) of beta edges for k = 1..n-1. Source 0; grounded vertices are
// the rung feet {1, 3, ..., 2n-3} and the far end 2n. 2n vertices, 2n-1
// edges, n grounded.
inline Network build_ladder(const LadderSpec& spec, int n) {
    if (n < 1) throw invalid_size_error("ladder needs at least one stage");
    std::vector<int> verts;
    verts.reserve(2 * static_cast<std::size_t>(n));
    for (int v = 0; v <= 2 * n - 2; ++v) verts.push_back(v);
    verts.push_back(2 * n);

    std::vector<Edge> edges;
    edges.reserve(2 * static_cast<std::size_t>(n) - 1);
    for (int k = 1; k <= n; ++k)
        edges.push_back({2 * k - 2, 2 * k, spec.series_weight()});
    for (int k = 1; k + 1 <= n; ++k)
        edges.push_back({2 * k - 1, 2 * k, spec.rung_weight()});

    std::vector<int> grounded;
    for (int k = 1; k + 1 <= n; ++k) grounded.push_back(2 * k - 1);
    grounded.push_back(2 * n);

    return Network(std::move(verts), std::move(edges), 0, std::move(grounded));
}

// True when every edge impedance is nonzero at lambda, i.e. every edge
// admittance is defined there.
inline bool in_lambda_set(const Network& net, ComplexParam lambda) {
    for (const Edge& e : net.edges())
        if (!edge_impedance_nonzero(e.weight, lambda)) return false;
    return true;
}

// Throwing form; names the offending edge.
inline void require_in_lambda_set(const Network& net, ComplexParam lambda) {
    for (const Edge& e : net.edges())
        if (!edge_impedance_nonzero(e.weight, lambda))
            throw not_in_lambda_set_error(
                e.u, e.v,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") has zero impedance at this lambda");
}

}  // namespace laddernet
