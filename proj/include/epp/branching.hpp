#pragma once

#include <compare>
#include <concepts>
#include <utility>
#include <vector>

#include "epp/partition.hpp"
#include "epp/rational.hpp"

namespace epp {

/// Vertex of the Pascal triangle graph: level = heads + tails.
struct PascalVertex {
    int heads = 0;
    int tails = 0;
    int level() const { return heads + tails; }
    friend bool operator==(const PascalVertex&, const PascalVertex&) = default;
    friend auto operator<=>(const PascalVertex&, const PascalVertex&) = default;
};

/// A branching graph is a graded graph with a unique root, positive integer
/// edge multiplicities, and mutually consistent successor/predecessor maps.
template <class G>
concept BranchingGraph = requires(const G& g, const typename G::Vertex& v, int n) {
    { g.root() } -> std::convertible_to<typename G::Vertex>;
    { g.level(v) } -> std::convertible_to<int>;
    { g.level_vertices(n) } -> std::convertible_to<std::vector<typename G::Vertex>>;
    { g.successors(v) } -> std::convertible_to<std::vector<std::pair<typename G::Vertex, int>>>;
    { g.predecessors(v) } -> std::convertible_to<std::vector<std::pair<typename G::Vertex, int>>>;
};

/// Kingman graph: vertices at level n are the partitions of n, edges are
/// single box additions, multiplicity of (mu, lam) is r_k(lam) for the grown
/// row size k.
class KingmanGraph {
public:
    using Vertex = IntegerPartition;
    Vertex root() const { return IntegerPartition{}; }
    int level(const Vertex& v) const { return v.size(); }
    std::vector<Vertex> level_vertices(int n) const { return enumerate_partitions(n); }
    std::vector<std::pair<Vertex, int>> successors(const Vertex& v) const;
    std::vector<std::pair<Vertex, int>> predecessors(const Vertex& v) const;
};

/// Pascal triangle as a simple branching graph (all multiplicities 1).
class PascalGraph {
public:
    using Vertex = PascalVertex;
    Vertex root() const { return {0, 0}; }
    int level(const Vertex& v) const { return v.level(); }
    std::vector<Vertex> level_vertices(int n) const;
    std::vector<std::pair<Vertex, int>> successors(const Vertex& v) const;
    std::vector<std::pair<Vertex, int>> predecessors(const Vertex& v) const;
};

/// Number of monotone paths from one Pascal vertex to another:
/// binom(h+t-a-b, t-b); 0 when no path exists.
Integer pascal_dim(const PascalVertex& from, const PascalVertex& to);

/// Finite-n ratio dim(fixed, (floor(p n), n - floor(p n))) / dim of that
/// vertex from the root. Converges to p^a (1-p)^b as n grows.
Rational pascal_boundary_ratio(const PascalVertex& fixed, const Rational& p, long n);

/// Checks the backward harmonic recursion phi(v) = sum kappa(v,w) phi(w) for
/// every vertex v at `level`, plus the normalization phi(root) = 1. Exact.
template <BranchingGraph G, class Phi>
bool check_harmonic(const G& graph, Phi&& phi, int level) {
    if (phi(graph.root()) != Rational(1)) return false;
    for (const auto& v : graph.level_vertices(level)) {
        Rational sum(0);
        for (const auto& [w, kappa] : graph.successors(v)) sum += Rational(kappa) * phi(w);
        if (sum != phi(v)) return false;
    }
    return true;
}

} // namespace epp
