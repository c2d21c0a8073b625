#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "hgfrft/linalg.hpp"

namespace hgfrft {

struct Edge {
    Index u = 0;
    Index v = 0;
    double w = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple weighted graph. Undirected graphs store each edge once; a directed
/// edge (u, v) points from u to v. Immutable once built.
class Graph {
public:
    /// Validates indices, weights and duplicates; throws on violation.
    Graph(Index n, std::vector<Edge> edges, bool directed = false);

    Index size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool directed() const { return directed_; }

    /// Weighted adjacency; symmetric for undirected graphs, A(v, u) = w for a
    /// directed edge u -> v.
    Eigen::MatrixXd adjacency() const;

    /// True if every vertex is reachable from vertex 0, ignoring direction.
    bool connected() const;

    /// True for the directed n-cycle 0 -> 1 -> ... -> n-1 -> 0.
    bool is_directed_cycle() const;

private:
    Index n_;
    std::vector<Edge> edges_;
    bool directed_;
};

enum class ShiftKind { Adjacency, Laplacian, CyclicShift };

ShiftKind parse_shift_kind(std::string_view name);
std::string_view to_string(ShiftKind kind) noexcept;

Graph path_graph(Index n);
Graph cycle_graph(Index n, bool directed = false);

/// Vertex (u, v) of the product maps to u * g2.size() + v.
Graph cartesian_product(const Graph& g1, const Graph& g2);

struct GeometricGraph {
    Graph graph;
    std::vector<std::pair<double, double>> points;
    bool connected;
};

/// n points uniform in the unit square from a seeded mt19937_64; unit edges
/// between points closer than `radius`.
GeometricGraph random_geometric_graph(Index n, double radius, std::uint64_t seed);

ComplexMatrix shift_matrix(const Graph& g, ShiftKind kind);

/// Reads "u,v,w" rows (0-based, optional header). Builds an undirected graph
/// with max index + 1 vertices.
Graph from_edge_list(const std::filesystem::path& path);
Graph parse_edge_list(std::istream& in);

/// Writes the edges as "u,v,w" rows with a header line.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace hgfrft
