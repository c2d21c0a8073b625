#include "hgfrft/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hgfrft/io.hpp"

namespace hgfrft {

Graph::Graph(Index n, std::vector<Edge> edges, bool directed)
    : n_(n), edges_(std::move(edges)), directed_(directed)
{
    if (n_ < 1) {
        throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");
    }
    std::set<std::pair<Index, Index>> seen;
    for (const auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside graph");
        }
        if (e.u == e.v) {
            throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(e.u));
        }
        if (!std::isfinite(e.w)) {
            throw Error(ErrorCode::InvalidArgument, "non-finite edge weight");
        }
        if (e.w < 0.0) {
            throw Error(ErrorCode::NegativeWeight, "negative edge weight");
        }
        auto key = directed_ ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (!seen.insert(key).second) {
            throw Error(ErrorCode::DuplicateEdge,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") repeated");
        }
    }
}

Eigen::MatrixXd Graph::adjacency() const
{
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (const auto& e : edges_) {
        a(e.v, e.u) = e.w;
        if (!directed_) {
            a(e.u, e.v) = e.w;
        }
    }
    return a;
}

bool Graph::connected() const
{
    std::vector<std::vector<Index>> nbr(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) {
        nbr[e.u].push_back(e.v);
        nbr[e.v].push_back(e.u);
    }
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Index> stack{0};
    seen[0] = 1;
    Index count = 1;
    while (!stack.empty()) {
        const Index x = stack.back();
        stack.pop_back();
        for (Index y : nbr[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n_;
}

bool Graph::is_directed_cycle() const
{
    if (!directed_ || n_ < 3 || static_cast<Index>(edges_.size()) != n_) {
        return false;
    }
    std::set<std::pair<Index, Index>> have;
    for (const auto& e : edges_) {
        have.emplace(e.u, e.v);
    }
    for (Index i = 0; i < n_; ++i) {
        if (!have.count({i, (i + 1) % n_})) {
            return false;
        }
    }
    return true;
}

ShiftKind parse_shift_kind(std::string_view name)
{
    if (name == "adjacency") return ShiftKind::Adjacency;
    if (name == "laplacian") return ShiftKind::Laplacian;
    if (name == "cyclic" || name == "cyclic-shift") return ShiftKind::CyclicShift;
    throw Error(ErrorCode::ConfigError, "unknown shift kind '" + std::string(name) + "'");
}

std::string_view to_string(ShiftKind kind) noexcept
{
    switch (kind) {
    case ShiftKind::Adjacency: return "adjacency";
    case ShiftKind::Laplacian: return "laplacian";
    case ShiftKind::CyclicShift: return "cyclic";
    }
    return "unknown";
}

Graph path_graph(Index n)
{
    if (n < 2) {
        throw Error(ErrorCode::InvalidArgument, "path graph needs n >= 2");
    }
    std::vector<Edge> edges;
    for (Index i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1, 1.0});
    }
    return Graph(n, std::move(edges));
}

Graph cycle_graph(Index n, bool directed)
{
    if (n < 3) {
        throw Error(ErrorCode::InvalidArgument, "cycle graph needs n >= 3");
    }
    std::vector<Edge> edges;
    for (Index i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n, 1.0});
    }
    return Graph(n, std::move(edges), directed);
}

Graph cartesian_product(const Graph& g1, const Graph& g2)
{
    if (g1.directed() || g2.directed()) {
        throw Error(ErrorCode::DirectedInput, "cartesian product needs undirected factors");
    }
    const Index n2 = g2.size();
    std::vector<Edge> edges;
    edges.reserve(g1.edges().size() * static_cast<std::size_t>(n2) +
                  g2.edges().size() * static_cast<std::size_t>(g1.size()));
    for (const auto& e : g1.edges()) {
        for (Index v = 0; v < n2; ++v) {
            edges.push_back({e.u * n2 + v, e.v * n2 + v, e.w});
        }
    }
    for (Index u = 0; u < g1.size(); ++u) {
        for (const auto& e : g2.edges()) {
            edges.push_back({u * n2 + e.u, u * n2 + e.v, e.w});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.u, a.v} < std::pair{b.u, b.v};
    });
    return Graph(g1.size() * n2, std::move(edges));
}

GeometricGraph random_geometric_graph(Index n, double radius, std::uint64_t seed)
{
    if (n < 2) {
        throw Error(ErrorCode::InvalidArgument, "geometric graph needs n >= 2");
    }
    if (!(radius > 0.0) || radius > std::sqrt(2.0)) {
        throw Error(ErrorCode::InvalidArgument, "radius must lie in (0, sqrt(2)]");
    }
    std::mt19937_64 rng(seed);
    // Explicit 53-bit mapping keeps the point set identical across standard libraries.
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) {
        p.first = uniform();
        p.second = uniform();
    }
    std::vector<Edge> edges;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const double dx = pts[i].first - pts[j].first;
            const double dy = pts[i].second - pts[j].second;
            if (std::hypot(dx, dy) < radius) {
                edges.push_back({i, j, 1.0});
            }
        }
    }
    Graph g(n, std::move(edges));
    const bool conn = g.connected();
    return {std::move(g), std::move(pts), conn};
}

ComplexMatrix shift_matrix(const Graph& g, ShiftKind kind)
{
    switch (kind) {
    case ShiftKind::Adjacency:
        return g.adjacency().cast<Complex>();
    case ShiftKind::Laplacian: {
        if (g.directed()) {
            throw Error(ErrorCode::DirectedInput, "Laplacian shift needs an undirected graph");
        }
        const Eigen::MatrixXd a = g.adjacency();
        Eigen::MatrixXd lap = -a;
        lap.diagonal() = a.rowwise().sum();
        return lap.cast<Complex>();
    }
    case ShiftKind::CyclicShift:
        if (!g.is_directed_cycle()) {
            throw Error(ErrorCode::CyclicShiftInvalid, "cyclic shift needs the directed n-cycle");
        }
        return g.adjacency().cast<Complex>();
    }
    throw Error(ErrorCode::InvalidArgument, "unknown shift kind");
}

namespace {

bool looks_numeric(std::string_view field)
{
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) {
        field.remove_prefix(1);
    }
    if (field.empty()) {
        return false;
    }
    const char c = field.front();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
}

}  // namespace

Graph parse_edge_list(std::istream& in)
{
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    Index max_index = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        const auto fields = io::split_csv_line(line);
        if (lineno == 1 && !fields.empty() && !looks_numeric(fields[0])) {
            continue;  // header
        }
        if (fields.size() != 3) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(lineno) + ": expected 3 fields u,v,w");
        }
        Edge e;
        try {
            e.u = static_cast<Index>(io::parse_integer(fields[0]));
            e.v = static_cast<Index>(io::parse_integer(fields[1]));
            e.w = io::parse_double(fields[2]);
        } catch (const Error& err) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + err.what());
        }
        if (e.u < 0 || e.v < 0) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": negative index");
        }
        if (e.w < 0.0) {
            throw Error(ErrorCode::NegativeWeight, "line " + std::to_string(lineno) + ": negative weight");
        }
        max_index = std::max({max_index, e.u, e.v});
        edges.push_back(e);
    }
    if (max_index < 0) {
        throw Error(ErrorCode::ParseError, "edge list is empty");
    }
    return Graph(max_index + 1, std::move(edges));
}

Graph from_edge_list(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open edge list " + path.string());
    }
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out)
{
    out << "u,v,w\n";
    for (const auto& e : g.edges()) {
        out << e.u << ',' << e.v << ',' << io::format_double(e.w) << '\n';
    }
}

}  // namespace hgfrft
