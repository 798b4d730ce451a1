#ifndef GRAPH_HPP
#define GRAPH_HPP

#include "rational.hpp"
#include <optional>
#include <set>
#include <string>
#include <vector>

// Simple undirected loopless graph on nodes 0..n-1.
struct UndirectedGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges; // stored with first < second

    bool has_edge(int x, int y) const {
        if (x > y) std::swap(x, y);
        return edges.count({x, y}) != 0;
    }
    std::vector<std::vector<int>> adjacency() const;
    int degree(int v) const;
};

// Directed multigraph with multiplicities and optional rational weights;
// carrier for bases and row-normalized graphs.
struct Multigraph {
    struct Arc {
        int src = 0, dst = 0;
        long long mult = 1;
        bool weighted = false;
        BigRational weight; // meaningful iff weighted
    };
    int n = 0;
    std::vector<Arc> arcs;

    void add_arc(int src, int dst, long long mult = 1);
    void add_weighted_arc(int src, int dst, const BigRational& w);
    // Aggregated matrix entry view: M[x][y] = total multiplicity (or weight)
    // of arcs x -> y.
    std::vector<std::vector<BigRational>> matrix() const;
};

Multigraph to_multigraph(const UndirectedGraph& g); // two opposite arcs per edge

struct DistanceVector {
    static constexpr int UNREACHABLE = -1;
    int source = 0;
    std::vector<int> dist; // UNREACHABLE marks unreachable nodes

    bool reachable(int v) const { return dist[v] != UNREACHABLE; }
};

// Parses a line-oriented edge list: "u v" per line, '#' starts a comment.
// Duplicate lines and reversed orientations collapse; self-loops rejected.
// Throws std::invalid_argument with the line number on malformed input.
UndirectedGraph parse_edge_list(const std::string& text);

std::string serialize_edge_list(const UndirectedGraph& g);

// Returns a copy with edge {x, y} added. Throws std::invalid_argument when
// x == y or the edge already exists.
UndirectedGraph add_edge(const UndirectedGraph& g, int x, int y);

DistanceVector bfs_distances(const UndirectedGraph& g, int s);

bool is_connected(const UndirectedGraph& g);

// Every arc out of v gets weight mult/outweight(v); rows with no out-arcs
// are left untouched.
Multigraph row_normalize(const Multigraph& g);

// Base-graph TSV: "src dst multiplicity [num den]" per line.
Multigraph parse_base_tsv(const std::string& text);
std::string serialize_base_tsv(const Multigraph& g);

#endif
