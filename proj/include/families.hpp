#pragma once
#include "graph.hpp"
#include "fibration.hpp"
#include "rational.hpp"
#include <optional>
#include <string>
#include <vector>

// One expected score pinned to a vertex class, before or after the edge.
struct OracleEntry {
    std::string measure;   // normative measure string
    int vertex;            // representative vertex of the class
    bool post = false;     // false: before adding the edge, true: after
    bool exact = true;     // exact rational comparison vs float tolerance
    BigRational expected;  // used when exact
    double expected_f = 0; // used when !exact
    double tol = 0;        // float tolerance when !exact
};

struct FamilyInstance {
    std::string name;
    UndirectedGraph graph;
    int x = 0, y = 1;            // the edge to be added
    std::vector<int> labels;     // per-vertex class label as drawn
    std::optional<Coloring> coloring;   // onto base classes, when a base exists
    std::optional<Multigraph> base;     // quotient before the edge
    std::optional<Multigraph> base_post; // quotient after the edge (when printed)
    std::vector<OracleEntry> oracle;
};

struct OracleMismatch {
    OracleEntry entry;
    std::string found;
    double found_f = 0;
};

struct OracleReport {
    int checked = 0;
    std::vector<OracleMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Core path 0-6-7-3-2-1 with stars: j leaves at 0, k leaves at 3,
// r leaves at 1 (class 5) and r leaves at 2 (class 4).
FamilyInstance geometric_family(long j, long k, long r);

// Two stars (k leaves at 0, h leaves at 1) and j mutually nonadjacent
// vertices sharing one neighborhood inside a fixed 7-vertex frame.
FamilyInstance betweenness_family(long h, long j, long k);

// Parametric eigenvector family: 4 chain vertices, two k-cliques hanging
// off 0 and 2, and a star of size s at 1 (default s = (k-1)(k-2)).
FamilyInstance eigen_family(long k, long s = -1);

// Fixed small graphs.
FamilyInstance eigen_small();
FamilyInstance eigen_rank_small();

// PageRank family with 2k+6 vertices and the printed 9-vertex bases.
FamilyInstance pagerank_family(long k);

// PageRank top-violation family: two k-stars and a (k+2)-clique.
FamilyInstance pagerank_top_family(long k);

// (k, s) pairs for which the star-size override gives a bottom violation.
const std::vector<std::pair<long, long>>& eigen_star_table();

// Recompute every oracle entry of the instance for the given measure
// (empty measure = all) and report mismatches.
OracleReport oracle_check(const FamilyInstance& f, const std::string& measure = "");
