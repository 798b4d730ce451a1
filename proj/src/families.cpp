#include "families.hpp"
#include "centrality.hpp"
#include <cmath>
#include <map>
#include <stdexcept>

namespace {

int add_leaves(UndirectedGraph& g, std::vector<int>& labels, int center, long count,
               int label) {
    int first = g.n;
    for (long i = 0; i < count; i++) {
        int v = g.n++;
        labels.push_back(label);
        g.edges.insert({std::min(center, v), std::max(center, v)});
    }
    return first;
}

void add_edge_raw(UndirectedGraph& g, int a, int b) {
    if (a > b) std::swap(a, b);
    g.edges.insert({a, b});
}

OracleEntry exact_entry(const std::string& measure, int vertex, bool post,
                        const BigRational& expected) {
    OracleEntry e;
    e.measure = measure;
    e.vertex = vertex;
    e.post = post;
    e.exact = true;
    e.expected = expected;
    e.expected.canonicalize(); // two-argument mpq construction is not canonical
    return e;
}

OracleEntry float_entry(const std::string& measure, int vertex, bool post, double expected,
                        double tol) {
    OracleEntry e;
    e.measure = measure;
    e.vertex = vertex;
    e.post = post;
    e.exact = false;
    e.expected_f = expected;
    e.tol = tol;
    return e;
}

Coloring coloring_from_labels(const std::vector<int>& labels, int base_n) {
    Coloring c;
    c.total_n = (int)labels.size();
    c.base_n = base_n;
    c.map = labels;
    c.validate();
    return c;
}

} // namespace

FamilyInstance geometric_family(long j, long k, long r) {
    if (j < 1 || k < 1 || r < 1)
        throw std::invalid_argument("geometric_family: need j, k, r >= 1");
    FamilyInstance f;
    f.name = "geometric";
    UndirectedGraph& g = f.graph;
    g.n = 6;
    f.labels = {0, 1, 2, 3, 6, 7}; // 4 and 5 are inner path vertices
    // core path 0 - 4 - 5 - 3 - 2 - 1 (drawn labels 0-6-7-3-2-1)
    add_edge_raw(g, 0, 4);
    add_edge_raw(g, 4, 5);
    add_edge_raw(g, 5, 3);
    add_edge_raw(g, 3, 2);
    add_edge_raw(g, 2, 1);
    add_leaves(g, f.labels, 0, j, 8);
    add_leaves(g, f.labels, 3, k, 9);
    add_leaves(g, f.labels, 1, r, 5);
    int c4 = add_leaves(g, f.labels, 2, r, 4);
    f.x = 0;
    f.y = 1;

    // peripheralities (sum of distances); closeness is their reciprocal
    BigRational pre0 = 15 + j + 4 * k + 11 * r, post0 = 9 + j + 4 * k + 5 * r;
    BigRational pre1 = 15 + 6 * j + 3 * k + 3 * r, post1 = 9 + 2 * j + 3 * k + 3 * r;
    BigRational pre4 = 15 + 6 * j + 3 * k + 5 * r, post4 = 13 + 4 * j + 3 * k + 5 * r;
    f.oracle.push_back(exact_entry("closeness", 0, false, 1 / pre0));
    f.oracle.push_back(exact_entry("closeness", 1, false, 1 / pre1));
    f.oracle.push_back(exact_entry("closeness", c4, false, 1 / pre4));
    f.oracle.push_back(exact_entry("closeness", 0, true, 1 / post0));
    f.oracle.push_back(exact_entry("closeness", 1, true, 1 / post1));
    f.oracle.push_back(exact_entry("closeness", c4, true, 1 / post4));

    BigRational r137_60(137, 60), r10_3(10, 3), r29_12(29, 12);
    f.oracle.push_back(exact_entry(
        "harmonic", 0, false, r137_60 + j + BigRational(k, 4) + BigRational(11 * r, 30)));
    f.oracle.push_back(exact_entry(
        "harmonic", 1, false,
        r137_60 + BigRational(j, 6) + BigRational(k, 3) + BigRational(3 * r, 2)));
    f.oracle.push_back(exact_entry(
        "harmonic", c4, false,
        r137_60 + BigRational(j, 6) + BigRational(k, 3) + BigRational(5 * r, 6)));
    f.oracle.push_back(exact_entry(
        "harmonic", 0, true, r10_3 + j + BigRational(k, 4) + BigRational(5 * r, 6)));
    f.oracle.push_back(exact_entry(
        "harmonic", 1, true,
        r10_3 + BigRational(j, 2) + BigRational(k, 3) + BigRational(3 * r, 2)));
    f.oracle.push_back(exact_entry(
        "harmonic", c4, true,
        r29_12 + BigRational(j, 4) + BigRational(k, 3) + BigRational(5 * r, 6)));
    return f;
}

namespace {
// Fixed 7-vertex frame of the betweenness family (vertices 0..6) and the
// shared neighborhood of the j interchangeable vertices.
// PLACEHOLDER until the frame reconstruction lands.
const std::vector<std::pair<int, int>> BETWEENNESS_FRAME = {};
const std::vector<int> BETWEENNESS_TWIN_NBRS = {};
const bool BETWEENNESS_TWINS_ADJACENT = false;
} // namespace

FamilyInstance betweenness_family(long h, long j, long k) {
    if (h < 1 || j < 1 || k < 1)
        throw std::invalid_argument("betweenness_family: need h, j, k >= 1");
    if (BETWEENNESS_FRAME.empty())
        throw std::logic_error("betweenness_family: frame not configured");
    FamilyInstance f;
    f.name = "betweenness";
    UndirectedGraph& g = f.graph;
    g.n = 7;
    f.labels = {0, 1, 2, 6, 7, 8, 9};
    for (auto [a, b] : BETWEENNESS_FRAME) add_edge_raw(g, a, b);
    add_leaves(g, f.labels, 0, k, 3);
    add_leaves(g, f.labels, 1, h, 5);
    int t0 = g.n;
    for (long i = 0; i < j; i++) {
        int v = g.n++;
        f.labels.push_back(4);
        for (int u : BETWEENNESS_TWIN_NBRS) add_edge_raw(g, u, v);
    }
    if (BETWEENNESS_TWINS_ADJACENT)
        for (int a = t0; a < g.n; a++)
            for (int b = a + 1; b < g.n; b++) add_edge_raw(g, a, b);
    f.x = 0;
    f.y = 1;

    BigRational H(h), J(j), K(k);
    BigRational pre0 = K * (2 * H + 2 * J + K + 11) / 2;
    BigRational pre1 = (H * H + (2 * J + 2 * K + 11) * H + 3 * K + 7) / 2;
    BigRational pre2 = ((2 * H + 2) * J + 3 * H + K + 5) / 2;
    BigRational post1 = (H * H + (2 * J + 2 * K + 11) * H + (K + 1) * (J + 4) + 4) / 2;
    BigRational post2 = ((2 * H + K + 2) * J + 3 * H + 2 * K + 6) / 2;
    f.oracle.push_back(exact_entry("betweenness", 0, false, pre0));
    f.oracle.push_back(exact_entry("betweenness", 1, false, pre1));
    f.oracle.push_back(exact_entry("betweenness", 2, false, pre2));
    f.oracle.push_back(exact_entry("betweenness", 0, true, pre0));
    f.oracle.push_back(exact_entry("betweenness", 1, true, post1));
    f.oracle.push_back(exact_entry("betweenness", 2, true, post2));
    return f;
}

FamilyInstance eigen_family(long k, long s) {
    if (k < 3) throw std::invalid_argument("eigen_family: need k >= 3");
    if (s < 0) s = (k - 1) * (k - 2);
    FamilyInstance f;
    f.name = "eigen";
    UndirectedGraph& g = f.graph;
    g.n = 4;
    f.labels = {0, 1, 2, 3};
    add_edge_raw(g, 0, 3);
    add_edge_raw(g, 2, 3);
    add_edge_raw(g, 1, 2);
    int c4 = g.n;
    for (long i = 0; i < k; i++) {
        int v = g.n++;
        f.labels.push_back(4);
        add_edge_raw(g, 0, v);
    }
    for (int a = c4; a < c4 + k; a++)
        for (int b = a + 1; b < c4 + k; b++) add_edge_raw(g, a, b);
    add_leaves(g, f.labels, 1, s, 5);
    int c6 = g.n;
    for (long i = 0; i < k; i++) {
        int v = g.n++;
        f.labels.push_back(6);
        add_edge_raw(g, 2, v);
    }
    for (int a = c6; a < c6 + k; a++)
        for (int b = a + 1; b < c6 + k; b++) add_edge_raw(g, a, b);
    f.x = 0;
    f.y = 1;
    f.coloring = coloring_from_labels(f.labels, 7);

    Multigraph b;
    b.n = 7;
    b.add_arc(0, 3);
    b.add_arc(0, 4);
    b.add_arc(1, 2);
    b.add_arc(1, 5);
    b.add_arc(2, 1);
    b.add_arc(2, 3);
    b.add_arc(2, 6);
    b.add_arc(3, 0);
    b.add_arc(3, 2);
    b.add_arc(4, 0, k);
    b.add_arc(4, 4, k - 1);
    b.add_arc(5, 1, s);
    b.add_arc(6, 2, k);
    b.add_arc(6, 6, k - 1);
    f.base = b;
    return f;
}

FamilyInstance eigen_small() {
    FamilyInstance f;
    f.name = "eigen-small";
    f.graph.n = 5;
    f.labels = {0, 1, 2, 3, 4};
    add_edge_raw(f.graph, 0, 2);
    add_edge_raw(f.graph, 0, 3);
    add_edge_raw(f.graph, 0, 4);
    add_edge_raw(f.graph, 1, 2);
    f.x = 0;
    f.y = 1;
    const double tol = 1e-4;
    f.oracle.push_back(float_entry("eigenvector:l1", 0, false, 0.30656, tol));
    f.oracle.push_back(float_entry("eigenvector:l1", 0, true, 0.29914, tol));
    f.oracle.push_back(float_entry("eigenvector:l2", 0, false, 0.65328, tol));
    f.oracle.push_back(float_entry("eigenvector:l2", 0, true, 0.63586, tol));
    f.oracle.push_back(float_entry("eigenvector:proj", 0, false, 1.39213, tol));
    f.oracle.push_back(float_entry("eigenvector:proj", 0, true, 1.35159, tol));
    return f;
}

FamilyInstance eigen_rank_small() {
    FamilyInstance f;
    f.name = "eigen-rank-small";
    f.graph.n = 9;
    f.labels = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    // triangle on {0, 3, 7}; star at 8 with leaves {2, 4, 5, 6}; tail 1 - 2.
    // Before the edge the graph is split in two; the dominant eigenvector
    // lives on the star side, so the triangle scores zero.
    add_edge_raw(f.graph, 0, 3);
    add_edge_raw(f.graph, 0, 7);
    add_edge_raw(f.graph, 3, 7);
    add_edge_raw(f.graph, 1, 2);
    add_edge_raw(f.graph, 2, 8);
    add_edge_raw(f.graph, 4, 8);
    add_edge_raw(f.graph, 5, 8);
    add_edge_raw(f.graph, 6, 8);
    f.x = 0;
    f.y = 1;
    return f;
}

FamilyInstance pagerank_family(long k) {
    if (k < 3) throw std::invalid_argument("pagerank_family: need k >= 3");
    FamilyInstance f;
    f.name = "pagerank";
    UndirectedGraph& g = f.graph;
    g.n = 8;
    f.labels = {0, 1, 2, 3, 4, 5, 6, 7};
    add_edge_raw(g, 1, 2);
    add_edge_raw(g, 2, 3);
    add_edge_raw(g, 3, 5);
    add_edge_raw(g, 5, 6);
    add_edge_raw(g, 6, 7);
    add_edge_raw(g, 7, 0);
    std::vector<int> c4 = {4};
    for (long i = 1; i < k; i++) {
        c4.push_back(g.n++);
        f.labels.push_back(4);
    }
    for (size_t a = 0; a < c4.size(); a++) {
        add_edge_raw(g, 3, c4[a]);
        for (size_t b = a + 1; b < c4.size(); b++) add_edge_raw(g, c4[a], c4[b]);
    }
    std::vector<int> c8;
    for (long i = 0; i < k - 1; i++) {
        c8.push_back(g.n++);
        f.labels.push_back(8);
    }
    for (size_t a = 0; a < c8.size(); a++) {
        add_edge_raw(g, 0, c8[a]);
        add_edge_raw(g, 7, c8[a]);
        for (size_t b = a + 1; b < c8.size(); b++) add_edge_raw(g, c8[a], c8[b]);
    }
    f.x = 0;
    f.y = 1;
    f.coloring = coloring_from_labels(f.labels, 9);

    // the two printed row-stochastic bases
    Multigraph b;
    b.n = 9;
    b.add_weighted_arc(0, 7, BigRational(1, k));
    b.add_weighted_arc(0, 8, BigRational(1, k));
    b.add_weighted_arc(1, 2, 1);
    b.add_weighted_arc(2, 1, BigRational(1, 2));
    b.add_weighted_arc(2, 3, BigRational(1, 2));
    b.add_weighted_arc(3, 2, BigRational(1, k + 2));
    b.add_weighted_arc(3, 4, BigRational(1, k + 2));
    b.add_weighted_arc(3, 5, BigRational(1, k + 2));
    b.add_weighted_arc(4, 3, BigRational(k, k));
    b.add_weighted_arc(4, 4, BigRational(k - 1, k));
    b.add_weighted_arc(5, 3, BigRational(1, 2));
    b.add_weighted_arc(5, 6, BigRational(1, 2));
    b.add_weighted_arc(6, 5, BigRational(1, 2));
    b.add_weighted_arc(6, 7, BigRational(1, 2));
    b.add_weighted_arc(7, 0, BigRational(1, k + 1));
    b.add_weighted_arc(7, 6, BigRational(1, k + 1));
    b.add_weighted_arc(7, 8, BigRational(1, k + 1));
    b.add_weighted_arc(8, 0, BigRational(k - 1, k));
    b.add_weighted_arc(8, 7, BigRational(k - 1, k));
    b.add_weighted_arc(8, 8, BigRational(k - 2, k));
    f.base = b;

    Multigraph bp;
    bp.n = 9;
    bp.add_weighted_arc(0, 1, BigRational(1, k + 1));
    bp.add_weighted_arc(0, 7, BigRational(1, k + 1));
    bp.add_weighted_arc(0, 8, BigRational(1, k + 1));
    bp.add_weighted_arc(1, 0, BigRational(1, 2));
    bp.add_weighted_arc(1, 2, BigRational(1, 2));
    for (const auto& a : b.arcs)
        if (a.src >= 2) bp.add_weighted_arc(a.src, a.dst, a.weight);
    f.base_post = bp;
    return f;
}

FamilyInstance pagerank_top_family(long k) {
    if (k < 2) throw std::invalid_argument("pagerank_top_family: need k >= 2");
    FamilyInstance f;
    f.name = "pagerank-top";
    UndirectedGraph& g = f.graph;
    g.n = 7;
    f.labels = {0, 1, 2, 3, 4, 5, 6};
    add_edge_raw(g, 0, 2);
    add_edge_raw(g, 2, 4);
    add_edge_raw(g, 1, 2);
    std::vector<int> c3 = {3}, c5 = {5}, c6 = {6};
    for (long i = 1; i < k; i++) {
        c3.push_back(g.n++);
        f.labels.push_back(3);
    }
    for (long i = 1; i < k; i++) {
        c5.push_back(g.n++);
        f.labels.push_back(5);
    }
    for (long i = 1; i < k; i++) {
        c6.push_back(g.n++);
        f.labels.push_back(6);
    }
    for (int v : c3) add_edge_raw(g, 0, v);
    for (int v : c5) add_edge_raw(g, 4, v);
    for (size_t a = 0; a < c6.size(); a++) {
        add_edge_raw(g, 1, c6[a]);
        add_edge_raw(g, 2, c6[a]);
        for (size_t b = a + 1; b < c6.size(); b++) add_edge_raw(g, c6[a], c6[b]);
    }
    f.x = 0;
    f.y = 1;
    f.coloring = coloring_from_labels(f.labels, 7);
    f.base = quotient(row_normalize(to_multigraph(g)), *f.coloring);
    return f;
}

const std::vector<std::pair<long, long>>& eigen_star_table() {
    static const std::vector<std::pair<long, long>> t = {
        {8, 40},    {9, 53},    {10, 67},   {11, 83},   {12, 101},  {14, 142},
        {15, 165},  {16, 190},  {17, 217},  {18, 246},  {19, 276},  {24, 456},
        {26, 541},  {27, 586},  {28, 633},  {29, 682},  {30, 733},  {31, 786},
        {32, 840},  {34, 955},  {35, 1015}, {36, 1077}, {37, 1141}, {38, 1207},
        {40, 1344}, {43, 1564}, {44, 1641}, {45, 1720}, {48, 1968}, {50, 2143},
        {51, 2233}, {56, 2713}, {57, 2815}, {59, 3024}, {61, 3241}, {62, 3352},
        {63, 3465}, {64, 3580}, {65, 3697}, {66, 3816}, {68, 4059}, {69, 4184},
        {70, 4310}, {72, 4569}, {73, 4701}, {74, 4835}, {75, 4971}, {76, 5109}};
    return t;
}

OracleReport oracle_check(const FamilyInstance& f, const std::string& measure) {
    OracleReport rep;
    UndirectedGraph post_graph = add_edge(f.graph, f.x, f.y);
    // cache score vectors per (measure, phase)
    std::map<std::pair<std::string, bool>, ScoreVector> cache;
    for (const auto& e : f.oracle) {
        if (!measure.empty() && e.measure != measure) continue;
        auto key = std::make_pair(e.measure, e.post);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, compute_measure(e.post ? post_graph : f.graph,
                                                    e.measure, BigRational(0)))
                     .first;
        const ScoreVector& s = it->second;
        rep.checked++;
        if (e.exact) {
            BigRational want = e.expected;
            want.canonicalize(); // closed forms may be built from two-argument mpq constructions
            if (!s.exact || s.rat[e.vertex] != want) {
                OracleMismatch m;
                m.entry = e;
                m.found = s.value_str(e.vertex);
                rep.mismatches.push_back(m);
            }
        } else {
            double got = s.as_double(e.vertex);
            if (std::fabs(got - e.expected_f) > e.tol) {
                OracleMismatch m;
                m.entry = e;
                m.found_f = got;
                m.found = s.value_str(e.vertex);
                rep.mismatches.push_back(m);
            }
        }
    }
    return rep;
}
