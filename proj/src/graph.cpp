#include "graph.hpp"
#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

std::vector<std::vector<int>> UndirectedGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto& [x, y] : edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    return adj;
}

int UndirectedGraph::degree(int v) const {
    int d = 0;
    for (auto& [x, y] : edges) d += (x == v) + (y == v);
    return d;
}

void Multigraph::add_arc(int src, int dst, long long mult) {
    if (src < 0 || src >= n || dst < 0 || dst >= n)
        throw std::invalid_argument("arc endpoint out of range");
    if (mult < 1) throw std::invalid_argument("arc multiplicity must be >= 1");
    arcs.push_back({src, dst, mult, false, BigRational(0)});
}

void Multigraph::add_weighted_arc(int src, int dst, const BigRational& w) {
    if (src < 0 || src >= n || dst < 0 || dst >= n)
        throw std::invalid_argument("arc endpoint out of range");
    BigRational cw = w;
    cw.canonicalize(); // callers may pass two-argument mpq constructions
    arcs.push_back({src, dst, 1, true, cw});
}

std::vector<std::vector<BigRational>> Multigraph::matrix() const {
    std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n, BigRational(0)));
    for (auto& a : arcs) m[a.src][a.dst] += a.weighted ? a.weight : BigRational((long)a.mult);
    return m;
}

Multigraph to_multigraph(const UndirectedGraph& g) {
    Multigraph m;
    m.n = g.n;
    for (auto& [x, y] : g.edges) {
        m.add_arc(x, y);
        m.add_arc(y, x);
    }
    return m;
}

UndirectedGraph parse_edge_list(const std::string& text) {
    UndirectedGraph g;
    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    int maxid = -1;
    while (std::getline(in, line)) {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue; // blank or comment-only line
        std::string rest;
        if (!(ls >> v) || (ls >> rest) || u < 0 || v < 0)
            throw std::invalid_argument("malformed edge list at line " +
                                        std::to_string(lineno));
        if (u == v)
            throw std::invalid_argument("self-loop at line " + std::to_string(lineno));
        int a = (int)std::min(u, v), b = (int)std::max(u, v);
        g.edges.insert({a, b});
        maxid = std::max(maxid, b);
    }
    g.n = maxid + 1;
    return g;
}

std::string serialize_edge_list(const UndirectedGraph& g) {
    std::ostringstream out;
    for (auto& [x, y] : g.edges) out << x << " " << y << "\n";
    return out.str();
}

UndirectedGraph add_edge(const UndirectedGraph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("add_edge: endpoints coincide");
    if (x < 0 || y < 0 || x >= g.n || y >= g.n)
        throw std::invalid_argument("add_edge: endpoint out of range");
    if (g.has_edge(x, y)) throw std::invalid_argument("add_edge: edge already present");
    UndirectedGraph h = g;
    if (x > y) std::swap(x, y);
    h.edges.insert({x, y});
    return h;
}

DistanceVector bfs_distances(const UndirectedGraph& g, int s) {
    if (s < 0 || s >= g.n) throw std::invalid_argument("bfs_distances: source out of range");
    DistanceVector d;
    d.source = s;
    d.dist.assign(g.n, DistanceVector::UNREACHABLE);
    auto adj = g.adjacency();
    std::deque<int> q{s};
    d.dist[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (d.dist[w] == DistanceVector::UNREACHABLE) {
                d.dist[w] = d.dist[v] + 1;
                q.push_back(w);
            }
    }
    return d;
}

bool is_connected(const UndirectedGraph& g) {
    if (g.n == 0) return true;
    DistanceVector d = bfs_distances(g, 0);
    for (int v = 0; v < g.n; v++)
        if (!d.reachable(v)) return false;
    return true;
}

Multigraph row_normalize(const Multigraph& g) {
    std::vector<BigRational> outw(g.n, BigRational(0));
    for (auto& a : g.arcs) outw[a.src] += a.weighted ? a.weight : BigRational((long)a.mult);
    Multigraph r;
    r.n = g.n;
    for (auto& a : g.arcs) {
        BigRational w = a.weighted ? a.weight : BigRational((long)a.mult);
        r.add_weighted_arc(a.src, a.dst, w / outw[a.src]);
    }
    return r;
}

Multigraph parse_base_tsv(const std::string& text) {
    Multigraph g;
    std::vector<Multigraph::Arc> arcs;
    std::stringstream in(text);
    std::string line;
    int lineno = 0, maxid = -1;
    while (std::getline(in, line)) {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ls(line);
        long long src, dst, mult;
        if (!(ls >> src)) continue;
        if (!(ls >> dst >> mult) || src < 0 || dst < 0 || mult < 1)
            throw std::invalid_argument("malformed base line " + std::to_string(lineno));
        long long num, den;
        Multigraph::Arc a;
        a.src = (int)src;
        a.dst = (int)dst;
        a.mult = mult;
        if (ls >> num) {
            if (!(ls >> den) || den <= 0)
                throw std::invalid_argument("malformed weight at line " +
                                            std::to_string(lineno));
            a.weighted = true;
            a.weight = BigRational((long)num, (long)den);
            a.weight.canonicalize();
        }
        arcs.push_back(a);
        maxid = std::max(maxid, (int)std::max(src, dst));
    }
    g.n = maxid + 1;
    g.arcs = std::move(arcs);
    return g;
}

std::string serialize_base_tsv(const Multigraph& g) {
    std::ostringstream out;
    for (auto& a : g.arcs) {
        out << a.src << "\t" << a.dst << "\t" << a.mult;
        if (a.weighted)
            out << "\t" << a.weight.get_num().get_str() << "\t"
                << a.weight.get_den().get_str();
        out << "\n";
    }
    return out.str();
}
