#include "centrality.hpp"
#include "matrix.hpp"
#include <cmath>
#include <deque>
#include <stdexcept>

std::string ScoreVector::value_str(int v) const {
    if (exact) return rational_str(rat[v]);
    char buf[32];
    snprintf(buf, sizeof buf, "%.10g", flt[v]);
    return buf;
}

int ScoreVector::cmp(int u, int v) const { return cmp_across(u, *this, v); }

int ScoreVector::cmp_across(int u, const ScoreVector& other, int v) const {
    if (exact != other.exact) throw std::logic_error("mixed exact/float comparison");
    if (exact) {
        int c = ::cmp(rat[u], other.rat[v]);
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    double d = flt[u] - other.flt[v];
    if (std::fabs(d) <= EIGEN_TAU) return 0;
    return d < 0 ? -1 : 1;
}

ScoreVector closeness(const UndirectedGraph& g) {
    ScoreVector s;
    s.measure = "closeness";
    s.rat.resize(g.n);
    for (int v = 0; v < g.n; v++) {
        DistanceVector d = bfs_distances(g, v);
        long long sum = 0;
        for (int u = 0; u < g.n; u++)
            if (u != v && d.reachable(u)) sum += d.dist[u];
        s.rat[v] = sum == 0 ? BigRational(0) : BigRational(1) / BigRational((long)sum);
    }
    return s;
}

ScoreVector harmonic(const UndirectedGraph& g) {
    ScoreVector s;
    s.measure = "harmonic";
    s.rat.resize(g.n);
    for (int v = 0; v < g.n; v++) {
        DistanceVector d = bfs_distances(g, v);
        BigRational sum = 0;
        for (int u = 0; u < g.n; u++)
            if (u != v && d.reachable(u)) sum += BigRational(1, d.dist[u]);
        s.rat[v] = sum;
    }
    return s;
}

ScoreVector betweenness(const UndirectedGraph& g) {
    // Brandes dependency accumulation, exact: integer path counts, rational
    // deltas, halved at the end (unordered-pair convention).
    ScoreVector s;
    s.measure = "betweenness";
    s.rat.assign(g.n, BigRational(0));
    auto adj = g.adjacency();
    std::vector<int> dist(g.n), order;
    std::vector<mpz_class> sigma(g.n);
    std::vector<std::vector<int>> pred(g.n);
    std::vector<BigRational> delta(g.n);
    for (int src = 0; src < g.n; src++) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0);
        for (auto& p : pred) p.clear();
        order.clear();
        dist[src] = 0;
        sigma[src] = 1;
        std::deque<int> q{src};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            order.push_back(v);
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        std::fill(delta.begin(), delta.end(), BigRational(0));
        for (size_t i = order.size(); i-- > 0;) {
            int w = order[i];
            for (int v : pred[w])
                delta[v] += BigRational(sigma[v]) / BigRational(sigma[w]) *
                            (BigRational(1) + delta[w]);
            if (w != src) s.rat[w] += delta[w];
        }
    }
    for (auto& x : s.rat) x /= 2;
    return s;
}

ScoreVector degree_seeley(const UndirectedGraph& g) {
    if (g.edges.empty()) throw std::domain_error("seeley: graph has no edges");
    ScoreVector s;
    s.measure = "seeley";
    s.rat.resize(g.n);
    std::vector<int> deg(g.n, 0);
    for (auto& [x, y] : g.edges) {
        deg[x]++;
        deg[y]++;
    }
    long long m2 = 2 * (long long)g.edges.size();
    for (int v = 0; v < g.n; v++) {
        s.rat[v] = BigRational((long)deg[v], (long)m2);
        s.rat[v].canonicalize();
    }
    return s;
}

ScoreVector eigenvector(const UndirectedGraph& g, EigenNorm norm) {
    // Disconnected graphs are allowed: power iteration from a uniform positive
    // start converges to the Perron vector of the component with the largest
    // spectral radius, zero elsewhere, which is the dominant eigenvector of
    // the whole adjacency matrix.
    ScoreVector s;
    s.measure = norm == EigenNorm::L1         ? "eigenvector:l1"
                : norm == EigenNorm::L2       ? "eigenvector:l2"
                                              : "eigenvector:proj";
    s.exact = false;
    int n = g.n;
    auto adj = g.adjacency();
    // Power iteration on A + I: the spectral shift kills bipartite period-2
    // oscillation and preserves the dominant eigenvector.
    std::vector<double> v(n, 1.0 / n), w(n);
    for (int it = 0; it < 200000; it++) {
        double sum = 0;
        for (int i = 0; i < n; i++) {
            w[i] = v[i];
            for (int j : adj[i]) w[i] += v[j];
            sum += w[i];
        }
        double diff = 0;
        for (int i = 0; i < n; i++) {
            w[i] /= sum;
            diff = std::max(diff, std::fabs(w[i] - v[i]));
            v[i] = w[i];
        }
        if (diff < EIGEN_CONVERGENCE) break;
    }
    // v is l1-normalized and nonnegative
    if (norm == EigenNorm::L2) {
        double l2 = 0;
        for (double x : v) l2 += x * x;
        l2 = std::sqrt(l2);
        for (double& x : v) x /= l2;
    } else if (norm == EigenNorm::ProjectOnes) {
        double dot1 = 0, dot2 = 0;
        for (double x : v) {
            dot1 += x;
            dot2 += x * x;
        }
        double f = dot1 / dot2;
        for (double& x : v) x *= f;
    }
    s.flt = std::move(v);
    return s;
}

std::vector<BigRational> resolvent_solve(const std::vector<std::vector<BigRational>>& m,
                                         const BigRational& alpha,
                                         const std::vector<BigRational>& v) {
    int n = (int)m.size();
    RatMatrix sys(n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) sys[i][j] = (i == j ? 1 : 0) - alpha * m[i][j];
    return solve_linear(sys, v);
}

ScoreVector katz(const UndirectedGraph& g, const BigRational& alpha) {
    if (alpha < 0) throw std::domain_error("katz: alpha must be nonnegative");
    ScoreVector s;
    s.measure = "katz";
    s.params = "alpha=" + rational_str(alpha);
    auto m = to_multigraph(g).matrix();
    std::vector<BigRational> ones(g.n, BigRational(1));
    std::vector<BigRational> x;
    try {
        x = resolvent_solve(m, alpha, ones);
    } catch (const std::domain_error&) {
        throw std::domain_error("katz: alpha at or beyond 1/spectral radius (singular)");
    }
    for (auto& xi : x)
        if (xi < 1)
            throw std::domain_error("katz: alpha beyond 1/spectral radius (negative series)");
    s.rat = std::move(x);
    return s;
}

std::vector<BigRational> pagerank_multigraph(const Multigraph& g, const BigRational& alpha,
                                             const std::vector<BigRational>& preference) {
    if (alpha < 0 || alpha >= 1) throw std::domain_error("pagerank: need 0 <= alpha < 1");
    std::vector<BigRational> v = preference;
    if (v.empty()) v.assign(g.n, BigRational(1, g.n));
    if ((int)v.size() != g.n) throw std::invalid_argument("pagerank: preference size");
    auto m = row_normalize(g).matrix();
    std::vector<BigRational> rhs(g.n);
    for (int i = 0; i < g.n; i++) rhs[i] = (1 - alpha) * v[i];
    std::vector<BigRational> x = resolvent_solve(m, alpha, rhs);
    BigRational total = 0;
    for (auto& xi : x) total += xi;
    if (total == 0) throw std::domain_error("pagerank: zero total mass");
    for (auto& xi : x) xi /= total;
    return x;
}

ScoreVector pagerank(const UndirectedGraph& g, const BigRational& alpha,
                     const std::vector<BigRational>& preference) {
    ScoreVector s;
    s.measure = "pagerank";
    s.params = "alpha=" + rational_str(alpha);
    s.rat = pagerank_multigraph(to_multigraph(g), alpha, preference);
    return s;
}

bool is_known_measure(const std::string& m) {
    return m == "closeness" || m == "harmonic" || m == "betweenness" || m == "seeley" ||
           m == "eigenvector:l1" || m == "eigenvector:l2" || m == "eigenvector:proj" ||
           m == "katz" || m == "pagerank";
}

bool measure_needs_alpha(const std::string& m) { return m == "katz" || m == "pagerank"; }

ScoreVector compute_measure(const UndirectedGraph& g, const std::string& measure,
                            const BigRational& alpha) {
    if (measure == "closeness") return closeness(g);
    if (measure == "harmonic") return harmonic(g);
    if (measure == "betweenness") return betweenness(g);
    if (measure == "seeley") return degree_seeley(g);
    if (measure == "eigenvector:l1") return eigenvector(g, EigenNorm::L1);
    if (measure == "eigenvector:l2") return eigenvector(g, EigenNorm::L2);
    if (measure == "eigenvector:proj") return eigenvector(g, EigenNorm::ProjectOnes);
    if (measure == "katz") return katz(g, alpha);
    if (measure == "pagerank") return pagerank(g, alpha);
    throw std::invalid_argument("unknown measure: " + measure);
}
