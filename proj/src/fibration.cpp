#include "fibration.hpp"
#include "centrality.hpp"
#include <sstream>
#include <stdexcept>

void Coloring::validate() const {
    if ((int)map.size() != total_n)
        throw std::invalid_argument("coloring: map size differs from node count");
    std::vector<char> seen(base_n, 0);
    for (int c : map) {
        if (c < 0 || c >= base_n) throw std::invalid_argument("coloring: base id out of range");
        seen[c] = 1;
    }
    for (int b = 0; b < base_n; b++)
        if (!seen[b])
            throw std::invalid_argument("coloring: not surjective, base node " +
                                        std::to_string(b) + " has empty fiber");
}

std::vector<std::vector<int>> Coloring::fibers() const {
    std::vector<std::vector<int>> f(base_n);
    for (int v = 0; v < total_n; v++) f[map[v]].push_back(v);
    return f;
}

Coloring parse_coloring_tsv(const std::string& text) {
    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, int>> entries;
    int max_node = -1, max_base = -1;
    while (std::getline(in, line)) {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ls(line);
        long long node, base;
        if (!(ls >> node)) continue;
        if (!(ls >> base) || node < 0 || base < 0)
            throw std::invalid_argument("malformed coloring line " + std::to_string(lineno));
        entries.push_back({(int)node, (int)base});
        max_node = std::max(max_node, (int)node);
        max_base = std::max(max_base, (int)base);
    }
    Coloring c;
    c.total_n = max_node + 1;
    c.base_n = max_base + 1;
    c.map.assign(c.total_n, -1);
    for (auto& [node, base] : entries) {
        if (c.map[node] != -1 && c.map[node] != base)
            throw std::invalid_argument("coloring maps node " + std::to_string(node) +
                                        " twice");
        c.map[node] = base;
    }
    for (int v = 0; v < c.total_n; v++)
        if (c.map[v] == -1)
            throw std::invalid_argument("coloring missing node " + std::to_string(v));
    c.validate();
    return c;
}

std::string serialize_coloring_tsv(const Coloring& c) {
    std::ostringstream out;
    for (int v = 0; v < c.total_n; v++) out << v << "\t" << c.map[v] << "\n";
    return out.str();
}

// fiber-aggregated in-weight of node v from fiber X
static BigRational in_weight_from_fiber(const std::vector<std::vector<BigRational>>& m,
                                        const std::vector<int>& fiber_x, int v) {
    BigRational s = 0;
    for (int u : fiber_x) s += m[u][v];
    return s;
}

Multigraph quotient(const Multigraph& g, const Coloring& c) {
    c.validate();
    if (g.n != c.total_n) throw std::invalid_argument("quotient: size mismatch");
    auto m = g.matrix();
    auto fibers = c.fibers();
    bool weighted = false;
    for (auto& a : g.arcs) weighted |= a.weighted;
    Multigraph b;
    b.n = c.base_n;
    for (int x = 0; x < c.base_n; x++) {
        for (int y = 0; y < c.base_n; y++) {
            BigRational w = in_weight_from_fiber(m, fibers[x], fibers[y][0]);
            for (int v : fibers[y]) {
                BigRational wv = in_weight_from_fiber(m, fibers[x], v);
                if (wv != w)
                    throw std::domain_error(
                        "quotient: coloring not equitable, nodes " +
                        std::to_string(fibers[y][0]) + " and " + std::to_string(v) +
                        " in fiber " + std::to_string(y) +
                        " have different in-weight from fiber " + std::to_string(x));
            }
            if (w == 0) continue;
            if (weighted)
                b.add_weighted_arc(x, y, w);
            else
                b.add_arc(x, y, w.get_num().get_si());
        }
    }
    return b;
}

FibrationCertificate check_fibration(const Multigraph& g, const Multigraph& b,
                                     const Coloring& c) {
    FibrationCertificate cert;
    cert.coloring = c;
    cert.base = b;
    c.validate();
    auto gm = g.matrix();
    auto bm = b.matrix();
    auto fibers = c.fibers();
    cert.valid = true;
    if (g.n != c.total_n || b.n != c.base_n) {
        cert.valid = false;
        return cert;
    }
    // Unique lifting of every base arc at every node of its target fiber is
    // equivalent (after parallel-arc aggregation) to: for every node v and
    // every base node X, the aggregated in-weight of v from fiber X equals
    // the base entry B[X][color(v)].
    for (int v = 0; v < g.n; v++) {
        for (int x = 0; x < c.base_n; x++) {
            BigRational found = in_weight_from_fiber(gm, fibers[x], v);
            BigRational expected = bm[x][c.map[v]];
            if (found != expected) {
                cert.valid = false;
                cert.violations.push_back({v, x, expected, found});
            }
        }
    }
    return cert;
}

std::vector<BigRational> lift_vector(const std::vector<BigRational>& u, const Coloring& c) {
    if ((int)u.size() != c.base_n) throw std::invalid_argument("lift_vector: length mismatch");
    std::vector<BigRational> r(c.total_n);
    for (int v = 0; v < c.total_n; v++) r[v] = u[c.map[v]];
    return r;
}

static std::vector<BigRational> row_times(const std::vector<BigRational>& v,
                                          const std::vector<std::vector<BigRational>>& m) {
    int n = (int)m.size();
    std::vector<BigRational> r(n, BigRational(0));
    for (int i = 0; i < n; i++) {
        if (v[i] == 0) continue;
        for (int j = 0; j < n; j++) r[j] += v[i] * m[i][j];
    }
    return r;
}

bool verify_lifting_commutation(const Multigraph& g, const Multigraph& b, const Coloring& c,
                                const std::vector<BigRational>& u) {
    if (!check_fibration(g, b, c).valid)
        throw std::domain_error("verify_lifting_commutation: not a fibration");
    auto lhs = row_times(lift_vector(u, c), g.matrix());
    auto rhs = lift_vector(row_times(u, b.matrix()), c);
    return lhs == rhs;
}

bool verify_resolvent_commutation(const Multigraph& g, const Multigraph& b,
                                  const Coloring& c, const std::vector<BigRational>& v,
                                  const BigRational& alpha) {
    if (!check_fibration(g, b, c).valid)
        throw std::domain_error("verify_resolvent_commutation: not a fibration");
    auto lhs = resolvent_solve(g.matrix(), alpha, lift_vector(v, c));
    auto rhs = lift_vector(resolvent_solve(b.matrix(), alpha, v), c);
    return lhs == rhs;
}
