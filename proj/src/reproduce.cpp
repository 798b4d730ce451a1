#include "reproduce.hpp"
#include "centrality.hpp"
#include "families.hpp"
#include "fibration.hpp"
#include "matrix.hpp"
#include "monotonicity.hpp"
#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace {

std::vector<int> label_vertices(const FamilyInstance& f, int label) {
    std::vector<int> out;
    for (size_t i = 0; i < f.labels.size(); i++)
        if (f.labels[i] == label) out.push_back((int)i);
    return out;
}

RatMatrix base_matrix(const Multigraph& g) {
    RatMatrix m((int)g.n);
    auto v = g.matrix();
    for (int i = 0; i < m.n; i++) m.a[i] = v[i];
    return m;
}

Multigraph post_quotient(const FamilyInstance& f) {
    return quotient(to_multigraph(add_edge(f.graph, f.x, f.y)), *f.coloring);
}

// ---- criteria 1 and 2: the distance-based geometric family ----------------

ClaimResult geometric_claim(const std::string& id, const std::string& measure,
                            std::function<std::pair<long, long>(long)> bottom_jk,
                            std::function<std::pair<long, long>(long)> top_jk, long r_lo_bottom,
                            long r_hi_bottom, long r_lo_top, long r_hi_top) {
    ClaimResult res{id, true, ""};
    std::ostringstream d;
    for (long r = r_lo_bottom; r <= r_hi_bottom; r++) {
        auto [j, k] = bottom_jk(r);
        auto f = geometric_family(j, k, r);
        auto rep = audit_edge(f.graph, f.x, f.y, measure, 0);
        bool cls_ok = rep.cls == ViolationClass::Bottom;
        bool wit_ok = rep.weak_witnesses_x == label_vertices(f, 4);
        // Correct demotion bound: the losing endpoint is overtaken by the
        // class-4 vertices, of which there are exactly r. The j-1 figure that
        // circulates for this family miscounts the class; it is checked and
        // reported rather than asserted.
        bool dem_ok = rep.demotion_x >= r;
        bool dem_jm1 = rep.demotion_x >= j - 1;
        if (!(cls_ok && wit_ok && dem_ok)) res.pass = false;
        d << "bottom r=" << r << ": class=" << violation_class_str(rep.cls)
          << " witnesses=" << (wit_ok ? "class4" : "unexpected") << " demotion="
          << rep.demotion_x << " (>=r " << (dem_ok ? "ok" : "FAIL") << ", >=j-1=" << (j - 1)
          << " " << (dem_jm1 ? "holds" : "does not hold") << "); ";
    }
    for (long r = r_lo_top; r <= r_hi_top; r++) {
        auto [j, k] = top_jk(r);
        auto f = geometric_family(j, k, r);
        auto rep = audit_edge(f.graph, f.x, f.y, measure, 0);
        bool cls_ok = rep.cls == ViolationClass::Top;
        bool wit_ok = rep.weak_witnesses_x == label_vertices(f, 4);
        bool dem_ok = rep.demotion_x >= r;
        if (!(cls_ok && wit_ok && dem_ok)) res.pass = false;
        d << "top r=" << r << ": class=" << violation_class_str(rep.cls) << " demotion="
          << rep.demotion_x << "; ";
    }
    res.detail = d.str();
    return res;
}

ClaimResult claim_closeness() {
    return geometric_claim(
        "closeness-rank", "closeness",
        [](long r) { return std::pair<long, long>{5 * r, 18 * r}; },
        [](long r) { return std::pair<long, long>{4 * r + 4, 12 * r + 17}; }, 2, 5, 1, 4);
}

ClaimResult claim_harmonic() {
    return geometric_claim(
        "harmonic-rank", "harmonic",
        [](long r) { return std::pair<long, long>{26 * r, 247 * r}; },
        [](long r) { return std::pair<long, long>{26 * r, 246 * r}; }, 1, 3, 1, 3);
}

// ---- criterion 3: betweenness family ---------------------------------------

ClaimResult claim_betweenness() {
    ClaimResult res{"betweenness", true, ""};
    std::ostringstream d;
    try {
        // delta of vertex 0 vanishes identically on a parameter grid
        for (long h = 1; h <= 5 && res.pass; h++)
            for (long k = 1; k <= 5; k++) {
                auto f = betweenness_family(h, 7, k);
                auto rep = audit_edge(f.graph, f.x, f.y, "betweenness", 0);
                if (rep.delta_x_str != "0") {
                    res.pass = false;
                    d << "delta0 != 0 at (h,j,k)=(" << h << ",7," << k << "): "
                      << rep.delta_x_str << "; ";
                    break;
                }
            }
        if (res.pass) d << "delta0=0 on 5x5 grid; ";
        {
            auto f = betweenness_family(13, 51, 13);
            auto rep = audit_edge(f.graph, f.x, f.y, "betweenness", 0);
            bool ok = rep.cls == ViolationClass::Bottom && !rep.weak_ok_x;
            if (!ok) res.pass = false;
            d << "(13,51,13): class=" << violation_class_str(rep.cls) << "; ";
        }
        {
            long least = -1;
            for (long h = 10; h <= 24; h++) {
                auto f = betweenness_family(h, 4 * h, h + 2);
                auto rep = audit_edge(f.graph, f.x, f.y, "betweenness", 0);
                if (rep.cls == ViolationClass::Top) {
                    least = h;
                    break;
                }
            }
            bool ok = least == 16;
            if (!ok) res.pass = false;
            d << "least top h (k=h+2, j=4h): observed " << least
              << ", re-derived 16, the h>=12 figure "
              << (least == 12 ? "matches" : "does not match") << "; ";
        }
    } catch (const std::exception& e) {
        res.pass = false;
        d << "constructor unavailable: " << e.what();
    }
    res.detail = d.str();
    return res;
}

// ---- criterion 4: small eigenvector graphs ---------------------------------

ClaimResult claim_eigen_small() {
    ClaimResult res{"eigen-small", true, ""};
    std::ostringstream d;
    auto f = eigen_small();
    auto rep4 = oracle_check(f);
    if (!rep4.ok()) res.pass = false;
    d << "caption scores: " << rep4.checked - (int)rep4.mismatches.size() << "/" << rep4.checked
      << " within 1e-4; ";
    auto g = eigen_rank_small();
    auto pre = eigenvector(g.graph, EigenNorm::L1);
    auto post = eigenvector(add_edge(g.graph, g.x, g.y), EigenNorm::L1);
    auto rep = audit_from_scores(pre, post, g.x, g.y);
    bool flip = pre.cmp(1, 3) > 0 && post.cmp(1, 3) < 0;
    bool nodem = rep.demotion_y <= 0;
    if (!(flip && nodem)) res.pass = false;
    d << "rank flip 1-vs-3: " << (flip ? "yes" : "NO") << ", demotion of 1: " << rep.demotion_y
      << " (non-demoted " << (nodem ? "ok" : "FAIL") << ")";
    res.detail = d.str();
    return res;
}

// ---- criterion 5: parametric eigenvector family ----------------------------

// Exact sign of entry(1) - entry(4) of the ones-row adjugate of (I - alpha B),
// with alpha certified below 1/rho by Sturm root isolation of the dominant
// characteristic root inside (lo, hi].
int adjugate_sign_near_rho(const RatMatrix& B, BigRational lo, BigRational hi, int want) {
    auto sf = squarefree_part(char_poly(B));
    auto adj = adjugate_row_sums(B);
    BigRational w = (hi - lo) / 4;
    for (int it = 0; it < 10; it++) {
        auto iv = isolate_root(sf, lo, hi, w);
        BigRational a = 1 / iv.second;
        if (rat_sign(adj.det.eval(a)) > 0) {
            int s = rat_sign(adj.entries[1].eval(a) - adj.entries[4].eval(a));
            if (s == want) return s;
        }
        w /= 16;
    }
    return 0;
}

ClaimResult claim_eigen_family() {
    ClaimResult res{"eigen-family", true, ""};
    std::ostringstream d;
    int flips = 0;
    for (long k = 7; k <= 20; k++) {
        auto f = eigen_family(k);
        auto pre = eigenvector(f.graph, EigenNorm::L1);
        auto post = eigenvector(add_edge(f.graph, f.x, f.y), EigenNorm::L1);
        int v4 = label_vertices(f, 4)[0];
        if (pre.cmp(1, v4) > 0 && post.cmp(1, v4) < 0) flips++;
    }
    if (flips != 14) res.pass = false;
    d << "float 1-vs-class-4 flip: " << flips << "/14 for k=7..20; ";
    // exact confirmation on the base at both ends of the k range
    for (long k : {7L, 20L}) {
        auto f = eigen_family(k);
        BigRational lo(k), hi(k);
        lo += BigRational(1, k * k);
        hi += BigRational(3, 4 * k);
        int spre = adjugate_sign_near_rho(base_matrix(*f.base), lo, hi, +1);
        int spost = adjugate_sign_near_rho(base_matrix(post_quotient(f)), lo, BigRational(2 * k), -1);
        if (!(spre > 0 && spost < 0)) res.pass = false;
        d << "exact adjugate near 1/rho k=" << k << ": pre sign " << spre << ", post sign "
          << spost << "; ";
    }
    // the fixed evaluation point 1/(k+3/(4k)) orders the pair correctly only
    // from k=54 on; report its sign there
    {
        long k = 54;
        auto f = eigen_family(k);
        BigRational astar(4 * k, 4 * k * k + 3);
        astar.canonicalize();
        auto adj = adjugate_row_sums(base_matrix(*f.base));
        int s = rat_sign(adj.entries[1].eval(astar) - adj.entries[4].eval(astar));
        if (s <= 0) res.pass = false;
        d << "fixed-point check at alpha=1/(k+3/(4k)), k=54: pre sign " << s
          << " (negative for k<=40, hence the certified-alpha confirmation above); ";
    }
    {
        // demotion of the losing endpoint: all k class-4 vertices overtake it,
        // and so does the other endpoint, for k+1 in total
        auto f = eigen_family(54);
        auto pre = eigenvector(f.graph, EigenNorm::L1);
        auto post = eigenvector(add_edge(f.graph, f.x, f.y), EigenNorm::L1);
        auto rep = audit_from_scores(pre, post, f.x, f.y);
        int c4 = 0;
        for (int z : label_vertices(f, 4))
            if (pre.cmp(z, 1) <= 0 && post.cmp(z, 1) > 0) c4++;
        if (!(c4 == 54 && rep.demotion_y == 55)) res.pass = false;
        d << "demotion at k=54: " << rep.demotion_y << " (all " << c4
          << " class-4 vertices plus the gaining endpoint); ";
    }
    int certs = 0;
    for (long k = 24; k <= 40; k++) {
        auto f = eigen_family(k);
        auto sf = squarefree_part(char_poly(base_matrix(*f.base)));
        BigRational lo(k), mid(k), hi(2 * k);
        lo += BigRational(1, k * k);
        mid += BigRational(3, 4 * k);
        if (count_roots(sf, lo, mid) == 1 && count_roots(sf, mid, hi) == 0) certs++;
    }
    if (certs != 17) res.pass = false;
    d << "Sturm certificates: " << certs << "/17 for k=24..40";
    res.detail = d.str();
    return res;
}

// ---- criterion 6: star-size table spot checks ------------------------------

ClaimResult claim_eigen_table2() {
    ClaimResult res{"eigen-table2", true, ""};
    std::ostringstream d;
    for (auto [k, s] : std::vector<std::pair<long, long>>{{8, 40}, {9, 53}, {10, 67}}) {
        auto f = eigen_family(k, s);
        auto rep = audit_edge(f.graph, f.x, f.y, "eigenvector:l1", 0);
        bool ok = rep.cls == ViolationClass::Bottom && !rep.weak_ok_y;
        if (!ok) res.pass = false;
        d << "(k,s)=(" << k << "," << s << "): " << violation_class_str(rep.cls) << "; ";
    }
    res.detail = d.str();
    return res;
}

// ---- criterion 7: Seeley randomized suite ----------------------------------

UndirectedGraph random_connected(int n, double p, std::mt19937_64& rng) {
    UndirectedGraph g;
    g.n = n;
    for (int v = 1; v < n; v++) {
        int u = (int)(rng() % (unsigned long)v);
        g.edges.insert({std::min(u, v), std::max(u, v)});
    }
    std::uniform_real_distribution<double> coin(0, 1);
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (coin(rng) < p) g.edges.insert({a, b});
    return g;
}

ClaimResult claim_seeley() {
    ClaimResult res{"seeley", true, ""};
    std::ostringstream d;
    std::mt19937_64 rng(20260826);
    int pairs = 0, strict_viol = 0, score_viol = 0;
    for (int t = 0; t < 200; t++) {
        int n = 5 + (int)(rng() % 36);
        auto g = random_connected(n, 0.08, rng);
        auto pre = degree_seeley(g);
        std::vector<std::pair<int, int>> cand;
        for (int a = 0; a < n; a++)
            for (int b = a + 1; b < n; b++)
                if (!g.has_edge(a, b)) cand.push_back({a, b});
        std::shuffle(cand.begin(), cand.end(), rng);
        if (cand.size() > 50) cand.resize(50);
        for (auto [a, b] : cand) {
            auto post = degree_seeley(add_edge(g, a, b));
            auto rep = audit_from_scores(pre, post, a, b);
            pairs++;
            if (!rep.strict_ok_x || !rep.strict_ok_y) strict_viol++;
            if (rep.delta_x_sign <= 0 || rep.delta_y_sign <= 0) score_viol++;
        }
    }
    if (strict_viol != 0 || score_viol != 0) res.pass = false;
    d << pairs << " random audits: " << strict_viol << " strict-rank violations, " << score_viol
      << " score violations; ";
    {
        // star plus an isolated vertex: the center's score stays exactly flat
        UndirectedGraph g;
        g.n = 7;
        for (int v = 1; v <= 5; v++) g.edges.insert({0, v});
        auto pre = degree_seeley(g);
        auto post = degree_seeley(add_edge(g, 0, 6));
        bool flat = pre.rat[0] == post.rat[0];
        if (!flat) res.pass = false;
        d << "star+isolated center delta: " << rational_str(post.rat[0] - pre.rat[0])
          << (flat ? " (exactly 0)" : " (FAIL)");
    }
    res.detail = d.str();
    return res;
}

// ---- criterion 8: Katz -------------------------------------------------------

ScoreVector katz_via_base(const Multigraph& base, const Coloring& col, const BigRational& al) {
    auto m = base.matrix();
    std::vector<BigRational> ones(base.n, 1);
    auto xb = resolvent_solve(m, al, ones);
    ScoreVector s;
    s.measure = "katz";
    s.params = "alpha=" + rational_str(al);
    s.exact = true;
    s.rat = lift_vector(xb, col);
    return s;
}

ClaimResult claim_katz() {
    ClaimResult res{"katz", true, ""};
    std::ostringstream d;
    const long k = 54;
    auto f = eigen_family(k);
    auto postq = post_quotient(f);
    auto Bm = f.base->matrix(), Pm = postq.matrix();
    std::vector<BigRational> ones(7, 1);
    auto audit_at = [&](const BigRational& al) {
        auto pre = katz_via_base(*f.base, *f.coloring, al);
        auto post = katz_via_base(postq, *f.coloring, al);
        return audit_from_scores(pre, post, f.x, f.y);
    };
    {
        BigRational a1(4 * k, 4 * k * k + 3);
        a1.canonicalize();
        auto rep = audit_at(a1);
        bool ok = rep.cls == ViolationClass::Top && !rep.weak_ok_y;
        if (!ok) res.pass = false;
        d << "alpha=1/(k+3/(4k)): " << violation_class_str(rep.cls) << ", demotion "
          << rep.demotion_y << "; ";
    }
    {
        // the relative importance of the endpoints changes sign inside the
        // violation window: bisect that crossing on the base, then audit just
        // below (top) and just above (bottom)
        auto rel10 = [&](const BigRational& al) {
            auto pre = resolvent_solve(Bm, al, ones);
            return rat_sign(pre[1] - pre[0]);
        };
        BigRational lo(k, k * k + 1);
        lo.canonicalize();
        BigRational a = lo - BigRational(40, 10000000), b = lo - BigRational(24, 10000000);
        a.canonicalize();
        b.canonicalize();
        for (int it = 0; it < 40; it++) {
            BigRational m = (a + b) / 2;
            m.canonicalize();
            if (rel10(m) > 0)
                a = m;
            else
                b = m;
        }
        // snap the two test points to denominator 10^12 so the resolvent
        // solutions stay small enough to audit quickly
        mpz_class den("1000000000000");
        BigRational at(mpz_class(a.get_num() * den / a.get_den()), den);
        BigRational bt(mpz_class(b.get_num() * den / b.get_den() + 1), den);
        at.canonicalize();
        bt.canonicalize();
        auto rt = audit_at(at), rb = audit_at(bt);
        bool ok = rt.cls == ViolationClass::Top && rb.cls == ViolationClass::Bottom;
        if (!ok) res.pass = false;
        d << "near alpha=1/(k+2/k): " << violation_class_str(rt.cls) << " then "
          << violation_class_str(rb.cls) << " across the endpoint crossing; ";
    }
    {
        // small-alpha sanity: strict degree order must be reproduced. At
        // alpha=1/(4k) the star of (k-1)(k-2) leaves makes two-step walks
        // dominate the single pair (3,5); at alpha=1/k^3 the first-order term
        // dominates everywhere.
        auto fibs = f.coloring->fibers();
        auto check = [&](const BigRational& al, int& mismatches, std::string& which) {
            auto pre = katz_via_base(*f.base, *f.coloring, al);
            mismatches = 0;
            for (int X = 0; X < 7; X++)
                for (int Y = X + 1; Y < 7; Y++) {
                    int u = fibs[X][0], v = fibs[Y][0];
                    int dd = (f.graph.degree(u) > f.graph.degree(v)) -
                             (f.graph.degree(u) < f.graph.degree(v));
                    if (dd == 0) continue;
                    if (rat_sign(pre.rat[u] - pre.rat[v]) != dd) {
                        mismatches++;
                        which = "(" + std::to_string(X) + "," + std::to_string(Y) + ")";
                    }
                }
        };
        int m1, m2;
        std::string w1, w2;
        check(BigRational(1, 4 * k), m1, w1);
        check(BigRational(1, k * k * k), m2, w2);
        bool ok = m2 == 0 && m1 == 1 && w1 == "(3,5)";
        if (!ok) res.pass = false;
        d << "degree order at alpha=1/k^3: " << (m2 == 0 ? "exact" : "FAIL")
          << "; at alpha=1/(4k): " << m1 << " exception" << (m1 == 1 ? " " + w1 : "")
          << " (two-step walks of the size-" << (k - 1) * (k - 2) << " star dominate)";
    }
    res.detail = d.str();
    return res;
}

// ---- criterion 9: PageRank ---------------------------------------------------

std::vector<BigRational> pr_base(const Multigraph& mg, const BigRational& al) {
    auto m = mg.matrix();
    std::vector<BigRational> ones(mg.n, 1);
    auto x = resolvent_solve(m, al, ones);
    for (auto& v : x) v *= (1 - al);
    return x;
}

ClaimResult claim_pagerank() {
    ClaimResult res{"pagerank", true, ""};
    std::ostringstream d;
    {
        auto f = pagerank_family(13);
        auto rep = audit_edge(f.graph, f.x, f.y, "pagerank", BigRational(2, 3));
        bool ok = rep.delta_y_sign < 0 && rep.cls == ViolationClass::Bottom;
        if (!ok) res.pass = false;
        d << "k=13 alpha=2/3: delta(1) sign " << rep.delta_y_sign << ", "
          << violation_class_str(rep.cls) << "; ";
    }
    {
        auto f = pagerank_family(14);
        BigRational al(2, 3);
        auto pre = pagerank(f.graph, al);
        auto post = pagerank(add_edge(f.graph, f.x, f.y), al);
        int v5 = label_vertices(f, 5)[0], v6 = label_vertices(f, 6)[0];
        auto rep = audit_from_scores(pre, post, f.x, f.y);
        bool flip = pre.cmp(1, v5) > 0 && post.cmp(1, v5) < 0;
        bool tie = post.rat[1] == post.rat[v6];
        bool dem = rep.demotion_y > 0;
        if (!(flip && tie && dem)) res.pass = false;
        d << "k=14: 1-vs-5 flip " << (flip ? "yes" : "NO") << ", post 1==6 tie "
          << (tie ? "exact" : "NO") << ", demotion " << rep.demotion_y << "; ";
    }
    {
        const long k = 14;
        auto f = pagerank_family(k);
        BigRational ak = BigRational(2, 3) - BigRational(2 * k, 3 * k + 100);
        BigRational bk = BigRational(2, 3) + BigRational(k, 3 * k + 100);
        ak.canonicalize();
        bk.canonicalize();
        BigRational pts[3] = {ak + BigRational(1, 100), BigRational(2, 3), bk};
        int s1 = 0, s2 = 0, s3 = 0;
        bool constant = true;
        for (int i = 0; i < 3; i++) {
            auto pre = pr_base(*f.base, pts[i]);
            auto post = pr_base(*f.base_post, pts[i]);
            int a = rat_sign(post[1] - pre[1]), b = rat_sign(pre[1] - pre[5]),
                c = rat_sign(post[1] - post[5]);
            if (i == 0) {
                s1 = a;
                s2 = b;
                s3 = c;
            } else if (a != s1 || b != s2 || c != s3)
                constant = false;
        }
        bool ok = constant && s1 < 0 && s2 > 0 && s3 < 0;
        if (!ok) res.pass = false;
        d << "sign constancy at {a_k+1/100, 2/3, b_k} (k=14): "
          << (constant ? "constant" : "NOT constant") << " signs (" << s1 << "," << s2 << ","
          << s3 << "); ";
    }
    {
        bool found = false;
        long fk = 0;
        std::string fa;
        for (long k : {3L, 5L, 8L}) {
            auto f = pagerank_top_family(k);
            for (auto al : {BigRational(1, 2), BigRational(2, 3), BigRational(4, 5),
                            BigRational(17, 20)}) {
                auto rep = audit_edge(f.graph, f.x, f.y, "pagerank", al);
                if (rep.cls == ViolationClass::Top && rep.delta_x_sign < 0) {
                    found = true;
                    fk = k;
                    fa = rational_str(al);
                    break;
                }
            }
            if (found) break;
        }
        if (!found) res.pass = false;
        d << "top-violation grid search: "
          << (found ? "hit at k=" + std::to_string(fk) + " alpha=" + fa : "none found");
    }
    res.detail = d.str();
    return res;
}

// ---- criterion 10: scanner property suite -----------------------------------

// Collaboration-style random graph: overlapping large cliques, pendant
// "extras" (some at the end of two-step chains), glued into one component.
UndirectedGraph collaboration_graph(int n, std::mt19937_64& rng) {
    UndirectedGraph g;
    g.n = n;
    int ncast = 5 + (int)(rng() % 4);
    std::uniform_int_distribution<int> vd(0, n - 1);
    for (int c = 0; c < ncast; c++) {
        int sz = 15 + (int)(rng() % 30);
        std::vector<int> mem;
        while ((int)mem.size() < sz) {
            int v = vd(rng);
            if (std::find(mem.begin(), mem.end(), v) == mem.end()) mem.push_back(v);
        }
        for (size_t i = 0; i < mem.size(); i++)
            for (size_t j = i + 1; j < mem.size(); j++)
                g.edges.insert({std::min(mem[i], mem[j]), std::max(mem[i], mem[j])});
    }
    std::vector<char> used(n, 0);
    for (auto& e : g.edges) used[e.first] = used[e.second] = 1;
    std::vector<int> core, iso;
    for (int v = 0; v < n; v++) (used[v] ? core : iso).push_back(v);
    for (size_t i = 0; i < iso.size(); i++) {
        int u = core[rng() % core.size()];
        if (i + 1 < iso.size() && (rng() % 2)) {
            g.edges.insert({std::min(u, iso[i]), std::max(u, iso[i])});
            g.edges.insert({std::min(iso[i], iso[i + 1]), std::max(iso[i], iso[i + 1])});
            i++;
        } else {
            g.edges.insert({std::min(u, iso[i]), std::max(u, iso[i])});
        }
    }
    std::vector<int> p(n);
    for (int i = 0; i < n; i++) p[i] = i;
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    for (auto& e : g.edges) p[find(e.first)] = find(e.second);
    for (int v = 1; v < n; v++)
        if (find(v) != find(0)) {
            g.edges.insert({std::min(0, v), std::max(0, v)});
            p[find(v)] = find(0);
        }
    return g;
}

ClaimResult claim_scanner() {
    ClaimResult res{"scanner", true, ""};
    std::ostringstream d;
    int viol = 0, both_hurt = 0, unclassified = 0, audits = 0;
    for (unsigned long seed = 1; seed <= 20; seed++) {
        std::mt19937_64 rng(seed);
        auto g = collaboration_graph(200, rng);
        ScanOptions opt;
        opt.source = PairSource::Random;
        opt.samples = 5;
        opt.seed = seed;
        auto reports = scan(g, "pagerank", BigRational(17, 20), opt);
        audits += opt.samples;
        for (auto& r : reports) {
            viol++;
            if (r.both_hurt_flag) both_hurt++;
            if (r.cls == ViolationClass::None) unclassified++;
        }
    }
    if (viol < 1 || both_hurt != 0 || unclassified != 0) res.pass = false;
    d << audits << " random-pair audits over 20 graphs: " << viol << " violations, "
      << unclassified << " unclassified, " << both_hurt << " both-endpoint flags; ";
    {
        // tie safety: a star has all leaves tied; the scan must handle it
        UndirectedGraph star;
        star.n = 6;
        for (int v = 1; v < 6; v++) star.edges.insert({0, v});
        ScanOptions opt;
        auto reports = scan(star, "pagerank", BigRational(17, 20), opt);
        d << "tie-heavy star scan: " << reports.size() << " reports, no crash; ";
    }
    {
        // forced both-endpoints-hurt flag on synthetic scores
        ScoreVector pre, post;
        pre.measure = post.measure = "synthetic";
        pre.exact = post.exact = true;
        pre.rat = {BigRational(3), BigRational(3), BigRational(1)};
        post.rat = {BigRational(2), BigRational(2), BigRational(1)};
        auto rep = audit_from_scores(pre, post, 0, 1);
        bool ok = rep.both_hurt_flag;
        if (!ok) res.pass = false;
        d << "synthetic both-hurt flag: " << (ok ? "raised" : "NOT raised");
    }
    res.detail = d.str();
    return res;
}

// ---- criterion 11: fibration engine -----------------------------------------

ClaimResult claim_fibration() {
    ClaimResult res{"fibration", true, ""};
    std::ostringstream d;
    std::mt19937_64 rng(7);
    int bases_ok = 0, bases_all = 0, lifts_ok = 0;
    auto rand_vec = [&](int n) {
        std::vector<BigRational> u(n);
        for (auto& x : u) {
            x = BigRational((long)(rng() % 2001) - 1000, (long)(rng() % 97) + 1);
            x.canonicalize();
        }
        return u;
    };
    struct Inst {
        FamilyInstance f;
        bool normalized; // PageRank families quotient the row-normalized graph
    };
    std::vector<Inst> insts;
    insts.push_back({eigen_family(7), false});
    insts.push_back({eigen_family(8, 40), false});
    insts.push_back({pagerank_family(13), true});
    insts.push_back({pagerank_family(14), true});
    insts.push_back({pagerank_top_family(5), true});
    for (auto& in : insts) {
        auto& f = in.f;
        Multigraph total =
            in.normalized ? row_normalize(to_multigraph(f.graph)) : to_multigraph(f.graph);
        auto q = quotient(total, *f.coloring);
        bases_all++;
        if (q.matrix() == f.base->matrix()) bases_ok++;
        if (f.base_post) {
            Multigraph tp = row_normalize(to_multigraph(add_edge(f.graph, f.x, f.y)));
            auto qp = quotient(tp, *f.coloring);
            bases_all++;
            if (qp.matrix() == f.base_post->matrix()) bases_ok++;
        }
        for (int t = 0; t < 20; t++)
            if (verify_lifting_commutation(total, q, *f.coloring, rand_vec((int)q.n)))
                lifts_ok++;
    }
    if (bases_ok != bases_all || lifts_ok != 100) res.pass = false;
    d << "printed bases reproduced: " << bases_ok << "/" << bases_all
      << "; lifting commutation: " << lifts_ok << "/100";
    res.detail = d.str();
    return res;
}

} // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = {
        "closeness-rank", "harmonic-rank", "betweenness", "eigen-small", "eigen-family",
        "eigen-table2",   "seeley",        "katz",        "pagerank",   "scanner",
        "fibration"};
    return ids;
}

ClaimResult run_claim(const std::string& id) {
    std::string key = id;
    if (key == "closeness-bottom" || key == "closeness-top") key = "closeness-rank";
    if (key == "harmonic-bottom" || key == "harmonic-top") key = "harmonic-rank";
    if (key == "pagerank-score" || key == "pagerank-rank" || key == "pagerank-top")
        key = "pagerank";
    if (key == "closeness-rank") return claim_closeness();
    if (key == "harmonic-rank") return claim_harmonic();
    if (key == "betweenness") return claim_betweenness();
    if (key == "eigen-small") return claim_eigen_small();
    if (key == "eigen-family") return claim_eigen_family();
    if (key == "eigen-table2") return claim_eigen_table2();
    if (key == "seeley") return claim_seeley();
    if (key == "katz") return claim_katz();
    if (key == "pagerank") return claim_pagerank();
    if (key == "scanner") return claim_scanner();
    if (key == "fibration") return claim_fibration();
    throw std::invalid_argument("unknown claim id: " + id);
}
