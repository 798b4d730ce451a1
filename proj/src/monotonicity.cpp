#include "monotonicity.hpp"
#include <json.hpp>
#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

std::string violation_class_str(ViolationClass c) {
    switch (c) {
        case ViolationClass::None: return "none";
        case ViolationClass::Top: return "top";
        case ViolationClass::Bottom: return "bottom";
        case ViolationClass::Both: return "both";
    }
    return "?";
}

static std::string delta_str(const ScoreVector& pre, const ScoreVector& post, int v) {
    if (pre.exact) return rational_str(post.rat[v] - pre.rat[v]);
    char buf[32];
    snprintf(buf, sizeof buf, "%.10g", post.flt[v] - pre.flt[v]);
    return buf;
}

MonotonicityReport audit_from_scores(const ScoreVector& pre, const ScoreVector& post, int x,
                                     int y) {
    MonotonicityReport r;
    r.x = x;
    r.y = y;
    r.measure = pre.measure;
    r.params = pre.params;
    r.exact = pre.exact;
    r.delta_x_str = delta_str(pre, post, x);
    r.delta_y_str = delta_str(pre, post, y);
    r.delta_x_sign = post.cmp_across(x, pre, x);
    r.delta_y_sign = post.cmp_across(y, pre, y);

    auto check_endpoint = [&](int e, bool& weak_ok, bool& strict_ok,
                              std::vector<int>& weak_w, std::vector<int>& strict_w) {
        for (int z = 0; z < pre.size(); z++) {
            if (z == x || z == y) continue;
            int pc = pre.cmp(z, e);   // z vs endpoint, before
            int qc = post.cmp(z, e);  // z vs endpoint, after
            // weak: (z < e  =>  z' < e')  and  (z <= e  =>  z' <= e')
            if ((pc < 0 && qc >= 0) || (pc <= 0 && qc > 0)) {
                weak_ok = false;
                weak_w.push_back(z);
            }
            // strict: z <= e  =>  z' < e'
            if (pc <= 0 && qc >= 0) {
                strict_ok = false;
                strict_w.push_back(z);
            }
        }
    };
    check_endpoint(x, r.weak_ok_x, r.strict_ok_x, r.weak_witnesses_x, r.strict_witnesses_x);
    check_endpoint(y, r.weak_ok_y, r.strict_ok_y, r.weak_witnesses_y, r.strict_witnesses_y);

    auto demotion = [&](int e) {
        int before = 0, after = 0;
        for (int z = 0; z < pre.size(); z++) {
            if (z == e) continue;
            before += pre.cmp(z, e) > 0;
            after += post.cmp(z, e) > 0;
        }
        return after - before;
    };
    r.demotion_x = demotion(x);
    r.demotion_y = demotion(y);

    bool viol_x = r.delta_x_sign <= 0 || !r.weak_ok_x || !r.strict_ok_x;
    bool viol_y = r.delta_y_sign <= 0 || !r.weak_ok_y || !r.strict_ok_y;
    if (viol_x && viol_y) {
        r.cls = ViolationClass::Both;
    } else if (viol_x || viol_y) {
        int e = viol_x ? x : y, o = viol_x ? y : x;
        int c = pre.cmp(e, o);
        if (c > 0)
            r.cls = ViolationClass::Top;
        else {
            r.cls = ViolationClass::Bottom;
            r.tie_flag = (c == 0);
        }
    }
    r.both_hurt_flag = r.delta_x_sign < 0 && r.delta_y_sign < 0;
    return r;
}

MonotonicityReport audit_edge(const UndirectedGraph& g, int x, int y,
                              const std::string& measure, const BigRational& alpha) {
    if (x == y) throw std::invalid_argument("audit: endpoints coincide");
    if (g.has_edge(x, y)) throw std::invalid_argument("audit: endpoints already adjacent");
    ScoreVector pre = compute_measure(g, measure, alpha);
    ScoreVector post = compute_measure(add_edge(g, x, y), measure, alpha);
    return audit_from_scores(pre, post, x, y);
}

std::pair<std::string, std::string> score_check(const UndirectedGraph& g, int x, int y,
                                                const std::string& measure,
                                                const BigRational& alpha) {
    MonotonicityReport r = audit_edge(g, x, y, measure, alpha);
    return {r.delta_x_str, r.delta_y_str};
}

std::string MonotonicityReport::tsv_header() {
    return "edge\tmeasure\tdelta_x\tdelta_y\tweak_x\tweak_y\tstrict_x\tstrict_y\t"
           "demotion_x\tdemotion_y\tclass";
}

std::string MonotonicityReport::tsv_row() const {
    std::ostringstream out;
    out << x << "-" << y << "\t" << measure << "\t" << delta_x_str << "\t" << delta_y_str
        << "\t" << (weak_ok_x ? "ok" : "fail") << "\t" << (weak_ok_y ? "ok" : "fail") << "\t"
        << (strict_ok_x ? "ok" : "fail") << "\t" << (strict_ok_y ? "ok" : "fail") << "\t"
        << demotion_x << "\t" << demotion_y << "\t" << violation_class_str(cls);
    if (tie_flag) out << "(tie)";
    return out.str();
}

std::string MonotonicityReport::json() const {
    nlohmann::json j;
    j["edge"] = {x, y};
    j["measure"] = measure;
    if (!params.empty()) j["params"] = params;
    j["exact"] = exact;
    j["delta_x"] = delta_x_str;
    j["delta_y"] = delta_y_str;
    j["weak_ok_x"] = weak_ok_x;
    j["weak_ok_y"] = weak_ok_y;
    j["strict_ok_x"] = strict_ok_x;
    j["strict_ok_y"] = strict_ok_y;
    j["weak_witnesses_x"] = weak_witnesses_x;
    j["weak_witnesses_y"] = weak_witnesses_y;
    j["strict_witnesses_x"] = strict_witnesses_x;
    j["strict_witnesses_y"] = strict_witnesses_y;
    j["demotion_x"] = demotion_x;
    j["demotion_y"] = demotion_y;
    j["class"] = violation_class_str(cls);
    j["tie"] = tie_flag;
    j["both_endpoints_hurt"] = both_hurt_flag;
    return j.dump();
}

std::vector<MonotonicityReport> scan(const UndirectedGraph& g, const std::string& measure,
                                     const BigRational& alpha, const ScanOptions& opt) {
    std::vector<std::pair<int, int>> pairs;
    if (opt.source == PairSource::Exhaustive) {
        for (int x = 0; x < g.n; x++)
            for (int y = x + 1; y < g.n; y++)
                if (!g.has_edge(x, y)) pairs.push_back({x, y});
    } else {
        std::mt19937_64 rng(opt.seed);
        std::set<std::pair<int, int>> chosen;
        std::vector<int> top_pool, bottom_pool;
        if (opt.source == PairSource::Stratified) {
            // rank vertices by the measure itself on the unperturbed graph
            ScoreVector base = compute_measure(g, measure, alpha);
            std::vector<int> order(g.n);
            for (int i = 0; i < g.n; i++) order[i] = i;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                int c = base.cmp(a, b);
                return c != 0 ? c > 0 : a < b;
            });
            int tk = std::max(1, (int)(opt.top_fraction * g.n));
            int bk = std::max(1, (int)(opt.bottom_fraction * g.n));
            top_pool.assign(order.begin(), order.begin() + tk);
            bottom_pool.assign(order.end() - bk, order.end());
        }
        int guard = 0;
        while ((int)chosen.size() < opt.samples && guard++ < opt.samples * 200) {
            int x, y;
            if (opt.source == PairSource::Stratified) {
                x = top_pool[rng() % top_pool.size()];
                y = bottom_pool[rng() % bottom_pool.size()];
            } else {
                x = (int)(rng() % g.n);
                y = (int)(rng() % g.n);
            }
            if (x == y || g.has_edge(x, y)) continue;
            if (x > y) std::swap(x, y);
            chosen.insert({x, y});
        }
        pairs.assign(chosen.begin(), chosen.end());
    }
    std::sort(pairs.begin(), pairs.end());

    ScoreVector pre = compute_measure(g, measure, alpha);
    std::vector<MonotonicityReport> out;
    for (auto& [x, y] : pairs) {
        ScoreVector post = compute_measure(add_edge(g, x, y), measure, alpha);
        MonotonicityReport r = audit_from_scores(pre, post, x, y);
        if (r.any_violation()) out.push_back(r);
    }
    return out;
}
