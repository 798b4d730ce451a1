#include "CLI11.hpp"
#include "centrality.hpp"
#include "families.hpp"
#include "fibration.hpp"
#include "json.hpp"
#include "monotonicity.hpp"
#include "poly.hpp"
#include "reproduce.hpp"
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string canonical_measure(std::string measure, const std::string& normalization) {
    if (measure == "eigenvector") {
        std::string n = normalization.empty() ? "l1" : normalization;
        if (n != "l1" && n != "l2" && n != "proj")
            throw std::invalid_argument("unknown normalization: " + n);
        measure += ":" + n;
    }
    if (!is_known_measure(measure)) throw std::invalid_argument("unknown measure: " + measure);
    return measure;
}

std::pair<int, int> parse_edge_arg(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("edge must be \"x,y\"");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

std::map<std::string, long> parse_params(const std::string& s) {
    std::map<std::string, long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("params must be k=v,...");
        out[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    }
    return out;
}

long param_or(const std::map<std::string, long>& p, const std::string& key, long dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : it->second;
}

int cmd_centrality(const std::string& graph_path, const std::string& measure,
                   const std::string& alpha_str, const std::string& format) {
    auto g = parse_edge_list(slurp(graph_path));
    BigRational alpha = alpha_str.empty() ? BigRational(0) : parse_rational(alpha_str);
    auto s = compute_measure(g, measure, alpha);
    if (format == "json") {
        nlohmann::json j;
        j["measure"] = measure;
        j["exact"] = s.exact;
        auto& arr = j["scores"] = nlohmann::json::array();
        for (int v = 0; v < (int)g.n; v++)
            arr.push_back({{"vertex", v}, {"score", s.value_str(v)}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (int v = 0; v < (int)g.n; v++) std::cout << v << "\t" << s.value_str(v) << "\n";
    }
    return 0;
}

int cmd_audit(const std::string& graph_path, const std::string& edge_str,
              const std::string& measure, const std::string& alpha_str,
              const std::string& format, bool fail_on_violation) {
    auto g = parse_edge_list(slurp(graph_path));
    auto [x, y] = parse_edge_arg(edge_str);
    if (x < 0 || y < 0 || x >= (int)g.n || y >= (int)g.n || x == y || g.has_edge(x, y)) {
        std::cerr << "audit: endpoints must be distinct, in range and non-adjacent\n";
        return 2;
    }
    BigRational alpha = alpha_str.empty() ? BigRational(0) : parse_rational(alpha_str);
    auto rep = audit_edge(g, x, y, measure, alpha);
    if (format == "json")
        std::cout << rep.json() << "\n";
    else
        std::cout << MonotonicityReport::tsv_header() << "\n" << rep.tsv_row() << "\n";
    return (fail_on_violation && rep.any_violation()) ? 1 : 0;
}

int cmd_scan(const std::string& graph_path, const std::string& measure,
             const std::string& alpha_str, const std::string& source, int samples,
             unsigned long seed, const std::string& format, bool fail_on_violation) {
    auto g = parse_edge_list(slurp(graph_path));
    BigRational alpha = alpha_str.empty() ? BigRational(0) : parse_rational(alpha_str);
    ScanOptions opt;
    if (source == "exhaustive")
        opt.source = PairSource::Exhaustive;
    else if (source == "random")
        opt.source = PairSource::Random;
    else if (source == "stratified")
        opt.source = PairSource::Stratified;
    else {
        std::cerr << "scan: unknown pair source " << source << "\n";
        return 2;
    }
    opt.samples = samples;
    opt.seed = seed;
    auto reports = scan(g, measure, alpha, opt);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (auto& r : reports) j.push_back(nlohmann::json::parse(r.json()));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << MonotonicityReport::tsv_header() << "\n";
        for (auto& r : reports) std::cout << r.tsv_row() << "\n";
    }
    return (fail_on_violation && !reports.empty()) ? 1 : 0;
}

FamilyInstance make_family(const std::string& name, const std::map<std::string, long>& p) {
    if (name == "geometric")
        return geometric_family(param_or(p, "j", 10), param_or(p, "k", 36), param_or(p, "r", 2));
    if (name == "betweenness")
        return betweenness_family(param_or(p, "h", 13), param_or(p, "j", 51),
                                  param_or(p, "k", 13));
    if (name == "eigen-small") return eigen_small();
    if (name == "eigen-rank-small") return eigen_rank_small();
    if (name == "eigen") return eigen_family(param_or(p, "k", 7), param_or(p, "s", -1));
    if (name == "pagerank") return pagerank_family(param_or(p, "k", 13));
    if (name == "pagerank-top") return pagerank_top_family(param_or(p, "k", 5));
    throw std::invalid_argument("unknown family: " + name);
}

int cmd_family(const std::string& name, const std::string& params_str, const std::string& out) {
    auto f = make_family(name, params_str.empty() ? std::map<std::string, long>{}
                                                  : parse_params(params_str));
    if (out.empty()) {
        std::cout << serialize_edge_list(f.graph);
        return 0;
    }
    spit(out + ".edges", serialize_edge_list(f.graph));
    std::cerr << "wrote " << out << ".edges\n";
    if (f.coloring) {
        spit(out + ".coloring.tsv", serialize_coloring_tsv(*f.coloring));
        std::cerr << "wrote " << out << ".coloring.tsv\n";
    }
    if (f.base) {
        spit(out + ".base.tsv", serialize_base_tsv(*f.base));
        std::cerr << "wrote " << out << ".base.tsv\n";
    }
    return 0;
}

int cmd_sturm(const std::string& poly_str, const std::string& lo_str, const std::string& hi_str,
              const std::string& isolate_width) {
    auto p = parse_poly(poly_str);
    BigRational lo = parse_rational(lo_str), hi = parse_rational(hi_str);
    auto sf = squarefree_part(p);
    int roots = count_roots(sf, lo, hi);
    std::cout << "roots\t" << roots << "\n";
    if (!isolate_width.empty()) {
        if (roots != 1) {
            std::cerr << "sturm: isolation requires exactly one root in the interval\n";
            return 2;
        }
        auto iv = isolate_root(sf, lo, hi, parse_rational(isolate_width));
        std::cout << "interval\t(" << rational_str(iv.first) << ", " << rational_str(iv.second)
                  << "]\n";
    }
    return 0;
}

int cmd_fibration(const std::string& graph_path, const std::string& coloring_path,
                  const std::string& base_path, const std::string& format, bool normalize) {
    Multigraph total;
    // accept either a plain edge list or a weighted base TSV as the total graph
    std::string text = slurp(graph_path);
    if (text.find('\t') != std::string::npos)
        total = parse_base_tsv(text);
    else
        total = to_multigraph(parse_edge_list(text));
    if (normalize) total = row_normalize(total);
    auto col = parse_coloring_tsv(slurp(coloring_path));
    if (base_path.empty()) {
        auto q = quotient(total, col);
        std::cout << serialize_base_tsv(q);
        return 0;
    }
    auto base = parse_base_tsv(slurp(base_path));
    auto cert = check_fibration(total, base, col);
    if (format == "json") {
        nlohmann::json j;
        j["valid"] = cert.valid;
        auto& arr = j["violations"] = nlohmann::json::array();
        for (auto& v : cert.violations)
            arr.push_back({{"node", v.node},
                           {"base_src", v.base_src},
                           {"expected", rational_str(v.expected)},
                           {"found", rational_str(v.found)}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "valid\t" << (cert.valid ? "yes" : "no") << "\n";
        for (auto& v : cert.violations)
            std::cout << "violation\tnode=" << v.node << "\tbase_src=" << v.base_src
                      << "\texpected=" << rational_str(v.expected)
                      << "\tfound=" << rational_str(v.found) << "\n";
    }
    return cert.valid ? 0 : 1;
}

int cmd_reproduce(const std::string& id, const std::string& format) {
    std::vector<ClaimResult> results;
    if (id == "all")
        for (auto& c : claim_ids()) results.push_back(run_claim(c));
    else
        results.push_back(run_claim(id));
    bool all_pass = true;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (auto& r : results) {
            j.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& r : results) {
            std::cout << r.id << "\t" << (r.pass ? "PASS" : "FAIL") << "\t" << r.detail << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact centrality computation, monotonicity audits and graph fibrations"};
    app.require_subcommand(1);

    std::string graph_path, edge_str, measure = "closeness", normalization, alpha_str, params_str;
    std::string format = "tsv", family_name, out_prefix, coloring_path, base_path;
    std::string poly_str, lo_str, hi_str, isolate_width, claim_id = "all", source = "exhaustive";
    int samples = 100;
    unsigned long seed = 1;
    bool fail_on_violation = false, normalize = false;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "Output format: tsv or json")
            ->check(CLI::IsMember({"tsv", "json"}));
    };

    auto* c_cent = app.add_subcommand("centrality", "Compute a centrality score table");
    c_cent->add_option("--graph", graph_path, "Edge-list file")->required();
    c_cent->add_option("--measure", measure, "Measure id");
    c_cent->add_option("--normalization", normalization, "Eigenvector normalization: l1|l2|proj");
    c_cent->add_option("--alpha", alpha_str, "Rational attenuation/damping, e.g. 1/2");
    add_format(c_cent);

    auto* c_audit = app.add_subcommand("audit", "Audit monotonicity of one edge addition");
    c_audit->add_option("--graph", graph_path, "Edge-list file")->required();
    c_audit->add_option("--edge", edge_str, "Non-adjacent pair \"x,y\"")->required();
    c_audit->add_option("--measure", measure, "Measure id");
    c_audit->add_option("--normalization", normalization, "Eigenvector normalization");
    c_audit->add_option("--alpha", alpha_str, "Rational parameter");
    c_audit->add_flag("--fail-on-violation", fail_on_violation, "Exit 1 if any violation");
    add_format(c_audit);

    auto* c_scan = app.add_subcommand("scan", "Audit many non-adjacent pairs");
    c_scan->add_option("--graph", graph_path, "Edge-list file")->required();
    c_scan->add_option("--measure", measure, "Measure id");
    c_scan->add_option("--normalization", normalization, "Eigenvector normalization");
    c_scan->add_option("--alpha", alpha_str, "Rational parameter");
    c_scan->add_option("--source", source, "Pair source: exhaustive|random|stratified")
        ->check(CLI::IsMember({"exhaustive", "random", "stratified"}));
    c_scan->add_option("--samples", samples, "Sample count for random/stratified");
    c_scan->add_option("--seed", seed, "Deterministic seed");
    c_scan->add_flag("--fail-on-violation", fail_on_violation, "Exit 1 if any violation");
    add_format(c_scan);

    auto* c_fam = app.add_subcommand("family", "Emit a constructed counterexample family");
    c_fam->add_option("name", family_name,
                      "geometric|betweenness|eigen-small|eigen-rank-small|eigen|pagerank|"
                      "pagerank-top")
        ->required();
    c_fam->add_option("--params", params_str, "Family parameters, e.g. j=10,k=36,r=2");
    c_fam->add_option("--out", out_prefix, "Write <out>.edges, .coloring.tsv, .base.tsv");

    auto* c_sturm = app.add_subcommand("sturm", "Count (and isolate) real roots");
    c_sturm->add_option("--poly", poly_str, "Ascending coefficients c0,c1,...")->required();
    c_sturm->add_option("--lo", lo_str, "Interval start (exclusive)")->required();
    c_sturm->add_option("--hi", hi_str, "Interval end (inclusive)")->required();
    c_sturm->add_option("--isolate", isolate_width, "Shrink to this width around a unique root");

    auto* c_fib = app.add_subcommand("fibration", "Quotient a graph or verify a fibration");
    c_fib->add_option("--graph", graph_path, "Edge-list or base-TSV file")->required();
    c_fib->add_option("--coloring", coloring_path, "Coloring TSV")->required();
    c_fib->add_option("--base", base_path, "Expected base TSV (verify instead of print)");
    c_fib->add_flag("--normalize", normalize, "Row-normalize the total graph first");
    add_format(c_fib);

    auto* c_rep = app.add_subcommand("reproduce", "Run a scaled claim experiment");
    c_rep->add_option("id", claim_id, "Claim id, or \"all\"");
    add_format(c_rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_cent->parsed())
            return cmd_centrality(graph_path, canonical_measure(measure, normalization),
                                  alpha_str, format);
        if (c_audit->parsed())
            return cmd_audit(graph_path, edge_str, canonical_measure(measure, normalization),
                             alpha_str, format, fail_on_violation);
        if (c_scan->parsed())
            return cmd_scan(graph_path, canonical_measure(measure, normalization), alpha_str,
                            source, samples, seed, format, fail_on_violation);
        if (c_fam->parsed()) return cmd_family(family_name, params_str, out_prefix);
        if (c_sturm->parsed()) return cmd_sturm(poly_str, lo_str, hi_str, isolate_width);
        if (c_fib->parsed())
            return cmd_fibration(graph_path, coloring_path, base_path, format, normalize);
        if (c_rep->parsed()) return cmd_reproduce(claim_id, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
