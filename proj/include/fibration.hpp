#ifndef FIBRATION_HPP
#define FIBRATION_HPP

#include "graph.hpp"
#include "rational.hpp"
#include <string>
#include <vector>

// Surjective node map from a total graph onto base nodes 0..base_n-1.
struct Coloring {
    int total_n = 0;
    int base_n = 0;
    std::vector<int> map; // per total-graph node

    void validate() const; // throws unless total, in-range and surjective
    std::vector<std::vector<int>> fibers() const;
};

Coloring parse_coloring_tsv(const std::string& text);
std::string serialize_coloring_tsv(const Coloring& c);

struct FibrationViolation {
    int node = 0;       // total-graph node
    int base_src = 0;   // base arc (base_src -> color(node))
    BigRational expected; // aggregated in-weight required by the base
    BigRational found;    // aggregated in-weight at this node
};

struct FibrationCertificate {
    bool valid = false;
    Coloring coloring;
    Multigraph base;
    std::vector<FibrationViolation> violations;
};

// Fiber-aggregated in-weight quotient: B[X][Y] = total multiplicity/weight of
// arcs from fiber X into any single node of fiber Y. Throws with a witness
// pair when the coloring is not equitable on in-neighborhoods.
Multigraph quotient(const Multigraph& g, const Coloring& c);

FibrationCertificate check_fibration(const Multigraph& g, const Multigraph& b,
                                     const Coloring& c);

std::vector<BigRational> lift_vector(const std::vector<BigRational>& u, const Coloring& c);

// Exact check of u^phi G = (u B)^phi.
bool verify_lifting_commutation(const Multigraph& g, const Multigraph& b, const Coloring& c,
                                const std::vector<BigRational>& u);

// Exact check of v^phi (1 - alpha G)^{-1} = (v (1 - alpha B)^{-1})^phi.
bool verify_resolvent_commutation(const Multigraph& g, const Multigraph& b,
                                  const Coloring& c, const std::vector<BigRational>& v,
                                  const BigRational& alpha);

#endif
