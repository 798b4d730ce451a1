#ifndef CENTRALITY_HPP
#define CENTRALITY_HPP

#include "graph.hpp"
#include "rational.hpp"
#include <string>
#include <vector>

// Float comparison tolerance for eigenvector scores.
constexpr double EIGEN_TAU = 1e-9;
// Power-iteration convergence threshold (successive l1-normalized iterates).
constexpr double EIGEN_CONVERGENCE = 1e-13;

// Per-vertex centrality values, exact-rational or float-tagged.
struct ScoreVector {
    std::string measure;
    std::string params; // human-readable parameter tag, e.g. "alpha=2/3"
    bool exact = true;
    std::vector<BigRational> rat;
    std::vector<double> flt;

    int size() const { return exact ? (int)rat.size() : (int)flt.size(); }
    double as_double(int v) const { return exact ? rat[v].get_d() : flt[v]; }
    std::string value_str(int v) const;

    // three-way comparison of vertex scores: -1, 0, +1;
    // float-tagged vectors treat |a-b| <= EIGEN_TAU as a tie
    int cmp(int u, int v) const;
    // compares value at u against another vector's value at v
    int cmp_across(int u, const ScoreVector& other, int v) const;
};

ScoreVector closeness(const UndirectedGraph& g);
ScoreVector harmonic(const UndirectedGraph& g);
ScoreVector betweenness(const UndirectedGraph& g);
ScoreVector degree_seeley(const UndirectedGraph& g);

enum class EigenNorm { L1, L2, ProjectOnes };
ScoreVector eigenvector(const UndirectedGraph& g, EigenNorm norm);

ScoreVector katz(const UndirectedGraph& g, const BigRational& alpha);
ScoreVector pagerank(const UndirectedGraph& g, const BigRational& alpha,
                     const std::vector<BigRational>& preference = {});

// Exact x with x (I - alpha M) = v, for any square rational matrix M.
std::vector<BigRational> resolvent_solve(const std::vector<std::vector<BigRational>>& m,
                                         const BigRational& alpha,
                                         const std::vector<BigRational>& v);

// PageRank of an arbitrary multigraph (row-normalizes internally; null rows
// untouched; result l1-normalized).
std::vector<BigRational> pagerank_multigraph(const Multigraph& g, const BigRational& alpha,
                                             const std::vector<BigRational>& preference = {});

// Dispatch by normative measure string: closeness, harmonic, betweenness,
// seeley, eigenvector:l1, eigenvector:l2, eigenvector:proj, katz, pagerank.
ScoreVector compute_measure(const UndirectedGraph& g, const std::string& measure,
                            const BigRational& alpha);

bool is_known_measure(const std::string& measure);
bool measure_needs_alpha(const std::string& measure);

#endif
