#ifndef MONOTONICITY_HPP
#define MONOTONICITY_HPP

#include "centrality.hpp"
#include "graph.hpp"
#include <string>
#include <vector>

enum class ViolationClass { None, Top, Bottom, Both };

std::string violation_class_str(ViolationClass c);

// Full verdict of a single edge-addition audit.
struct MonotonicityReport {
    int x = 0, y = 0;
    std::string measure;
    std::string params;
    bool exact = true;

    // score monotonicity
    std::string delta_x_str, delta_y_str;
    int delta_x_sign = 0, delta_y_sign = 0; // sign of post - pre

    // rank monotonicity, per endpoint
    bool weak_ok_x = true, weak_ok_y = true;
    bool strict_ok_x = true, strict_ok_y = true;
    std::vector<int> weak_witnesses_x, weak_witnesses_y;
    std::vector<int> strict_witnesses_x, strict_witnesses_y;

    // demotion: change in |{z : score(z) > score(endpoint)}|
    int demotion_x = 0, demotion_y = 0;

    ViolationClass cls = ViolationClass::None;
    bool tie_flag = false;       // endpoints tied pre-edge, class forced to bottom
    bool both_hurt_flag = false; // both endpoint scores strictly decreased

    bool any_violation() const {
        return delta_x_sign <= 0 || delta_y_sign <= 0 || !weak_ok_x || !weak_ok_y ||
               !strict_ok_x || !strict_ok_y;
    }

    std::string tsv_row() const;
    std::string json() const;
    static std::string tsv_header();
};

// Score deltas of both endpoints (precondition: x, y distinct, non-adjacent).
std::pair<std::string, std::string> score_check(const UndirectedGraph& g, int x, int y,
                                                const std::string& measure,
                                                const BigRational& alpha);

// Full audit: score check, weak and strict rank checks with witnesses,
// demotion counts, classification.
MonotonicityReport audit_edge(const UndirectedGraph& g, int x, int y,
                              const std::string& measure, const BigRational& alpha);

// Audit on precomputed score vectors (used by scan and by family tests that
// want to reuse expensive measures).
MonotonicityReport audit_from_scores(const ScoreVector& pre, const ScoreVector& post, int x,
                                     int y);

enum class PairSource { Exhaustive, Random, Stratified };

struct ScanOptions {
    PairSource source = PairSource::Exhaustive;
    int samples = 100;       // for Random/Stratified
    unsigned long seed = 1;  // deterministic
    double top_fraction = 0.1, bottom_fraction = 0.1; // for Stratified
};

// Audits non-adjacent pairs and returns every report showing any violation,
// ordered by (x, y).
std::vector<MonotonicityReport> scan(const UndirectedGraph& g, const std::string& measure,
                                     const BigRational& alpha, const ScanOptions& opt);

#endif
