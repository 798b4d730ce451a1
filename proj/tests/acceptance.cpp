// Acceptance harness: runs every reproduction claim, one line per criterion,
// and enforces each claim's wall-clock budget.
#include "reproduce.hpp"
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

int main() {
    struct Criterion {
        const char* id;
        double budget_s;
    };
    const std::vector<Criterion> criteria = {
        {"closeness-rank", 5},  {"harmonic-rank", 5}, {"betweenness", 30},
        {"eigen-small", 1},     {"eigen-family", 60}, {"eigen-table2", 10},
        {"seeley", 30},         {"katz", 60},         {"pagerank", 60},
        {"scanner", 120},       {"fibration", 30},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        auto& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        ClaimResult r;
        try {
            r = run_claim(c.id);
        } catch (const std::exception& e) {
            r.id = c.id;
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = dt <= c.budget_s;
        bool pass = r.pass && in_budget;
        if (!pass) failures++;
        std::printf("criterion %2zu %-15s %s  (%.2fs / %.0fs)%s\n", i + 1, c.id,
                    pass ? "PASS" : "FAIL", dt, c.budget_s,
                    in_budget ? "" : " [over budget]");
        if (!r.pass) std::printf("    %s\n", r.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
