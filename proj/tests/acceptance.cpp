// Acceptance suite: one line per criterion, exact oracle equivalence at
// the stated scale, with the expected wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "dynq/checks.hpp"

namespace {

struct Criterion {
    std::string label;
    double budget_seconds;
    std::vector<std::pair<std::string, dynq::CheckParams>> suites;
};

int run_all() {
    using clock = std::chrono::steady_clock;
    const uint64_t seed = 20260809;

    std::vector<Criterion> criteria = {
        {"1 acyclic TC: T = oracle_reach after every step",
         10.0,
         {{"tc", {seed, 500, 12}}}},
        {"2 RPQ insertions: rpq_query = oracle_rpq; locality of updates",
         30.0,
         {{"rpq", {seed, 300, 10}}, {"rpq-locality", {seed, 100, 10}}}},
        {"3 CFL on DAGs: cfl_query = oracle_cfl; relation soundness",
         60.0,
         {{"cfl", {seed, 200, 8}}, {"cfl-soundness", {seed, 20, 5}}}},
        {"4 distances: insert-only, acyclic, undirected, a^n b^n c^n",
         60.0,
         {{"dist-ins", {seed, 200, 8}},
          {"dist-acyclic", {seed, 200, 8}},
          {"dist-undirected", {seed, 200, 8}},
          {"anbncn", {seed, 30, 8}}}},
        {"5 Parikh distances vs oracle_parikh; k=1 matches insdist",
         30.0,
         {{"parikh", {seed, 150, 6}}, {"parikh-insdist", {seed, 50, 6}}}},
        {"6 CRPQ+LC under insertions vs bounded oracle; bound doubling",
         60.0,
         {{"crpq", {seed, 100, 6}}, {"crpq-doubling", {seed, 30, 6}}}},
        {"7 ECRPQ+LC on acyclic copies vs oracle_ecrpq",
         60.0,
         {{"ecrpq", {seed, 100, 5}}, {"ecrpq-soundness", {seed, 25, 4}}}},
        {"8 products and NEPS vs explicit products; gf2 rank; palindromes",
         60.0,
         {{"product", {seed, 450, 4}},
          {"product-labeled", {seed, 50, 4}},
          {"neps", {seed, 450, 4}},
          {"gf2", {seed, 200, 6}},
          {"palindrome", {seed, 100, 5}}}},
        {"9 determinism and rollback of script replay",
         30.0,
         {{"determinism", {seed, 50, 6}}}},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = clock::now();
        int trials = 0, failures = 0;
        std::string detail;
        for (const auto& [suite, params] : c.suites) {
            dynq::SuiteResult r = dynq::run_suite(suite, params);
            trials += r.trials;
            failures += r.failures;
            if (!r.ok() && detail.empty()) detail = r.name + ": " + r.detail;
        }
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        bool ok = failures == 0 && secs < c.budget_seconds;
        if (!ok) ++failed;
        std::printf("%s criterion %s (%d trials, %.1fs < %.0fs)%s%s\n",
                    ok ? "PASS" : "FAIL", c.label.c_str(), trials, secs, c.budget_seconds,
                    detail.empty() ? "" : " — ", detail.c_str());
        std::fflush(stdout);
    }
    return failed;
}

}  // namespace

int main() {
    int failed = run_all();
    if (failed == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failed);
    return 1;
}
