// Acceptance run: one line per criterion with its wall time and limit.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "skm/verify.hpp"

using namespace skm;

namespace {

struct Criterion {
    int number;
    std::string title;
    double limit_seconds; // 0: no limit
    std::function<VerificationReport()> run;
};

bool run_criterion(const Criterion& c)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    std::string error;
    try {
        report = c.run();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    const bool pass = error.empty() && report.ok() && !report.cases.empty() && in_time;

    char timing[96];
    if (c.limit_seconds > 0)
        std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", seconds, c.limit_seconds);
    else
        std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << " ("
              << report.count(CaseStatus::Pass) << " passed, " << report.count(CaseStatus::Fail) << " failed, "
              << report.count(CaseStatus::SkippedHypothesis) << " skipped; " << timing << ")\n";
    if (!error.empty())
        std::cout << "    error: " << error << "\n";
    if (!in_time)
        std::cout << "    over the time limit\n";
    for (const auto& cr : report.cases)
        if (cr.status == CaseStatus::Fail)
            std::cout << "    failed " << cr.id << ": " << cr.details << "\n";
    return pass;
}

} // namespace

int main()
{
    const CorpusOptions corpus_options;
    std::vector<SimplicialComplex> corpus;
    const auto corpus_start = std::chrono::steady_clock::now();
    corpus = random_corpus(corpus_options);
    std::cout << "corpus: " << corpus.size() << " complexes, seed " << corpus_options.seed << ", n <= "
              << corpus_options.max_n << " ("
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - corpus_start).count() << " s)\n";

    const std::vector<Criterion> criteria{
        {1, "path on 4 vertices: annihilator and Fitting ideal", 1, [] { return verify_fitting_path4(); }},
        {2, "n-cycles, n = 4..9: pdim and both regularity readings", 30, [] { return verify_cycle_family(4, 9); }},
        {3, "two disjoint edges: jump and support resonance, propagation", 1, [] { return verify_two_edges(); }},
        {4, "tetrahedron boundary minus a face: resonance and fixed-degree items", 1,
         [] { return verify_tetrahedron_minus_face(); }},
        {5, "strand homology = Tor = reduced homology on the corpus", 300, [&] { return verify_duality_suite(corpus); }},
        {6, "two-route Hilbert series and single-graded brute force", 0, [&] { return verify_hilbert_suite(corpus); }},
        {7, "Hochster sums against direct cohomology, n <= 6", 0,
         [&] { return verify_hochster_suite(corpus, corpus_options.seed); }},
        {8, "square-free module invariants on the corpus", 0, [&] { return verify_squarefree_suite(corpus); }},
        {9, "regularity, projective dimension and vanishing bounds", 0,
         [&] {
             auto r = verify_bounds_suite(corpus);
             r.merge(verify_cycle_family(4, 9));
             return r;
         }},
        {10, "Chen ranks of the 4-cycle and complete graphs", 0, [] { return verify_chen(); }},
    };

    int failures = 0;
    for (const auto& c : criteria)
        if (!run_criterion(c))
            ++failures;
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
