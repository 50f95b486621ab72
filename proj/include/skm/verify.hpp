#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "skm/complex.hpp"

namespace skm {

enum class CaseStatus { Pass, Fail, SkippedHypothesis };

std::string to_string(CaseStatus s);

struct CaseResult {
    std::string id;
    CaseStatus status = CaseStatus::Pass;
    std::string details;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;
    double seconds = 0;

    std::size_t count(CaseStatus s) const;
    bool ok() const { return count(CaseStatus::Fail) == 0; }
    void add(std::string id, bool passed, std::string details = {});
    void skip(std::string id, std::string details);
    void merge(const VerificationReport& other);
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct CorpusOptions {
    std::uint64_t seed = 20240601;
    std::size_t count = 200;
    int max_n = 7;
};

/// Random complexes: each k-subset is kept independently (probability
/// chosen per complex and per size), then the family is closed downward.
/// About a quarter of the corpus has a complete codimension-one skeleton.
std::vector<SimplicialComplex> random_corpus(const CorpusOptions& options);

SimplicialComplex random_complex(std::mt19937_64& rng, int n);
/// Full (d-1)-skeleton on [n] plus a random nonempty set of d-faces.
SimplicialComplex random_skeleton_complete(std::mt19937_64& rng, int n, int d);

/// Named complexes used across the suites.
SimplicialComplex two_edges();             // facets {1,2},{3,4}
SimplicialComplex tetrahedron_minus_face(); // boundary of the tetrahedron without {1,2,3}

struct SuiteOptions {
    CorpusOptions corpus;
    int jobs = 0;
};

VerificationReport verify_fitting_path4();
VerificationReport verify_cycle_family(int from_n, int to_n, int jobs = 0);
VerificationReport verify_two_edges();
VerificationReport verify_tetrahedron_minus_face();
VerificationReport verify_chen();
VerificationReport verify_worked_examples();

VerificationReport verify_duality_suite(const std::vector<SimplicialComplex>& corpus);
VerificationReport verify_hilbert_suite(const std::vector<SimplicialComplex>& corpus);
VerificationReport verify_hochster_suite(const std::vector<SimplicialComplex>& corpus, std::uint64_t seed);
VerificationReport verify_squarefree_suite(const std::vector<SimplicialComplex>& corpus, int jobs = 0);
VerificationReport verify_bounds_suite(const std::vector<SimplicialComplex>& corpus, int jobs = 0);
VerificationReport verify_pair_module_suite(const std::vector<SimplicialComplex>& corpus);

/// Suite names: examples, fitting-path4, duality, hilbert, hochster,
/// squarefree, bounds, chen, pair-module, all. Throws InputError otherwise.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);
const std::vector<std::string>& suite_names();

} // namespace skm
