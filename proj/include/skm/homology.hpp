#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "skm/complex.hpp"
#include "skm/exactlin.hpp"

namespace skm {

/// Reduced Betti numbers h̃_i(Δ; Q) for i = -1 .. dim Δ.
///
/// h̃_{-1} is 1 exactly for the IRRELEVANT complex {∅}; the VOID complex has
/// no homology at all.
struct ReducedHomologyProfile {
    std::vector<std::size_t> dims; // dims[i + 1] = h̃_i

    std::size_t operator()(int i) const
    {
        const int k = i + 1;
        return (k < 0 || k >= static_cast<int>(dims.size())) ? 0 : dims[k];
    }
    int top_degree() const { return static_cast<int>(dims.size()) - 2; }
    bool is_zero() const;
    bool operator==(const ReducedHomologyProfile&) const = default;
};

/// Boundary map from faces of size s to faces of size s-1 of Δ (columns and
/// rows in lexicographic face order), with
///   ∂(v_{j_1} ∧ … ∧ v_{j_s}) = Σ_r (-1)^{r-1} v_{j_1} ∧ … v̂_{j_r} … ∧ v_{j_s}.
RationalMatrix boundary_matrix(const SimplicialComplex& delta, int size);

ReducedHomologyProfile reduced_homology(const SimplicialComplex& delta);

/// Same numbers computed from the augmented cochain complex (transposed maps).
ReducedHomologyProfile reduced_cohomology(const SimplicialComplex& delta);

/// Profiles of Δ_b for every square-free b, indexed by mask (size 2^n).
/// Results are memoized per face set; jobs <= 0 means default_jobs(). Throws GuardError when n > guard.
using SubsetHomologyTable = std::vector<ReducedHomologyProfile>;
std::shared_ptr<const SubsetHomologyTable> subset_homology_table(const SimplicialComplex& delta,
                                                                 int jobs = 0,
                                                                 int guard = kDefaultSubsetGuard);

/// h̃_{i-1}(Δ_b) for every square-free b, indexed by mask.
std::vector<std::size_t> all_subset_homology(const SimplicialComplex& delta, int i, int jobs = 0,
                                             int guard = kDefaultSubsetGuard);

} // namespace skm
