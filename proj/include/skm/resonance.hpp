#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skm/complex.hpp"
#include "skm/exactlin.hpp"
#include "skm/koszul.hpp"

namespace skm {

/// A union of coordinate subspaces k^{V'} = V(x_j : j ∉ V') of k^n, stored
/// as the antichain of maximal supports V' in ascending mask order.
/// {0} is the arrangement whose only support is the empty set; ∅ is the
/// arrangement with no supports.
class CoordinateSubspaceArrangement {
public:
    CoordinateSubspaceArrangement() = default;
    /// Keeps the inclusion-maximal supports.
    static CoordinateSubspaceArrangement from_supports(int n, std::vector<Mask> supports);
    static CoordinateSubspaceArrangement empty(int n) { return from_supports(n, {}); }
    static CoordinateSubspaceArrangement origin(int n) { return from_supports(n, {Mask{0}}); }
    static CoordinateSubspaceArrangement whole(int n) { return from_supports(n, {full_mask(n)}); }

    int n() const { return n_; }
    const std::vector<Mask>& components() const { return components_; }
    bool is_empty() const { return components_.empty(); }
    bool is_origin() const { return components_.size() == 1 && components_[0] == 0; }
    bool is_whole() const { return components_.size() == 1 && components_[0] == full_mask(n_); }

    /// Whether the arrangement contains the points whose support is s.
    bool contains_support(Mask s) const;
    /// Set inclusion other ⊆ this.
    bool contains(const CoordinateSubspaceArrangement& other) const;
    CoordinateSubspaceArrangement union_with(const CoordinateSubspaceArrangement& other) const;
    CoordinateSubspaceArrangement intersect(const CoordinateSubspaceArrangement& other) const;
    /// The same set with the origin removed, compared as sets: drops the
    /// {0} component when it is the only one.
    CoordinateSubspaceArrangement away_from_origin() const;

    /// "empty", "origin", or the supports like "{1,2} {3,4}".
    std::string describe() const;

    bool operator==(const CoordinateSubspaceArrangement&) const = default;

private:
    int n_ = 0;
    std::vector<Mask> components_;
};

/// Square-free monomial ideal given by its minimal generators (as vertex
/// sets). No generators: the zero ideal. The single generator {}: the unit ideal.
class SquareFreeMonomialIdeal {
public:
    SquareFreeMonomialIdeal() = default;
    static SquareFreeMonomialIdeal from_generators(int n, std::vector<Mask> generators);
    /// ∩_{V'} (x_j : j ∉ V') over the given supports.
    static SquareFreeMonomialIdeal from_components(int n, const std::vector<Mask>& supports);

    int n() const { return n_; }
    const std::vector<Mask>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return generators_.size() == 1 && generators_[0] == 0; }
    /// Membership of the square-free monomial x^T.
    bool contains(Mask t) const;
    /// Intersection by pairwise lcms.
    SquareFreeMonomialIdeal intersect(const SquareFreeMonomialIdeal& other) const;

    bool operator==(const SquareFreeMonomialIdeal&) const = default;

private:
    int n_ = 0;
    std::vector<Mask> generators_;
};

/// R̃_i(Δ): maximal V' with h̃_{i-1}(Δ_{V'}) ≠ 0. Needs i >= 1.
CoordinateSubspaceArrangement support_resonance(const SimplicialComplex& delta, int i);

/// Same components read off a module: maximal supports of nonzero pieces.
CoordinateSubspaceArrangement module_support(const SquareFreeModule& module);

/// Ann(W_i(Δ)) from the support components. Certifies against build_W that
/// a square-free monomial lies in the ideal exactly when it kills every
/// piece; throws OracleError otherwise.
SquareFreeMonomialIdeal annihilator(const SimplicialComplex& delta, int i);

/// Minimal square-free monomials acting as zero on the module, by brute force.
SquareFreeMonomialIdeal annihilator_of_module(const SquareFreeModule& module);

/// R^i(Δ): maximal V' such that some σ ∈ Δ with σ ∩ V' = ∅ has
/// h̃_{i-1-|σ|}(lk_{Δ_{V'}}(σ)) ≠ 0. R^0 is {0}.
CoordinateSubspaceArrangement jump_resonance(const SimplicialComplex& delta, int i);

/// dim H^i(A, δ_a) for i = 0..n, where A^i has basis the faces of size i and
/// δ_a(e_σ) = Σ_{j ∉ σ} a_j e_j ∧ e_σ.
std::vector<std::size_t> delta_a_cohomology(const SimplicialComplex& delta, const Vector& a);

struct HochsterTerm {
    int i = 0;
    Mask sigma = 0;
    std::size_t contribution = 0;
};

struct HochsterReport {
    Mask support = 0;
    std::vector<std::size_t> sums;   // Σ_σ h̃_{i-1-|σ|}(lk_{Δ_{V'}}(σ)), i = 0..n
    std::vector<std::size_t> direct; // delta_a_cohomology at the indicator of V'
    std::vector<HochsterTerm> terms; // nonzero contributions only
    bool agree() const { return sums == direct; }
};

/// Link-sum side only, without the comparison.
std::vector<std::size_t> hochster_sums(const SimplicialComplex& delta, Mask support,
                                       std::vector<HochsterTerm>* terms = nullptr);

/// Both sides at V' = support; throws OracleError naming (Δ, V', i) on a mismatch.
HochsterReport hochster_check(const SimplicialComplex& delta, Mask support);

struct UnionCheck {
    bool hypothesis_met = false; // W_j ≠ 0 for 1 <= j <= i
    bool equal = false;
    CoordinateSubspaceArrangement support_union; // ∪_{1<=j<=i} R̃_j
    CoordinateSubspaceArrangement jump_union;    // ∪_{0<=j<=i} R^j
};

/// Compares the two unions when the nonvanishing hypothesis holds; throws
/// OracleError if they differ under it.
UnionCheck union_consistency_check(const SimplicialComplex& delta, int i);

/// h̃ of every link lk(σ), σ ∈ Δ (σ = ∅ included) concentrated in degree dim Δ - |σ|.
bool cohen_macaulay_check(const SimplicialComplex& delta);

struct PropagationResult {
    bool holds = true;
    int first_failure = 0; // R^k ⊄ R^{k+1} for this k when !holds
};

/// R^1 ⊆ R^2 ⊆ ... ⊆ R^{dim Δ + 1}.
PropagationResult propagation_check(const SimplicialComplex& delta);

/// Cohen-Macaulay implies propagation; throws OracleError when violated.
/// Returns the CM verdict.
bool cm_propagation_check(const SimplicialComplex& delta);

struct FixedDegreeReport {
    int d = 0;
    bool item1 = true;                  // R̃_i = R^i away from 0 for i ≠ d+1
    std::vector<int> item1_failures;
    bool item2 = true;                  // R̃_{d+1} is ∅ or k^n
    bool item3 = true;                  // R^d = ∪ k^{V'}, h̃_{d-1}(Δ_{V'}) ≠ 0, away from 0
    CoordinateSubspaceArrangement support_d, jump_d, support_d1, jump_d1;
    bool ok() const { return item1 && item2 && item3; }
};

/// For complexes with skeleton_complete_degree defined; throws InputError
/// otherwise and OracleError when an item fails.
FixedDegreeReport fixed_degree_resonance_check(const SimplicialComplex& delta);

} // namespace skm
