#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "skm/complex.hpp"
#include "skm/exactlin.hpp"

namespace skm {

/// Exponent vector of a monomial / multidegree in N^n.
using Exponents = std::vector<int>;

Exponents indicator(int n, Mask mask);
Mask support(const Exponents& a);
int total_degree(const Exponents& a);

// ---------------------------------------------------------------------------
// Strands of the Δ-restricted Koszul complex K^Δ
// ---------------------------------------------------------------------------

struct StrandBasisElement {
    Mask face;         // σ ∈ Δ, the exterior monomial v_σ
    Exponents monomial; // multidegree a - e_σ
};

/// The multidegree-a part of [K^Δ_{p+1}]_a -> [K^Δ_p]_a -> [K^Δ_{p-1}]_a,
/// where K^Δ_p is free on v_σ (σ ∈ Δ, |σ| = p). Bases are ordered
/// lexicographically by face; the monomial of a basis element is a - e_σ.
struct StrandComplex {
    Exponents multidegree;
    int position = 0;
    std::vector<StrandBasisElement> upper, middle, lower;
    RationalMatrix d_in;  // middle x upper
    RationalMatrix d_out; // lower x middle
};

StrandComplex koszul_strand(const SimplicialComplex& delta, int position, const Exponents& multidegree);

struct StrandPiece {
    std::size_t dimension = 0;
    std::vector<Mask> faces; // labels of the middle basis
    QuotientBasis homology;  // representatives are cycles over `faces`
};

/// [W_i(Δ)]_b for square-free b, with a basis of representative cycles.
StrandPiece koszul_strand_piece(const SimplicialComplex& delta, int i, const SquareFreeDegree& b);

/// dim [W_i(Δ)]_a for an arbitrary multidegree a, straight from the strand.
std::size_t koszul_piece_dimension(const SimplicialComplex& delta, int i, const Exponents& a);

// ---------------------------------------------------------------------------
// Square-free modules
// ---------------------------------------------------------------------------

/// Finite model of an N^n-graded square-free S-module: a vector space at
/// every square-free degree and the maps x_j : M_b -> M_{b+e_j} for j ∉ b.
/// Maps for j ∈ Supp(b) are isomorphisms and are identified with the
/// identity of M_{Supp(b)}, so they are not stored.
class SquareFreeModule {
public:
    SquareFreeModule() = default;
    explicit SquareFreeModule(int n);

    int n() const { return n_; }
    std::size_t dim(Mask b) const { return dims_.at(b); }
    void set_dim(Mask b, std::size_t d) { dims_.at(b) = d; }

    /// x_j : M_b -> M_{b ∪ {j}} for j ∉ b (0-based bit j), as a
    /// dim(b ∪ j) x dim(b) matrix; a zero matrix when nothing is stored.
    RationalMatrix mult(Mask b, int j) const;
    void set_mult(Mask b, int j, RationalMatrix m);

    /// Multiplication by x^T on M_b, landing in M_{b ∪ T}.
    RationalMatrix monomial_action(Mask b, Mask t) const;

    bool is_zero() const;
    /// Masks with a nonzero piece, ascending.
    std::vector<Mask> nonzero_degrees() const;

    /// First (b, j, k) with x_k x_j ≠ x_j x_k on M_b, if any.
    std::optional<std::tuple<Mask, int, int>> first_commutativity_violation() const;

    /// Representative cycles and their face labels, when the module came
    /// from build_W. Empty otherwise.
    std::vector<std::vector<Mask>> basis_faces;
    std::vector<std::vector<Vector>> representatives;

private:
    int n_ = 0;
    std::vector<std::size_t> dims_;
    std::map<std::pair<Mask, int>, RationalMatrix> mult_;
};

/// All square-free pieces of W_i(Δ) with the multiplication maps induced on
/// homology. Throws OracleError if a lifted product is not a cycle of the
/// target strand or the commuting squares fail.
SquareFreeModule build_W(const SimplicialComplex& delta, int i, int jobs = 0,
                         int guard = kDefaultSubsetGuard);

/// Checks that x_j : [W_i]_b -> [W_i]_{b+e_j}, j ∈ Supp(b), computed on the
/// strand at the non-square-free degree b + e_j, is an isomorphism.
bool on_support_multiplication_is_iso(const SimplicialComplex& delta, int i, const SquareFreeModule& w,
                                      Mask b, int j);

// ---------------------------------------------------------------------------
// Hilbert series
// ---------------------------------------------------------------------------

/// Σ_b c_b t^b / Π_{j ∈ Supp(b)} (1 - t_j) over square-free b.
struct HilbertSeriesMulti {
    int n = 0;
    std::map<Mask, std::uint64_t> terms; // no zero coefficients

    bool is_zero() const { return terms.empty(); }
    bool operator==(const HilbertSeriesMulti&) const = default;
};

HilbertSeriesMulti hilbert_series_combinatorial(const SimplicialComplex& delta, int i, int jobs = 0,
                                                int guard = kDefaultSubsetGuard);
HilbertSeriesMulti hilbert_series_from_module(const SquareFreeModule& module);

/// dim [M]_a for a = 0..max_degree under the total-degree grading.
std::vector<std::int64_t> specialize_single(const HilbertSeriesMulti& series, int max_degree);

/// Σ_{|a| = d} dim [W_i(Δ)]_a for d = 0..max_degree, from strand homology at
/// every multidegree a (no use of square-freeness).
std::vector<std::int64_t> strand_hilbert_function(const SimplicialComplex& delta, int i, int max_degree);

/// strand_hilbert_function for every i = 0..n at once (outer index i).
std::vector<std::vector<std::int64_t>> strand_hilbert_functions(const SimplicialComplex& delta, int max_degree);

struct ChenRanks {
    std::vector<std::int64_t> q_coefficients; // c_j(Γ), j = 0..n
    std::vector<std::int64_t> hilbert;        // dim [W_Γ]_a, W_Γ = W_1(Γ)(2), a = 0..max_degree
};

/// Q_Γ and the Hilbert function of the shifted module W_Γ. Γ must be a graph.
ChenRanks chen_ranks(const SimplicialComplex& graph, int max_degree);

// ---------------------------------------------------------------------------
// Tor and duality
// ---------------------------------------------------------------------------

/// dim [Tor^S_j(k, k[Δ])]_b from the Koszul complex on x_1..x_n tensored
/// with the Stanley-Reisner ring, at any multidegree b.
std::size_t tor_stanley_reisner(const SimplicialComplex& delta, int j, const Exponents& b);

struct DualityReport {
    int i = 0;
    Mask b = 0;
    std::size_t koszul_dim = 0;   // strand homology of K^Δ
    std::size_t tor_dim = 0;      // Tor_{|b|-i}(k, k[Δ])_b
    std::size_t homology_dim = 0; // h̃_{i-1}(Δ_b)
    bool agree() const { return koszul_dim == tor_dim && tor_dim == homology_dim; }
    std::string describe() const;
};

DualityReport verify_duality(const SimplicialComplex& delta, int i, const SquareFreeDegree& b);

// ---------------------------------------------------------------------------
// Betti tables
// ---------------------------------------------------------------------------

struct BettiTable {
    std::map<std::pair<int, Mask>, std::size_t> entries; // (h, b) -> β_{h,b} > 0

    bool is_zero() const { return entries.empty(); }
    /// max(|b| - h); nullopt stands for -∞ (zero module).
    std::optional<int> regularity() const;
    /// max h; -1 for the zero module.
    int projective_dimension() const;
    /// β_h summed over b.
    std::size_t total(int h) const;
};

/// dim Tor^S_h(M, k)_a for h = 0..|Supp(a)|, at an arbitrary multidegree a,
/// from the Koszul complex ⊕_{|F| = h} M_{a - e_F}.
std::vector<std::size_t> module_tor_dimensions(const SquareFreeModule& module, const Exponents& a);

BettiTable betti_table(const SquareFreeModule& module, int jobs = 0);

struct BoundsReport {
    int n = 0;
    int i = 0;
    std::optional<int> regularity; // nullopt: zero module
    int pdim = -1;
    bool regularity_within_n = true;
    bool pdim_within_bound = true;             // pdim <= n - i - 1
    bool generator_degree_floor = true;        // β_{0,b} ≠ 0 ⇒ |b| >= i + 1
    bool sharp_bound_applies = false;          // d = i, n >= 4, 1 <= d <= n - 3
    bool sharp_bound_holds = true;             // reg <= n - 2
    bool ok() const
    {
        return regularity_within_n && pdim_within_bound && generator_degree_floor && sharp_bound_holds;
    }
};

BoundsReport regularity_bounds_check(const SimplicialComplex& delta, int i, int jobs = 0);

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

/// Map V_{d+2} ⊗ S -> V_{d+1} ⊗ S whose cokernel is W_d(Δ): rows are the
/// missing d-faces of Δ (sets of size d+1), columns the (d+2)-sets that are
/// not faces of the flag completion. Entries are ±x_j.
struct PresentationMatrix {
    struct Entry {
        std::size_t row;
        std::size_t col;
        int sign;
        int variable; // 0-based
    };
    int n = 0;
    int d = 0;
    std::vector<Mask> rows;
    std::vector<Mask> cols;
    std::vector<Entry> entries;
};

PresentationMatrix presentation_matrix(const SimplicialComplex& delta);

/// Hilbert function of the cokernel, degrees 0..max_degree, generators in
/// degree d+1.
std::vector<std::int64_t> cokernel_hilbert_function(const PresentationMatrix& p, int max_degree);

/// Hilbert function of W_d(V, K) = coker(Λ^{d+2}V ⊗ S -> (Λ^{d+1}V / K) ⊗ S)
/// in degrees 0..max_degree. K is spanned by the given vectors, written in
/// the lexicographic basis of (d+1)-subsets of [n].
std::vector<std::int64_t> pair_module_hilbert(int n, int d, const std::vector<Vector>& k_basis,
                                              int max_degree);

/// The subspace K = A_{d+1} ⊂ Λ^{d+1}V spanned by the d-faces of Δ.
std::vector<Vector> face_subspace(const SimplicialComplex& delta, int d);

/// True when the strand of K^Δ entering position d+1 is zero at every
/// square-free degree, i.e. W_{d+1} is the kernel of a map of free modules.
bool top_strand_has_no_boundaries(const SimplicialComplex& delta, int d);

} // namespace skm
