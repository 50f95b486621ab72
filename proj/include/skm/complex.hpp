#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "skm/common.hpp"

namespace skm {

/// A square-free multidegree b in N^n, i.e. a subset of [n]. |b| is the
/// number of elements and Supp(b) is the subset itself.
class SquareFreeDegree {
public:
    SquareFreeDegree() = default;
    SquareFreeDegree(int n, Mask mask);

    static SquareFreeDegree from_vertices(int n, const std::vector<int>& vertices);
    static SquareFreeDegree full(int n) { return SquareFreeDegree(n, full_mask(n)); }

    Mask mask() const { return mask_; }
    int n() const { return n_; }
    int total_degree() const { return popcount(mask_); }
    std::vector<int> support() const { return to_vertices(mask_); }

    auto operator<=>(const SquareFreeDegree&) const = default;

private:
    int n_ = 0;
    Mask mask_ = 0;
};

/// A finite simplicial complex on the vertex set [n]. Faces are bitmasks.
///
/// The VOID complex has no faces at all; the IRRELEVANT complex has the
/// single face {} (the empty simplex). They are different values: only the
/// latter has nonzero reduced homology (in degree -1).
///
/// Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Facets given as 1-based vertex lists. Duplicates and non-maximal
    /// members are allowed and get absorbed.
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
    static SimplicialComplex from_masks(int n, std::vector<Mask> facets, Mask ground);
    static SimplicialComplex from_masks(int n, std::vector<Mask> facets)
    {
        return from_masks(n, std::move(facets), full_mask(n));
    }

    static SimplicialComplex void_complex(int n) { return from_masks(n, {}); }
    static SimplicialComplex irrelevant(int n) { return from_masks(n, {Mask{0}}); }
    static SimplicialComplex simplex(int n) { return from_masks(n, {full_mask(n)}); }
    static SimplicialComplex simplex_boundary(int n);
    static SimplicialComplex cycle(int n);
    static SimplicialComplex path(int n);
    static SimplicialComplex complete_graph(int n);

    int n() const { return n_; }
    /// Vertex set the complex lives on; [n] unless produced by restriction.
    Mask ground() const { return ground_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

    /// Largest face size minus one; -1 for IRRELEVANT, -2 for VOID.
    int dimension() const { return static_cast<int>(by_size_.size()) - 2; }

    /// Inclusion-maximal faces, sorted by size then lexicographically.
    const std::vector<Mask>& facets() const { return facets_; }

    /// Faces of the given dimension (size dim+1), lexicographically sorted.
    const std::vector<Mask>& faces_of_dim(int dim) const;
    const std::vector<Mask>& faces_of_size(int size) const { return faces_of_dim(size - 1); }

    /// All faces, sorted by size then lexicographically.
    std::vector<Mask> faces() const;
    std::size_t face_count() const;

    bool contains(Mask face) const;

    /// Index of a face within faces_of_size(popcount(face)), or -1.
    long index_of(Mask face) const;

    /// f_{-1}, f_0, ..., f_dim.
    std::vector<std::size_t> f_vector() const;

    /// Vertices j with {j} a face.
    Mask vertex_mask() const;

    bool operator==(const SimplicialComplex& other) const
    {
        return n_ == other.n_ && facets_ == other.facets_;
    }

private:
    int n_ = 0;
    Mask ground_ = 0;
    std::vector<Mask> facets_;
    std::vector<std::vector<Mask>> by_size_;
};

/// Δ_b = {τ ∈ Δ : τ ⊆ Supp(b)}; the result records Supp(b) as its ground set.
SimplicialComplex restriction(const SimplicialComplex& delta, const SquareFreeDegree& b);
SimplicialComplex restriction(const SimplicialComplex& delta, Mask vertices);

/// lk_{Δ_{V'}}(σ) = {τ ∈ Δ_{V'} : τ ∪ σ ∈ Δ}. Throws InputError if σ ∉ Δ.
SimplicialComplex link(const SimplicialComplex& delta, Mask restrict_to, Mask sigma);

/// The usual link {τ ∈ Δ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}.
SimplicialComplex star_link(const SimplicialComplex& delta, Mask sigma);

/// d = dim Δ when the (d-1)-skeleton of Δ is that of the full simplex on
/// [n]; nullopt otherwise (and for the IRRELEVANT complex). Throws on VOID.
std::optional<int> skeleton_complete_degree(const SimplicialComplex& delta);

/// All (dim+1)-subsets of [n] that are not faces, in lexicographic order.
std::vector<Mask> missing_faces(const SimplicialComplex& delta, int dim);

/// The largest complex with the same d-skeleton as Δ, d from
/// skeleton_complete_degree. Throws InputError when that degree is undefined.
SimplicialComplex flag_completion(const SimplicialComplex& delta);

/// Structural check of downward closure and of the per-dimension face lists.
bool is_downward_closed(const SimplicialComplex& delta);

} // namespace skm
