#include "skm/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace skm {

namespace {

constexpr std::size_t kMaxExpandedFaces = std::size_t{1} << 24;

const std::vector<Mask>& empty_list()
{
    static const std::vector<Mask> empty;
    return empty;
}

void check_n(int n)
{
    if (n < 1)
        throw InputError("vertex count must be at least 1");
    if (n > kMaxVertices)
        throw InputError("vertex count exceeds " + std::to_string(kMaxVertices));
}

} // namespace

SquareFreeDegree::SquareFreeDegree(int n, Mask mask) : n_(n), mask_(mask)
{
    check_n(n);
    if (!is_subset(mask, full_mask(n)))
        throw InputError("square-free degree " + format_set(mask) + " not contained in [n]");
}

SquareFreeDegree SquareFreeDegree::from_vertices(int n, const std::vector<int>& vertices)
{
    return SquareFreeDegree(n, skm::from_vertices(n, vertices));
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& facets)
{
    check_n(n);
    std::vector<Mask> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets)
        masks.push_back(skm::from_vertices(n, f));
    return from_masks(n, std::move(masks));
}

SimplicialComplex SimplicialComplex::from_masks(int n, std::vector<Mask> facets, Mask ground)
{
    check_n(n);
    SimplicialComplex c;
    c.n_ = n;
    c.ground_ = ground;
    for (Mask f : facets)
        if (!is_subset(f, full_mask(n)))
            throw InputError("facet " + format_set(f) + " not contained in [n]");
    c.facets_ = maximal_elements(std::move(facets));

    std::size_t budget = 0;
    for (Mask f : c.facets_) {
        budget += std::size_t{1} << popcount(f);
        if (popcount(f) > 24 || budget > kMaxExpandedFaces)
            throw GuardError("complex has too many faces to expand");
    }

    std::unordered_set<Mask> seen;
    for (Mask f : c.facets_) {
        // Walk all submasks of the facet.
        Mask s = f;
        while (true) {
            seen.insert(s);
            if (s == 0)
                break;
            s = (s - 1) & f;
        }
    }
    int max_size = -1;
    for (Mask s : seen)
        max_size = std::max(max_size, popcount(s));
    c.by_size_.assign(static_cast<std::size_t>(max_size + 1), {});
    for (Mask s : seen)
        c.by_size_[popcount(s)].push_back(s);
    for (auto& layer : c.by_size_)
        std::sort(layer.begin(), layer.end(), lex_less);
    return c;
}

SimplicialComplex SimplicialComplex::simplex_boundary(int n)
{
    check_n(n);
    std::vector<Mask> facets;
    for (int j = 0; j < n; ++j)
        facets.push_back(full_mask(n) & ~(Mask{1} << j));
    return from_masks(n, std::move(facets));
}

SimplicialComplex SimplicialComplex::cycle(int n)
{
    if (n < 3)
        throw InputError("a cycle needs at least 3 vertices");
    std::vector<Mask> edges;
    for (int j = 0; j < n; ++j)
        edges.push_back((Mask{1} << j) | (Mask{1} << ((j + 1) % n)));
    return from_masks(n, std::move(edges));
}

SimplicialComplex SimplicialComplex::path(int n)
{
    check_n(n);
    if (n == 1)
        return from_masks(1, {Mask{1}});
    std::vector<Mask> edges;
    for (int j = 0; j + 1 < n; ++j)
        edges.push_back((Mask{1} << j) | (Mask{1} << (j + 1)));
    return from_masks(n, std::move(edges));
}

SimplicialComplex SimplicialComplex::complete_graph(int n)
{
    check_n(n);
    if (n == 1)
        return from_masks(1, {Mask{1}});
    return from_masks(n, subsets_of_size(n, 2));
}

const std::vector<Mask>& SimplicialComplex::faces_of_dim(int dim) const
{
    const int size = dim + 1;
    if (size < 0 || size >= static_cast<int>(by_size_.size()))
        return empty_list();
    return by_size_[size];
}

std::vector<Mask> SimplicialComplex::faces() const
{
    std::vector<Mask> out;
    for (const auto& layer : by_size_)
        out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

std::size_t SimplicialComplex::face_count() const
{
    std::size_t total = 0;
    for (const auto& layer : by_size_)
        total += layer.size();
    return total;
}

long SimplicialComplex::index_of(Mask face) const
{
    const auto& layer = faces_of_size(popcount(face));
    auto it = std::lower_bound(layer.begin(), layer.end(), face, lex_less);
    if (it == layer.end() || *it != face)
        return -1;
    return static_cast<long>(it - layer.begin());
}

bool SimplicialComplex::contains(Mask face) const { return index_of(face) >= 0; }

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& layer : by_size_)
        f.push_back(layer.size());
    return f;
}

Mask SimplicialComplex::vertex_mask() const
{
    Mask m = 0;
    for (Mask f : facets_)
        m |= f;
    return m;
}

SimplicialComplex restriction(const SimplicialComplex& delta, const SquareFreeDegree& b)
{
    if (b.n() != delta.n())
        throw InputError("degree and complex live on different vertex counts");
    return restriction(delta, b.mask());
}

SimplicialComplex restriction(const SimplicialComplex& delta, Mask vertices)
{
    std::vector<Mask> facets;
    facets.reserve(delta.facets().size());
    for (Mask f : delta.facets())
        facets.push_back(f & vertices);
    return SimplicialComplex::from_masks(delta.n(), std::move(facets), vertices & delta.ground());
}

SimplicialComplex link(const SimplicialComplex& delta, Mask restrict_to, Mask sigma)
{
    if (!delta.contains(sigma))
        throw InputError("link: " + format_set(sigma) + " is not a face");
    // τ ∪ σ ∈ Δ iff τ ∪ σ lies in some facet, so the link is generated by
    // the traces on V' of the facets containing σ.
    std::vector<Mask> facets;
    for (Mask f : delta.facets())
        if (is_subset(sigma, f))
            facets.push_back(f & restrict_to);
    return SimplicialComplex::from_masks(delta.n(), std::move(facets), restrict_to);
}

SimplicialComplex star_link(const SimplicialComplex& delta, Mask sigma)
{
    return link(delta, delta.ground() & ~sigma, sigma);
}

std::optional<int> skeleton_complete_degree(const SimplicialComplex& delta)
{
    if (delta.is_void())
        throw InputError("skeleton degree of the void complex is undefined");
    const int d = delta.dimension();
    if (d < 0)
        return std::nullopt;
    // Faces of size d (dimension d-1) must be all d-subsets of [n].
    if (static_cast<std::int64_t>(delta.faces_of_size(d).size()) != binomial(delta.n(), d))
        return std::nullopt;
    return d;
}

std::vector<Mask> missing_faces(const SimplicialComplex& delta, int dim)
{
    if (delta.n() > kDefaultSubsetGuard)
        throw GuardError("missing_faces: n exceeds subset guard");
    std::vector<Mask> out;
    for (Mask s : subsets_of_size(delta.n(), dim + 1))
        if (!delta.contains(s))
            out.push_back(s);
    return out;
}

SimplicialComplex flag_completion(const SimplicialComplex& delta)
{
    const auto d = delta.is_void() ? std::nullopt : skeleton_complete_degree(delta);
    if (!d)
        throw InputError("flag_completion needs a complex with full codimension-one skeleton");
    const int n = delta.n();
    if (n > kDefaultSubsetGuard)
        throw GuardError("flag_completion: n exceeds subset guard");

    // Sets of size <= d+1 are faces iff they are faces of Δ; a larger set is
    // a face iff all its codimension-one subsets are.
    std::vector<char> in(std::size_t{1} << n, 0);
    std::vector<Mask> faces;
    for (int size = 0; size <= n; ++size) {
        for (Mask s : subsets_of_size(n, size)) {
            bool ok;
            if (size <= *d + 1) {
                ok = delta.contains(s);
            } else {
                ok = true;
                for (Mask rest = s; rest && ok; rest &= rest - 1)
                    ok = in[s & ~(rest & (~rest + 1))];
            }
            if (ok) {
                in[s] = 1;
                faces.push_back(s);
            }
        }
    }
    return SimplicialComplex::from_masks(n, maximal_elements(std::move(faces)));
}

bool is_downward_closed(const SimplicialComplex& delta)
{
    for (Mask f : delta.faces()) {
        if (!is_subset(f, full_mask(delta.n())))
            return false;
        for (Mask rest = f; rest; rest &= rest - 1)
            if (!delta.contains(f & ~(rest & (~rest + 1))))
                return false;
    }
    // Facets regenerate the same face family.
    const auto rebuilt = SimplicialComplex::from_masks(delta.n(), delta.facets());
    return rebuilt.faces() == delta.faces();
}

} // namespace skm
