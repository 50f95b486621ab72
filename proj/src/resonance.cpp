#include "skm/resonance.hpp"

#include <algorithm>
#include <sstream>

#include "skm/homology.hpp"

namespace skm {

namespace {

bool mask_less(Mask a, Mask b) { return a < b; }

std::vector<Mask> canonical_antichain(std::vector<Mask> sets, bool keep_maximal)
{
    sets = keep_maximal ? maximal_elements(std::move(sets)) : minimal_elements(std::move(sets));
    std::sort(sets.begin(), sets.end(), mask_less);
    return sets;
}

void check_vertex_range(int n, Mask m, const char* what)
{
    if (!is_subset(m, full_mask(n)))
        throw InputError(std::string(what) + " uses a vertex outside [1, n]");
}

} // namespace

// ---- arrangements -----------------------------------------------------------

CoordinateSubspaceArrangement CoordinateSubspaceArrangement::from_supports(int n, std::vector<Mask> supports)
{
    if (n < 0 || n > kMaxVertices)
        throw InputError("arrangement: n out of range");
    for (Mask s : supports)
        check_vertex_range(n, s, "arrangement support");
    CoordinateSubspaceArrangement a;
    a.n_ = n;
    a.components_ = canonical_antichain(std::move(supports), true);
    return a;
}

bool CoordinateSubspaceArrangement::contains_support(Mask s) const
{
    return std::any_of(components_.begin(), components_.end(), [s](Mask c) { return is_subset(s, c); });
}

bool CoordinateSubspaceArrangement::contains(const CoordinateSubspaceArrangement& other) const
{
    // k^{W} ⊆ ∪ k^{V'} iff W ⊆ V' for one V' (a vector space is not a
    // finite union of proper subspaces).
    return std::all_of(other.components_.begin(), other.components_.end(),
                       [this](Mask c) { return contains_support(c); });
}

CoordinateSubspaceArrangement CoordinateSubspaceArrangement::union_with(const CoordinateSubspaceArrangement& other) const
{
    if (n_ != other.n_)
        throw InputError("arrangement union: ambient dimensions differ");
    std::vector<Mask> all = components_;
    all.insert(all.end(), other.components_.begin(), other.components_.end());
    return from_supports(n_, std::move(all));
}

CoordinateSubspaceArrangement CoordinateSubspaceArrangement::intersect(const CoordinateSubspaceArrangement& other) const
{
    if (n_ != other.n_)
        throw InputError("arrangement intersection: ambient dimensions differ");
    std::vector<Mask> all;
    for (Mask a : components_)
        for (Mask b : other.components_)
            all.push_back(a & b);
    return from_supports(n_, std::move(all));
}

CoordinateSubspaceArrangement CoordinateSubspaceArrangement::away_from_origin() const
{
    if (is_origin())
        return empty(n_);
    return *this;
}

std::string CoordinateSubspaceArrangement::describe() const
{
    if (is_empty())
        return "empty";
    if (is_origin())
        return "origin";
    std::ostringstream os;
    for (std::size_t k = 0; k < components_.size(); ++k)
        os << (k ? " " : "") << format_set(components_[k]);
    return os.str();
}

// ---- monomial ideals --------------------------------------------------------

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::from_generators(int n, std::vector<Mask> generators)
{
    if (n < 0 || n > kMaxVertices)
        throw InputError("monomial ideal: n out of range");
    for (Mask g : generators)
        check_vertex_range(n, g, "monomial ideal generator");
    SquareFreeMonomialIdeal ideal;
    ideal.n_ = n;
    ideal.generators_ = canonical_antichain(std::move(generators), false);
    return ideal;
}

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::from_components(int n, const std::vector<Mask>& supports)
{
    // x^T ∈ (x_j : j ∉ V') iff T meets the complement of V', so the
    // intersection is generated by the minimal transversals of the complements.
    std::vector<Mask> transversals{Mask{0}};
    for (Mask v : supports) {
        const Mask complement = full_mask(n) & ~v;
        std::vector<Mask> next;
        for (Mask t : transversals) {
            if (t & complement) {
                next.push_back(t);
                continue;
            }
            for (Mask rest = complement; rest; rest &= rest - 1)
                next.push_back(t | (rest & (~rest + 1)));
        }
        transversals = minimal_elements(std::move(next));
    }
    return from_generators(n, std::move(transversals));
}

bool SquareFreeMonomialIdeal::contains(Mask t) const
{
    return std::any_of(generators_.begin(), generators_.end(), [t](Mask g) { return is_subset(g, t); });
}

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::intersect(const SquareFreeMonomialIdeal& other) const
{
    if (n_ != other.n_)
        throw InputError("ideal intersection: ambient dimensions differ");
    std::vector<Mask> lcms;
    for (Mask a : generators_)
        for (Mask b : other.generators_)
            lcms.push_back(a | b);
    return from_generators(n_, std::move(lcms));
}

// ---- support resonance and annihilators -------------------------------------

CoordinateSubspaceArrangement support_resonance(const SimplicialComplex& delta, int i)
{
    if (i < 1)
        throw InputError("support resonance needs i >= 1");
    const auto dims = all_subset_homology(delta, i);
    std::vector<Mask> supports;
    for (std::size_t b = 0; b < dims.size(); ++b)
        if (dims[b] > 0)
            supports.push_back(b);
    return CoordinateSubspaceArrangement::from_supports(delta.n(), std::move(supports));
}

CoordinateSubspaceArrangement module_support(const SquareFreeModule& module)
{
    return CoordinateSubspaceArrangement::from_supports(module.n(), module.nonzero_degrees());
}

namespace {

/// x^T acts on M_b through M_b -> M_{b ∪ T}; the on-support factors are
/// isomorphisms, so x^T kills M_b iff the off-support part does.
bool monomial_kills(const SquareFreeModule& module, Mask t)
{
    for (Mask b : module.nonzero_degrees())
        if (!module.monomial_action(b, t).is_zero())
            return false;
    return true;
}

} // namespace

SquareFreeMonomialIdeal annihilator_of_module(const SquareFreeModule& module)
{
    std::vector<Mask> killers;
    const std::size_t count = std::size_t{1} << module.n();
    for (std::size_t t = 0; t < count; ++t)
        if (monomial_kills(module, t))
            killers.push_back(t);
    return SquareFreeMonomialIdeal::from_generators(module.n(), std::move(killers));
}

SquareFreeMonomialIdeal annihilator(const SimplicialComplex& delta, int i)
{
    const auto components = support_resonance(delta, i);
    auto ideal = SquareFreeMonomialIdeal::from_components(delta.n(), components.components());
    const SquareFreeModule w = build_W(delta, i);
    const std::size_t count = std::size_t{1} << delta.n();
    for (std::size_t t = 0; t < count; ++t) {
        if (ideal.contains(t) != monomial_kills(w, t)) {
            throw OracleError("annihilator certificate failed for i=" + std::to_string(i) + " at monomial " +
                              format_set(t) + (ideal.contains(t) ? ": in the ideal but acts nontrivially"
                                                                 : ": outside the ideal but kills the module"));
        }
    }
    return ideal;
}

// ---- jump resonance and Hochster sums ---------------------------------------

std::vector<std::size_t> hochster_sums(const SimplicialComplex& delta, Mask support,
                                       std::vector<HochsterTerm>* terms)
{
    const int n = delta.n();
    check_vertex_range(n, support, "support");
    std::vector<std::size_t> sums(static_cast<std::size_t>(n) + 1, 0);
    const Mask complement = full_mask(n) & ~support;
    for (Mask sigma : delta.faces()) {
        if (!is_subset(sigma, complement))
            continue;
        const ReducedHomologyProfile h = reduced_homology(link(delta, support, sigma));
        const int size = popcount(sigma);
        for (int i = 0; i <= n; ++i) {
            const std::size_t c = h(i - 1 - size);
            if (c == 0)
                continue;
            sums[i] += c;
            if (terms)
                terms->push_back({i, sigma, c});
        }
    }
    if (terms)
        std::sort(terms->begin(), terms->end(), [](const HochsterTerm& a, const HochsterTerm& b) {
            return a.i != b.i ? a.i < b.i : size_lex_less(a.sigma, b.sigma);
        });
    return sums;
}

CoordinateSubspaceArrangement jump_resonance(const SimplicialComplex& delta, int i)
{
    if (i < 0)
        throw InputError("jump resonance needs i >= 0");
    const int n = delta.n();
    if (i == 0)
        return CoordinateSubspaceArrangement::origin(n);
    if (n > kDefaultSubsetGuard)
        throw GuardError("jump resonance: n exceeds subset guard");
    if (i > n)
        return CoordinateSubspaceArrangement::empty(n);
    std::vector<Mask> supports;
    const std::size_t count = std::size_t{1} << n;
    // Descending by size; a set below a recorded support cannot be maximal.
    std::vector<Mask> order(count);
    for (std::size_t v = 0; v < count; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
        return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
    });
    for (Mask v : order) {
        if (std::any_of(supports.begin(), supports.end(), [v](Mask s) { return is_subset(v, s); }))
            continue;
        if (hochster_sums(delta, v)[i] > 0)
            supports.push_back(v);
    }
    return CoordinateSubspaceArrangement::from_supports(n, std::move(supports));
}

std::vector<std::size_t> delta_a_cohomology(const SimplicialComplex& delta, const Vector& a)
{
    const int n = delta.n();
    if (static_cast<int>(a.size()) != n)
        throw InputError("delta_a_cohomology: vector length differs from n");
    std::vector<std::size_t> dims(static_cast<std::size_t>(n) + 1, 0);
    if (delta.is_void())
        return dims;
    const int top = delta.dimension() + 1; // largest face size
    // ranks[s] = rank of δ : A^s -> A^{s+1}
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int s = 0; s < top; ++s) {
        const auto& source = delta.faces_of_size(s);
        const auto& target = delta.faces_of_size(s + 1);
        RationalMatrix m(target.size(), source.size());
        for (std::size_t c = 0; c < source.size(); ++c) {
            const Mask sigma = source[c];
            for (int j = 0; j < n; ++j) {
                if ((sigma >> j & 1) || sgn(a[j]) == 0)
                    continue;
                const long r = delta.index_of(sigma | (Mask{1} << j));
                if (r < 0)
                    continue;
                // e_j ∧ e_σ = sign · e_{σ ∪ j}
                m.add(static_cast<std::size_t>(r), c, insertion_sign(sigma, j) * a[j]);
            }
        }
        ranks[s] = rank(m);
    }
    for (int s = 0; s <= std::min(top, n); ++s) {
        const std::size_t incoming = s > 0 ? ranks[s - 1] : 0;
        dims[s] = delta.faces_of_size(s).size() - ranks[s] - incoming;
    }
    return dims;
}

HochsterReport hochster_check(const SimplicialComplex& delta, Mask support)
{
    HochsterReport r;
    r.support = support;
    r.sums = hochster_sums(delta, support, &r.terms);
    Vector a(static_cast<std::size_t>(delta.n()));
    for (int j = 0; j < delta.n(); ++j)
        if (support >> j & 1)
            a[j] = 1;
    r.direct = delta_a_cohomology(delta, a);
    for (std::size_t i = 0; i < r.sums.size(); ++i) {
        if (r.sums[i] != r.direct[i]) {
            throw OracleError("Hochster sum mismatch for complex with facets " + [&] {
                std::string s;
                for (Mask f : delta.facets())
                    s += format_set(f);
                return s;
            }() + ", V' = " + format_set(support) + ", i = " + std::to_string(i) + ": sum " +
                              std::to_string(r.sums[i]) + " vs direct " + std::to_string(r.direct[i]));
        }
    }
    return r;
}

UnionCheck union_consistency_check(const SimplicialComplex& delta, int i)
{
    if (i < 1)
        throw InputError("union check needs i >= 1");
    const int n = delta.n();
    UnionCheck u;
    u.hypothesis_met = true;
    u.support_union = CoordinateSubspaceArrangement::empty(n);
    u.jump_union = jump_resonance(delta, 0);
    for (int j = 1; j <= i; ++j) {
        const auto s = support_resonance(delta, j);
        if (s.is_empty())
            u.hypothesis_met = false;
        u.support_union = u.support_union.union_with(s);
        u.jump_union = u.jump_union.union_with(jump_resonance(delta, j));
    }
    u.equal = u.support_union == u.jump_union;
    if (u.hypothesis_met && !u.equal)
        throw OracleError("union of support resonance (" + u.support_union.describe() +
                          ") differs from union of jump resonance (" + u.jump_union.describe() + ") up to i=" +
                          std::to_string(i));
    return u;
}

// ---- Cohen-Macaulay and propagation -----------------------------------------

bool cohen_macaulay_check(const SimplicialComplex& delta)
{
    if (delta.is_void())
        throw InputError("Cohen-Macaulay check: void complex");
    const int d = delta.dimension();
    for (Mask sigma : delta.faces()) {
        const ReducedHomologyProfile h = reduced_homology(star_link(delta, sigma));
        const int allowed = d - popcount(sigma);
        for (int k = -1; k <= h.top_degree(); ++k)
            if (k != allowed && h(k) != 0)
                return false;
    }
    return true;
}

PropagationResult propagation_check(const SimplicialComplex& delta)
{
    PropagationResult r;
    if (delta.is_void())
        return r;
    const int top = delta.dimension() + 1;
    if (top < 2)
        return r;
    CoordinateSubspaceArrangement prev = jump_resonance(delta, 1);
    for (int k = 1; k < top; ++k) {
        CoordinateSubspaceArrangement next = jump_resonance(delta, k + 1);
        if (!next.contains(prev)) {
            r.holds = false;
            r.first_failure = k;
            return r;
        }
        prev = std::move(next);
    }
    return r;
}

bool cm_propagation_check(const SimplicialComplex& delta)
{
    const bool cm = cohen_macaulay_check(delta);
    if (cm) {
        const auto p = propagation_check(delta);
        if (!p.holds)
            throw OracleError("Cohen-Macaulay complex whose jump resonance fails to propagate at R^" +
                              std::to_string(p.first_failure));
    }
    return cm;
}

FixedDegreeReport fixed_degree_resonance_check(const SimplicialComplex& delta)
{
    if (delta.is_void())
        throw InputError("fixed-degree check: void complex");
    const auto d = skeleton_complete_degree(delta);
    if (!d)
        throw InputError("fixed-degree check needs a complex with complete codimension-one skeleton");
    const int n = delta.n();
    FixedDegreeReport r;
    r.d = *d;
    for (int i = 1; i <= n; ++i) {
        if (i == *d + 1)
            continue;
        if (!(support_resonance(delta, i).away_from_origin() == jump_resonance(delta, i).away_from_origin())) {
            r.item1 = false;
            r.item1_failures.push_back(i);
        }
    }
    if (*d >= 1) {
        r.support_d = support_resonance(delta, *d);
        r.jump_d = jump_resonance(delta, *d);
    } else {
        r.support_d = CoordinateSubspaceArrangement::empty(n);
        r.jump_d = jump_resonance(delta, 0);
    }
    r.support_d1 = support_resonance(delta, *d + 1);
    r.jump_d1 = jump_resonance(delta, *d + 1);
    r.item2 = r.support_d1.is_empty() || r.support_d1.is_whole();
    // Item (3): the union over maximal V' with h̃_{d-1}(Δ_{V'}) ≠ 0 is R̃_d.
    r.item3 = r.support_d.away_from_origin() == r.jump_d.away_from_origin();
    if (!r.ok()) {
        std::string what = "fixed-degree resonance check failed (d=" + std::to_string(*d) + "):";
        if (!r.item1) {
            what += " R~_i != R^i for i in";
            for (int i : r.item1_failures)
                what += " " + std::to_string(i);
            what += ";";
        }
        if (!r.item2)
            what += " R~_{d+1} = " + r.support_d1.describe() + ";";
        if (!r.item3)
            what += " R^d = " + r.jump_d.describe() + " vs " + r.support_d.describe() + ";";
        throw OracleError(what);
    }
    return r;
}

} // namespace skm
