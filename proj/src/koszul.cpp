#include "skm/koszul.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "skm/homology.hpp"
#include "skm/parallel.hpp"

namespace skm {

namespace {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : default_jobs(); }

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw GuardError("Hilbert function coefficient overflows 64 bits");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw GuardError("Hilbert function coefficient overflows 64 bits");
    return r;
}

/// Number of a ∈ N^n with |a| = degree and Supp(a) equal to a fixed set of
/// the given size.
std::int64_t multidegrees_with_support(int support_size, int degree)
{
    if (support_size == 0)
        return degree == 0 ? 1 : 0;
    return binomial(degree - 1, support_size - 1);
}

long find_face(const std::vector<Mask>& faces, Mask face)
{
    auto it = std::lower_bound(faces.begin(), faces.end(), face, lex_less);
    if (it == faces.end() || *it != face)
        return -1;
    return static_cast<long>(it - faces.begin());
}

long find_face(const std::vector<StrandBasisElement>& basis, Mask face)
{
    auto it = std::lower_bound(basis.begin(), basis.end(), face,
                               [](const StrandBasisElement& e, Mask f) { return lex_less(e.face, f); });
    if (it == basis.end() || it->face != face)
        return -1;
    return static_cast<long>(it - basis.begin());
}

/// Calls fn(a) for every a ∈ N^n with |a| <= max_degree.
void for_each_multidegree(int n, int max_degree, const std::function<void(const Exponents&)>& fn)
{
    Exponents a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == n) {
            fn(a);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            a[var] = e;
            rec(var + 1, remaining - e);
        }
        a[var] = 0;
    };
    rec(0, max_degree);
}

std::vector<Exponents> monomials_of_degree(int n, int degree)
{
    std::vector<Exponents> out;
    if (degree < 0)
        return out;
    Exponents a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == n - 1) {
            a[var] = remaining;
            out.push_back(a);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            a[var] = e;
            rec(var + 1, remaining - e);
        }
    };
    if (n == 0) {
        if (degree == 0)
            out.push_back(a);
        return out;
    }
    rec(0, degree);
    return out;
}

/// Sorted (lex) submasks of `set` of the given size.
std::vector<Mask> submasks_of_size(Mask set, int size)
{
    std::vector<Mask> out;
    Mask s = set;
    while (true) {
        if (popcount(s) == size)
            out.push_back(s);
        if (s == 0)
            break;
        s = (s - 1) & set;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

} // namespace

Exponents indicator(int n, Mask mask)
{
    Exponents a(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        if (mask >> j & 1)
            a[j] = 1;
    return a;
}

Mask support(const Exponents& a)
{
    Mask m = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > 0)
            m |= Mask{1} << j;
    return m;
}

int total_degree(const Exponents& a)
{
    int d = 0;
    for (int e : a)
        d += e;
    return d;
}

// ---- strands ----------------------------------------------------------------

StrandComplex koszul_strand(const SimplicialComplex& delta, int position, const Exponents& multidegree)
{
    if (static_cast<int>(multidegree.size()) != delta.n())
        throw InputError("multidegree length differs from n");
    for (int e : multidegree)
        if (e < 0)
            throw InputError("multidegree has a negative entry");

    const Mask supp = support(multidegree);
    auto basis_at = [&](int size) {
        std::vector<StrandBasisElement> out;
        if (size < 0)
            return out;
        for (Mask face : delta.faces_of_size(size)) {
            if (!is_subset(face, supp))
                continue; // a - e_σ would have a negative entry
            Exponents m = multidegree;
            for (Mask rest = face; rest; rest &= rest - 1)
                --m[std::countr_zero(rest)];
            out.push_back({face, std::move(m)});
        }
        return out;
    };

    StrandComplex s;
    s.multidegree = multidegree;
    s.position = position;
    s.upper = basis_at(position + 1);
    s.middle = basis_at(position);
    s.lower = basis_at(position - 1);

    auto differential = [](const std::vector<StrandBasisElement>& source,
                           const std::vector<StrandBasisElement>& target) {
        RationalMatrix m(target.size(), source.size());
        for (std::size_t c = 0; c < source.size(); ++c) {
            const Mask sigma = source[c].face;
            for (Mask rest = sigma; rest; rest &= rest - 1) {
                const int bit = std::countr_zero(rest);
                const Mask tau = sigma & ~(Mask{1} << bit);
                const long r = find_face(target, tau);
                if (r < 0)
                    throw OracleError("strand: boundary face missing from target basis");
                // v_σ ⊗ x^m  ↦  ± v_τ ⊗ x_j x^m
                Exponents moved = source[c].monomial;
                ++moved[bit];
                if (moved != target[static_cast<std::size_t>(r)].monomial)
                    throw OracleError("strand: monomial bookkeeping mismatch");
                m.set(static_cast<std::size_t>(r), c, insertion_sign(tau, bit));
            }
        }
        return m;
    };
    s.d_in = differential(s.upper, s.middle);
    s.d_out = differential(s.middle, s.lower);
    return s;
}

StrandPiece koszul_strand_piece(const SimplicialComplex& delta, int i, const SquareFreeDegree& b)
{
    if (i < 0)
        throw InputError("Koszul module weight must be nonnegative");
    const StrandComplex s = koszul_strand(delta, i, indicator(delta.n(), b.mask()));
    HomologyResult h = homology(s.d_in, s.d_out);
    StrandPiece piece;
    piece.dimension = h.dimension;
    for (const auto& e : s.middle)
        piece.faces.push_back(e.face);
    piece.homology = std::move(h.basis);
    return piece;
}

std::size_t koszul_piece_dimension(const SimplicialComplex& delta, int i, const Exponents& a)
{
    const StrandComplex s = koszul_strand(delta, i, a);
    return homology_dimension(s.d_in, s.d_out);
}

// ---- SquareFreeModule -------------------------------------------------------

SquareFreeModule::SquareFreeModule(int n) : n_(n), dims_(std::size_t{1} << n, 0)
{
    if (n < 0 || n > kDefaultSubsetGuard)
        throw GuardError("square-free module: n outside supported range");
}

RationalMatrix SquareFreeModule::mult(Mask b, int j) const
{
    if (b >> j & 1)
        throw InputError("mult: j lies in the support of b");
    auto it = mult_.find({b, j});
    if (it != mult_.end())
        return it->second;
    return RationalMatrix(dim(b | (Mask{1} << j)), dim(b));
}

void SquareFreeModule::set_mult(Mask b, int j, RationalMatrix m)
{
    if (b >> j & 1)
        throw InputError("set_mult: j lies in the support of b");
    if (m.rows() != dim(b | (Mask{1} << j)) || m.cols() != dim(b))
        throw InputError("set_mult: matrix shape does not match piece dimensions");
    if (m.is_zero())
        mult_.erase({b, j});
    else
        mult_[{b, j}] = std::move(m);
}

RationalMatrix SquareFreeModule::monomial_action(Mask b, Mask t) const
{
    RationalMatrix acc = RationalMatrix::identity(dim(b));
    Mask cur = b;
    for (Mask rest = t & ~b; rest; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        acc = mult(cur, j) * acc;
        cur |= Mask{1} << j;
    }
    return acc;
}

bool SquareFreeModule::is_zero() const
{
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
}

std::vector<Mask> SquareFreeModule::nonzero_degrees() const
{
    std::vector<Mask> out;
    for (std::size_t b = 0; b < dims_.size(); ++b)
        if (dims_[b] > 0)
            out.push_back(b);
    return out;
}

std::optional<std::tuple<Mask, int, int>> SquareFreeModule::first_commutativity_violation() const
{
    for (std::size_t bi = 0; bi < dims_.size(); ++bi) {
        const Mask b = bi;
        if (dims_[b] == 0)
            continue;
        for (int j = 0; j < n_; ++j) {
            if (b >> j & 1)
                continue;
            for (int k = j + 1; k < n_; ++k) {
                if (b >> k & 1)
                    continue;
                const Mask bj = b | (Mask{1} << j), bk = b | (Mask{1} << k);
                if (dim(bj | bk) == 0)
                    continue;
                if (!(mult(bj, k) * mult(b, j) == mult(bk, j) * mult(b, k)))
                    return std::make_tuple(b, j, k);
            }
        }
    }
    return std::nullopt;
}

SquareFreeModule build_W(const SimplicialComplex& delta, int i, int jobs, int guard)
{
    const int n = delta.n();
    if (n > guard)
        throw GuardError("build_W: n = " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
    const std::size_t count = std::size_t{1} << n;
    std::vector<StrandPiece> pieces(count);
    parallel_for(count, resolve_jobs(jobs),
                 [&](std::size_t b) { pieces[b] = koszul_strand_piece(delta, i, SquareFreeDegree(n, b)); });

    SquareFreeModule w(n);
    w.basis_faces.resize(count);
    w.representatives.resize(count);
    for (std::size_t b = 0; b < count; ++b) {
        w.set_dim(b, pieces[b].dimension);
        w.basis_faces[b] = pieces[b].faces;
        w.representatives[b] = pieces[b].homology.representatives();
    }

    // x_j on homology: a cycle over faces ⊆ b is also a cycle over faces ⊆ b ∪ j
    // (same exterior monomials, monomial part multiplied by x_j).
    std::vector<std::vector<std::pair<int, RationalMatrix>>> maps(count);
    parallel_for(count, resolve_jobs(jobs), [&](std::size_t bi) {
        const Mask b = bi;
        if (pieces[b].dimension == 0)
            return;
        for (int j = 0; j < n; ++j) {
            if (b >> j & 1)
                continue;
            const Mask target = b | (Mask{1} << j);
            const StrandPiece& tp = pieces[target];
            if (tp.dimension == 0)
                continue;
            RationalMatrix m(tp.dimension, pieces[b].dimension);
            const auto& reps = pieces[b].homology.representatives();
            for (std::size_t col = 0; col < reps.size(); ++col) {
                Vector lifted(tp.faces.size());
                for (std::size_t k = 0; k < reps[col].size(); ++k) {
                    if (sgn(reps[col][k]) == 0)
                        continue;
                    const long idx = find_face(tp.faces, pieces[b].faces[k]);
                    if (idx < 0)
                        throw OracleError("build_W: face lost under multiplication");
                    lifted[static_cast<std::size_t>(idx)] = reps[col][k];
                }
                const auto coords = tp.homology.coordinates(lifted);
                if (!coords)
                    throw OracleError("build_W: product of a cycle is not a cycle at " + format_set(target));
                for (std::size_t r = 0; r < coords->size(); ++r)
                    if (sgn((*coords)[r]) != 0)
                        m.set(r, col, (*coords)[r]);
            }
            maps[b].emplace_back(j, std::move(m));
        }
    });
    for (std::size_t b = 0; b < count; ++b)
        for (auto& [j, m] : maps[b])
            w.set_mult(b, j, std::move(m));

    if (auto bad = w.first_commutativity_violation()) {
        const auto [b, j, k] = *bad;
        throw OracleError("build_W: x_" + std::to_string(j + 1) + " and x_" + std::to_string(k + 1) +
                          " do not commute on the piece at " + format_set(b));
    }
    return w;
}

bool on_support_multiplication_is_iso(const SimplicialComplex& delta, int i, const SquareFreeModule& w,
                                      Mask b, int j)
{
    if (!(b >> j & 1))
        throw InputError("on-support check needs j in Supp(b)");
    if (w.representatives.empty())
        throw InputError("on-support check needs a module with representatives");
    Exponents a = indicator(delta.n(), b);
    ++a[j];
    const StrandComplex s = koszul_strand(delta, i, a);
    HomologyResult h = homology(s.d_in, s.d_out);
    const std::size_t source_dim = w.dim(b);
    if (h.dimension != source_dim)
        return false;
    RationalMatrix m(h.dimension, source_dim);
    const auto& reps = w.representatives[b];
    const auto& faces = w.basis_faces[b];
    for (std::size_t col = 0; col < reps.size(); ++col) {
        // v_σ ⊗ x^{b - e_σ}  ↦  v_σ ⊗ x^{b - e_σ + e_j}, the same face at degree a.
        Vector lifted(s.middle.size());
        for (std::size_t k = 0; k < reps[col].size(); ++k) {
            if (sgn(reps[col][k]) == 0)
                continue;
            const long idx = find_face(s.middle, faces[k]);
            if (idx < 0)
                return false;
            lifted[static_cast<std::size_t>(idx)] = reps[col][k];
        }
        const auto coords = h.basis.coordinates(lifted);
        if (!coords)
            return false;
        for (std::size_t r = 0; r < coords->size(); ++r)
            if (sgn((*coords)[r]) != 0)
                m.set(r, col, (*coords)[r]);
    }
    return rank(m) == source_dim;
}

// ---- Hilbert series ---------------------------------------------------------

HilbertSeriesMulti hilbert_series_combinatorial(const SimplicialComplex& delta, int i, int jobs, int guard)
{
    if (i < 0)
        throw InputError("combinatorial Hilbert series needs i >= 0");
    HilbertSeriesMulti h;
    h.n = delta.n();
    const auto dims = all_subset_homology(delta, i, jobs, guard);
    for (std::size_t b = 0; b < dims.size(); ++b)
        if (dims[b] > 0)
            h.terms[b] = dims[b];
    return h;
}

HilbertSeriesMulti hilbert_series_from_module(const SquareFreeModule& module)
{
    HilbertSeriesMulti h;
    h.n = module.n();
    for (Mask b : module.nonzero_degrees())
        h.terms[b] = module.dim(b);
    return h;
}

std::vector<std::int64_t> specialize_single(const HilbertSeriesMulti& series, int max_degree)
{
    if (max_degree < 0)
        throw InputError("max_degree must be nonnegative");
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const auto& [b, c] : series.terms) {
        const int k = popcount(b);
        // t^k / (1-t)^k = Σ_{a >= k} C(a-1, k-1) t^a
        for (int a = k; a <= max_degree; ++a)
            out[a] = checked_add(out[a], checked_mul(static_cast<std::int64_t>(c), multidegrees_with_support(k, a)));
    }
    return out;
}

namespace {

/// Homology of the whole K^Δ strand at multidegree a, one entry per
/// position 0..n, keyed by the strand's face content.
class StrandDimensionCache {
public:
    explicit StrandDimensionCache(const SimplicialComplex& delta) : delta_(delta) {}

    const std::vector<std::size_t>& dims_at(const Exponents& a)
    {
        const Mask supp = support(a);
        key_.clear();
        for (int size = 0; size <= delta_.dimension() + 1; ++size) {
            for (Mask f : delta_.faces_of_size(size))
                if (is_subset(f, supp))
                    key_.append(reinterpret_cast<const char*>(&f), sizeof f);
            key_.push_back('|');
        }
        auto it = cache_.find(key_);
        if (it != cache_.end())
            return it->second;
        std::vector<std::size_t> dims(static_cast<std::size_t>(delta_.n()) + 1, 0);
        for (int p = 0; p <= delta_.n(); ++p) {
            const StrandComplex s = koszul_strand(delta_, p, a);
            dims[p] = homology_dimension(s.d_in, s.d_out);
        }
        return cache_.emplace(key_, std::move(dims)).first->second;
    }

private:
    const SimplicialComplex& delta_;
    std::string key_;
    std::unordered_map<std::string, std::vector<std::size_t>> cache_;
};

} // namespace

std::vector<std::vector<std::int64_t>> strand_hilbert_functions(const SimplicialComplex& delta, int max_degree)
{
    if (max_degree < 0)
        throw InputError("max_degree must be nonnegative");
    const int n = delta.n();
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(n) + 1,
                                               std::vector<std::int64_t>(static_cast<std::size_t>(max_degree) + 1, 0));
    StrandDimensionCache cache(delta);
    for_each_multidegree(n, max_degree, [&](const Exponents& a) {
        const auto& dims = cache.dims_at(a);
        const int degree = total_degree(a);
        for (int i = 0; i <= n; ++i)
            out[i][degree] += static_cast<std::int64_t>(dims[i]);
    });
    return out;
}

std::vector<std::int64_t> strand_hilbert_function(const SimplicialComplex& delta, int i, int max_degree)
{
    if (i < 0 || i > delta.n()) {
        if (max_degree < 0)
            throw InputError("max_degree must be nonnegative");
        return std::vector<std::int64_t>(static_cast<std::size_t>(max_degree) + 1, 0);
    }
    return strand_hilbert_functions(delta, max_degree)[i];
}

ChenRanks chen_ranks(const SimplicialComplex& graph, int max_degree)
{
    if (graph.dimension() > 1)
        throw InputError("chen_ranks needs a graph (dimension at most 1)");
    if (max_degree < 0)
        throw InputError("max_degree must be nonnegative");
    ChenRanks out;
    out.q_coefficients.assign(static_cast<std::size_t>(graph.n()) + 1, 0);
    const auto h0 = all_subset_homology(graph, 1);
    for (std::size_t b = 0; b < h0.size(); ++b)
        out.q_coefficients[popcount(b)] += static_cast<std::int64_t>(h0[b]);
    // W_Γ = W_1(Γ)(2): [W_Γ]_a = [W_1(Γ)]_{a+2}.
    const auto series = hilbert_series_combinatorial(graph, 1);
    const auto unshifted = specialize_single(series, max_degree + 2);
    out.hilbert.assign(unshifted.begin() + 2, unshifted.end());
    return out;
}

// ---- Tor and duality --------------------------------------------------------

std::size_t tor_stanley_reisner(const SimplicialComplex& delta, int j, const Exponents& b)
{
    if (static_cast<int>(b.size()) != delta.n())
        throw InputError("multidegree length differs from n");
    if (j < 0)
        return 0;
    const Mask supp = support(b);

    // Basis of (Λ^p V ⊗ k[Δ])_b: v_F ⊗ x^m, F ⊆ Supp(b), m = b - e_F standard.
    auto basis_at = [&](int p) {
        std::vector<Mask> out;
        if (p < 0)
            return out;
        for (Mask f : submasks_of_size(supp, p)) {
            Exponents m = b;
            for (Mask rest = f; rest; rest &= rest - 1)
                --m[std::countr_zero(rest)];
            if (delta.contains(support(m)))
                out.push_back(f);
        }
        return out;
    };
    auto differential = [&](const std::vector<Mask>& source, const std::vector<Mask>& target) {
        RationalMatrix m(target.size(), source.size());
        for (std::size_t c = 0; c < source.size(); ++c) {
            const Mask f = source[c];
            for (Mask rest = f; rest; rest &= rest - 1) {
                const int bit = std::countr_zero(rest);
                const Mask g = f & ~(Mask{1} << bit);
                // x_j · x^m vanishes in k[Δ] unless its support is a face.
                const long r = find_face(target, g);
                if (r < 0)
                    continue;
                m.set(static_cast<std::size_t>(r), c, insertion_sign(g, bit));
            }
        }
        return m;
    };
    const auto upper = basis_at(j + 1), middle = basis_at(j), lower = basis_at(j - 1);
    return homology_dimension(differential(upper, middle), differential(middle, lower));
}

std::string DualityReport::describe() const
{
    std::ostringstream os;
    os << "i=" << i << " b=" << format_set(b) << ": W=" << koszul_dim << " Tor=" << tor_dim
       << " h~=" << homology_dim << (agree() ? " (agree)" : " (MISMATCH)");
    return os.str();
}

DualityReport verify_duality(const SimplicialComplex& delta, int i, const SquareFreeDegree& b)
{
    if (i < 1)
        throw InputError("duality check needs i >= 1");
    DualityReport r;
    r.i = i;
    r.b = b.mask();
    r.koszul_dim = koszul_strand_piece(delta, i, b).dimension;
    const int j = b.total_degree() - i;
    r.tor_dim = j < 0 ? 0 : tor_stanley_reisner(delta, j, indicator(delta.n(), b.mask()));
    r.homology_dim = reduced_homology(restriction(delta, b))(i - 1);
    return r;
}

// ---- Betti tables -----------------------------------------------------------

std::optional<int> BettiTable::regularity() const
{
    std::optional<int> reg;
    for (const auto& [key, beta] : entries) {
        const int v = popcount(key.second) - key.first;
        if (!reg || v > *reg)
            reg = v;
    }
    return reg;
}

int BettiTable::projective_dimension() const
{
    int p = -1;
    for (const auto& [key, beta] : entries)
        p = std::max(p, key.first);
    return p;
}

std::size_t BettiTable::total(int h) const
{
    std::size_t t = 0;
    for (const auto& [key, beta] : entries)
        if (key.first == h)
            t += beta;
    return t;
}

std::vector<std::size_t> module_tor_dimensions(const SquareFreeModule& module, const Exponents& a)
{
    const int n = module.n();
    if (static_cast<int>(a.size()) != n)
        throw InputError("multidegree length differs from n");
    const Mask supp = support(a);
    const int top = popcount(supp);

    // Blocks v_F ⊗ M_{a - e_F}; M at a non-square-free degree is M at its support.
    struct Block {
        Mask f;
        Mask piece; // Supp(a - e_F)
        std::size_t offset;
        std::size_t dim;
    };
    auto piece_support = [&](Mask f) {
        Mask s = 0;
        for (int j = 0; j < n; ++j) {
            const int e = a[j] - static_cast<int>(f >> j & 1);
            if (e > 0)
                s |= Mask{1} << j;
        }
        return s;
    };
    std::vector<std::vector<Block>> blocks(static_cast<std::size_t>(top) + 1);
    std::vector<std::size_t> sizes(static_cast<std::size_t>(top) + 1, 0);
    for (int p = 0; p <= top; ++p) {
        for (Mask f : submasks_of_size(supp, p)) {
            const Mask ps = piece_support(f);
            const std::size_t d = module.dim(ps);
            blocks[p].push_back({f, ps, sizes[p], d});
            sizes[p] += d;
        }
    }
    auto block_index = [&](int p, Mask f) {
        const auto& list = blocks[p];
        auto it = std::lower_bound(list.begin(), list.end(), f,
                                   [](const Block& blk, Mask g) { return lex_less(blk.f, g); });
        return static_cast<std::size_t>(it - list.begin());
    };

    // ranks[p] = rank of ∂ : C_p -> C_{p-1}
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int p = 1; p <= top; ++p) {
        RationalMatrix d(sizes[p - 1], sizes[p]);
        for (const Block& src : blocks[p]) {
            if (src.dim == 0)
                continue;
            for (Mask rest = src.f; rest; rest &= rest - 1) {
                const int j = std::countr_zero(rest);
                const Mask g = src.f & ~(Mask{1} << j);
                const Block& dst = blocks[p - 1][block_index(p - 1, g)];
                if (dst.dim == 0)
                    continue;
                const int sign = insertion_sign(g, j);
                if (src.piece >> j & 1) {
                    // x_j is an on-support isomorphism, identified with the identity.
                    for (std::size_t k = 0; k < src.dim; ++k)
                        d.add(dst.offset + k, src.offset + k, sign);
                } else {
                    const RationalMatrix m = module.mult(src.piece, j);
                    for (std::size_t r = 0; r < m.rows(); ++r)
                        for (const auto& [c, v] : m.row(r))
                            d.add(dst.offset + r, src.offset + c, sign * v);
                }
            }
        }
        ranks[p] = rank(d);
    }
    std::vector<std::size_t> out(static_cast<std::size_t>(top) + 1);
    for (int p = 0; p <= top; ++p)
        out[p] = sizes[p] - ranks[p] - ranks[p + 1];
    return out;
}

BettiTable betti_table(const SquareFreeModule& module, int jobs)
{
    const int n = module.n();
    const std::size_t count = std::size_t{1} << n;
    // Tor at b only involves pieces at subsets of b.
    std::vector<char> below(count, 0);
    for (std::size_t b = 0; b < count; ++b) {
        below[b] = module.dim(b) > 0;
        for (int j = 0; j < n && !below[b]; ++j)
            if (b >> j & 1)
                below[b] = below[b & ~(std::size_t{1} << j)];
    }
    std::vector<std::vector<std::size_t>> tor(count);
    parallel_for(count, resolve_jobs(jobs), [&](std::size_t b) {
        if (below[b])
            tor[b] = module_tor_dimensions(module, indicator(n, b));
    });
    BettiTable table;
    for (std::size_t b = 0; b < count; ++b)
        for (std::size_t h = 0; h < tor[b].size(); ++h)
            if (tor[b][h] > 0)
                table.entries[{static_cast<int>(h), static_cast<Mask>(b)}] = tor[b][h];
    return table;
}

BoundsReport regularity_bounds_check(const SimplicialComplex& delta, int i, int jobs)
{
    if (i < 1)
        throw InputError("bounds check needs i >= 1");
    BoundsReport r;
    r.n = delta.n();
    r.i = i;
    const BettiTable table = betti_table(build_W(delta, i, jobs), jobs);
    r.regularity = table.regularity();
    r.pdim = table.projective_dimension();
    if (!table.is_zero()) {
        r.regularity_within_n = *r.regularity <= r.n;
        r.pdim_within_bound = r.pdim <= r.n - i - 1;
        for (const auto& [key, beta] : table.entries)
            if (key.first == 0 && popcount(key.second) < i + 1)
                r.generator_degree_floor = false;
    }
    if (!delta.is_void()) {
        const auto d = skeleton_complete_degree(delta);
        if (d && *d == i && r.n >= 4 && *d >= 1 && *d <= r.n - 3) {
            r.sharp_bound_applies = true;
            r.sharp_bound_holds = !r.regularity || *r.regularity <= r.n - 2;
        }
    }
    return r;
}

// ---- presentations ----------------------------------------------------------

PresentationMatrix presentation_matrix(const SimplicialComplex& delta)
{
    if (delta.is_void())
        throw InputError("presentation_matrix: void complex");
    const auto d = skeleton_complete_degree(delta);
    if (!d || *d < 1)
        throw InputError("presentation_matrix needs a complex of dimension d >= 1 with full (d-1)-skeleton");
    PresentationMatrix p;
    p.n = delta.n();
    p.d = *d;
    p.rows = missing_faces(delta, *d);
    p.cols = missing_faces(flag_completion(delta), *d + 1);
    for (std::size_t c = 0; c < p.cols.size(); ++c) {
        const Mask rho = p.cols[c];
        for (Mask rest = rho; rest; rest &= rest - 1) {
            const int j = std::countr_zero(rest);
            const Mask tau = rho & ~(Mask{1} << j);
            const long r = find_face(p.rows, tau);
            if (r >= 0)
                p.entries.push_back({static_cast<std::size_t>(r), c, insertion_sign(tau, j), j});
        }
    }
    return p;
}

std::vector<std::int64_t> cokernel_hilbert_function(const PresentationMatrix& p, int max_degree)
{
    if (max_degree < 0)
        throw InputError("max_degree must be nonnegative");
    if (p.n > kDefaultSubsetGuard)
        throw GuardError("cokernel Hilbert function: n exceeds subset guard");
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
    // At a multidegree a the basis elements are the rows/columns whose set
    // lies in Supp(a); the matrix depends on a only through Supp(a).
    const std::size_t count = std::size_t{1} << p.n;
    for (std::size_t bi = 0; bi < count; ++bi) {
        const Mask b = bi;
        std::vector<long> row_index(p.rows.size(), -1), col_index(p.cols.size(), -1);
        std::size_t nr = 0, nc = 0;
        for (std::size_t r = 0; r < p.rows.size(); ++r)
            if (is_subset(p.rows[r], b))
                row_index[r] = static_cast<long>(nr++);
        if (nr == 0)
            continue;
        for (std::size_t c = 0; c < p.cols.size(); ++c)
            if (is_subset(p.cols[c], b))
                col_index[c] = static_cast<long>(nc++);
        RationalMatrix m(nr, nc);
        for (const auto& e : p.entries)
            if (row_index[e.row] >= 0 && col_index[e.col] >= 0)
                m.set(static_cast<std::size_t>(row_index[e.row]), static_cast<std::size_t>(col_index[e.col]), e.sign);
        const auto coker = static_cast<std::int64_t>(nr - rank(m));
        if (coker == 0)
            continue;
        for (int a = 0; a <= max_degree; ++a)
            out[a] = checked_add(out[a], checked_mul(coker, multidegrees_with_support(popcount(b), a)));
    }
    return out;
}

std::vector<std::int64_t> pair_module_hilbert(int n, int d, const std::vector<Vector>& k_basis, int max_degree)
{
    if (n < 1 || d < 0 || d + 1 > n)
        throw InputError("pair_module_hilbert: need n >= 1 and 0 <= d < n");
    if (max_degree < 0)
        throw InputError("max_degree must be nonnegative");
    const auto top = subsets_of_size(n, d + 1);
    const auto next = subsets_of_size(n, d + 2);
    for (const auto& v : k_basis)
        if (v.size() != top.size())
            throw InputError("pair_module_hilbert: K vector length " + std::to_string(v.size()) + " differs from C(n, d+1) = " +
                             std::to_string(top.size()));

    std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int a = d + 1; a <= max_degree; ++a) {
        const auto row_monos = monomials_of_degree(n, a - d - 1);
        const auto col_monos = monomials_of_degree(n, a - d - 2);
        const std::size_t rows = top.size() * row_monos.size();
        if (rows > 200000)
            throw GuardError("pair_module_hilbert: degree " + std::to_string(a) + " is too large");
        std::map<Exponents, std::size_t> mono_index;
        for (std::size_t k = 0; k < row_monos.size(); ++k)
            mono_index[row_monos[k]] = k;
        auto row_of = [&](std::size_t lambda, const Exponents& mono) {
            return lambda * row_monos.size() + mono_index.at(mono);
        };

        const std::size_t koszul_cols = next.size() * col_monos.size();
        RationalMatrix m(rows, koszul_cols + k_basis.size() * row_monos.size());
        std::size_t col = 0;
        for (Mask rho : next) {
            for (const auto& nu : col_monos) {
                for (Mask rest = rho; rest; rest &= rest - 1) {
                    const int j = std::countr_zero(rest);
                    const Mask tau = rho & ~(Mask{1} << j);
                    const auto lambda = static_cast<std::size_t>(find_face(top, tau));
                    Exponents mu = nu;
                    ++mu[j];
                    m.set(row_of(lambda, mu), col, insertion_sign(tau, j));
                }
                ++col;
            }
        }
        for (const auto& kappa : k_basis) {
            for (const auto& mu : row_monos) {
                for (std::size_t lambda = 0; lambda < top.size(); ++lambda)
                    if (sgn(kappa[lambda]) != 0)
                        m.set(row_of(lambda, mu), col, kappa[lambda]);
                ++col;
            }
        }
        out[a] = static_cast<std::int64_t>(rows - rank(m));
    }
    return out;
}

std::vector<Vector> face_subspace(const SimplicialComplex& delta, int d)
{
    const auto top = subsets_of_size(delta.n(), d + 1);
    std::vector<Vector> out;
    for (std::size_t k = 0; k < top.size(); ++k) {
        if (!delta.contains(top[k]))
            continue;
        Vector v(top.size());
        v[k] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

bool top_strand_has_no_boundaries(const SimplicialComplex& delta, int d)
{
    const std::size_t count = std::size_t{1} << delta.n();
    for (std::size_t b = 0; b < count; ++b)
        if (!koszul_strand(delta, d + 1, indicator(delta.n(), b)).d_in.is_zero())
            return false;
    return true;
}

} // namespace skm
