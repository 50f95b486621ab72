#include "skm/homology.hpp"

#include <map>
#include <mutex>

#include "skm/parallel.hpp"

namespace skm {

bool ReducedHomologyProfile::is_zero() const
{
    for (std::size_t d : dims)
        if (d != 0)
            return false;
    return true;
}

RationalMatrix boundary_matrix(const SimplicialComplex& delta, int size)
{
    const auto& cols = delta.faces_of_size(size);
    const auto& rows = delta.faces_of_size(size - 1);
    RationalMatrix m(rows.size(), cols.size());
    if (size <= 0)
        return m;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Mask sigma = cols[c];
        for (Mask rest = sigma; rest; rest &= rest - 1) {
            const int bit = std::countr_zero(rest);
            const Mask face = sigma & ~(Mask{1} << bit);
            m.set(static_cast<std::size_t>(delta.index_of(face)), c, insertion_sign(face, bit));
        }
    }
    return m;
}

ReducedHomologyProfile reduced_homology(const SimplicialComplex& delta)
{
    ReducedHomologyProfile p;
    if (delta.is_void())
        return p;
    const int top = delta.dimension() + 1; // largest face size
    // ranks[s] = rank of ∂ from size s to size s-1; ∂ out of size 0 is zero.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int s = 1; s <= top; ++s)
        ranks[s] = rank(boundary_matrix(delta, s));
    for (int s = 0; s <= top; ++s)
        p.dims.push_back(delta.faces_of_size(s).size() - ranks[s] - ranks[s + 1]);
    return p;
}

ReducedHomologyProfile reduced_cohomology(const SimplicialComplex& delta)
{
    ReducedHomologyProfile p;
    if (delta.is_void())
        return p;
    const int top = delta.dimension() + 1;
    // corank[s] = rank of δ from size s-1 to size s (transpose of ∂).
    std::vector<std::size_t> coranks(static_cast<std::size_t>(top) + 2, 0);
    for (int s = 1; s <= top; ++s)
        coranks[s] = rank_gauss(boundary_matrix(delta, s).transpose());
    for (int s = 0; s <= top; ++s)
        p.dims.push_back(delta.faces_of_size(s).size() - coranks[s + 1] - coranks[s]);
    return p;
}

std::shared_ptr<const SubsetHomologyTable> subset_homology_table(const SimplicialComplex& delta, int jobs,
                                                                 int guard)
{
    if (delta.n() > guard)
        throw GuardError("all-subset homology: n = " + std::to_string(delta.n()) + " exceeds guard " +
                         std::to_string(guard));

    using Key = std::pair<int, std::vector<Mask>>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const SubsetHomologyTable>> cache;
    Key key{delta.n(), delta.facets()};
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }

    const std::size_t count = std::size_t{1} << delta.n();
    auto table = std::make_shared<SubsetHomologyTable>(count);
    parallel_for(count, jobs > 0 ? jobs : default_jobs(),
                 [&](std::size_t mask) { (*table)[mask] = reduced_homology(restriction(delta, Mask{mask})); });

    std::lock_guard<std::mutex> lock(mutex);
    if (cache.size() >= 64)
        cache.clear();
    cache.emplace(std::move(key), table);
    return table;
}

std::vector<std::size_t> all_subset_homology(const SimplicialComplex& delta, int i, int jobs, int guard)
{
    const auto table = subset_homology_table(delta, jobs, guard);
    std::vector<std::size_t> out(table->size());
    for (std::size_t mask = 0; mask < table->size(); ++mask)
        out[mask] = (*table)[mask](i - 1);
    return out;
}

} // namespace skm
