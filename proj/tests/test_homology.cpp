#include <doctest.h>

#include <numeric>
#include <random>

#include "skm/homology.hpp"
#include "skm/verify.hpp"

using namespace skm;

namespace {

Mask S(int n, std::initializer_list<int> v) { return from_vertices(n, std::vector<int>(v)); }

SimplicialComplex relabel(const SimplicialComplex& d, const std::vector<int>& perm)
{
    std::vector<Mask> facets;
    for (Mask f : d.facets()) {
        Mask g = 0;
        for (Mask rest = f; rest; rest &= rest - 1)
            g |= Mask{1} << perm[std::countr_zero(rest)];
        facets.push_back(g);
    }
    return SimplicialComplex::from_masks(d.n(), facets);
}

} // namespace

TEST_SUITE("homology")
{
    TEST_CASE("small examples")
    {
        const auto points = reduced_homology(SimplicialComplex::from_facets(2, {{1}, {2}}));
        CHECK(points(0) == 1);
        CHECK(points(-1) == 0);
        const auto tri = reduced_homology(SimplicialComplex::cycle(3));
        CHECK(tri(1) == 1);
        CHECK(tri(0) == 0);
        const auto irr = reduced_homology(SimplicialComplex::irrelevant(3));
        CHECK(irr(-1) == 1);
        CHECK(irr.dims == std::vector<std::size_t>{1});
        CHECK(reduced_homology(SimplicialComplex::void_complex(3)).is_zero());
        CHECK(reduced_homology(SimplicialComplex::simplex(5)).is_zero());
        for (int n = 2; n <= 7; ++n) {
            const auto sphere = reduced_homology(SimplicialComplex::simplex_boundary(n));
            CHECK(sphere(n - 2) == 1);
            CHECK(std::accumulate(sphere.dims.begin(), sphere.dims.end(), std::size_t{0}) == 1);
        }
    }

    TEST_CASE("boundary sign convention")
    {
        // ∂(v1 ∧ v2 ∧ v3) = v23 - v13 + v12
        const auto m = boundary_matrix(SimplicialComplex::simplex(3), 3);
        REQUIRE(m.rows() == 3);
        CHECK(m.at(0, 0) == 1);  // {1,2}
        CHECK(m.at(1, 0) == -1); // {1,3}
        CHECK(m.at(2, 0) == 1);  // {2,3}
    }

    TEST_CASE("Euler characteristic")
    {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 300; ++trial) {
            const auto d = random_complex(rng, 1 + trial % 8);
            const auto h = reduced_homology(d);
            long lhs = 0, rhs = 0;
            for (int i = -1; i <= h.top_degree(); ++i)
                lhs += (i % 2 == 0 ? 1 : -1) * static_cast<long>(h(i));
            const auto f = d.f_vector();
            for (std::size_t k = 0; k < f.size(); ++k) {
                const int i = static_cast<int>(k) - 1;
                rhs += (i % 2 == 0 ? 1 : -1) * static_cast<long>(f[k]);
            }
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("homology equals cohomology for n up to 8")
    {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 200; ++trial) {
            const auto d = random_complex(rng, 1 + trial % 8);
            CHECK(reduced_homology(d) == reduced_cohomology(d));
        }
    }

    TEST_CASE("vertex relabelling leaves homology unchanged")
    {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + trial % 7;
            const auto d = random_complex(rng, n);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(reduced_homology(relabel(d, perm)) == reduced_homology(d));
        }
    }

    TEST_CASE("subset table matches restriction by restriction")
    {
        std::mt19937_64 rng(24);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 1 + trial % 6;
            const auto d = random_complex(rng, n);
            const auto table = subset_homology_table(d);
            for (Mask b = 0; b < (Mask{1} << n); ++b)
                CHECK((*table)[b] == reduced_homology(restriction(d, b)));
            for (int jobs : {1, 3}) {
                const auto again = all_subset_homology(d, 1, jobs);
                for (Mask b = 0; b < (Mask{1} << n); ++b)
                    CHECK(again[b] == (*table)[b](0));
            }
        }
    }

    TEST_CASE("C4 and path subsets")
    {
        const auto c4 = all_subset_homology(SimplicialComplex::cycle(4), 1);
        for (Mask b = 0; b < 16; ++b)
            CHECK(c4[b] == ((b == S(4, {1, 3}) || b == S(4, {2, 4})) ? 1u : 0u));
        const auto p = all_subset_homology(SimplicialComplex::path(4), 1);
        const std::vector<Mask> nz{S(4, {1, 3}), S(4, {1, 4}), S(4, {2, 4}), S(4, {1, 2, 4}), S(4, {1, 3, 4})};
        for (Mask b = 0; b < 16; ++b)
            CHECK(p[b] == (std::find(nz.begin(), nz.end(), b) != nz.end() ? 1u : 0u));
        const auto s = all_subset_homology(SimplicialComplex::simplex(4), 2);
        CHECK(std::all_of(s.begin(), s.end(), [](std::size_t x) { return x == 0; }));
    }

    TEST_CASE("subset guard")
    {
        const auto big = SimplicialComplex::from_facets(21, {{1, 2}});
        CHECK_THROWS_AS(all_subset_homology(big, 1), GuardError);
        CHECK_THROWS_AS(all_subset_homology(SimplicialComplex::path(6), 1, 0, 5), GuardError);
    }
}
