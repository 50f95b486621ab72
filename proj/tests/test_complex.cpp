#include <doctest.h>

#include <random>

#include "skm/complex.hpp"
#include "skm/verify.hpp"

using namespace skm;

namespace {

Mask S(int n, std::initializer_list<int> v) { return from_vertices(n, std::vector<int>(v)); }

/// Downward closure computed by brute force over all subsets of [n].
std::vector<Mask> brute_faces(int n, const std::vector<Mask>& generators)
{
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        for (Mask g : generators)
            if (is_subset(s, g)) {
                out.push_back(s);
                break;
            }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

} // namespace

TEST_SUITE("complex")
{
    TEST_CASE("two disjoint edges")
    {
        const auto d = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
        CHECK(d.faces() == std::vector<Mask>{0, S(4, {1}), S(4, {2}), S(4, {3}), S(4, {4}), S(4, {1, 2}), S(4, {3, 4})});
        CHECK(d.dimension() == 1);
        CHECK(d.f_vector() == std::vector<std::size_t>{1, 4, 2});
    }

    TEST_CASE("void and irrelevant complexes differ")
    {
        const auto v = SimplicialComplex::from_facets(3, {});
        const auto e = SimplicialComplex::from_facets(3, {{}});
        CHECK(v.is_void());
        CHECK(!v.is_irrelevant());
        CHECK(e.is_irrelevant());
        CHECK(!(v == e));
        CHECK(v.face_count() == 0);
        CHECK(e.face_count() == 1);
        CHECK(v.dimension() == -2);
        CHECK(e.dimension() == -1);
    }

    TEST_CASE("duplicate and non-maximal facets are absorbed")
    {
        CHECK(SimplicialComplex::from_facets(4, {{1, 2}, {1, 2}}) == SimplicialComplex::from_facets(4, {{1, 2}}));
        CHECK(SimplicialComplex::from_facets(4, {{1}, {1, 2, 3}, {2, 1}}) == SimplicialComplex::from_facets(4, {{1, 2, 3}}));
    }

    TEST_CASE("bad input is rejected")
    {
        CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1, 4}}), InputError);
        CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{0}}), InputError);
        CHECK_THROWS_AS(SimplicialComplex::from_facets(0, {}), InputError);
        CHECK_THROWS_AS(SquareFreeDegree(3, S(4, {4})), InputError);
    }

    TEST_CASE("faces match a brute-force downward closure")
    {
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + trial % 7;
            const auto d = random_complex(rng, n);
            const auto faces = d.faces();
            CHECK(faces == brute_faces(n, d.facets()));
            CHECK(is_downward_closed(d));
            for (Mask s = 0; s < (Mask{1} << n); ++s) {
                const bool in = std::binary_search(faces.begin(), faces.end(), s, size_lex_less);
                CHECK(d.contains(s) == in);
            }
        }
    }

    TEST_CASE("restriction examples")
    {
        const auto c4 = SimplicialComplex::cycle(4);
        CHECK(restriction(c4, S(4, {1, 3})) == SimplicialComplex::from_facets(4, {{1}, {3}}));
        CHECK(restriction(c4, full_mask(4)) == c4);
        CHECK(restriction(c4, SquareFreeDegree(4, S(4, {1, 3}))).ground() == S(4, {1, 3}));
        const auto t = tetrahedron_minus_face();
        CHECK(restriction(t, S(4, {1, 2, 3})) == SimplicialComplex::from_facets(4, {{1, 2}, {1, 3}, {2, 3}}));
    }

    TEST_CASE("restriction composes by intersection")
    {
        std::mt19937_64 rng(2);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + trial % 6;
            const auto d = random_complex(rng, n);
            for (Mask a = 0; a < (Mask{1} << n); a += 3)
                for (Mask b = 0; b < (Mask{1} << n); b += 5) {
                    const auto twice = restriction(restriction(d, a), b);
                    CHECK(twice == restriction(d, a & b));
                    CHECK(is_downward_closed(twice));
                }
        }
    }

    TEST_CASE("links")
    {
        const auto te = two_edges();
        CHECK(link(te, S(4, {1, 2}), S(4, {3, 4})).is_irrelevant());
        CHECK(link(te, S(4, {1, 2}), S(4, {3})).is_irrelevant());
        CHECK(link(te, S(4, {1, 2}), 0) == restriction(te, S(4, {1, 2})));
        CHECK_THROWS_AS(link(te, S(4, {1, 2}), S(4, {1, 3})), InputError);
        // usual link of a vertex in the 4-cycle: its two neighbours
        CHECK(star_link(SimplicialComplex::cycle(4), S(4, {1})) == SimplicialComplex::from_facets(4, {{2}, {4}}));
        // a vertex not adjacent to anything left in V' gives {∅}; no τ at all gives the void complex
        const auto path = SimplicialComplex::path(3);
        CHECK(link(path, S(3, {3}), S(3, {1})).is_irrelevant());
    }

    TEST_CASE("skeleton-complete degree")
    {
        CHECK(skeleton_complete_degree(SimplicialComplex::path(4)) == 1);
        CHECK(skeleton_complete_degree(tetrahedron_minus_face()) == 2);
        CHECK(skeleton_complete_degree(two_edges()) == 1);
        // a graph missing a vertex does not have a full 0-skeleton
        CHECK(!skeleton_complete_degree(SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}})).has_value());
        CHECK(!skeleton_complete_degree(SimplicialComplex::irrelevant(3)).has_value());
        CHECK_THROWS_AS(skeleton_complete_degree(SimplicialComplex::void_complex(3)), InputError);
        CHECK(skeleton_complete_degree(SimplicialComplex::simplex(3)) == 2);
    }

    TEST_CASE("full (d-1)-skeleton means every small subset is a face")
    {
        std::mt19937_64 rng(4);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 2 + trial % 11;
            const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n - 1, 4)));
            const auto delta = random_skeleton_complete(rng, n, d);
            REQUIRE(skeleton_complete_degree(delta) == d);
            for (Mask s = 0; s < (Mask{1} << n); ++s)
                if (popcount(s) <= d)
                    CHECK(delta.contains(s));
        }
    }

    TEST_CASE("missing faces and flag completion")
    {
        const auto path = SimplicialComplex::path(4);
        CHECK(missing_faces(path, 1) == std::vector<Mask>{S(4, {1, 3}), S(4, {1, 4}), S(4, {2, 4})});
        CHECK(flag_completion(path) == path);
        CHECK(missing_faces(SimplicialComplex::simplex(4), 2).empty());
        CHECK(flag_completion(SimplicialComplex::complete_graph(4)) == SimplicialComplex::simplex(4));
        CHECK_THROWS_AS(flag_completion(SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}})), InputError);
    }

    TEST_CASE("flag completion keeps the d-skeleton and fills every spanned set")
    {
        std::mt19937_64 rng(6);
        for (int trial = 0; trial < 80; ++trial) {
            const int n = 3 + trial % 5;
            const int d = 1 + trial % 2;
            if (d >= n)
                continue;
            const auto delta = random_skeleton_complete(rng, n, d);
            const auto full = flag_completion(delta);
            CHECK(is_downward_closed(full));
            for (Mask s : subsets_of_size(n, d + 1))
                CHECK(full.contains(s) == delta.contains(s));
            for (Mask s = 0; s < (Mask{1} << n); ++s) {
                if (popcount(s) <= d + 1)
                    continue;
                bool all_in = true;
                for (Mask t : subsets_of_size(n, d + 1))
                    if (is_subset(t, s) && !delta.contains(t))
                        all_in = false;
                CHECK(full.contains(s) == all_in);
            }
        }
    }

    TEST_CASE("lexicographic helpers")
    {
        CHECK(subsets_of_size(4, 2) ==
              std::vector<Mask>{S(4, {1, 2}), S(4, {1, 3}), S(4, {1, 4}), S(4, {2, 3}), S(4, {2, 4}), S(4, {3, 4})});
        CHECK(lex_less(S(4, {1, 4}), S(4, {2, 3})));
        CHECK(insertion_sign(S(4, {1, 3}), 1) == -1); // e_2 ∧ e_1 ∧ e_3 = -e_123
        CHECK(binomial(10, 3) == 120);
        CHECK_THROWS_AS(binomial(200, 100), GuardError);
    }
}
