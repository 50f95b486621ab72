#include <doctest.h>

#include <random>

#include "skm/io.hpp"
#include "skm/verify.hpp"

using namespace skm;

namespace {

std::string data(const std::string& name) { return std::string(SKM_TEST_DATA) + "/" + name; }

} // namespace

TEST_SUITE("io")
{
    TEST_CASE("text format")
    {
        CHECK(load_complex(data("path4.txt")) == SimplicialComplex::path(4));
        CHECK(load_complex(data("c4.txt")) == SimplicialComplex::cycle(4));
        CHECK(load_complex(data("tetra_minus_face.txt")) == tetrahedron_minus_face());
        CHECK(parse_complex("  # comment\n\nn 3\n1 2\n# between\n3\n").n() == 3);
        CHECK(parse_complex("n 3\n\t1 2\n2 3\n") == SimplicialComplex::path(3));
    }

    TEST_CASE("void and irrelevant complexes")
    {
        const auto v = load_complex(data("void.txt"));
        CHECK(v.is_void());
        CHECK(v.n() == 3);
        const auto irr = load_complex(data("irrelevant.txt"));
        CHECK(irr.is_irrelevant());
        CHECK(!irr.is_void());
        CHECK(complex_to_text(irr) == "n 3\n-\n");
        CHECK(parse_complex(complex_to_text(irr)) == irr);
        CHECK(parse_complex(complex_to_text(v)) == v);
        CHECK(parse_complex(R"({"n": 2, "facets": [[]]})").is_irrelevant());
        CHECK(parse_complex(R"({"n": 2, "facets": []})").is_void());
    }

    TEST_CASE("json format")
    {
        const auto d = load_complex(data("two_edges.json"));
        CHECK(d == two_edges());
        CHECK(complex_to_json(d).dump() == R"({"facets":[[1,2],[3,4]],"n":4})");
    }

    TEST_CASE("round trips are byte identical")
    {
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 100; ++trial) {
            const auto d = random_complex(rng, 1 + trial % 7);
            const auto text = complex_to_text(d);
            CHECK(complex_to_text(parse_complex(text)) == text);
            const auto json = complex_to_json(d).dump();
            CHECK(complex_to_json(parse_complex(json)).dump() == json);
            CHECK(parse_complex(json) == d);
        }
    }

    TEST_CASE("malformed input")
    {
        CHECK_THROWS_AS(load_complex(data("bad_vertex.txt")), InputError);
        CHECK_THROWS_AS(load_complex(data("no_such_file.txt")), InputError);
        CHECK_THROWS_AS(parse_complex("1 2\n"), InputError);
        CHECK_THROWS_AS(parse_complex(""), InputError);
        CHECK_THROWS_AS(parse_complex("n 3\n1 x\n"), InputError);
        CHECK_THROWS_AS(parse_complex("n 3\n1 - 2\n"), InputError);
        CHECK_THROWS_AS(parse_complex("n 3 4\n"), InputError);
        CHECK_THROWS_AS(parse_complex("n 3\n0 1\n"), InputError);
        CHECK_THROWS_AS(parse_complex("{\"n\": 3}"), InputError);
        CHECK_THROWS_AS(parse_complex("{\"n\": 3, \"facets\": [[1, \"a\"]]}"), InputError);
        CHECK_THROWS_AS(parse_complex("{\"n\": 3, "), InputError);
    }

    TEST_CASE("result serialization")
    {
        const auto a = CoordinateSubspaceArrangement::from_supports(4, {0b1011, 0b1101});
        CHECK(to_json(a).dump() == R"({"components":[[1,2,4],[1,3,4]],"value":"arrangement"})");
        CHECK(to_json(CoordinateSubspaceArrangement::origin(3))["value"] == "origin");
        CHECK(to_json(CoordinateSubspaceArrangement::empty(3))["value"] == "empty");
        CHECK(to_json(SquareFreeMonomialIdeal::from_generators(4, {0b0110})).dump() == R"({"generators":[[2,3]]})");
        BettiTable zero;
        CHECK(to_json(zero)["reg"] == "-inf");
        CHECK(to_json(zero)["pdim"] == -1);
        const auto h = to_json(reduced_homology(SimplicialComplex::cycle(4)));
        CHECK(h["reduced_homology"].size() == 3);
        CHECK(h["reduced_homology"][2]["dim"] == 1);
    }
}
