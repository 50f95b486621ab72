#include <doctest.h>

#include <random>

#include "skm/exactlin.hpp"

using namespace skm;

namespace {

// Plain dense elimination over Q, first nonzero pivot; kept deliberately simple.
std::size_t naive_rank(std::vector<std::vector<Rational>> a)
{
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, int range)
{
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> v(-range, range), d(1, 3);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (u(rng) < density) {
                Rational q(v(rng), d(rng));
                q.canonicalize();
                m.set(i, j, q);
            }
    return m;
}

std::vector<std::vector<Rational>> dense(const RationalMatrix& m)
{
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            out[i][j] = v;
    return out;
}

/// Low-rank matrix built as a product, so ranks below min(rows, cols) show up.
RationalMatrix low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner)
{
    return random_matrix(rng, rows, inner, 0.6, 3) * random_matrix(rng, inner, cols, 0.6, 3);
}

} // namespace

TEST_SUITE("exactlin")
{
    TEST_CASE("rank of small fixed matrices")
    {
        CHECK(rank(RationalMatrix(3, 4)) == 0);
        CHECK(rank(RationalMatrix::identity(5)) == 5);
        const auto m = RationalMatrix::from_dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
        CHECK(rank(m) == 2);
        CHECK(rank_gauss(m) == 2);
        CHECK(rank_bareiss(m) == 2);
        CHECK(rank(RationalMatrix(0, 7)) == 0);
        CHECK(rank(RationalMatrix(7, 0)) == 0);
    }

    TEST_CASE("three rank algorithms agree with a naive oracle and with the transpose")
    {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> dim(0, 40);
        std::uniform_real_distribution<double> dens(0.05, 0.9);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t rows = dim(rng), cols = dim(rng);
            RationalMatrix m;
            if (trial % 3 == 0 && rows > 0 && cols > 0)
                m = low_rank(rng, rows, cols, std::uniform_int_distribution<std::size_t>(1, 6)(rng));
            else
                m = random_matrix(rng, rows, cols, dens(rng), trial % 2 ? 2 : 1000);
            const std::size_t expected = naive_rank(dense(m));
            REQUIRE(rank(m) == expected);
            REQUIRE(rank_gauss(m) == expected);
            REQUIRE(rank_bareiss(m) == expected);
            REQUIRE(rank(m.transpose()) == expected);
        }
    }

    TEST_CASE("large entries take the multiprecision path")
    {
        std::mt19937_64 rng(11);
        RationalMatrix m(12, 12);
        std::uniform_int_distribution<long> big(-2000000000L, 2000000000L);
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 12; ++j)
                m.set(i, j, Rational(big(rng)));
        // duplicate a combination to force a dependency
        for (std::size_t j = 0; j < 12; ++j)
            m.set(11, j, m.at(0, j) * 3 - m.at(1, j) * 7);
        CHECK(rank(m) == naive_rank(dense(m)));
        CHECK(rank(m) == 11);
    }

    TEST_CASE("kernel dimension plus rank equals column count")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t rows = 1 + trial % 15, cols = 1 + (trial * 7) % 17;
            const RationalMatrix m = trial % 2 ? low_rank(rng, rows, cols, 3) : random_matrix(rng, rows, cols, 0.3, 4);
            const auto ker = kernel_basis(m);
            CHECK(ker.size() + rank(m) == cols);
            for (const auto& v : ker) {
                for (const auto& x : m.apply(v))
                    CHECK(x == 0);
            }
            CHECK(image_basis(m).size() == rank(m));
        }
    }

    TEST_CASE("reduced echelon form is idempotent and preserves rank")
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = random_matrix(rng, 8, 9, 0.4, 5);
            const auto e = row_reduce(m);
            CHECK(e.pivot_columns.size() == rank(m));
            CHECK(row_reduce(e.reduced).reduced == e.reduced);
        }
    }

    TEST_CASE("homology of a composable pair")
    {
        // C_2 -> C_1 -> C_0 for a filled triangle's boundary: ∂2 = 0 here, H = ker ∂1.
        const auto d1 = RationalMatrix::from_dense({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
        const RationalMatrix d2(3, 0);
        CHECK(homology_dimension(d2, d1) == 1);
        const auto h = homology(d2, d1);
        REQUIRE(h.dimension == 1);
        const auto& z = h.basis.representatives()[0];
        for (const auto& x : d1.apply(z))
            CHECK(x == 0);
        // filling the triangle kills the cycle
        const auto filled = RationalMatrix::from_dense({{1}, {-1}, {1}});
        CHECK(homology_dimension(filled, d1) == 0);
    }

    TEST_CASE("non-composable maps are rejected with the offending column")
    {
        const auto d_in = RationalMatrix::from_dense({{1, 0}, {0, 1}});
        const auto d_out = RationalMatrix::from_dense({{0, 1}});
        CHECK(first_noncomposable_column(d_in, d_out) == std::optional<std::size_t>(1));
        try {
            homology_dimension(d_in, d_out);
            FAIL("expected CompositionError");
        } catch (const CompositionError& e) {
            CHECK(e.column() == 1);
        }
    }

    TEST_CASE("quotient coordinates reconstruct vectors modulo generators")
    {
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<int> v(-3, 3);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 6;
            std::vector<Vector> gens(2, Vector(n)), cands(3, Vector(n));
            for (auto* list : {&gens, &cands})
                for (auto& x : *list)
                    for (auto& e : x)
                        e = v(rng);
            const QuotientBasis q(n, gens, cands);
            // z = 2·c0 - c2 + 5·g1
            Vector z(n);
            for (std::size_t k = 0; k < n; ++k)
                z[k] = 2 * cands[0][k] - cands[2][k] + 5 * gens[1][k];
            const auto coords = q.coordinates(z);
            REQUIRE(coords.has_value());
            Vector back(n);
            for (std::size_t r = 0; r < coords->size(); ++r)
                for (std::size_t k = 0; k < n; ++k)
                    back[k] += (*coords)[r] * q.representatives()[r][k];
            // back - z must lie in span(gens)
            std::vector<std::vector<Rational>> span_rows(gens.begin(), gens.end());
            const std::size_t base = naive_rank(span_rows);
            Vector diff(n);
            for (std::size_t k = 0; k < n; ++k)
                diff[k] = back[k] - z[k];
            span_rows.push_back(diff);
            CHECK(naive_rank(span_rows) == base);
        }
    }

    TEST_CASE("vectors outside the span have no coordinates")
    {
        const QuotientBasis q(3, {Vector{1, 0, 0}}, {Vector{0, 1, 0}});
        CHECK(q.dimension() == 1);
        CHECK(!q.coordinates(Vector{0, 0, 1}).has_value());
        const auto c = q.coordinates(Vector{7, 2, 0});
        REQUIRE(c.has_value());
        CHECK((*c)[0] == 2);
    }

    TEST_CASE("matrix products and permutations")
    {
        const auto a = RationalMatrix::from_dense({{1, 2}, {3, 4}});
        const auto b = RationalMatrix::from_dense({{0, 1}, {1, 0}});
        CHECK(a * b == RationalMatrix::from_dense({{2, 1}, {4, 3}}));
        CHECK(a.permuted({1, 0}, {0, 1}) == RationalMatrix::from_dense({{3, 4}, {1, 2}}));
        CHECK(a.transpose().transpose() == a);
    }
}
