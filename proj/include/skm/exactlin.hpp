#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "skm/common.hpp"

namespace skm {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Sparse matrix over Q, stored by rows with strictly increasing column
/// indices and no explicit zeros.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t size);
    static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;

    Rational at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& value);
    void add(std::size_t r, std::size_t c, const Rational& value);

    const SparseRow& row(std::size_t r) const { return data_[r]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    Vector apply(const Vector& x) const;
    bool is_zero() const;

    /// Copy with rows and columns permuted: result(i, j) = this(row_perm[i], col_perm[j]).
    RationalMatrix permuted(const std::vector<std::size_t>& row_perm,
                            const std::vector<std::size_t>& col_perm) const;

    bool operator==(const RationalMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseRow> data_;
};

/// Rank over Q. Uses fraction-free sparse row reduction in 64-bit integers
/// and redoes the reduction with GMP integers if anything overflows.
std::size_t rank(const RationalMatrix& m);

/// Rank over Q by pivoted rational Gaussian elimination (pivot: among rows
/// with a nonzero in the current column, fewest nonzeros, then lowest index).
std::size_t rank_gauss(const RationalMatrix& m);

/// Rank over Q by dense fraction-free (Bareiss) elimination.
std::size_t rank_bareiss(const RationalMatrix& m);

/// Reduced row echelon form with the deterministic pivot rule of rank_gauss.
/// Returns the pivot column of each nonzero row.
struct EchelonForm {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};
EchelonForm row_reduce(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column (that entry is 1).
std::vector<Vector> kernel_basis(const RationalMatrix& m);

/// Columns of m that form a basis of its column space, as dense vectors.
std::vector<Vector> image_basis(const RationalMatrix& m);

/// Quotient of span(generators ∪ candidates) by span(generators), with a
/// basis of representatives drawn from the candidates, and the ability to
/// express any vector of the span in that basis modulo the generators.
class QuotientBasis {
public:
    QuotientBasis() = default;
    QuotientBasis(std::size_t ambient_dim, const std::vector<Vector>& generators,
                  const std::vector<Vector>& candidates);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dimension() const { return representatives_.size(); }
    const std::vector<Vector>& representatives() const { return representatives_; }

    /// Coordinates of z in the representative basis modulo the generators;
    /// nullopt if z is outside span(generators ∪ representatives).
    std::optional<Vector> coordinates(const Vector& z) const;

private:
    struct PivotRow {
        SparseRow values; // leading entry normalized to 1
        SparseRow tag;    // values ≡ Σ tag_k · rep_k  (mod generators)
    };

    // Reduces v in place; accumulates Σ c · tag into tag.
    void reduce(SparseRow& v, SparseRow& tag) const;

    std::size_t ambient_ = 0;
    std::map<std::size_t, PivotRow> pivots_;
    std::vector<Vector> representatives_;
};

/// First column j of d_in such that d_out * d_in[:, j] ≠ 0, if any.
std::optional<std::size_t> first_noncomposable_column(const RationalMatrix& d_in,
                                                     const RationalMatrix& d_out);

/// Thrown when a pair of maps handed to homology() does not compose to zero.
class CompositionError : public OracleError {
public:
    CompositionError(std::size_t column, const std::string& what)
        : OracleError(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

struct HomologyResult {
    std::size_t dimension = 0;
    QuotientBasis basis; // representatives are cycles of d_out modulo im d_in
};

/// Homology of C' --d_in--> C --d_out--> C'' at C, with representatives.
/// Throws CompositionError when d_out ∘ d_in ≠ 0.
HomologyResult homology(const RationalMatrix& d_in, const RationalMatrix& d_out);

/// dim ker(d_out) - rank(d_in), after checking d_out ∘ d_in = 0.
std::size_t homology_dimension(const RationalMatrix& d_in, const RationalMatrix& d_out);

SparseRow to_sparse(const Vector& v);
Vector to_dense(const SparseRow& v, std::size_t size);

} // namespace skm
