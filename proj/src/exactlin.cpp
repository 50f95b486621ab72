#include "skm/exactlin.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace skm {

namespace {

void axpy(SparseRow& target, const Rational& coeff, const SparseRow& source)
{
    // target <- target - coeff * source
    SparseRow out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            out.push_back(std::move(target[i++]));
        } else if (i == target.size() || source[j].first < target[i].first) {
            out.emplace_back(source[j].first, -coeff * source[j].second);
            ++j;
        } else {
            Rational v = target[i].second - coeff * source[j].second;
            if (sgn(v) != 0)
                out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

const Rational* find_entry(const SparseRow& row, std::size_t col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == row.end() || it->first != col)
        return nullptr;
    return &it->second;
}

// ---- integer fraction-free reduction --------------------------------------

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

inline std::int64_t abs_gcd(std::int64_t a, std::int64_t b)
{
    if (a == std::numeric_limits<std::int64_t>::min() || b == std::numeric_limits<std::int64_t>::min())
        throw Overflow{};
    return std::gcd(a, b);
}

inline mpz_class checked_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class checked_sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class abs_gcd(const mpz_class& a, const mpz_class& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }

template <class Int>
using IntRow = std::vector<std::pair<std::size_t, Int>>;

template <class Int>
void make_primitive(IntRow<Int>& row)
{
    if (row.empty())
        return;
    Int g = 0;
    for (const auto& e : row) {
        g = abs_gcd(g, e.second);
        if (g == 1)
            return;
    }
    for (auto& e : row)
        e.second /= g;
}

template <class Int>
std::size_t integer_rank(std::vector<IntRow<Int>> rows, std::size_t cols)
{
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });

    std::vector<long> pivot_of(cols, -1);
    std::vector<IntRow<Int>> store;
    for (std::size_t idx : order) {
        IntRow<Int> r = std::move(rows[idx]);
        make_primitive(r);
        while (!r.empty()) {
            const std::size_t c = r.front().first;
            if (pivot_of[c] < 0) {
                pivot_of[c] = static_cast<long>(store.size());
                store.push_back(std::move(r));
                break;
            }
            const IntRow<Int>& p = store[static_cast<std::size_t>(pivot_of[c])];
            Int g = abs_gcd(p.front().second, r.front().second);
            Int ca = p.front().second / g;
            Int cb = r.front().second / g;
            IntRow<Int> out;
            out.reserve(r.size() + p.size());
            std::size_t i = 1, j = 1; // leading entries cancel
            while (i < r.size() || j < p.size()) {
                if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                    out.emplace_back(r[i].first, checked_mul(ca, r[i].second));
                    ++i;
                } else if (i == r.size() || p[j].first < r[i].first) {
                    out.emplace_back(p[j].first, checked_sub(Int(0), checked_mul(cb, p[j].second)));
                    ++j;
                } else {
                    Int v = checked_sub(checked_mul(ca, r[i].second), checked_mul(cb, p[j].second));
                    if (!is_zero(v))
                        out.emplace_back(r[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            r = std::move(out);
            make_primitive(r);
        }
    }
    return store.size();
}

std::vector<IntRow<mpz_class>> integer_rows(const RationalMatrix& m)
{
    std::vector<IntRow<mpz_class>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (const auto& e : m.row(r))
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
        for (const auto& e : m.row(r)) {
            mpz_class v = e.second.get_num() * (l / e.second.get_den());
            rows[r].emplace_back(e.first, std::move(v));
        }
    }
    return rows;
}

} // namespace

// ---- RationalMatrix ---------------------------------------------------------

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::identity(std::size_t size)
{
    RationalMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        m.data_[i].emplace_back(i, Rational(1));
    return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InputError("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(rows[r][c]) != 0)
                m.data_[r].emplace_back(c, rows[r][c]);
    }
    return m;
}

std::size_t RationalMatrix::nnz() const
{
    std::size_t total = 0;
    for (const auto& r : data_)
        total += r.size();
    return total;
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const
{
    const Rational* v = find_entry(data_.at(r), c);
    return v ? *v : Rational(0);
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value)
{
    if (r >= rows_ || c >= cols_)
        throw InputError("matrix index out of range");
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (sgn(value) == 0)
            row.erase(it);
        else
            it->second = value;
    } else if (sgn(value) != 0) {
        row.insert(it, {c, value});
    }
}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& value)
{
    set(r, c, at(r, c) + value);
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            t.data_[c].emplace_back(r, v);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw InputError("matrix product: inner dimensions differ");
    RationalMatrix out(rows_, rhs.cols_);
    std::map<std::size_t, Rational> acc;
    for (std::size_t r = 0; r < rows_; ++r) {
        acc.clear();
        for (const auto& [k, a] : data_[r])
            for (const auto& [c, b] : rhs.data_[k])
                acc[c] += a * b;
        for (auto& [c, v] : acc)
            if (sgn(v) != 0)
                out.data_[r].emplace_back(c, v);
    }
    return out;
}

Vector RationalMatrix::apply(const Vector& x) const
{
    if (x.size() != cols_)
        throw InputError("matrix-vector product: size mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            y[r] += v * x[c];
    return y;
}

bool RationalMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

RationalMatrix RationalMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                        const std::vector<std::size_t>& col_perm) const
{
    if (row_perm.size() != rows_ || col_perm.size() != cols_)
        throw InputError("permutation size mismatch");
    std::vector<std::size_t> col_inv(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        col_inv[col_perm[j]] = j;
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [c, v] : data_[row_perm[i]])
            out.data_[i].emplace_back(col_inv[c], v);
        std::sort(out.data_[i].begin(), out.data_[i].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

// ---- rank -------------------------------------------------------------------

std::size_t rank(const RationalMatrix& m)
{
    auto big = integer_rows(m);
    bool fits = true;
    std::vector<IntRow<std::int64_t>> small(big.size());
    for (std::size_t r = 0; r < big.size() && fits; ++r) {
        small[r].reserve(big[r].size());
        for (const auto& [c, v] : big[r]) {
            if (!v.fits_slong_p()) {
                fits = false;
                break;
            }
            small[r].emplace_back(c, v.get_si());
        }
    }
    if (fits) {
        try {
            return integer_rank(std::move(small), m.cols());
        } catch (const Overflow&) {
        }
    }
    return integer_rank(std::move(big), m.cols());
}

EchelonForm row_reduce(const RationalMatrix& m)
{
    std::vector<SparseRow> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows[r] = m.row(r);
    std::vector<char> is_pivot(rows.size(), 0);
    std::vector<std::size_t> pivot_rows, pivot_cols;

    while (true) {
        // Non-pivot rows are zero in every column left of the current one.
        std::size_t col = m.cols();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!is_pivot[r] && !rows[r].empty())
                col = std::min(col, rows[r].front().first);
        if (col == m.cols())
            break;
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (is_pivot[r] || rows[r].empty() || rows[r].front().first != col)
                continue;
            if (best == rows.size() || rows[r].size() < rows[best].size())
                best = r;
        }
        SparseRow& p = rows[best];
        const Rational inv = 1 / p.front().second;
        for (auto& e : p)
            e.second *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == best)
                continue;
            if (const Rational* v = find_entry(rows[r], col)) {
                const Rational coeff = *v;
                axpy(rows[r], coeff, p);
            }
        }
        is_pivot[best] = 1;
        pivot_rows.push_back(best);
        pivot_cols.push_back(col);
    }

    // Order the pivot rows by pivot column.
    std::vector<std::size_t> order(pivot_rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_cols[a] < pivot_cols[b]; });
    EchelonForm out{RationalMatrix(pivot_rows.size(), m.cols()), {}};
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (const auto& [c, v] : rows[pivot_rows[order[k]]])
            out.reduced.set(k, c, v);
        out.pivot_columns.push_back(pivot_cols[order[k]]);
    }
    return out;
}

std::size_t rank_gauss(const RationalMatrix& m) { return row_reduce(m).pivot_columns.size(); }

std::size_t rank_bareiss(const RationalMatrix& m)
{
    auto sparse = integer_rows(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (auto& [c, v] : sparse[r])
            a[r][c] = v;

    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && sgn(a[piv][c]) == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::vector<Vector> kernel_basis(const RationalMatrix& m)
{
    const EchelonForm ef = row_reduce(m);
    std::vector<char> is_pivot_col(m.cols(), 0);
    for (std::size_t c : ef.pivot_columns)
        is_pivot_col[c] = 1;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot_col[f])
            continue;
        Vector x(m.cols());
        x[f] = 1;
        for (std::size_t k = 0; k < ef.pivot_columns.size(); ++k)
            if (const Rational* v = find_entry(ef.reduced.row(k), f))
                x[ef.pivot_columns[k]] = -*v;
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Vector> image_basis(const RationalMatrix& m)
{
    const EchelonForm ef = row_reduce(m);
    const RationalMatrix t = m.transpose();
    std::vector<Vector> basis;
    for (std::size_t c : ef.pivot_columns)
        basis.push_back(to_dense(t.row(c), m.rows()));
    return basis;
}

SparseRow to_sparse(const Vector& v)
{
    SparseRow out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            out.emplace_back(i, v[i]);
    return out;
}

Vector to_dense(const SparseRow& v, std::size_t size)
{
    Vector out(size);
    for (const auto& [i, x] : v)
        out.at(i) = x;
    return out;
}

// ---- QuotientBasis ----------------------------------------------------------

QuotientBasis::QuotientBasis(std::size_t ambient_dim, const std::vector<Vector>& generators,
                             const std::vector<Vector>& candidates)
    : ambient_(ambient_dim)
{
    auto insert = [&](SparseRow v, SparseRow tag) -> bool {
        reduce(v, tag);
        if (v.empty())
            return false;
        const Rational inv = 1 / v.front().second;
        for (auto& e : v)
            e.second *= inv;
        for (auto& e : tag)
            e.second *= inv;
        const std::size_t lead = v.front().first;
        pivots_.emplace(lead, PivotRow{std::move(v), std::move(tag)});
        return true;
    };
    for (const auto& g : generators) {
        if (g.size() != ambient_)
            throw InputError("QuotientBasis: generator has wrong length");
        insert(to_sparse(g), {});
    }
    for (const auto& c : candidates) {
        if (c.size() != ambient_)
            throw InputError("QuotientBasis: candidate has wrong length");
        const std::size_t k = representatives_.size();
        if (insert(to_sparse(c), SparseRow{{k, Rational(1)}}))
            representatives_.push_back(c);
    }
}

void QuotientBasis::reduce(SparseRow& v, SparseRow& tag) const
{
    // Each step subtracts the same multiple of a pivot row from v and of its
    // tag from tag, so "v ≡ Σ tag_k · rep_k" is preserved.
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = pivots_.find(v[pos].first);
        if (it == pivots_.end()) {
            ++pos;
            continue;
        }
        const Rational coeff = v[pos].second;
        axpy(v, coeff, it->second.values);
        axpy(tag, coeff, it->second.tag);
    }
}

std::optional<Vector> QuotientBasis::coordinates(const Vector& z) const
{
    if (z.size() != ambient_)
        throw InputError("QuotientBasis: vector has wrong length");
    SparseRow v = to_sparse(z);
    SparseRow tag;
    reduce(v, tag);
    if (!v.empty())
        return std::nullopt;
    // Starting from tag = 0: z = Σ c_r · row_r ≡ Σ c_r · tag_r = -tag.
    Vector out(representatives_.size());
    for (const auto& [k, x] : tag)
        out.at(k) = -x;
    return out;
}

// ---- homology ---------------------------------------------------------------

std::optional<std::size_t> first_noncomposable_column(const RationalMatrix& d_in,
                                                     const RationalMatrix& d_out)
{
    if (d_out.cols() != d_in.rows())
        throw InputError("homology: maps are not composable (size mismatch)");
    const RationalMatrix prod = d_out * d_in;
    std::optional<std::size_t> first;
    for (std::size_t r = 0; r < prod.rows(); ++r)
        if (!prod.row(r).empty()) {
            const std::size_t c = prod.row(r).front().first;
            if (!first || c < *first)
                first = c;
        }
    return first;
}

namespace {

void require_composable(const RationalMatrix& d_in, const RationalMatrix& d_out)
{
    if (auto col = first_noncomposable_column(d_in, d_out))
        throw CompositionError(*col, "homology: d_out * d_in is nonzero at column " + std::to_string(*col));
}

} // namespace

HomologyResult homology(const RationalMatrix& d_in, const RationalMatrix& d_out)
{
    require_composable(d_in, d_out);
    const std::size_t dim = d_in.rows();
    std::vector<Vector> cycles;
    if (d_out.rows() == 0) {
        for (std::size_t j = 0; j < dim; ++j) {
            Vector e(dim);
            e[j] = 1;
            cycles.push_back(std::move(e));
        }
    } else {
        cycles = kernel_basis(d_out);
    }
    std::vector<Vector> boundaries;
    const RationalMatrix t = d_in.transpose();
    for (std::size_t c = 0; c < t.rows(); ++c)
        if (!t.row(c).empty())
            boundaries.push_back(to_dense(t.row(c), dim));
    HomologyResult out;
    out.basis = QuotientBasis(dim, boundaries, cycles);
    out.dimension = out.basis.dimension();
    return out;
}

std::size_t homology_dimension(const RationalMatrix& d_in, const RationalMatrix& d_out)
{
    require_composable(d_in, d_out);
    return d_out.cols() - rank(d_out) - rank(d_in);
}

} // namespace skm
