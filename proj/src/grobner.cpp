#include "skm/grobner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skm {

namespace {

int degree_of(const Exponents& e, std::size_t from, std::size_t to)
{
    int d = 0;
    for (std::size_t k = from; k < to; ++k)
        d += e[k];
    return d;
}

/// grevlex "a < b" on the coordinates [from, to).
bool grevlex_less(const Exponents& a, const Exponents& b, std::size_t from, std::size_t to)
{
    const int da = degree_of(a, from, to), db = degree_of(b, from, to);
    if (da != db)
        return da < db;
    for (std::size_t k = to; k-- > from;) {
        if (a[k] != b[k])
            return a[k] > b[k];
    }
    return false;
}

bool divides(const Exponents& a, const Exponents& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b)
{
    Exponents out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = std::max(a[k], b[k]);
    return out;
}

Exponents minus(const Exponents& a, const Exponents& b)
{
    Exponents out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = a[k] - b[k];
    return out;
}

bool coprime(const Exponents& a, const Exponents& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0)
            return false;
    return true;
}

Polynomial times_term(const Polynomial& p, const Exponents& shift, const Rational& c)
{
    Polynomial out(p.n());
    for (const auto& [e, v] : p.terms()) {
        Exponents moved = e;
        for (std::size_t k = 0; k < moved.size(); ++k)
            moved[k] += shift[k];
        out.add_term(moved, v * c);
    }
    return out;
}

} // namespace

// ---- orders -----------------------------------------------------------------

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const
{
    switch (kind_) {
    case Kind::Lex:
        return a < b; // x_1 > x_2 > ... compares like the exponent vectors
    case Kind::Grevlex:
        return grevlex_less(a, b, 0, a.size());
    case Kind::Block: {
        const auto k = static_cast<std::size_t>(std::min<int>(eliminated_, static_cast<int>(a.size())));
        if (grevlex_less(a, b, 0, k))
            return true;
        if (grevlex_less(b, a, 0, k))
            return false;
        return grevlex_less(a, b, k, a.size());
    }
    }
    return false;
}

// ---- polynomials ------------------------------------------------------------

Polynomial Polynomial::constant(int n, const Rational& c)
{
    Polynomial p(n);
    p.add_term(Exponents(static_cast<std::size_t>(n), 0), c);
    return p;
}

Polynomial Polynomial::variable(int n, int j)
{
    if (j < 0 || j >= n)
        throw InputError("variable index out of range");
    Exponents e(static_cast<std::size_t>(n), 0);
    e[j] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c)
{
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != n_)
        throw InputError("polynomial term has the wrong number of variables");
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    if (n_ != o.n_)
        throw InputError("polynomials live in different rings");
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (n_ != o.n_)
        throw InputError("polynomials live in different rings");
    Polynomial out(n_);
    for (const auto& [e, c] : terms_)
        out = out + times_term(o, e, c);
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const
{
    Polynomial out(n_);
    if (sgn(c) == 0)
        return out;
    for (const auto& [e, v] : terms_)
        out.terms_.emplace(e, v * c);
    return out;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw InputError("negative power");
    Polynomial out = constant(n_, 1);
    for (int k = 0; k < e; ++k)
        out = out * *this;
    return out;
}

std::pair<Exponents, Rational> Polynomial::leading_term(const MonomialOrder& order) const
{
    if (terms_.empty())
        throw InputError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.less(best->first, it->first))
            best = it;
    return *best;
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, degree_of(e, 0, e.size()));
    return d;
}

Polynomial Polynomial::primitive(const MonomialOrder& order) const
{
    if (is_zero())
        return *this;
    mpz_class den = 1, num = 0;
    for (const auto& [e, c] : terms_)
        den = lcm(den, mpz_class(c.get_den()));
    for (const auto& [e, c] : terms_)
        num = gcd(num, mpz_class(c.get_num() * (den / c.get_den())));
    Rational scale(den, num);
    scale.canonicalize();
    if (sgn(leading_term(order).second) < 0)
        scale = -scale;
    return *this * scale;
}

std::string Polynomial::to_string(const MonomialOrder& order) const
{
    if (is_zero())
        return "0";
    std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        Rational mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            std::string f = "x" + std::to_string(k + 1);
            if (e[k] > 1)
                f += "^" + std::to_string(e[k]);
            factors.push_back(f);
        }
        if (factors.empty() || mag != 1) {
            os << mag.get_str();
            if (!factors.empty())
                os << "*";
        }
        for (std::size_t k = 0; k < factors.size(); ++k)
            os << (k ? "*" : "") << factors[k];
    }
    return os.str();
}

// ---- Groebner bases ---------------------------------------------------------

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& order)
{
    std::vector<std::pair<Exponents, Rational>> leads;
    for (const auto& p : g)
        leads.push_back(p.leading_term(order));
    Polynomial rest = f, remainder(f.n());
    while (!rest.is_zero()) {
        const auto [m, c] = rest.leading_term(order);
        bool reduced = false;
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (!divides(leads[k].first, m))
                continue;
            rest = rest - times_term(g[k], minus(m, leads[k].first), c / leads[k].second);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(m, c);
            rest = rest - Polynomial::monomial(m, c);
        }
    }
    return remainder;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order)
{
    std::vector<Polynomial> basis;
    for (const auto& p : generators)
        if (!p.is_zero())
            basis.push_back(p.primitive(order));
    if (basis.empty())
        return basis;

    std::vector<Exponents> leads;
    for (const auto& p : basis)
        leads.push_back(p.leading_term(order).first);
    std::set<std::pair<std::size_t, std::size_t>> pending, done;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            pending.insert({i, j});

    auto handled = [&](std::size_t a, std::size_t b) {
        return done.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!pending.empty()) {
        const auto [i, j] = *pending.begin();
        pending.erase(pending.begin());
        done.insert({i, j});
        if (coprime(leads[i], leads[j]))
            continue;
        const Exponents l = lcm_of(leads[i], leads[j]);
        // Chain criterion: some k with LT(k) | lcm whose pairs with i and j are handled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k)
            if (k != i && k != j && divides(leads[k], l) && handled(i, k) && handled(j, k))
                skip = true;
        if (skip)
            continue;
        const auto ci = basis[i].leading_term(order).second, cj = basis[j].leading_term(order).second;
        const Polynomial s = times_term(basis[i], minus(l, leads[i]), Rational(1) / ci) -
                             times_term(basis[j], minus(l, leads[j]), Rational(1) / cj);
        Polynomial r = normal_form(s, basis, order);
        if (r.is_zero())
            continue;
        r = r.primitive(order);
        const std::size_t idx = basis.size();
        basis.push_back(r);
        leads.push_back(r.leading_term(order).first);
        for (std::size_t k = 0; k < idx; ++k)
            pending.insert({k, idx});
    }

    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    std::vector<Exponents> minimal_leads;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        bool redundant = false;
        for (std::size_t m = 0; m < basis.size() && !redundant; ++m) {
            if (m == k || !divides(leads[m], leads[k]))
                continue;
            // equal leading monomials: keep the first one only
            redundant = leads[m] != leads[k] || m < k;
        }
        if (!redundant) {
            minimal.push_back(basis[k]);
            minimal_leads.push_back(leads[k]);
        }
    }
    // Inter-reduce the tails.
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        for (std::size_t m = 0; m < minimal.size(); ++m)
            if (m != k)
                others.push_back(minimal[m]);
        const auto lead = minimal[k].leading_term(order);
        Polynomial tail = minimal[k] - Polynomial::monomial(lead.first, lead.second);
        Polynomial g = Polynomial::monomial(lead.first, lead.second) + normal_form(tail, others, order);
        reduced.push_back(g.primitive(order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(b.leading_term(order).first, a.leading_term(order).first);
    });
    return reduced;
}

// ---- ideals -----------------------------------------------------------------

PolynomialIdeal::PolynomialIdeal(int n, std::vector<Polynomial> generators) : n_(n)
{
    for (auto& g : generators) {
        if (g.n() != n)
            throw InputError("ideal generator lives in a different ring");
        if (!g.is_zero())
            generators_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& PolynomialIdeal::groebner_basis(const MonomialOrder& order) const
{
    if (!cached_order_ || !(*cached_order_ == order)) {
        cached_basis_ = buchberger(generators_, order);
        cached_order_ = order;
    }
    return cached_basis_;
}

bool PolynomialIdeal::contains(const Polynomial& f) const
{
    const auto order = MonomialOrder::grevlex();
    return normal_form(f, groebner_basis(order), order).is_zero();
}

bool PolynomialIdeal::contains(const PolynomialIdeal& other) const
{
    return std::all_of(other.generators().begin(), other.generators().end(),
                       [this](const Polynomial& g) { return contains(g); });
}

bool PolynomialIdeal::is_unit() const { return contains(Polynomial::constant(n_, 1)); }

bool PolynomialIdeal::is_zero() const { return generators_.empty(); }

bool ideal_member(const Polynomial& f, const PolynomialIdeal& ideal) { return ideal.contains(f); }

bool ideal_equal(const PolynomialIdeal& a, const PolynomialIdeal& b)
{
    if (a.n() != b.n())
        return false;
    const auto order = MonomialOrder::grevlex();
    return a.groebner_basis(order) == b.groebner_basis(order);
}

PolynomialIdeal ideal_intersect(const PolynomialIdeal& a, const PolynomialIdeal& b)
{
    if (a.n() != b.n())
        throw InputError("ideal intersection: different rings");
    const int n = a.n();
    // Variable 0 of the extended ring is t.
    auto lift = [n](const Polynomial& p) {
        Polynomial out(n + 1);
        for (const auto& [e, c] : p.terms()) {
            Exponents moved(1, 0);
            moved.insert(moved.end(), e.begin(), e.end());
            out.add_term(moved, c);
        }
        return out;
    };
    const Polynomial t = Polynomial::variable(n + 1, 0);
    const Polynomial one_minus_t = Polynomial::constant(n + 1, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators())
        gens.push_back(t * lift(g));
    for (const auto& g : b.generators())
        gens.push_back(one_minus_t * lift(g));
    const auto order = MonomialOrder::block(1);
    std::vector<Polynomial> kept;
    for (const auto& g : buchberger(gens, order)) {
        bool has_t = false;
        for (const auto& [e, c] : g.terms())
            has_t = has_t || e[0] > 0;
        if (has_t)
            continue;
        Polynomial down(n);
        for (const auto& [e, c] : g.terms())
            down.add_term(Exponents(e.begin() + 1, e.end()), c);
        kept.push_back(down);
    }
    return PolynomialIdeal(n, kept);
}

PolynomialIdeal monomial_ideal(int n, const std::vector<Exponents>& generators)
{
    std::vector<Polynomial> gens;
    for (const auto& e : generators) {
        if (static_cast<int>(e.size()) != n)
            throw InputError("monomial generator has the wrong number of variables");
        gens.push_back(Polynomial::monomial(e));
    }
    return PolynomialIdeal(n, gens);
}

// ---- Fitting ideals ---------------------------------------------------------

PolynomialMatrix to_polynomial_matrix(const PresentationMatrix& p)
{
    PolynomialMatrix m(p.rows.size(), std::vector<Polynomial>(p.cols.size(), Polynomial(p.n)));
    for (const auto& e : p.entries)
        m[e.row][e.col] = Polynomial::variable(p.n, e.variable) * Rational(e.sign);
    return m;
}

namespace {

Polynomial minor_determinant(const PolynomialMatrix& m, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols, int n)
{
    if (rows.empty())
        return Polynomial::constant(n, 1);
    // Laplace expansion along the first selected row.
    Polynomial det(n);
    const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& entry = m[rows[0]][cols[k]];
        if (entry.is_zero())
            continue;
        std::vector<std::size_t> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + static_cast<long>(k));
        const Polynomial sub = minor_determinant(m, sub_rows, sub_cols, n);
        det = det + entry * sub * Rational(k % 2 == 0 ? 1 : -1);
    }
    return det;
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t total, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    for (Mask m : subsets_of_size(static_cast<int>(total), static_cast<int>(k))) {
        std::vector<std::size_t> idx;
        for (Mask rest = m; rest; rest &= rest - 1)
            idx.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
        out.push_back(std::move(idx));
    }
    return out;
}

} // namespace

PolynomialIdeal fitting_ideal(const PolynomialMatrix& m, int n, int r)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& row : m)
        if (row.size() != cols)
            throw InputError("fitting_ideal: ragged matrix");
    const long size = static_cast<long>(rows) - r;
    if (size <= 0)
        return PolynomialIdeal(n, {Polynomial::constant(n, 1)});
    if (static_cast<std::size_t>(size) > std::min(rows, cols))
        return PolynomialIdeal(n, {});
    if (rows > 63 || cols > 63)
        throw GuardError("fitting_ideal: matrix too large");
    const std::int64_t count = binomial(static_cast<std::int64_t>(rows), size) * binomial(static_cast<std::int64_t>(cols), size);
    if (count > 1000000)
        throw GuardError("fitting_ideal: " + std::to_string(count) + " minors exceed the bound of 10^6");
    std::vector<Polynomial> minors;
    for (const auto& rs : index_subsets(rows, static_cast<std::size_t>(size)))
        for (const auto& cs : index_subsets(cols, static_cast<std::size_t>(size))) {
            Polynomial d = minor_determinant(m, rs, cs, n);
            if (!d.is_zero())
                minors.push_back(std::move(d));
        }
    return PolynomialIdeal(n, minors);
}

bool RadicalReport::non_reduced() const
{
    if (!contained || equal)
        return false;
    return std::all_of(nilpotency.begin(), nilpotency.end(), [](const auto& e) { return e.has_value(); });
}

RadicalReport is_radical_vs(const PolynomialIdeal& i, const PolynomialIdeal& j, int max_power)
{
    RadicalReport r;
    r.contained = j.contains(i);
    r.equal = r.contained && i.contains(j);
    for (const auto& g : j.generators()) {
        std::optional<int> found;
        Polynomial power = g;
        for (int e = 1; e <= max_power; ++e) {
            if (i.contains(power)) {
                found = e;
                break;
            }
            power = power * g;
        }
        r.nilpotency.push_back(found);
    }
    return r;
}

} // namespace skm
