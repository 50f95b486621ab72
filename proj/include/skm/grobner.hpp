#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skm/exactlin.hpp"
#include "skm/koszul.hpp"

namespace skm {

/// Monomial orders on exponent vectors. Block(k) compares the first k
/// variables by grevlex and breaks ties with grevlex on the rest, so it
/// eliminates the first k variables.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder block(int eliminated) { return MonomialOrder(Kind::Block, eliminated); }

    Kind kind() const { return kind_; }
    int eliminated() const { return eliminated_; }
    /// Strict "a < b".
    bool less(const Exponents& a, const Exponents& b) const;
    bool operator==(const MonomialOrder&) const = default;

private:
    MonomialOrder(Kind kind, int eliminated) : kind_(kind), eliminated_(eliminated) {}
    Kind kind_;
    int eliminated_;
};

/// Polynomial in Q[x_1..x_n]; no zero coefficients are stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}
    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, int j); // 0-based j
    static Polynomial monomial(const Exponents& e, const Rational& c = 1);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int e) const;

    /// Leading monomial and coefficient; throws on the zero polynomial.
    std::pair<Exponents, Rational> leading_term(const MonomialOrder& order) const;
    int total_degree() const;
    /// Scales to integer coefficients with gcd 1 and positive leading coefficient.
    Polynomial primitive(const MonomialOrder& order) const;
    /// Terms in decreasing order, e.g. "-x1*x2^2 + 3*x4".
    std::string to_string(const MonomialOrder& order = MonomialOrder::grevlex()) const;

    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

private:
    int n_ = 0;
    std::map<Exponents, Rational> terms_;
};

/// Full reduction of f by the list g.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& order);

/// Reduced Groebner basis, integer-primitive with positive leading
/// coefficients, sorted by decreasing leading monomial. Buchberger's
/// algorithm with the coprime and chain criteria.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order);

class PolynomialIdeal {
public:
    PolynomialIdeal() = default;
    PolynomialIdeal(int n, std::vector<Polynomial> generators);

    int n() const { return n_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    /// Reduced Groebner basis, cached for the most recent order.
    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

    bool contains(const Polynomial& f) const;
    bool contains(const PolynomialIdeal& other) const;
    bool is_unit() const;
    bool is_zero() const;

private:
    int n_ = 0;
    std::vector<Polynomial> generators_;
    mutable std::optional<MonomialOrder> cached_order_;
    mutable std::vector<Polynomial> cached_basis_;
};

bool ideal_member(const Polynomial& f, const PolynomialIdeal& ideal);
bool ideal_equal(const PolynomialIdeal& a, const PolynomialIdeal& b);
/// I ∩ J = (t I + (1 - t) J) ∩ Q[x], by eliminating t.
PolynomialIdeal ideal_intersect(const PolynomialIdeal& a, const PolynomialIdeal& b);
/// (x_T) for each square-free monomial generator, or the monomial prime (x_j : j ∈ T).
PolynomialIdeal monomial_ideal(int n, const std::vector<Exponents>& generators);

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Entries ±x_j of the square-free presentation.
PolynomialMatrix to_polynomial_matrix(const PresentationMatrix& p);

/// Ideal of minors of size (rows - r) of a matrix S^cols -> S^rows.
/// Size <= 0 gives the unit ideal, size > min(rows, cols) the zero ideal.
/// Throws GuardError when more than 10^6 minors would be needed.
PolynomialIdeal fitting_ideal(const PolynomialMatrix& m, int n, int r);

struct RadicalReport {
    bool contained = false; // I ⊆ J
    bool equal = false;     // I = J
    /// Smallest e with g^e ∈ I for each generator g of J (nullopt if not
    /// found up to the search bound).
    std::vector<std::optional<int>> nilpotency;
    /// I ⊊ J and every generator of J has a power in I: the radical of I is
    /// J (J radical) while I itself is not radical.
    bool non_reduced() const;
};

/// Compares I with a radical ideal J that is claimed to be its radical.
RadicalReport is_radical_vs(const PolynomialIdeal& i, const PolynomialIdeal& j, int max_power = 8);

} // namespace skm
