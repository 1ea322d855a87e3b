#pragma once

#include "flagcoh/linalg.hpp"
#include "flagcoh/rational.hpp"
#include "flagcoh/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace flagcoh {

class RankMismatch : public Error {
public:
    using Error::Error;
};

class InhomogeneousInput : public Error {
public:
    using Error::Error;
};

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded-lex order: higher total degree first, then lexicographically larger.
struct GradedLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored. With nvars = rank and variable i standing
/// for the simple root alpha_{i+1}, this is an element of S = Sym(t*_Q);
/// polynomial degree d corresponds to cohomological degree 2d.
class Polynomial {
public:
    using Terms = std::map<Exponent, Rational, GradedLexGreater>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);  // 0-based
    static Polynomial monomial(Exponent e, const Rational& c = 1);
    static Polynomial linear_form(const std::vector<Rational>& coeffs);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Degree of a homogeneous polynomial; nullopt if zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;
    int max_degree() const;

    Rational coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    /// Ring homomorphism sending variable j to images[j].
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    Polynomial pow(int k) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Polynomial& o) const;

    int nvars_;
    Terms terms_;
};

/// Exponent vectors of the given degree in graded-lex order.
std::vector<Exponent> monomial_basis(int rank, int degree);

/// Position lookup for monomial_basis(rank, degree).
class MonomialIndex {
public:
    MonomialIndex(int rank, int degree);

    int rank() const { return rank_; }
    int degree() const { return degree_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<Exponent>& basis() const { return basis_; }
    std::size_t index(const Exponent& e) const;

    /// Coefficient vector of a homogeneous polynomial of this degree.
    Vector coordinates(const Polynomial& p) const;
    Polynomial polynomial(const Vector& coords) const;

private:
    struct Hash {
        std::size_t operator()(const Exponent& e) const;
    };
    int rank_;
    int degree_;
    std::vector<Exponent> basis_;
    std::unordered_map<Exponent, std::size_t, Hash> lookup_;
};

/// w acting on S by substituting alpha_j -> w(alpha_j).
Polynomial poly_weyl_action(const RootSystem& rs, const WeylElement& w, const Polynomial& p);
Polynomial poly_weyl_action(const IntMatrix& w, const Polynomial& p);

/// Rank over Q of homogeneous polynomials of the given degree.
std::size_t span_dimension(const std::vector<Polynomial>& polys, int degree);

/// Text form "c * a1^e1 a2^e2 + ..." (terms in graded-lex order, zero
/// exponents omitted, "0" for the zero polynomial).
std::string to_text(const Polynomial& p);
std::string to_text(const Polynomial& p, const std::vector<std::string>& names);

/// Inverse of to_text with the default variable names a1..a<nvars>.
Polynomial parse_polynomial(const std::string& text, int nvars);

}  // namespace flagcoh
