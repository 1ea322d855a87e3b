#include "flagcoh/borel.hpp"

#include <algorithm>

namespace flagcoh {

namespace {

std::vector<Rational> unit(int rank, int i)
{
    std::vector<Rational> v(rank);
    v[i] = 1;
    return v;
}

// Scales v to a primitive integral vector whose first nonzero entry is positive.
std::vector<Rational> primitive(std::vector<Rational> v)
{
    Integer den = 1;
    for (const auto& x : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    for (const auto& x : v) {
        const Integer num = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0)
        return v;
    Rational scale(den, g);
    scale.canonicalize();
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (*first < 0)
        scale = -scale;
    for (auto& x : v)
        x *= scale;
    return v;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<Vector> rows(n, Vector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = m(i, j);
        rows[i][n + i] = 1;
    }
    Echelon e(2 * n);
    for (auto& r : rows)
        e.insert(r);
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!e.is_pivot(i))
            throw Error("singular matrix");
        const Vector& row = e.row_for_pivot(i);
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = row[n + j];
    }
    return inv;
}

// Linear form (variable coordinates) of a degree-1 class over the standard
// monomials of degree 1.
std::vector<Rational> as_linear_form(const CoinvariantAlgebra& a, const Vector& cls)
{
    std::vector<Rational> lin(a.rank());
    const auto& std1 = a.standard_monomials(1);
    for (std::size_t i = 0; i < std1.size(); ++i) {
        const auto k = std::find(std1[i].begin(), std1[i].end(), 1) - std1[i].begin();
        lin[k] += cls[i];
    }
    return lin;
}

}  // namespace

Polynomial ReductionCertificate::reconstruction() const
{
    const int rank = static_cast<int>(q.nvars());
    Polynomial out = a * Polynomial::variable(rank, alpha - 1).pow(2);
    for (const auto& t : pairs)
        out += t.b * Polynomial::linear_form(t.beta).pow(2);
    return out;
}

Polynomial ReductionCertificate::alpha_square_residue() const
{
    Polynomial out(q.nvars());
    for (const auto& t : pairs)
        out -= (t.b / a) * Polynomial::linear_form(t.beta).pow(2);
    return out;
}

int complex_dimension(const RootSystem& rs, const ParabolicSubset& p)
{
    int count = 0;
    for (const auto& beta : rs.positive_roots) {
        bool inside = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (beta[i] != 0 && !p.nodes.count(i + 1))
                inside = false;
        if (!inside)
            ++count;
    }
    return count;
}

long quotient_dimension(const RootSystem& rs, const ParabolicSubset& p, int d)
{
    const auto a = coinvariants_for(rs);
    if (d < 0 || d > a->max_degree())
        throw Error("degree " + std::to_string(d) + " outside 0.." + std::to_string(a->max_degree()));
    return static_cast<long>(fixed_dimension(*a, p, d));
}

BettiTable betti_numbers(const RootSystem& rs, const ParabolicSubset& p)
{
    const auto a = coinvariants_for(rs);
    const int dim = complex_dimension(rs, p);
    BettiTable t;
    for (int d = 0; d <= dim; ++d)
        t.dims.push_back(static_cast<long>(fixed_dimension(*a, p, d)));
    if (fixed_dimension(*a, p, dim + 1) != 0)
        throw Error("quotient for " + rs.cartan_type.name() + " does not vanish above degree " + std::to_string(dim));
    return t;
}

bool cross_check_betti(const RootSystem& rs, const ParabolicSubset& p, std::size_t cap)
{
    return betti_numbers(rs, p) == coset_length_counts(rs, p, cap);
}

GenerationReport degree2_generation_check(const RootSystem& rs, const ParabolicSubset& p)
{
    const auto a = coinvariants_for(rs);
    const int dim = complex_dimension(rs, p);

    std::vector<std::vector<Rational>> linear;
    for (const auto& v : fixed_subspace(*a, p, 1))
        linear.push_back(as_linear_form(*a, v));

    GenerationReport report;
    report.generated_dims.push_back(1);
    std::vector<Vector> current{Vector{Rational(1)}};
    for (int d = 1; d <= dim; ++d) {
        Echelon span(a->dimension(d));
        for (const auto& g : current)
            for (const auto& l : linear)
                span.insert(a->multiply_linear(d - 1, g, l));
        current = span.rows();

        const long generated = static_cast<long>(span.rank());
        report.generated_dims.push_back(generated);
        const long full = static_cast<long>(fixed_dimension(*a, p, d));
        if (generated != full && report.holds) {
            report.holds = false;
            report.first_failing_degree = d;
            report.deficit = full - generated;
        }
    }
    return report;
}

Polynomial invariant_quadric(const RootSystem& rs)
{
    const int n = rs.rank();
    const RationalMatrix inv = inverse(rs.gram);
    std::vector<Rational> flat;
    Polynomial q(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Exponent e(n, 0);
            ++e[i];
            ++e[j];
            q.add_term(e, inv(i, j));
        }
    for (const auto& [e, c] : q.terms())
        flat.push_back(c);
    const std::vector<Rational> scaled = primitive(flat);
    return q * (scaled.front() / flat.front());
}

ReductionCertificate alpha_square_reduction(const RootSystem& rs, int alpha_node)
{
    const int n = rs.rank();
    if (alpha_node < 1 || alpha_node > n)
        throw NodeOutOfRange("node " + std::to_string(alpha_node) + " outside 1.." + std::to_string(n));

    const std::vector<Rational> alpha = unit(n, alpha_node - 1);
    Vector gram_row(n);
    for (int j = 0; j < n; ++j)
        gram_row[j] = rs.gram(alpha_node - 1, j);

    std::vector<std::vector<Rational>> betas;
    for (const auto& v : nullspace({gram_row}, n)) {
        std::vector<Rational> w = v;
        for (const auto& b : betas) {
            const Rational f = rs.inner(v, b) / rs.inner(b, b);
            for (int k = 0; k < n; ++k)
                w[k] -= f * b[k];
        }
        betas.push_back(primitive(std::move(w)));
    }

    // Over an orthogonal basis e_k the invariant quadric is proportional to
    // sum e_k^2 / (e_k, e_k).
    ReductionCertificate cert;
    cert.alpha = alpha_node;
    cert.q = invariant_quadric(rs);
    Polynomial dual = (1 / rs.inner(alpha, alpha)) * Polynomial::variable(n, alpha_node - 1).pow(2);
    for (const auto& b : betas)
        dual += (1 / rs.inner(b, b)) * Polynomial::linear_form(b).pow(2);
    const auto& [lead, qc] = *cert.q.terms().begin();
    const Rational scale = qc / dual.coefficient(lead);

    cert.a = scale / rs.inner(alpha, alpha);
    for (auto& b : betas) {
        const Rational coef = scale / rs.inner(b, b);
        cert.pairs.push_back({coef, std::move(b)});
    }
    return cert;
}

bool validate_certificate(const RootSystem& rs, const ReductionCertificate& cert)
{
    const int n = rs.rank();
    if (cert.alpha < 1 || cert.alpha > n || cert.a == 0 || static_cast<int>(cert.pairs.size()) != n - 1)
        return false;
    const std::vector<Rational> alpha = unit(n, cert.alpha - 1);
    for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
        if (cert.pairs[i].b == 0 || rs.inner(cert.pairs[i].beta, alpha) != 0)
            return false;
        for (std::size_t j = i + 1; j < cert.pairs.size(); ++j)
            if (rs.inner(cert.pairs[i].beta, cert.pairs[j].beta) != 0)
                return false;
    }
    if (cert.reconstruction() != cert.q)
        return false;
    for (int node = 1; node <= n; ++node)
        if (poly_weyl_action(simple_reflection_int(rs, node), cert.q) != cert.q)
            return false;
    const IntMatrix s_alpha = simple_reflection_int(rs, cert.alpha);
    for (const auto& t : cert.pairs) {
        const Polynomial beta = Polynomial::linear_form(t.beta);
        if (poly_weyl_action(s_alpha, beta) != beta)
            return false;
    }
    return true;
}

}  // namespace flagcoh
