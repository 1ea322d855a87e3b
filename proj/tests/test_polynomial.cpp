#include "flagcoh/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace flagcoh;

namespace {

RootSystem rs_of(const char* name) { return build_root_system(parse_cartan_type(name)); }

Polynomial random_polynomial(std::mt19937& rng, int nvars, int max_degree, int terms)
{
    std::uniform_int_distribution<int> exp(0, max_degree);
    std::uniform_int_distribution<int> coef(-5, 5);
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponent e(nvars);
        for (auto& x : e)
            x = exp(rng);
        Rational c(coef(rng), 1 + (t % 3));
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

Polynomial random_homogeneous(std::mt19937& rng, int nvars, int degree, int terms)
{
    const auto basis = monomial_basis(nvars, degree);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coef(-4, 4);
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t)
        p.add_term(basis[pick(rng)], coef(rng));
    return p;
}

long binomial(long n, long k)
{
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_SUITE("polynomial")
{
    TEST_CASE("monomial_basis sizes and order")
    {
        for (int n = 1; n <= 4; ++n)
            for (int d = 0; d <= 5; ++d) {
                const auto b = monomial_basis(n, d);
                CHECK(static_cast<long>(b.size()) == binomial(n + d - 1, d));
                for (const auto& e : b)
                    CHECK(total_degree(e) == d);
            }
        const std::vector<Exponent> expected{{2, 0}, {1, 1}, {0, 2}};
        CHECK(monomial_basis(2, 2) == expected);
    }

    TEST_CASE("span_dimension")
    {
        const Polynomial a1 = Polynomial::variable(2, 0);
        const Polynomial a2 = Polynomial::variable(2, 1);
        CHECK(span_dimension({a1 * a1, a1 * a2, a1 * a1 + a1 * a2}, 2) == 2);
        CHECK(span_dimension({a1 * a1, a2 * a2, a1 * a2}, 2) == 3);
        CHECK(span_dimension({Polynomial(2)}, 2) == 0);
        CHECK_THROWS_AS(span_dimension({a1 * a1, a1}, 2), InhomogeneousInput);
    }

    TEST_CASE("ring axioms on random polynomials")
    {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            const Polynomial p = random_polynomial(rng, 3, 3, 5);
            const Polynomial q = random_polynomial(rng, 3, 3, 5);
            const Polynomial r = random_polynomial(rng, 3, 2, 4);
            CHECK(p * (q + r) == p * q + p * r);
            CHECK((p * q) * r == p * (q * r));
            CHECK(p * q == q * p);
            CHECK(p - p == Polynomial(3));
            CHECK(p.pow(2) == p * p);
        }
    }

    TEST_CASE("substitution is a ring homomorphism")
    {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const Polynomial p = random_polynomial(rng, 2, 3, 4);
            const Polynomial q = random_polynomial(rng, 2, 3, 4);
            const std::vector<Polynomial> images{random_polynomial(rng, 2, 1, 2), random_polynomial(rng, 2, 1, 2)};
            CHECK((p * q).substitute(images) == p.substitute(images) * q.substitute(images));
            CHECK((p + q).substitute(images) == p.substitute(images) + q.substitute(images));
        }
    }

    TEST_CASE("Weyl action composes as a left action")
    {
        std::mt19937 rng(3);
        for (const char* name : {"A3", "B3", "G2"}) {
            const RootSystem rs = rs_of(name);
            const auto w = enumerate_weyl(rs, all_nodes(rs));
            std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
            for (int trial = 0; trial < 15; ++trial) {
                const WeylElement& x = w[pick(rng)];
                const WeylElement& y = w[pick(rng)];
                const Polynomial p = random_homogeneous(rng, rs.rank(), 3, 4);
                CHECK(poly_weyl_action(x.matrix, poly_weyl_action(y.matrix, p)) ==
                      poly_weyl_action(x.matrix * y.matrix, p));
                CHECK(poly_weyl_action(rs, w.front(), p) == p);
            }
        }
    }

    TEST_CASE("reflection on a simple root")
    {
        const RootSystem rs = rs_of("A2");
        const Polynomial a1 = Polynomial::variable(2, 0);
        const Polynomial a2 = Polynomial::variable(2, 1);
        CHECK(poly_weyl_action(simple_reflection_int(rs, 1), a1) == -a1);
        CHECK(poly_weyl_action(simple_reflection_int(rs, 1), a2) == a1 + a2);
        CHECK_THROWS_AS(poly_weyl_action(simple_reflection_int(rs, 1), Polynomial::variable(3, 0)), RankMismatch);
    }

    TEST_CASE("text format")
    {
        const Polynomial p = parse_polynomial("1 * a1^2 + -3/4 * a1^1 a2^1 + 2", 2);
        CHECK(p.coefficient({2, 0}) == 1);
        CHECK(p.coefficient({1, 1}) == Rational(-3, 4));
        CHECK(p.coefficient({0, 0}) == 2);
        CHECK(to_text(p) == "1 * a1^2 + -3/4 * a1^1 a2^1 + 2");
        CHECK(to_text(Polynomial(2)) == "0");
        CHECK(parse_polynomial("0", 2).is_zero());
        CHECK_THROWS(parse_polynomial("1 * a3^1", 2));
    }

    TEST_CASE("text round trip on random polynomials")
    {
        std::mt19937 rng(19);
        for (int trial = 0; trial < 30; ++trial) {
            const Polynomial p = random_polynomial(rng, 4, 4, 6);
            CHECK(parse_polynomial(to_text(p), 4) == p);
        }
    }

    TEST_CASE("MonomialIndex coordinates")
    {
        const MonomialIndex idx(3, 2);
        std::mt19937 rng(5);
        const Polynomial p = random_homogeneous(rng, 3, 2, 5);
        CHECK(idx.polynomial(idx.coordinates(p)) == p);
        CHECK(idx.size() == 6);
    }

    TEST_CASE("homogeneity")
    {
        const Polynomial a1 = Polynomial::variable(2, 0);
        CHECK((a1 * a1).is_homogeneous());
        CHECK((a1 * a1).homogeneous_degree() == 2);
        CHECK_FALSE((a1 * a1 + a1).is_homogeneous());
    }
}
