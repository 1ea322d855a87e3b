#include "flagcoh/borel.hpp"

#include <doctest.h>

using namespace flagcoh;

namespace {

RootSystem rs_of(const char* name) { return build_root_system(parse_cartan_type(name)); }

}  // namespace

TEST_SUITE("borel")
{
    TEST_CASE("complex dimensions")
    {
        CHECK(complex_dimension(rs_of("A2"), ParabolicSubset{}) == 3);
        CHECK(complex_dimension(rs_of("A3"), ParabolicSubset{{1, 3}}) == 4);
        CHECK(complex_dimension(rs_of("A3"), ParabolicSubset{{3}}) == 5);
        CHECK(complex_dimension(rs_of("A3"), ParabolicSubset{{2, 3}}) == 3);
        CHECK(complex_dimension(rs_of("G2"), ParabolicSubset{{1}}) == 5);
        CHECK(complex_dimension(rs_of("F4"), ParabolicSubset{{1, 2, 3, 4}}) == 0);
    }

    TEST_CASE("Betti numbers of small flag varieties")
    {
        CHECK(betti_numbers(rs_of("A2"), ParabolicSubset{}).to_string() == "[1,2,2,1]");
        CHECK(betti_numbers(rs_of("A3"), ParabolicSubset{{1, 3}}).dims == std::vector<long>{1, 1, 2, 1, 1});
        CHECK(betti_numbers(rs_of("B2"), ParabolicSubset{{2}}).dims == std::vector<long>{1, 1, 1, 1});
        CHECK(betti_numbers(rs_of("G2"), ParabolicSubset{{1, 2}}).dims == std::vector<long>{1});
    }

    TEST_CASE("Borel presentation equals Schubert cells")
    {
        for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"})
            for (const auto& p : all_parabolic_subsets(rs_of(name).rank())) {
                CAPTURE(name);
                CAPTURE(p.to_string());
                CHECK(cross_check_betti(rs_of(name), p));
            }
    }

    TEST_CASE("quotient vanishes above the dimension")
    {
        const RootSystem rs = rs_of("B3");
        for (const auto& p : all_parabolic_subsets(3)) {
            const int dim = complex_dimension(rs, p);
            for (int d = dim + 1; d <= static_cast<int>(rs.num_positive_roots()) + 1; ++d)
                CHECK(quotient_dimension(rs, p, d) == 0);
        }
        CHECK_THROWS(quotient_dimension(rs, ParabolicSubset{}, 11));
    }

    TEST_CASE("degree-two generation")
    {
        const GenerationReport borel = degree2_generation_check(rs_of("A3"), ParabolicSubset{});
        CHECK(borel.holds);
        CHECK(borel.generated_dims == std::vector<long>{1, 3, 5, 6, 5, 3, 1});

        const GenerationReport proj = degree2_generation_check(rs_of("A3"), ParabolicSubset{{2, 3}});
        CHECK(proj.holds);

        const GenerationReport gr24 = degree2_generation_check(rs_of("A3"), ParabolicSubset{{1, 3}});
        CHECK_FALSE(gr24.holds);
        CHECK(gr24.first_failing_degree == 2);
        CHECK(gr24.deficit == 1);
        CHECK(gr24.generated_dims == std::vector<long>{1, 1, 1, 1, 1});

        const GenerationReport gr25 = degree2_generation_check(rs_of("A4"), ParabolicSubset{{1, 3, 4}});
        CHECK_FALSE(gr25.holds);
        CHECK(gr25.first_failing_degree == 2);
    }

    TEST_CASE("minimal parabolics are generated in degree two")
    {
        for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
            const RootSystem rs = rs_of(name);
            for (int node = 1; node <= rs.rank(); ++node) {
                CAPTURE(name);
                CAPTURE(node);
                CHECK(degree2_generation_check(rs, ParabolicSubset{{node}}).holds);
            }
        }
    }

    TEST_CASE("A2 certificate")
    {
        const RootSystem rs = rs_of("A2");
        const ReductionCertificate c = alpha_square_reduction(rs, 1);
        CHECK(c.a == Rational(3, 4));
        REQUIRE(c.pairs.size() == 1);
        CHECK(c.pairs[0].b == Rational(1, 4));
        CHECK(c.pairs[0].beta == std::vector<Rational>{1, 2});
        CHECK(c.q == parse_polynomial("1 * a1^2 + 1 * a1^1 a2^1 + 1 * a2^2", 2));
        CHECK(validate_certificate(rs, c));
    }

    TEST_CASE("A1 certificate")
    {
        const RootSystem rs = rs_of("A1");
        const ReductionCertificate c = alpha_square_reduction(rs, 1);
        CHECK(c.a == 1);
        CHECK(c.pairs.empty());
        CHECK(c.q == parse_polynomial("1 * a1^2", 1));
        CHECK(c.alpha_square_residue().is_zero());
        CHECK(validate_certificate(rs, c));
    }

    TEST_CASE("invariant quadric is W-invariant and primitive")
    {
        for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
            CAPTURE(name);
            const RootSystem rs = rs_of(name);
            const Polynomial q = invariant_quadric(rs);
            for (int node = 1; node <= rs.rank(); ++node)
                CHECK(poly_weyl_action(simple_reflection_int(rs, node), q) == q);
            Integer g = 0;
            for (const auto& [e, c] : q.terms()) {
                CHECK(c.get_den() == 1);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
            }
            CHECK(g == 1);
        }
    }

    TEST_CASE("certificates for every node")
    {
        for (const char* name : {"A3", "B2", "B3", "C3", "C4", "D4", "G2", "F4", "E6"}) {
            const RootSystem rs = rs_of(name);
            for (int node = 1; node <= rs.rank(); ++node) {
                CAPTURE(name);
                CAPTURE(node);
                const ReductionCertificate c = alpha_square_reduction(rs, node);
                CHECK(validate_certificate(rs, c));
                CHECK(c.reconstruction() == c.q);
                // alpha^2 + sum (b_i / a) beta_i^2 = q / a vanishes in the coinvariant algebra.
                const Polynomial lhs = Polynomial::variable(rs.rank(), node - 1).pow(2) - c.alpha_square_residue();
                if (rs.rank() <= 4)
                    CHECK(is_zero(coinvariants_for(rs)->normal_form(lhs)));
            }
        }
    }

    TEST_CASE("tampered certificates are rejected")
    {
        const RootSystem rs = rs_of("B3");
        ReductionCertificate c = alpha_square_reduction(rs, 2);
        REQUIRE(validate_certificate(rs, c));

        ReductionCertificate wrong_a = c;
        wrong_a.a += 1;
        CHECK_FALSE(validate_certificate(rs, wrong_a));

        ReductionCertificate not_orthogonal = c;
        not_orthogonal.pairs[0].beta[1] += 1;
        CHECK_FALSE(validate_certificate(rs, not_orthogonal));

        ReductionCertificate missing = c;
        missing.pairs.pop_back();
        CHECK_FALSE(validate_certificate(rs, missing));

        CHECK_THROWS_AS(alpha_square_reduction(rs, 4), NodeOutOfRange);
    }
}
