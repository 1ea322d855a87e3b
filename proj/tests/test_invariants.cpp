#include "flagcoh/borel.hpp"

#include <doctest.h>

#include <filesystem>

using namespace flagcoh;

namespace {

RootSystem rs_of(const char* name) { return build_root_system(parse_cartan_type(name)); }

// Coefficients of prod_i 1 / (1 - t^{d_i}).
std::vector<long> hilbert_series(const std::vector<int>& degrees, int top)
{
    std::vector<long> h(top + 1, 0);
    h[0] = 1;
    for (int d : degrees)
        for (int k = d; k <= top; ++k)
            h[k] += h[k - d];
    return h;
}

// Average of p over the group generated by gens.
Polynomial reynolds(const RootSystem& rs, const ParabolicSubset& gens, const Polynomial& p)
{
    const auto w = enumerate_weyl(rs, gens);
    Polynomial sum(rs.rank());
    for (const auto& e : w)
        sum += poly_weyl_action(e.matrix, p);
    return sum * Rational(1, static_cast<long>(w.size()));
}

}  // namespace

TEST_SUITE("invariants")
{
    TEST_CASE("A2 quadratic invariant")
    {
        const RootSystem rs = rs_of("A2");
        const GradedBasis b = invariant_subspace(rs, all_nodes(rs), 2, nullptr);
        REQUIRE(b.dimension() == 1);
        const Polynomial expected = parse_polynomial("1 * a1^2 + 1 * a1^1 a2^1 + 1 * a2^2", 2);
        CHECK(span_dimension({b.basis.front(), expected}, 2) == 1);
    }

    TEST_CASE("A2 degree-one invariants of s1")
    {
        const RootSystem rs = rs_of("A2");
        const GradedBasis b = invariant_subspace(rs, ParabolicSubset{{1}}, 1, nullptr);
        REQUIRE(b.dimension() == 1);
        CHECK(span_dimension({b.basis.front(), parse_polynomial("1 * a1^1 + 2 * a2^1", 2)}, 1) == 1);
    }

    TEST_CASE("W invariants follow the Hilbert series of the basic invariants")
    {
        const std::vector<std::pair<const char*, std::vector<int>>> cases{
            {"A1", {2}}, {"A2", {2, 3}}, {"B2", {2, 4}}, {"G2", {2, 6}}, {"A3", {2, 3, 4}}, {"B3", {2, 4, 6}}};
        for (const auto& [name, degrees] : cases) {
            const RootSystem rs = rs_of(name);
            const auto h = hilbert_series(degrees, 7);
            for (int d = 0; d <= 7; ++d) {
                CAPTURE(name);
                CAPTURE(d);
                CHECK(static_cast<long>(invariant_subspace(rs, all_nodes(rs), d, nullptr).dimension()) == h[d]);
            }
        }
    }

    TEST_CASE("minimal parabolic invariants are polynomial in n-1 linear forms and one quadric")
    {
        for (const char* name : {"A2", "A3", "B3", "G2"}) {
            const RootSystem rs = rs_of(name);
            for (int node = 1; node <= rs.rank(); ++node) {
                std::vector<int> degrees(rs.rank() - 1, 1);
                degrees.push_back(2);
                const auto h = hilbert_series(degrees, 5);
                for (int d = 0; d <= 5; ++d) {
                    CAPTURE(name);
                    CAPTURE(node);
                    CAPTURE(d);
                    CHECK(static_cast<long>(
                              invariant_subspace(rs, ParabolicSubset{{node}}, d, nullptr).dimension()) == h[d]);
                }
            }
        }
    }

    TEST_CASE("Reynolds images are invariant and span the invariants")
    {
        for (const char* name : {"A2", "B2", "G2"}) {
            const RootSystem rs = rs_of(name);
            for (const auto& p : all_parabolic_subsets(rs.rank())) {
                for (int d = 1; d <= 4; ++d) {
                    const GradedBasis b = invariant_subspace(rs, p, d, nullptr);
                    std::vector<Polynomial> images;
                    for (const auto& e : monomial_basis(rs.rank(), d)) {
                        const Polynomial r = reynolds(rs, p, Polynomial::monomial(e));
                        for (int node : p.nodes)
                            CHECK(poly_weyl_action(simple_reflection_int(rs, node), r) == r);
                        images.push_back(r);
                    }
                    CAPTURE(name);
                    CAPTURE(p.to_string());
                    CAPTURE(d);
                    CHECK(span_dimension(images, d) == b.dimension());
                    std::vector<Polynomial> both = images;
                    both.insert(both.end(), b.basis.begin(), b.basis.end());
                    CHECK(span_dimension(both, d) == b.dimension());
                }
            }
        }
    }

    TEST_CASE("cache round trip")
    {
        const auto dir = std::filesystem::temp_directory_path() / "flagcoh_cache_test";
        std::filesystem::remove_all(dir);
        const InvariantCache cache(dir);
        const RootSystem rs = rs_of("B2");
        CHECK_FALSE(cache.load(rs, all_nodes(rs), 4).has_value());
        const GradedBasis computed = invariant_subspace(rs, all_nodes(rs), 4, &cache);
        CHECK(std::filesystem::exists(cache.path_for(rs, all_nodes(rs), 4)));
        const auto loaded = cache.load(rs, all_nodes(rs), 4);
        REQUIRE(loaded.has_value());
        CHECK(loaded->basis == computed.basis);
        CHECK(invariant_subspace(rs, all_nodes(rs), 4, &cache).basis == computed.basis);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("literal ideal dimension agrees with the coinvariant route")
    {
        for (const char* name : {"A2", "B2", "G2", "A3"}) {
            const RootSystem rs = rs_of(name);
            for (const auto& p : all_parabolic_subsets(rs.rank())) {
                const int top = rs.rank() <= 2 ? complex_dimension(rs, p) + 1 : 4;
                long previous = 0;
                for (int d = 0; d <= top; ++d) {
                    CAPTURE(name);
                    CAPTURE(p.to_string());
                    CAPTURE(d);
                    const long inv = static_cast<long>(invariant_subspace(rs, p, d, nullptr).dimension());
                    const long ideal = static_cast<long>(ideal_graded_dimension(rs, p, d));
                    CHECK(ideal <= inv);
                    CHECK(inv - ideal == quotient_dimension(rs, p, d));
                    // A nonzero W_P-invariant linear form embeds I_d in I_{d+1}.
                    if (static_cast<int>(p.nodes.size()) < rs.rank())
                        CHECK(ideal >= previous);
                    previous = ideal;
                }
            }
        }
    }
}

TEST_SUITE("coinvariant")
{
    TEST_CASE("graded dimensions of the coinvariant algebra")
    {
        const auto a = coinvariants_for(rs_of("A2"));
        std::vector<long> dims;
        for (int d = 0; d <= a->max_degree(); ++d)
            dims.push_back(static_cast<long>(a->dimension(d)));
        CHECK(dims == std::vector<long>{1, 2, 2, 1, 0});
    }

    TEST_CASE("degrees of basic invariants")
    {
        const std::vector<std::pair<const char*, std::vector<int>>> cases{
            {"A3", {2, 3, 4}}, {"B3", {2, 4, 6}}, {"G2", {2, 6}}, {"D4", {2, 4, 4, 6}}, {"F4", {2, 6, 8, 12}}};
        for (const auto& [name, degrees] : cases) {
            CAPTURE(name);
            CHECK(coinvariants_for(rs_of(name))->generator_degrees() == degrees);
        }
    }

    TEST_CASE("invariants vanish in the quotient")
    {
        for (const char* name : {"A3", "B3", "G2"}) {
            const RootSystem rs = rs_of(name);
            const auto a = coinvariants_for(rs);
            for (int d = 1; d <= 6; ++d)
                for (const auto& f : invariant_subspace(rs, all_nodes(rs), d, nullptr).basis)
                    CHECK(is_zero(a->normal_form(f)));
            CHECK(is_zero(a->normal_form(invariant_quadric(rs))));
        }
    }

    TEST_CASE("reflections act as involutions on each degree")
    {
        const auto a = coinvariants_for(rs_of("B3"));
        for (int node = 1; node <= 3; ++node)
            for (int d = 0; d <= 9; ++d) {
                const RationalMatrix& s = a->reflection_action(node, d);
                CHECK(s * s == RationalMatrix::identity(a->dimension(d)));
            }
    }

    TEST_CASE("normal form rejects inhomogeneous input")
    {
        const auto a = coinvariants_for(rs_of("A2"));
        CHECK_THROWS_AS(a->normal_form(parse_polynomial("1 * a1^2 + 1 * a2^1", 2)), InhomogeneousInput);
    }
}
