#include "flagcoh/weyl.hpp"

#include <doctest.h>

#include <map>

using namespace flagcoh;

namespace {

RootSystem rs_of(const char* name) { return build_root_system(parse_cartan_type(name)); }

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return a * b; }

}  // namespace

TEST_SUITE("weyl")
{
    TEST_CASE("group orders")
    {
        const std::vector<std::pair<const char*, std::size_t>> cases{
            {"A1", 2},   {"A2", 6},   {"A3", 24},  {"A4", 120}, {"B2", 8},   {"B3", 48},
            {"C3", 48},  {"B4", 384}, {"D4", 192}, {"G2", 12},  {"F4", 1152}};
        for (const auto& [name, order] : cases) {
            CAPTURE(name);
            const RootSystem rs = rs_of(name);
            CHECK(enumerate_weyl(rs, all_nodes(rs)).size() == order);
        }
    }

    TEST_CASE("dihedral orders from the Coxeter presentation")
    {
        // (s1 s2)^m = 1 with m = 3, 4, 6 gives |W| = 2m.
        for (const auto& [name, m] : std::vector<std::pair<const char*, int>>{{"A2", 3}, {"B2", 4}, {"G2", 6}}) {
            CAPTURE(name);
            const RootSystem rs = rs_of(name);
            const IntMatrix c = simple_reflection_int(rs, 1) * simple_reflection_int(rs, 2);
            IntMatrix p = IntMatrix::identity(2);
            int order = 0;
            do {
                p = p * c;
                ++order;
            } while (!(p == IntMatrix::identity(2)));
            CHECK(order == m);
            CHECK(enumerate_weyl(rs, all_nodes(rs)).size() == static_cast<std::size_t>(2 * m));
        }
    }

    TEST_CASE("longest elements")
    {
        for (const auto& [name, len] : std::vector<std::pair<const char*, std::size_t>>{
                 {"A2", 3}, {"B2", 4}, {"G2", 6}, {"A3", 6}, {"F4", 24}}) {
            CAPTURE(name);
            const RootSystem rs = rs_of(name);
            const auto w = enumerate_weyl(rs, all_nodes(rs));
            CHECK(w.back().length() == len);
            CHECK(w.back().length() == rs.num_positive_roots());
        }
    }

    TEST_CASE("inversion count equals reduced word length")
    {
        for (const char* name : {"A3", "B3", "G2"}) {
            const RootSystem rs = rs_of(name);
            for (const auto& e : enumerate_weyl(rs, all_nodes(rs))) {
                CHECK(length(rs, e.matrix) == e.length());
                IntMatrix product = IntMatrix::identity(rs.rank());
                for (int node : e.word)
                    product = multiply(product, simple_reflection_int(rs, node));
                CHECK(product == e.matrix);
            }
        }
    }

    TEST_CASE("identity first and lexicographically minimal words")
    {
        const RootSystem rs = rs_of("A2");
        const auto w = enumerate_weyl(rs, all_nodes(rs));
        CHECK(w.front().word.empty());
        CHECK(w[1].word == std::vector<int>{1});
        CHECK(w[2].word == std::vector<int>{2});
        CHECK(w[5].word == std::vector<int>{1, 2, 1});
    }

    TEST_CASE("length rejects matrices outside W")
    {
        const RootSystem rs = rs_of("A2");
        IntMatrix m = IntMatrix::identity(2);
        m(0, 0) = 2;
        CHECK_THROWS_AS(length(rs, m), NotAWeylElement);
    }

    TEST_CASE("enumeration cap")
    {
        const RootSystem rs = rs_of("A4");
        CHECK_THROWS_AS(enumerate_weyl(rs, all_nodes(rs), 100), GroupTooLarge);
    }

    TEST_CASE("minimal coset representatives agree with brute force")
    {
        for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
            const RootSystem rs = rs_of(name);
            const auto w = enumerate_weyl(rs, all_nodes(rs));
            for (const auto& p : all_parabolic_subsets(rs.rank())) {
                const auto sub = enumerate_weyl(rs, p);
                std::map<std::vector<std::int64_t>, std::size_t> shortest;
                for (const auto& e : w) {
                    // Coset key: the smallest matrix in w W_P.
                    std::vector<std::int64_t> key;
                    std::size_t best = e.length();
                    for (const auto& u : sub) {
                        const IntMatrix m = e.matrix * u.matrix;
                        std::vector<std::int64_t> flat(m.data().begin(), m.data().end());
                        if (key.empty() || flat < key)
                            key = flat;
                        best = std::min(best, length(rs, m));
                    }
                    CAPTURE(name);
                    CAPTURE(p.to_string());
                    CHECK(is_minimal_coset_representative(e.matrix, p) == (e.length() == best));
                    shortest[key] = best;
                }
                CHECK(shortest.size() * sub.size() == w.size());
            }
        }
    }

    TEST_CASE("Schubert tables are palindromic and sum to |W|/|W_P|")
    {
        for (const char* name : {"A3", "B3", "C3", "G2", "D4"}) {
            const RootSystem rs = rs_of(name);
            const auto w = enumerate_weyl(rs, all_nodes(rs));
            for (const auto& p : all_parabolic_subsets(rs.rank())) {
                CAPTURE(name);
                CAPTURE(p.to_string());
                const BettiTable t = coset_length_counts(w, p);
                CHECK(t.is_palindromic());
                CHECK(static_cast<std::size_t>(t.total()) * enumerate_weyl(rs, p).size() == w.size());
            }
        }
    }

    TEST_CASE("known Schubert tables")
    {
        const RootSystem a2 = rs_of("A2");
        CHECK(coset_length_counts(a2, ParabolicSubset{}).to_string() == "[1,2,2,1]");
        const RootSystem a3 = rs_of("A3");
        CHECK(coset_length_counts(a3, ParabolicSubset{{1, 3}}).dims == std::vector<long>{1, 1, 2, 1, 1});
        CHECK(coset_length_counts(a3, ParabolicSubset{{2, 3}}).dims == std::vector<long>{1, 1, 1, 1});
        CHECK(coset_length_counts(a3, ParabolicSubset{{3}}).dims == std::vector<long>{1, 2, 3, 3, 2, 1});
    }
}
