#include "flagcoh/verify.hpp"

#include <functional>
#include <sstream>

namespace flagcoh {

namespace {

long factorial(int n)
{
    long f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

long classical_weyl_order(const CartanType& ct)
{
    const int n = ct.rank;
    switch (ct.family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1L << n) * factorial(n);
    case 'D': return (1L << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840L : n == 7 ? 2903040L : 696729600L;
    case 'F': return 1152;
    default: return 12;
    }
}

long classical_positive_roots(const CartanType& ct)
{
    const long n = ct.rank;
    switch (ct.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
    }
}

// Runs body, turning an exception into a failed case.
void guarded(CriterionResult& c, const std::string& name, const std::function<void()>& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        c.check(false, name, "no error", std::string("error: ") + e.what());
    }
}

std::string case_name(const RootSystem& rs, const ParabolicSubset& p)
{
    return rs.cartan_type.name() + " P={" + p.to_string() + "}";
}

// Coefficients of prod 1 / (1 - t^d) up to max_degree.
std::vector<long> invariant_hilbert_series(const std::vector<int>& degrees, int max_degree)
{
    std::vector<long> h(max_degree + 1, 0);
    h[0] = 1;
    for (int d : degrees)
        for (int k = d; k <= max_degree; ++k)
            h[k] += h[k - d];
    return h;
}

void root_system_properties(CriterionResult& c, const RootSystem& rs)
{
    const std::string name = rs.cartan_type.name();
    c.check(static_cast<long>(rs.num_positive_roots()) == classical_positive_roots(rs.cartan_type),
            name + " positive roots", classical_positive_roots(rs.cartan_type), rs.num_positive_roots());
    const RationalMatrix g = invariant_gram(rs);
    for (int i = 1; i <= rs.rank(); ++i) {
        const RationalMatrix s = simple_reflection_matrix(rs, i);
        const std::string node = name + " s" + std::to_string(i);
        c.check(s * s == RationalMatrix::identity(rs.rank()), node + " involution", true, false);
        c.check(s.transpose() * g * s == g, node + " preserves gram", true, false);
        for (const auto& beta : rs.positive_roots)
            if (!rs.is_root(flagcoh::apply(simple_reflection_int(rs, i), beta)))
                c.check(false, node + " permutes roots", true, false);
    }
}

void parabolic_properties(CriterionResult& c, const RootSystem& rs, long order)
{
    const auto a = coinvariants_for(rs);
    const auto& degrees = a->generator_degrees();
    long product = 1;
    long exponents = 0;
    for (int d : degrees) {
        product *= d;
        exponents += d - 1;
    }
    const std::string name = rs.cartan_type.name();
    c.check(static_cast<int>(degrees.size()) == rs.rank(), name + " number of basic invariants", rs.rank(),
            degrees.size());
    c.check(product == order, name + " product of invariant degrees", order, product);
    c.check(exponents == static_cast<long>(rs.num_positive_roots()), name + " sum of exponents",
            rs.num_positive_roots(), exponents);

    for (const auto& p : all_parabolic_subsets(rs.rank())) {
        const BettiTable t = betti_numbers(rs, p);
        const long sub = static_cast<long>(enumerate_weyl(rs, p).size());
        const std::string cname = case_name(rs, p);
        c.check(t.is_palindromic(), cname + " palindromic", true, to_json(t));
        c.check(t.total() * sub == order, cname + " total rank", order / sub, t.total());
        c.check(static_cast<int>(t.dims.size()) == complex_dimension(rs, p) + 1 && t.dims.front() == 1 &&
                    t.dims.back() == 1,
                cname + " unit in degrees 0 and top", true, to_json(t));
    }
}

void invariant_ring_properties(CriterionResult& c, const RootSystem& rs)
{
    const int top = 6;
    const auto h = invariant_hilbert_series(coinvariants_for(rs)->generator_degrees(), top);
    const auto cache = InvariantCache::from_environment();
    for (int d = 0; d <= top; ++d) {
        const long dim =
            static_cast<long>(invariant_subspace(rs, all_nodes(rs), d, cache ? &*cache : nullptr).dimension());
        c.check(dim == h[d], rs.cartan_type.name() + " dim S^W_" + std::to_string(d), h[d], dim);
    }
}

void grassmann_properties(CriterionResult& c)
{
    using namespace grassmann;
    // Normal-form monomials against the flag of lines in planes in C^4.
    const RootSystem a3 = build_root_system({'A', 3});
    const BettiTable flag = betti_numbers(a3, ParabolicSubset{{3}});
    const auto lh = normal_form_graded_dimensions(1);
    c.check(lh == flag.dims, "LH normal form n=1 vs A3 P={3}", to_json(flag), lh);

    for (int n = 1; n <= 3; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        for (int a = 0; a <= 2 * n; ++a)
            for (int b = 0; b <= a; ++b) {
                SchubertSum s;
                s.add(Partition2::make(n, a, b), 1);
                const std::string cls = tag + " S[" + std::to_string(a) + "," + std::to_string(b) + "]";
                const LHElement img = giambelli_pullback(n, s);
                c.check(ring_reduce(n, img.poly) == img, cls + " ring_reduce idempotent", true, false);
                const LHElement lhs = giambelli_pullback(n, pieri_multiply(n, s));
                const LHElement rhs = ring_reduce(n, img.poly * D());
                c.check(lhs == rhs, cls + " Pieri vs multiplication by D", to_json(rhs), to_json(lhs));
                c.check(lh_element_from_json(to_json(img)) == img, cls + " JSON round trip", true, false);
                c.check(schubert_sum_from_json(to_json(s), n) == s, cls + " Schubert JSON round trip", true, false);
            }
        c.check(ring_reduce(n, leray_hirsch_relation(n)).is_zero(), tag + " f vanishes", true, false);
    }
}

}  // namespace

void CriterionResult::check(bool ok, const std::string& name, json expected, json actual)
{
    ++cases;
    if (!ok)
        diff.push_back({{"case", name}, {"expected", std::move(expected)}, {"actual", std::move(actual)}});
}

bool VerifyReport::passed() const
{
    for (const auto& c : criteria)
        if (!c.passed())
            return false;
    return true;
}

std::vector<CartanType> sweep_types(int max_rank)
{
    std::vector<CartanType> out;
    for (char family : std::string("ABCDEFG"))
        for (int r = 1; r <= max_rank; ++r) {
            const CartanType ct{family, r};
            try {
                validate(ct);
            } catch (const InvalidCartanType&) {
                continue;
            }
            out.push_back(ct);
        }
    return out;
}

CriterionResult check_borel_schubert(int max_rank)
{
    CriterionResult c{1, "Borel presentation equals Schubert-cell count, every type and parabolic", 0, json::array()};
    for (const auto& ct : sweep_types(max_rank)) {
        guarded(c, ct.name(), [&] {
            const RootSystem rs = build_root_system(ct);
            const auto w = enumerate_weyl(rs, all_nodes(rs));
            for (const auto& p : all_parabolic_subsets(rs.rank())) {
                const BettiTable borel = betti_numbers(rs, p);
                const BettiTable schubert = coset_length_counts(w, p);
                c.check(borel == schubert, case_name(rs, p), to_json(schubert), to_json(borel));
            }
        });
    }
    return c;
}

CriterionResult check_generation(int max_rank)
{
    CriterionResult c{2, "Minimal parabolics generated in degree 2, alpha^2 certificates valid", 0, json::array()};
    for (const auto& ct : sweep_types(max_rank)) {
        guarded(c, ct.name(), [&] {
            const RootSystem rs = build_root_system(ct);
            for (int node = 1; node <= rs.rank(); ++node) {
                const ParabolicSubset p{{node}};
                const GenerationReport r = degree2_generation_check(rs, p);
                c.check(r.holds, case_name(rs, p) + " generation", true, to_json(r));
                const ReductionCertificate cert = alpha_square_reduction(rs, node);
                c.check(validate_certificate(rs, cert), ct.name() + " alpha_" + std::to_string(node) + " certificate",
                        true, to_json(cert));
            }
        });
    }
    return c;
}

CriterionResult check_negative_control()
{
    CriterionResult c{3, "Gr(2,4) (A3, P={1,3}) fails generation in degree 2 with deficit 1", 0, json::array()};
    guarded(c, "A3 P={1,3}", [&] {
        const RootSystem rs = build_root_system({'A', 3});
        const GenerationReport r = degree2_generation_check(rs, ParabolicSubset{{1, 3}});
        const json expected = {{"holds", false}, {"first_failing_degree", 2}, {"deficit", 1}};
        const json actual = {{"holds", r.holds},
                             {"first_failing_degree", to_json(r)["first_failing_degree"]},
                             {"deficit", to_json(r)["deficit"]}};
        c.check(actual == expected, "A3 P={1,3}", expected, actual);
    });
    return c;
}

CriterionResult check_example_suite()
{
    using namespace grassmann;
    CriterionResult c{4, "Lines-in-planes example: Chern classes, f = f0 D, annihilation, fiber class", 0,
                      json::array()};
    for (int n = 1; n <= 3; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        guarded(c, tag, [&] {
            const auto chern = chern_classes_twisted_cotangent(2 * n + 1);
            c.check(chern.back() == 0, "(a) " + tag + " top Chern class", "0", chern.back().get_str());
            const Polynomial f = leray_hirsch_relation(n);
            const Polynomial f0 = factor_relation(n);
            c.check(f0 * D() == f, "(b) " + tag + " f = f0 * D", to_text_hd(f), to_text_hd(f0 * D()));
            const int eps = identify_fiber_class(n);
            if (n == 1)
                c.check(eps == -1, "(e) n=1 sign", -1, eps);
            else
                c.check(eps == 1 || eps == -1, "(e) " + tag + " sign", "+1 or -1", eps);
            c.check(!ring_reduce(n, f0).is_zero(), "(f) " + tag + " f0 nonzero in the ring", true, false);
        });
    }
    for (int m : {2, 4}) {
        const auto chern = chern_classes_twisted_cotangent(m);
        c.check(chern.back() != 0, "(a) m=" + std::to_string(m) + " top Chern class nonzero", "nonzero",
                chern.back().get_str());
    }
    guarded(c, "(c)", [&] {
        const Polynomial expected = D() * D() - Rational(2) * H() * D() + Rational(2) * H() * H();
        const Polynomial f0 = factor_relation(1);
        c.check(f0 == expected, "(c) f0 for n=1", to_text_hd(expected), to_text_hd(f0));
    });
    for (int n = 1; n <= 4; ++n)
        c.check(alternating_sum_annihilated(n), "(d) n=" + std::to_string(n) + " sigma_1 kills alternating sum", true,
                false);
    return c;
}

CriterionResult check_weyl_orders(int max_rank)
{
    CriterionResult c{5, "Weyl group orders match the classical values", 0, json::array()};
    for (const auto& ct : sweep_types(max_rank)) {
        guarded(c, ct.name(), [&] {
            const RootSystem rs = build_root_system(ct);
            const long order = static_cast<long>(enumerate_weyl(rs, all_nodes(rs)).size());
            c.check(order == classical_weyl_order(ct), ct.name(), classical_weyl_order(ct), order);
        });
    }
    return c;
}

CriterionResult check_properties(int max_rank)
{
    CriterionResult c{6, "Property suites", 0, json::array()};
    for (const auto& ct : sweep_types(max_rank)) {
        guarded(c, ct.name(), [&] {
            const RootSystem rs = build_root_system(ct);
            root_system_properties(c, rs);
            parabolic_properties(c, rs, classical_weyl_order(ct));
            if (rs.rank() <= 2)
                invariant_ring_properties(c, rs);
        });
    }
    guarded(c, "grassmann", [&] { grassmann_properties(c); });
    return c;
}

VerifyReport run_verify_all(int max_rank)
{
    VerifyReport r;
    r.max_rank = max_rank;
    r.criteria.push_back(check_borel_schubert(max_rank));
    r.criteria.push_back(check_generation(max_rank));
    r.criteria.push_back(check_negative_control());
    r.criteria.push_back(check_example_suite());
    r.criteria.push_back(check_weyl_orders(max_rank));
    r.criteria.push_back(check_properties(max_rank));
    return r;
}

int exit_code(const VerifyReport& report) { return report.passed() ? 0 : 1; }

json to_json(const CriterionResult& c)
{
    return {{"id", c.id}, {"title", c.title}, {"passed", c.passed()}, {"cases", c.cases}, {"diff", c.diff}};
}

json to_json(const VerifyReport& r)
{
    json criteria = json::array();
    for (const auto& c : r.criteria)
        criteria.push_back(to_json(c));
    return {{"max_rank", r.max_rank}, {"passed", r.passed()}, {"criteria", criteria}};
}

std::string to_text(const VerifyReport& r)
{
    std::ostringstream out;
    for (const auto& c : r.criteria) {
        out << (c.passed() ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << " (" << c.cases << " cases)\n";
        if (!c.passed())
            out << "      diff: " << c.diff.dump() << "\n";
    }
    out << (r.passed() ? "all criteria passed" : "some criteria failed") << "\n";
    return out.str();
}

}  // namespace flagcoh
