// Command-line front end for the flag-variety cohomology library.

#include "flagcoh/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace flagcoh;

namespace {

constexpr int kExitUsage = 2;

struct Options {
    bool json_output = false;
    std::string cache_dir;
    std::string type;
    std::string gens;
    std::string parabolic;
    int node = 1;
    int n = 1;
    int max_rank = 4;
};

std::string join(const std::vector<long>& v)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? " " : "") << v[i];
    return out.str();
}

void emit(const Options& o, const json& j, const std::string& text)
{
    if (o.json_output)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_roots(const Options& o)
{
    const RootSystem rs = build_root_system(parse_cartan_type(o.type));
    std::ostringstream out;
    out << rs.cartan_type.name() << ": " << rs.num_positive_roots() << " positive roots (simple-root coordinates)\n";
    for (const auto& r : rs.positive_roots) {
        out << " ";
        for (auto x : r)
            out << " " << x;
        out << "\n";
    }
    out << "gram:\n";
    for (int i = 0; i < rs.rank(); ++i) {
        out << " ";
        for (int j = 0; j < rs.rank(); ++j)
            out << " " << rs.gram(i, j).get_str();
        out << "\n";
    }
    emit(o, to_json(rs), out.str());
    return 0;
}

int cmd_weyl(const Options& o)
{
    const RootSystem rs = build_root_system(parse_cartan_type(o.type));
    const ParabolicSubset gens = o.gens.empty() ? all_nodes(rs) : parse_parabolic(o.gens, rs.rank());
    const auto w = enumerate_weyl(rs, gens);
    std::vector<long> hist;
    for (const auto& e : w) {
        if (hist.size() <= e.length())
            hist.resize(e.length() + 1, 0);
        ++hist[e.length()];
    }
    std::ostringstream out;
    out << "type " << rs.cartan_type.name() << ", generators {" << gens.to_string() << "}" << "\n"
        << "order " << w.size() << "\n"
        << "lengths " << join(hist) << "\n";
    emit(o, {{"type", rs.cartan_type.name()}, {"generators", gens.nodes}, {"order", w.size()}, {"lengths", hist}},
         out.str());
    return 0;
}

int cmd_betti(const Options& o)
{
    const RootSystem rs = build_root_system(parse_cartan_type(o.type));
    const ParabolicSubset p = parse_parabolic(o.parabolic, rs.rank());
    const BettiTable borel = betti_numbers(rs, p);
    const BettiTable schubert = coset_length_counts(rs, p);
    const bool match = borel == schubert;

    std::ostringstream out;
    out << "type " << rs.cartan_type.name() << ", parabolic {" << p.to_string() << "}" << ", dim_C "
        << complex_dimension(rs, p) << "\n";
    out << "degree  borel  schubert\n";
    for (std::size_t d = 0; d < std::max(borel.dims.size(), schubert.dims.size()); ++d) {
        auto cell = [d](const BettiTable& t) { return d < t.dims.size() ? std::to_string(t.dims[d]) : "-"; };
        out << std::setw(6) << 2 * d << "  " << std::setw(5) << cell(borel) << "  " << std::setw(8) << cell(schubert)
            << "\n";
    }
    out << (match ? "MATCH" : "MISMATCH") << " " << borel.to_string() << "\n";
    emit(o,
         {{"type", rs.cartan_type.name()},
          {"parabolic", p.nodes},
          {"borel", to_json(borel)},
          {"schubert", to_json(schubert)},
          {"verdict", match ? "MATCH" : "MISMATCH"}},
         out.str());
    return 0;
}

int cmd_check_gen2(const Options& o)
{
    const RootSystem rs = build_root_system(parse_cartan_type(o.type));
    const ParabolicSubset p = parse_parabolic(o.parabolic, rs.rank());
    const GenerationReport r = degree2_generation_check(rs, p);
    std::vector<long> full;
    for (int d = 0; d <= complex_dimension(rs, p); ++d)
        full.push_back(quotient_dimension(rs, p, d));

    std::ostringstream out;
    out << "type " << rs.cartan_type.name() << ", parabolic {" << p.to_string() << "}" << "\n"
        << "generated by H^2: " << join(r.generated_dims) << "\n"
        << "full:             " << join(full) << "\n";
    if (r.holds)
        out << "holds\n";
    else
        out << "fails at degree " << *r.first_failing_degree << " with deficit " << *r.deficit << "\n";
    json j = to_json(r);
    j["type"] = rs.cartan_type.name();
    j["parabolic"] = p.nodes;
    emit(o, j, out.str());
    return 0;
}

int cmd_reduce_alpha2(const Options& o)
{
    const RootSystem rs = build_root_system(parse_cartan_type(o.type));
    const ReductionCertificate c = alpha_square_reduction(rs, o.node);
    const bool valid = validate_certificate(rs, c);

    std::ostringstream out;
    out << "type " << rs.cartan_type.name() << ", alpha = a" << c.alpha << "\n"
        << "q = " << to_text(c.q) << "\n"
        << "a = " << c.a.get_str() << "\n";
    for (const auto& t : c.pairs)
        out << "b = " << t.b.get_str() << "  beta = " << to_text(Polynomial::linear_form(t.beta)) << "\n";
    out << "a" << c.alpha << "^2 = " << to_text(c.alpha_square_residue()) << "  mod invariants\n"
        << (valid ? "certificate valid" : "certificate INVALID") << "\n";
    json j = to_json(c);
    j["type"] = rs.cartan_type.name();
    j["valid"] = valid;
    emit(o, j, out.str());
    return valid ? 0 : 1;
}

int cmd_example(const Options& o)
{
    using namespace grassmann;
    const int n = o.n;
    const auto chern = chern_classes_twisted_cotangent(2 * n + 1);
    const Polynomial f = leray_hirsch_relation(n);
    const Polynomial f0 = factor_relation(n);
    const int eps = identify_fiber_class(n);
    const bool annihilated = alternating_sum_annihilated(n);
    const LHElement fiber = ring_reduce(n, f0);

    json c = json::array();
    std::ostringstream cs;
    for (std::size_t i = 0; i < chern.size(); ++i) {
        c.push_back(chern[i].get_str());
        cs << (i ? "," : "") << chern[i].get_str();
    }
    std::ostringstream alt;
    for (const auto& [p, coef] : alternating_sum(n).terms)
        alt << (coef < 0 ? " - " : " + ") << "S[" << p.a << "," << p.b << "]";

    std::ostringstream out;
    out << "n = " << n << ": lines in planes in C^" << 2 * n + 2 << "\n"
        << "chern classes of Omega(2) on P^" << 2 * n + 1 << ": [" << cs.str() << "]\n"
        << "f  = " << to_text_hd(f) << "\n"
        << "f0 = " << to_text_hd(f0) << "\n"
        << "alternating sum:" << alt.str() << "\n"
        << "sigma_1 * alternating sum = 0: " << (annihilated ? "yes" : "no") << "\n"
        << "f0 = " << (eps > 0 ? "+" : "-") << "1 * pullback(alternating sum)\n";
    emit(o,
         {{"n", n},
          {"chern", c},
          {"f", to_text_hd(f)},
          {"f0", to_text_hd(f0)},
          {"fiber_class", to_json(fiber)},
          {"alternating_sum", to_json(alternating_sum(n))},
          {"annihilated", annihilated},
          {"epsilon", eps}},
         out.str());
    return 0;
}

int cmd_verify_all(const Options& o)
{
    const VerifyReport r = run_verify_all(o.max_rank);
    emit(o, to_json(r), to_text(r));
    return exit_code(r);
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Cohomology of generalized flag varieties G/P: Borel presentation, Schubert cells, degree-2 "
                 "generation and the lines-in-planes example."};
    app.require_subcommand(1);
    app.add_flag("--json", o.json_output, "Machine-readable JSON output");
    app.add_option("--cache-dir", o.cache_dir, "Directory for cached invariant bases (overrides FLAGCOH_CACHE)");

    const std::string parabolic_help =
        "DEFINING simple roots of the parabolic subgroup P, 1-based Bourbaki nodes, e.g. 1,3. "
        "P is generated by the Borel subgroup and the root groups of these nodes, so the empty list "
        "is the Borel subgroup (full flag variety G/B) and a single node is a minimal parabolic.";

    auto add_type = [&o](CLI::App* sub) {
        sub->add_option("--type", o.type, "Cartan type: A1.., B2.., C3.., D4.., E6-E8, F4, G2")->required();
    };

    auto* roots = app.add_subcommand("roots", "Positive roots and gram matrix");
    add_type(roots);

    auto* weyl = app.add_subcommand("weyl", "Order and length histogram of a (parabolic) Weyl group");
    add_type(weyl);
    weyl->add_option("--gens", o.gens, "Nodes of the generating reflections (default: all)");

    auto* betti = app.add_subcommand("betti", "Betti numbers of G/P from the Borel presentation and Schubert cells");
    add_type(betti);
    betti->add_option("--parabolic", o.parabolic, parabolic_help)->required()->expected(0, 1);

    auto* gen2 = app.add_subcommand("check-gen2", "Whether H*(G/P) is generated by H^2");
    add_type(gen2);
    gen2->add_option("--parabolic", o.parabolic, parabolic_help)->required()->expected(0, 1);

    auto* reduce = app.add_subcommand("reduce-alpha2", "Express alpha^2 through alpha^perp modulo the invariant quadric");
    add_type(reduce);
    reduce->add_option("--node", o.node, "Simple root alpha, 1-based node")->required();

    auto* example = app.add_subcommand("example", "Flag of lines in planes in C^{2n+2} as P(Omega(2)) over P^{2n+1}");
    example->add_option("--n", o.n, "n >= 1")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify-all", "Run the full acceptance suite; exit 0 iff all pass");
    verify->add_option("--max-rank", o.max_rank, "Largest rank in the type sweep")->check(CLI::Range(1, 6));

    // Global flags are accepted before or after the subcommand.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->add_flag("--json", o.json_output, "Machine-readable JSON output");
        sub->add_option("--cache-dir", o.cache_dir, "Directory for cached invariant bases (overrides FLAGCOH_CACHE)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (!o.cache_dir.empty())
        setenv("FLAGCOH_CACHE", o.cache_dir.c_str(), 1);

    try {
        if (*roots)
            return cmd_roots(o);
        if (*weyl)
            return cmd_weyl(o);
        if (*betti)
            return cmd_betti(o);
        if (*gen2)
            return cmd_check_gen2(o);
        if (*reduce)
            return cmd_reduce_alpha2(o);
        if (*example)
            return cmd_example(o);
        return cmd_verify_all(o);
    } catch (const InvalidCartanType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NodeOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
