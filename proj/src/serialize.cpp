#include "flagcoh/serialize.hpp"

namespace flagcoh {

json to_json(const RootSystem& rs)
{
    json j;
    j["type"] = rs.cartan_type.name();
    j["rank"] = rs.rank();
    json cartan = json::array();
    json gram = json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        json crow = json::array();
        json grow = json::array();
        for (int k = 0; k < rs.rank(); ++k) {
            crow.push_back(rs.cartan(i, k));
            grow.push_back(rs.gram(i, k).get_str());
        }
        cartan.push_back(crow);
        gram.push_back(grow);
    }
    j["cartan"] = cartan;
    j["symmetrizers"] = rs.symmetrizers;
    j["gram"] = gram;
    j["positive_roots"] = rs.positive_roots;
    return j;
}

json to_json(const BettiTable& t) { return t.dims; }

json to_json(const GenerationReport& r)
{
    json j;
    j["holds"] = r.holds;
    j["first_failing_degree"] = r.first_failing_degree ? json(*r.first_failing_degree) : json(nullptr);
    j["deficit"] = r.deficit ? json(*r.deficit) : json(nullptr);
    j["generated_dims"] = r.generated_dims;
    return j;
}

json to_json(const ReductionCertificate& c)
{
    json j;
    j["alpha"] = c.alpha;
    j["a"] = c.a.get_str();
    json pairs = json::array();
    for (const auto& t : c.pairs) {
        json coords = json::array();
        for (const auto& x : t.beta)
            coords.push_back(x.get_str());
        pairs.push_back({{"b", t.b.get_str()}, {"beta", to_text(Polynomial::linear_form(t.beta))}, {"coords", coords}});
    }
    j["pairs"] = pairs;
    j["q"] = to_text(c.q);
    j["alpha_squared_mod_invariants"] = to_text(c.alpha_square_residue());
    return j;
}

namespace grassmann {

json to_json(const LHElement& e)
{
    json terms = json::array();
    for (const auto& [exp, c] : e.poly.terms())
        terms.push_back({{"h", exp[0]}, {"d", exp[1]}, {"c", c.get_str()}});
    return {{"n", e.n}, {"terms", terms}};
}

LHElement lh_element_from_json(const json& j)
{
    LHElement e;
    e.n = j.at("n").get<int>();
    for (const auto& t : j.at("terms"))
        e.poly.add_term({t.at("h").get<int>(), t.at("d").get<int>()}, parse_rational(t.at("c").get<std::string>()));
    return e;
}

json to_json(const SchubertSum& s)
{
    json terms = json::array();
    for (const auto& [p, c] : s.terms)
        terms.push_back({{"a", p.a}, {"b", p.b}, {"coef", c}});
    return {{"terms", terms}};
}

SchubertSum schubert_sum_from_json(const json& j, int n)
{
    SchubertSum s;
    for (const auto& t : j.at("terms"))
        s.add(Partition2::make(n, t.at("a").get<int>(), t.at("b").get<int>()), t.at("coef").get<long>());
    return s;
}

}  // namespace grassmann

}  // namespace flagcoh
