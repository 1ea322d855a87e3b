#include "flagcoh/invariants.hpp"

#include <cstdlib>
#include <fstream>

namespace flagcoh {

std::optional<InvariantCache> InvariantCache::from_environment()
{
    const char* dir = std::getenv("FLAGCOH_CACHE");
    if (dir == nullptr || *dir == '\0')
        return std::nullopt;
    return InvariantCache(dir);
}

std::filesystem::path InvariantCache::path_for(const RootSystem& rs, const ParabolicSubset& gens, int degree) const
{
    std::string g = gens.to_string();
    for (auto& c : g)
        if (c == ',')
            c = '-';
    return dir_ / (rs.cartan_type.name() + "_g" + (g.empty() ? "none" : g) + "_d" + std::to_string(degree) + ".txt");
}

std::optional<GradedBasis> InvariantCache::load(const RootSystem& rs, const ParabolicSubset& gens, int degree) const
{
    std::ifstream in(path_for(rs, gens, degree));
    if (!in)
        return std::nullopt;
    GradedBasis b;
    b.degree = degree;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            b.basis.push_back(parse_polynomial(line, rs.rank()));
    return b;
}

void InvariantCache::store(const RootSystem& rs, const ParabolicSubset& gens, const GradedBasis& basis) const
{
    std::filesystem::create_directories(dir_);
    const auto target = path_for(rs, gens, basis.degree);
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        for (const auto& p : basis.basis)
            out << to_text(p) << '\n';
    }
    std::filesystem::rename(tmp, target);
}

RationalMatrix reflection_on_degree(const RootSystem& rs, int node, const MonomialIndex& index)
{
    const IntMatrix s = simple_reflection_int(rs, node);
    RationalMatrix m(index.size(), index.size());
    for (std::size_t c = 0; c < index.size(); ++c) {
        const Polynomial image = poly_weyl_action(s, Polynomial::monomial(index.basis()[c]));
        for (const auto& [e, coef] : image.terms())
            m(index.index(e), c) = coef;
    }
    return m;
}

GradedBasis invariant_subspace(const RootSystem& rs, const ParabolicSubset& gens, int degree,
                               const InvariantCache* cache)
{
    if (cache) {
        if (auto hit = cache->load(rs, gens, degree))
            return *hit;
    }

    const MonomialIndex index(rs.rank(), degree);
    const std::size_t n = index.size();
    std::vector<Vector> rows;
    for (int node : gens.nodes) {
        const RationalMatrix m = reflection_on_degree(rs, node, index);
        for (std::size_t r = 0; r < n; ++r) {
            Vector row(n);
            for (std::size_t c = 0; c < n; ++c)
                row[c] = m(r, c);
            row[r] -= 1;
            if (!is_zero(row))
                rows.push_back(std::move(row));
        }
    }

    GradedBasis out;
    out.degree = degree;
    for (const auto& v : nullspace(rows, n))
        out.basis.push_back(index.polynomial(v));

    if (cache)
        cache->store(rs, gens, out);
    return out;
}

GradedBasis invariant_subspace(const RootSystem& rs, const ParabolicSubset& gens, int degree)
{
    const auto cache = InvariantCache::from_environment();
    return invariant_subspace(rs, gens, degree, cache ? &*cache : nullptr);
}

std::size_t ideal_graded_dimension(const RootSystem& rs, const ParabolicSubset& p, int degree)
{
    const ParabolicSubset everything = all_nodes(rs);
    std::vector<Polynomial> products;
    for (int e = 1; e <= degree; ++e) {
        const GradedBasis f = invariant_subspace(rs, everything, e);
        if (f.basis.empty())
            continue;
        const GradedBasis g = invariant_subspace(rs, p, degree - e);
        for (const auto& fi : f.basis)
            for (const auto& gj : g.basis)
                products.push_back(fi * gj);
    }
    return span_dimension(products, degree);
}

}  // namespace flagcoh
