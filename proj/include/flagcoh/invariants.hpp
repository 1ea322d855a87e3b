#pragma once

#include "flagcoh/polynomial.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace flagcoh {

/// Linearly independent homogeneous polynomials of one degree.
struct GradedBasis {
    int degree = 0;
    std::vector<Polynomial> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// On-disk store of invariant bases keyed by (type, generators, degree), one
/// polynomial per line in the text format.
class InvariantCache {
public:
    explicit InvariantCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// Cache rooted at $FLAGCOH_CACHE, or nullopt when the variable is unset.
    static std::optional<InvariantCache> from_environment();

    std::optional<GradedBasis> load(const RootSystem& rs, const ParabolicSubset& gens, int degree) const;
    void store(const RootSystem& rs, const ParabolicSubset& gens, const GradedBasis& basis) const;

    std::filesystem::path path_for(const RootSystem& rs, const ParabolicSubset& gens, int degree) const;

private:
    std::filesystem::path dir_;
};

/// Basis of {p in S_degree : s_i p = p for all i in gens}, computed as the
/// joint kernel of (s_i - 1) on the degree-d coefficient space. Consults the
/// cache from the environment.
GradedBasis invariant_subspace(const RootSystem& rs, const ParabolicSubset& gens, int degree);

GradedBasis invariant_subspace(const RootSystem& rs, const ParabolicSubset& gens, int degree,
                               const InvariantCache* cache);

/// Matrix of s_node on S_degree in the monomial basis (columns are images).
RationalMatrix reflection_on_degree(const RootSystem& rs, int node, const MonomialIndex& index);

/// Dimension of the degree-d part of the ideal of S^{W_P} generated by the
/// positive-degree W-invariants, as the span of all products f * g with
/// f in S^W_e (e >= 1) and g in S^{W_P}_{d-e}.
std::size_t ideal_graded_dimension(const RootSystem& rs, const ParabolicSubset& p, int degree);

}  // namespace flagcoh
