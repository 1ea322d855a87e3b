#pragma once

#include "flagcoh/polynomial.hpp"

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace flagcoh {

using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// The coinvariant algebra S / (S^W_+) truncated at a maximal degree, held as
/// normal forms with respect to the graded reverse lexicographic order.
///
/// Degree by degree, the ideal is the span of S_1 times the previous degree
/// plus the W-invariant classes that appear in the new degree; those classes
/// are found as the joint kernel of (s_i - 1) acting on the current quotient.
/// Standard monomials form an order ideal, so every product needed later is a
/// standard monomial of one degree lower times a variable.
class CoinvariantAlgebra {
public:
    CoinvariantAlgebra(const RootSystem& rs, int max_degree);

    int rank() const { return rank_; }
    int max_degree() const { return max_degree_; }

    /// dim (S/(S^W_+))_d; zero beyond max_degree is not implied.
    std::size_t dimension(int d) const { return standard_[d].size(); }
    const std::vector<Exponent>& standard_monomials(int d) const { return standard_[d]; }

    /// Normal form of x_var * t, t the index-th standard monomial of degree d-1.
    const SparseVector& times_variable(int d, std::size_t index, int var) const { return mult_[d][index][var]; }

    /// Matrix of s_node (1-based) on degree d in the standard-monomial basis.
    const RationalMatrix& reflection_action(int node, int d) const { return action_[node - 1][d]; }

    /// Product of a degree-d class with a linear form, as a degree-(d+1) class.
    Vector multiply_linear(int d, const Vector& cls, const std::vector<Rational>& linear) const;

    /// Normal form of a homogeneous polynomial, as coordinates over the
    /// standard monomials of its degree.
    Vector normal_form(const Polynomial& p) const;

    /// Degrees (with multiplicity) in which new W-invariant generators were met.
    const std::vector<int>& generator_degrees() const { return generator_degrees_; }

private:
    void extend(const RootSystem& rs, int d);

    int rank_;
    int max_degree_;
    std::vector<std::vector<Exponent>> standard_;
    std::vector<std::vector<std::vector<SparseVector>>> mult_;
    std::vector<std::vector<RationalMatrix>> action_;  // [node-1][degree]
    std::vector<int> generator_degrees_;
};

/// Shared, lazily built coinvariant algebra of rs up to degree |Phi+| + 1.
std::shared_ptr<const CoinvariantAlgebra> coinvariants_for(const RootSystem& rs);

/// Dimension of the joint fixed space of s_i (i in nodes) on a degree-d
/// piece of the coinvariant algebra.
std::size_t fixed_dimension(const CoinvariantAlgebra& a, const ParabolicSubset& nodes, int d);

/// Basis of that fixed space.
std::vector<Vector> fixed_subspace(const CoinvariantAlgebra& a, const ParabolicSubset& nodes, int d);

}  // namespace flagcoh
