#pragma once

#include "flagcoh/matrix.hpp"
#include "flagcoh/rational.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace flagcoh {

class InvalidCartanType : public Error {
public:
    using Error::Error;
};

class NodeOutOfRange : public Error {
public:
    using Error::Error;
};

struct CartanType {
    char family = 'A';  // one of A..G, upper case
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Parses "A2", "f4", ... and validates the family/rank combination.
CartanType parse_cartan_type(const std::string& text);

/// Throws InvalidCartanType unless ct names a simple type.
void validate(const CartanType& ct);

using IntVector = std::vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;

/// Set of defining simple roots of a parabolic subgroup, 1-based. The empty
/// set is the Borel subgroup; a single node is a minimal parabolic.
struct ParabolicSubset {
    std::set<int> nodes;

    std::string to_string() const;
    friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;
};

/// Parses "1,3" (empty string = Borel).
ParabolicSubset parse_parabolic(const std::string& text, int rank);

/// Every subset of {1..rank}, ordered by bitmask.
std::vector<ParabolicSubset> all_parabolic_subsets(int rank);

/// Crystallographic root system of a simple type. All vectors are written in
/// the basis of simple roots, so alpha_i is the i-th unit vector.
///
/// Convention: cartan(i,j) = <alpha_j, alpha_i^vee>, and
/// s_i(alpha_j) = alpha_j - cartan(i,j) alpha_i.
struct RootSystem {
    CartanType cartan_type;
    IntMatrix cartan;
    IntVector symmetrizers;
    RationalMatrix gram;  // gram(i,j) = d_i * cartan(i,j) = (alpha_i, alpha_j)
    std::vector<IntVector> positive_roots;

    int rank() const { return cartan_type.rank; }
    std::size_t num_positive_roots() const { return positive_roots.size(); }

    /// Gram inner product of two coordinate vectors.
    Rational inner(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

    /// True if v or -v is a positive root.
    bool is_root(const IntVector& v) const;
};

RootSystem build_root_system(const CartanType& ct);

/// Matrix of s_i on t*_Q acting on column coordinate vectors; i is 1-based.
RationalMatrix simple_reflection_matrix(const RootSystem& rs, int i);

/// Same matrix with integer entries.
IntMatrix simple_reflection_int(const RootSystem& rs, int i);

RationalMatrix invariant_gram(const RootSystem& rs);

IntVector apply(const IntMatrix& m, const IntVector& v);
bool is_positive(const IntVector& v);
bool is_negative(const IntVector& v);

}  // namespace flagcoh
