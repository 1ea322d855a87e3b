#pragma once

#include "flagcoh/rootsys.hpp"

#include <cstddef>
#include <vector>

namespace flagcoh {

class GroupTooLarge : public Error {
public:
    using Error::Error;
};

class NotAWeylElement : public Error {
public:
    using Error::Error;
};

/// |W(E6)|; E7 and E8 are refused unless the caller raises the cap.
inline constexpr std::size_t kDefaultWeylCap = 51840;

struct WeylElement {
    IntMatrix matrix;       // action on t*_Q in simple-root coordinates
    std::vector<int> word;  // lexicographically minimal reduced word, 1-based nodes

    std::size_t length() const { return word.size(); }
};

/// Graded dimensions: dims[d] = dim H^{2d}.
struct BettiTable {
    std::vector<long> dims;

    long total() const;
    bool is_palindromic() const;
    std::string to_string() const;
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Breadth-first enumeration of the subgroup generated by the reflections in
/// gens (all nodes gives W). Ordered by length, then by reduced word;
/// the identity comes first.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, const ParabolicSubset& gens,
                                        std::size_t cap = kDefaultWeylCap);

/// Number of positive roots sent to negative roots. Throws NotAWeylElement if
/// the matrix does not permute the root system.
std::size_t length(const RootSystem& rs, const IntMatrix& w);

/// True if w is the shortest element of its coset w W_P, tested by
/// w(alpha_i) > 0 for every i in P.
bool is_minimal_coset_representative(const IntMatrix& w, const ParabolicSubset& p);

/// Schubert-cell count: minimal coset representatives of W/W_P by length.
BettiTable coset_length_counts(const RootSystem& rs, const ParabolicSubset& p,
                               std::size_t cap = kDefaultWeylCap);

/// Same count from an already enumerated W.
BettiTable coset_length_counts(const std::vector<WeylElement>& w, const ParabolicSubset& p);

ParabolicSubset all_nodes(const RootSystem& rs);

}  // namespace flagcoh
