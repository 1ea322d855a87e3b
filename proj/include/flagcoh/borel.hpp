#pragma once

#include "flagcoh/coinvariant.hpp"
#include "flagcoh/invariants.hpp"

#include <optional>
#include <vector>

namespace flagcoh {

/// Whether H*(G/P) is generated as a Q-algebra by H^2.
struct GenerationReport {
    bool holds = true;
    std::optional<int> first_failing_degree;
    std::optional<long> deficit;
    std::vector<long> generated_dims;  // dim of the subalgebra generated by H^2, per degree
};

/// Witness that alpha^2 lies in Sym(alpha^perp) modulo the W-invariant
/// quadric: q = a * alpha^2 + sum b_i * beta_i^2 with the beta_i an
/// orthogonal basis of alpha^perp.
struct ReductionCertificate {
    struct Term {
        Rational b;
        std::vector<Rational> beta;  // coordinates in the simple-root basis
    };

    int alpha = 1;  // 1-based node
    Rational a;
    std::vector<Term> pairs;
    Polynomial q;

    /// a * alpha^2 + sum b_i beta_i^2, which must equal q.
    Polynomial reconstruction() const;

    /// The right-hand side of alpha^2 = -sum (b_i / a) beta_i^2 mod (S^W_+).
    Polynomial alpha_square_residue() const;
};

/// dim_C G/P: positive roots outside the span of the defining simple roots.
int complex_dimension(const RootSystem& rs, const ParabolicSubset& p);

/// Graded dimensions of S^{W_P} / (S^W_+) for 0 <= d <= dim_C G/P.
///
/// The quotient is evaluated as the W_P-fixed part of the coinvariant
/// algebra S / (S^W_+) S; averaging over W_P identifies the two.
BettiTable betti_numbers(const RootSystem& rs, const ParabolicSubset& p);

/// dim (S^{W_P} / (S^W_+))_d for any d up to |Phi+| + 1.
long quotient_dimension(const RootSystem& rs, const ParabolicSubset& p, int d);

/// Borel presentation against the Schubert-cell count.
bool cross_check_betti(const RootSystem& rs, const ParabolicSubset& p, std::size_t cap = kDefaultWeylCap);

/// Tests whether the degree-1 part of S^{W_P} / (S^W_+) generates it.
GenerationReport degree2_generation_check(const RootSystem& rs, const ParabolicSubset& p);

/// The W-invariant quadric used by certificates: the smallest positive
/// integral multiple of sum_ij (gram^-1)_ij alpha_i alpha_j.
Polynomial invariant_quadric(const RootSystem& rs);

/// Orthogonal basis of alpha_node^perp by exact Gram-Schmidt (no square
/// roots), then the expansion of invariant_quadric in alpha and that basis.
ReductionCertificate alpha_square_reduction(const RootSystem& rs, int alpha_node);

/// Checks every invariant of a certificate: orthogonality, reconstruction,
/// W-invariance of q and W_alpha-invariance of the beta_i.
bool validate_certificate(const RootSystem& rs, const ReductionCertificate& cert);

}  // namespace flagcoh
