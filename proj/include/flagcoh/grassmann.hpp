#pragma once

#include "flagcoh/polynomial.hpp"

#include <compare>
#include <map>
#include <vector>

// Cohomology of the flag variety of lines in planes in C^{2n+2}, viewed as
// P(Omega(2)) over P^{2n+1} and as a P^1-bundle over Gr(2, 2n+2).
//
// Polynomials in H and D use two variables: index 0 is H (hyperplane class
// of P^{2n+1}), index 1 is D (pullback of the Plucker class of Gr(2, 2n+2)).
namespace flagcoh::grassmann {

class NotDivisible : public Error {
public:
    using Error::Error;
};

class PartitionOutOfBox : public Error {
public:
    using Error::Error;
};

class ProportionalityFailure : public Error {
public:
    using Error::Error;
};

/// Two-row partition [a, b] inside the 2 x 2n box of Gr(2, 2n+2).
struct Partition2 {
    int a = 0;
    int b = 0;

    /// Validating constructor; throws PartitionOutOfBox.
    static Partition2 make(int n, int a, int b);

    auto operator<=>(const Partition2&) const = default;
};

/// Integer combination of Schubert classes; zero coefficients are not stored.
struct SchubertSum {
    std::map<Partition2, long> terms;

    void add(const Partition2& p, long c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const SchubertSum&, const SchubertSum&) = default;
};

/// Element of Q[H, D] / (H^{2n+2}, f(H, D)) in normal form: exponents of H at
/// most 2n+1 and of D at most 2n.
struct LHElement {
    int n = 1;
    Polynomial poly{2};

    bool is_zero() const { return poly.is_zero(); }
    friend bool operator==(const LHElement&, const LHElement&) = default;
};

/// Total Chern class of Omega^1_{P^m}(2): (1+h)^{m+1} / (1+2h) truncated at h^m.
std::vector<Integer> chern_classes_twisted_cotangent(int m);

Polynomial H();
Polynomial D();

/// f(H, D) = sum_i (-1)^i c_i H^i D^{2n+1-i} with c the Chern classes for m = 2n+1.
Polynomial leray_hirsch_relation(int n);

/// f0 with f = f0 * D. Throws NotDivisible if f has a pure H^{2n+1} term.
Polynomial factor_relation(int n);

/// Normal form: rewrites D^{2n+1} through the monic relation f and drops
/// every multiple of H^{2n+2}.
LHElement ring_reduce(int n, const Polynomial& p);

/// Number of normal-form monomials H^i D^j in each degree i + j.
std::vector<long> normal_form_graded_dimensions(int n);

/// Multiplication by sigma_1 = S_[1,0] in H*(Gr(2, 2n+2)).
SchubertSum pieri_multiply(int n, const SchubertSum& s);

/// sum_{i=0}^{n} (-1)^i S_[n+i, n-i].
SchubertSum alternating_sum(int n);

/// Whether sigma_1 kills the alternating sum.
bool alternating_sum_annihilated(int n);

/// Pullback of the special class sigma_k, from sigma_1 = D, sigma_{1,1} =
/// DH - H^2 and sigma_k = sigma_1 sigma_{k-1} - sigma_{1,1} sigma_{k-2}.
LHElement special_class_pullback(int n, int k);

/// Pullback of S_[a,b] = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}.
LHElement giambelli_pullback(int n, const Partition2& lam);
LHElement giambelli_pullback(int n, const SchubertSum& s);

/// Sign e with f0 = e * pullback(alternating_sum(n)) in the ring. Also checks
/// that f0 is nonzero there and that f0 * D vanishes.
int identify_fiber_class(int n);

/// Text of an H, D polynomial, e.g. "1 * D^2 + -2 * H^1 D^1 + 2 * H^2".
std::string to_text_hd(const Polynomial& p);

}  // namespace flagcoh::grassmann
