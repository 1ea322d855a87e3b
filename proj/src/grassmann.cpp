#include "flagcoh/grassmann.hpp"

namespace flagcoh::grassmann {

namespace {

void check_n(int n)
{
    if (n < 1)
        throw Error("n must be at least 1, got " + std::to_string(n));
}

}  // namespace

Partition2 Partition2::make(int n, int a, int b)
{
    if (b < 0 || a < b || a > 2 * n)
        throw PartitionOutOfBox("partition [" + std::to_string(a) + "," + std::to_string(b) +
                                "] does not fit the 2x" + std::to_string(2 * n) + " box");
    return Partition2{a, b};
}

void SchubertSum::add(const Partition2& p, long c)
{
    if (c == 0)
        return;
    auto& slot = terms[p];
    slot += c;
    if (slot == 0)
        terms.erase(p);
}

Polynomial H() { return Polynomial::variable(2, 0); }
Polynomial D() { return Polynomial::variable(2, 1); }

std::vector<Integer> chern_classes_twisted_cotangent(int m)
{
    if (m < 1)
        throw Error("projective dimension must be at least 1, got " + std::to_string(m));
    // (1+h)^{m+1} times the series 1/(1+2h) = sum (-2h)^k, mod h^{m+1}.
    std::vector<Integer> binom(m + 1);
    binom[0] = 1;
    for (int k = 1; k <= m; ++k)
        binom[k] = binom[k - 1] * (m + 2 - k) / k;
    std::vector<Integer> c(m + 1, 0);
    for (int i = 0; i <= m; ++i) {
        Integer inv = 1;  // (-2)^j
        for (int j = 0; i + j <= m; ++j) {
            c[i + j] += binom[i] * inv;
            inv *= -2;
        }
    }
    return c;
}

Polynomial leray_hirsch_relation(int n)
{
    check_n(n);
    const int m = 2 * n + 1;
    const auto c = chern_classes_twisted_cotangent(m);
    Polynomial f(2);
    for (int i = 0; i <= m; ++i) {
        Rational coef(c[i]);
        if (i % 2)
            coef = -coef;
        f.add_term({i, m - i}, coef);
    }
    return f;
}

Polynomial factor_relation(int n)
{
    const Polynomial f = leray_hirsch_relation(n);
    Polynomial f0(2);
    for (const auto& [e, c] : f.terms()) {
        if (e[1] == 0)
            throw NotDivisible("relation for n=" + std::to_string(n) + " has a nonzero H^" + std::to_string(e[0]) +
                               " term");
        f0.add_term({e[0], e[1] - 1}, c);
    }
    return f0;
}

LHElement ring_reduce(int n, const Polynomial& p)
{
    check_n(n);
    if (p.nvars() != 2)
        throw RankMismatch("ring_reduce expects a polynomial in H and D");
    const int top = 2 * n + 1;
    const auto c = chern_classes_twisted_cotangent(top);

    // D^{top} = -sum_{k>=1} (-1)^k c_k H^k D^{top-k}
    std::vector<Rational> tail(top + 1);
    for (int k = 1; k <= top; ++k) {
        tail[k] = Rational(c[k]);
        if (k % 2 == 0)
            tail[k] = -tail[k];
    }

    LHElement out;
    out.n = n;
    Polynomial work = p;
    while (!work.is_zero()) {
        const auto [e, coef] = *work.terms().begin();
        work.add_term(e, -coef);
        if (e[0] > top)
            continue;
        if (e[1] < top) {
            out.poly.add_term(e, coef);
            continue;
        }
        for (int k = 1; k <= top; ++k)
            if (tail[k] != 0)
                work.add_term({e[0] + k, e[1] - top + (top - k)}, coef * tail[k]);
    }
    return out;
}

std::vector<long> normal_form_graded_dimensions(int n)
{
    check_n(n);
    std::vector<long> dims(4 * n + 2, 0);
    for (int i = 0; i <= 2 * n + 1; ++i)
        for (int j = 0; j <= 2 * n; ++j)
            ++dims[i + j];
    return dims;
}

SchubertSum pieri_multiply(int n, const SchubertSum& s)
{
    check_n(n);
    SchubertSum out;
    for (const auto& [p, c] : s.terms) {
        Partition2::make(n, p.a, p.b);
        if (p.a + 1 <= 2 * n)
            out.add({p.a + 1, p.b}, c);
        if (p.b + 1 <= p.a)
            out.add({p.a, p.b + 1}, c);
    }
    return out;
}

SchubertSum alternating_sum(int n)
{
    check_n(n);
    SchubertSum s;
    for (int i = 0; i <= n; ++i)
        s.add(Partition2::make(n, n + i, n - i), i % 2 ? -1 : 1);
    return s;
}

bool alternating_sum_annihilated(int n) { return pieri_multiply(n, alternating_sum(n)).is_zero(); }

LHElement special_class_pullback(int n, int k)
{
    check_n(n);
    if (k < 0)
        return LHElement{n, Polynomial(2)};
    const Polynomial s1 = D();
    const Polynomial s11 = D() * H() - H() * H();
    Polynomial prev2 = Polynomial::constant(2, 1);  // sigma_0
    if (k == 0)
        return ring_reduce(n, prev2);
    Polynomial prev1 = s1;
    for (int j = 2; j <= k; ++j) {
        Polynomial next = ring_reduce(n, s1 * prev1 - s11 * prev2).poly;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return ring_reduce(n, prev1);
}

LHElement giambelli_pullback(int n, const Partition2& lam)
{
    Partition2::make(n, lam.a, lam.b);
    const Polynomial p = special_class_pullback(n, lam.a).poly * special_class_pullback(n, lam.b).poly -
                         special_class_pullback(n, lam.a + 1).poly * special_class_pullback(n, lam.b - 1).poly;
    return ring_reduce(n, p);
}

LHElement giambelli_pullback(int n, const SchubertSum& s)
{
    Polynomial sum(2);
    for (const auto& [p, c] : s.terms)
        sum += Rational(c) * giambelli_pullback(n, p).poly;
    return ring_reduce(n, sum);
}

int identify_fiber_class(int n)
{
    const Polynomial f0 = factor_relation(n);
    const LHElement fiber = ring_reduce(n, f0);
    if (fiber.is_zero())
        throw ProportionalityFailure("f0 vanishes in the ring for n=" + std::to_string(n));
    if (!ring_reduce(n, f0 * D()).is_zero())
        throw ProportionalityFailure("f0 * D does not vanish for n=" + std::to_string(n));

    const LHElement alpha = giambelli_pullback(n, alternating_sum(n));
    if (fiber.poly == alpha.poly)
        return 1;
    if (fiber.poly == -alpha.poly)
        return -1;
    throw ProportionalityFailure("f0 is not +/- the alternating Schubert sum for n=" + std::to_string(n));
}

std::string to_text_hd(const Polynomial& p) { return to_text(p, {"H", "D"}); }

}  // namespace flagcoh::grassmann
