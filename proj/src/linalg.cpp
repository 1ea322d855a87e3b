#include "flagcoh/linalg.hpp"

#include <algorithm>

namespace flagcoh {

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw Error("malformed rational '" + text + "'");
    q.canonicalize();
    return q;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::size_t rank_fraction_free(const std::vector<Vector>& rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();

    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        Integer den = 1;
        for (const auto& x : r)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> ir(cols);
        bool nonzero = false;
        for (std::size_t j = 0; j < cols; ++j) {
            ir[j] = r[j].get_num() * (den / r[j].get_den());
            nonzero = nonzero || ir[j] != 0;
        }
        if (nonzero)
            m.push_back(std::move(ir));
    }

    // Bareiss: every division below is exact.
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        const Integer& piv = m[rank][c];
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = piv * m[i][j] - m[i][c] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

Vector Echelon::reduce(Vector v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivot_of_row_[r];
        if (v[p] == 0)
            continue;
        const Rational f = v[p];
        const Vector& row = rows_[r];
        for (std::size_t j = p; j < cols_; ++j)
            if (row[j] != 0)
                v[j] -= f * row[j];
    }
    return v;
}

bool Echelon::insert(Vector row)
{
    row = reduce(std::move(row));
    std::size_t p = 0;
    while (p < cols_ && row[p] == 0)
        ++p;
    if (p == cols_)
        return false;

    const Rational inv = 1 / row[p];
    for (std::size_t j = p; j < cols_; ++j)
        if (row[j] != 0)
            row[j] *= inv;

    // Keep the form reduced: clear column p from the older rows.
    for (auto& other : rows_) {
        if (other[p] == 0)
            continue;
        const Rational f = other[p];
        for (std::size_t j = p; j < cols_; ++j)
            if (row[j] != 0)
                other[j] -= f * row[j];
    }
    pivot_row_[p] = rows_.size();
    pivot_of_row_.push_back(p);
    rows_.push_back(std::move(row));
    return true;
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t cols)
{
    Echelon e(cols);
    for (const auto& r : rows)
        e.insert(r);

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (e.is_pivot(free))
            continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t p = 0; p < cols; ++p)
            if (e.is_pivot(p))
                v[p] = -e.row_for_pivot(p)[free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace flagcoh
