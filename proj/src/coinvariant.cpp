#include "flagcoh/coinvariant.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace flagcoh {

namespace {

// Graded reverse lexicographic comparison of equal-degree exponents:
// a > b when the last nonzero entry of a - b is negative.
bool grevlex_greater(const Exponent& a, const Exponent& b)
{
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const
    {
        std::size_t h = 1469598103934665603ULL;
        for (int x : e)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }
};

// Reduced echelon form over sparse rows; a row's pivot is its first column.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

    bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }

    void reduce_dense(Vector& v) const
    {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (v[c] == 0 || pivot_row_[c] < 0)
                continue;
            const Rational f = v[c];
            for (const auto& [j, x] : rows_[pivot_row_[c]])
                v[j] -= f * x;
        }
    }

    bool insert(Vector v)
    {
        reduce_dense(v);
        std::size_t p = 0;
        while (p < cols_ && v[p] == 0)
            ++p;
        if (p == cols_)
            return false;
        const Rational inv = 1 / v[p];
        SparseVector row;
        for (std::size_t j = p; j < cols_; ++j)
            if (v[j] != 0)
                row.emplace_back(static_cast<std::uint32_t>(j), v[j] * inv);

        for (auto& other : rows_) {
            auto it = std::lower_bound(other.begin(), other.end(), p,
                                       [](const auto& entry, std::size_t col) { return entry.first < col; });
            if (it == other.end() || it->first != p)
                continue;
            const Rational f = it->second;
            SparseVector merged;
            merged.reserve(other.size() + row.size());
            std::size_t a = 0, b = 0;
            while (a < other.size() || b < row.size()) {
                if (b == row.size() || (a < other.size() && other[a].first < row[b].first)) {
                    merged.push_back(std::move(other[a++]));
                } else if (a == other.size() || row[b].first < other[a].first) {
                    merged.emplace_back(row[b].first, -f * row[b].second);
                    ++b;
                } else {
                    Rational x = other[a].second - f * row[b].second;
                    if (x != 0)
                        merged.emplace_back(row[b].first, std::move(x));
                    ++a;
                    ++b;
                }
            }
            other = std::move(merged);
        }
        pivot_row_[p] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    /// Normal form of the unit vector at column c.
    SparseVector unit_normal_form(std::size_t c) const
    {
        if (pivot_row_[c] < 0)
            return {{static_cast<std::uint32_t>(c), Rational(1)}};
        SparseVector out;
        for (const auto& [j, x] : rows_[pivot_row_[c]])
            if (j != c)
                out.emplace_back(j, -x);
        return out;
    }

private:
    std::size_t cols_;
    std::vector<SparseVector> rows_;
    std::vector<int> pivot_row_;
};

}  // namespace

CoinvariantAlgebra::CoinvariantAlgebra(const RootSystem& rs, int max_degree)
    : rank_(rs.rank()), max_degree_(max_degree), standard_(max_degree + 1), mult_(max_degree + 1),
      action_(rs.rank(), std::vector<RationalMatrix>(max_degree + 1))
{
    standard_[0].push_back(Exponent(rank_, 0));
    for (int i = 0; i < rank_; ++i)
        action_[i][0] = RationalMatrix::identity(1);
    for (int d = 1; d <= max_degree_; ++d)
        extend(rs, d);
}

void CoinvariantAlgebra::extend(const RootSystem& rs, int d)
{
    const int r = rank_;
    const auto& prev = standard_[d - 1];

    // Candidates: standard monomials of degree d-1 times a variable.
    std::vector<Exponent> cand;
    {
        std::unordered_map<Exponent, bool, ExponentHash> seen;
        for (const auto& t : prev)
            for (int k = 0; k < r; ++k) {
                Exponent e = t;
                ++e[k];
                if (seen.emplace(e, true).second)
                    cand.push_back(std::move(e));
            }
    }
    std::sort(cand.begin(), cand.end(), grevlex_greater);
    std::unordered_map<Exponent, std::uint32_t, ExponentHash> col;
    for (std::size_t i = 0; i < cand.size(); ++i)
        col.emplace(cand[i], static_cast<std::uint32_t>(i));

    std::vector<std::vector<std::uint32_t>> col_of(prev.size(), std::vector<std::uint32_t>(r));
    for (std::size_t t = 0; t < prev.size(); ++t)
        for (int k = 0; k < r; ++k) {
            Exponent e = prev[t];
            ++e[k];
            col_of[t][k] = col.at(e);
        }

    // Relations x_k NF(x_l t) - x_l NF(x_k t) for t standard of degree d-2.
    SparseEchelon ech(cand.size());
    if (d >= 2) {
        for (std::size_t t = 0; t < standard_[d - 2].size(); ++t)
            for (int k = 0; k < r; ++k)
                for (int l = k + 1; l < r; ++l) {
                    Vector row(cand.size());
                    for (const auto& [s, c] : mult_[d - 1][t][l])
                        row[col_of[s][k]] += c;
                    for (const auto& [s, c] : mult_[d - 1][t][k])
                        row[col_of[s][l]] -= c;
                    if (!is_zero(row))
                        ech.insert(std::move(row));
                }
    }

    // Provisional quotient S_d / (S_1 J_{d-1}) and the W-action on it.
    auto standard_columns = [&] {
        std::vector<std::uint32_t> cols;
        for (std::size_t c = 0; c < cand.size(); ++c)
            if (!ech.is_pivot(c))
                cols.push_back(static_cast<std::uint32_t>(c));
        return cols;
    };
    std::vector<std::uint32_t> prov = standard_columns();
    std::vector<int> prov_pos(cand.size(), -1);
    for (std::size_t i = 0; i < prov.size(); ++i)
        prov_pos[prov[i]] = static_cast<int>(i);

    std::vector<SparseVector> nf(cand.size());
    for (std::size_t c = 0; c < cand.size(); ++c)
        nf[c] = ech.unit_normal_form(c);

    std::unordered_map<Exponent, std::size_t, ExponentHash> prev_index;
    for (std::size_t i = 0; i < prev.size(); ++i)
        prev_index.emplace(prev[i], i);

    // s_i(t) = s_i(x_k) * s_i(t / x_k) for t = x_k m, m standard of degree d-1.
    auto action_column = [&](int node, const Exponent& t) {
        int k = 0;
        while (t[k] == 0)
            ++k;
        Exponent m = t;
        --m[k];
        const std::size_t mi = prev_index.at(m);
        // s_node(alpha_k) = alpha_k - cartan(node,k) alpha_node
        std::vector<std::pair<int, Rational>> lin;
        if (k == node - 1) {
            lin.emplace_back(k, Rational(-1));
        } else {
            lin.emplace_back(k, Rational(1));
            const auto a = rs.cartan(node - 1, k);
            if (a != 0)
                lin.emplace_back(node - 1, Rational(static_cast<long>(-a)));
        }
        const RationalMatrix& prev_action = action_[node - 1][d - 1];
        Vector out(cand.size());
        for (std::size_t mp = 0; mp < prev.size(); ++mp) {
            const Rational& coef = prev_action(mp, mi);
            if (coef == 0)
                continue;
            for (const auto& [j, lj] : lin) {
                const Rational f = coef * lj;
                for (const auto& [c, x] : nf[col_of[mp][j]])
                    out[c] += f * x;
            }
        }
        return out;  // over candidate columns, supported on provisional standards
    };

    std::vector<std::vector<Vector>> prov_action(r);  // [node-1][column] over candidate columns
    std::vector<Vector> constraint_rows;
    for (int node = 1; node <= r; ++node) {
        prov_action[node - 1].reserve(prov.size());
        for (std::uint32_t c : prov)
            prov_action[node - 1].push_back(action_column(node, cand[c]));
        // Rows of (A - I) in provisional coordinates.
        for (std::size_t row = 0; row < prov.size(); ++row) {
            Vector v(prov.size());
            for (std::size_t colp = 0; colp < prov.size(); ++colp)
                v[colp] = prov_action[node - 1][colp][prov[row]];
            v[row] -= 1;
            if (!is_zero(v))
                constraint_rows.push_back(std::move(v));
        }
    }

    const std::vector<Vector> invariants = nullspace(constraint_rows, prov.size());
    for (const auto& v : invariants) {
        Vector lifted(cand.size());
        for (std::size_t i = 0; i < prov.size(); ++i)
            lifted[prov[i]] = v[i];
        if (ech.insert(std::move(lifted)))
            generator_degrees_.push_back(d);
    }

    // Final standard monomials, products and action at degree d.
    const std::vector<std::uint32_t> fin = standard_columns();
    std::vector<int> fin_pos(cand.size(), -1);
    for (std::size_t i = 0; i < fin.size(); ++i)
        fin_pos[fin[i]] = static_cast<int>(i);
    auto restrict = [&](const SparseVector& v) {
        SparseVector out;
        for (const auto& [c, x] : v) {
            if (fin_pos[c] < 0)
                throw Error("coinvariant normal form left the standard monomials");
            out.emplace_back(static_cast<std::uint32_t>(fin_pos[c]), x);
        }
        return out;
    };

    standard_[d].clear();
    for (std::uint32_t c : fin)
        standard_[d].push_back(cand[c]);

    mult_[d].assign(prev.size(), std::vector<SparseVector>(r));
    for (std::size_t t = 0; t < prev.size(); ++t)
        for (int k = 0; k < r; ++k)
            mult_[d][t][k] = restrict(ech.unit_normal_form(col_of[t][k]));

    for (int node = 1; node <= r; ++node) {
        RationalMatrix a(fin.size(), fin.size());
        for (std::size_t j = 0; j < fin.size(); ++j) {
            Vector v = prov_action[node - 1][prov_pos[fin[j]]];
            if (!invariants.empty())
                ech.reduce_dense(v);
            for (std::size_t c = 0; c < cand.size(); ++c) {
                if (v[c] == 0)
                    continue;
                if (fin_pos[c] < 0)
                    throw Error("coinvariant action left the standard monomials");
                a(fin_pos[c], j) = v[c];
            }
        }
        action_[node - 1][d] = std::move(a);
    }
}

Vector CoinvariantAlgebra::multiply_linear(int d, const Vector& cls, const std::vector<Rational>& linear) const
{
    Vector out(dimension(d + 1));
    for (std::size_t t = 0; t < cls.size(); ++t) {
        if (cls[t] == 0)
            continue;
        for (int k = 0; k < rank_; ++k) {
            if (linear[k] == 0)
                continue;
            const Rational f = cls[t] * linear[k];
            for (const auto& [s, x] : mult_[d + 1][t][k])
                out[s] += f * x;
        }
    }
    return out;
}

Vector CoinvariantAlgebra::normal_form(const Polynomial& p) const
{
    const auto deg = p.homogeneous_degree();
    if (!deg)
        throw InhomogeneousInput("normal_form needs a nonzero homogeneous polynomial");
    if (*deg > max_degree_)
        throw Error("degree " + std::to_string(*deg) + " beyond the truncation");

    std::map<Exponent, Vector> memo;
    auto nf = [&](auto&& self, const Exponent& u) -> Vector {
        const int du = total_degree(u);
        if (du == 0)
            return Vector{Rational(1)};
        if (auto it = memo.find(u); it != memo.end())
            return it->second;
        int k = 0;
        while (u[k] == 0)
            ++k;
        Exponent m = u;
        --m[k];
        std::vector<Rational> var(rank_);
        var[k] = 1;
        Vector out = multiply_linear(du - 1, self(self, m), var);
        memo.emplace(u, out);
        return out;
    };

    Vector out(dimension(*deg));
    for (const auto& [e, c] : p.terms()) {
        const Vector v = nf(nf, e);
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] += c * v[i];
    }
    return out;
}

std::shared_ptr<const CoinvariantAlgebra> coinvariants_for(const RootSystem& rs)
{
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const CoinvariantAlgebra>> built;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = built[rs.cartan_type.name()];
    if (!slot)
        slot = std::make_shared<const CoinvariantAlgebra>(rs, static_cast<int>(rs.num_positive_roots()) + 1);
    return slot;
}

namespace {

// Rows of (s_i - 1) for i in nodes, stacked; their kernel is the fixed space.
std::vector<Vector> fixed_space_equations(const CoinvariantAlgebra& a, const ParabolicSubset& nodes, int d)
{
    const std::size_t n = a.dimension(d);
    std::vector<Vector> rows;
    for (int node : nodes.nodes) {
        const RationalMatrix& m = a.reflection_action(node, d);
        for (std::size_t r = 0; r < n; ++r) {
            Vector v(n);
            for (std::size_t c = 0; c < n; ++c)
                v[c] = m(r, c);
            v[r] -= 1;
            if (!is_zero(v))
                rows.push_back(std::move(v));
        }
    }
    return rows;
}

}  // namespace

std::vector<Vector> fixed_subspace(const CoinvariantAlgebra& a, const ParabolicSubset& nodes, int d)
{
    return nullspace(fixed_space_equations(a, nodes, d), a.dimension(d));
}

std::size_t fixed_dimension(const CoinvariantAlgebra& a, const ParabolicSubset& nodes, int d)
{
    return fixed_subspace(a, nodes, d).size();
}

}  // namespace flagcoh
