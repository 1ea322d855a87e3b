#include "flagcoh/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace flagcoh {

void validate(const CartanType& ct)
{
    const int n = ct.rank;
    bool ok = false;
    switch (ct.family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 3; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
    }
    if (!ok)
        throw InvalidCartanType("invalid Cartan type " + std::string(1, ct.family) + std::to_string(n));
}

CartanType parse_cartan_type(const std::string& text)
{
    if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
        throw InvalidCartanType("invalid Cartan type '" + text + "'");
    for (std::size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidCartanType("invalid Cartan type '" + text + "'");
    if (text.size() > 4)
        throw InvalidCartanType("invalid Cartan type '" + text + "'");

    CartanType ct;
    ct.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    ct.rank = std::stoi(text.substr(1));
    try {
        validate(ct);
    } catch (const InvalidCartanType&) {
        throw InvalidCartanType("invalid Cartan type '" + text + "'");
    }
    return ct;
}

std::string ParabolicSubset::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int n : nodes) {
        if (!first)
            os << ',';
        os << n;
        first = false;
    }
    return os.str();
}

ParabolicSubset parse_parabolic(const std::string& text, int rank)
{
    ParabolicSubset p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty())
            continue;
        if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw NodeOutOfRange("malformed node index '" + item + "'");
        const int node = std::stoi(item);
        if (node < 1 || node > rank)
            throw NodeOutOfRange("node " + item + " outside 1.." + std::to_string(rank));
        p.nodes.insert(node);
    }
    return p;
}

std::vector<ParabolicSubset> all_parabolic_subsets(int rank)
{
    std::vector<ParabolicSubset> out;
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
        ParabolicSubset p;
        for (int i = 0; i < rank; ++i)
            if (mask & (1u << i))
                p.nodes.insert(i + 1);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

// Symmetric inner products (alpha_i, alpha_j) in Bourbaki numbering, scaled
// so the shortest root has squared length 2.
IntMatrix bourbaki_inner_products(const CartanType& ct)
{
    const int n = ct.rank;
    IntMatrix b(n, n);
    auto bond = [&](int i, int j, std::int64_t v) {
        b(i - 1, j - 1) = v;
        b(j - 1, i - 1) = v;
    };
    for (int i = 0; i < n; ++i)
        b(i, i) = 2;

    switch (ct.family) {
    case 'A':
        for (int i = 1; i < n; ++i)
            bond(i, i + 1, -1);
        break;
    case 'B':
        for (int i = 1; i < n; ++i) {
            b(i - 1, i - 1) = 4;
            bond(i, i + 1, -2);
        }
        break;
    case 'C':
        for (int i = 1; i < n - 1; ++i)
            bond(i, i + 1, -1);
        b(n - 1, n - 1) = 4;
        bond(n - 1, n, -2);
        break;
    case 'D':
        for (int i = 1; i < n - 1; ++i)
            bond(i, i + 1, -1);
        bond(n - 2, n, -1);
        break;
    case 'E':
        bond(1, 3, -1);
        bond(2, 4, -1);
        for (int i = 3; i < n; ++i)
            bond(i, i + 1, -1);
        break;
    case 'F':
        b(0, 0) = 4;
        b(1, 1) = 4;
        bond(1, 2, -2);
        bond(2, 3, -2);
        bond(3, 4, -1);
        break;
    case 'G':
        b(1, 1) = 6;
        bond(1, 2, -3);
        break;
    default:
        throw InvalidCartanType("invalid Cartan type " + ct.name());
    }
    return b;
}

}  // namespace

IntVector apply(const IntMatrix& m, const IntVector& v)
{
    IntVector out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += m(i, j) * v[j];
    return out;
}

bool is_positive(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; }) &&
           std::any_of(v.begin(), v.end(), [](auto x) { return x > 0; });
}

bool is_negative(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x <= 0; }) &&
           std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; });
}

Rational RootSystem::inner(const std::vector<Rational>& u, const std::vector<Rational>& v) const
{
    Rational s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            s += u[i] * gram(i, j) * v[j];
    return s;
}

bool RootSystem::is_root(const IntVector& v) const
{
    IntVector neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](auto x) { return -x; });
    return std::find(positive_roots.begin(), positive_roots.end(), v) != positive_roots.end() ||
           std::find(positive_roots.begin(), positive_roots.end(), neg) != positive_roots.end();
}

RootSystem build_root_system(const CartanType& ct)
{
    validate(ct);
    const int n = ct.rank;
    const IntMatrix b = bourbaki_inner_products(ct);

    RootSystem rs;
    rs.cartan_type = ct;
    rs.cartan = IntMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.cartan(i, j) = 2 * b(i, j) / b(i, i);

    std::int64_t g = 0;
    for (int i = 0; i < n; ++i)
        g = std::gcd(g, b(i, i) / 2);
    rs.symmetrizers.resize(n);
    for (int i = 0; i < n; ++i)
        rs.symmetrizers[i] = b(i, i) / 2 / g;

    rs.gram = RationalMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.gram(i, j) = Rational(static_cast<long>(rs.symmetrizers[i] * rs.cartan(i, j)));

    // Reflection closure from the simple roots. s_i permutes the positive
    // roots other than alpha_i, so every positive root is reached.
    std::set<IntVector> seen;
    std::deque<IntVector> queue;
    for (int i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVector beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            std::int64_t pairing = 0;
            for (int j = 0; j < n; ++j)
                pairing += beta[j] * rs.cartan(i, j);
            IntVector image = beta;
            image[i] -= pairing;
            if (!is_positive(image) || seen.count(image))
                continue;
            seen.insert(image);
            queue.push_back(std::move(image));
        }
    }
    rs.positive_roots.assign(seen.begin(), seen.end());
    auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const IntVector& a, const IntVector& c) {
        const auto ha = height(a);
        const auto hc = height(c);
        return ha != hc ? ha < hc : a > c;  // simple roots come out as alpha_1, ..., alpha_n
    });
    return rs;
}

IntMatrix simple_reflection_int(const RootSystem& rs, int i)
{
    const int n = rs.rank();
    if (i < 1 || i > n)
        throw NodeOutOfRange("node " + std::to_string(i) + " outside 1.." + std::to_string(n));
    IntMatrix s = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j)
        s(i - 1, j) -= rs.cartan(i - 1, j);
    return s;
}

RationalMatrix simple_reflection_matrix(const RootSystem& rs, int i)
{
    const IntMatrix s = simple_reflection_int(rs, i);
    RationalMatrix out(s.rows(), s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c)
            out(r, c) = Rational(static_cast<long>(s(r, c)));
    return out;
}

RationalMatrix invariant_gram(const RootSystem& rs) { return rs.gram; }

}  // namespace flagcoh
