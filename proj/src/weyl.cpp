#include "flagcoh/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace flagcoh {

long BettiTable::total() const { return std::accumulate(dims.begin(), dims.end(), 0L); }

bool BettiTable::is_palindromic() const { return std::equal(dims.begin(), dims.end(), dims.rbegin()); }

std::string BettiTable::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dims.size(); ++i)
        os << (i ? "," : "") << dims[i];
    os << ']';
    return os.str();
}

ParabolicSubset all_nodes(const RootSystem& rs)
{
    ParabolicSubset p;
    for (int i = 1; i <= rs.rank(); ++i)
        p.nodes.insert(i);
    return p;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, const ParabolicSubset& gens, std::size_t cap)
{
    const int n = rs.rank();
    std::vector<std::pair<int, IntMatrix>> reflections;
    for (int i : gens.nodes)
        reflections.emplace_back(i, simple_reflection_int(rs, i));

    std::vector<WeylElement> out;
    std::set<std::vector<std::int64_t>> seen;

    WeylElement id{IntMatrix::identity(n), {}};
    seen.insert(id.matrix.data());
    out.push_back(id);

    std::size_t layer_begin = 0;
    while (layer_begin < out.size()) {
        const std::size_t layer_end = out.size();
        std::vector<WeylElement> next;
        // Parents are visited in word order and generators ascending, so the
        // first word found for an element is its lexicographically least.
        for (std::size_t k = layer_begin; k < layer_end; ++k) {
            for (const auto& [node, s] : reflections) {
                IntMatrix m = out[k].matrix * s;
                if (!seen.insert(m.data()).second)
                    continue;
                if (seen.size() > cap)
                    throw GroupTooLarge("Weyl group of " + rs.cartan_type.name() + " exceeds enumeration cap " +
                                        std::to_string(cap));
                std::vector<int> word = out[k].word;
                word.push_back(node);
                next.push_back({std::move(m), std::move(word)});
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
        layer_begin = layer_end;
        for (auto& e : next)
            out.push_back(std::move(e));
    }
    return out;
}

std::size_t length(const RootSystem& rs, const IntMatrix& w)
{
    std::set<IntVector> roots(rs.positive_roots.begin(), rs.positive_roots.end());
    std::size_t count = 0;
    for (const auto& beta : rs.positive_roots) {
        IntVector image = apply(w, beta);
        IntVector neg = image;
        for (auto& x : neg)
            x = -x;
        if (roots.count(image))
            continue;
        if (!roots.count(neg))
            throw NotAWeylElement("matrix does not permute the roots of " + rs.cartan_type.name());
        ++count;
    }
    return count;
}

bool is_minimal_coset_representative(const IntMatrix& w, const ParabolicSubset& p)
{
    for (int i : p.nodes) {
        // w(alpha_i) is column i-1; roots are either positive or negative.
        for (std::size_t r = 0; r < w.rows(); ++r)
            if (w(r, i - 1) < 0)
                return false;
    }
    return true;
}

BettiTable coset_length_counts(const std::vector<WeylElement>& w, const ParabolicSubset& p)
{
    BettiTable t;
    for (const auto& e : w) {
        if (!is_minimal_coset_representative(e.matrix, p))
            continue;
        if (t.dims.size() <= e.length())
            t.dims.resize(e.length() + 1, 0);
        ++t.dims[e.length()];
    }
    return t;
}

BettiTable coset_length_counts(const RootSystem& rs, const ParabolicSubset& p, std::size_t cap)
{
    return coset_length_counts(enumerate_weyl(rs, all_nodes(rs), cap), p);
}

}  // namespace flagcoh
