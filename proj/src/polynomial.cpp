#include "flagcoh/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flagcoh {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db)
        return da > db;
    return a > b;
}

Polynomial Polynomial::constant(int nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index)
{
    Exponent e(nvars, 0);
    e.at(index) = 1;
    return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponent e, const Rational& c)
{
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::linear_form(const std::vector<Rational>& coeffs)
{
    const int n = static_cast<int>(coeffs.size());
    Polynomial p(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

std::optional<int> Polynomial::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d)
            return std::nullopt;
    return d;
}

bool Polynomial::is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

int Polynomial::max_degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

Rational Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != nvars_)
        throw RankMismatch("exponent length " + std::to_string(e.size()) + " in a polynomial over " +
                           std::to_string(nvars_) + " variables");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& o) const
{
    if (o.nvars_ != nvars_)
        throw RankMismatch("polynomials over " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) +
                           " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Polynomial out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial Polynomial::pow(int k) const
{
    Polynomial result = constant(nvars_, 1);
    for (int i = 0; i < k; ++i)
        result = result * *this;
    return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    if (static_cast<int>(images.size()) != nvars_)
        throw RankMismatch("substitution needs " + std::to_string(nvars_) + " images");
    const int target = images.empty() ? 0 : images.front().nvars();

    // powers[j][k] = images[j]^k, grown on demand
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (int j = 0; j < nvars_; ++j)
        powers[j].push_back(constant(target, 1));

    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(target, c);
        for (int j = 0; j < nvars_; ++j) {
            while (static_cast<int>(powers[j].size()) <= e[j])
                powers[j].push_back(powers[j].back() * images[j]);
            if (e[j] > 0)
                term = term * powers[j][e[j]];
        }
        out += term;
    }
    return out;
}

std::vector<Exponent> monomial_basis(int rank, int degree)
{
    std::vector<Exponent> out;
    Exponent e(rank, 0);
    // Recursive fill: first coordinate runs from degree down to 0, which is
    // lexicographically descending order.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == rank - 1) {
            e[pos] = remaining;
            out.push_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    if (rank >= 1)
        rec(rec, 0, degree);
    return out;
}

std::size_t MonomialIndex::Hash::operator()(const Exponent& e) const
{
    std::size_t h = 1469598103934665603ULL;
    for (int x : e)
        h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
}

MonomialIndex::MonomialIndex(int rank, int degree) : rank_(rank), degree_(degree), basis_(monomial_basis(rank, degree))
{
    lookup_.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        lookup_.emplace(basis_[i], i);
}

std::size_t MonomialIndex::index(const Exponent& e) const
{
    auto it = lookup_.find(e);
    if (it == lookup_.end())
        throw InhomogeneousInput("monomial of degree " + std::to_string(total_degree(e)) + " where degree " +
                                 std::to_string(degree_) + " was expected");
    return it->second;
}

Vector MonomialIndex::coordinates(const Polynomial& p) const
{
    if (p.nvars() != rank_)
        throw RankMismatch("polynomial over " + std::to_string(p.nvars()) + " variables, expected " +
                           std::to_string(rank_));
    Vector v(basis_.size());
    for (const auto& [e, c] : p.terms())
        v[index(e)] = c;
    return v;
}

Polynomial MonomialIndex::polynomial(const Vector& coords) const
{
    Polynomial p(rank_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        p.add_term(basis_[i], coords[i]);
    return p;
}

Polynomial poly_weyl_action(const IntMatrix& w, const Polynomial& p)
{
    const int n = p.nvars();
    if (static_cast<int>(w.rows()) != n)
        throw RankMismatch("Weyl element of rank " + std::to_string(w.rows()) + " acting on " + std::to_string(n) +
                           " variables");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> col(n);
        for (int i = 0; i < n; ++i)
            col[i] = Rational(static_cast<long>(w(i, j)));
        images.push_back(Polynomial::linear_form(col));
    }
    return p.substitute(images);
}

Polynomial poly_weyl_action(const RootSystem& rs, const WeylElement& w, const Polynomial& p)
{
    if (p.nvars() != rs.rank())
        throw RankMismatch("polynomial over " + std::to_string(p.nvars()) + " variables for a rank " +
                           std::to_string(rs.rank()) + " root system");
    return poly_weyl_action(w.matrix, p);
}

std::size_t span_dimension(const std::vector<Polynomial>& polys, int degree)
{
    if (polys.empty())
        return 0;
    const int rank = polys.front().nvars();
    for (const auto& p : polys) {
        if (p.nvars() != rank)
            throw RankMismatch("span of polynomials over different numbers of variables");
        if (p.is_zero())
            continue;
        if (p.homogeneous_degree() != degree)
            throw InhomogeneousInput("span_dimension: input is not homogeneous of degree " + std::to_string(degree));
    }
    const MonomialIndex index(rank, degree);
    std::vector<Vector> rows;
    rows.reserve(polys.size());
    for (const auto& p : polys)
        rows.push_back(index.coordinates(p));
    return rank_fraction_free(rows);
}

std::string to_text(const Polynomial& p, const std::vector<std::string>& names)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str();
        bool star = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << (star ? " " : " * ") << names.at(i) << '^' << e[i];
            star = true;
        }
    }
    return os.str();
}

std::string to_text(const Polynomial& p)
{
    std::vector<std::string> names;
    for (int i = 1; i <= p.nvars(); ++i)
        names.push_back("a" + std::to_string(i));
    return to_text(p, names);
}

Polynomial parse_polynomial(const std::string& text, int nvars)
{
    Polynomial p(nvars);
    if (text == "0")
        return p;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(" + ", pos);
        const std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);

        std::istringstream ts(term);
        std::string coeff;
        ts >> coeff;
        Exponent e(nvars, 0);
        std::string tok;
        if (ts >> tok) {
            if (tok != "*")
                throw Error("malformed polynomial term '" + term + "'");
            while (ts >> tok) {
                const auto caret = tok.find('^');
                if (tok.size() < 4 || tok[0] != 'a' || caret == std::string::npos)
                    throw Error("malformed variable '" + tok + "'");
                const int var = std::stoi(tok.substr(1, caret - 1));
                if (var < 1 || var > nvars)
                    throw RankMismatch("variable " + tok + " outside a1..a" + std::to_string(nvars));
                e[var - 1] += std::stoi(tok.substr(caret + 1));
            }
        }
        p.add_term(e, parse_rational(coeff));
        if (next == std::string::npos)
            break;
        pos = next + 3;
    }
    return p;
}

}  // namespace flagcoh
