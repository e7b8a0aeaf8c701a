#pragma once

#include "errors.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace hilmod {

/// Exponent vector (alpha_1, ..., alpha_m).
class MultiIndex {
public:
    using value_type = std::uint32_t;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim) : e_(dim, 0) {}
    MultiIndex(std::initializer_list<value_type> e) : e_(e) {}
    explicit MultiIndex(std::vector<value_type> e) : e_(std::move(e)) {}

    static MultiIndex unit(std::size_t dim, std::size_t j)
    {
        MultiIndex u(dim);
        u.e_.at(j) = 1;
        return u;
    }

    std::size_t dim() const noexcept { return e_.size(); }
    value_type operator[](std::size_t j) const { return e_[j]; }
    value_type& operator[](std::size_t j) { return e_[j]; }
    const std::vector<value_type>& entries() const noexcept { return e_; }

    /// |alpha|
    unsigned degree() const
    {
        return std::accumulate(e_.begin(), e_.end(), 0u);
    }

    /// alpha! = alpha_1! ... alpha_m!
    Integer factorial() const
    {
        Integer f(1);
        for (auto a : e_)
            f *= hilmod::factorial(a);
        return f;
    }

    /// componentwise k <= alpha
    bool divides(const MultiIndex& alpha) const
    {
        for (std::size_t j = 0; j < e_.size(); ++j)
            if (e_[j] > alpha.e_[j])
                return false;
        return true;
    }

    MultiIndex operator+(const MultiIndex& o) const
    {
        MultiIndex r(*this);
        for (std::size_t j = 0; j < e_.size(); ++j)
            r.e_[j] += o.e_[j];
        return r;
    }

    /// Requires o <= *this componentwise.
    MultiIndex operator-(const MultiIndex& o) const
    {
        MultiIndex r(*this);
        for (std::size_t j = 0; j < e_.size(); ++j)
            r.e_[j] -= o.e_[j];
        return r;
    }

    bool operator==(const MultiIndex&) const = default;

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t j = 0; j < e_.size(); ++j) {
            if (j)
                s += ",";
            s += std::to_string(e_[j]);
        }
        return s + ")";
    }

private:
    std::vector<value_type> e_;
};

/// prod_j C(alpha_j, k_j)
inline Integer binomial(const MultiIndex& alpha, const MultiIndex& k)
{
    Integer b(1);
    for (std::size_t j = 0; j < alpha.dim(); ++j) {
        if (k[j] > alpha[j])
            return Integer(0);
        b *= binomial(alpha[j], k[j]);
    }
    return b;
}

/// Colexicographic order: compare at the last coordinate where the indices differ.
inline bool colex_less(const MultiIndex& a, const MultiIndex& b)
{
    for (std::size_t j = a.dim(); j-- > 0;)
        if (a[j] != b[j])
            return a[j] < b[j];
    return false;
}

/// Total degree first, colex within a degree. Used as the term order of Poly.
struct GradedColexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const
    {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        return colex_less(a, b);
    }
};

/// All alpha in N^dim with |alpha| = degree, in colex order.
inline std::vector<MultiIndex> monomials_of_degree(std::size_t dim, unsigned degree)
{
    std::vector<MultiIndex> out;
    if (dim == 0)
        return out;
    MultiIndex cur(dim);
    // recursive fill of coordinates 0..dim-2, remainder goes to the last one
    auto rec = [&](auto&& self, std::size_t j, unsigned left) -> void {
        if (j + 1 == dim) {
            cur[j] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            cur[j] = v;
            self(self, j + 1, left - v);
        }
        cur[j] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

/// All alpha with lo <= |alpha| <= hi, graded colex.
inline std::vector<MultiIndex> monomials_in_degrees(std::size_t dim, unsigned lo, unsigned hi)
{
    std::vector<MultiIndex> out;
    for (unsigned d = lo; d <= hi; ++d) {
        auto md = monomials_of_degree(dim, d);
        out.insert(out.end(), md.begin(), md.end());
    }
    return out;
}

/// Number of monomials of degree d in m variables: C(d+m-1, m-1).
inline std::size_t count_monomials(std::size_t dim, unsigned degree)
{
    return binomial(degree + dim - 1, dim - 1).get_ui();
}

} // namespace hilmod
