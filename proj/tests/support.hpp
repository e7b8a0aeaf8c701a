#pragma once

#include <hilmod/graded_ideal.hpp>
#include <hilmod/parse.hpp>
#include <hilmod/poly.hpp>

#include <random>
#include <string>
#include <vector>

namespace hilmod::testing {

inline Poly P(const std::string& s, std::size_t dim = 2) { return parse_poly(s, dim); }

inline IdealSpec ideal(std::size_t dim, const std::vector<std::string>& gens)
{
    std::vector<Poly> g;
    for (const auto& s : gens)
        g.push_back(parse_poly(s, dim));
    return IdealSpec(dim, std::move(g));
}

inline Rational Q(long p, long q = 1) { return make_rational(p, q); }

/// Small random data with a fixed seed per test.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long span = 5)
    {
        return make_rational(integer(-span, span), integer(1, span));
    }

    GaussRat scalar(bool complex = true)
    {
        Rational re = rational();
        Rational im = complex && integer(0, 2) == 0 ? rational() : Rational(0);
        return GaussRat(re, im);
    }

    MultiIndex multi_index(std::size_t dim, unsigned max_degree)
    {
        unsigned d = static_cast<unsigned>(integer(0, max_degree));
        auto mons = monomials_of_degree(dim, d);
        return mons[static_cast<std::size_t>(integer(0, static_cast<long>(mons.size()) - 1))];
    }

    Poly poly(std::size_t dim, unsigned max_degree, unsigned max_terms = 5, bool complex = true)
    {
        Poly p(dim);
        unsigned n = static_cast<unsigned>(integer(1, max_terms));
        for (unsigned k = 0; k < n; ++k)
            p.add_term(multi_index(dim, max_degree), scalar(complex));
        return p;
    }

    Poly nonzero_poly(std::size_t dim, unsigned max_degree, unsigned max_terms = 5)
    {
        Poly p(dim);
        while (p.is_zero())
            p = poly(dim, max_degree, max_terms);
        return p;
    }

    Poly homogeneous(std::size_t dim, unsigned degree, unsigned max_terms = 4, bool complex = false)
    {
        auto mons = monomials_of_degree(dim, degree);
        Poly p(dim);
        while (p.is_zero()) {
            unsigned n = static_cast<unsigned>(integer(1, max_terms));
            for (unsigned k = 0; k < n; ++k)
                p.add_term(mons[static_cast<std::size_t>(integer(0, static_cast<long>(mons.size()) - 1))],
                           scalar(complex));
        }
        return p;
    }

    Point point(std::size_t dim)
    {
        Point w;
        for (std::size_t k = 0; k < dim; ++k)
            w.push_back(scalar());
        return w;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace hilmod::testing
