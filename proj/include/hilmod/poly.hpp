#pragma once

// Sparse multivariate polynomials over the Gaussian rationals, the differential
// operators q(D) = sum_alpha a_alpha d^alpha, and the Fock pairing
// <p, q>_{w0} = q^*(D) p |_{w0}.

#include "errors.hpp"
#include "multi_index.hpp"
#include "scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hilmod {

using Point = std::vector<GaussRat>;

inline Point origin(std::size_t dim) { return Point(dim, GaussRat(0)); }

class Poly {
public:
    using TermMap = std::map<MultiIndex, GaussRat, GradedColexLess>;

    explicit Poly(std::size_t dim) : dim_(dim)
    {
        if (dim == 0)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "polynomial ring needs at least one variable");
    }

    static Poly constant(std::size_t dim, const GaussRat& c)
    {
        return monomial(MultiIndex(dim), c);
    }

    static Poly monomial(const MultiIndex& alpha, const GaussRat& c = GaussRat(1))
    {
        Poly p(alpha.dim());
        p.add_term(alpha, c);
        return p;
    }

    /// z_{j+1} (zero-based j).
    static Poly variable(std::size_t dim, std::size_t j)
    {
        if (j >= dim)
            throw PreconditionError(PreconditionError::Kind::index_out_of_range,
                                    "variable index " + std::to_string(j + 1));
        return monomial(MultiIndex::unit(dim, j));
    }

    std::size_t dim() const noexcept { return dim_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    GaussRat coeff(const MultiIndex& alpha) const
    {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? GaussRat(0) : it->second;
    }

    /// Adds c*z^alpha, keeping the zero-free canonical form.
    void add_term(const MultiIndex& alpha, const GaussRat& c)
    {
        if (alpha.dim() != dim_)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "monomial " + alpha.to_string() + " in ring of dim "
                                        + std::to_string(dim_));
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// Total degree; nullopt stands for the degree of the zero polynomial.
    std::optional<unsigned> degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.rbegin()->first.degree();
    }

    /// Lowest total degree of a term (order of vanishing at 0).
    std::optional<unsigned> low_degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.begin()->first.degree();
    }

    bool is_homogeneous() const
    {
        return terms_.empty() || *degree() == *low_degree();
    }

    Poly homogeneous_component(unsigned d) const
    {
        Poly r(dim_);
        for (const auto& [a, c] : terms_)
            if (a.degree() == d)
                r.terms_.emplace(a, c);
        return r;
    }

    /// Drops every term of degree >= n (the image modulo m_0^n).
    Poly truncate_below(unsigned n) const
    {
        Poly r(dim_);
        for (const auto& [a, c] : terms_)
            if (a.degree() < n)
                r.terms_.emplace(a, c);
        return r;
    }

    Poly operator-() const
    {
        Poly r(*this);
        for (auto& [a, c] : r.terms_)
            c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        check_dim(o);
        for (const auto& [a, c] : o.terms_)
            add_term(a, c);
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        check_dim(o);
        for (const auto& [a, c] : o.terms_)
            add_term(a, -c);
        return *this;
    }

    Poly& operator*=(const GaussRat& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [a, c] : terms_)
            c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const GaussRat& s) { return a *= s; }
    friend Poly operator*(const GaussRat& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check_dim(b);
        Poly r(a.dim_);
        for (const auto& [x, c] : a.terms_)
            for (const auto& [y, d] : b.terms_)
                r.add_term(x + y, c * d);
        return r;
    }

    bool operator==(const Poly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    void check_dim(const Poly& o) const
    {
        if (o.dim_ != dim_)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "polynomials in " + std::to_string(dim_) + " and "
                                        + std::to_string(o.dim_) + " variables");
    }

private:
    std::size_t dim_;
    TermMap terms_;
};

inline Poly add(const Poly& p, const Poly& q) { return p + q; }
inline Poly mul(const Poly& p, const Poly& q) { return p * q; }
inline Poly scale(const GaussRat& c, const Poly& p) { return c * p; }

inline Poly pow(const Poly& p, unsigned k)
{
    Poly r = Poly::constant(p.dim(), 1);
    for (unsigned j = 0; j < k; ++j)
        r = r * p;
    return r;
}

/// q^*(z) = conj(q(conj z)): coefficients conjugated, exponents kept.
inline Poly star(const Poly& q)
{
    Poly r(q.dim());
    for (const auto& [a, c] : q.terms())
        r.add_term(a, c.conj());
    return r;
}

/// d^beta z^alpha = alpha!/(alpha-beta)! z^(alpha-beta) when beta <= alpha.
inline Poly partial(const Poly& p, const MultiIndex& beta)
{
    if (beta.dim() != p.dim())
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "derivative multi-index " + beta.to_string());
    Poly r(p.dim());
    for (const auto& [a, c] : p.terms()) {
        if (!beta.divides(a))
            continue;
        Integer f(1);
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (unsigned k = 0; k < beta[j]; ++k)
                f *= a[j] - k;
        r.add_term(a - beta, c * GaussRat(Rational(f)));
    }
    return r;
}

/// d/dz_{j+1} (zero-based j).
inline Poly partial(const Poly& p, std::size_t j)
{
    if (j >= p.dim())
        throw PreconditionError(PreconditionError::Kind::index_out_of_range,
                                "partial derivative index " + std::to_string(j + 1));
    return partial(p, MultiIndex::unit(p.dim(), j));
}

/// q(D) p = sum_alpha a_alpha d^alpha p for q = sum_alpha a_alpha z^alpha.
inline Poly apply_diff(const Poly& q, const Poly& p)
{
    q.check_dim(p);
    Poly r(p.dim());
    for (const auto& [alpha, a] : q.terms())
        for (const auto& [beta, b] : p.terms()) {
            if (!alpha.divides(beta))
                continue;
            Integer f(1);
            for (std::size_t j = 0; j < beta.dim(); ++j)
                for (unsigned k = 0; k < alpha[j]; ++k)
                    f *= beta[j] - k;
            r.add_term(beta - alpha, a * b * GaussRat(Rational(f)));
        }
    return r;
}

inline GaussRat eval(const Poly& p, const Point& w)
{
    if (w.size() != p.dim())
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "point has " + std::to_string(w.size()) + " coordinates");
    GaussRat sum(0);
    for (const auto& [a, c] : p.terms()) {
        GaussRat t = c;
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (unsigned k = 0; k < a[j]; ++k)
                t *= w[j];
        sum += t;
    }
    return sum;
}

/// <p, q>_0 = sum_alpha alpha! a_alpha conj(b_alpha).
inline GaussRat fock_inner(const Poly& p, const Poly& q)
{
    p.check_dim(q);
    GaussRat s(0);
    for (const auto& [a, c] : p.terms()) {
        auto it = q.terms().find(a);
        if (it != q.terms().end())
            s += c * it->second.conj() * GaussRat(Rational(a.factorial()));
    }
    return s;
}

/// <p, q>_{w0} = (q^*(D) p)(w0).
inline GaussRat fock_inner(const Poly& p, const Poly& q, const Point& w0)
{
    return eval(apply_diff(star(q), p), w0);
}

/// p(z + w0).
inline Poly translate(const Poly& p, const Point& w0)
{
    if (w0.size() != p.dim())
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "translation vector has " + std::to_string(w0.size())
                                    + " coordinates");
    Poly r(p.dim());
    for (const auto& [a, c] : p.terms()) {
        Poly t = Poly::constant(p.dim(), c);
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a[j] == 0)
                continue;
            // (z_j + w_j)^a_j = sum_k C(a_j, k) w_j^(a_j-k) z_j^k
            Poly f(p.dim());
            GaussRat wp(1);
            for (unsigned k = a[j] + 1; k-- > 0;) {
                MultiIndex e(p.dim());
                e[j] = k;
                f.add_term(e, wp * GaussRat(Rational(binomial(a[j], k))));
                wp *= w0[j];
            }
            t = t * f;
        }
        r += t;
    }
    return r;
}

inline std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, c] : p.terms()) {
        std::string mono;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a[j] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "z" + std::to_string(j + 1);
            if (a[j] > 1)
                mono += "^" + std::to_string(a[j]);
        }
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            Rational mag = abs(c.re());
            if (mag != 1 || mono.empty())
                coeff = mag.get_str();
        } else if (sgn(c.re()) == 0) {
            negative = sgn(c.im()) < 0;
            Rational mag = abs(c.im());
            coeff = (mag == 1 ? std::string() : mag.get_str() + "*") + "i";
        } else {
            coeff = "(" + to_string(c) + ")";
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        out += coeff;
        if (!coeff.empty() && !mono.empty())
            out += "*";
        out += mono;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

} // namespace hilmod
