#pragma once

// Finite-dimensional polynomial subspaces written in coordinates of a fixed
// list of monomials. Subspaces are stored by a basis in reduced row echelon form.

#include "linalg.hpp"
#include "multi_index.hpp"
#include "poly.hpp"

#include <map>
#include <vector>

namespace hilmod {

class MonomialFrame {
public:
    explicit MonomialFrame(std::vector<MultiIndex> monomials) : mons_(std::move(monomials))
    {
        for (std::size_t k = 0; k < mons_.size(); ++k)
            index_.emplace(mons_[k], k);
    }

    /// Monomials of degree lo..hi in graded colex order.
    static MonomialFrame degrees(std::size_t dim, unsigned lo, unsigned hi)
    {
        return MonomialFrame(monomials_in_degrees(dim, lo, hi));
    }

    std::size_t size() const noexcept { return mons_.size(); }
    const MultiIndex& operator[](std::size_t k) const { return mons_[k]; }
    const std::vector<MultiIndex>& monomials() const noexcept { return mons_; }

    bool contains(const MultiIndex& a) const { return index_.count(a) != 0; }
    std::size_t index_of(const MultiIndex& a) const { return index_.at(a); }

    /// Coordinates of p; terms outside the frame are an error.
    std::vector<GaussRat> to_row(const Poly& p) const
    {
        std::vector<GaussRat> row(mons_.size(), GaussRat(0));
        for (const auto& [a, c] : p.terms()) {
            auto it = index_.find(a);
            if (it == index_.end())
                throw PreconditionError(PreconditionError::Kind::out_of_span,
                                        "monomial " + a.to_string() + " outside the frame");
            row[it->second] = c;
        }
        return row;
    }

    /// Coordinates of p, silently dropping terms outside the frame.
    std::vector<GaussRat> to_row_truncated(const Poly& p) const
    {
        std::vector<GaussRat> row(mons_.size(), GaussRat(0));
        for (const auto& [a, c] : p.terms()) {
            auto it = index_.find(a);
            if (it != index_.end())
                row[it->second] = c;
        }
        return row;
    }

    Poly from_row(std::size_t dim, const std::vector<GaussRat>& row) const
    {
        Poly p(dim);
        for (std::size_t k = 0; k < row.size(); ++k)
            p.add_term(mons_[k], row[k]);
        return p;
    }

    /// alpha! for each frame monomial: the Fock weights.
    std::vector<Rational> fock_weights() const
    {
        std::vector<Rational> w;
        w.reserve(mons_.size());
        for (const auto& a : mons_)
            w.emplace_back(a.factorial());
        return w;
    }

private:
    std::vector<MultiIndex> mons_;
    std::map<MultiIndex, std::size_t, GradedColexLess> index_;
};

using CMatrix = Matrix<GaussRat>;
using Row = std::vector<GaussRat>;

inline CMatrix rows_to_matrix(const std::vector<Row>& rows, std::size_t cols)
{
    return CMatrix::from_rows(rows, cols);
}

/// Nonzero rows of the RREF of the given rows.
inline std::vector<Row> row_basis(const std::vector<Row>& rows, std::size_t cols)
{
    if (rows.empty())
        return {};
    auto rr = rref(rows_to_matrix(rows, cols));
    std::vector<Row> out;
    for (std::size_t k = 0; k < rr.rank(); ++k)
        out.push_back(rr.r.row(k));
    return out;
}

inline std::vector<Poly> span_basis(const std::vector<Poly>& polys, const MonomialFrame& frame,
                                    std::size_t dim)
{
    std::vector<Row> rows;
    for (const auto& p : polys)
        rows.push_back(frame.to_row(p));
    std::vector<Poly> out;
    for (const auto& r : row_basis(rows, frame.size()))
        out.push_back(frame.from_row(dim, r));
    return out;
}

inline std::size_t span_rank(const std::vector<Poly>& polys, const MonomialFrame& frame)
{
    std::vector<Row> rows;
    for (const auto& p : polys)
        rows.push_back(frame.to_row(p));
    return row_basis(rows, frame.size()).size();
}

inline bool in_span(const Row& v, const std::vector<Row>& basis, std::size_t cols)
{
    std::vector<Row> rows = basis;
    std::size_t r0 = row_basis(rows, cols).size();
    rows.push_back(v);
    return row_basis(rows, cols).size() == r0;
}

inline bool span_equal(const std::vector<Row>& a, const std::vector<Row>& b, std::size_t cols)
{
    return row_basis(a, cols) == row_basis(b, cols);
}

/// <x, y>_w = sum_k w_k x_k conj(y_k)
inline GaussRat weighted_inner(const Row& x, const Row& y, const std::vector<Rational>& w)
{
    GaussRat s(0);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero() && !y[k].is_zero())
            s += x[k] * y[k].conj() * GaussRat(w[k]);
    return s;
}

/// {x in span(outer) : <x, s>_w = 0 for all s in sub}, as a row basis.
/// Solved through the normal equations on the coefficients of x in `outer`.
inline std::vector<Row> orthocomplement(const std::vector<Row>& sub, const std::vector<Row>& outer,
                                        const std::vector<Rational>& w)
{
    const std::size_t cols = w.size();
    if (outer.empty())
        return {};
    if (sub.empty())
        return row_basis(outer, cols);
    CMatrix m(sub.size(), outer.size());
    for (std::size_t j = 0; j < sub.size(); ++j)
        for (std::size_t k = 0; k < outer.size(); ++k)
            m(j, k) = weighted_inner(outer[k], sub[j], w);
    std::vector<Row> out;
    for (const auto& c : nullspace(m)) {
        Row x(cols, GaussRat(0));
        for (std::size_t k = 0; k < outer.size(); ++k)
            if (!c[k].is_zero())
                for (std::size_t i = 0; i < cols; ++i)
                    x[i] += c[k] * outer[k][i];
        out.push_back(std::move(x));
    }
    return row_basis(out, cols);
}

/// {q : sum_k w_k q_k s_k = 0 for all s in rows}: the annihilator under the
/// bilinear (unconjugated) pairing.
inline std::vector<Row> annihilator(const std::vector<Row>& rows, const std::vector<Rational>& w)
{
    const std::size_t cols = w.size();
    if (rows.empty()) {
        std::vector<Row> all;
        for (std::size_t k = 0; k < cols; ++k) {
            Row e(cols, GaussRat(0));
            e[k] = GaussRat(1);
            all.push_back(std::move(e));
        }
        return all;
    }
    CMatrix m(rows.size(), cols);
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t k = 0; k < cols; ++k)
            m(j, k) = rows[j][k] * GaussRat(w[k]);
    return row_basis(nullspace(m), cols);
}

} // namespace hilmod
