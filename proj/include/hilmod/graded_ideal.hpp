#pragma once

// Ideals given by generators: graded pieces, Nullstellensatz degree, the
// characteristic space V_w(I), its companion V~_w(I), the envelope and
// minimal generator counts.

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "poly_space.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace hilmod {

class IdealSpec {
public:
    IdealSpec(std::size_t dim, std::vector<Poly> generators) : dim_(dim), gens_(std::move(generators))
    {
        if (dim == 0)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "ideal needs at least one variable");
        if (gens_.empty())
            throw PreconditionError(PreconditionError::Kind::invalid_parameters,
                                    "ideal needs at least one generator");
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            if (gens_[k].dim() != dim)
                throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                        "generator " + std::to_string(k + 1) + " lives in "
                                            + std::to_string(gens_[k].dim()) + " variables");
            if (gens_[k].is_zero())
                throw PreconditionError(PreconditionError::Kind::invalid_parameters,
                                        "generator " + std::to_string(k + 1) + " is zero");
        }
        homogeneous_ = std::all_of(gens_.begin(), gens_.end(),
                                   [](const Poly& p) { return p.is_homogeneous(); });
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool homogeneous() const noexcept { return homogeneous_; }

    unsigned max_degree() const
    {
        unsigned d = 0;
        for (const auto& g : gens_)
            d = std::max(d, *g.degree());
        return d;
    }

    unsigned min_degree() const
    {
        unsigned d = *gens_.front().degree();
        for (const auto& g : gens_)
            d = std::min(d, *g.low_degree());
        return d;
    }

    IdealSpec translated(const Point& w0) const
    {
        std::vector<Poly> t;
        for (const auto& g : gens_)
            t.push_back(translate(g, w0));
        return IdealSpec(dim_, std::move(t));
    }

private:
    std::size_t dim_;
    std::vector<Poly> gens_;
    bool homogeneous_ = false;
};

inline void require_homogeneous(const IdealSpec& I, const char* op)
{
    if (!I.homogeneous())
        throw PreconditionError(PreconditionError::Kind::non_homogeneous,
                                std::string(op) + " needs homogeneous generators");
}

struct GradedPiece {
    unsigned degree = 0;
    std::vector<Poly> basis;
    CMatrix gram;  // Fock inner products <basis_k, basis_j>_0 at (j, k)
};

namespace detail {

/// Rows (in the degree-d frame) spanning I_d: z^beta * p_i with |beta| = d - deg p_i.
inline std::vector<Row> degree_span_rows(const IdealSpec& I, unsigned d, const MonomialFrame& frame)
{
    std::vector<Row> rows;
    for (const auto& p : I.generators()) {
        unsigned e = *p.degree();
        if (e > d)
            continue;
        for (const auto& beta : monomials_of_degree(I.dim(), d - e))
            rows.push_back(frame.to_row(Poly::monomial(beta) * p));
    }
    return rows;
}

/// Rows spanning (m I)_d, i.e. z_j * I_{d-1}.
inline std::vector<Row> m_times_rows(const IdealSpec& I, unsigned d, const MonomialFrame& frame)
{
    std::vector<Row> rows;
    if (d == 0)
        return rows;
    MonomialFrame lower = MonomialFrame::degrees(I.dim(), d - 1, d - 1);
    for (const auto& r : row_basis(degree_span_rows(I, d - 1, lower), lower.size())) {
        Poly f = lower.from_row(I.dim(), r);
        for (std::size_t j = 0; j < I.dim(); ++j)
            rows.push_back(frame.to_row(Poly::variable(I.dim(), j) * f));
    }
    return rows;
}

} // namespace detail

inline GradedPiece graded_piece(const IdealSpec& I, unsigned d)
{
    require_homogeneous(I, "graded_piece");
    MonomialFrame frame = MonomialFrame::degrees(I.dim(), d, d);
    GradedPiece g;
    g.degree = d;
    for (const auto& r : row_basis(detail::degree_span_rows(I, d, frame), frame.size()))
        g.basis.push_back(frame.from_row(I.dim(), r));
    g.gram = CMatrix(g.basis.size(), g.basis.size());
    for (std::size_t j = 0; j < g.basis.size(); ++j)
        for (std::size_t k = 0; k < g.basis.size(); ++k)
            g.gram(j, k) = fock_inner(g.basis[k], g.basis[j]);
    return g;
}

inline unsigned default_degree_bound(const IdealSpec& I) { return 2 * I.max_degree() + 4; }

/// Smallest N with I_N = all forms of degree N, or nullopt when none up to the bound.
inline std::optional<unsigned> nullstellensatz_degree(const IdealSpec& I,
                                                      std::optional<unsigned> bound = std::nullopt)
{
    require_homogeneous(I, "nullstellensatz_degree");
    const unsigned B = bound.value_or(default_degree_bound(I));
    for (unsigned N = 0; N <= B; ++N) {
        MonomialFrame frame = MonomialFrame::degrees(I.dim(), N, N);
        if (row_basis(detail::degree_span_rows(I, N, frame), frame.size()).size() == frame.size())
            return N;
    }
    return std::nullopt;
}

/// Smallest N >= 0 with m_0^N contained in the localization of I at 0; works for
/// any generators. N = 0 exactly when 0 is not a common zero.
inline std::optional<unsigned> local_nullstellensatz_degree(const IdealSpec& I,
                                                            std::optional<unsigned> bound = std::nullopt)
{
    const unsigned B = bound.value_or(default_degree_bound(I));
    for (unsigned N = 0; N <= B; ++N) {
        // m^N lies in I + m^(N+1) iff the truncations of z^beta p_i span every degree-N monomial
        MonomialFrame frame = MonomialFrame::degrees(I.dim(), 0, N);
        std::vector<Row> rows;
        for (const auto& p : I.generators())
            for (const auto& beta : monomials_in_degrees(I.dim(), 0, N))
                rows.push_back(frame.to_row_truncated(Poly::monomial(beta) * p));
        auto basis = row_basis(rows, frame.size());
        const std::size_t r0 = basis.size();
        for (const auto& a : monomials_of_degree(I.dim(), N)) {
            Row e(frame.size(), GaussRat(0));
            e[frame.index_of(a)] = GaussRat(1);
            basis.push_back(std::move(e));
        }
        if (row_basis(basis, frame.size()).size() == r0)
            return N;
    }
    return std::nullopt;
}

struct CharSpace {
    Point point;
    unsigned N = 0;                  // m^N lies in the local ideal at the point
    std::vector<Poly> basis;         // V_w(I), degrees < N
    std::vector<Poly> aux_basis;     // V~_w(I), degrees <= N
    std::vector<Poly> quotient_basis;  // Fock-orthogonal complement of V in V~
};

namespace detail {

inline unsigned require_local_N(const IdealSpec& J, std::optional<unsigned> bound)
{
    auto N = local_nullstellensatz_degree(J, bound);
    if (!N)
        throw PreconditionError(PreconditionError::Kind::not_zero_dimensional,
                                "the point is not an isolated zero of the ideal (no N up to "
                                    + std::to_string(bound.value_or(default_degree_bound(J)))
                                    + ")");
    return *N;
}

/// Rows spanning (I + m^N)/m^N in the frame of degrees < N.
inline std::vector<Row> truncated_ideal_rows(const IdealSpec& J, unsigned N, const MonomialFrame& low)
{
    std::vector<Row> rows;
    if (N == 0)
        return rows;
    for (const auto& p : J.generators())
        for (const auto& beta : monomials_in_degrees(J.dim(), 0, N - 1))
            rows.push_back(low.to_row_truncated(Poly::monomial(beta) * p));
    return row_basis(rows, low.size());
}

} // namespace detail

inline CharSpace char_space(const IdealSpec& I, const Point& w0,
                            std::optional<unsigned> bound = std::nullopt)
{
    if (w0.size() != I.dim())
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "point has " + std::to_string(w0.size()) + " coordinates");
    const IdealSpec J = I.translated(w0);
    const std::size_t m = I.dim();
    CharSpace cs;
    cs.point = w0;
    cs.N = detail::require_local_N(J, bound);
    const unsigned N = cs.N;

    // V: q of degree < N with q(D)p|_0 = sum alpha! q_alpha p_alpha = 0 on (I + m^N)/m^N
    std::vector<Row> V;
    MonomialFrame full = MonomialFrame::degrees(m, 0, N);
    if (N > 0) {
        MonomialFrame low = MonomialFrame::degrees(m, 0, N - 1);
        auto S = detail::truncated_ideal_rows(J, N, low);
        for (const auto& r : annihilator(S, low.fock_weights()))
            V.push_back(full.to_row(low.from_row(m, r)));
    }

    // V~: q of degree <= N with d_i q in V. Unknowns: q, and c_{i,k} with d_i q = sum_k c_{ik} V_k.
    const std::size_t nq = full.size(), nv = V.size();
    CMatrix sys(m * nq, nq + m * nv);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t a = 0; a < nq; ++a) {
            Poly d = partial(Poly::monomial(full[a]), i);
            for (const auto& [beta, c] : d.terms())
                sys(i * nq + full.index_of(beta), a) += c;
        }
        for (std::size_t k = 0; k < nv; ++k)
            for (std::size_t b = 0; b < nq; ++b)
                sys(i * nq + b, nq + i * nv + k) = -V[k][b];
    }
    std::vector<Row> Vt;
    for (const auto& x : nullspace(sys))
        Vt.emplace_back(x.begin(), x.begin() + nq);
    Vt = row_basis(Vt, nq);

    auto Q = orthocomplement(V, Vt, full.fock_weights());
    for (const auto& r : V)
        cs.basis.push_back(full.from_row(m, r));
    for (const auto& r : Vt)
        cs.aux_basis.push_back(full.from_row(m, r));
    for (const auto& r : Q)
        cs.quotient_basis.push_back(full.from_row(m, r));
    if (cs.aux_basis.size() != cs.basis.size() + cs.quotient_basis.size())
        throw InconsistencyError("V is not contained in V~");
    return cs;
}

inline CharSpace char_space(const IdealSpec& I)
{
    return char_space(I, origin(I.dim()));
}

/// dim V~_w(I) - dim V_w(I).
inline std::size_t joint_kernel_dim(const IdealSpec& I, const Point& w0)
{
    auto cs = char_space(I, w0);
    return cs.aux_basis.size() - cs.basis.size();
}

inline std::size_t joint_kernel_dim(const IdealSpec& I) { return joint_kernel_dim(I, origin(I.dim())); }

struct Envelope {
    unsigned N = 0;           // the tail m_w^N is contained in the envelope
    std::vector<Poly> basis;  // the part below degree N, re-centered at w
};

/// {p : q(D)p|_w = 0 for all q in V_w(I)} modulo (z - w)^N.
inline Envelope envelope(const IdealSpec& I, const Point& w0)
{
    auto cs = char_space(I, w0);
    Envelope e;
    e.N = cs.N;
    if (cs.N == 0)
        return e;
    const std::size_t m = I.dim();
    MonomialFrame low = MonomialFrame::degrees(m, 0, cs.N - 1);
    std::vector<Row> V;
    for (const auto& q : cs.basis)
        V.push_back(low.to_row(q));
    Point back;
    for (const auto& c : w0)
        back.push_back(-c);
    for (const auto& r : annihilator(V, low.fock_weights()))
        e.basis.push_back(translate(low.from_row(m, r), back));
    return e;
}

/// dim I_d / (m I)_d summed over the generator degrees.
inline std::size_t minimal_generator_count(const IdealSpec& I)
{
    require_homogeneous(I, "minimal_generator_count");
    std::size_t count = 0;
    for (unsigned d = I.min_degree(); d <= I.max_degree(); ++d) {
        MonomialFrame frame = MonomialFrame::degrees(I.dim(), d, d);
        std::size_t full = row_basis(detail::degree_span_rows(I, d, frame), frame.size()).size();
        std::size_t lower = row_basis(detail::m_times_rows(I, d, frame), frame.size()).size();
        count += full - lower;
    }
    return count;
}

inline bool is_minimal(const IdealSpec& I) { return minimal_generator_count(I) == I.size(); }

/// Drops generators that are redundant modulo m*I, keeping the input order.
inline IdealSpec minimize(const IdealSpec& I)
{
    require_homogeneous(I, "minimize");
    std::vector<Poly> kept;
    for (unsigned d = I.min_degree(); d <= I.max_degree(); ++d) {
        MonomialFrame frame = MonomialFrame::degrees(I.dim(), d, d);
        std::vector<Row> rows = detail::m_times_rows(I, d, frame);
        for (const auto& p : I.generators()) {
            if (*p.degree() != d)
                continue;
            Row r = frame.to_row(p);
            if (in_span(r, rows, frame.size()))
                continue;
            rows.push_back(r);
            kept.push_back(p);
        }
    }
    // restore the input order
    std::vector<Poly> ordered;
    for (const auto& p : I.generators())
        if (std::find(kept.begin(), kept.end(), p) != kept.end()
            && std::find(ordered.begin(), ordered.end(), p) == ordered.end())
            ordered.push_back(p);
    return IdealSpec(I.dim(), std::move(ordered));
}

/// Equality of homogeneous ideals. Both are determined by their pieces in
/// degrees up to the largest generator degree, so comparing those is complete.
inline bool ideal_equal(const IdealSpec& I, const IdealSpec& J)
{
    require_homogeneous(I, "ideal_equal");
    require_homogeneous(J, "ideal_equal");
    if (I.dim() != J.dim())
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "ideals in different numbers of variables");
    const unsigned top = std::max(I.max_degree(), J.max_degree());
    for (unsigned d = 0; d <= top; ++d) {
        MonomialFrame frame = MonomialFrame::degrees(I.dim(), d, d);
        if (!span_equal(detail::degree_span_rows(I, d, frame), detail::degree_span_rows(J, d, frame),
                        frame.size()))
            return false;
    }
    return true;
}

} // namespace hilmod
