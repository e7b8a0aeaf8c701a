#pragma once

// Canonical generators of a homogeneous ideal: every generator of degree n_l is
// corrected by a combination of lower-degree generators so that the result is
// Fock-orthogonal to (m I)_{n_l}. The block matrices A^d(r) and their Grammian
// factorization serve as positivity certificates.

#include "errors.hpp"
#include "graded_ideal.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "poly_space.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace hilmod {

struct DegreeBlock {
    unsigned degree = 0;
    std::vector<Poly> polys;
    std::vector<std::size_t> input_index;  // position of each poly in the input list
};

struct DegreeBlocks {
    std::size_t dim = 0;
    std::vector<DegreeBlock> blocks;  // strictly increasing degrees
};

inline DegreeBlocks degree_blocks(const IdealSpec& I)
{
    require_homogeneous(I, "degree_blocks");
    if (!is_minimal(I))
        throw PreconditionError(PreconditionError::Kind::non_minimal,
                                "the generators are not a minimal generating set ("
                                    + std::to_string(minimal_generator_count(I)) + " needed, "
                                    + std::to_string(I.size()) + " given)");
    DegreeBlocks out;
    out.dim = I.dim();
    std::vector<std::size_t> order(I.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return *I.generators()[a].degree() < *I.generators()[b].degree();
    });
    for (auto k : order) {
        const Poly& p = I.generators()[k];
        unsigned d = *p.degree();
        if (out.blocks.empty() || out.blocks.back().degree != d)
            out.blocks.push_back(DegreeBlock{d, {}, {}});
        out.blocks.back().polys.push_back(p);
        out.blocks.back().input_index.push_back(k);
    }
    return out;
}

/// Row/column label (s, alpha) of the block matrices: s-major, alpha in colex order.
struct BlockIndex {
    std::size_t s;
    MultiIndex alpha;
};

inline std::vector<BlockIndex> block_indices(std::size_t u, std::size_t dim, unsigned gap)
{
    std::vector<BlockIndex> idx;
    auto mons = monomials_of_degree(dim, gap);
    for (std::size_t s = 0; s < u; ++s)
        for (const auto& a : mons)
            idx.push_back(BlockIndex{s, a});
    return idx;
}

struct AMatrix {
    unsigned gap = 0;
    std::vector<BlockIndex> index;
    std::vector<CMatrix> parts;  // A(r), r = 0..gap
    CMatrix total;               // sum of the parts
};

/// A(r)_{(s,alpha),(t,i)} = sum over |nu| = r, nu <= alpha, i >= alpha - nu of
///   C(alpha, nu) i!/(i - alpha + nu)! <d^nu p_s, d^(i - alpha + nu) p_t>_0.
inline AMatrix build_A_matrix(const std::vector<Poly>& source, unsigned gap)
{
    if (source.empty())
        throw PreconditionError(PreconditionError::Kind::invalid_parameters, "empty source block");
    if (gap == 0)
        throw PreconditionError(PreconditionError::Kind::invalid_parameters,
                                "source and target blocks must differ in degree");
    const std::size_t dim = source.front().dim();
    AMatrix A;
    A.gap = gap;
    A.index = block_indices(source.size(), dim, gap);
    const std::size_t n = A.index.size();
    A.total = CMatrix(n, n);
    for (unsigned r = 0; r <= gap; ++r) {
        CMatrix part(n, n);
        auto nus = monomials_of_degree(dim, r);
        for (std::size_t row = 0; row < n; ++row) {
            const auto& [s, alpha] = A.index[row];
            for (std::size_t col = 0; col < n; ++col) {
                const auto& [t, i] = A.index[col];
                GaussRat entry(0);
                for (const auto& nu : nus) {
                    if (!nu.divides(alpha))
                        continue;
                    MultiIndex k = alpha - nu;  // alpha - nu <= i is required
                    if (!k.divides(i))
                        continue;
                    MultiIndex rest = i - k;
                    Rational coeff(binomial(alpha, nu) * i.factorial());
                    coeff /= Rational(rest.factorial());
                    entry += GaussRat(coeff)
                             * fock_inner(partial(source[s], nu), partial(source[t], rest));
                }
                part(row, col) = entry;
            }
        }
        A.total += part;
        A.parts.push_back(std::move(part));
    }
    return A;
}

/// Rebuilds A(r) as sum_{|mu| = gap - r} (1/mu!) Gram(X_mu) with
/// X_mu(s, beta) = mu! C(beta, beta - mu) d^(beta - mu) p_s and compares entrywise.
inline bool grammian_decomposition_check(const std::vector<Poly>& source, unsigned gap, unsigned r,
                                         const CMatrix& part)
{
    if (r > gap || source.empty())
        return false;
    const std::size_t dim = source.front().dim();
    auto index = block_indices(source.size(), dim, gap);
    const std::size_t n = index.size();
    if (part.rows() != n || part.cols() != n)
        return false;
    CMatrix sum(n, n);
    for (const auto& mu : monomials_of_degree(dim, gap - r)) {
        std::vector<Poly> X;
        for (const auto& [s, beta] : index) {
            if (!mu.divides(beta)) {
                X.push_back(Poly(dim));
                continue;
            }
            Rational c(mu.factorial() * binomial(beta, beta - mu));
            X.push_back(GaussRat(c) * partial(source[s], beta - mu));
        }
        GaussRat w(Rational(1) / Rational(mu.factorial()));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                sum(a, b) += w * fock_inner(X[a], X[b]);
    }
    return sum == part;
}

inline bool grammian_decomposition_check(const std::vector<Poly>& source, unsigned gap, unsigned r)
{
    if (r > gap)
        return false;
    AMatrix A = build_A_matrix(source, gap);
    return grammian_decomposition_check(source, gap, r, A.parts.at(r));
}

struct CorrectionBlock {
    std::size_t source_block = 0;
    AMatrix A;
    std::vector<GaussRat> Gamma;  // -<p_t, d^alpha p_j>_0, indexed like A
    std::vector<GaussRat> gamma;  // coefficients of z^i p_s, indexed like A
    bool grammian_ok = false;
    bool positive_pivots = false;
};

struct CorrectionSystem {
    std::size_t target_block = 0;
    std::size_t target_index = 0;   // position inside the target block
    std::size_t generator = 0;      // position in the input list
    std::vector<CorrectionBlock> sources;
    CMatrix coupled;                // Gram matrix <z^i p_s, z^alpha p_t>_0 over all lower blocks
};

struct GammaEntry {
    std::size_t target = 0;  // input position of q_j^l
    std::size_t source = 0;  // input position of p_s^f
    MultiIndex monomial;     // i
    GaussRat value;
};

struct CanonicalCertificates {
    bool tildeV_membership = false;  // <p, d^alpha q>_0 = 0 for every generator p, |alpha| >= 1
    std::size_t span_rank = 0;       // rank of the classes of q in I / m I
    bool grammian = false;           // every A^d(r) matches its Grammian reconstruction
    bool positive_pivots = false;    // every A^d has positive LDL* pivots
    bool generates = false;          // the q generate the input ideal
};

struct CanonicalGens {
    std::size_t dim = 0;
    std::vector<Poly> q;  // input order
    std::vector<GammaEntry> gamma;
    std::vector<CorrectionSystem> systems;
    CanonicalCertificates certificates;
};

/// True iff <p, d^alpha q>_0 = 0 for all generators p and 1 <= |alpha| <= deg q.
inline bool vanishing_conditions_hold(const IdealSpec& I, const Poly& q)
{
    if (q.is_zero())
        return true;
    for (unsigned a = 1; a <= *q.degree(); ++a)
        for (const auto& alpha : monomials_of_degree(I.dim(), a)) {
            Poly dq = partial(q, alpha);
            for (const auto& p : I.generators())
                if (!fock_inner(p, dq).is_zero())
                    return false;
        }
    return true;
}

/// Sum over degrees of the rank of the given homogeneous polys modulo (m I)_d.
inline std::size_t rank_modulo_mI(const IdealSpec& I, const std::vector<Poly>& polys)
{
    std::size_t total = 0;
    unsigned top = 0;
    for (const auto& p : polys)
        if (!p.is_zero())
            top = std::max(top, *p.degree());
    for (unsigned d = 0; d <= top; ++d) {
        MonomialFrame frame = MonomialFrame::degrees(I.dim(), d, d);
        auto rows = detail::m_times_rows(I, d, frame);
        std::size_t base = row_basis(rows, frame.size()).size();
        bool any = false;
        for (const auto& p : polys)
            if (!p.is_zero() && *p.degree() == d) {
                rows.push_back(frame.to_row(p.homogeneous_component(d)));
                any = true;
            }
        if (any)
            total += row_basis(rows, frame.size()).size() - base;
    }
    return total;
}

struct CanonicalizeOptions {
    bool minimize = false;  // drop redundant generators first instead of rejecting them
};

inline CanonicalGens canonicalize(const IdealSpec& input, CanonicalizeOptions opt = {})
{
    require_homogeneous(input, "canonicalize");
    const IdealSpec I = opt.minimize ? minimize(input) : input;
    DegreeBlocks B = degree_blocks(I);
    const std::size_t m = I.dim();

    CanonicalGens out;
    out.dim = m;
    out.q = I.generators();
    bool grammian = true, pivots = true;

    // certificates of the block matrices A^d(r), one per (source, target) block pair
    std::vector<std::vector<AMatrix>> Amat(B.blocks.size());
    std::vector<std::vector<bool>> Agram(B.blocks.size()), Apiv(B.blocks.size());
    for (std::size_t l = 1; l < B.blocks.size(); ++l)
        for (std::size_t d = 0; d < l; ++d) {
            const auto& src = B.blocks[d];
            unsigned gap = B.blocks[l].degree - src.degree;
            AMatrix A = build_A_matrix(src.polys, gap);
            bool g = true;
            for (unsigned r = 0; r <= gap; ++r)
                g = g && grammian_decomposition_check(src.polys, gap, r, A.parts[r]);
            bool p = is_positive_definite(A.total);
            if (!g)
                throw InconsistencyError("A matrix differs from its Grammian reconstruction");
            if (!p)
                throw InconsistencyError("A matrix has a non-positive pivot");
            grammian = grammian && g;
            pivots = pivots && p;
            Amat[l].push_back(std::move(A));
            Agram[l].push_back(g);
            Apiv[l].push_back(p);
        }

    for (std::size_t l = 1; l < B.blocks.size(); ++l) {
        const unsigned nl = B.blocks[l].degree;
        // unknowns and conditions share the labels (d, s, alpha), |alpha| = n_l - n_d
        struct Label {
            std::size_t block, s;
            MultiIndex alpha;
            Poly shifted;  // z^alpha p_s^d
        };
        std::vector<Label> labels;
        for (std::size_t d = 0; d < l; ++d)
            for (const auto& [s, alpha] : block_indices(B.blocks[d].polys.size(), m, nl - B.blocks[d].degree))
                labels.push_back(Label{d, s, alpha, Poly::monomial(alpha) * B.blocks[d].polys[s]});
        const std::size_t n = labels.size();
        CMatrix C(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                C(a, b) = fock_inner(labels[b].shifted, labels[a].shifted);

        for (std::size_t j = 0; j < B.blocks[l].polys.size(); ++j) {
            const Poly& pj = B.blocks[l].polys[j];
            CorrectionSystem sys;
            sys.target_block = l;
            sys.target_index = j;
            sys.generator = B.blocks[l].input_index[j];
            sys.coupled = C;

            std::vector<GaussRat> rhs(n);
            for (std::size_t a = 0; a < n; ++a) {
                const auto& lab = labels[a];
                GaussRat Gamma = -fock_inner(B.blocks[lab.block].polys[lab.s], partial(pj, lab.alpha));
                rhs[a] = conj(Gamma);
            }
            auto gamma = solve(C, rhs);
            if (!gamma)
                throw InconsistencyError("correction system for generator "
                                         + std::to_string(sys.generator + 1) + " has no solution");

            Poly q = pj;
            for (std::size_t a = 0; a < n; ++a) {
                const auto& lab = labels[a];
                const GaussRat& g = (*gamma)[a];
                if (!g.is_zero())
                    q += g * lab.shifted;
                out.gamma.push_back(GammaEntry{sys.generator, B.blocks[lab.block].input_index[lab.s],
                                               lab.alpha, g});
            }

            std::size_t offset = 0;
            for (std::size_t d = 0; d < l; ++d) {
                CorrectionBlock cb;
                cb.source_block = d;
                cb.A = Amat[l][d];
                cb.grammian_ok = Agram[l][d];
                cb.positive_pivots = Apiv[l][d];
                const std::size_t len = cb.A.index.size();
                for (std::size_t a = offset; a < offset + len; ++a) {
                    cb.Gamma.push_back(conj(rhs[a]));
                    cb.gamma.push_back((*gamma)[a]);
                }
                offset += len;
                sys.sources.push_back(std::move(cb));
            }
            out.q[sys.generator] = q;
            out.systems.push_back(std::move(sys));
        }
    }

    auto& cert = out.certificates;
    cert.grammian = grammian;
    cert.positive_pivots = pivots;
    cert.tildeV_membership = true;
    for (const auto& q : out.q)
        cert.tildeV_membership = cert.tildeV_membership && vanishing_conditions_hold(I, q);
    cert.span_rank = rank_modulo_mI(I, out.q);
    cert.generates = ideal_equal(IdealSpec(m, out.q), I);
    if (!cert.tildeV_membership)
        throw InconsistencyError("a canonical generator violates the vanishing conditions");
    if (cert.span_rank != out.q.size())
        throw InconsistencyError("canonical generators are dependent modulo m I");
    if (!cert.generates)
        throw InconsistencyError("canonical generators do not generate the ideal");
    return out;
}

/// Equality of the linear spans of two canonical sets.
inline bool canonical_span_equal(const std::vector<Poly>& a, const std::vector<Poly>& b)
{
    if (a.empty() || b.empty())
        return a.empty() && b.empty();
    const std::size_t dim = a.front().dim();
    unsigned top = 0;
    for (const auto* list : {&a, &b})
        for (const auto& p : *list) {
            p.check_dim(a.front());
            if (!p.is_zero())
                top = std::max(top, *p.degree());
        }
    MonomialFrame frame = MonomialFrame::degrees(dim, 0, top);
    std::vector<Row> ra, rb;
    for (const auto& p : a)
        ra.push_back(frame.to_row(p));
    for (const auto& p : b)
        rb.push_back(frame.to_row(p));
    return span_equal(ra, rb, frame.size());
}

inline bool canonical_span_equal(const CanonicalGens& g1, const CanonicalGens& g2)
{
    if (g1.dim != g2.dim)
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "canonical sets in different numbers of variables");
    return canonical_span_equal(g1.q, g2.q);
}

/// Report only: counts distinct monomials in the canonical set and checks whether the
/// reduced basis of each degree consists of single monomials. Not a decision procedure.
struct MonomialReport {
    std::size_t distinct_monomials = 0;
    bool single_term_basis = false;
};

inline MonomialReport monomial_heuristic(const CanonicalGens& g)
{
    MonomialReport rep;
    std::vector<MultiIndex> seen;
    unsigned top = 0;
    for (const auto& p : g.q) {
        top = std::max(top, *p.degree());
        for (const auto& [a, c] : p.terms())
            if (std::find(seen.begin(), seen.end(), a) == seen.end())
                seen.push_back(a);
    }
    rep.distinct_monomials = seen.size();
    rep.single_term_basis = true;
    for (unsigned d = 0; d <= top; ++d) {
        std::vector<Poly> piece;
        for (const auto& p : g.q)
            if (*p.degree() == d)
                piece.push_back(p);
        if (piece.empty())
            continue;
        MonomialFrame frame = MonomialFrame::degrees(g.dim, d, d);
        for (const auto& b : span_basis(piece, frame, g.dim))
            rep.single_term_basis = rep.single_term_basis && b.term_count() == 1;
    }
    return rep;
}

} // namespace hilmod
