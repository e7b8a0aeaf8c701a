#pragma once

// Diagonal reproducing kernels K(z, w) = sum_alpha b_alpha z^alpha conj(w)^alpha and
// the kernels of homogeneous submodules, kept degree by degree as a basis of I_d
// together with the inverse of its module Gram matrix.

#include "errors.hpp"
#include "graded_ideal.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "poly_space.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hilmod {

class DiagonalKernel {
public:
    enum class Model { hardy_polydisc, bergman_ball2, custom };

    using WeightFn = std::function<Rational(const MultiIndex&)>;

    static DiagonalKernel hardy(std::size_t dim)
    {
        if (dim == 0)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "Hardy space needs at least one variable");
        DiagonalKernel k(Model::hardy_polydisc, dim);
        return k;
    }

    /// Weighted Bergman space on the unit ball of C^2 with parameters alpha, beta, theta.
    static DiagonalKernel bergman2(Rational alpha, Rational beta, Rational theta)
    {
        const Rational A = alpha + beta + theta;
        if (alpha <= -1 || beta <= -1 || theta <= -1 || A + 2 <= 0)
            throw PreconditionError(PreconditionError::Kind::invalid_parameters,
                                    "need alpha, beta, theta > -1 and alpha+beta+theta+2 > 0, got ("
                                        + alpha.get_str() + ", " + beta.get_str() + ", "
                                        + theta.get_str() + ")");
        DiagonalKernel k(Model::bergman_ball2, 2);
        k.alpha_ = std::move(alpha);
        k.beta_ = std::move(beta);
        k.theta_ = std::move(theta);
        return k;
    }

    static DiagonalKernel custom(std::size_t dim, WeightFn weight, std::string name = "custom")
    {
        DiagonalKernel k(Model::custom, dim);
        k.fn_ = std::move(weight);
        k.name_ = std::move(name);
        return k;
    }

    Model model() const noexcept { return model_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::string& name() const noexcept { return name_; }
    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }
    const Rational& theta() const noexcept { return theta_; }

    /// b_alpha, checked to be positive.
    Rational weight(const MultiIndex& a) const
    {
        if (a.dim() != dim_)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "multi-index " + a.to_string() + " for a kernel in "
                                        + std::to_string(dim_) + " variables");
        Rational b;
        switch (model_) {
        case Model::hardy_polydisc: b = 1; break;
        case Model::bergman_ball2: b = bergman_weight(a[0], a[1]); break;
        case Model::custom: b = fn_(a); break;
        }
        if (sgn(b) <= 0)
            throw PreconditionError(PreconditionError::Kind::invalid_parameters,
                                    "kernel weight at " + a.to_string() + " is " + b.get_str());
        return b;
    }

    /// <z^a, z^a> in the module, i.e. 1/b_a.
    Rational monomial_norm_sq(const MultiIndex& a) const { return Rational(1) / weight(a); }

private:
    DiagonalKernel(Model m, std::size_t dim) : model_(m), dim_(dim)
    {
        name_ = m == Model::hardy_polydisc ? "hardy" : m == Model::bergman_ball2 ? "bergman2" : "custom";
    }

    // b_ij = (A+j+2)/(A+2) * (B+2)_j/(C+1)_j * (A+j+3)_i/i!,
    // A = alpha+beta+theta, B = alpha+theta, C = theta.
    Rational bergman_weight(unsigned i, unsigned j) const
    {
        const Rational A = alpha_ + beta_ + theta_;
        const Rational B = alpha_ + theta_;
        const Rational& C = theta_;
        Rational b = (A + j + 2) / (A + 2);
        b *= pochhammer(B + 2, j) / pochhammer(C + 1, j);
        b *= pochhammer(A + j + 3, i) / Rational(factorial(i));
        return b;
    }

    Model model_;
    std::size_t dim_;
    std::string name_;
    Rational alpha_{0}, beta_{0}, theta_{0};
    WeightFn fn_;
};

inline Rational kernel_coefficient(const DiagonalKernel& K, const MultiIndex& a) { return K.weight(a); }

/// <u, v> in the module: sum_alpha u_alpha conj(v_alpha) / b_alpha.
inline GaussRat module_inner(const DiagonalKernel& K, const Poly& u, const Poly& v)
{
    u.check_dim(v);
    GaussRat s(0);
    for (const auto& [a, c] : u.terms()) {
        GaussRat d = v.coeff(a);
        if (!d.is_zero())
            s += c * d.conj() * GaussRat(K.monomial_norm_sq(a));
    }
    return s;
}

struct KernelTerm {
    MultiIndex z;  // exponent of z
    MultiIndex w;  // exponent of conj(w)
    GaussRat coefficient;
};

struct KernelPiece {
    unsigned degree = 0;
    std::vector<Poly> basis;  // basis of I_d
    CMatrix gram;             // (j, k) entry: <basis_k, basis_j> in the module
    CMatrix gram_inv;
};

struct SubmoduleKernel {
    DiagonalKernel ambient;
    IdealSpec ideal;
    unsigned truncation = 0;
    std::vector<KernelPiece> pieces;  // degrees 0..truncation

    const KernelPiece& piece(unsigned d) const
    {
        if (d > truncation)
            throw PreconditionError(PreconditionError::Kind::out_of_span,
                                    "degree " + std::to_string(d) + " beyond the truncation "
                                        + std::to_string(truncation));
        return pieces[d];
    }

    /// Coefficients of z^alpha conj(w)^beta in K_{[I]} up to bi-degree truncation.
    std::vector<KernelTerm> terms() const
    {
        std::vector<KernelTerm> out;
        for (const auto& pc : pieces) {
            if (pc.basis.empty())
                continue;
            auto mons = monomials_of_degree(ideal.dim(), pc.degree);
            MonomialFrame frame(mons);
            std::vector<Row> rows;
            for (const auto& f : pc.basis)
                rows.push_back(frame.to_row(f));
            const std::size_t n = pc.basis.size();
            for (std::size_t a = 0; a < mons.size(); ++a)
                for (std::size_t b = 0; b < mons.size(); ++b) {
                    GaussRat c(0);
                    for (std::size_t j = 0; j < n; ++j) {
                        if (rows[j][a].is_zero())
                            continue;
                        for (std::size_t k = 0; k < n; ++k)
                            if (!rows[k][b].is_zero())
                                c += rows[j][a] * pc.gram_inv(j, k) * rows[k][b].conj();
                    }
                    if (!c.is_zero())
                        out.push_back(KernelTerm{mons[a], mons[b], c});
                }
        }
        return out;
    }
};

inline SubmoduleKernel submodule_kernel(const DiagonalKernel& K, const IdealSpec& I, unsigned truncation)
{
    require_homogeneous(I, "submodule_kernel");
    if (K.dim() != I.dim())
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "kernel in " + std::to_string(K.dim()) + " variables, ideal in "
                                    + std::to_string(I.dim()));
    if (truncation < I.max_degree())
        throw PreconditionError(PreconditionError::Kind::invalid_parameters,
                                "truncation " + std::to_string(truncation)
                                    + " is below the largest generator degree");
    SubmoduleKernel sk{K, I, truncation, {}};
    for (unsigned d = 0; d <= truncation; ++d) {
        KernelPiece pc;
        pc.degree = d;
        pc.basis = graded_piece(I, d).basis;
        const std::size_t n = pc.basis.size();
        pc.gram = CMatrix(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                pc.gram(j, k) = module_inner(K, pc.basis[k], pc.basis[j]);
        if (n > 0) {
            if (!is_positive_definite(pc.gram))
                throw InconsistencyError("module Gram matrix in degree " + std::to_string(d)
                                         + " is not positive definite");
            pc.gram_inv = *inverse(pc.gram);
        }
        sk.pieces.push_back(std::move(pc));
    }
    return sk;
}

namespace detail {

inline void require_homogeneous_poly(const Poly& v, const char* what)
{
    if (v.is_zero() || !v.is_homogeneous())
        throw PreconditionError(PreconditionError::Kind::non_homogeneous,
                                std::string(what) + " must be a nonzero homogeneous polynomial, got "
                                    + to_string(v));
}

inline bool in_piece(const KernelPiece& pc, const Poly& v, std::size_t dim)
{
    MonomialFrame frame = MonomialFrame::degrees(dim, pc.degree, pc.degree);
    std::vector<Row> rows;
    for (const auto& f : pc.basis)
        rows.push_back(frame.to_row(f));
    return in_span(frame.to_row(v), rows, frame.size());
}

} // namespace detail

/// Orthogonal projection of u onto the submodule, degree by degree up to the truncation.
inline Poly project_to_submodule(const SubmoduleKernel& sk, const Poly& u)
{
    Poly out(u.dim());
    if (u.is_zero())
        return out;
    for (unsigned d = *u.low_degree(); d <= *u.degree(); ++d) {
        Poly ud = u.homogeneous_component(d);
        if (ud.is_zero())
            continue;
        const auto& pc = sk.piece(d);
        const std::size_t n = pc.basis.size();
        std::vector<GaussRat> rhs(n);
        for (std::size_t k = 0; k < n; ++k)
            rhs[k] = module_inner(sk.ambient, ud, pc.basis[k]);
        for (std::size_t j = 0; j < n; ++j) {
            GaussRat c(0);
            for (std::size_t k = 0; k < n; ++k)
                c += pc.gram_inv(j, k) * rhs[k];
            out += c * pc.basis[j];
        }
    }
    return out;
}

/// The vectors q^*(conj D) K(., w) at w = 0, one per q.
inline std::vector<Poly> joint_kernel_vectors(const SubmoduleKernel& sk, const std::vector<Poly>& Q)
{
    std::vector<Poly> out;
    const std::size_t m = sk.ideal.dim();
    for (const auto& q : Q) {
        q.check_dim(Poly(m));
        detail::require_homogeneous_poly(q, "joint kernel generator");
        const auto& pc = sk.piece(*q.degree());
        // pairing of conj(w)^beta with q^*(conj D) at 0 is conj(a_beta) beta!
        Poly v(m);
        const std::size_t n = pc.basis.size();
        for (std::size_t k = 0; k < n; ++k) {
            GaussRat pair(0);
            for (const auto& [beta, a] : q.terms()) {
                GaussRat fk = pc.basis[k].coeff(beta);
                if (!fk.is_zero())
                    pair += a.conj() * GaussRat(Rational(beta.factorial())) * fk.conj();
            }
            if (pair.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                v += (pc.gram_inv(j, k) * pair) * pc.basis[j];
        }
        out.push_back(std::move(v));
    }
    MonomialFrame frame = MonomialFrame::degrees(m, 0, sk.truncation);
    if (!out.empty() && span_rank(out, frame) != out.size())
        throw InconsistencyError("joint kernel vectors are linearly dependent");
    return out;
}

/// M_j^* z^beta = (b_{beta - e_j} / b_beta) z^{beta - e_j}.
inline Poly adjoint_shift(const DiagonalKernel& K, const Poly& v, std::size_t j)
{
    if (j >= v.dim())
        throw PreconditionError(PreconditionError::Kind::index_out_of_range,
                                "shift index " + std::to_string(j + 1));
    Poly out(v.dim());
    const MultiIndex e = MultiIndex::unit(v.dim(), j);
    for (const auto& [beta, c] : v.terms()) {
        if (beta[j] == 0)
            continue;
        MultiIndex lower = beta - e;
        out.add_term(lower, c * GaussRat(K.weight(lower) / K.weight(beta)));
    }
    return out;
}

/// v lies in the joint kernel of the adjoint shifts restricted to the submodule iff
/// P_{[I]} M_j^* v = 0 for every j.
inline bool in_joint_kernel(const SubmoduleKernel& sk, const Poly& v)
{
    detail::require_homogeneous_poly(v, "joint kernel candidate");
    if (!detail::in_piece(sk.piece(*v.degree()), v, sk.ideal.dim()))
        throw PreconditionError(PreconditionError::Kind::out_of_span,
                                to_string(v) + " is not in the submodule");
    for (std::size_t j = 0; j < sk.ideal.dim(); ++j)
        if (!project_to_submodule(sk, adjoint_shift(sk.ambient, v, j)).is_zero())
            return false;
    return true;
}

/// ||v||^2 = sum |c_alpha|^2 / b_alpha for v in the submodule.
inline Rational module_norm_sq(const SubmoduleKernel& sk, const Poly& v)
{
    if (!v.is_zero())
        for (unsigned d = *v.low_degree(); d <= *v.degree(); ++d) {
            Poly vd = v.homogeneous_component(d);
            if (!vd.is_zero() && !detail::in_piece(sk.piece(d), vd, sk.ideal.dim()))
                throw PreconditionError(PreconditionError::Kind::out_of_span,
                                        to_string(v) + " is not in the submodule");
        }
    return module_inner(sk.ambient, v, v).re();
}

} // namespace hilmod
