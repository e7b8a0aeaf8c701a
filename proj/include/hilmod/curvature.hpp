#pragma once

// The line bundle on the fiber P^{t-1} over an isolated zero: its section
// s(theta) = K^(1) + sum_j conj(theta_j) K^(j), the Hermitian form
// h(theta) = ||s(theta)||^2, its curvature d dbar log h, and parameter recovery
// for the weighted Bergman spaces of the ball from curvature invariants.

#include "canonical.hpp"
#include "errors.hpp"
#include "kernel_models.hpp"
#include "linalg.hpp"

#include <optional>
#include <vector>

namespace hilmod {

struct FiberSection {
    std::vector<Poly> vectors;  // K^(j), j = 1..t
    CMatrix gram;               // (j, k) entry: <K^(j), K^(k)> in the module
    std::size_t rank() const { return vectors.size(); }
};

/// K^(j) = sum_i (F^{-1})_{ji} g_i(conj D) K(., w)|_{w=0}, F_{ij} = <g_i, g_j>_0, for canonical
/// generators g in their given order.
inline FiberSection fiber_section(const SubmoduleKernel& sk, const std::vector<Poly>& canonical)
{
    const std::size_t t = canonical.size();
    if (t == 0)
        throw PreconditionError(PreconditionError::Kind::invalid_parameters,
                                "fiber section needs at least one generator");
    std::vector<Poly> starred;
    for (const auto& g : canonical)
        starred.push_back(star(g));
    auto v = joint_kernel_vectors(sk, starred);
    CMatrix F(t, t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            F(i, j) = fock_inner(canonical[i], canonical[j]);
    auto Finv = inverse(F);
    if (!Finv)
        throw InconsistencyError("canonical generators have a singular Fock Gram matrix");
    FiberSection fs;
    for (std::size_t j = 0; j < t; ++j) {
        Poly K(sk.ideal.dim());
        for (std::size_t i = 0; i < t; ++i)
            K += (*Finv)(j, i) * v[i];
        fs.vectors.push_back(std::move(K));
    }
    fs.gram = CMatrix(t, t);
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t k = 0; k < t; ++k)
            fs.gram(j, k) = module_inner(sk.ambient, fs.vectors[j], fs.vectors[k]);
    if (!is_positive_definite(fs.gram))
        throw InconsistencyError("fiber vectors are linearly dependent");
    return fs;
}

/// Canonicalizes the ideal of the kernel and builds the section from the result.
inline FiberSection fiber_section(const SubmoduleKernel& sk)
{
    return fiber_section(sk, canonicalize(sk.ideal).q);
}

/// h(theta) = sum_{jk} conj(c_j) c_k G_{jk} with c_chart = 1 and the other c_j = theta.
struct NormForm {
    std::size_t chart = 0;  // zero-based
    CMatrix gram;

    std::size_t rank() const { return gram.rows(); }

    /// Position in c of the a-th chart coordinate.
    std::size_t slot(std::size_t a) const { return a < chart ? a : a + 1; }

    std::vector<GaussRat> coordinates(const Point& theta) const
    {
        if (theta.size() + 1 != rank())
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "chart point needs " + std::to_string(rank() - 1)
                                        + " coordinates, got " + std::to_string(theta.size()));
        std::vector<GaussRat> c(rank(), GaussRat(0));
        c[chart] = GaussRat(1);
        for (std::size_t a = 0; a < theta.size(); ++a)
            c[slot(a)] = theta[a];
        return c;
    }

    GaussRat operator()(const Point& theta) const
    {
        auto c = coordinates(theta);
        GaussRat h(0);
        for (std::size_t j = 0; j < rank(); ++j)
            for (std::size_t k = 0; k < rank(); ++k)
                h += c[j].conj() * c[k] * gram(j, k);
        return h;
    }
};

/// chart is 1-based, as on the command line.
inline NormForm norm_form(const FiberSection& F, std::size_t chart)
{
    if (chart < 1 || chart > F.rank())
        throw PreconditionError(PreconditionError::Kind::index_out_of_range,
                                "chart " + std::to_string(chart) + " of " + std::to_string(F.rank()));
    return NormForm{chart - 1, F.gram};
}

struct CurvatureValue {
    std::size_t chart = 1;
    Point theta;
    CMatrix matrix;  // (a, b) entry: d_a dbar_b log h
};

/// d_a dbar_b log h = (h d_a dbar_b h - d_a h dbar_b h) / h^2 in closed form.
inline CurvatureValue curvature_at(const NormForm& h, const Point& theta)
{
    auto c = h.coordinates(theta);
    const std::size_t t = h.rank();
    const GaussRat hv = h(theta);
    if (!is_positive_real(hv))
        throw InconsistencyError("norm form is not positive at the chart point");
    CurvatureValue out;
    out.chart = h.chart + 1;
    out.theta = theta;
    out.matrix = CMatrix(t - 1, t - 1);
    const GaussRat h2 = hv * hv;
    for (std::size_t a = 0; a + 1 < t; ++a) {
        const std::size_t ia = h.slot(a);
        GaussRat dh(0);  // d/dtheta_a h = sum_j conj(c_j) G_{j, ia}
        for (std::size_t j = 0; j < t; ++j)
            dh += c[j].conj() * h.gram(j, ia);
        for (std::size_t b = 0; b + 1 < t; ++b) {
            const std::size_t ib = h.slot(b);
            GaussRat dbh(0);  // d/dconj(theta_b) h = sum_k G_{ib, k} c_k
            for (std::size_t k = 0; k < t; ++k)
                dbh += h.gram(ib, k) * c[k];
            out.matrix(a, b) = (hv * h.gram(ib, ia) - dh * dbh) / h2;
        }
    }
    return out;
}

inline CurvatureValue curvature_at(const FiberSection& F, std::size_t chart, const Point& theta)
{
    return curvature_at(norm_form(F, chart), theta);
}

inline void require_bergman(const DiagonalKernel& K)
{
    if (K.model() != DiagonalKernel::Model::bergman_ball2)
        throw PreconditionError(PreconditionError::Kind::invalid_parameters,
                                "operation needs the bergman2 model");
}

/// a_{m,n} = b_{0n} / b_{m0}.
inline Rational curvature_ratio_invariant(const DiagonalKernel& K, unsigned m, unsigned n)
{
    if (K.dim() != 2)
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "curvature invariant is defined in two variables");
    return K.weight(MultiIndex{0, n}) / K.weight(MultiIndex{m, 0});
}

/// The four samples a_{N,N}, a_{N,N+1}, a_{N,N+2}, a_{N+1,N}.
struct RecoveryInput {
    unsigned N = 1;
    Rational a_NN, a_NN1, a_NN2, a_N1N;
};

struct BergmanParameters {
    Rational alpha, beta, theta;
    bool operator==(const BergmanParameters&) const = default;
};

inline RecoveryInput forward_samples(const DiagonalKernel& K, unsigned N)
{
    require_bergman(K);
    if (N < 1)
        throw PreconditionError(PreconditionError::Kind::invalid_parameters, "N must be at least 1");
    return RecoveryInput{N, curvature_ratio_invariant(K, N, N), curvature_ratio_invariant(K, N, N + 1),
                         curvature_ratio_invariant(K, N, N + 2), curvature_ratio_invariant(K, N + 1, N)};
}

/// Solves for (alpha, beta, theta) from the four curvature invariants and verifies the
/// answer by recomputing all four.
inline BergmanParameters recover_parameters(const RecoveryInput& R)
{
    using Kind = PreconditionError::Kind;
    if (R.N < 1)
        throw PreconditionError(Kind::invalid_parameters, "N must be at least 1");
    for (const auto* s : {&R.a_NN, &R.a_NN1, &R.a_NN2, &R.a_N1N})
        if (sgn(*s) <= 0)
            throw PreconditionError(Kind::invalid_parameters, "samples must be positive");
    const Rational N(R.N);
    // b_{N+1,0}/b_{N,0} = (A+N+3)/(N+1)
    const Rational r1 = R.a_NN / R.a_N1N;
    const Rational A = r1 * (N + 1) - N - 3;
    if (sgn(A + N + 3) == 0 || sgn(A + N + 4) == 0 || sgn(A + N + 2) == 0)
        throw PreconditionError(Kind::inconsistent_samples, "samples give a singular ratio");
    // b_{0,j+1}/b_{0,j} = (A+j+3)/(A+j+2) * (B+j+2)/(C+j+1) for j = N, N+1
    const Rational r2 = R.a_NN1 / R.a_NN;
    const Rational r3 = R.a_NN2 / R.a_NN1;
    const Rational s2 = r2 * (A + N + 2) / (A + N + 3);
    const Rational s3 = r3 * (A + N + 3) / (A + N + 4);
    // B - s2 C = s2 (N+1) - N - 2,  B - s3 C = s3 (N+2) - N - 3
    Matrix<Rational> M(2, 2);
    M(0, 0) = 1;
    M(0, 1) = -s2;
    M(1, 0) = 1;
    M(1, 1) = -s3;
    std::vector<Rational> rhs{s2 * (N + 1) - N - 2, s3 * (N + 2) - N - 3};
    if (rank(M) < 2)
        throw PreconditionError(Kind::degenerate_system,
                                "the ratio equations do not determine alpha and theta");
    const auto x = *solve(M, rhs);
    const Rational& B = x[0];
    const Rational& C = x[1];
    BergmanParameters p{B - C, A - B, C};
    std::optional<DiagonalKernel> K;
    try {
        K = DiagonalKernel::bergman2(p.alpha, p.beta, p.theta);
    } catch (const PreconditionError& e) {
        throw PreconditionError(Kind::inconsistent_samples,
                                std::string("recovered parameters are invalid: ") + e.what());
    }
    const RecoveryInput back = forward_samples(*K, R.N);
    if (back.a_NN != R.a_NN || back.a_NN1 != R.a_NN1 || back.a_NN2 != R.a_NN2 || back.a_N1N != R.a_N1N)
        throw PreconditionError(Kind::inconsistent_samples,
                                "recovered parameters do not reproduce the samples");
    return p;
}

/// Curvature of the chart-1 form b_{m0} + b_{0n} |theta|^2 in closed form: a / (1 + a rho)^2,
/// rho = |theta|^2.
inline Rational curvature_closed_form(const Rational& a, const Rational& rho)
{
    Rational d = 1 + a * rho;
    return a / (d * d);
}

/// a from two samples (rho_k, kappa_k) of kappa = a/(1 + a rho)^2. One sample does not
/// determine a (a and 1/(a rho^2) give the same value); two with different rho do.
/// Each sample gives kappa rho^2 a^2 + (2 kappa rho - 1) a + kappa = 0; the a^2 terms are
/// eliminated to get a linear equation.
inline Rational solve_a_from_curvature(const Rational& rho1, const Rational& kappa1, const Rational& rho2,
                                       const Rational& kappa2)
{
    using Kind = PreconditionError::Kind;
    if (sgn(kappa1) <= 0 || sgn(kappa2) <= 0 || sgn(rho1) < 0 || sgn(rho2) < 0)
        throw PreconditionError(Kind::invalid_parameters, "curvature samples must be positive");
    const Rational c1 = kappa2 * rho2 * rho2;
    const Rational c2 = kappa1 * rho1 * rho1;
    const Rational lin = (2 * kappa1 * rho1 - 1) * c1 - (2 * kappa2 * rho2 - 1) * c2;
    const Rational cst = kappa1 * c1 - kappa2 * c2;
    if (sgn(lin) == 0)
        throw PreconditionError(Kind::degenerate_system, "the two samples do not determine a");
    const Rational a = -cst / lin;
    if (sgn(a) <= 0 || curvature_closed_form(a, rho1) != kappa1 || curvature_closed_form(a, rho2) != kappa2)
        throw PreconditionError(Kind::inconsistent_samples, "no positive a fits both samples");
    return a;
}

} // namespace hilmod
