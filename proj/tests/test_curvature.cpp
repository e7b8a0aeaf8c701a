#include "support.hpp"

#include <hilmod/curvature.hpp>

#include <gtest/gtest.h>

using namespace hilmod;
using namespace hilmod::testing;

namespace {

Rational oracle_b(const Rational& al, const Rational& be, const Rational& th, unsigned i, unsigned j)
{
    Rational A = al + be + th, B = al + th, C = th;
    Rational b = (A + j + 2) / (A + 2);
    for (unsigned k = 0; k < j; ++k)
        b *= (B + 2 + k) / (C + 1 + k);
    for (unsigned k = 0; k < i; ++k)
        b *= (A + j + 3 + k) / (k + 1);
    return b;
}

GaussRat fubini_study(const Rational& a, const GaussRat& th)
{
    Rational d = 1 + a * th.norm();
    return GaussRat(a / (d * d));
}

// d_a dbar_b log h by differentiating h written as a polynomial in theta and conj(theta)
// taken as independent variables x_a, y_a.
CMatrix oracle_curvature(const CMatrix& G, std::size_t chart, const Point& th)
{
    const std::size_t t = G.rows(), k = t - 1, nv = 2 * k;
    std::vector<Poly> c, cb;
    for (std::size_t j = 0, a = 0; j < t; ++j) {
        if (j == chart) {
            c.push_back(Poly::constant(nv, GaussRat(1)));
            cb.push_back(Poly::constant(nv, GaussRat(1)));
        } else {
            c.push_back(Poly::variable(nv, a));
            cb.push_back(Poly::variable(nv, k + a));
            ++a;
        }
    }
    Poly h(nv);
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t l = 0; l < t; ++l)
            h += G(j, l) * (cb[j] * c[l]);
    Point at(nv);
    for (std::size_t a = 0; a < k; ++a) {
        at[a] = th[a];
        at[k + a] = th[a].conj();
    }
    GaussRat hv = eval(h, at);
    CMatrix out(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            GaussRat ha = eval(partial(h, a), at);
            GaussRat hb = eval(partial(h, k + b), at);
            GaussRat hab = eval(partial(partial(h, a), k + b), at);
            out(a, b) = (hv * hab - ha * hb) / (hv * hv);
        }
    return out;
}

CMatrix random_pd(Gen& g, std::size_t t)
{
    // X^* X + I
    CMatrix X(t, t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            X(i, j) = g.scalar();
    return X.adjoint() * X + CMatrix::identity(t);
}

const std::vector<std::tuple<Rational, Rational, Rational>> kTriples = {
    {Q(0), Q(0), Q(0)}, {Q(1, 2), Q(1, 3), Q(1, 4)}, {Q(-1, 2), Q(7, 3), Q(3, 5)}};

const std::vector<GaussRat> kPoints = {GaussRat(0), GaussRat(1), GaussRat(Q(1, 2), Q(-1, 3)),
                                       GaussRat(Q(-3), Q(2)), GaussRat(Q(0), Q(5, 7))};

FiberSection monomial_fiber(const DiagonalKernel& K, unsigned m, unsigned n)
{
    IdealSpec I(2, {Poly::monomial(MultiIndex{m, 0}), Poly::monomial(MultiIndex{0, n})});
    return fiber_section(submodule_kernel(K, I, std::max(m, n)));
}

} // namespace

TEST(FiberSectionTest, MonomialIdealsBergman)
{
    for (const auto& [al, be, th] : kTriples) {
        auto K = DiagonalKernel::bergman2(al, be, th);
        for (unsigned m = 1; m <= 5; ++m)
            for (unsigned n = 1; n <= 5; ++n) {
                auto F = monomial_fiber(K, m, n);
                ASSERT_EQ(F.rank(), 2u);
                EXPECT_EQ(F.gram(0, 0), GaussRat(oracle_b(al, be, th, m, 0)));
                EXPECT_EQ(F.gram(1, 1), GaussRat(oracle_b(al, be, th, 0, n)));
                EXPECT_TRUE(F.gram(0, 1).is_zero());
                Rational a = oracle_b(al, be, th, 0, n) / oracle_b(al, be, th, m, 0);
                EXPECT_EQ(curvature_ratio_invariant(K, m, n), a);
                auto h = norm_form(F, 1);
                for (const auto& p : kPoints) {
                    EXPECT_EQ(h({p}), GaussRat(oracle_b(al, be, th, m, 0) + oracle_b(al, be, th, 0, n) * p.norm()));
                    EXPECT_EQ(curvature_at(F, 1, {p}).matrix(0, 0), fubini_study(a, p));
                }
            }
    }
}

TEST(FiberSectionTest, HardyMaximalIdeal)
{
    auto F = fiber_section(submodule_kernel(DiagonalKernel::hardy(2), ideal(2, {"z1", "z2"}), 2));
    EXPECT_EQ(F.gram, CMatrix::identity(2));
    EXPECT_EQ(norm_form(F, 1)({GaussRat(Q(1, 2), Q(1))}), GaussRat(Q(9, 4)));
    EXPECT_EQ(curvature_at(F, 1, {GaussRat(1)}).matrix(0, 0), GaussRat(Q(1, 4)));
    EXPECT_EQ(curvature_at(F, 1, {GaussRat(0)}).matrix(0, 0), GaussRat(1));
}

TEST(FiberSectionTest, LineSquareHardy)
{
    auto I = ideal(2, {"z1+z2", "z2^2"});
    auto sk = submodule_kernel(DiagonalKernel::hardy(2), I, 3);
    auto cg = canonicalize(I);
    auto F = fiber_section(sk, cg.q);
    // q2 = c (z1-z2)^2 gives K^(2) = 2(z1^2 - z1 z2 + z2^2) / (8 c), so G_22 = 12 / (64 |c|^2)
    GaussRat c = cg.q[1].coeff(MultiIndex{2, 0});
    ASSERT_EQ(cg.q[1], c * P("(z1-z2)^2"));
    EXPECT_EQ(F.vectors[0], P("1/2*z1+1/2*z2"));
    EXPECT_EQ(F.gram(0, 0), GaussRat(Q(1, 2)));
    EXPECT_EQ(F.gram(1, 1), GaussRat(Q(12, 64) / c.norm()));
    EXPECT_TRUE(F.gram(0, 1).is_zero());
    EXPECT_TRUE(F.gram(1, 0).is_zero());
}

TEST(FiberSectionTest, Preconditions)
{
    auto sk = submodule_kernel(DiagonalKernel::hardy(2), ideal(2, {"z1", "z2"}), 2);
    EXPECT_THROW(fiber_section(sk, {}), PreconditionError);
    auto F = fiber_section(sk);
    EXPECT_THROW(norm_form(F, 0), PreconditionError);
    EXPECT_THROW(norm_form(F, 3), PreconditionError);
    EXPECT_THROW(curvature_at(F, 1, {GaussRat(1), GaussRat(2)}), PreconditionError);
}

TEST(CurvatureTest, MatchesSymbolicDifferentiation)
{
    Gen g(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t t = static_cast<std::size_t>(g.integer(2, 4));
        NormForm h{static_cast<std::size_t>(g.integer(0, static_cast<long>(t) - 1)), random_pd(g, t)};
        Point th;
        for (std::size_t a = 0; a + 1 < t; ++a)
            th.push_back(g.scalar());
        auto K = curvature_at(h, th);
        EXPECT_EQ(K.matrix, oracle_curvature(h.gram, h.chart, th));
        EXPECT_TRUE(K.matrix.is_hermitian());
        EXPECT_TRUE(is_positive_definite(K.matrix));
    }
}

TEST(CurvatureTest, DiagonalAtOrigin)
{
    CMatrix G(3, 3);
    G(0, 0) = GaussRat(2);
    G(1, 1) = GaussRat(5);
    G(2, 2) = GaussRat(Q(1, 3));
    auto K = curvature_at(NormForm{0, G}, {GaussRat(0), GaussRat(0)});
    EXPECT_EQ(K.matrix(0, 0), GaussRat(Q(5, 2)));
    EXPECT_EQ(K.matrix(1, 1), GaussRat(Q(1, 6)));
    EXPECT_TRUE(K.matrix(0, 1).is_zero());
}

TEST(CurvatureTest, ChartChange)
{
    Gen g(11);
    for (int trial = 0; trial < 20; ++trial) {
        CMatrix G = random_pd(g, 2);
        NormForm h1{0, G}, h2{1, G};
        GaussRat th = g.scalar();
        if (th.is_zero())
            continue;
        GaussRat inv = GaussRat(1) / th;
        EXPECT_EQ(h2({inv}) * GaussRat(th.norm()), h1({th}));
        Rational r4 = th.norm() * th.norm();
        EXPECT_EQ(curvature_at(h1, {th}).matrix(0, 0), curvature_at(h2, {inv}).matrix(0, 0) / GaussRat(r4));
    }
}

TEST(CurvatureTest, ClosedFormNotInjectiveAtOneRadius)
{
    // a/(1 + a rho)^2 takes the same value at a and 1/(a rho^2)
    EXPECT_EQ(curvature_closed_form(2, 1), Q(2, 9));
    EXPECT_EQ(curvature_closed_form(Q(1, 2), 1), Q(2, 9));
    EXPECT_EQ(curvature_closed_form(3, Q(1, 4)), curvature_closed_form(Q(16, 3), Q(1, 4)));
}

TEST(CurvatureTest, TwoSamplesDetermineA)
{
    for (const auto& [al, be, th] : kTriples)
        for (unsigned m = 1; m <= 5; ++m)
            for (unsigned n = 1; n <= 5; ++n) {
                auto K = DiagonalKernel::bergman2(al, be, th);
                Rational a = curvature_ratio_invariant(K, m, n);
                auto F = monomial_fiber(K, m, n);
                GaussRat p1(Q(1, 2), Q(1, 2)), p2(2, -1);
                Rational k1 = curvature_at(F, 1, {p1}).matrix(0, 0).re();
                Rational k2 = curvature_at(F, 1, {p2}).matrix(0, 0).re();
                EXPECT_EQ(solve_a_from_curvature(p1.norm(), k1, p2.norm(), k2), a);
                EXPECT_EQ(solve_a_from_curvature(0, a, p2.norm(), k2), a);
            }
    EXPECT_THROW(solve_a_from_curvature(1, Q(2, 9), 1, Q(2, 9)), PreconditionError);
    EXPECT_THROW(solve_a_from_curvature(1, Q(2, 9), 2, Q(1, 2)), PreconditionError);
    EXPECT_THROW(solve_a_from_curvature(1, 0, 2, Q(1, 2)), PreconditionError);
}

TEST(RatioInvariantTest, Examples)
{
    EXPECT_EQ(curvature_ratio_invariant(DiagonalKernel::bergman2(0, 0, 0), 1, 1), 1);
    EXPECT_EQ(curvature_ratio_invariant(DiagonalKernel::hardy(2), 3, 2), 1);
    EXPECT_THROW(curvature_ratio_invariant(DiagonalKernel::hardy(3), 1, 1), PreconditionError);
    EXPECT_THROW(forward_samples(DiagonalKernel::hardy(2), 1), PreconditionError);
}

TEST(RecoveryTest, Roundtrip)
{
    std::vector<std::tuple<Rational, Rational, Rational>> grid = {
        {Q(0), Q(0), Q(0)},         {Q(1, 2), Q(1, 3), Q(1, 4)}, {Q(-1, 2), Q(7, 3), Q(3, 5)},
        {Q(5), Q(-2, 3), Q(-1, 3)}, {Q(1), Q(1), Q(1)},          {Q(-9, 10), Q(-9, 10), Q(9, 10)},
        {Q(3, 7), Q(0), Q(-1, 2)},  {Q(10), Q(20), Q(30)},       {Q(0), Q(-1, 2), Q(0)},
        {Q(2, 3), Q(5, 4), Q(0)},   {Q(-1, 3), Q(4), Q(11, 2)},  {Q(7), Q(-4, 5), Q(-4, 5)},
    };
    for (const auto& [al, be, th] : grid)
        for (unsigned N = 1; N <= 3; ++N) {
            auto R = forward_samples(DiagonalKernel::bergman2(al, be, th), N);
            auto p = recover_parameters(R);
            EXPECT_EQ(p, (BergmanParameters{al, be, th})) << al << "," << be << "," << th << " N=" << N;
        }
}

TEST(RecoveryTest, TamperedSamplesRejected)
{
    auto R = forward_samples(DiagonalKernel::bergman2(Q(1, 2), Q(1, 3), Q(1, 4)), 3);
    for (int which = 0; which < 4; ++which)
        for (const Rational& f : {Q(2), Q(101, 100), Q(1, 3)}) {
            RecoveryInput T = R;
            Rational* s[] = {&T.a_NN, &T.a_NN1, &T.a_NN2, &T.a_N1N};
            *s[which] *= f;
            try {
                auto p = recover_parameters(T);
                ADD_FAILURE() << "accepted tampered sample " << which << " -> " << p.alpha;
            } catch (const PreconditionError& e) {
                EXPECT_TRUE(e.kind() == PreconditionError::Kind::inconsistent_samples
                            || e.kind() == PreconditionError::Kind::degenerate_system);
            }
        }
}

TEST(RecoveryTest, InvalidAndDegenerate)
{
    RecoveryInput R{1, Q(1), Q(-1), Q(1), Q(1)};
    try {
        recover_parameters(R);
        ADD_FAILURE();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.kind(), PreconditionError::Kind::invalid_parameters);
    }
    // A = 0 and s2 = s3 = 1 make the two linear equations parallel
    RecoveryInput D{1, Q(2), Q(8, 3), Q(10, 3), Q(1)};
    try {
        recover_parameters(D);
        ADD_FAILURE();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.kind(), PreconditionError::Kind::degenerate_system);
    }
    EXPECT_THROW(recover_parameters(RecoveryInput{0, Q(1), Q(1), Q(1), Q(1)}), PreconditionError);
}
