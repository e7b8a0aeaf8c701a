#include "support.hpp"

#include <gtest/gtest.h>

using namespace hilmod;
using namespace hilmod::testing;

namespace {

// d^alpha p by repeated first-order partials.
Poly iterated_partial(Poly p, const MultiIndex& alpha)
{
    for (std::size_t j = 0; j < alpha.dim(); ++j)
        for (unsigned k = 0; k < alpha[j]; ++k)
            p = partial(p, j);
    return p;
}

// q(D)p assembled from iterated partials, independent of apply_diff.
Poly slow_apply(const Poly& q, const Poly& p)
{
    Poly r(p.dim());
    for (const auto& [a, c] : q.terms())
        r += c * iterated_partial(p, a);
    return r;
}

} // namespace

TEST(GaussRat, Arithmetic)
{
    GaussRat a(Q(1, 2), Q(1));
    GaussRat b(Q(-3), Q(2, 3));
    EXPECT_EQ(a * b, GaussRat(Q(-3, 2) - Q(2, 3), Q(1, 3) - Q(3)));
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ(a * a.conj(), GaussRat(a.norm()));
    EXPECT_THROW(a / GaussRat(0), std::domain_error);
    EXPECT_EQ(to_string(GaussRat(Q(-3, 4))), "-3/4");
    EXPECT_EQ(to_string(GaussRat(Q(1), Q(-1))), "1-i");
    EXPECT_EQ(to_string(GaussRat(Q(0), Q(5, 2))), "5/2*i");
}

TEST(MultiIndexTest, ColexOrder)
{
    auto m = monomials_of_degree(2, 2);
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m[0], (MultiIndex{2, 0}));
    EXPECT_EQ(m[1], (MultiIndex{1, 1}));
    EXPECT_EQ(m[2], (MultiIndex{0, 2}));
    EXPECT_EQ(count_monomials(3, 4), monomials_of_degree(3, 4).size());
    EXPECT_EQ((MultiIndex{2, 3}).factorial(), 12);
}

TEST(Poly, RingOperations)
{
    EXPECT_TRUE(add(P("z1"), P("-z1")).is_zero());
    EXPECT_EQ(mul(P("z1+z2"), P("z1-z2")), P("z1^2-z2^2"));
    EXPECT_EQ(scale(Q(1, 4), P("4*(z1-z2)^2")), P("(z1-z2)^2"));
    EXPECT_THROW(add(P("z1", 2), P("z1", 3)), PreconditionError);
    EXPECT_FALSE(Poly(2).degree().has_value());
    EXPECT_EQ(*P("z1^2*z2+z1").degree(), 3u);
    EXPECT_EQ(*P("z1^2*z2+z1").low_degree(), 1u);
}

TEST(Poly, CanonicalFormHasNoZeros)
{
    Poly p = P("z1+z2") - P("z2");
    EXPECT_EQ(p.term_count(), 1u);
    EXPECT_EQ(p, P("z1"));
}

TEST(Poly, Star)
{
    EXPECT_EQ(star(P("z1+i*z2")), P("z1-i*z2"));
    EXPECT_EQ(star(P("z1^2")), P("z1^2"));
    Gen g(11);
    for (int k = 0; k < 50; ++k) {
        Poly p = g.poly(3, 4);
        EXPECT_EQ(star(star(p)), p);
    }
}

TEST(Poly, Partial)
{
    EXPECT_EQ(partial(P("z1^2*z2"), 0), P("2*z1*z2"));
    EXPECT_TRUE(partial(P("z2^3"), 0).is_zero());
    EXPECT_THROW(partial(P("z1"), 2), PreconditionError);
    Gen g(12);
    for (int k = 0; k < 50; ++k) {
        Poly p = g.poly(3, 5);
        EXPECT_EQ(partial(partial(p, 0), 1), partial(partial(p, 1), 0));
    }
}

TEST(Poly, ApplyDiff)
{
    EXPECT_EQ(apply_diff(P("z1*z2"), P("z1^2*z2^3")), P("6*z1*z2^2"));
    Gen g(13);
    for (int k = 0; k < 30; ++k) {
        Poly p = g.poly(2, 4);
        EXPECT_EQ(apply_diff(P("1"), p), p);
        Poly q = g.poly(2, 3);
        EXPECT_EQ(apply_diff(q, p), slow_apply(q, p));
    }
}

TEST(Poly, MonomialPairingAtOrigin)
{
    for (std::size_t m = 1; m <= 3; ++m) {
        auto mons = monomials_in_degrees(m, 0, 6);
        for (const auto& a : mons)
            for (const auto& b : mons) {
                GaussRat v = eval(apply_diff(Poly::monomial(a), Poly::monomial(b)), origin(m));
                GaussRat f = fock_inner(Poly::monomial(a), Poly::monomial(b));
                GaussRat expect = a == b ? GaussRat(Rational(a.factorial())) : GaussRat(0);
                ASSERT_EQ(v, expect) << a.to_string() << " " << b.to_string();
                ASSERT_EQ(f, expect);
            }
    }
}

TEST(Poly, Eval)
{
    EXPECT_EQ(eval(P("z1+z2"), {GaussRat(1), GaussRat(-1)}), GaussRat(0));
    EXPECT_EQ(eval(P("z1^2*z2"), {GaussRat(2), GaussRat(3)}), GaussRat(12));
    EXPECT_EQ(eval(Poly(2), {GaussRat(2), GaussRat(3)}), GaussRat(0));
    EXPECT_THROW(eval(P("z1"), {GaussRat(1)}), PreconditionError);
}

TEST(Poly, FockInner)
{
    EXPECT_EQ(fock_inner(P("z1^2"), P("z1^2")), GaussRat(2));
    EXPECT_EQ(fock_inner(P("z1+z2"), P("z1-z2")), GaussRat(0));
    EXPECT_EQ(fock_inner(P("i*z1"), P("z1")), GaussRat::i());
    EXPECT_EQ(fock_inner(P("z1"), P("i*z1")), -GaussRat::i());
    Gen g(14);
    for (int k = 0; k < 50; ++k) {
        Poly p = g.nonzero_poly(3, 4);
        Poly q = g.poly(3, 4);
        GaussRat pp = fock_inner(p, p);
        EXPECT_TRUE(is_positive_real(pp));
        EXPECT_EQ(fock_inner(p, q), conj(fock_inner(q, p)));
        EXPECT_EQ(fock_inner(p, q), conj(fock_inner(star(p), star(q))));
        EXPECT_EQ(fock_inner(p, q), fock_inner(p, q, origin(3)));
    }
}

TEST(Poly, SesquilinearAndAdjointShift)
{
    Gen g(15);
    for (int k = 0; k < 40; ++k) {
        Poly p = g.poly(2, 3), q = g.poly(2, 4), r = g.poly(2, 3);
        GaussRat c = g.scalar();
        EXPECT_EQ(fock_inner(c * p + r, q), c * fock_inner(p, q) + fock_inner(r, q));
        EXPECT_EQ(fock_inner(p, c * q), conj(c) * fock_inner(p, q));
        // multiplication by z_j and d_j are adjoint
        for (std::size_t j = 0; j < 2; ++j)
            EXPECT_EQ(fock_inner(Poly::variable(2, j) * p, q), fock_inner(p, partial(q, j)));
    }
}

TEST(Poly, Leibniz)
{
    Gen g(16);
    for (int k = 0; k < 25; ++k) {
        Poly q = g.poly(2, 4);
        Poly h = g.poly(2, 3);
        MultiIndex alpha = g.multi_index(2, 3);
        Poly lhs = apply_diff(q, Poly::monomial(alpha) * h);
        Poly rhs(2);
        for (unsigned a = 0; a <= alpha[0]; ++a)
            for (unsigned b = 0; b <= alpha[1]; ++b) {
                MultiIndex kk{a, b};
                rhs += GaussRat(Rational(binomial(alpha, kk)))
                       * (Poly::monomial(alpha - kk) * apply_diff(partial(q, kk), h));
            }
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Poly, Translate)
{
    EXPECT_EQ(translate(P("z1"), {GaussRat(1), GaussRat(0)}), P("z1+1"));
    Gen g(17);
    for (int k = 0; k < 30; ++k) {
        Poly p = g.poly(2, 4);
        Point w = g.point(2);
        Point minus{-w[0], -w[1]};
        EXPECT_EQ(translate(p, origin(2)), p);
        EXPECT_EQ(translate(translate(p, w), minus), p);
        // value at a point moves with the translation
        Point u = g.point(2);
        Point uw{u[0] + w[0], u[1] + w[1]};
        EXPECT_EQ(eval(translate(p, w), u), eval(p, uw));
    }
}

TEST(Poly, PairingAtPointByTranslation)
{
    Gen g(18);
    for (int k = 0; k < 30; ++k) {
        Poly p = g.poly(2, 4), q = g.poly(2, 3);
        Point w = g.point(2);
        GaussRat direct = eval(slow_apply(star(q), p), w);
        EXPECT_EQ(fock_inner(p, q, w), direct);
        EXPECT_EQ(fock_inner(translate(p, w), q), direct);
    }
}

TEST(Parse, Grammar)
{
    EXPECT_EQ(P("z1^2 - 2*z1*z2 + 1/4*z2^3"),
              Poly::monomial({2, 0}) + Poly::monomial({1, 1}, GaussRat(-2))
                  + Poly::monomial({0, 3}, GaussRat(Q(1, 4))));
    EXPECT_EQ(P("-3/4"), Poly::constant(2, GaussRat(Q(-3, 4))));
    EXPECT_EQ(P("(1+i)*z1"), Poly::monomial({1, 0}, GaussRat(Q(1), Q(1))));
    EXPECT_EQ(P("i*i"), P("-1"));
    EXPECT_EQ(to_string(P("z1^2 - 2*z1*z2 + 1/4*z2^3")), "z1^2-2*z1*z2+1/4*z2^3");
    Gen g(19);
    for (int k = 0; k < 50; ++k) {
        Poly p = g.poly(3, 4);
        EXPECT_EQ(parse_poly(to_string(p), 3), p) << to_string(p);
    }
}

TEST(Parse, Rejects)
{
    EXPECT_THROW(P("2z1"), ParseError);
    EXPECT_THROW(P("z1 z2"), ParseError);
    EXPECT_THROW(P("z3"), ParseError);
    EXPECT_THROW(P("z0"), ParseError);
    EXPECT_THROW(P("x1"), ParseError);
    EXPECT_THROW(P("1/0"), ParseError);
    EXPECT_THROW(P("z1^"), ParseError);
    EXPECT_THROW(P("(z1"), ParseError);
    EXPECT_THROW(P(""), ParseError);
    EXPECT_THROW(P("z1 +"), ParseError);
}

TEST(Parse, IdealFile)
{
    auto t = parse_ideal_text("# example\ndim 2\n\nz1 + z2   # linear\nz2^2\n");
    EXPECT_EQ(t.dim, 2u);
    ASSERT_EQ(t.generators.size(), 2u);
    EXPECT_EQ(t.generators[1], P("z2^2"));
    EXPECT_THROW(parse_ideal_text("z1\n"), ParseError);
    EXPECT_THROW(parse_ideal_text("dim 0\nz1\n"), ParseError);
    EXPECT_THROW(parse_ideal_text("dim 2\n"), ParseError);
    EXPECT_THROW(parse_ideal_text("dim 2\nz3\n"), ParseError);
}

TEST(Parse, Point)
{
    Point w = parse_point("1/2, -1+i");
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0], GaussRat(Q(1, 2)));
    EXPECT_EQ(w[1], GaussRat(Q(-1), Q(1)));
    EXPECT_THROW(parse_point("z1"), ParseError);
}
