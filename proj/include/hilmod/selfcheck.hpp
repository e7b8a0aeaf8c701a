#pragma once

// The bundled invariant corpus behind `hilmod selfcheck`. Each check recomputes a known
// answer from scratch; none of them consult cached results.

#include "canonical.hpp"
#include "curvature.hpp"
#include "errors.hpp"
#include "graded_ideal.hpp"
#include "kernel_models.hpp"
#include "parse.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hilmod {

struct SelfcheckOptions {
    bool empty = false;            // run nothing
    bool corrupt_weights = false;  // test hook: perturb every kernel weight table
};

struct SelfcheckEntry {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline IdealSpec sc_ideal(std::size_t dim, std::initializer_list<const char*> gens)
{
    std::vector<Poly> g;
    for (const char* s : gens)
        g.push_back(parse_poly(s, dim));
    return IdealSpec(dim, std::move(g));
}

inline Poly sc_poly(const char* s, std::size_t dim = 2) { return parse_poly(s, dim); }

inline DiagonalKernel sc_kernel(const DiagonalKernel& K, const SelfcheckOptions& opt)
{
    if (!opt.corrupt_weights)
        return K;
    return DiagonalKernel::custom(
        K.dim(), [K](const MultiIndex& a) -> Rational { return K.weight(a) * (1 + a[0]); }, "corrupted " + K.name());
}

// the ideals used for certificate checks: minimal homogeneous generators, m in {2, 3},
// degree gaps up to 3
inline std::vector<IdealSpec> sc_corpus()
{
    return {
        sc_ideal(2, {"z1+z2", "z2^2"}),
        sc_ideal(2, {"z1", "z2^4"}),
        sc_ideal(2, {"z1+2*z2", "z1*z2^2+z2^3"}),
        sc_ideal(2, {"z1^2+i*z1*z2", "z2^3"}),
        sc_ideal(2, {"z1-z2", "z2^4"}),
        sc_ideal(3, {"z1+z2+z3", "z2^2-z3^2", "z3^3+z1*z2*z3"}),
        sc_ideal(3, {"z1", "z2^2+z3^2", "z2*z3^3"}),
        sc_ideal(3, {"z1+i*z3", "z2+z3", "z3^4"}),
        sc_ideal(2, {"z1^2", "z1*z2", "z2^3"}),
    };
}

} // namespace detail

inline std::vector<SelfcheckEntry> run_selfcheck(const SelfcheckOptions& opt = {})
{
    using detail::sc_ideal;
    using detail::sc_poly;
    std::vector<SelfcheckEntry> out;
    if (opt.empty)
        return out;

    auto run = [&](const std::string& name, const std::function<std::string()>& body) {
        SelfcheckEntry e{name, false, ""};
        try {
            e.detail = body();
            e.passed = e.detail.empty();
        } catch (const std::exception& ex) {
            e.detail = ex.what();
        }
        out.push_back(std::move(e));
    };

    const auto lsq = sc_ideal(2, {"z1+z2", "z2^2"});

    run("line-square ideal canonical generators", [&]() -> std::string {
        auto g = canonicalize(lsq);
        if (g.q[0] != sc_poly("z1+z2"))
            return "q1 = " + to_string(g.q[0]);
        if (!canonical_span_equal(std::vector<Poly>{g.q[1]}, {sc_poly("(z1-z2)^2")}))
            return "q2 = " + to_string(g.q[1]);
        return "";
    });

    run("grammian reconstruction and positive pivots", [&]() -> std::string {
        for (const auto& I : detail::sc_corpus()) {
            auto g = canonicalize(I);
            if (!g.certificates.grammian || !g.certificates.positive_pivots)
                return "certificate failed";
        }
        return "";
    });

    run("tilde V membership of canonical generators", [&]() -> std::string {
        for (const auto& I : detail::sc_corpus()) {
            auto g = canonicalize(I);
            for (const auto& q : g.q)
                if (!vanishing_conditions_hold(I, q))
                    return to_string(q);
        }
        return "";
    });

    run("rigidity of line-square ideal", [&]() -> std::string {
        auto other = sc_ideal(2, {"z1", "z2^2"});
        if (ideal_equal(lsq, other))
            return "ideal_equal";
        if (canonical_span_equal(canonicalize(lsq), canonicalize(other)))
            return "canonical_span_equal";
        return "";
    });

    run("joint kernel dimensions", [&]() -> std::string {
        if (joint_kernel_dim(sc_ideal(2, {"z1", "z2"})) != 2)
            return "<z1, z2>";
        if (joint_kernel_dim(lsq) != 2)
            return "line-square ideal";
        for (unsigned n = 1; n <= 4; ++n) {
            std::vector<Poly> g;
            for (const auto& a : monomials_of_degree(2, n))
                g.push_back(Poly::monomial(a));
            if (joint_kernel_dim(IdealSpec(2, g)) != n + 1)
                return "m^" + std::to_string(n);
        }
        return "";
    });

    run("non-homogeneous input rejected", [&]() -> std::string {
        try {
            canonicalize(sc_ideal(2, {"z1*(1+z1)", "z1*(1-z2)", "z2^2"}));
        } catch (const PreconditionError& e) {
            return e.kind() == PreconditionError::Kind::non_homogeneous ? "" : e.what();
        }
        return "accepted";
    });

    run("bergman2 weights", [&]() -> std::string {
        auto K = detail::sc_kernel(DiagonalKernel::bergman2(0, 0, 0), opt);
        // unweighted ball: (|a|+2)! / (a! 2)
        for (unsigned i = 0; i <= 4; ++i)
            for (unsigned j = 0; i + j <= 4; ++j) {
                Rational want = Rational(factorial(i + j + 2)) / Rational(factorial(i) * factorial(j) * 2);
                if (K.weight(MultiIndex{i, j}) != want)
                    return "b_" + std::to_string(i) + std::to_string(j);
            }
        return "";
    });

    run("line-square ideal hardy kernel", [&]() -> std::string {
        auto sk = submodule_kernel(detail::sc_kernel(DiagonalKernel::hardy(2), opt), lsq, 3);
        std::size_t n = 0;
        for (const auto& t : sk.terms()) {
            ++n;
            GaussRat want = t.z.degree() == 1 ? GaussRat(Rational(1, 2)) : GaussRat(t.z == t.w ? 1 : 0);
            if (t.coefficient != want)
                return "coefficient of z^" + t.z.to_string() + " conj(w)^" + t.w.to_string();
        }
        return n == 4 + 3 + 4 ? "" : "wrong number of terms";
    });

    run("line-square ideal joint kernel", [&]() -> std::string {
        auto sk = submodule_kernel(detail::sc_kernel(DiagonalKernel::hardy(2), opt), lsq, 3);
        auto v = joint_kernel_vectors(sk, {sc_poly("z1+z2"), sc_poly("(z1-z2)^2")});
        if (v[1] != sc_poly("2*z1^2-2*z1*z2+2*z2^2"))
            return "vector of (z1-z2)^2 is " + to_string(v[1]);
        if (!in_joint_kernel(sk, v[0]) || !in_joint_kernel(sk, v[1]))
            return "vector rejected";
        if (in_joint_kernel(sk, sc_poly("z2^2")))
            return "z2^2 accepted";
        return "";
    });

    run("monomial ideal curvature", [&]() -> std::string {
        auto B = DiagonalKernel::bergman2(Rational(1, 2), Rational(1, 3), Rational(1, 4));
        auto K = detail::sc_kernel(B, opt);
        for (unsigned m = 1; m <= 3; ++m)
            for (unsigned n = 1; n <= 3; ++n) {
                IdealSpec I(2, {Poly::monomial(MultiIndex{m, 0}), Poly::monomial(MultiIndex{0, n})});
                auto F = fiber_section(submodule_kernel(K, I, std::max(m, n)));
                Rational a = curvature_ratio_invariant(B, m, n);
                if (F.gram(0, 0) != GaussRat(B.weight(MultiIndex{m, 0}))
                    || F.gram(1, 1) != GaussRat(B.weight(MultiIndex{0, n})))
                    return "fiber Gram for m=" + std::to_string(m) + ", n=" + std::to_string(n);
                GaussRat th(Rational(1, 2), Rational(-1, 3));
                if (curvature_at(F, 1, {th}).matrix(0, 0) != GaussRat(curvature_closed_form(a, th.norm())))
                    return "curvature for m=" + std::to_string(m) + ", n=" + std::to_string(n);
            }
        return "";
    });

    run("curvature determines a from two samples", [&]() -> std::string {
        for (const Rational& a : {Rational(2), Rational(1, 2), Rational(7, 3)}) {
            Rational rho1(1), rho2(1, 4);
            if (solve_a_from_curvature(rho1, curvature_closed_form(a, rho1), rho2, curvature_closed_form(a, rho2)) != a)
                return "a = " + a.get_str();
        }
        return "";
    });

    run("parameter recovery roundtrips", [&]() -> std::string {
        const Rational triples[][3] = {{0, 0, 0}, {Rational(1, 2), Rational(1, 3), Rational(1, 4)}, {5, Rational(-2, 3), 1}};
        for (const auto& t : triples)
            for (unsigned N = 1; N <= 3; ++N) {
                auto R = forward_samples(DiagonalKernel::bergman2(t[0], t[1], t[2]), N);
                if (!(recover_parameters(R) == BergmanParameters{t[0], t[1], t[2]}))
                    return "N = " + std::to_string(N);
                R.a_NN *= 2;
                try {
                    recover_parameters(R);
                    return "tampered sample accepted";
                } catch (const PreconditionError&) {
                }
            }
        return "";
    });

    return out;
}

} // namespace hilmod
