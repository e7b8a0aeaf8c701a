// Walks through the ideal <z1+z2, z2^2>: canonical generators, joint kernel, the Hardy
// kernel of the submodule, the fiber curvature, and a Bergman parameter roundtrip.

#include <hilmod/hilmod.hpp>

#include <iostream>

using namespace hilmod;

int main()
{
    IdealSpec I(2, {parse_poly("z1+z2", 2), parse_poly("z2^2", 2)});

    auto g = canonicalize(I);
    std::cout << "canonical generators:\n";
    for (const auto& q : g.q)
        std::cout << "  " << q << "\n";
    std::cout << "joint kernel dimension at 0: " << joint_kernel_dim(I) << "\n";
    std::cout << "joint kernel dimension at (1, -1): "
              << joint_kernel_dim(I, {GaussRat(1), GaussRat(-1)}) << "\n";

    auto sk = submodule_kernel(DiagonalKernel::hardy(2), I, 2);
    std::cout << "Hardy kernel of the submodule up to degree 2:\n";
    for (const auto& t : sk.terms())
        std::cout << "  " << t.coefficient << "  z^" << t.z.to_string() << " conj(w)^" << t.w.to_string() << "\n";

    auto F = fiber_section(sk, g.q);
    std::cout << "fiber Gram diagonal: " << F.gram(0, 0) << ", " << F.gram(1, 1) << "\n";
    for (const auto& th : {GaussRat(0), GaussRat(1), GaussRat(Rational(1, 2), Rational(1, 2))})
        std::cout << "  curvature at theta = " << th << ": " << curvature_at(F, 1, {th}).matrix(0, 0) << "\n";

    auto K = DiagonalKernel::bergman2(Rational(1, 2), Rational(1, 3), Rational(1, 4));
    auto S = forward_samples(K, 2);
    auto p = recover_parameters(S);
    std::cout << "a_{2,2} = " << S.a_NN << ", recovered (alpha, beta, theta) = (" << p.alpha << ", " << p.beta
              << ", " << p.theta << ")\n";
}
