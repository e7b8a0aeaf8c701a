#pragma once

// The `hilmod` command line. run() returns the process exit status:
// 0 success, 2 malformed input, 3 failed mathematical precondition,
// 4 failed internal certificate.

#include "json_out.hpp"

#include <hilmod/hilmod.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hilmod::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 2;
inline constexpr int precondition = 3;
inline constexpr int inconsistency = 4;
} // namespace exit_code

inline IdealSpec load_ideal(const std::string& path)
{
    auto t = read_ideal_file(path);
    return IdealSpec(t.dim, std::move(t.generators));
}

inline Rational parse_real(const std::string& text, const char* what)
{
    GaussRat x = parse_scalar(text);
    if (!x.is_real())
        throw ParseError(std::string(what) + " must be real, got '" + text + "'");
    return x.re();
}

inline Point parse_at(const std::optional<std::string>& at, std::size_t dim)
{
    if (!at)
        return origin(dim);
    Point w = parse_point(*at);
    if (w.size() != dim)
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "point has " + std::to_string(w.size()) + " coordinates, ideal has "
                                    + std::to_string(dim) + " variables");
    return w;
}

struct ModelArgs {
    std::string model;
    std::optional<std::size_t> dim;
    std::string alpha = "0", beta = "0", theta = "0";

    void add_to(CLI::App* cmd, bool need_model)
    {
        auto* m = cmd->add_option("--model", model, "hardy or bergman2")
                      ->check(CLI::IsMember({"hardy", "bergman2"}));
        if (need_model)
            m->required();
        cmd->add_option("--dim", dim, "number of variables (hardy)");
        cmd->add_option("--alpha", alpha, "bergman2 parameter alpha");
        cmd->add_option("--beta", beta, "bergman2 parameter beta");
        cmd->add_option("--theta", theta, "bergman2 parameter theta");
    }

    DiagonalKernel build(std::size_t ideal_dim) const
    {
        if (model == "hardy") {
            std::size_t d = dim.value_or(ideal_dim);
            if (d != ideal_dim)
                throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                        "--dim " + std::to_string(d) + " but the ideal has "
                                            + std::to_string(ideal_dim) + " variables");
            return DiagonalKernel::hardy(d);
        }
        if (dim && *dim != 2)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "bergman2 lives in two variables");
        return DiagonalKernel::bergman2(parse_real(alpha, "--alpha"), parse_real(beta, "--beta"),
                                        parse_real(theta, "--theta"));
    }
};

inline Json model_json(const DiagonalKernel& K)
{
    Json j = Json::object();
    j["name"] = K.name();
    j["dim"] = K.dim();
    if (K.model() == DiagonalKernel::Model::bergman_ball2) {
        j["alpha"] = rational_json(K.alpha());
        j["beta"] = rational_json(K.beta());
        j["theta"] = rational_json(K.theta());
    }
    return j;
}

inline Json certificates_json(const CanonicalCertificates& c)
{
    Json j = Json::object();
    j["tildeV_membership"] = c.tildeV_membership;
    j["span_rank"] = c.span_rank;
    j["grammian"] = c.grammian;
    j["positive_pivots"] = c.positive_pivots;
    j["generates"] = c.generates;
    return j;
}

/// Samples file: a JSON array of {"m": .., "n": .., "a": "p/q"}.
inline RecoveryInput read_samples(const std::string& path, unsigned N)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!doc.is_array())
        throw ParseError(path + ": expected an array of {m, n, a}");
    std::map<std::pair<unsigned, unsigned>, Rational> seen;
    for (const auto& s : doc) {
        if (!s.is_object() || !s.contains("m") || !s.contains("n") || !s.contains("a")
            || !s["m"].is_number_unsigned() || !s["n"].is_number_unsigned())
            throw ParseError(path + ": each sample needs non-negative integers m, n and a value a");
        Rational a;
        if (s["a"].is_string())
            a = parse_real(s["a"].get<std::string>(), "sample a");
        else if (s["a"].is_number_integer())
            a = Rational(s["a"].get<long>());
        else
            throw ParseError(path + ": sample values must be strings \"p/q\" or integers");
        auto key = std::make_pair(s["m"].get<unsigned>(), s["n"].get<unsigned>());
        if (!seen.emplace(key, a).second)
            throw ParseError(path + ": duplicate sample (" + std::to_string(key.first) + ", "
                             + std::to_string(key.second) + ")");
    }
    auto take = [&](unsigned m, unsigned n) {
        auto it = seen.find({m, n});
        if (it == seen.end())
            throw ParseError(path + ": missing sample (" + std::to_string(m) + ", " + std::to_string(n) + ")");
        return it->second;
    };
    return RecoveryInput{N, take(N, N), take(N, N + 1), take(N, N + 2), take(N + 1, N)};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Invariants of polynomial-ideal submodules in exact arithmetic", "hilmod"};
    app.require_subcommand(1);
    app.fallthrough();
    JsonStyle style;
    app.add_flag("--float", style.with_float, "add decimal renderings next to exact values");

    // jointkernel
    std::string jk_file;
    std::optional<std::string> jk_at;
    auto* jk = app.add_subcommand("jointkernel", "characteristic space and joint-kernel dimension at a point");
    jk->add_option("ideal", jk_file, "ideal file")->required();
    jk->add_option("--at", jk_at, "point, e.g. \"1/2, -1+i\" (default: origin)");

    // canonical
    std::string cn_file;
    bool cn_minimize = false;
    auto* cn = app.add_subcommand("canonical", "canonical generators of a homogeneous ideal");
    cn->add_option("ideal", cn_file, "ideal file")->required();
    cn->add_flag("--minimize", cn_minimize, "drop redundant generators instead of rejecting them");

    // equal
    std::string eq_a, eq_b;
    auto* eq = app.add_subcommand("equal", "decide whether two homogeneous ideals are equal");
    eq->add_option("first", eq_a, "ideal file")->required();
    eq->add_option("second", eq_b, "ideal file")->required();

    // envelope
    std::string ev_file;
    std::optional<std::string> ev_at;
    auto* ev = app.add_subcommand("envelope", "envelope of an ideal at a point");
    ev->add_option("ideal", ev_file, "ideal file")->required();
    ev->add_option("--at", ev_at, "point (default: origin)");

    // kernel
    std::string kn_file;
    unsigned kn_trunc = 0;
    ModelArgs kn_model;
    auto* kn = app.add_subcommand("kernel", "reproducing kernel of the submodule up to a bi-degree");
    kn->add_option("ideal", kn_file, "ideal file")->required();
    kn_model.add_to(kn, true);
    kn->add_option("--truncate", kn_trunc, "largest degree kept")->required();

    // curvature
    std::optional<std::string> cv_file;
    std::vector<unsigned> cv_mono;
    std::size_t cv_chart = 1;
    std::optional<std::string> cv_at;
    ModelArgs cv_model;
    auto* cv = app.add_subcommand("curvature", "curvature of the line bundle on the exceptional fiber");
    auto* cv_file_opt = cv->add_option("ideal", cv_file, "ideal file");
    auto* cv_mono_opt = cv->add_option("--ideal-monomial", cv_mono, "m n for the ideal <z1^m, z2^n>")
                            ->expected(2)
                            ->check(CLI::PositiveNumber);
    cv_file_opt->excludes(cv_mono_opt);
    cv_model.add_to(cv, true);
    cv->add_option("--chart", cv_chart, "chart index, 1-based");
    cv->add_option("--at", cv_at, "chart coordinates (default: 0)");

    // recover
    unsigned rc_N = 1;
    std::string rc_file;
    auto* rc = app.add_subcommand("recover", "weighted Bergman parameters from curvature invariants");
    rc->add_option("--N", rc_N, "base index N >= 1")->required();
    rc->add_option("--samples", rc_file, "JSON array of {m, n, a}")->required();

    // selfcheck
    SelfcheckOptions sc_opt;
    auto* sc = app.add_subcommand("selfcheck", "run the bundled invariant corpus");
    sc->add_flag("--empty", sc_opt.empty, "run no checks");
    sc->add_flag("--corrupt-weights", sc_opt.corrupt_weights, "test hook: perturb kernel weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::parse;
    }

    auto emit = [&](const Json& j) { out << j.dump(2) << "\n"; };

    try {
        if (*jk) {
            auto I = load_ideal(jk_file);
            auto w = parse_at(jk_at, I.dim());
            auto cs = char_space(I, w);
            Json j = Json::object();
            j["point"] = point_json(w, style);
            j["N"] = cs.N;
            j["joint_kernel_dim"] = cs.quotient_basis.size();
            j["characteristic_space"] = polys_json(cs.basis, style);
            j["auxiliary_space"] = polys_json(cs.aux_basis, style);
            j["quotient"] = polys_json(cs.quotient_basis, style);
            j["quotient_text"] = poly_texts(cs.quotient_basis);
            emit(j);
        } else if (*cn) {
            auto I = load_ideal(cn_file);
            auto g = canonicalize(I, CanonicalizeOptions{cn_minimize});
            Json j = Json::object();
            j["q"] = polys_json(g.q, style);
            j["q_text"] = poly_texts(g.q);
            Json gam = Json::array();
            for (const auto& e : g.gamma) {
                Json x = Json::object();
                x["target"] = e.target + 1;
                x["source"] = e.source + 1;
                x["monomial"] = exponents_json(e.monomial);
                x["value"] = scalar_json(e.value, style);
                gam.push_back(std::move(x));
            }
            j["gamma"] = std::move(gam);
            j["certificates"] = certificates_json(g.certificates);
            emit(j);
        } else if (*eq) {
            auto I = load_ideal(eq_a);
            auto J = load_ideal(eq_b);
            bool by_pieces = ideal_equal(I, J);
            bool by_canonical = canonical_span_equal(canonicalize(I, {true}), canonicalize(J, {true}));
            if (by_pieces != by_canonical)
                throw InconsistencyError("graded pieces and canonical spans disagree");
            Json j = Json::object();
            j["equal"] = by_pieces;
            emit(j);
        } else if (*ev) {
            auto I = load_ideal(ev_file);
            auto w = parse_at(ev_at, I.dim());
            auto e = envelope(I, w);
            Json j = Json::object();
            j["point"] = point_json(w, style);
            j["N"] = e.N;
            j["basis"] = polys_json(e.basis, style);
            j["basis_text"] = poly_texts(e.basis);
            emit(j);
        } else if (*kn) {
            auto I = load_ideal(kn_file);
            auto K = kn_model.build(I.dim());
            auto sk = submodule_kernel(K, I, kn_trunc);
            Json terms = Json::array();
            for (const auto& t : sk.terms()) {
                Json x = Json::object();
                x["zdeg"] = t.z.degree();
                x["wdeg"] = t.w.degree();
                x["z"] = exponents_json(t.z);
                x["w"] = exponents_json(t.w);
                x["coefficient"] = to_string(t.coefficient);
                if (style.with_float) {
                    x["coefficient_re_float"] = t.coefficient.re().get_d();
                    x["coefficient_im_float"] = t.coefficient.im().get_d();
                }
                terms.push_back(std::move(x));
            }
            Json j = Json::object();
            j["model"] = model_json(K);
            j["truncate"] = kn_trunc;
            j["terms"] = std::move(terms);
            emit(j);
        } else if (*cv) {
            std::optional<IdealSpec> I;
            if (!cv_mono.empty())
                I.emplace(2, std::vector<Poly>{Poly::monomial(MultiIndex{cv_mono[0], 0}),
                                               Poly::monomial(MultiIndex{0, cv_mono[1]})});
            else if (cv_file)
                I = load_ideal(*cv_file);
            else
                throw ParseError("curvature needs an ideal file or --ideal-monomial m n");
            if (!nullstellensatz_degree(*I))
                throw PreconditionError(PreconditionError::Kind::not_zero_dimensional,
                                        "the ideal must vanish only at the origin");
            auto K = cv_model.build(I->dim());
            auto g = canonicalize(*I);
            auto sk = submodule_kernel(K, *I, I->max_degree());
            auto F = fiber_section(sk, g.q);
            auto h = norm_form(F, cv_chart);
            Point th = cv_at ? parse_point(*cv_at) : Point(F.rank() - 1, GaussRat(0));
            auto c = curvature_at(h, th);
            Json j = Json::object();
            j["model"] = model_json(K);
            j["generators"] = poly_texts(g.q);
            j["chart"] = c.chart;
            j["at"] = point_json(th, style);
            j["gram"] = matrix_json(F.gram, style);
            j["norm"] = scalar_json(h(th), style);
            j["curvature"] = matrix_json(c.matrix, style);
            if (!cv_mono.empty()) {
                Rational a = curvature_ratio_invariant(K, cv_mono[0], cv_mono[1]);
                j["a"] = rational_json(a);
                if (style.with_float)
                    j["a_float"] = a.get_d();
            }
            emit(j);
        } else if (*rc) {
            auto R = read_samples(rc_file, rc_N);
            auto p = recover_parameters(R);
            Json j = Json::object();
            j["N"] = rc_N;
            j["alpha"] = rational_json(p.alpha);
            j["beta"] = rational_json(p.beta);
            j["theta"] = rational_json(p.theta);
            if (style.with_float) {
                j["alpha_float"] = p.alpha.get_d();
                j["beta_float"] = p.beta.get_d();
                j["theta_float"] = p.theta.get_d();
            }
            emit(j);
        } else if (*sc) {
            auto rows = run_selfcheck(sc_opt);
            std::size_t passed = 0;
            for (const auto& r : rows) {
                out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
                if (!r.passed)
                    out << "  (" << r.detail << ")";
                out << "\n";
                passed += r.passed;
            }
            out << passed << "/" << rows.size() << " checks passed\n";
            return passed == rows.size() ? exit_code::ok : exit_code::inconsistency;
        }
    } catch (const ParseError& e) {
        err << "hilmod: parse error: " << e.what() << "\n";
        return exit_code::parse;
    } catch (const PreconditionError& e) {
        err << "hilmod: " << e.what() << "\n";
        return exit_code::precondition;
    } catch (const InconsistencyError& e) {
        err << "hilmod: " << e.what() << "\n";
        return exit_code::inconsistency;
    } catch (const std::exception& e) {
        err << "hilmod: internal error: " << e.what() << "\n";
        return exit_code::inconsistency;
    }
    return exit_code::ok;
}

} // namespace hilmod::cli
