// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: classification queries, charge-level transforms,
// bracket evaluation, and the verification suites.  All machine output is
// deterministic for a fixed (config, command line, seed).
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "config.hpp"
#include "grammar.hpp"
#include "skly/fm.hpp"
#include "skly/leaves.hpp"
#include "skly/poisson.hpp"
#include "skly/sklyanin.hpp"
#include "util.hpp"
#include "verify.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace skly;
using namespace skly::tool;

namespace {

ordered_json jcomplex(const cplx& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json jpartition(const Partition& p) {
    ordered_json a = ordered_json::array();
    for (int v : p.parts()) a.push_back(v);
    return a;
}

ordered_json jshape(const std::vector<Partition>& shape) {
    ordered_json a = ordered_json::array();
    for (const auto& lam : shape) a.push_back(jpartition(lam));
    return a;
}

void emit(const ordered_json& doc, bool json_mode, const std::string& table) {
    if (json_mode)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << table;
}

std::string partition_list(const std::vector<Partition>& shape) {
    std::string s = "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ",";
        s += shape[i].to_string();
    }
    return s + "]";
}

ChargeVector parse_charge(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected 'deg,rank' at position 0", 0, text);
    try {
        return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("malformed charge vector", 0, text);
    }
}

int run_verify(const RunConfig& cfg, const std::string& suite) {
    std::vector<std::string> selected;
    if (suite == "all")
        selected = suite_names();
    else
        selected.push_back(suite);

    bool all_pass = true;
    ordered_json out;
    out["schema"] = "verify-report.v1";
    out["suites"] = ordered_json::array();
    std::string table;
    for (const auto& name : selected) {
        SuiteReport rep = run_suite(name, cfg);
        all_pass = all_pass && rep.passed();
        ordered_json js;
        js["suite"] = rep.suite;
        js["passed"] = rep.passed();
        js["checks"] = ordered_json::array();
        table += "suite: " + rep.suite + "\n";
        for (const auto& c : rep.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["passed"] = c.passed;
            jc["residual"] = c.residual;
            jc["tolerance"] = c.tolerance;
            jc["detail"] = c.detail;
            js["checks"].push_back(jc);
            std::ostringstream line;
            line << (c.passed ? "  [ok]   " : "  [FAIL] ") << c.name << "  residual=" << c.residual
                 << " tol=" << c.tolerance;
            if (!c.detail.empty()) line << "  (" << c.detail << ")";
            table += line.str() + "\n";
        }
        table += rep.passed() ? "result: PASS\n" : "result: FAIL\n";
        out["suites"].push_back(js);
    }
    out["passed"] = all_pass;
    emit(out, cfg.json, table);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        apply_config_env(cfg);
    } catch (const Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"quadratic Poisson structures on meromorphic endomorphisms of stable bundles "
                 "over a complex elliptic curve: bracket evaluation, leaf classification, and "
                 "charge-level transforms"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string tau_text;
    app.add_option("--tau", tau_text, "curve parameter tau (e.g. '1.2i' or '0.3+1.1i')");
    app.add_option("--tol", cfg.tol, "override the per-layer tolerances");
    app.add_option("--seed", cfg.seed, "seed for randomized suites");
    app.add_flag("--json", cfg.json, "machine-readable JSON output");
    app.add_option("--samples", cfg.samples, "sample count for randomized suites");

    // verify --------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify_cmd
        ->add_option("suite", suite,
                     "one of: jacobi casimir det-identity poi3-cross elliptic lr-oracle fm all")
        ->required();
    verify_cmd->add_option("--max-size", cfg.max_size, "exhaustive bound for lr-oracle");

    // leaves ----------------------------------------------------------------
    auto* leaves_cmd = app.add_subcommand("leaves", "symplectic-leaf classification");
    leaves_cmd->require_subcommand(1);
    leaves_cmd->fallthrough();
    int opt_r = 2, opt_k = 1, opt_n = 1;
    std::string arg1, arg2;
    int opt_line = INT_MIN;
    std::size_t opt_budget = 1000000;

    auto* strata_cmd = leaves_cmd->add_subcommand("strata", "leaf types for rank r, pole degree k");
    strata_cmd->add_option("-r", opt_r, "rank")->required();
    strata_cmd->add_option("-k", opt_k, "pole degree")->required();
    strata_cmd->add_option("--budget", opt_budget, "enumeration budget");

    auto* rank2_cmd =
        leaves_cmd->add_subcommand("rank2", "complete rank-2 classification for pole degree n");
    rank2_cmd->add_option("-n", opt_n, "pole degree")->required();

    auto* fiber_cmd = leaves_cmd->add_subcommand("fiber", "leaves over a determinant fiber");
    fiber_cmd->add_option("zeros", arg1, "zero divisor, e.g. 'p:(2)+q:(1)'")->required();
    fiber_cmd->add_option("-r", opt_r, "rank")->required();

    auto* product_cmd = leaves_cmd->add_subcommand("product", "decomposition of a product of leaves");
    product_cmd->add_option("t1", arg1, "first torsion type, e.g. 'p:(1)'")->required();
    product_cmd->add_option("t2", arg2, "second torsion type")->required();
    product_cmd->add_option("-r", opt_r, "rank")->required();

    auto* census_cmd = leaves_cmd->add_subcommand("census", "the rank-2 simple-pole leaf census");

    auto* dim_cmd = leaves_cmd->add_subcommand("dim", "leaf dimension of a cokernel type");
    dim_cmd->add_option("torsion", arg1, "torsion type, e.g. 'p:(2,1)' or '0'")->required();
    dim_cmd->add_option("-r", opt_r, "rank")->required();
    dim_cmd->add_option("-k", opt_k, "pole degree")->required();
    dim_cmd->add_option("--line", opt_line, "line-summand degree for the non-injective case");

    // fm ----------------------------------------------------------------
    auto* fm_cmd = app.add_subcommand("fm", "charge-level transform calculus");
    fm_cmd->require_subcommand(1);
    fm_cmd->fallthrough();
    long long fm_r = 2, fm_d = 1, fm_k = 1;
    std::string fm_v1, fm_v2;

    auto* solve_cmd = fm_cmd->add_subcommand("solve", "autoequivalence word and xi charge");
    solve_cmd->add_option("-r", fm_r, "rank of E")->required();
    solve_cmd->add_option("-d", fm_d, "degree of E")->required();
    solve_cmd->add_option("-k", fm_k, "degree of the divisor")->required();

    auto* inv_cmd = fm_cmd->add_subcommand("invariants", "pair invariants (|det|, alpha)");
    inv_cmd->add_option("v1", fm_v1, "first charge 'deg,rank'")->required();
    inv_cmd->add_option("v2", fm_v2, "second charge 'deg,rank'")->required();

    auto* cfrac_cmd = fm_cmd->add_subcommand("cfrac", "negative-regular continued fraction of d/r");
    cfrac_cmd->add_option("d", fm_d, "numerator")->required();
    cfrac_cmd->add_option("r", fm_r, "denominator")->required();

    // sklyanin ------------------------------------------------------------
    auto* skl_cmd = app.add_subcommand("sklyanin", "the rank-2 simple-pole bracket");
    skl_cmd->require_subcommand(1);
    skl_cmd->fallthrough();
    std::string emit_mode = "symbolic", t_text;

    auto* bracket_cmd = skl_cmd->add_subcommand("bracket", "bracket matrix {t_a, t_b}");
    bracket_cmd->add_option("--emit", emit_mode, "symbolic | numeric");
    bracket_cmd->add_option("--t", t_text, "evaluation point 't0,t1,t2,t3' (complex entries)");

    auto* det_cmd = skl_cmd->add_subcommand("det", "determinant identity residual statistics");
    auto* jconst_cmd = skl_cmd->add_subcommand("jconst", "the J constants of the curve");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!tau_text.empty()) cfg.tau = parse_complex(tau_text);

        // ------------------------------------------------------------ verify
        if (verify_cmd->parsed()) return run_verify(cfg, suite);

        // ------------------------------------------------------------ leaves
        if (strata_cmd->parsed()) {
            auto types = enumerate_strata(opt_r, opt_k, opt_budget);
            ordered_json out;
            out["schema"] = "leaf-types.v1";
            out["r"] = opt_r;
            out["k"] = opt_k;
            out["count"] = types.size();
            out["types"] = ordered_json::array();
            std::string table;
            for (const auto& lt : types) {
                ordered_json j;
                j["nu"] = jpartition(lt.nu);
                j["lambdas"] = jshape(lt.lambdas);
                j["leaf_dim"] = lt.leaf_dim;
                j["base_dim"] = lt.base_dim;
                j["stratum_dim"] = lt.stratum_dim;
                out["types"].push_back(j);
                table += "nu=" + lt.nu.to_string() + " lambdas=" + partition_list(lt.lambdas) +
                         " leaf_dim=" + std::to_string(lt.leaf_dim) +
                         " base_dim=" + std::to_string(lt.base_dim) +
                         " stratum_dim=" + std::to_string(lt.stratum_dim) + "\n";
            }
            emit(out, cfg.json, table);
            return 0;
        }
        if (rank2_cmd->parsed()) {
            auto fams = rank2_classify(opt_n);
            ordered_json out;
            out["schema"] = "rank2-classification.v1";
            out["n"] = opt_n;
            out["families"] = ordered_json::array();
            std::string table;
            for (const auto& f : fams) {
                ordered_json j;
                j["injective"] = !f.line_degree.has_value();
                j["torsion"] = jshape(f.torsion);
                int dim;
                if (f.line_degree.has_value()) {
                    int dK = *f.line_degree + f.torsion_length() - 2 * opt_n;
                    j["line_degree"] = *f.line_degree;
                    j["kernel_degree"] = dK;
                    dim = leaf_dimension(StableBundleDesc{dK, 1}, f, 2, opt_n);
                    table += "non-injective: d(L)=" + std::to_string(*f.line_degree) +
                             " l(T)=" + std::to_string(f.torsion_length()) +
                             " d(K)=" + std::to_string(dK);
                } else {
                    j["line_degree"] = nullptr;
                    j["kernel_degree"] = nullptr;
                    dim = leaf_dimension(std::nullopt, f, 2, opt_n);
                    table += "injective: torsion=" + partition_list(f.torsion) +
                             " (cycle class fixed by the determinant)";
                }
                j["leaf_dim"] = dim;
                table += " leaf_dim=" + std::to_string(dim) + "\n";
                out["families"].push_back(j);
            }
            emit(out, cfg.json, table);
            return 0;
        }
        if (fiber_cmd->parsed() || product_cmd->parsed()) {
            auto curve = LatticeCurve::make(cfg.tau);
            PointBook book(curve);
            std::vector<TorsionType> types;
            ordered_json out;
            if (fiber_cmd->parsed()) {
                Divisor zeros = parse_divisor(arg1, book);
                types = leaves_over_casimir_fiber(zeros, opt_r);
                out["schema"] = "torsion-types.v1";
                out["operation"] = "fiber";
                out["zeros"] = arg1;
            } else {
                TorsionType t1 = parse_torsion(arg1, book);
                TorsionType t2 = parse_torsion(arg2, book);
                types = product_decompose(t1, t2, opt_r);
                out["schema"] = "torsion-types.v1";
                out["operation"] = "product";
                out["t1"] = format_torsion(t1, book);
                out["t2"] = format_torsion(t2, book);
            }
            out["r"] = opt_r;
            out["count"] = types.size();
            out["types"] = ordered_json::array();
            std::string table;
            for (const auto& t : types) {
                ordered_json j;
                j["text"] = format_torsion(t, book);
                j["support"] = ordered_json::array();
                for (const auto& [p, lam] : t.support()) {
                    ordered_json s;
                    s["point"] = book.name(p);
                    s["partition"] = jpartition(lam);
                    j["support"].push_back(s);
                }
                j["length"] = t.length();
                j["l_max"] = t.l_max();
                out["types"].push_back(j);
                table += format_torsion(t, book) + "\n";
            }
            emit(out, cfg.json, table);
            return 0;
        }
        if (census_cmd->parsed()) {
            auto curve = LatticeCurve::make(cfg.tau);
            SklyaninCensus census = sklyanin_leaf_census(*curve);
            ordered_json out;
            out["schema"] = "census.v1";
            out["tau"] = jcomplex(census.tau);
            out["j_constants"] = {{"J21", jcomplex(census.j21)},
                                  {"J31", jcomplex(census.j31)},
                                  {"J32", jcomplex(census.j32)}};
            out["index_convention"] = ordered_json::array();
            for (const auto& [label, pt] : census.index_convention)
                out["index_convention"].push_back(
                    {{"index", label}, {"covering_point", jcomplex(pt)}});
            out["families"] = ordered_json::array();
            std::string table;
            for (const auto& f : census.families) {
                ordered_json j;
                j["index"] = f.index;
                j["kind"] = f.kind;
                j["description"] = f.description;
                j["leaf_dim"] = f.leaf_dim;
                j["members"] = f.members;
                j["equations"] = f.equations;
                j["vanishing_points"] = ordered_json::array();
                for (const auto& z : f.vanishing_points)
                    j["vanishing_points"].push_back(jcomplex(z));
                j["parameter"] = f.parameter;
                j["removed"] = f.removed;
                j["coker"] = {{"torsion", jshape(f.coker.torsion)},
                              {"line_degree", f.coker.line_degree
                                                  ? ordered_json(*f.coker.line_degree)
                                                  : ordered_json(nullptr)}};
                out["families"].push_back(j);
                table += "(" + std::to_string(f.index) + ") " + f.kind + ": " + f.description +
                         "  leaf_dim=" + std::to_string(f.leaf_dim) + "\n";
                for (std::size_t i = 0; i < f.equations.size(); ++i) {
                    table += "    ";
                    if (i < f.members.size()) table += f.members[i] + ": ";
                    table += f.equations[i] + "\n";
                }
                if (f.equations.empty() && !f.members.empty()) {
                    table += "    members:";
                    for (const auto& m : f.members) table += " " + m;
                    table += "\n";
                }
                if (!f.parameter.empty()) table += "    parameter: " + f.parameter + "\n";
                if (!f.removed.empty()) table += "    removed: " + f.removed + "\n";
            }
            emit(out, cfg.json, table);
            return 0;
        }
        if (dim_cmd->parsed()) {
            auto curve = LatticeCurve::make(cfg.tau);
            PointBook book(curve);
            TorsionType t = parse_torsion(arg1, book);
            CokernelShape shape = CokernelShape::from_torsion(t);
            std::optional<StableBundleDesc> h0;
            if (opt_line != INT_MIN) {
                shape.line_degree = opt_line;
                h0 = StableBundleDesc{opt_line + shape.torsion_length() - 2 * opt_k, 1};
            }
            int dim = leaf_dimension(h0, shape, opt_r, opt_k);
            ordered_json out;
            out["schema"] = "leaf-dim.v1";
            out["torsion"] = format_torsion(t, book);
            out["r"] = opt_r;
            out["k"] = opt_k;
            out["line_degree"] =
                shape.line_degree ? ordered_json(*shape.line_degree) : ordered_json(nullptr);
            out["kernel_degree"] = h0 ? ordered_json(h0->degree) : ordered_json(nullptr);
            out["leaf_dim"] = dim;
            emit(out, cfg.json, "leaf_dim=" + std::to_string(dim) + "\n");
            return 0;
        }

        // ---------------------------------------------------------------- fm
        if (solve_cmd->parsed()) {
            auto fo = solve_fo_correspondence(fm_r, fm_d, fm_k);
            auto inv = pair_invariants(fo.e_charge, fo.ed_charge);
            ordered_json out;
            out["schema"] = "fm-solve.v1";
            out["r"] = fm_r;
            out["d"] = fm_d;
            out["k"] = fm_k;
            out["n"] = fo.n;
            out["word"] = word_to_string(fo.word);
            out["e_charge"] = {fo.e_charge.deg, fo.e_charge.rank};
            out["ed_charge"] = {fo.ed_charge.deg, fo.ed_charge.rank};
            out["xi"] = {fo.xi.deg, fo.xi.rank};
            out["invariants"] = {{"det", inv.det}, {"alpha", inv.alpha}};
            out["note"] = "xi carries degree r^2 k and rank r k n - 1; the charge trace is authoritative";
            std::ostringstream table;
            table << "word: " << word_to_string(fo.word) << "\n"
                  << "xi: deg " << fo.xi.deg << " rank " << fo.xi.rank << "\n"
                  << "invariants: (" << inv.det << ", " << inv.alpha << ")\n";
            emit(out, cfg.json, table.str());
            return 0;
        }
        if (inv_cmd->parsed()) {
            ChargeVector v1 = parse_charge(fm_v1);
            ChargeVector v2 = parse_charge(fm_v2);
            auto inv = pair_invariants(v1, v2);
            ordered_json out;
            out["schema"] = "fm-invariants.v1";
            out["v1"] = {v1.deg, v1.rank};
            out["v2"] = {v2.deg, v2.rank};
            out["det"] = inv.det;
            out["alpha"] = inv.alpha;
            std::ostringstream table;
            table << "(" << inv.det << ", " << inv.alpha << ")\n";
            emit(out, cfg.json, table.str());
            return 0;
        }
        if (cfrac_cmd->parsed()) {
            auto terms = continued_fraction(fm_d, fm_r);
            ordered_json out;
            out["schema"] = "fm-cfrac.v1";
            out["d"] = fm_d;
            out["r"] = fm_r;
            out["terms"] = terms;
            std::string table = "[";
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (i) table += ",";
                table += std::to_string(terms[i]);
            }
            emit(out, cfg.json, table + "]\n");
            return 0;
        }

        // ------------------------------------------------------------ sklyanin
        if (bracket_cmd->parsed()) {
            auto [c1, c2] = sklyanin_casimirs();
            QuadraticBivector b = QuadraticBivector::from_casimirs(c1, c2);
            if (t_text.empty()) {
                if (emit_mode != "symbolic")
                    throw InvalidInput("numeric emission needs --t 't0,t1,t2,t3'");
                ordered_json out;
                out["schema"] = "sklyanin-bracket.v1";
                out["emit"] = "symbolic";
                out["casimirs"] = {c1.to_string(), c2.to_string()};
                out["entries"] = ordered_json::array();
                std::string table = "C1 = " + c1.to_string() + "\nC2 = " + c2.to_string() + "\n";
                for (int a = 0; a < 4; ++a) {
                    ordered_json row = ordered_json::array();
                    for (int c = 0; c < 4; ++c) {
                        row.push_back(b.entry(a, c).to_string());
                        if (a < c)
                            table += "{t" + std::to_string(a) + ",t" + std::to_string(c) +
                                     "} = " + b.entry(a, c).to_string() + "\n";
                    }
                    out["entries"].push_back(row);
                }
                emit(out, cfg.json, table);
                return 0;
            }
            // numeric evaluation at a point
            std::array<cplx, 4> t{};
            {
                std::size_t pos = 0;
                for (int i = 0; i < 4; ++i) {
                    std::size_t comma = t_text.find(',', pos);
                    std::string tok = t_text.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos);
                    t[static_cast<std::size_t>(i)] = parse_complex(tok);
                    if (i < 3) {
                        if (comma == std::string::npos)
                            throw InvalidInput("--t needs four comma-separated complex entries");
                        pos = comma + 1;
                    }
                }
            }
            auto curve = LatticeCurve::make(cfg.tau);
            EndomorphismPoint p{t, curve};
            BivectorDiagnostics diag;
            BivectorMatrix pi = bivector_poi3(p, {}, &diag);
            auto [j21, j31, j32] = j_constants(*curve);
            cplx scalar = 0;
            double jmax = 0;
            for (int a = 0; a < 4; ++a)
                for (int c = 0; c < 4; ++c)
                    jmax = std::max(jmax, std::abs(b.entry(a, c).eval(t, j31, j32)));
            bool found = false;
            for (int a = 0; a < 4 && !found; ++a)
                for (int c = 0; c < 4 && !found; ++c) {
                    cplx jv = b.entry(a, c).eval(t, j31, j32);
                    if (std::abs(jv) > 0.25 * jmax && jmax > 0) {
                        scalar = pi[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] / jv;
                        found = true;
                    }
                }
            ordered_json out;
            out["schema"] = "sklyanin-bracket.v1";
            out["emit"] = "numeric";
            out["tau"] = jcomplex(cfg.tau);
            out["t"] = ordered_json::array();
            for (const auto& v : t) out["t"].push_back(jcomplex(v));
            out["matrix"] = ordered_json::array();
            std::ostringstream table;
            for (int a = 0; a < 4; ++a) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < 4; ++c) {
                    row.push_back(
                        jcomplex(pi[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]));
                    table << pi[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] << " ";
                }
                table << "\n";
                out["matrix"].push_back(row);
            }
            out["fit_residual"] = diag.fit_residual;
            out["antisymmetry"] = diag.antisymmetry;
            out["jacobian_scalar"] = jcomplex(scalar);
            table << "fit_residual=" << diag.fit_residual << " antisymmetry=" << diag.antisymmetry
                  << " jacobian_scalar=" << scalar << "\n";
            emit(out, cfg.json, table.str());
            return 0;
        }
        if (det_cmd->parsed()) {
            if (cfg.samples < 1) throw InvalidInput("--samples must be at least 1");
            auto curve = LatticeCurve::make(cfg.tau);
            SplitMix rng(cfg.seed);
            double worst = 0.0;
            int done = 0;
            while (done < cfg.samples) {
                cplx lam = cplx(rng.uniform(0, 1), 0) + cplx(rng.uniform(0, 1), 0) * curve->tau();
                if (LatticeCurve::lattice_distance(lam, cplx(0.5, 0), curve->tau() / 2.0) < 0.1)
                    continue;
                ++done;
                EndomorphismPoint p{{rng.ccomplex(-1, 1), rng.ccomplex(-1, 1), rng.ccomplex(-1, 1),
                                     rng.ccomplex(-1, 1)},
                                    curve};
                worst = std::max(worst, std::abs(det_identity_residual(p, lam)));
            }
            ordered_json out;
            out["schema"] = "sklyanin-det.v1";
            out["tau"] = jcomplex(cfg.tau);
            out["samples"] = cfg.samples;
            out["max_residual"] = worst;
            out["tolerance"] = cfg.tol_or(1e-9);
            out["passed"] = worst < cfg.tol_or(1e-9);
            std::ostringstream table;
            table << "max residual over " << cfg.samples << " samples: " << worst << "\n";
            emit(out, cfg.json, table.str());
            return worst < cfg.tol_or(1e-9) ? 0 : 1;
        }
        if (jconst_cmd->parsed()) {
            auto curve = LatticeCurve::make(cfg.tau);
            auto [j21, j31, j32] = j_constants(*curve);
            ordered_json out;
            out["schema"] = "sklyanin-jconst.v1";
            out["tau"] = jcomplex(cfg.tau);
            out["modulus_k"] = jcomplex(curve->modulus_k());
            out["rho"] = jcomplex(curve->rho());
            out["J21"] = jcomplex(j21);
            out["J31"] = jcomplex(j31);
            out["J32"] = jcomplex(j32);
            out["index_convention"] = ordered_json::array();
            const cplx tau = curve->tau();
            const std::pair<const char*, cplx> conv[3] = {
                {"a=1", cplx(0.5, 0)}, {"a=2", tau / 2.0}, {"a=3", (cplx(1, 0) + tau) / 2.0}};
            for (const auto& [label, pt] : conv)
                out["index_convention"].push_back(
                    {{"index", label}, {"covering_point", jcomplex(pt)}});
            std::ostringstream table;
            table << "k   = " << format_complex(curve->modulus_k()) << "\n"
                  << "rho = " << format_complex(curve->rho()) << "\n"
                  << "J21 = " << format_complex(j21) << "\n"
                  << "J31 = " << format_complex(j31) << "\n"
                  << "J32 = " << format_complex(j32) << "\n";
            emit(out, cfg.json, table.str());
            return 0;
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << " (token '" << e.token << "')\n";
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const InvalidFraction& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const NoSolution& e) {
        std::cerr << "no solution: " << e.what() << "\n";
        return 2;
    } catch (const UnrealizablePair& e) {
        std::cerr << "unrealizable: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
