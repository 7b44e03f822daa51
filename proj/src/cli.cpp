#include "deriv/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "deriv/isotropy.hpp"
#include "deriv/oracle.hpp"
#include "deriv/parser.hpp"
#include "deriv/printer.hpp"

namespace deriv::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Session {
    bool json_output = false;
    std::uint64_t seed = 0;
    std::string command;
    std::string input_digest;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    // Text lines accumulated alongside the JSON payload.
    std::vector<std::string> lines;
    json verdict = json::object();
    json witness = json::object();
    std::string completeness = "complete";

    void line(std::string s) { lines.push_back(std::move(s)); }

    int finish(std::ostream& out) const {
        if (json_output) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - started)
                               .count();
            json report = {{"schema_version", 1},
                           {"command", command},
                           {"input_digest", input_digest},
                           {"verdict", verdict},
                           {"witness", witness},
                           {"completeness", completeness},
                           {"seed", seed},
                           {"elapsed_ms", elapsed}};
            out << report.dump(2) << "\n";
        } else {
            for (const auto& l : lines) out << l << "\n";
        }
        return kExitOk;
    }
};

json dependency_json(const DependencyWitness& dep) {
    json ks = json::array();
    for (const auto& k : dep.k) ks.push_back(k.str());
    return {{"k", ks}, {"f", to_string(dep.f)}};
}

std::string int_vec_str(const std::vector<Int>& ks) {
    std::string s = "(";
    for (size_t i = 0; i < ks.size(); ++i) s += (i ? ", " : "") + ks[i].str();
    return s + ")";
}

json elements_json(const std::vector<Automorphism>& els) {
    json arr = json::array();
    for (const auto& e : els) arr.push_back(to_string(e));
    return arr;
}

void report_isotropy(Session& s, const IsotropyResult& result) {
    s.completeness = result.completeness == IsotropyResult::Completeness::Complete
                         ? "complete"
                         : "ansatz-only";
    if (result.kind == IsotropyResult::Kind::Finite) {
        GroupCertificate cert = group_table(result);
        s.verdict = {{"kind", "finite"},
                     {"order", cert.order},
                     {"cyclic", cert.cyclic}};
        s.witness = {{"elements", elements_json(result.elements)}};
        s.line("isotropy: finite group of order " + std::to_string(cert.order) +
               (cert.cyclic ? " (cyclic)" : ""));
        for (const auto& e : result.elements) {
            std::string desc;
            for (int v = 0; v < e.context()->size(); ++v)
                desc += (v ? ", " : "") + e.context()->name(v) + " -> " +
                        to_string(e.forward()[static_cast<size_t>(v)]);
            s.line("  element: " + desc);
        }
        s.line("completeness: " + s.completeness);
    } else {
        const AffineFamily& fam = *result.family;
        s.verdict = {{"kind", "affine-family"},
                     {"dimension", fam.dimension()},
                     {"infinite", fam.is_infinite()},
                     {"alpha_free", fam.alpha_free}};
        s.witness = {{"equations", fam.equations},
                     {"unknowns", fam.unknowns},
                     {"invertibility", "det(c) != 0"}};
        s.line(std::string("isotropy: affine family, dimension ") +
               std::to_string(fam.dimension()) + (fam.is_infinite() ? " (infinite)" : ""));
        for (const auto& eq : fam.equations) s.line("  constraint: " + eq);
        s.line("  invertibility: det(c) != 0");
        s.line("completeness: " + s.completeness);
    }
}

ShamsuddinForm require_shamsuddin(const Derivation& d) {
    auto form = recognize_shamsuddin(d);
    if (!form) throw UnsupportedClassError("input is not a Shamsuddin derivation");
    return *form;
}

AnsatzConfig make_config(int deg_bound, int grid_min, int grid_max, std::uint64_t budget,
                         std::uint64_t seed) {
    AnsatzConfig cfg;
    cfg.max_degree = deg_bound;
    cfg.coefficient_grid.clear();
    for (int v = grid_min; v <= grid_max; ++v) cfg.coefficient_grid.push_back(Rational(v));
    if (cfg.coefficient_grid.empty()) throw std::invalid_argument("empty coefficient grid");
    cfg.budget = budget;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tooling for polynomial derivations: simplicity of Shamsuddin "
                 "derivations, polynomial solutions of Z' = aZ + b, and isotropy groups"};
    app.require_subcommand(1);

    Session s;
    app.add_flag("--json", s.json_output, "machine-readable report");
    app.add_option("--seed", s.seed, "seed recorded in reports and used by oracles");

    std::string file, auto_file, a_expr, b_expr, gen_expr, klass = "auto";
    int deg_bound = -1, max_degree = 2, grid_min = -2, grid_max = 2;
    std::uint64_t budget = 2'000'000;
    bool affine_flag = false;

    auto* c_simple = app.add_subcommand("simple", "Lequain simplicity decision");
    c_simple->add_option("file", file)->required();

    auto* c_canon = app.add_subcommand("canonical", "canonical Shamsuddin form");
    c_canon->add_option("file", file)->required();

    auto* c_pab = app.add_subcommand("pab", "remainder-sum polynomial P(a, b)");
    c_pab->add_option("--a", a_expr)->required();
    c_pab->add_option("--b", b_expr)->required();

    auto* c_psolve = app.add_subcommand("psolve", "polynomial solution of Z' = aZ + b");
    c_psolve->add_option("--a", a_expr)->required();
    c_psolve->add_option("--b", b_expr)->required();

    auto* c_iso = app.add_subcommand("isotropy", "isotropy group of a derivation");
    c_iso->add_option("file", file)->required();
    c_iso->add_option("--class", klass)
        ->check(CLI::IsMember({"auto", "shamsuddin", "ydegree", "affine"}));
    c_iso->add_option("--deg-bound", deg_bound);

    auto* c_conj = app.add_subcommand("conjugate", "conjugate a derivation by an automorphism");
    c_conj->add_option("file", file)->required();
    c_conj->add_option("--auto", auto_file)->required();
    c_conj->add_flag("--affine", affine_flag, "derive the inverse of an affine substitution");

    auto* c_stable = app.add_subcommand("stable", "principal d-ideal stability check");
    c_stable->add_option("file", file)->required();
    c_stable->add_option("--gen", gen_expr)->required();

    auto* c_oracle = app.add_subcommand("oracle", "independent brute-force cross-checks");
    c_oracle->require_subcommand(1);
    auto* o_psolve = c_oracle->add_subcommand("psolve", "undetermined-coefficients solver");
    o_psolve->add_option("--a", a_expr)->required();
    o_psolve->add_option("--b", b_expr)->required();
    o_psolve->add_option("--max-degree", max_degree);
    auto* o_iso = c_oracle->add_subcommand("isotropy", "affine-ansatz enumeration");
    o_iso->add_option("file", file)->required();
    o_iso->add_option("--deg-bound", max_degree);
    o_iso->add_option("--grid-min", grid_min);
    o_iso->add_option("--grid-max", grid_max);
    o_iso->add_option("--budget", budget);
    auto* o_ideal = c_oracle->add_subcommand("ideal", "stable principal ideal search");
    o_ideal->add_option("file", file)->required();
    o_ideal->add_option("--max-degree", max_degree);
    o_ideal->add_option("--grid-min", grid_min);
    o_ideal->add_option("--grid-max", grid_max);
    o_ideal->add_option("--budget", budget);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    for (const auto& a : args) s.command += (s.command.empty() ? "" : " ") + a;

    try {
        if (*c_simple || *c_canon) {
            std::string text = read_file(file);
            s.input_digest = fnv1a(text);
            ShamsuddinForm form = require_shamsuddin(parse_derivation(text));
            if (*c_simple) {
                SimplicityVerdict v = shamsuddin_simple(form);
                s.verdict = {{"simple", v.simple}, {"failing_component", v.failing_component}};
                json comps = json::array();
                for (const auto& cv : v.components) {
                    json c = {{"simple", cv.simple}, {"rank", cv.rank}};
                    if (cv.dependency) c["dependency"] = dependency_json(*cv.dependency);
                    comps.push_back(std::move(c));
                }
                s.witness = {{"components", comps}};
                s.line(std::string("simple: ") + (v.simple ? "true" : "false"));
                if (!v.simple) {
                    const auto& dep =
                        *v.components[static_cast<size_t>(v.failing_component)].dependency;
                    s.line("failing component: " + std::to_string(v.failing_component));
                    s.line("dependency k = " + int_vec_str(dep.k));
                    s.line("solution f = " + to_string(dep.f));
                }
            } else {
                s.verdict = {{"s", form.components.size()}};
                json comps = json::array();
                s.line("s = " + std::to_string(form.components.size()));
                for (size_t i = 0; i < form.components.size(); ++i) {
                    const auto& comp = form.components[i];
                    json bs = json::array(), vars = json::array();
                    std::string bs_text;
                    for (size_t j = 0; j < comp.bs.size(); ++j) {
                        bs.push_back(to_string(comp.bs[j]));
                        vars.push_back(form.ctx->name(comp.vars[j]));
                        bs_text += (j ? ", " : "") + to_string(comp.bs[j]);
                    }
                    comps.push_back({{"a", to_string(comp.a)},
                                     {"r", comp.bs.size()},
                                     {"bs", bs},
                                     {"vars", vars}});
                    s.line("component " + std::to_string(i) + ": a = " + to_string(comp.a) +
                           ", r = " + std::to_string(comp.bs.size()) + ", b = [" + bs_text + "]");
                }
                s.witness = {{"components", comps}};
            }
            return s.finish(out);
        }

        if (*c_pab || *c_psolve) {
            UniPoly a = parse_unipoly_expression(a_expr);
            UniPoly b = parse_unipoly_expression(b_expr);
            s.input_digest = fnv1a(a_expr + "|" + b_expr);
            if (a.is_zero()) throw UnsupportedClassError("a must be nonzero");
            if (*c_pab) {
                UniPoly p = pab(a, b);
                s.verdict = {{"pab", to_string(p)}, {"zero", p.is_zero()}};
                s.line("pab = " + to_string(p));
            } else {
                auto f = psolve(a, b);
                s.verdict = {{"solvable", f.has_value()}};
                if (f) {
                    s.verdict["f"] = to_string(*f);
                    s.line("f = " + to_string(*f));
                } else {
                    s.line("no-solution");
                }
            }
            return s.finish(out);
        }

        if (*c_iso) {
            std::string text = read_file(file);
            s.input_digest = fnv1a(text);
            Derivation d = parse_derivation(text);
            IsotropyResult result;
            if (klass == "shamsuddin") {
                result = isotropy_shamsuddin(require_shamsuddin(d), deg_bound);
            } else if (klass == "ydegree") {
                auto yd = YDegreeDerivation::from_derivation(d);
                if (!yd)
                    throw UnsupportedClassError("input is not a two-variable Y-degree-n "
                                                "derivation with n >= 2");
                result = isotropy_two_var(*yd);
            } else if (klass == "affine") {
                int bound = deg_bound >= 0 ? deg_bound : 2;
                result = affine_isotropy_search(d, bound);
            } else {
                if (auto form = recognize_shamsuddin(d)) {
                    result = isotropy_shamsuddin(*form, deg_bound);
                } else if (auto yd = YDegreeDerivation::from_derivation(d)) {
                    result = isotropy_two_var(*yd);
                } else {
                    result = affine_isotropy_search(d, deg_bound >= 0 ? deg_bound : 2);
                }
            }
            report_isotropy(s, result);
            return s.finish(out);
        }

        if (*c_conj) {
            std::string text = read_file(file);
            std::string atext = read_file(auto_file);
            s.input_digest = fnv1a(text + "|" + atext);
            Derivation d = parse_derivation(text);
            Automorphism rho = parse_automorphism(atext, d.context(), affine_flag);
            Derivation conj = conjugate(rho, d);
            s.verdict = {{"derivation", to_string(conj)}};
            s.line(to_string(conj));
            return s.finish(out);
        }

        if (*c_stable) {
            std::string text = read_file(file);
            s.input_digest = fnv1a(text + "|" + gen_expr);
            Derivation d = parse_derivation(text);
            MultiPoly g = parse_expression(gen_expr, d.context());
            if (g.is_zero()) throw UnsupportedClassError("generator must be nonzero");
            auto w = ideal_stable(d, g);
            s.verdict = {{"stable", w.has_value()}};
            if (w) {
                s.verdict["cofactor"] = to_string(w->cofactor);
                s.line("stable: true");
                s.line("cofactor = " + to_string(w->cofactor));
            } else {
                s.line("stable: false");
            }
            return s.finish(out);
        }

        if (*o_psolve) {
            UniPoly a = parse_unipoly_expression(a_expr);
            UniPoly b = parse_unipoly_expression(b_expr);
            s.input_digest = fnv1a(a_expr + "|" + b_expr);
            if (a.is_zero()) throw UnsupportedClassError("a must be nonzero");
            int bound = o_psolve->count("--max-degree") ? max_degree : oracle_psolve_bound(a, b);
            auto f = oracle_psolve(a, b, bound);
            s.verdict = {{"solvable", f.has_value()}, {"bound", bound}};
            s.completeness = "ansatz-only";
            if (f) {
                s.verdict["f"] = to_string(*f);
                s.line("f = " + to_string(*f));
            } else {
                s.line("none-below-bound");
            }
            return s.finish(out);
        }

        if (*o_iso) {
            std::string text = read_file(file);
            s.input_digest = fnv1a(text);
            Derivation d = parse_derivation(text);
            AnsatzConfig cfg = make_config(max_degree, grid_min, grid_max, budget, s.seed);
            auto els = oracle_isotropy_enum(d, cfg);
            s.completeness = "ansatz-only";
            s.verdict = {{"count", els.size()}};
            s.witness = {{"elements", elements_json(els)}};
            s.line("elements found: " + std::to_string(els.size()));
            for (const auto& e : els) {
                std::string desc;
                for (int v = 0; v < e.context()->size(); ++v)
                    desc += (v ? ", " : "") + e.context()->name(v) + " -> " +
                            to_string(e.forward()[static_cast<size_t>(v)]);
                s.line("  element: " + desc);
            }
            return s.finish(out);
        }

        if (*o_ideal) {
            std::string text = read_file(file);
            s.input_digest = fnv1a(text);
            Derivation d = parse_derivation(text);
            AnsatzConfig cfg = make_config(max_degree, grid_min, grid_max, budget, s.seed);
            auto w = oracle_ideal_search(d, cfg);
            s.completeness = "ansatz-only";
            s.verdict = {{"found", w.has_value()}};
            if (w) {
                s.verdict["generator"] = to_string(w->generator);
                s.verdict["cofactor"] = to_string(w->cofactor);
                s.line("witness: " + to_string(w->generator));
                s.line("cofactor = " + to_string(w->cofactor));
            } else {
                s.line("none-found (not a simplicity proof)");
            }
            return s.finish(out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnsupportedClassError& e) {
        err << "unsupported input: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const BudgetExceededError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    err << "error: no subcommand executed\n";
    return kExitParse;
}

}  // namespace deriv::cli
