#pragma once

// Command-line front end. Every engine is reachable as a subcommand with
// text or JSON output. Exit codes: 0 decided (positive), 1 decided negative,
// 2 unsupported or unresolved over the scalar field, 3 input error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfield/pfield.hpp"

namespace pfield::cli {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_unsupported = 2;
constexpr int exit_input_error = 3;

namespace detail {

inline std::string read_arg(const std::string& s) {
    if (s != "-") return s;
    std::ostringstream all;
    all << std::cin.rdbuf();
    return all.str();
}

inline ScalarMode mode_of(const std::string& m) {
    if (m == "q") return ScalarMode::Q;
    if (m == "qt") return ScalarMode::Qt;
    throw error(errc::invalid_argument, "mode must be q or qt");
}

inline std::vector<Scalar> parse_scalar_list(const std::string& text, ScalarMode mode) {
    std::vector<Scalar> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(parse_scalar(cur, mode));
    return out;
}

inline json affine_map_json(const AffineMap& m) {
    return json{{"x", print_canonical(m.image_x())}, {"y", print_canonical(m.image_y())},
                {"det", print_scalar(m.det())}};
}

inline std::string describe(const CanonicalType& t) { return to_string(t); }

inline json group_json(const GroupReport& rep) {
    json j;
    if (rep.order)
        j["order"] = *rep.order;
    else
        j["order"] = "infinite";
    json maps = json::array();
    for (const auto& m : rep.finite_part) maps.push_back(affine_map_json(m));
    if (!maps.empty()) j["maps"] = maps;
    json eq = json::array();
    for (const auto& g : rep.equiv_params)
        eq.push_back(json{{"a", print_scalar(g.a)}, {"b", print_scalar(g.b)}, {"e", g.e}});
    if (!eq.empty()) j["equivalence_params"] = eq;
    if (!rep.infinite_factors.empty()) j["infinite_factors"] = rep.infinite_factors;
    if (rep.exact_sequence) j["exact_sequence"] = *rep.exact_sequence;
    if (rep.quotient_order) j["quotient_order"] = *rep.quotient_order;
    if (rep.m_star) j["m_star"] = *rep.m_star;
    if (rep.n_star) j["n_star"] = *rep.n_star;
    if (rep.h_order) j["h_order"] = *rep.h_order;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    j["group_axioms_ok"] = rep.group_axioms_ok;
    return j;
}

inline void emit(std::ostream& out, bool as_json, const json& j, const std::string& human) {
    if (as_json)
        out << j.dump() << "\n";
    else
        out << human << "\n";
}

// family-(2) monic polynomial p with flag p(x) x y
inline std::optional<XPoly> monic_family2_poly(const RatFunc2& flag) {
    auto f2 = pfield::detail::family_two_shape(flag);
    if (!f2 || f2->mirrored) return std::nullopt;
    if (!f2->p.lc().is_one()) return std::nullopt;
    return f2->p;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Poisson brackets on the rational function field k(x,y)"};
    app.require_subcommand(1);
    std::string mode_str = "q";
    bool as_json = false;
    app.add_option("--mode", mode_str, "scalar field: q (rationals) or qt (rational functions in t)");
    app.add_flag("--json", as_json, "emit JSON");

    std::string flag_text, with_text, from_text, to_text;
    std::string arg_a, arg_b, arg_c;
    long long zx = 0, zy = 0;
    bool weyl_only = false, residues = false, conditions = false;
    std::string u_text, num_shifts, den_shifts, poly_text;
    std::string kind, f_text, g_text, r_text, lambda_text, p_text;
    long long ia = 0, ib = 0, ic = 0, id = 0, im = 0, is1 = 0, is2 = 0;
    std::string q_text = "1", b0_text = "1", a1_text, a2_text;

    auto* c_bracket = app.add_subcommand("bracket", "bracket of two elements under a flag");
    c_bracket->add_option("--flag", flag_text, "flag expression")->required();
    c_bracket->add_flag("--weyl", weyl_only, "use the Weyl bracket only");
    c_bracket->add_option("a", arg_a)->required();
    c_bracket->add_option("b", arg_b)->required();

    auto* c_jacobi = app.add_subcommand("jacobi", "jacobiator of three elements under a flag");
    c_jacobi->add_option("--flag", flag_text)->required();
    c_jacobi->add_option("a", arg_a)->required();
    c_jacobi->add_option("b", arg_b)->required();
    c_jacobi->add_option("c", arg_c)->required();

    auto* c_classify = app.add_subcommand("classify", "canonical form of a flag");
    c_classify->add_option("--flag", flag_text)->required();

    auto* c_iso = app.add_subcommand("iso", "isomorphism test between two flags");
    c_iso->add_option("--flag", flag_text)->required();
    c_iso->add_option("--with", with_text)->required();

    auto* c_aut = app.add_subcommand("aut", "automorphism group of a flag");
    c_aut->add_option("--flag", flag_text)->required();

    auto* c_embed = app.add_subcommand("embed", "embedding test between canonical flags");
    c_embed->add_option("--from", from_text)->required();
    c_embed->add_option("--to", to_text)->required();

    auto* c_val = app.add_subcommand("valuation", "monomial valuation of an element");
    c_val->add_option("--zx", zx, "value of x")->required();
    c_val->add_option("--zy", zy, "value of y")->required();
    c_val->add_option("expr", arg_a)->required();
    c_val->add_option("--flag", flag_text, "also report the w-level on this flag");

    auto* c_height = app.add_subcommand("flag-height", "flag and valuation heights");
    c_height->add_option("--flag", flag_text)->required();

    auto* c_flabby = app.add_subcommand("flabby", "three-partner test for factored flags");
    c_flabby->add_option("--flag", flag_text)->required();

    auto* c_logd = app.add_subcommand("logderiv", "inverse logarithmic derivative in t");
    c_logd->add_option("expr", arg_a)->required();
    c_logd->add_flag("--residues", residues, "treat the input as a factored power product");
    c_logd->add_flag("--conditions", conditions, "report the trace conditions instead");

    auto* c_ddb = app.add_subcommand("ddb", "denominator bounds for shifted products");
    c_ddb->add_option("--u", u_text)->required();
    c_ddb->add_option("--num-shifts", num_shifts, "comma-separated numerator shifts");
    c_ddb->add_option("--den-shifts", den_shifts, "comma-separated denominator shifts")->required();

    auto* c_build = app.add_subcommand("build-infinite-flag", "flag with no polynomial presentation");
    c_build->add_option("--u", u_text)->required();
    c_build->add_option("--num-shifts", num_shifts);
    c_build->add_option("--den-shifts", den_shifts)->required();
    c_build->add_option("--poly", poly_text, "polynomial in t, degree >= 2")->required();

    auto* c_dix = app.add_subcommand("dixmier", "is every endomorphism an automorphism?");
    c_dix->add_option("--flag", flag_text)->required();

    auto* c_sub = app.add_subcommand("subfield-witness", "explicit Poisson subfield generators");
    c_sub->add_option("--kind", kind,
                      "weyl-from-x | weyl-from-y | weyl-power | torus | monomial | shifted | "
                      "logderiv | power-r | weyl-xm | cubic")
        ->required();
    c_sub->add_option("--f", f_text);
    c_sub->add_option("--g", g_text);
    c_sub->add_option("--r", r_text);
    c_sub->add_option("--lambda", lambda_text);
    c_sub->add_option("--p", p_text);
    c_sub->add_option("--q", q_text);
    c_sub->add_option("--b0", b0_text);
    c_sub->add_option("--a1", a1_text);
    c_sub->add_option("--a2", a2_text);
    c_sub->add_option("--a", ia);
    c_sub->add_option("--b", ib);
    c_sub->add_option("--c", ic);
    c_sub->add_option("--d", id);
    c_sub->add_option("--m", im);
    c_sub->add_option("--s1", is1);
    c_sub->add_option("--s2", is2);

    // --mode and --json may follow the subcommand name
    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help() << "\n";
            return exit_ok;
        }
        err << "usage error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        ScalarMode mode = detail::mode_of(mode_str);
        auto parse_in = [&](const std::string& s) { return parse(detail::read_arg(s), mode); };

        if (*c_bracket) {
            RatFunc2 a = parse_in(arg_a), b = parse_in(arg_b);
            RatFunc2 r;
            if (weyl_only) {
                r = weyl_bracket(a, b);
            } else {
                PoissonField K(parse_in(flag_text), mode);
                r = bracket(K, a, b);
            }
            detail::emit(out, as_json, json{{"bracket", print_canonical(r)}}, print_canonical(r));
            return exit_ok;
        }
        if (*c_jacobi) {
            RatFunc2 flag = parse_in(flag_text);
            RatFunc2 r = jacobiator(flag, parse_in(arg_a), parse_in(arg_b), parse_in(arg_c));
            detail::emit(out, as_json, json{{"jacobiator", print_canonical(r)}},
                         print_canonical(r));
            return exit_ok;
        }
        if (*c_classify) {
            PoissonField K(parse_in(flag_text), mode);
            ClassifyResult r = classify_flag(K);
            json j{{"type", detail::describe(r.type)}, {"verified", r.verified}};
            std::string human = detail::describe(r.type);
            if (r.cov) {
                j["u"] = print_canonical(r.cov->fwd_u);
                j["v"] = print_canonical(r.cov->fwd_v);
                j["x_of_uv"] = print_canonical(r.cov->inv_x);
                j["y_of_uv"] = print_canonical(r.cov->inv_y);
                human += " via u=" + print_canonical(r.cov->fwd_u) +
                         ", v=" + print_canonical(r.cov->fwd_v) +
                         (r.verified ? " [verified]" : " [UNVERIFIED]");
            }
            detail::emit(out, as_json, j, human);
            return r.type.resolved() ? exit_ok : exit_unsupported;
        }
        if (*c_iso) {
            RatFunc2 f = parse_in(flag_text), g = parse_in(with_text);
            // factored route first: complete affine search with explicit maps
            std::optional<FactoredFlag> F, G;
            try {
                F = make_factored(detail::read_arg(flag_text), mode);
                G = make_factored(detail::read_arg(with_text), mode);
            } catch (const error&) {
            }
            if (F && G && !F->factors.empty() && !G->factors.empty()) {
                bool flabby_ok = false;
                try {
                    flabby_ok = is_flabby(*F).flabby;
                } catch (const error&) {
                }
                if (flabby_ok) {
                    auto maps = affine_iso_search(*F, *G);
                    json jm = json::array();
                    for (const auto& m : maps) jm.push_back(detail::affine_map_json(m));
                    json j{{"isomorphic", !maps.empty()}, {"maps", jm}};
                    std::string human = maps.empty() ? "not isomorphic (no affine map exists)"
                                                     : "isomorphic; " + std::to_string(maps.size()) +
                                                           " affine map(s)";
                    detail::emit(out, as_json, j, human);
                    return maps.empty() ? exit_negative : exit_ok;
                }
            }
            auto p1 = detail::monic_family2_poly(f), p2 = detail::monic_family2_poly(g);
            if (p1 && p2 && p1->degree() >= 1 && p2->degree() >= 1) {
                auto eq = iso_family2(*p1, *p2);
                json je = json::array();
                for (const auto& e : eq)
                    je.push_back(json{{"a", print_scalar(e.a)}, {"b", print_scalar(e.b)},
                                      {"e", e.e}});
                json j{{"isomorphic", !eq.empty()}, {"equivalence_params", je}};
                detail::emit(out, as_json, j,
                             eq.empty() ? "not isomorphic (no equivalence parameters)"
                                        : "isomorphic; " + std::to_string(eq.size()) +
                                              " equivalence parameter(s)");
                return eq.empty() ? exit_negative : exit_ok;
            }
            ClassifyResult c1 = classify_flag(PoissonField(f, mode));
            ClassifyResult c2 = classify_flag(PoissonField(g, mode));
            if (c1.type.resolved() && c2.type.resolved()) {
                bool iso = iso_decide_canonical(c1.type, c2.type);
                json j{{"isomorphic", iso}, {"lhs", detail::describe(c1.type)},
                       {"rhs", detail::describe(c2.type)}};
                detail::emit(out, as_json, j,
                             std::string(iso ? "isomorphic" : "not isomorphic") + " (" +
                                 detail::describe(c1.type) + " vs " + detail::describe(c2.type) +
                                 ")");
                return iso ? exit_ok : exit_negative;
            }
            detail::emit(out, as_json, json{{"error", "no isomorphism procedure applies"}},
                         "no isomorphism procedure applies to these flags");
            return exit_unsupported;
        }
        if (*c_aut) {
            RatFunc2 f = parse_in(flag_text);
            std::optional<FactoredFlag> F;
            try {
                F = make_factored(detail::read_arg(flag_text), mode);
            } catch (const error&) {
            }
            if (F) {
                bool flabby_ok = false;
                try {
                    flabby_ok = is_flabby(*F).flabby;
                } catch (const error&) {
                }
                if (flabby_ok) {
                    GroupReport rep = aut_group(*F);
                    detail::emit(out, as_json, detail::group_json(rep),
                                 "order " + std::to_string(*rep.order) + " (affine maps, closure " +
                                     (rep.group_axioms_ok ? "verified" : "FAILED") + ")");
                    return exit_ok;
                }
            }
            ClassifyResult cls = classify_flag(PoissonField(f, mode));
            if (cls.type.kind == CanonicalType::Kind::K1n0 && cls.verified) {
                GroupReport rep = aut_family1_structure(cls.type.n);
                std::string human = "infinite: " + *rep.exact_sequence;
                for (const auto& n : rep.notes) human += "; " + n;
                detail::emit(out, as_json, detail::group_json(rep), human);
                return exit_ok;
            }
            if (auto p = detail::monic_family2_poly(f); p && p->degree() >= 2) {
                GroupReport rep = aut_family2(*p);
                detail::emit(out, as_json, detail::group_json(rep),
                             "infinite: " + *rep.exact_sequence +
                                 ", |G_p| = " + std::to_string(*rep.quotient_order));
                return exit_ok;
            }
            detail::emit(out, as_json,
                         json{{"error", "no automorphism procedure applies"}},
                         "no automorphism procedure applies to this flag");
            return exit_unsupported;
        }
        if (*c_embed) {
            ClassifyResult c1 = classify_flag(PoissonField(parse_in(from_text), mode));
            ClassifyResult c2 = classify_flag(PoissonField(parse_in(to_text), mode));
            if (!c1.type.resolved() || !c2.type.resolved()) {
                detail::emit(out, as_json, json{{"error", "flags must classify to canonical types"}},
                             "flags must classify to canonical types");
                return exit_unsupported;
            }
            EmbedReport r = embed_decide(c1.type, c2.type);
            json j{{"embeds", r.embeds}, {"rule", r.rule},
                   {"from", detail::describe(c1.type)}, {"to", detail::describe(c2.type)}};
            std::string human = std::string(r.embeds ? "embeds" : "does not embed") + " (" + r.rule + ")";
            if (r.witness) {
                j["witness"] = json{{"u", print_canonical(r.witness->gen_u)},
                                    {"v", print_canonical(r.witness->gen_v)},
                                    {"subfield_flag", print_canonical(r.witness->subfield_flag)},
                                    {"verified", r.witness->verified}};
                human += "; witness u=" + print_canonical(r.witness->gen_u) +
                         ", v=" + print_canonical(r.witness->gen_v) +
                         (r.witness->verified ? " [verified]" : " [UNVERIFIED]");
            }
            detail::emit(out, as_json, j, human);
            return r.embeds ? exit_ok : exit_negative;
        }
        if (*c_val) {
            MonomialValuation nu{zx, zy};
            RatFunc2 v = parse_in(arg_a);
            ValInt value = mono_val(nu, v);
            json j{{"value", value.infinite ? json("inf") : json(value.v)}};
            std::string human =
                "nu = " + (value.infinite ? std::string("inf") : std::to_string(value.v));
            if (!flag_text.empty()) {
                long long w = w_level(nu, parse_in(flag_text));
                j["w_level"] = w;
                human += ", w-level " + std::to_string(w);
            }
            detail::emit(out, as_json, j, human);
            return exit_ok;
        }
        if (*c_height) {
            std::optional<FactoredFlag> F;
            try {
                F = make_factored(detail::read_arg(flag_text), mode);
            } catch (const error&) {
            }
            PoissonField K = F ? PoissonField(*F, mode) : PoissonField(parse_in(flag_text), mode);
            HeightReport r = height(K);
            json j{{"fht", r.flag_height.str()}, {"rule", r.rule}};
            std::string human = "fht=" + r.flag_height.str();
            if (r.valuation_height1) {
                j["vht1"] = r.valuation_height1->str();
                human += " vht1=" + r.valuation_height1->str();
            }
            if (r.witness) {
                j["witness"] = json{{"zx", r.witness->zx}, {"zy", r.witness->zy},
                                    {"w", r.witness_w}};
                human += " witness=(" + std::to_string(r.witness->zx) + "," +
                         std::to_string(r.witness->zy) + ")@w=" + std::to_string(r.witness_w);
            }
            j["cohereditary"] = r.cohereditary_known ? "true" : "unknown";
            detail::emit(out, as_json, j, human);
            return exit_ok;
        }
        if (*c_flabby) {
            FactoredFlag F = make_factored(detail::read_arg(flag_text), mode);
            FlabbyReport r = is_flabby(F);
            json j{{"flabby", r.flabby}};
            if (r.failing_index) j["failing_index"] = *r.failing_index;
            detail::emit(out, as_json, j,
                         r.flabby ? "flabby"
                                  : "not flabby (factor " + std::to_string(*r.failing_index) +
                                        " has fewer than three independent partners)");
            return r.flabby ? exit_ok : exit_negative;
        }
        if (*c_logd) {
            // univariate input in the parameter: parse with x standing in for t
            std::string text = detail::read_arg(arg_a);
            for (auto& ch : text)
                if (ch == 't') ch = 'x';
            if (residues) {
                auto parts = pfield::detail::Parser(text, ScalarMode::Q).parse_factor_list();
                Scalar scale = parts.sign;
                std::vector<std::pair<Scalar, long long>> factors;
                for (const auto& [base, e] : parts.parts) {
                    if (base.is_scalar()) {
                        scale = scale * base.scalar_value().pow(e);
                        continue;
                    }
                    auto up = bipoly_to_xpoly(base.num);
                    if (!base.is_polynomial() || !up || up->degree() != 1)
                        throw error(errc::invalid_argument,
                                    "power product factors must be linear in t");
                    Scalar lead = up->lc();
                    scale = scale * lead.pow(e);
                    factors.emplace_back(-(up->coeff(0) / lead), e);
                }
                PowerProduct s(scale, factors);
                json arr = json::array();
                std::string human;
                for (const auto& [a, z] : logderiv_residues(s)) {
                    arr.push_back(json{{"root", print_scalar(a)}, {"exponent", z}});
                    human += (human.empty() ? "" : ", ") + std::string("(") + print_scalar(a) +
                             ", " + std::to_string(z) + ")";
                }
                detail::emit(out, as_json, json{{"residues", arr}}, human);
                return exit_ok;
            }
            RatFunc2 fe = parse(text, ScalarMode::Q);
            auto up = bipoly_to_xpoly(fe.num);
            if (!fe.is_polynomial() || !up)
                throw error(errc::invalid_argument, "expected a polynomial in t");
            auto split = split_by_rational_roots(*up);
            if (!split) throw error(errc::roots_unavailable, "polynomial does not split over Q");
            std::vector<Scalar> roots;
            for (const auto& [r0, m] : split->roots) {
                for (int i = 0; i < m; ++i) roots.push_back(r0);
            }
            SplitPoly f(split->leading, roots);
            if (conditions) {
                NecessaryConditions nc = necessary_conditions(f);
                json zs = json::array();
                for (const auto& z : nc.zs) zs.push_back(print_scalar(z));
                detail::emit(out, as_json,
                             json{{"sum_zero", nc.sum_zero}, {"moment_zero", nc.moment_zero},
                                  {"zs", zs}},
                             std::string("sum_zero=") + (nc.sum_zero ? "true" : "false") +
                                 " moment_zero=" + (nc.moment_zero ? "true" : "false"));
                return exit_ok;
            }
            auto s = solve_inverse_logderiv(f);
            if (!s) {
                detail::emit(out, as_json, json{{"solvable", false}},
                             "no solution: 1/f is not a logarithmic derivative of a power product");
                return exit_negative;
            }
            std::string human;
            json facs = json::array();
            for (const auto& [a, z] : s->factors) {
                facs.push_back(json{{"root", print_scalar(a)}, {"exponent", z}});
                human += (human.empty() ? "s = " : " * ") + std::string("(t - (") + print_scalar(a) +
                         "))^" + std::to_string(z);
            }
            detail::emit(out, as_json, json{{"solvable", true}, {"factors", facs}}, human);
            return exit_ok;
        }
        if (*c_ddb || *c_build) {
            RatFunc2 u = parse_in(u_text);
            std::vector<Scalar> as = detail::parse_scalar_list(num_shifts, mode);
            std::vector<Scalar> bs = detail::parse_scalar_list(den_shifts, mode);
            BoundedElement h(u, as, bs);
            if (*c_ddb) {
                DenominatorBounds r = bounds_certified(h);
                json j{{"dpb_lower", r.dpb_lower}};
                std::string human = "dpb >= " + std::to_string(r.dpb_lower);
                if (r.ddb_exact) {
                    j["ddb"] = *r.ddb_exact;
                    j["dpb"] = *r.dpb_exact;
                    j["fdb"] = *r.fdb_exact;
                    j["frame_denominator_degree"] = *r.frame_den_degree;
                    human = "ddb=" + std::to_string(*r.ddb_exact) +
                            " dpb=" + std::to_string(*r.dpb_exact) +
                            " fdb=" + std::to_string(*r.fdb_exact);
                }
                detail::emit(out, as_json, j, human);
                return exit_ok;
            }
            std::string ptext = detail::read_arg(poly_text);
            for (auto& ch : ptext)
                if (ch == 't') ch = 'x';
            RatFunc2 pe = parse(ptext, ScalarMode::Q);
            auto fp = bipoly_to_xpoly(pe.num);
            if (!pe.is_polynomial() || !fp)
                throw error(errc::invalid_argument, "expected a polynomial in t");
            InfiniteFlagCertificate cert = build_infinite_flag(h, *fp);
            PoissonField K(cert.flag, mode);
            HeightReport hr = height(K, cert);
            json j{{"flag", print_canonical(cert.flag)}, {"w_threshold", cert.w_threshold},
                   {"fht", hr.flag_height.str()},
                   {"gamma_cap_degree", cert.gamma_cap_degree}};
            detail::emit(out, as_json, j,
                         "flag = " + print_canonical(cert.flag) + "; no morphism into any flag "
                         "whose denominator has fewer than " + std::to_string(cert.w_threshold) +
                         " prime divisor(s); fht=" + hr.flag_height.str());
            return exit_ok;
        }
        if (*c_dix) {
            std::optional<FactoredFlag> F;
            try {
                F = make_factored(detail::read_arg(flag_text), mode);
            } catch (const error&) {
            }
            PoissonField K = F ? PoissonField(*F, mode) : PoissonField(parse_in(flag_text), mode);
            DixmierReport r = dixmier_report(K);
            json j{{"rule", r.rule}};
            std::string verdict = r.verdict == DixmierReport::Verdict::Yes ? "yes"
                                  : r.verdict == DixmierReport::Verdict::No ? "no"
                                                                            : "unknown";
            j["dixmier"] = verdict;
            std::string human = "dixmier: " + verdict + " (" + r.rule + ")";
            if (r.endo_images) {
                j["certificate"] = json{{"x", print_canonical(r.endo_images->first)},
                                        {"y", print_canonical(r.endo_images->second)},
                                        {"in_flag", print_canonical(r.cert_flag)},
                                        {"verified", r.certificate_verified}};
                human += "; certificate x -> " + print_canonical(r.endo_images->first) +
                         ", y -> " + print_canonical(r.endo_images->second) +
                         (r.certificate_verified ? " [verified]" : " [UNVERIFIED]");
            }
            detail::emit(out, as_json, j, human);
            return r.verdict == DixmierReport::Verdict::Yes      ? exit_ok
                   : r.verdict == DixmierReport::Verdict::No     ? exit_negative
                                                                 : exit_unsupported;
        }
        if (*c_sub) {
            auto scal = [&](const std::string& s) { return parse_scalar(detail::read_arg(s), mode); };
            SubfieldWitness w;
            if (kind == "weyl-from-x") w = subfield_weyl_from_x(parse_in(f_text));
            else if (kind == "weyl-from-y") w = subfield_weyl_from_y(parse_in(g_text));
            else if (kind == "weyl-power") w = subfield_weyl_power(ia);
            else if (kind == "torus") w = subfield_torus(scal(q_text), ia, ib, ic, id);
            else if (kind == "monomial") w = subfield_monomial(scal(q_text), ia, ib, ic, id);
            else if (kind == "shifted") w = subfield_shifted(scal(q_text), scal(b0_text), ia);
            else if (kind == "weyl-xm") w = subfield_weyl_xm(im, parse_in(g_text));
            else if (kind == "cubic") w = subfield_cubic(scal(a1_text), scal(a2_text), is1, is2);
            else if (kind == "power-r")
                w = subfield_power_r(parse_in(f_text), parse_in(g_text), im, scal(lambda_text),
                                     parse_in(p_text));
            else if (kind == "logderiv") {
                std::string rt = detail::read_arg(r_text);
                for (auto& ch : rt)
                    if (ch == 't') ch = 'x';
                RatFunc2 re = parse(rt, ScalarMode::Q);
                auto rn = bipoly_to_xpoly(re.num), rd = bipoly_to_xpoly(re.den);
                if (!rn || !rd) throw error(errc::invalid_argument, "r must be univariate in t");
                w = subfield_logderiv(parse_in(f_text), parse_in(g_text), RatUni(*rn, *rd),
                                      scal(lambda_text), parse_in(p_text));
            } else
                throw error(errc::invalid_argument, "unknown witness kind: " + kind);
            json j{{"u", print_canonical(w.gen_u)}, {"v", print_canonical(w.gen_v)},
                   {"flag", print_canonical(w.target_flag)}, {"verified", w.verified}};
            detail::emit(out, as_json, j,
                         "u = " + print_canonical(w.gen_u) + "; v = " + print_canonical(w.gen_v) +
                             "; flag = " + print_canonical(w.target_flag) +
                             (w.verified ? " [verified]" : " [UNVERIFIED]"));
            return w.verified ? exit_ok : exit_unsupported;
        }
        err << "no subcommand\n";
        return exit_input_error;
    } catch (const error& e) {
        err << e.what() << "\n";
        switch (e.code()) {
        case errc::unsupported:
        case errc::unresolved_input: return exit_unsupported;
        default: return exit_input_error;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

} // namespace pfield::cli
