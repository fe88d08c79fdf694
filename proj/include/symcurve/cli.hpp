#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symcurve/symcurve.hpp"

namespace symcurve {
namespace cli {

using json = nlohmann::ordered_json;

// Exit codes: 0 success, 1 mathematical negative where the query expects a
// containment, 2 usage error, 3 internal or mathematical error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMathError = 3;

struct CommonOptions {
    std::vector<long long> curve;
    std::vector<long long> matrix;
    std::string field = "q";
    std::string format = "text";
    int jobs = 1;
};

/// Resolved computation context: canonical exponents and the weights they
/// are graded by.
struct Context {
    CommonOptions opts;
    FieldSpec field_spec = FieldSpec::rationals();
    std::optional<Weights> input_weights;  // curve input only
    MatrixExponents exponents;
    Weights weights{1, 2, 3};
};

struct UsageFailure {
    std::string message;
};

struct MathFailure {
    std::string message;
};

/// Analysis-level outcomes that are data, not errors.
struct NotACurve {
    std::string outcome;  // "complete_intersection" | "unclassifiable"
    std::string detail;
};

using ContextOutcome = std::variant<Context, NotACurve, UsageFailure, MathFailure>;

inline json input_json(const CommonOptions& o) {
    json j;
    j["kind"] = o.curve.empty() ? "matrix" : "curve";
    j["value"] = o.curve.empty() ? o.matrix : o.curve;
    return j;
}

inline std::string input_text(const CommonOptions& o) {
    std::string s = o.curve.empty() ? "matrix " : "curve ";
    const auto& v = o.curve.empty() ? o.matrix : o.curve;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

inline ContextOutcome resolve_context(CommonOptions o) {
    if (o.curve.empty() == o.matrix.empty())
        return UsageFailure{"exactly one of --curve or --matrix is required"};

    FieldSpec fs;
    try {
        fs = FieldSpec::parse(o.field);
    } catch (const Error& err) {
        return UsageFailure{err.what()};
    }

    try {
        RawExponents raw{};
        std::optional<Weights> input_weights;
        if (!o.curve.empty()) {
            if (o.curve.size() != 3) return UsageFailure{"--curve expects n1,n2,n3"};
            try {
                input_weights = Weights(o.curve[0], o.curve[1], o.curve[2]);
            } catch (const Error& err) {
                return UsageFailure{err.what()};
            }
            const Weights& w = *input_weights;
            auto rels = minimal_relations(w);
            if (const auto* ci = std::get_if<CompleteIntersection>(&rels))
                return NotACurve{"complete_intersection", ci->degenerate.to_string()};
            raw = exponents_from_relations(std::get<RelationTriple>(rels));
        } else {
            if (o.matrix.size() != 6) return UsageFailure{"--matrix expects a1,a2,b1,b2,c1,c2"};
            for (std::size_t i = 0; i < 6; ++i) raw[i] = static_cast<int>(o.matrix[i]);
        }
        auto classified = classify(raw);
        if (!classified.ok()) return NotACurve{"unclassifiable", classified.failure_reason};
        auto weights = weights_of(*classified.exponents);
        if (!weights)
            return NotACurve{"unclassifiable", "matrix admits no positive weight grading"};
        if (input_weights) {
            // Sanity: the canonical grading must be the relabeled input grading.
            Weights expected = classified.exponents->relabeling.apply(*input_weights);
            if (!(expected == *weights))
                throw InternalMismatchError("canonical weights disagree with relabeled input");
        }
        return Context{std::move(o), fs, input_weights, *classified.exponents, *weights};
    } catch (const Error& err) {
        return MathFailure{err.what()};
    }
}

inline json classification_json(const Context& ctx) {
    const auto& e = ctx.exponents;
    json j;
    j["outcome"] = "classified";
    j["type"] = to_string(e.type);
    j["exponents"] = {e.a1, e.a2, e.b1, e.b2, e.c1, e.c2};
    j["relabeling"] = e.relabeling.to_string();
    j["weights"] = {ctx.weights[0], ctx.weights[1], ctx.weights[2]};
    return j;
}

inline json report_head(const Context& ctx) {
    json j;
    j["input"] = input_json(ctx.opts);
    j["field"] = ctx.field_spec.to_string();
    j["classification"] = classification_json(ctx);
    if (ctx.exponents.type == MatrixType::type1prime) {
        j["r"] = r_index(ctx.exponents);
        j["n"] = stable_n(ctx.exponents);
    }
    return j;
}

template <class Fn>
int with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::rationals) return fn(RationalField{});
    return fn(PrimeField{fs});
}

/// Unpacks the context; failures and not-a-curve outcomes are rendered and
/// the remaining handler runs only on a classified curve.
template <class Fn>
int with_context(const ContextOutcome& outcome, std::ostream& out, std::ostream& err,
                 bool not_a_curve_is_data, Fn&& fn) {
    if (const auto* usage = std::get_if<UsageFailure>(&outcome)) {
        err << "error: " << usage->message << "\n";
        return kExitUsage;
    }
    if (const auto* math = std::get_if<MathFailure>(&outcome)) {
        err << "error: " << math->message << "\n";
        return kExitMathError;
    }
    if (const auto* nc = std::get_if<NotACurve>(&outcome)) {
        if (!not_a_curve_is_data) {
            err << "error: input is " << nc->outcome << " (" << nc->detail << ")\n";
            return kExitMathError;
        }
        out << "classification: " << nc->outcome << "\n";
        out << "detail: " << nc->detail << "\n";
        return kExitOk;
    }
    const Context& ctx = std::get<Context>(outcome);
    try {
        return fn(ctx);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitMathError;
    }
}

// ---------------------------------------------------------------------------
// analyze

inline int run_analyze(const ContextOutcome& outcome, std::ostream& out, std::ostream& err) {
    // Complete intersections and unclassifiable matrices are data here.
    return with_context(outcome, out, err, /*not_a_curve_is_data=*/true, [&](const Context& ctx) {
        const auto& e = ctx.exponents;
        const bool pr = e.type == MatrixType::type1prime;
        if (ctx.opts.format == "json") {
            out << report_head(ctx).dump(2) << "\n";
            return kExitOk;
        }
        out << "input: " << input_text(ctx.opts) << "\n";
        out << "field: " << ctx.field_spec.to_string() << "\n";
        out << "type: " << to_string(e.type) << "\n";
        out << "exponents: " << e.to_string() << "\n";
        out << "relabeling: " << e.relabeling.to_string() << "\n";
        out << "weights: " << ctx.weights.to_string() << "\n";
        if (pr) {
            out << "r: " << r_index(e) << "\n";
            out << "n: " << stable_n(e) << "\n";
        }
        return kExitOk;
    });
}

// ---------------------------------------------------------------------------
// dpoly

inline int run_dpoly(const ContextOutcome& outcome, int level, std::ostream& out,
                     std::ostream& err) {
    return with_context(outcome, out, err, false, [&](const Context& ctx) {
        return with_field(ctx.field_spec, [&](auto field) {
            auto d = d_poly(level, ctx.exponents, field);
            if (ctx.opts.format == "json") {
                json j = report_head(ctx);
                j["level"] = d.level;
                j["alpha"] = d.alpha;
                j["gamma"] = d.gamma;
                j["polynomial"] = d.value.to_string();
                out << j.dump(2) << "\n";
            } else {
                out << d.value.to_string() << "\n";
            }
            return kExitOk;
        });
    });
}

// ---------------------------------------------------------------------------
// sympower

inline int run_sympower(const ContextOutcome& outcome, int level, std::ostream& out,
                        std::ostream& err) {
    return with_context(outcome, out, err, false, [&](const Context& ctx) {
        return with_field(ctx.field_spec, [&](auto field) {
            auto basis = sympow_basis(level, ctx.exponents, field);
            if (ctx.opts.format == "json") {
                json j = report_head(ctx);
                j["level"] = basis.level;
                j["provenance"] = to_string(basis.provenance);
                json gens = json::array();
                for (const auto& g : basis.generators)
                    gens.push_back({{"label", g.label}, {"polynomial", g.value.to_string()}});
                j["generators"] = gens;
                out << j.dump(2) << "\n";
            } else {
                out << "P^(" << basis.level << ") [" << to_string(basis.provenance) << "], "
                    << basis.generators.size() << " generators:\n";
                for (const auto& g : basis.generators)
                    out << g.label << " = " << g.value.to_string() << "\n";
            }
            return kExitOk;
        });
    });
}

// ---------------------------------------------------------------------------
// contain

/// Ideal-spec mini-language: '*'-joined factors, each "sym:L", "pow:L" or
/// "m".  Example: "m*pow:2" is the ideal m P^2.
template <CoefficientField F>
IdealGens<F> build_ideal_spec(const std::string& spec, const Context& ctx, F field) {
    std::vector<LabeledPoly<F>> unit{{"1", Polynomial<F>::one(field)}};
    IdealGens<F> acc(field, ctx.weights, unit);
    int m_power = 0;
    std::size_t i = 0;
    if (spec.empty()) throw ParseError("empty ideal spec");
    while (i < spec.size()) {
        std::size_t j = spec.find('*', i);
        std::string factor = spec.substr(i, j == std::string::npos ? j : j - i);
        i = (j == std::string::npos) ? spec.size() : j + 1;
        if (factor == "m") {
            ++m_power;
        } else if (factor.rfind("sym:", 0) == 0 || factor.rfind("pow:", 0) == 0) {
            int level = 0;
            try {
                level = std::stoi(factor.substr(4));
            } catch (const std::exception&) {
                throw ParseError("bad level in ideal spec factor \"" + factor + "\"");
            }
            IdealGens<F> part =
                factor[0] == 's'
                    ? symbolic_power_ideal(level, ctx.exponents, field, ctx.weights)
                    : power_ideal(level, ctx.exponents, field, ctx.weights);
            acc = ideal_product(acc, part);
        } else {
            throw ParseError("bad ideal spec factor \"" + factor +
                             "\" (expected sym:L, pow:L or m)");
        }
    }
    return m_multiples(acc, m_power);
}

inline int run_contain(const ContextOutcome& outcome, const std::string& spec_a,
                       const std::string& spec_b, std::ostream& out, std::ostream& err) {
    return with_context(outcome, out, err, false, [&](const Context& ctx) {
        return with_field(ctx.field_spec, [&](auto field) {
            using Field = decltype(field);
            IdealGens<Field> a = build_ideal_spec(spec_a, ctx, field);
            IdealGens<Field> b = build_ideal_spec(spec_b, ctx, field);
            auto verdict = contained(a, b, ctx.opts.jobs);
            if (ctx.opts.format == "json") {
                json j = report_head(ctx);
                j["a"] = spec_a;
                j["b"] = spec_b;
                j["contained"] = verdict.contained;
                if (verdict.witness) {
                    j["witness"] = verdict.witness->label;
                    j["witness_polynomial"] = verdict.witness->generator.to_string();
                    j["witness_degree"] = verdict.witness->degree;
                }
                json certs = json::array();
                for (const auto& [label, cert] : verdict.certificates) {
                    json c;
                    c["generator"] = label;
                    json cofs = json::array();
                    for (std::size_t k = 0; k < cert.cofactors.size(); ++k) {
                        if (cert.cofactors[k].is_zero()) continue;
                        cofs.push_back({{"on", b.generators()[k].label},
                                        {"cofactor", cert.cofactors[k].to_string()}});
                    }
                    c["cofactors"] = cofs;
                    certs.push_back(c);
                }
                j["certificates"] = certs;
                out << j.dump(2) << "\n";
            } else {
                if (verdict.contained) {
                    out << "CONTAINED\n";
                } else {
                    out << "NOT CONTAINED; witness: " << verdict.witness->label << "\n";
                }
            }
            return verdict.contained ? kExitOk : kExitNegative;
        });
    });
}

// ---------------------------------------------------------------------------
// harbourne

template <CoefficientField F>
json certificates_json(const std::string& statement, const IdealGens<F>& target,
                       const std::vector<std::pair<std::string, MembershipCertificate<F>>>& certs) {
    json arr = json::array();
    for (const auto& [label, cert] : certs) {
        json c;
        c["statement"] = statement;
        c["generator"] = label;
        json cofs = json::array();
        for (std::size_t k = 0; k < cert.cofactors.size(); ++k) {
            if (cert.cofactors[k].is_zero()) continue;
            cofs.push_back({{"on", target.generators()[k].label},
                            {"cofactor", cert.cofactors[k].to_string()}});
        }
        c["cofactors"] = cofs;
        arr.push_back(c);
    }
    return arr;
}

inline int run_harbourne(const ContextOutcome& outcome, std::ostream& out, std::ostream& err) {
    return with_context(outcome, out, err, false, [&](const Context& ctx) {
        return with_field(ctx.field_spec, [&](auto field) {
            using Field = decltype(field);
            HarbourneReport<Field> report = verify_harbourne_profile(ctx.exponents, field,
                                                                     ctx.opts.jobs);
            const auto& e = report.exponents;
            if (ctx.opts.format == "json") {
                json j = report_head(ctx);
                json verdicts = json::array();
                {
                    json v;
                    v["statement"] = "P^(3) in m*pow:2";
                    v["predicted"] = to_string(report.third_predicted);
                    v["verified_contained"] = report.third_verified_contained;
                    if (report.third_witness_label) v["witness"] = *report.third_witness_label;
                    verdicts.push_back(v);
                }
                for (const auto& entry : report.profile) {
                    json v;
                    v["statement"] = "P^(" + std::to_string(entry.symbolic_level) + ") in m*pow:" +
                                     std::to_string(entry.level);
                    v["level"] = entry.level;
                    v["symbolic_level"] = entry.symbolic_level;
                    v["predicted"] = entry.expected_contained ? "contained" : "not_contained";
                    v["verified_contained"] = entry.verified_contained;
                    if (entry.witness_label) v["witness"] = *entry.witness_label;
                    verdicts.push_back(v);
                }
                for (const auto& check : report.delta_checks) {
                    json v;
                    v["statement"] = "D_" + std::to_string(check.level) + " in m^" +
                                     std::to_string(check.delta) + "*pow:" +
                                     std::to_string(check.power);
                    v["verified_contained"] = check.holds;
                    verdicts.push_back(v);
                }
                j["verdicts"] = verdicts;

                json certs = json::array();
                if (report.third_verified_contained) {
                    auto target = m_multiples(power_ideal(2, e, field, ctx.weights), 1);
                    for (auto& c : certificates_json("P^(3) in m*pow:2", target,
                                                     report.third_certificates))
                        certs.push_back(c);
                }
                for (const auto& entry : report.profile) {
                    if (!entry.verified_contained || entry.certificates.empty()) continue;
                    auto target = m_multiples(power_ideal(entry.level, e, field, ctx.weights), 1);
                    std::string stmt = "P^(" + std::to_string(entry.symbolic_level) + ") in m*pow:" +
                                       std::to_string(entry.level);
                    for (auto& c : certificates_json(stmt, target, entry.certificates))
                        certs.push_back(c);
                }
                j["certificates"] = certs;
                out << j.dump(2) << "\n";
                return kExitOk;
            }

            out << "input: " << input_text(ctx.opts) << "\n";
            out << "field: " << ctx.field_spec.to_string() << "\n";
            out << "type: " << to_string(e.type) << "; exponents " << e.to_string()
                << "; weights " << ctx.weights.to_string() << "\n";
            if (report.r) out << "r = " << *report.r << ", n = " << *report.n << "\n";
            out << "P^(3) vs m*P^2: "
                << (report.third_verified_contained ? "CONTAINED" : "NOT CONTAINED")
                << " (predicted " << to_string(report.third_predicted);
            if (report.third_witness_label) out << "; witness " << *report.third_witness_label;
            out << ")\n";
            if (report.full_profile) {
                out << "profile:\n";
                for (const auto& entry : report.profile) {
                    out << "  l=" << entry.level << ": P^(" << entry.symbolic_level << ") "
                        << (entry.verified_contained ? "in" : "not in") << " m*P^" << entry.level;
                    if (entry.witness_label) out << " (witness " << *entry.witness_label << ")";
                    if (!entry.certificates.empty())
                        out << " (" << entry.certificates.size() << " generators certified)";
                    out << "\n";
                }
                out << "delta-membership D_l in m^d*P^floor((l+1)/2), l=0.." << *report.r + 1
                    << ": all hold\n";
            } else {
                out << "profile: skipped (stable profile machinery covers type 1' only)\n";
            }
            return kExitOk;
        });
    });
}

// ---------------------------------------------------------------------------
// driver

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact symbolic-power computations for space monomial curves", "symcurve"};
    app.require_subcommand(1);

    CommonOptions opts;
    int level = 0;
    std::string spec_a, spec_b;

    auto add_common = [&](CLI::App* cmd, bool with_jobs = false) {
        cmd->add_option("--curve", opts.curve, "curve weights n1,n2,n3")->delimiter(',');
        cmd->add_option("--matrix", opts.matrix, "matrix exponents a1,a2,b1,b2,c1,c2")
            ->delimiter(',');
        cmd->add_option("--field", opts.field, "coefficient field: q or fp:<p>")
            ->default_val("q");
        cmd->add_option("--format", opts.format, "output format: text or json")
            ->default_val("text")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_jobs)
            cmd->add_option("--jobs", opts.jobs, "parallel membership checks")
                ->default_val(1)
                ->check(CLI::PositiveNumber);
    };

    CLI::App* analyze = app.add_subcommand("analyze", "classify the matrix and report r, n");
    add_common(analyze);
    CLI::App* dpoly = app.add_subcommand("dpoly", "print the distinguished generator D_l");
    add_common(dpoly);
    dpoly->add_option("--l", level, "level")->required();
    CLI::App* sympower = app.add_subcommand("sympower", "print a generating set of P^(l)");
    add_common(sympower);
    sympower->add_option("--l", level, "level")->required();
    CLI::App* contain_cmd =
        app.add_subcommand("contain", "decide containment of one constructed ideal in another");
    add_common(contain_cmd, true);
    contain_cmd->add_option("--a", spec_a, "left ideal spec (sym:L, pow:L, m, '*'-products)")
        ->required();
    contain_cmd->add_option("--b", spec_b, "right ideal spec")->required();
    CLI::App* harbourne =
        app.add_subcommand("harbourne", "full stable-Harbourne profile with certificates");
    add_common(harbourne, true);

    try {
        std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed args
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    ContextOutcome ctx = resolve_context(opts);
    if (analyze->parsed()) return run_analyze(ctx, out, err);
    if (dpoly->parsed()) return run_dpoly(ctx, level, out, err);
    if (sympower->parsed()) return run_sympower(ctx, level, out, err);
    if (contain_cmd->parsed()) return run_contain(ctx, spec_a, spec_b, out, err);
    if (harbourne->parsed()) return run_harbourne(ctx, out, err);
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace cli
}  // namespace symcurve
