#include "actkit/cli.hpp"

#include <optional>
#include <ostream>
#include <string>

#include "actkit/cellular.hpp"
#include "actkit/errors.hpp"
#include "actkit/io.hpp"
#include "actkit/selftest.hpp"
#include "actkit/star_morita.hpp"

namespace actkit {

namespace {

struct Output {
    std::ostream& out;
    bool machine = false;
};

std::string no_spaces(const std::string& text) {
    std::string out = text;
    for (char& c : out)
        if (c == ' ' || c == '\t') c = '-';
    return out;
}

void verdict_line(Output& o, const std::string& name, const Verdict& v) {
    if (o.machine) {
        o.out << "VERDICT " << name << ' ' << to_string(v.status) << ' ' << v.bound;
        if (v.witness)
            o.out << " witness=" << format_witness_ref(*v.witness);
        else if (!v.reason.empty())
            o.out << " reason=" << no_spaces(v.reason);
        o.out << '\n';
    } else {
        o.out << name << ": " << to_string(v.status) << " at bound " << v.bound;
        if (!v.reason.empty()) o.out << " (" << v.reason << ")";
        o.out << '\n';
        if (v.witness) o.out << format_witness(*v.witness);
    }
}

// Exact yes/no decisions print with bound 0: no universe sweep was involved.
void bool_line(Output& o, const std::string& name, bool value,
               const std::optional<Witness>& witness) {
    if (o.machine) {
        o.out << "VERDICT " << name << ' ' << (value ? "certified-yes" : "certified-no") << " 0";
        if (!value && witness) o.out << " witness=" << format_witness_ref(*witness);
        o.out << '\n';
    } else {
        o.out << name << ": " << (value ? "true" : "false") << '\n';
        if (!value && witness) o.out << format_witness(*witness);
    }
}

Context context_of(const ParsedFile& file, const std::string& path) {
    if (file.acts.empty())
        throw Error(path + ": need at least one act (the base act) after the monoid");
    return make_context(file.monoid, *file.acts.front());
}

ActPtr second_act(const ParsedFile& file, const std::string& path) {
    if (file.acts.size() < 2)
        throw Error(path + ": this operation needs a second act (the object) in the file");
    return file.acts[1];
}

// An act over the computed endomorphism monoid, supplied as a second file
// whose monoid block must match it exactly.
ActPtr endo_side_act(const Context& ctx, const RunConfig& config) {
    if (config.inputs.size() < 2)
        throw Error(
            "this property needs a second input file with an act over the endomorphism monoid");
    const ParsedFile file = parse_act_file(config.inputs[1]);
    if (!same_monoid(file.monoid, ctx.endo_monoid()))
        throw MonoidMismatch(config.inputs[1] +
                             ": monoid block differs from the computed endomorphism monoid");
    if (file.acts.empty()) throw Error(config.inputs[1] + ": need one act over the monoid");
    return share(RightAct::validate(ctx.endo_monoid(), file.acts.front()->action()));
}

int run_validate(const RunConfig& config, Output& o) {
    for (const std::string& path : config.inputs) {
        const ParsedFile file = parse_act_file(path);
        if (o.machine) {
            o.out << "VALID " << path << " monoid=" << file.monoid->size()
                  << " acts=" << file.acts.size() << " homs=" << file.homs.size() << '\n';
        } else {
            o.out << "ok: " << path << ": monoid of size " << file.monoid->size() << ", "
                  << file.acts.size() << " act(s), " << file.homs.size() << " hom(s)\n";
        }
    }
    return 0;
}

int run_classify(const RunConfig& config, Output& o) {
    const ParsedFile file = parse_act_file(config.inputs.front());
    const Context ctx = context_of(file, config.inputs.front());
    const std::string& p = config.property;
    int code = 0;
    const auto note_bool = [&](const std::string& name, bool value,
                               std::optional<Witness> witness) {
        bool_line(o, name, value, witness);
        if (!p.empty() && !value) code = 1;
    };
    const auto note_verdict = [&](const std::string& name, const Verdict& v) {
        verdict_line(o, name, v);
        if (!p.empty() && v.is_no()) code = 1;
    };

    const auto m_side = [&](const std::string& which) {
        const ActPtr x = second_act(file, config.inputs.front());
        const HomAct hx = hom_act(ctx, x);
        const TensorAct thx = tensor_act(ctx, hx.underlying());
        const ActHom delta = counit(ctx, hx, thx);
        if (which == "delta-reflexive" || which.empty())
            note_bool("delta-reflexive", is_iso(delta),
                      Witness{"counit-not-iso", {delta}, {x}, ""});
        if (which == "generated" || which.empty())
            note_bool("generated", is_a_generated(ctx, hx, delta),
                      Witness{"counit-not-epi", {delta}, {x}, ""});
        if (which == "colocal" || which.empty())
            note_verdict("colocal", bounded_colocal(ctx, x, config.bound));
    };
    const auto e_side = [&](const std::string& which) {
        const ActPtr y = endo_side_act(ctx, config);
        const TensorAct ty = tensor_act(ctx, y);
        const HomAct hty = hom_act(ctx, ty.underlying());
        const ActHom eta = unit(ctx, ty, hty);
        if (which == "eta-reflexive" || which.empty())
            note_bool("eta-reflexive", is_iso(eta), Witness{"unit-not-iso", {eta}, {y}, ""});
        if (which == "cogenerated" || which.empty())
            note_bool("cogenerated", is_a_cogenerated(ctx, eta),
                      Witness{"unit-not-mono", {eta}, {y}, ""});
        if (which == "local" || which.empty())
            note_verdict("local", bounded_local(ctx, y, config.bound));
    };

    if (p.empty()) {
        if (ctx.base()->size() == 0)
            verdict_line(o, "indecomposable", Verdict::unknown(0, "empty-base-act"));
        else
            note_bool("indecomposable", is_indecomposable_small(ctx), std::nullopt);
        note_verdict("weak-self-projective", weak_self_projective(ctx, config.bound));
        note_verdict("pullback-flat", pullback_flat(ctx, config.bound));
        if (file.acts.size() >= 2) m_side("");
        if (config.inputs.size() >= 2) e_side("");
    } else if (p == "indecomposable") {
        note_bool("indecomposable", is_indecomposable_small(ctx), std::nullopt);
    } else if (p == "weak-self-projective") {
        note_verdict("weak-self-projective", weak_self_projective(ctx, config.bound));
    } else if (p == "pullback-flat") {
        note_verdict("pullback-flat", pullback_flat(ctx, config.bound));
    } else if (p == "delta-reflexive" || p == "generated" || p == "colocal") {
        m_side(p);
    } else if (p == "eta-reflexive" || p == "cogenerated" || p == "local") {
        e_side(p);
    } else {
        throw Error("unknown classify property '" + p + "'");
    }
    return code;
}

int run_star(const RunConfig& config, Output& o) {
    const ParsedFile file = parse_act_file(config.inputs.front());
    const Context ctx = context_of(file, config.inputs.front());
    const StarReport report = star_report(ctx, config.bound);
    const std::string& p = config.property;
    int code = 0;
    const auto want = [&p](const std::string& name) { return p.empty() || p == name; };
    if (!p.empty() && p != "indecomposable" && p != "weakSelfProjective" &&
        p != "pullbackFlat" && p != "cEqualsG" && p != "weakStar" && p != "star")
        throw Error("unknown star property '" + p + "'");
    if (want("indecomposable")) {
        bool_line(o, "indecomposable", report.indecomposable, std::nullopt);
        if (p == "indecomposable" && !report.indecomposable) code = 1;
    }
    const auto emit = [&](const std::string& name, const Verdict& v) {
        if (!want(name)) return;
        verdict_line(o, name, v);
        if (p == name && v.is_no()) code = 1;
    };
    emit("weakSelfProjective", report.weak_self_projective);
    emit("pullbackFlat", report.pullback_flat);
    emit("cEqualsG", report.c_equals_g);
    emit("weakStar", report.weak_star);
    emit("star", report.star);
    return code;
}

void cert_line(Output& o, const MoritaCertificate& cert) {
    if (o.machine) {
        o.out << "CERT morita monoid=" << cert.monoid->size() << " base-size=" << cert.base->size()
              << " endo-size=" << cert.endo_monoid->size() << " bound=" << cert.bound
              << " m-checked=" << cert.m_objects_checked << " e-checked=" << cert.e_objects_checked
              << '\n';
    } else {
        o.out << "certified: base act of size " << cert.base->size()
              << " induces an equivalence up to bound " << cert.bound
              << " (endomorphism monoid of size " << cert.endo_monoid->size() << "; "
              << cert.m_objects_checked << " objects checked on one side, "
              << cert.e_objects_checked << " on the other)\n";
    }
}

int run_morita(const RunConfig& config, Output& o) {
    const ParsedFile file = parse_act_file(config.inputs.front());
    if (!file.acts.empty()) {
        cert_line(o, verify_morita(file.monoid, *file.acts.front(), config.bound));
        return 0;
    }
    const std::vector<Context> candidates = morita_candidates(file.monoid);
    if (!o.machine)
        o.out << candidates.size() << " candidate base act(s) up to isomorphism\n";
    for (const Context& cand : candidates)
        cert_line(o, verify_morita(file.monoid, *cand.base(), config.bound));
    return 0;
}

int run_cellular(const RunConfig& config, Output& o) {
    const ParsedFile file = parse_act_file(config.inputs.front());
    const Context ctx = context_of(file, config.inputs.front());
    const ActPtr x = second_act(file, config.inputs.front());
    const std::string& p = config.property;

    const auto print_approx = [&](const Approximation& approx) {
        if (o.machine) {
            o.out << "APPROX kind=" << to_string(approx.kind)
                  << " equivalence=" << (approx.is_equivalence ? "true" : "false")
                  << " colocal=" << to_string(approx.colocality.status)
                  << " object-size=" << approx.object->size() << '\n';
        } else {
            o.out << "approximation kind: " << to_string(approx.kind) << '\n'
                  << "map inverted by the map-act functor: "
                  << (approx.is_equivalence ? "true" : "false") << '\n';
            verdict_line(o, "object colocality", approx.colocality);
            o.out << "object (" << approx.object->size() << " elements):\n"
                  << emit_act_block(*approx.object) << "map into the target:\n"
                  << emit_hom_block(approx.map);
        }
    };

    if (p.empty() || p == "coreflection") {
        print_approx(generated_coreflection(ctx, x, config.bound));
        return 0;
    }
    if (p == "candidate") {
        print_approx(colocalization_candidate(ctx, x, config.bound));
        return 0;
    }
    if (p == "colimit-oracle") {
        print_approx(bousfield_colimit_oracle(ctx, x, config.bound));
        return 0;
    }
    if (p == "limit-oracle") {
        print_approx(bousfield_limit_oracle(ctx, x, config.bound));
        return 0;
    }
    if (p == "initiality") {
        const Approximation approx = generated_coreflection(ctx, x, config.bound);
        print_approx(approx);
        const Verdict v = initiality_check(ctx, approx, config.bound);
        verdict_line(o, "initiality", v);
        return v.is_no() ? 1 : 0;
    }
    throw Error("unknown cellular property '" + p + "'");
}

int run_universe(const RunConfig& config, Output& o) {
    const ParsedFile file = parse_act_file(config.inputs.front());
    const Universe universe = enumerate_universe(file.monoid, config.bound);
    if (o.machine) {
        o.out << "UNIVERSE monoid-size=" << file.monoid->size() << " bound=" << universe.bound
              << " count=" << universe.representatives.size() << '\n';
        for (std::size_t i = 0; i < universe.representatives.size(); ++i) {
            const RightAct& act = *universe.representatives[i];
            o.out << "REP " << i << " size=" << act.size() << " action=";
            for (Index a = 0; a < act.size(); ++a) {
                if (a) o.out << ';';
                for (Index m = 0; m < file.monoid->size(); ++m) {
                    if (m) o.out << ',';
                    o.out << act.act(a, m);
                }
            }
            o.out << '\n';
        }
    } else {
        o.out << universe.representatives.size() << " act(s) up to isomorphism at bound "
              << universe.bound << " over a monoid of size " << file.monoid->size() << '\n';
        for (std::size_t i = 0; i < universe.representatives.size(); ++i) {
            o.out << "representative " << i << ":\n"
                  << emit_act_block(*universe.representatives[i]);
        }
    }
    return 0;
}

int run_selftest_command(const RunConfig& config, Output& o) {
    SelftestOptions options;
    options.bound = config.bound;
    options.seed = config.seed;
    const SelftestReport report = run_selftest(options);
    for (const CriterionResult& c : report.criteria) {
        if (o.machine) {
            o.out << "CRITERION " << c.number << ' ' << c.name << ' '
                  << (c.pass ? "PASS" : "FAIL") << " checked=" << c.checked;
            if (!c.detail.empty()) o.out << " detail=" << no_spaces(c.detail);
            o.out << '\n';
        } else {
            o.out << "criterion " << c.number << ' ' << c.name << ": "
                  << (c.pass ? "PASS" : "FAIL") << " (" << c.checked << " checks)";
            if (!c.detail.empty()) o.out << " -- " << c.detail;
            o.out << '\n';
        }
    }
    for (const auto& [name, passes] : report.theorem_passes) {
        if (o.machine)
            o.out << "THEOREM " << name << " passes=" << passes << '\n';
        else
            o.out << "theorem " << name << ": " << passes << " passes\n";
    }
    if (o.machine)
        o.out << "SELFTEST " << (report.all_pass ? "PASS" : "FAIL") << '\n';
    else
        o.out << "selftest: " << (report.all_pass ? "PASS" : "FAIL") << '\n';
    return report.all_pass ? 0 : 1;
}

int dispatch(const RunConfig& config, Output& o) {
    if (config.output_format != "text" && config.output_format != "machine")
        throw Error("output format must be 'text' or 'machine'");
    if (config.bound < 0) throw Error("bound must be nonnegative");
    const bool needs_input = config.command != "selftest";
    if (needs_input && config.inputs.empty())
        throw Error(config.command + " needs at least one input file");
    if (config.command == "validate") return run_validate(config, o);
    if (config.command == "classify") return run_classify(config, o);
    if (config.command == "star") return run_star(config, o);
    if (config.command == "morita") return run_morita(config, o);
    if (config.command == "cellular") return run_cellular(config, o);
    if (config.command == "universe") return run_universe(config, o);
    if (config.command == "selftest") return run_selftest_command(config, o);
    throw Error("unknown command '" + config.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Output o{out, config.output_format == "machine"};
    try {
        return dispatch(config, o);
    } catch (const TheoremViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace actkit
