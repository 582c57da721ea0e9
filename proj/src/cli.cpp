#include "thetaq/cli.hpp"

#include "thetaq/bundle.hpp"
#include "thetaq/coaction.hpp"
#include "thetaq/quantumgroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>

namespace thetaq {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kCoinvariantBudget = 6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string canonical_name(const std::string& name) { return name == "t" ? "theta" : name; }

/// Splits `--name=form` arguments that are not declared options off into bindings.
Bindings take_bindings(std::vector<std::string>& args, const std::set<std::string>& options) {
    Bindings out;
    Bindings alias{{"t", LinearForm::param("theta")}};
    std::vector<std::string> rest;
    for (const auto& a : args) {
        auto eq = a.find('=');
        if (a.rfind("--", 0) != 0 || eq == std::string::npos || options.count(a.substr(2, eq - 2))) {
            rest.push_back(a);
            continue;
        }
        std::string name = canonical_name(a.substr(2, eq - 2));
        LinearForm f;
        try {
            f = LinearForm::parse(a.substr(eq + 1)).substitute(alias);
        } catch (const std::exception& e) {
            throw UsageError("bad binding " + a + ": " + e.what());
        }
        if (!out.emplace(name, f).second) throw UsageError("parameter bound twice: " + name);
    }
    args = std::move(rest);
    return out;
}

Json bindings_json(const Bindings& b) {
    Json j = Json::object();
    for (const auto& [k, v] : b) j[k] = v.to_string();
    return j;
}

/// Collects reports and renders them in either format.
class Output {
public:
    Output(std::vector<std::string> command, bool structured) : structured_(structured) {
        doc_["schema"] = kReportSchema;
        doc_["command"] = std::move(command);
    }

    Json& doc() { return doc_; }
    std::vector<std::string>& lines() { return lines_; }

    void report(const CheckReport& r) {
        Json items = Json::array();
        lines_.push_back("== " + r.title);
        for (const auto& it : r.items) {
            items.push_back({{"name", it.name}, {"pass", it.pass}, {"witness", it.witness}});
            std::string line = std::string(it.pass ? "PASS " : "FAIL ") + it.name;
            if (!it.pass && !it.witness.empty()) line += "\n     witness: " + it.witness;
            lines_.push_back(line);
        }
        for (const auto& n : r.notes) lines_.push_back("note " + n);
        doc_["reports"].push_back({{"title", r.title}, {"items", items}, {"notes", r.notes}});
        total_ += r.items.size();
        failed_ += r.failures();
    }

    int finish(std::ostream& out, bool ok) {
        if (doc_.contains("reports")) {
            doc_["passed"] = total_ - failed_;
            doc_["total"] = total_;
            lines_.push_back("summary " + std::to_string(total_ - failed_) + "/" + std::to_string(total_) +
                             " items passed");
            ok = ok && failed_ == 0;
        }
        doc_["status"] = ok ? "pass" : "fail";
        lines_.push_back(std::string("status ") + (ok ? "pass" : "fail"));
        if (structured_) {
            out << doc_.dump(2) << '\n';
        } else {
            std::string echo = "thetaq";
            for (const auto& a : doc_["command"]) echo += " " + a.get<std::string>();
            out << "$ " << echo << '\n';
            for (const auto& l : lines_) out << l << '\n';
        }
        return ok ? 0 : 1;
    }

private:
    bool structured_;
    Json doc_;
    std::vector<std::string> lines_;
    std::size_t total_ = 0, failed_ = 0;
};

// ---- relations ---------------------------------------------------------------

int cmd_relations(Output& o, const Bindings& bindings, std::ostream& out) {
    HopfSpec h = build_su3_theta();
    HopfSpec hs = substitute(h, bindings);
    Json rels = Json::array();
    o.lines().push_back("== derived relations");
    for (const auto& r : derive_relation_table(hs)) {
        std::string text = format_relation(hs.base, r);
        rels.push_back({{"lhs", hs.base.letter(r.lhs_first).name + "*" + hs.base.letter(r.lhs_second).name},
                        {"phase", r.phase.exponent().to_string()},
                        {"text", text}});
        o.lines().push_back(text);
    }
    RelationDiff d = diff_relation_table(h, su3_reference_relations(), bindings);
    o.lines().push_back("== reference diff");
    o.lines().push_back("matched " + std::to_string(d.matched) + "/" + std::to_string(d.total));
    for (const auto& m : d.mismatches) o.lines().push_back("MISMATCH " + m);
    o.doc()["bindings"] = bindings_json(bindings);
    o.doc()["relations"] = rels;
    o.doc()["diff"] = {{"matched", d.matched}, {"total", d.total}, {"mismatches", d.mismatches}};
    return o.finish(out, d.mismatches.empty() && d.matched == 36);
}

// ---- check -------------------------------------------------------------------

CoactionSpec constrained(CoactionSpec raw, const Bindings& bindings, bool generic, Output& o) {
    std::set<std::string> target = raw.target.params();
    bool explicit_target = false;
    for (const auto& [k, v] : bindings) explicit_target = explicit_target || target.count(k);
    Bindings applied;
    std::string mode;
    if (generic) {
        mode = "generic";
    } else if (explicit_target) {
        mode = "explicit";
    } else {
        mode = "derived";
        applied = extract_constraints(raw).solution();
    }
    for (auto& [k, v] : applied) v = v.substitute(bindings);
    for (const auto& [k, v] : bindings) applied.emplace(k, v);
    o.doc()["parameters"] = {{"mode", mode}, {"bindings", bindings_json(applied)}};
    o.lines().push_back("parameters " + mode);
    for (const auto& [k, v] : applied) o.lines().push_back("  " + k + " = " + v.to_string());
    return substitute(raw, applied);
}

void projection_checks(Output& o, const Bundle& b, Normalizer n, unsigned degree) {
    FundamentalFrames f = build_fundamental_frames(b, n);
    o.report(check_gram(b, {f.z1, f.z2}, "Z"));
    o.report(check_gram(b, {f.w1, f.w2}, "W"));
    auto one = [&](const std::string& label, const std::vector<FrameVector>& frames) {
        ProjectionMatrix p = build_projection(b, frames);
        CheckReport r = check_projection(b, p, label);
        Element ch = chern0(b, p);
        Element want(static_cast<long>(frames.size()));
        r.add("ch0(" + label + ") = " + std::to_string(frames.size()), ch == want, render(b.algebra(), ch));
        o.report(r);
    };
    one("p^(1,0)", {f.z1, f.z2});
    one("p^(0,1)", {f.w1, f.w2});
    for (unsigned d = 2; d <= degree; ++d)
        for (unsigned nn = d + 1; nn-- > 0;) {
            unsigned m = d - nn;
            one("p^(" + std::to_string(nn) + "," + std::to_string(m) + ")", build_sym_frame(b, f, nn, m));
        }
}

int cmd_check(Output& o, const std::string& target, const Bindings& bindings, bool generic,
              const std::string& variant, std::optional<unsigned> degree, std::ostream& out) {
    o.doc()["target"] = target;
    HopfSpec h = build_su3_theta();
    if (target == "hopf") {
        HopfSpec hs = substitute(h, bindings);
        o.doc()["bindings"] = bindings_json(bindings);
        o.report(check_hopf_axioms(hs, degree.value_or(3)));
    } else if (target == "haar") {
        o.doc()["bindings"] = bindings_json(bindings);
        o.report(check_unimodularity_low_degree(substitute(h, bindings)));
    } else if (target == "coaction-s5" || target == "coaction-s5s5") {
        CoactionSpec raw = target == "coaction-s5" ? build_s5_coaction(h, symbolic_skew(3, "theta"))
                                                   : build_s5xs5_coaction(h, symbolic_skew(6, "tp"));
        CoactionSpec c = constrained(raw, bindings, generic, o);
        o.report(check_homomorphism(c));
        o.report(check_equivariance(c));
        o.report(check_coaction_axioms(c));
    } else if (target == "w-relations" || target == "projection") {
        Bindings group, rest;
        for (const auto& [k, v] : bindings) (k == "theta" ? group : rest).emplace(k, v);
        Bundle b = build_bundle(substitute(h, group), "lambda1", rest);
        o.doc()["bindings"] = bindings_json(bindings);
        if (target == "w-relations") {
            o.report(check_w_relations(b, degree.value_or(5)));
        } else {
            if (variant != "corrected" && variant != "paper-literal") throw UsageError("unknown variant " + variant);
            o.doc()["variant"] = variant;
            o.lines().push_back("variant " + variant);
            projection_checks(o, b, variant == "corrected" ? Normalizer::Corrected : Normalizer::PaperLiteral,
                              degree.value_or(1));
        }
    } else {
        throw UsageError("unknown check target " + target);
    }
    return o.finish(out, true);
}

// ---- constraints / coinvariants ------------------------------------------------

CoactionSpec raw_coaction(const std::string& target, std::size_t torus_rank) {
    HopfSpec h = build_su3_theta("theta", torus_rank);
    auto skew = [&](std::size_t n, const std::string& prefix) {
        return torus_rank ? symbolic_skew(n, prefix) : zero_skew(n);
    };
    if (target == "s5") return build_s5_coaction(h, skew(3, "theta"));
    if (target == "s5s5") return build_s5xs5_coaction(h, skew(6, "tp"));
    throw UsageError("unknown target " + target);
}

int cmd_constraints(Output& o, const std::string& target, std::size_t torus_rank, std::ostream& out) {
    if (torus_rank != 0 && torus_rank != 4) throw UsageError("torus rank must be 0 or 4");
    ConstraintSet cs = extract_constraints(raw_coaction(target, torus_rank));
    o.doc()["target"] = target;
    o.doc()["torus_rank"] = torus_rank;
    o.doc()["constraints"] = {{"variables", cs.variables}, {"rows", cs.to_strings()}, {"consistent", cs.consistent}};
    o.lines().push_back("== constraints " + target + " (" + std::to_string(cs.rows.size()) + " rows)");
    for (const auto& s : cs.to_strings()) o.lines().push_back(s);
    if (cs.empty()) o.lines().push_back("(none)");
    if (!cs.consistent) o.lines().push_back("inconsistent");
    return o.finish(out, cs.consistent);
}

int cmd_coinvariants(Output& o, const std::string& target, std::optional<unsigned> degree, std::ostream& out) {
    unsigned d = degree.value_or(target == "s5s5" ? 2 : 3);
    if (d > kCoinvariantBudget)
        throw UsageError("degree budget exceeded: " + std::to_string(d) + " > " + std::to_string(kCoinvariantBudget));
    CoactionSpec raw = raw_coaction(target, 4);
    CoactionSpec c = substitute(raw, extract_constraints(raw).solution());
    CoinvariantResult r = coinvariants(c, d);
    o.doc()["target"] = target;
    o.doc()["degree"] = d;
    CheckReport rep;
    rep.title = "coinvariants " + target + " to degree " + std::to_string(d);
    Json bideg = Json::array();
    for (const auto& b : r.bidegrees) {
        Json inv = Json::array();
        for (const auto& e : b.invariants) inv.push_back(render(c.target, e));
        bideg.push_back({{"p", b.p}, {"q", b.q}, {"invariants", inv}, {"oracle_dim", b.oracle_dim},
                         {"oracle_agrees", b.oracle_agrees}});
        rep.add("bidegree (" + std::to_string(b.p) + "," + std::to_string(b.q) + "): " +
                    std::to_string(b.invariants.size()) + " invariants, oracle agrees",
                b.oracle_agrees, "oracle dimension " + std::to_string(b.oracle_dim));
    }
    Json basis = Json::array();
    for (std::size_t i = 0; i < r.basis.size(); ++i) {
        std::string e = render(c.target, r.basis[i]);
        basis.push_back({{"element", e}, {"confirmed", static_cast<bool>(r.confirmed[i])}});
        rep.add("delta(" + e + ") = 1 (x) " + e, r.confirmed[i]);
    }
    rep.notes.push_back("basis dimension " + std::to_string(r.basis.size()));
    o.doc()["bidegrees"] = bideg;
    o.doc()["basis"] = basis;
    o.report(rep);
    return o.finish(out, true);
}

}  // namespace

int run_cli(const std::vector<std::string>& input, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of theta-deformed SU(3) and its actions on spheres", "thetaq"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    auto* rel = app.add_subcommand("relations", "Derive the 36 commutation relations and diff them against the reference table");

    auto* chk = app.add_subcommand("check", "Run a verification suite");
    std::string check_target, variant = "corrected";
    std::optional<unsigned> degree;
    bool generic = false;
    chk->add_option("target", check_target, "hopf | coaction-s5 | coaction-s5s5 | projection | w-relations | haar")
        ->required()
        ->check(CLI::IsMember({"hopf", "coaction-s5", "coaction-s5s5", "projection", "w-relations", "haar"}));
    chk->add_option("--degree", degree, "Degree bound");
    chk->add_option("--variant", variant, "corrected or paper-literal")
        ->check(CLI::IsMember({"corrected", "paper-literal"}));
    chk->add_flag("--generic", generic, "Leave every deformation parameter free");

    auto* con = app.add_subcommand("constraints", "Print the reduced constraint system of a coaction");
    std::string con_target;
    std::size_t torus_rank = 4;
    con->add_option("target", con_target, "s5 | s5s5")->required()->check(CLI::IsMember({"s5", "s5s5"}));
    con->add_option("--torus-rank", torus_rank, "4, or 0 for the undeformed group");

    auto* coi = app.add_subcommand("coinvariants", "Compute coinvariants bidegree by bidegree");
    std::string coi_target;
    std::optional<unsigned> coi_degree;
    coi->add_option("target", coi_target, "s5 | s5s5")->required()->check(CLI::IsMember({"s5", "s5s5"}));
    coi->add_option("--degree", coi_degree, "Total degree bound");

    for (auto* sub : {rel, chk, con, coi}) sub->fallthrough();

    std::vector<std::string> args = input;
    try {
        Bindings bindings = take_bindings(args, {"format", "degree", "variant", "torus-rank", "generic", "help"});
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        Output o(input, format == "structured");
        o.doc()["subcommand"] = app.get_subcommands().front()->get_name();
        if (rel->parsed()) return cmd_relations(o, bindings, out);
        if (!bindings.empty() && !chk->parsed()) throw UsageError("parameter bindings apply to relations and check");
        if (chk->parsed()) return cmd_check(o, check_target, bindings, generic, variant, degree, out);
        if (con->parsed()) return cmd_constraints(o, con_target, torus_rank, out);
        return cmd_coinvariants(o, coi_target, coi_degree, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "thetaq: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "thetaq: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "thetaq: error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace thetaq
