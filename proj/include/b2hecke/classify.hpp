#ifndef B2HECKE_CLASSIFY_HPP
#define B2HECKE_CLASSIFY_HPP

#include <b2hecke/catalog.hpp>

#include <json.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace b2hecke {

using Json = nlohmann::ordered_json;

/// Configuration problems: rejected regimes, excluded family parameters,
/// malformed values. Mapped to exit code 2 by the CLI.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ReportFormat { json, markdown };

struct RunConfig {
    RegimeKind regime = RegimeKind::generic;
    std::optional<GaussianRational> p_override;
    std::optional<GaussianRational> q_override;
    GaussianRational v = GaussianRational(2);
    GaussianRational u = GaussianRational(2);
    ReportFormat format = ReportFormat::json;
    std::string out_path;  // empty: stdout
};

/// Validated minimal-height non-root-of-unity specializations per regime.
inline Parameters default_params(RegimeKind kind) {
    GaussianRational q(3);
    switch (kind) {
        case RegimeKind::generic: return Parameters(GaussianRational(5), q);
        case RegimeKind::p_eq_q: return Parameters(GaussianRational(3), q);
        case RegimeKind::p_eq_q2: return Parameters(GaussianRational(9), q);
        case RegimeKind::p2_eq_neg_q2: return Parameters(3 * GaussianRational::i(), q);
        case RegimeKind::p_eq_neg_q: return Parameters(GaussianRational(-3), q);
        case RegimeKind::p_eq_inv_q: return Parameters(GaussianRational::fraction(1, 3), q);
        case RegimeKind::p_eq_neg_inv_q: return Parameters(GaussianRational::fraction(-1, 3), q);
        case RegimeKind::p_eq_neg_q2: return Parameters(GaussianRational(-9), q);
        case RegimeKind::p_eq_inv_q2: return Parameters(GaussianRational::fraction(1, 9), q);
        case RegimeKind::p_eq_neg_inv_q2: return Parameters(GaussianRational::fraction(-1, 9), q);
        case RegimeKind::p2_eq_neg_inv_q2:
            return Parameters(GaussianRational::fraction(1, 3) * GaussianRational::i(), q);
    }
    throw ConfigError("unknown regime");
}

inline std::optional<RegimeKind> regime_from_name(const std::string& name) {
    for (RegimeKind k :
         {RegimeKind::generic, RegimeKind::p_eq_q, RegimeKind::p_eq_q2, RegimeKind::p2_eq_neg_q2,
          RegimeKind::p_eq_neg_q, RegimeKind::p_eq_inv_q, RegimeKind::p_eq_neg_inv_q,
          RegimeKind::p_eq_neg_q2, RegimeKind::p_eq_inv_q2, RegimeKind::p_eq_neg_inv_q2,
          RegimeKind::p2_eq_neg_inv_q2})
        if (name == regime_name(k)) return k;
    return std::nullopt;
}

inline bool is_transformed(RegimeKind kind) {
    switch (kind) {
        case RegimeKind::generic:
        case RegimeKind::p_eq_q:
        case RegimeKind::p_eq_q2:
        case RegimeKind::p2_eq_neg_q2: return false;
        default: return true;
    }
}

/// Base regime a transformed one reduces to through the T2-sign automorphism.
inline RegimeKind transport_base_kind(RegimeKind kind) {
    switch (kind) {
        case RegimeKind::p_eq_neg_q:
        case RegimeKind::p_eq_inv_q:
        case RegimeKind::p_eq_neg_inv_q: return RegimeKind::p_eq_q;
        case RegimeKind::p_eq_neg_q2:
        case RegimeKind::p_eq_inv_q2:
        case RegimeKind::p_eq_neg_inv_q2: return RegimeKind::p_eq_q2;
        case RegimeKind::p2_eq_neg_inv_q2: return RegimeKind::p2_eq_neg_q2;
        default: return kind;
    }
}

/// Rows of the classification table per base regime; rows whose character is
/// W-conjugate to an earlier one in the regime are omitted, matching the
/// published tables.
inline std::vector<std::string> regime_rows(RegimeKind base) {
    switch (base) {
        case RegimeKind::p_eq_q:
            return {"chi_a", "chi_b", "chi_c", "chi_d1", "chi_d4", "chi_d5", "chi_f", "chi_g"};
        case RegimeKind::p_eq_q2:
            return {"chi_a", "chi_b", "chi_c", "chi_d2", "chi_d3", "chi_d5", "chi_f", "chi_g"};
        case RegimeKind::p2_eq_neg_q2:
            return {"chi_a", "chi_c", "chi_d1", "chi_d2", "chi_d3", "chi_d4", "chi_d5", "chi_f",
                    "chi_g"};
        default: return Catalog::base_character_names();
    }
}

/// Everything bound at a validated parameter point. Addresses are stable:
/// the identify set holds a pointer to the word set.
struct RunContext {
    Parameters params;
    Catalog catalog;
    WordSet words;
    IdentifySet identify;

    RunContext(Parameters pr, const GaussianRational& v, const GaussianRational& u)
        : params(pr), catalog(pr, v, u), words(WordSet::build(pr)), identify(catalog.identify_set(&words)) {}

    RunContext(const RunContext&) = delete;
    RunContext& operator=(const RunContext&) = delete;
};

inline std::unique_ptr<RunContext> make_context(const Parameters& params, const GaussianRational& v,
                                                const GaussianRational& u) {
    try {
        return std::make_unique<RunContext>(params, v, u);
    } catch (const ExcludedParameter& e) {
        throw ConfigError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

inline Parameters resolve_params(const RunConfig& config) {
    Parameters defaults = default_params(config.regime);
    GaussianRational p = config.p_override.value_or(defaults.p);
    GaussianRational q = config.q_override.value_or(defaults.q);
    try {
        Parameters pr(p, q);
        Regime check = validate_regime(pr, config.regime);
        if (!check.accepted()) {
            std::string detail;
            for (const auto& vstr : check.violations) detail += "\n  " + vstr;
            throw ConfigError(std::string("parameters rejected for regime ") +
                              regime_name(config.regime) + detail);
        }
        return pr;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

// ---- classify ----

struct RowReport {
    std::string name;
    Character chi;
    std::vector<std::string> p_chi;
    FactorReport report;
};

struct TransportInfo {
    RegimeKind base_kind;
    Parameters base_params;
    bool twist = false;  // false: parameter relabel only (same matrices)
    bool verified = false;
};

struct ClassifyReport {
    RegimeKind regime;
    Parameters params;
    GaussianRational v, u;
    std::optional<TransportInfo> transport;
    std::vector<RowReport> rows;
    bool all_certified = false;
};

inline RowReport classify_row(const RunContext& ctx, const std::string& name) {
    Character chi = ctx.catalog.character(name);
    KatoResult kr = kato(chi);
    HModule m = principal_series(chi);
    FactorReport rep = composition_factors(m, ctx.words, &ctx.identify);
    return RowReport{name, chi, kr.p_chi, std::move(rep)};
}

namespace detail {

/// Base parameters and transport mode for a transformed regime: the T2-sign
/// twist carries p to -p, and p and -1/p present the same algebra, so a
/// transformed point reduces to the base regime through -1/p (relabel) or
/// -p, 1/p (twist).
inline TransportInfo find_transport(const Parameters& prime, RegimeKind kind) {
    RegimeKind base = transport_base_kind(kind);
    struct Candidate {
        GaussianRational p;
        bool twist;
    };
    const Candidate candidates[] = {{-prime.p.inv(), false}, {-prime.p, true}, {prime.p.inv(), true}};
    for (const Candidate& cand : candidates) {
        try {
            Parameters base_params(cand.p, prime.q);
            if (validate_regime(base_params, base).accepted())
                return TransportInfo{base, base_params, cand.twist, false};
        } catch (const std::invalid_argument&) {
        }
    }
    throw ConfigError(std::string("no transport to base regime ") + regime_name(base));
}

/// Re-express a module at transported parameters: optionally negate T2, then
/// rebuild at the target p (the construction re-verifies the relations).
inline HModule transport_module(const HModule& m, const Parameters& target, bool twist) {
    Matrix t2 = twist ? -m.t2() : m.t2();
    std::optional<Character> seed;
    if (m.seed().has_value()) seed = Character(m.seed()->x1(), m.seed()->x2(), target);
    return HModule(m.label(), target, m.t1(), t2, m.x1(), m.x2(), seed);
}

}  // namespace detail

/// Classification of all table rows. Transformed regimes run at the base
/// parameters and transport every factor through the T2-sign automorphism,
/// re-verifying relations, irreducibility, and calibration at the target.
inline ClassifyReport run_classify(const RunConfig& config) {
    Parameters params = resolve_params(config);
    ClassifyReport out{config.regime, params, config.v, config.u, std::nullopt, {}, false};

    Parameters base_params = params;
    if (is_transformed(config.regime)) {
        TransportInfo transport = detail::find_transport(params, config.regime);
        base_params = transport.base_params;
        out.transport = transport;
    }

    std::unique_ptr<RunContext> ctx = make_context(base_params, config.v, config.u);
    bool all_certified = true;
    for (const std::string& name : regime_rows(transport_base_kind(config.regime))) {
        RowReport row = classify_row(*ctx, name);
        all_certified = all_certified && row.report.certified;
        out.rows.push_back(std::move(row));
    }

    if (out.transport.has_value()) {
        bool verified = true;
        for (const RowReport& row : out.rows) {
            for (const Factor& f : row.report.factors) {
                HModule moved = detail::transport_module(f.module, params, out.transport->twist);
                verified = verified && burnside_irreducible(moved).irreducible;
                verified = verified && (is_calibrated(moved) == f.calibrated);
            }
        }
        out.transport->verified = verified;
        all_certified = all_certified && verified;
    }
    out.all_certified = all_certified;
    return out;
}

// ---- verify-catalog ----

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    RegimeKind regime;
    Parameters params;
    std::vector<CheckLine> checks;
    bool ok = false;
};

/// Relation, irreducibility, calibration, and exact-sequence verification of
/// the whole catalog against its claims. A nonempty corrupt_label perturbs
/// that entry first (negative-control mode for tests).
inline VerifyReport run_verify_catalog(const RunConfig& config,
                                       const std::string& corrupt_label = "") {
    if (is_transformed(config.regime))
        throw ConfigError("verify-catalog runs on base regimes; transformed ones are covered by "
                          "classify transport");
    Parameters params = resolve_params(config);
    std::unique_ptr<RunContext> ctx = make_context(params, config.v, config.u);
    VerifyReport out{config.regime, params, {}, false};
    auto check = [&out](const std::string& name, bool pass, std::string detail = "") {
        out.checks.push_back({name, pass, std::move(detail)});
    };

    for (const std::string& label : ctx->catalog.module_labels()) {
        try {
            HModule m = ctx->catalog.build_module(label);
            if (label == corrupt_label) {
                Matrix bad = m.t1();
                bad.at(0, 0) = bad.at(0, 0) + GaussianRational(1);
                RelationReport rr = verify_relations(bad, m.t2(), m.x1(), m.x2(), params);
                check("relations(" + label + ")", rr.pass(), rr.failures());
            } else {
                check("relations(" + label + ")", true);
            }
        } catch (const std::exception& e) {
            check("relations(" + label + ")", false, e.what());
        }
    }

    for (const Catalog::Claim& claim : ctx->catalog.claims()) {
        try {
            HModule m = ctx->catalog.build_module(claim.label);
            BurnsideResult br = burnside_irreducible(m);
            check("burnside(" + claim.label + ")", br.irreducible == claim.irreducible,
                  "env_dim=" + std::to_string(br.env_dim) + " expected " +
                      (claim.irreducible ? "irreducible" : "reducible"));
            if (claim.irreducible && claim.calibrated.has_value())
                check("calibrated(" + claim.label + ")", is_calibrated(m) == *claim.calibrated,
                      std::string("expected ") + (*claim.calibrated ? "calibrated" : "non-calibrated"));
        } catch (const std::exception& e) {
            check("burnside(" + claim.label + ")", false, e.what());
        }
    }

    // the printed d5 module presents the same representation as the induced one
    try {
        std::vector<GaussianRational> te =
            ctx->words.trace_vector(ctx->catalog.build_module("IndExplicit(rho_1^d5)"));
        std::vector<GaussianRational> ti =
            ctx->words.trace_vector(ctx->catalog.build_module("Ind(rho_1^d5)"));
        check("explicit-d5-matches-induced", te == ti);
    } catch (const std::exception& e) {
        check("explicit-d5-matches-induced", false, e.what());
    }

    // decomposition lemma: 0 -> Ind rho2 -> M(chi) -> Ind rho1 -> 0
    for (const std::string& name : regime_rows(config.regime)) {
        try {
            Character chi = ctx->catalog.character(name);
            Catalog::LemmaData data = ctx->catalog.decomposition_data(name);
            const GaussianRational& qi = params.qi(data.subalgebra);
            WeightVector alpha = data.subalgebra == 1 ? kAlpha1Coroot : kAlpha2Coroot;
            check("lemma-precondition(" + name + ")", chi.eval(alpha) == qi * qi);
            HModule m = principal_series(chi);
            HModule ind1 = induce(data.rho1, "Ind(rho_1)");
            HModule ind2 = induce(data.rho2, "Ind(rho_2)");
            check("ses-dims(" + name + ")", ind1.dim() + ind2.dim() == m.dim());
            bool surj = false;
            for (const Matrix& f : hom_space(m, ind1)) surj = surj || f.rank() == ind1.dim();
            check("ses-surjection(" + name + ")", surj);
            bool inj = false;
            for (const Matrix& f : hom_space(ind2, m)) inj = inj || f.rank() == ind2.dim();
            check("ses-injection(" + name + ")", inj);
        } catch (const std::exception& e) {
            check("ses(" + name + ")", false, e.what());
        }
    }

    if (config.regime == RegimeKind::p2_eq_neg_q2) {
        for (const char* lab : {"U_c^3", "U_c^4"}) {
            try {
                FactorReport rep =
                    composition_factors(ctx->catalog.build_module(lab), ctx->words, &ctx->identify);
                bool split = rep.certified && rep.factors.size() == 2 &&
                             rep.factors[0].module.dim() == 1 && rep.factors[1].module.dim() == 1;
                std::string labels;
                for (const Factor& f : rep.factors) labels += f.label + " ";
                check(std::string(lab) + "-splits-into-onedims", split, labels);
            } catch (const std::exception& e) {
                check(std::string(lab) + "-splits-into-onedims", false, e.what());
            }
        }
    }

    out.ok = true;
    for (const CheckLine& c : out.checks) out.ok = out.ok && c.pass;
    return out;
}

// ---- ram-correction ----

struct RamReport {
    Parameters params;
    std::vector<RowReport> rows;
    std::vector<CheckLine> checks;
    bool ok = false;
};

/// Equal-parameter corrections: M(chi_d5) carries two 4-dimensional
/// non-calibrated irreducible factors, and the negated characters missing
/// from the earlier published list get certified factor data.
inline RamReport run_ram_correction(const RunConfig& config) {
    RunConfig local = config;
    if ((config.p_override.has_value() || config.q_override.has_value()) &&
        config.regime != RegimeKind::p_eq_q)
        throw ConfigError("ram-correction runs in the p-eq-q regime");
    local.regime = RegimeKind::p_eq_q;
    Parameters params = resolve_params(local);
    std::unique_ptr<RunContext> ctx = make_context(params, local.v, local.u);
    RamReport out{params, {}, {}, false};
    auto check = [&out](const std::string& name, bool pass, std::string detail = "") {
        out.checks.push_back({name, pass, std::move(detail)});
    };

    RowReport d5 = classify_row(*ctx, "chi_d5");
    bool d5_ok = d5.report.certified && d5.report.factors.size() == 2;
    for (const Factor& f : d5.report.factors) d5_ok = d5_ok && f.module.dim() == 4 && !f.calibrated;
    check("chi_d5-two-4dim-non-calibrated", d5_ok);
    out.rows.push_back(std::move(d5));

    for (const std::string& base : {"chi_a", "chi_b", "chi_d1", "chi_d4", "chi_d5", "chi_f"}) {
        RowReport row = classify_row(*ctx, "-" + base);
        check("certified(-" + base + ")", row.report.certified);
        // negation is an algebra automorphism, so dimensions must agree rowwise
        RowReport ref = classify_row(*ctx, base);
        check("dims-match(" + base + ")", row.report.dims() == ref.report.dims());
        out.rows.push_back(std::move(row));
    }

    out.ok = true;
    for (const CheckLine& c : out.checks) out.ok = out.ok && c.pass;
    return out;
}

// ---- weights ----

struct WeightsReport {
    std::string chi_name;
    Character chi;
    std::vector<std::string> p_chi;
    WeightDecomposition decomposition;
    bool calibrated = false;
};

inline WeightsReport run_weights(const RunConfig& config, const std::string& chi_name) {
    Parameters params = resolve_params(config);
    std::unique_ptr<RunContext> ctx = make_context(params, config.v, config.u);
    Character chi = [&] {
        try {
            return ctx->catalog.character(chi_name);
        } catch (const UnknownLabel& e) {
            throw ConfigError(e.what());
        }
    }();
    HModule m = principal_series(chi);
    WeightDecomposition wd = weight_decomposition(m);
    bool cal = wd.calibrated();
    return WeightsReport{chi_name, chi, kato(chi).p_chi, std::move(wd), cal};
}

// ---- report emission ----

inline Json params_json(const Parameters& pr) {
    return Json{{"p", pr.p.to_string()}, {"q", pr.q.to_string()}};
}

inline Json row_json(const RowReport& row) {
    Json factors = Json::array();
    for (const Factor& f : row.report.factors) {
        Json weights = Json::array();
        for (const auto& [w, mult] : f.weights)
            weights.push_back(Json{{"x1", w.x1().to_string()}, {"x2", w.x2().to_string()},
                                   {"mult", mult}});
        factors.push_back(Json{{"label", f.label},
                               {"dim", f.module.dim()},
                               {"calibrated", f.calibrated},
                               {"weights", weights}});
    }
    return Json{{"character",
                 Json{{"name", row.name}, {"x1", row.chi.x1().to_string()},
                      {"x2", row.chi.x2().to_string()}}},
                {"params", params_json(row.chi.params())},
                {"P_chi", row.p_chi},
                {"factors", factors},
                {"certified", row.report.certified}};
}

inline Json classify_json(const ClassifyReport& rep) {
    Json j{{"command", "classify"},
           {"regime", regime_name(rep.regime)},
           {"params", params_json(rep.params)},
           {"v", rep.v.to_string()},
           {"u", rep.u.to_string()}};
    if (rep.transport.has_value()) {
        j["transport"] = Json{{"base_regime", regime_name(rep.transport->base_kind)},
                              {"base_params", params_json(rep.transport->base_params)},
                              {"twist_T2", rep.transport->twist},
                              {"verified", rep.transport->verified}};
    }
    Json rows = Json::array();
    for (const RowReport& row : rep.rows) rows.push_back(row_json(row));
    j["rows"] = rows;
    j["all_certified"] = rep.all_certified;
    return j;
}

inline std::string factors_cell(const FactorReport& rep) {
    std::string cell;
    for (const Factor& f : rep.factors) {
        if (!cell.empty()) cell += "; ";
        cell += std::to_string(f.module.dim()) + (f.calibrated ? " o " : " x ") + f.label;
    }
    return cell;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

inline std::string classify_markdown(const ClassifyReport& rep) {
    std::string md = "# Classification: regime " + std::string(regime_name(rep.regime)) + "\n\n";
    md += "Parameters: p = " + rep.params.p.to_string() + ", q = " + rep.params.q.to_string() +
          ", v = " + rep.v.to_string() + ", u = " + rep.u.to_string() + "\n\n";
    if (rep.transport.has_value()) {
        md += "Transported from regime " + std::string(regime_name(rep.transport->base_kind)) +
              " at p = " + rep.transport->base_params.p.to_string() +
              (rep.transport->twist ? " via the T2 |-> -T2 twist" : " via parameter relabelling") +
              "; transport " + (rep.transport->verified ? "verified" : "FAILED") + ".\n\n";
    }
    md += "| chi | chi(X1) | chi(X2) | P(chi) | factors (dim, calibrated o/x, label) | certified |\n";
    md += "|---|---|---|---|---|---|\n";
    for (const RowReport& row : rep.rows) {
        md += "| " + row.name + " | " + row.chi.x1().to_string() + " | " + row.chi.x2().to_string() +
              " | " + join(row.p_chi, ", ") + " | " + factors_cell(row.report) + " | " +
              (row.report.certified ? "yes" : "NO") + " |\n";
    }
    md += "\nAll rows certified: " + std::string(rep.all_certified ? "yes" : "NO") + "\n";
    return md;
}

inline Json checks_json(const std::vector<CheckLine>& checks) {
    Json arr = Json::array();
    for (const CheckLine& c : checks) {
        Json j{{"check", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(j);
    }
    return arr;
}

inline Json verify_json(const VerifyReport& rep) {
    return Json{{"command", "verify-catalog"},
                {"regime", regime_name(rep.regime)},
                {"params", params_json(rep.params)},
                {"checks", checks_json(rep.checks)},
                {"ok", rep.ok}};
}

inline std::string verify_markdown(const VerifyReport& rep) {
    std::string md = "# Catalog verification: regime " + std::string(regime_name(rep.regime)) + "\n\n";
    md += "Parameters: p = " + rep.params.p.to_string() + ", q = " + rep.params.q.to_string() + "\n\n";
    for (const CheckLine& c : rep.checks) {
        md += std::string(c.pass ? "- [pass] " : "- [FAIL] ") + c.name;
        if (!c.detail.empty()) md += " (" + c.detail + ")";
        md += "\n";
    }
    md += "\nAll checks passed: " + std::string(rep.ok ? "yes" : "NO") + "\n";
    return md;
}

inline Json ram_json(const RamReport& rep) {
    Json rows = Json::array();
    for (const RowReport& row : rep.rows) rows.push_back(row_json(row));
    return Json{{"command", "ram-correction"},
                {"params", params_json(rep.params)},
                {"rows", rows},
                {"checks", checks_json(rep.checks)},
                {"ok", rep.ok}};
}

inline std::string ram_markdown(const RamReport& rep) {
    std::string md = "# Equal-parameter correction report\n\n";
    md += "Parameters: p = " + rep.params.p.to_string() + ", q = " + rep.params.q.to_string() + "\n\n";
    md += "| chi | factors (dim, calibrated o/x, label) | certified |\n|---|---|---|\n";
    for (const RowReport& row : rep.rows)
        md += "| " + row.name + " | " + factors_cell(row.report) + " | " +
              (row.report.certified ? "yes" : "NO") + " |\n";
    md += "\n";
    for (const CheckLine& c : rep.checks) {
        md += std::string(c.pass ? "- [pass] " : "- [FAIL] ") + c.name;
        if (!c.detail.empty()) md += " (" + c.detail + ")";
        md += "\n";
    }
    md += "\nAll checks passed: " + std::string(rep.ok ? "yes" : "NO") + "\n";
    return md;
}

inline Json weights_json(const WeightsReport& rep) {
    Json weights = Json::array();
    for (const WeightEntry& e : rep.decomposition.entries)
        weights.push_back(Json{{"x1", e.weight.x1().to_string()},
                               {"x2", e.weight.x2().to_string()},
                               {"eig_dim", e.eig_dim},
                               {"gen_dim", e.gen_dim}});
    return Json{{"command", "weights"},
                {"character",
                 Json{{"name", rep.chi_name}, {"x1", rep.chi.x1().to_string()},
                      {"x2", rep.chi.x2().to_string()}}},
                {"params", params_json(rep.chi.params())},
                {"P_chi", rep.p_chi},
                {"weights", weights},
                {"calibrated", rep.calibrated}};
}

inline std::string weights_markdown(const WeightsReport& rep) {
    std::string md = "# Weight decomposition of M(" + rep.chi_name + ")\n\n";
    md += "chi = (" + rep.chi.x1().to_string() + ", " + rep.chi.x2().to_string() + "), P(chi) = {" +
          join(rep.p_chi, ", ") + "}\n\n";
    md += "| chi'(X1) | chi'(X2) | eig dim | gen dim |\n|---|---|---|---|\n";
    for (const WeightEntry& e : rep.decomposition.entries)
        md += "| " + e.weight.x1().to_string() + " | " + e.weight.x2().to_string() + " | " +
              std::to_string(e.eig_dim) + " | " + std::to_string(e.gen_dim) + " |\n";
    md += "\nCalibrated: " + std::string(rep.calibrated ? "yes" : "no") + "\n";
    return md;
}

inline Json module_json(const HModule& m) {
    return Json{{"label", m.label()},       {"dim", m.dim()},
                {"params", params_json(m.params())}, {"T1", m.t1().to_string()},
                {"T2", m.t2().to_string()}, {"X1", m.x1().to_string()},
                {"X2", m.x2().to_string()}};
}

inline Json dump_catalog_json(const RunConfig& config) {
    Parameters params = resolve_params(config);
    std::unique_ptr<RunContext> ctx = make_context(params, config.v, config.u);
    Json entries = Json::array();
    for (const std::string& label : ctx->catalog.module_labels())
        entries.push_back(module_json(ctx->catalog.build_module(label)));
    return Json{{"command", "dump-catalog"},
                {"regime", regime_name(ctx->catalog.regime())},
                {"params", params_json(params)},
                {"v", config.v.to_string()},
                {"u", config.u.to_string()},
                {"entries", entries}};
}

inline void write_report(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
        if (content.empty() || content.back() != '\n') std::fputc('\n', stdout);
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output path " + out_path);
    file << content;
    if (content.empty() || content.back() != '\n') file << '\n';
}

}  // namespace b2hecke

#endif  // B2HECKE_CLASSIFY_HPP
