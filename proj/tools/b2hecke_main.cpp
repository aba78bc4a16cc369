// Command-line driver: classification tables, catalog verification, the
// equal-parameter correction report, catalog dumps, and weight inspection
// for the affine Hecke algebra of type B2 with unequal parameters.

#include <b2hecke/classify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

namespace {

using namespace b2hecke;

struct CliOptions {
    std::string regime = "generic";
    std::string p, q, v, u;
    std::string format = "json";
    std::string out;
    std::string chi;
    std::string corrupt;
};

void add_common(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--regime", opts.regime, "parameter regime")->capture_default_str();
    cmd->add_option("--p", opts.p, "override p (exact value, e.g. 5, 1/3, 3i)");
    cmd->add_option("--q", opts.q, "override q");
    cmd->add_option("--v", opts.v, "family parameter v for chi_f");
    cmd->add_option("--u", opts.u, "family parameter u for chi_g");
    cmd->add_option("--format", opts.format, "json or markdown")->capture_default_str();
    cmd->add_option("--out", opts.out, "output path (default stdout)");
}

RunConfig build_config(const CliOptions& opts) {
    RunConfig config;
    auto kind = regime_from_name(opts.regime);
    if (!kind.has_value()) throw ConfigError("unknown regime " + opts.regime);
    config.regime = *kind;
    try {
        if (!opts.p.empty()) config.p_override = GaussianRational::parse(opts.p);
        if (!opts.q.empty()) config.q_override = GaussianRational::parse(opts.q);
        if (!opts.v.empty()) config.v = GaussianRational::parse(opts.v);
        if (!opts.u.empty()) config.u = GaussianRational::parse(opts.u);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (opts.format == "json")
        config.format = ReportFormat::json;
    else if (opts.format == "markdown")
        config.format = ReportFormat::markdown;
    else
        throw ConfigError("unknown format " + opts.format);
    config.out_path = opts.out;
    return config;
}

void emit(const RunConfig& config, const Json& json, const std::string& markdown) {
    write_report(config.format == ReportFormat::json ? json.dump(2) : markdown, config.out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification engine for the affine Hecke algebra of type B2"};
    app.require_subcommand(1);

    CliOptions opts;
    CLI::App* classify = app.add_subcommand("classify", "composition factors of every table row");
    add_common(classify, opts);
    CLI::App* verify = app.add_subcommand("verify-catalog", "check catalog claims");
    add_common(verify, opts);
    verify->add_option("--corrupt", opts.corrupt,
                       "perturb one entry before checking (negative control)");
    CLI::App* ram = app.add_subcommand("ram-correction", "equal-parameter correction report");
    add_common(ram, opts);
    CLI::App* dump = app.add_subcommand("dump-catalog", "emit every catalog entry as JSON");
    add_common(dump, opts);
    CLI::App* weights = app.add_subcommand("weights", "weight decomposition of M(chi)");
    add_common(weights, opts);
    weights->add_option("--chi", opts.chi, "character name, e.g. chi_a or -chi_d5")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig config = build_config(opts);
        if (classify->parsed()) {
            ClassifyReport rep = run_classify(config);
            emit(config, classify_json(rep), classify_markdown(rep));
            return rep.all_certified ? 0 : 1;
        }
        if (verify->parsed()) {
            VerifyReport rep = run_verify_catalog(config, opts.corrupt);
            emit(config, verify_json(rep), verify_markdown(rep));
            return rep.ok ? 0 : 1;
        }
        if (ram->parsed()) {
            RamReport rep = run_ram_correction(config);
            emit(config, ram_json(rep), ram_markdown(rep));
            return rep.ok ? 0 : 1;
        }
        if (dump->parsed()) {
            Json j = dump_catalog_json(config);
            emit(config, j, j.dump(2));
            return 0;
        }
        if (weights->parsed()) {
            WeightsReport rep = run_weights(config, opts.chi);
            emit(config, weights_json(rep), weights_markdown(rep));
            return 0;
        }
    } catch (const b2hecke::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
