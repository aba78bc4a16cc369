#include <b2hecke/classify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace b2hecke;

namespace {

RunConfig config_for(RegimeKind kind) {
    RunConfig cfg;
    cfg.regime = kind;
    return cfg;
}

std::vector<size_t> row_dims(const ClassifyReport& rep, const std::string& name) {
    for (const RowReport& row : rep.rows)
        if (row.name == name) return row.report.dims();
    return {};
}

}  // namespace

TEST_CASE("generic classification matches the table", "[classify]") {
    ClassifyReport rep = run_classify(config_for(RegimeKind::generic));
    CHECK(rep.rows.size() == 10);
    CHECK(rep.all_certified);
    CHECK(row_dims(rep, "chi_a") == std::vector<size_t>{1, 1, 3, 3});
    CHECK(row_dims(rep, "chi_c") == std::vector<size_t>{2, 2, 2, 2});
    CHECK(row_dims(rep, "chi_d3") == std::vector<size_t>{4, 4});
    CHECK_FALSE(rep.transport.has_value());
}

TEST_CASE("rejected parameter configurations", "[classify]") {
    RunConfig cfg = config_for(RegimeKind::generic);
    cfg.p_override = GaussianRational(3);
    cfg.q_override = GaussianRational(3);
    CHECK_THROWS_AS(run_classify(cfg), ConfigError);

    RunConfig bad_v = config_for(RegimeKind::generic);
    bad_v.v = GaussianRational(9);  // q^2 is excluded
    CHECK_THROWS_AS(run_classify(bad_v), ConfigError);
}

TEST_CASE("transported regimes reduce to their base tables", "[classify]") {
    ClassifyReport neg = run_classify(config_for(RegimeKind::p_eq_neg_q));
    REQUIRE(neg.transport.has_value());
    CHECK(neg.transport->base_kind == RegimeKind::p_eq_q);
    CHECK(neg.transport->twist);
    CHECK(neg.transport->verified);
    CHECK(neg.all_certified);
    CHECK(neg.params.p == GaussianRational(-3));
    CHECK(neg.rows.size() == 8);

    ClassifyReport relabel = run_classify(config_for(RegimeKind::p_eq_neg_inv_q));
    REQUIRE(relabel.transport.has_value());
    CHECK_FALSE(relabel.transport->twist);
    CHECK(relabel.transport->verified);

    ClassifyReport inv2 = run_classify(config_for(RegimeKind::p2_eq_neg_inv_q2));
    REQUIRE(inv2.transport.has_value());
    CHECK(inv2.transport->base_kind == RegimeKind::p2_eq_neg_q2);
    CHECK(inv2.all_certified);
}

TEST_CASE("catalog verification", "[classify]") {
    VerifyReport rep = run_verify_catalog(config_for(RegimeKind::generic));
    CHECK(rep.ok);
    // negative control: corrupting an entry must fail the run
    VerifyReport bad = run_verify_catalog(config_for(RegimeKind::generic), "U_c^1");
    CHECK_FALSE(bad.ok);
}

TEST_CASE("catalog verification in the split regime", "[classify]") {
    VerifyReport rep = run_verify_catalog(config_for(RegimeKind::p2_eq_neg_q2));
    CHECK(rep.ok);
    bool found_split = false;
    for (const CheckLine& c : rep.checks)
        if (c.name == "U_c^3-splits-into-onedims") {
            found_split = true;
            CHECK(c.pass);
        }
    CHECK(found_split);
}

TEST_CASE("ram correction report", "[classify]") {
    RamReport rep = run_ram_correction(config_for(RegimeKind::p_eq_q));
    CHECK(rep.ok);
    CHECK(rep.rows.size() == 7);  // chi_d5 plus six negated characters
    CHECK(rep.rows.front().name == "chi_d5");
    CHECK(rep.rows.front().report.dims() == std::vector<size_t>{4, 4});
    for (const Factor& f : rep.rows.front().report.factors) CHECK_FALSE(f.calibrated);
}

TEST_CASE("weights command", "[classify]") {
    WeightsReport rep = run_weights(config_for(RegimeKind::generic), "chi_a");
    CHECK(rep.p_chi == std::vector<std::string>{"alpha1", "alpha2"});
    CHECK(rep.decomposition.entries.size() == 8);
    CHECK_THROWS_AS(run_weights(config_for(RegimeKind::generic), "chi_zzz"), ConfigError);
}

TEST_CASE("reports are deterministic and well formed", "[classify]") {
    RunConfig cfg = config_for(RegimeKind::p_eq_q);
    ClassifyReport a = run_classify(cfg);
    ClassifyReport b = run_classify(cfg);
    CHECK(classify_json(a).dump(2) == classify_json(b).dump(2));

    std::string md = classify_markdown(a);
    CHECK(md.find("| chi_b |") != std::string::npos);
    CHECK(md.find("All rows certified: yes") != std::string::npos);

    Json dump = dump_catalog_json(config_for(RegimeKind::generic));
    CHECK(dump["entries"].size() > 30);
    // matrices round-trip through the text format
    for (const auto& entry : dump["entries"]) {
        Matrix t1 = Matrix::parse(entry["T1"].get<std::string>());
        CHECK(t1.rows() == entry["dim"].get<size_t>());
        break;
    }
}

TEST_CASE("regime names round trip", "[classify]") {
    for (RegimeKind k : {RegimeKind::generic, RegimeKind::p_eq_q, RegimeKind::p_eq_q2,
                         RegimeKind::p2_eq_neg_q2, RegimeKind::p_eq_neg_q, RegimeKind::p_eq_inv_q,
                         RegimeKind::p_eq_neg_inv_q, RegimeKind::p_eq_neg_q2,
                         RegimeKind::p_eq_inv_q2, RegimeKind::p_eq_neg_inv_q2,
                         RegimeKind::p2_eq_neg_inv_q2})
        CHECK(regime_from_name(regime_name(k)) == k);
    CHECK_FALSE(regime_from_name("bogus").has_value());
}
