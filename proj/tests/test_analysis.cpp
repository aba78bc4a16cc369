#include <b2hecke/analysis.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace b2hecke;

namespace {

Parameters generic_params() { return Parameters(GaussianRational(5), GaussianRational(3)); }

GaussianRational gr(long long n) { return GaussianRational(n); }

HModule ind_rho1_d5(const Parameters& pr) {
    return induce(OneDimRep(2, gr(-1), pr.p, pr.p, pr), "Ind(rho_1^d5)");
}

HModule ind_rho2_d5(const Parameters& pr) {
    return induce(OneDimRep(2, gr(-1), pr.p.inv(), -pr.p.inv(), pr), "Ind(rho_2^d5)");
}

HModule direct_sum(const HModule& a, const HModule& b) {
    size_t n = a.dim() + b.dim();
    auto block = [&](const Matrix& top, const Matrix& bottom) {
        Matrix m(n, n);
        for (size_t i = 0; i < a.dim(); ++i)
            for (size_t j = 0; j < a.dim(); ++j) m.at(i, j) = top.at(i, j);
        for (size_t i = 0; i < b.dim(); ++i)
            for (size_t j = 0; j < b.dim(); ++j) m.at(a.dim() + i, a.dim() + j) = bottom.at(i, j);
        return m;
    };
    return HModule(a.label() + "+" + b.label(), a.params(), block(a.t1(), b.t1()),
                   block(a.t2(), b.t2()), block(a.x1(), b.x1()), block(a.x2(), b.x2()), a.seed());
}

}  // namespace

TEST_CASE("kato criterion on table characters", "[analysis]") {
    Parameters pr = generic_params();
    KatoResult ka = kato(Character(pr.q * pr.q * pr.p, pr.p, pr));
    CHECK(ka.p_chi == std::vector<std::string>{"alpha1", "alpha2"});
    CHECK_FALSE(ka.irreducible);

    KatoResult kc = kato(Character(-pr.p.inv(), pr.p, pr));
    CHECK(kc.p_chi == std::vector<std::string>{"alpha2", "2alpha1+alpha2"});

    KatoResult kg = kato(Character(gr(2), gr(7), pr));
    CHECK(kg.p_chi.empty());
    CHECK(kg.irreducible);
}

TEST_CASE("regime validation", "[analysis]") {
    CHECK(validate_regime(generic_params(), RegimeKind::generic).accepted());
    CHECK(validate_regime(Parameters(gr(9), gr(3)), RegimeKind::p_eq_q2).accepted());
    CHECK(validate_regime(Parameters(gr(3), gr(3)), RegimeKind::p_eq_q).accepted());
    CHECK(validate_regime(Parameters(gr(3) * GaussianRational::i(), gr(3)),
                          RegimeKind::p2_eq_neg_q2)
              .accepted());

    Regime rejected = validate_regime(Parameters(gr(3), gr(3)), RegimeKind::generic);
    CHECK_FALSE(rejected.accepted());
    bool mentions_p_eq_q = false;
    for (const auto& v : rejected.violations)
        mentions_p_eq_q = mentions_p_eq_q || v.find("p^1 q^-1") != std::string::npos;
    CHECK(mentions_p_eq_q);

    CHECK_FALSE(validate_regime(generic_params(), RegimeKind::p_eq_q).accepted());
    CHECK(validate_regime(Parameters(gr(-3), gr(3)), RegimeKind::p_eq_neg_q).accepted());
    CHECK(validate_regime(Parameters(GaussianRational::fraction(1, 3), gr(3)),
                          RegimeKind::p_eq_inv_q)
              .accepted());
}

TEST_CASE("burnside irreducibility", "[analysis]") {
    Parameters pr = generic_params();
    HModule one = one_dim_module("onedim", pr, pr.q * pr.q * pr.p, pr.p, pr.q, pr.p);
    BurnsideResult b1 = burnside_irreducible(one);
    CHECK(b1.irreducible);
    CHECK(b1.env_dim == 1);

    BurnsideResult b4 = burnside_irreducible(ind_rho1_d5(pr));
    CHECK(b4.irreducible);
    CHECK(b4.env_dim == 16);

    HModule ma = principal_series(Character(pr.q * pr.q * pr.p, pr.p, pr));
    BurnsideResult b8 = burnside_irreducible(ma);
    CHECK_FALSE(b8.irreducible);
    CHECK(b8.env_dim < 64);

    HModule mg = principal_series(Character(gr(2), gr(7), pr));
    CHECK(burnside_irreducible(mg).irreducible);
}

TEST_CASE("burnside dimension is invariant under conjugation and twist", "[analysis]") {
    Parameters pr = generic_params();
    HModule ind = ind_rho1_d5(pr);
    size_t env = burnside_irreducible(ind).env_dim;
    CHECK(burnside_irreducible(twist_t2(ind)).env_dim == env);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-3, 3);
    Matrix g(4, 4);
    do {
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) g.at(i, j) = gr(entry(rng));
    } while (g.rank() < 4);
    CHECK(burnside_irreducible(conjugate_module(ind, g)).env_dim == env);
}

TEST_CASE("hom spaces", "[analysis]") {
    Parameters pr = generic_params();
    Character chi_d5(gr(-1), pr.p, pr);
    HModule m = principal_series(chi_d5);
    HModule ind1 = ind_rho1_d5(pr);
    HModule ind2 = ind_rho2_d5(pr);

    bool surjective = false;
    for (const Matrix& f : hom_space(m, ind1)) surjective = surjective || f.rank() == 4;
    CHECK(surjective);
    bool injective = false;
    for (const Matrix& f : hom_space(ind2, m)) injective = injective || f.rank() == 4;
    CHECK(injective);

    // Schur: endomorphisms of an irreducible are scalars
    CHECK(hom_space(ind1, ind1).size() == 1);
    // disjoint weights force zero
    CHECK(hom_space(ind1, ind2).empty());
    CHECK_THROWS_AS(hom_space(ind1, ind_rho1_d5(Parameters(gr(7), gr(3)))), std::invalid_argument);
}

TEST_CASE("canonical word set and trace vectors", "[analysis]") {
    Parameters pr = generic_params();
    WordSet ws = WordSet::build(pr);
    CHECK(ws.size() > 100);
    CHECK(ws.word(0) == "1");
    CHECK(ws.word(1) == "T1");

    Character chi(gr(2), gr(7), pr);
    HModule m = principal_series(chi);
    std::vector<GaussianRational> tv = ws.trace_vector(m);
    REQUIRE(tv.size() == ws.size());
    CHECK(tv[0] == gr(8));  // trace of the empty word

    // same composition factors under the W-action
    for (WeylElem w : WeylElem::all())
        CHECK(ws.trace_vector(principal_series(chi.acted_by(w))) == tv);

    // additivity across a known exact sequence
    Character chi_d5(gr(-1), pr.p, pr);
    std::vector<GaussianRational> sum = ws.trace_vector(ind_rho1_d5(pr));
    std::vector<GaussianRational> t2v = ws.trace_vector(ind_rho2_d5(pr));
    for (size_t k = 0; k < sum.size(); ++k) sum[k] = sum[k] + t2v[k];
    CHECK(ws.trace_vector(principal_series(chi_d5)) == sum);
}

TEST_CASE("kato matches burnside on random characters", "[analysis]") {
    Parameters pr = generic_params();
    std::mt19937 rng(20240811);
    const std::vector<GaussianRational> pool = {
        gr(2),  gr(7),  gr(-3), GaussianRational::fraction(1, 2), GaussianRational::fraction(4, 3),
        gr(10), gr(-2), 2 * GaussianRational::i(), gr(1) + GaussianRational::i()};
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> mode(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        GaussianRational x2 = pool[pick(rng)];
        GaussianRational x1 = pool[pick(rng)];
        switch (mode(rng)) {
            case 1: x1 = pr.q * pr.q * x2; break;           // alpha1 in P
            case 2: x2 = pr.p; break;                       // alpha2 in P
            case 3: x1 = pr.q * pr.q * x2.inv(); break;     // alpha1+alpha2 in P
            case 4: x1 = (trial % 2) ? pr.p : -pr.p; break; // 2alpha1+alpha2 in P
            default: break;
        }
        Character chi(x1, x2, pr);
        CHECK(burnside_irreducible(principal_series(chi)).irreducible == kato(chi).irreducible);
    }
}

TEST_CASE("invariant subspaces, restriction, quotient", "[analysis]") {
    Parameters pr = generic_params();
    Character chi_d5(gr(-1), pr.p, pr);
    HModule m = principal_series(chi_d5);
    auto inv = find_proper_invariant_subspace(m);
    REQUIRE(inv.has_value());
    CHECK(inv->size() == 4);
    HModule sub = restrict_module(m, *inv, "sub");
    HModule quo = quotient_module(m, *inv, "quo");
    CHECK(sub.dim() == 4);
    CHECK(quo.dim() == 4);
    CHECK(burnside_irreducible(sub).irreducible);
    CHECK(burnside_irreducible(quo).irreducible);

    HModule irr = ind_rho1_d5(pr);
    CHECK_FALSE(find_proper_invariant_subspace(irr).has_value());
}

TEST_CASE("composition factors of principal series", "[analysis]") {
    Parameters pr = generic_params();
    WordSet ws = WordSet::build(pr);

    FactorReport rep = composition_factors(principal_series(Character(gr(-1), pr.p, pr)), ws);
    CHECK(rep.dims() == std::vector<size_t>{4, 4});
    CHECK(rep.certified);
    CHECK_FALSE(rep.undecided);
    for (const Factor& f : rep.factors) CHECK_FALSE(f.calibrated);

    FactorReport irr = composition_factors(principal_series(Character(gr(2), gr(7), pr)), ws);
    CHECK(irr.dims() == std::vector<size_t>{8});
    CHECK(irr.certified);
    CHECK(irr.factors[0].label == "unlisted");
}

TEST_CASE("pencil search resolves mixed eigenbases", "[analysis]") {
    // Two non-isomorphic members of the one-parameter family with v' = 1/(p^2 v)
    // share their full weight multiset; after a generic change of basis every
    // canonical eigenvector of the direct sum spins to the whole module, so
    // only the pencil can find the two summands.
    Parameters pr = generic_params();
    GaussianRational v(2);
    GaussianRational vprime = (pr.p * pr.p * v).inv();
    HModule a = induce(OneDimRep(2, pr.p * v, pr.p, pr.p, pr), "f(v)");
    HModule b = induce(OneDimRep(2, pr.p * vprime, pr.p, pr.p, pr), "f(v')");
    CHECK(IdentifySet::weight_multiset_string(a) == IdentifySet::weight_multiset_string(b));

    HModule sum = direct_sum(a, b);
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> entry(-4, 4);
    Matrix g(8, 8);
    do {
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 8; ++j) g.at(i, j) = gr(entry(rng));
    } while (g.rank() < 8);
    HModule mixed = conjugate_module(sum, g);

    // every eigenspace is two-dimensional in the mixed module
    for (const WeightEntry& e : weight_decomposition(mixed).entries) CHECK(e.eig_dim == 2);

    WordSet ws = WordSet::build(pr);
    FactorReport rep = composition_factors(mixed, ws);
    CHECK(rep.dims() == std::vector<size_t>{4, 4});
    CHECK(rep.certified);
    CHECK_FALSE(rep.undecided);
}

TEST_CASE("identify set labels factors and reports unknowns", "[analysis]") {
    Parameters pr = generic_params();
    WordSet ws = WordSet::build(pr);
    std::vector<IdentifySet::Entry> entries;
    entries.push_back({"d5-sub", ind_rho1_d5(pr)});
    IdentifySet ids(std::move(entries), &ws);
    CHECK(ids.identify(ind_rho1_d5(pr)) == "d5-sub");
    CHECK(ids.identify(ind_rho2_d5(pr)) == "unlisted");
}
