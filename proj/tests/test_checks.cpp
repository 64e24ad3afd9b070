#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bihom/constructions.hpp"
#include "bihom/io.hpp"
#include "bihom/oracle.hpp"
#include "support/corpus.hpp"

using namespace bihom;
using namespace bihom::testsupport;

namespace {

const FieldDescriptor QQ = FieldDescriptor::rationals();
const FieldDescriptor GF2 = FieldDescriptor::gf(2);
const FieldDescriptor GF3 = FieldDescriptor::gf(3);

AlgebraPresentation ns_with_ops(const FieldDescriptor& f, int dim, BilinearOp prec, BilinearOp succ,
                                BilinearOp vee) {
    AlgebraPresentation p;
    p.dim = dim;
    p.field = f;
    p.ops.emplace("prec", std::move(prec));
    p.ops.emplace("succ", std::move(succ));
    p.ops.emplace("vee", std::move(vee));
    return p;
}

// Independent brute-force evaluator of NS1..NS4 by nested products, used as
// the oracle for the randomized check_ns test.
bool brute_force_ns(const AlgebraPresentation& p) {
    const BilinearOp& prec = p.op("prec");
    const BilinearOp& succ = p.op("succ");
    const BilinearOp& vee = p.op("vee");
    const int n = p.dim;
    auto star = [&](const Vector& x, const Vector& y) {
        return apply_bilinear(prec, x, y) + apply_bilinear(succ, x, y) + apply_bilinear(vee, x, y);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vector x = Vector::basis(p.field, n, i), y = Vector::basis(p.field, n, j),
                       z = Vector::basis(p.field, n, k);
                if (apply_bilinear(prec, apply_bilinear(prec, x, y), z) !=
                    apply_bilinear(prec, x, star(y, z)))
                    return false;
                if (apply_bilinear(prec, apply_bilinear(succ, x, y), z) !=
                    apply_bilinear(succ, x, apply_bilinear(prec, y, z)))
                    return false;
                if (apply_bilinear(succ, star(x, y), z) !=
                    apply_bilinear(succ, x, apply_bilinear(succ, y, z)))
                    return false;
                Vector lhs = apply_bilinear(prec, apply_bilinear(vee, x, y), z) +
                             apply_bilinear(vee, star(x, y), z);
                Vector rhs = apply_bilinear(succ, x, apply_bilinear(vee, y, z)) +
                             apply_bilinear(vee, x, star(y, z));
                if (lhs != rhs) return false;
            }
    return true;
}

BilinearOp random_op(SplitMix64& rng, const FieldDescriptor& f, int n) {
    BilinearOp op(f, n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                op.at(i, j, k) = Scalar::of_int(static_cast<long>(rng.next_below(f.modulus())), f);
    return op;
}

}  // namespace

TEST_CASE("check_bihom_associative: zero product with commuting maps") {
    AlgebraPresentation p = zero_algebra(GF3, 2);
    p.maps.insert_or_assign("alpha", diag(GF3, {1, 2}));
    p.maps.insert_or_assign("beta", diag(GF3, {2, 2}));
    CHECK(check_bihom_associative(p).pass);
}

TEST_CASE("check_bihom_associative: dual numbers with identity maps") {
    CHECK(check_bihom_associative(dual_numbers(QQ)).pass);
}

TEST_CASE("check_bihom_associative: c_01^0 = 1 fails eqasso at (0,1,1)") {
    // Direct expansion: (e0 e1) e1 = e0 e1 = e0 while e0 (e1 e1) = 0, so this
    // op is not associative; the first failing triple lexicographically is
    // (0,1,1).
    AlgebraPresentation p;
    p.dim = 2;
    p.field = QQ;
    BilinearOp mu(QQ, 2, 2, 2);
    mu.at(0, 1, 0) = Scalar::one(QQ);
    p.ops.emplace("mu", mu);
    p.maps.emplace("alpha", LinearMap::identity(QQ, 2));
    p.maps.emplace("beta", LinearMap::identity(QQ, 2));

    CheckReport r = check_bihom_associative(p);
    CHECK_FALSE(r.pass);
    CHECK(r.failed_axiom == "eqasso");
    CHECK(r.witness == std::vector<int>{0, 1, 1});

    // flipping alpha to the transposition breaks multiplicativity first
    p.maps.insert_or_assign("alpha", swap2(QQ));
    CheckReport r2 = check_bihom_associative(p);
    CHECK_FALSE(r2.pass);
    CHECK(r2.failed_axiom == "eqalfabeta(alpha)");
    CHECK(r2.witness.size() == 2);
}

TEST_CASE("check_ns: all ops zero") {
    CHECK(check_ns(ns_with_ops(QQ, 2, BilinearOp::zero(QQ, 2), BilinearOp::zero(QQ, 2),
                               BilinearOp::zero(QQ, 2)))
              .pass);
}

TEST_CASE("check_ns: prec = associative mu, others zero") {
    for (const auto& base : {ground_field(QQ), dual_numbers(QQ), truncated_poly3(GF3)}) {
        AlgebraPresentation p = ns_with_ops(base.field, base.dim, base.op("mu"),
                                            BilinearOp::zero(base.field, base.dim),
                                            BilinearOp::zero(base.field, base.dim));
        CHECK(check_ns(p).pass);
    }
}

TEST_CASE("check_ns agrees with the brute-force evaluator on random GF(2) tensors") {
    SplitMix64 rng(2024);
    int passes = 0, fails = 0;
    auto run = [&](const AlgebraPresentation& p) {
        const bool expected = brute_force_ns(p);
        CHECK(check_ns(p).pass == expected);
        (expected ? passes : fails) += 1;
    };
    for (int trial = 0; trial < 300; ++trial)
        run(ns_with_ops(GF2, 2, random_op(rng, GF2, 2), random_op(rng, GF2, 2),
                        random_op(rng, GF2, 2)));
    for (const auto& p : corpus().classical_ns)
        if (p.dim == 2 && p.field == GF2) run(p);
    CHECK(passes > 0);  // the sweep must actually exercise both outcomes
    CHECK(fails > 0);
}

TEST_CASE("check_bihom_ns: zero ops with commuting maps") {
    AlgebraPresentation p = ns_with_ops(GF3, 2, BilinearOp::zero(GF3, 2), BilinearOp::zero(GF3, 2),
                                        BilinearOp::zero(GF3, 2));
    p.maps.emplace("alpha", diag(GF3, {2, 1}));
    p.maps.emplace("beta", diag(GF3, {1, 2}));
    CHECK(check_bihom_ns(p).pass);

    p.maps.insert_or_assign("alpha", swap2(GF3));
    p.maps.insert_or_assign("beta", diag(GF3, {1, 2}));
    CheckReport r = check_bihom_ns(p);
    CHECK_FALSE(r.pass);
    CHECK(r.failed_axiom == "BiHomNS0");
}

TEST_CASE("check_bihom_ns: Yau twists of classical instances pass") {
    int verified = 0;
    for (const auto& t : corpus().twistable) {
        if (verified >= 10) break;
        ConstructionResult r = yau_twist_ns(t.ns, t.a, t.b);
        CHECK(r.verification.pass);
        CHECK(check_bihom_ns(r.output).pass);
        ++verified;
    }
    CHECK(verified > 0);
}

TEST_CASE("check_bihom_ns: relabeled tridendriform instances pass") {
    for (const auto& p : corpus().tridendriform) {
        AlgebraPresentation q;
        q.dim = p.dim;
        q.field = p.field;
        q.ops.emplace("prec", p.op("prec"));
        q.ops.emplace("succ", p.op("succ"));
        q.ops.emplace("vee", p.op("dot"));
        q.maps = p.maps;
        CHECK(check_bihom_ns(q).pass);
    }
}

TEST_CASE("check_bihom_tridendriform basics") {
    AlgebraPresentation zero;
    zero.dim = 2;
    zero.field = QQ;
    zero.ops.emplace("prec", BilinearOp::zero(QQ, 2));
    zero.ops.emplace("succ", BilinearOp::zero(QQ, 2));
    zero.ops.emplace("dot", BilinearOp::zero(QQ, 2));
    zero.maps.emplace("alpha", LinearMap::identity(QQ, 2));
    zero.maps.emplace("beta", LinearMap::identity(QQ, 2));
    CHECK(check_bihom_tridendriform(zero).pass);

    AlgebraPresentation dot_only = zero;
    dot_only.ops.insert_or_assign("dot", dual_numbers(QQ).op("mu"));
    CHECK(check_bihom_tridendriform(dot_only).pass);

    BilinearOp nonassoc(QQ, 2, 2, 2);
    nonassoc.at(0, 1, 0) = Scalar::one(QQ);  // (e0 e1) e1 = e0 but e0 (e1 e1) = 0
    dot_only.ops.insert_or_assign("dot", nonassoc);
    CheckReport r = check_bihom_tridendriform(dot_only);
    CHECK_FALSE(r.pass);
    CHECK(r.failed_axiom == "BiHomtridend14");
    CHECK(r.witness == std::vector<int>{0, 1, 1});
}

TEST_CASE("check_bimodule: zero actions and the regular bimodule") {
    for (const auto& p : {dual_numbers(QQ), diagonal2(GF2),
                          twisted_associative(diagonal2(GF3), swap2(GF3), swap2(GF3))}) {
        BimodulePresentation zero_actions(p, 2);
        CHECK(check_bimodule(zero_actions).pass);
        CHECK(check_bimodule(regular_bimodule(p)).pass);
    }
}

TEST_CASE("check_bimodule: perturbed regular action fails with a witness") {
    AlgebraPresentation p = dual_numbers(QQ);
    BimodulePresentation b = regular_bimodule(p);
    b.left_action.at(1, 1, 1) += Scalar::one(QQ);
    CheckReport r = check_bimodule(b);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.witness.empty());
    REQUIRE(r.residual.has_value());
    CHECK_FALSE(r.residual->is_zero());
}

TEST_CASE("check_bimodule: prerequisite failure names the broken algebra axiom") {
    AlgebraPresentation bad;
    bad.dim = 2;
    bad.field = QQ;
    BilinearOp mu(QQ, 2, 2, 2);
    mu.at(0, 1, 0) = Scalar::one(QQ);  // not associative
    bad.ops.emplace("mu", mu);
    bad.maps.emplace("alpha", LinearMap::identity(QQ, 2));
    bad.maps.emplace("beta", LinearMap::identity(QQ, 2));
    BimodulePresentation b(bad, 1);
    CheckReport r = check_bimodule(b);
    CHECK_FALSE(r.pass);
    CHECK(r.is_prerequisite_failure());
    CHECK(r.failed_axiom == "prerequisite:eqasso");
}

TEST_CASE("check_bimodule_algebra: bullet cases") {
    AlgebraPresentation p = dual_numbers(GF3);
    BimodulePresentation zero_actions(p, 2);
    zero_actions.bullet = BilinearOp::zero(GF3, 2);
    CHECK(check_bimodule_algebra(zero_actions).pass);

    BimodulePresentation reg = regular_bimodule(p);
    reg.bullet = p.op("mu");
    CHECK(check_bimodule_algebra(reg).pass);

    // non-associative bullet over zero actions fails on bullet-eqasso
    BimodulePresentation bad(p, 2);
    BilinearOp nonassoc(GF3, 2, 2, 2);
    nonassoc.at(0, 1, 0) = Scalar::one(GF3);
    bad.bullet = nonassoc;
    CheckReport r = check_bimodule_algebra(bad);
    CHECK_FALSE(r.pass);
    CHECK(r.failed_axiom == "bullet-eqasso");

    BimodulePresentation no_bullet(p, 2);
    CHECK_THROWS_AS(check_bimodule_algebra(no_bullet), MissingComponentError);
}

TEST_CASE("check_hochschild_2cocycle: H = 0 and H = -mu") {
    for (const auto& p : corpus().associative) {
        if (p.dim > 2) continue;
        BimodulePresentation reg = regular_bimodule(p);
        CHECK(check_hochschild_2cocycle(reg, BilinearOp(p.field, p.dim, p.dim, p.dim)).pass);
        CHECK(check_hochschild_2cocycle(reg, -p.op("mu")).pass);
    }
}

TEST_CASE("check_hochschild_2cocycle: H = vee from a verified BiHom-NS algebra") {
    int tried = 0;
    for (const auto& p : corpus().bihom_ns) {
        if (tried >= 12) break;
        CocycleFromNs c = cocycle_from_ns(p);
        CHECK(c.report.pass);
        ++tried;
    }
    CHECK(tried > 0);
}

TEST_CASE("check_morphism basics") {
    AlgebraPresentation p = dual_numbers(QQ);
    CHECK(check_morphism(p, p, LinearMap::identity(QQ, 2)).pass);
    CHECK(check_morphism(p, p, LinearMap(QQ, 2, 2)).pass);

    // transposition between dual numbers and the diagonal algebra is not a
    // morphism even though both are 2-dimensional associative algebras
    AlgebraPresentation q = diagonal2(QQ);
    CheckReport r = check_morphism(p, q, swap2(QQ));
    CHECK_FALSE(r.pass);
    CHECK(r.failed_axiom == "morphism-multiplicative(mu)");

    AlgebraPresentation missing = p;
    missing.ops.erase("mu");
    CHECK_THROWS_AS(check_morphism(p, missing, swap2(QQ)), KindMismatchError);
}

TEST_CASE("hierarchy: tridendriform passes bihom_ns after dot -> vee rename") {
    for (const auto& p : corpus().tridendriform) {
        ConstructionResult r = tridend_embed_ns(p);
        CHECK(r.verification.pass);
    }
}

TEST_CASE("degeneration: with identity maps the BiHom checkers agree with the classical ones") {
    SplitMix64 rng(91);
    int ns_hits = 0, trials = 0;
    auto run = [&](const AlgebraPresentation& p) {
        AlgebraPresentation q = with_id_maps(p);
        CHECK(check_ns(p).pass == check_bihom_ns(q).pass);
        ns_hits += check_ns(p).pass;
        ++trials;
    };
    for (int trial = 0; trial < 150; ++trial)
        run(ns_with_ops(GF2, 2, random_op(rng, GF2, 2), random_op(rng, GF2, 2),
                        random_op(rng, GF2, 2)));
    for (const auto& p : corpus().classical_ns)
        if (p.dim <= 2 && trials < 250) run(p);
    CHECK(ns_hits > 0);

    for (int trial = 0; trial < 100; ++trial) {
        AlgebraPresentation p;
        p.dim = 2;
        p.field = GF2;
        p.ops.emplace("mu", random_op(rng, GF2, 2));
        AlgebraPresentation q = with_id_maps(p);
        // plain associativity = eqasso with identity maps
        IdentityContext ctx{.algebra = &q};
        CHECK(check_bihom_associative(q).pass == check_axiom("eqasso", ctx).pass);
    }
}

TEST_CASE("reports are deterministic") {
    AlgebraPresentation p = dual_numbers(QQ);
    BimodulePresentation b = regular_bimodule(p);
    b.right_action.at(0, 1, 0) += Scalar::one(QQ);
    CheckReport r1 = check_bimodule(b);
    CheckReport r2 = check_bimodule(b);
    CHECK(r1.failed_axiom == r2.failed_axiom);
    CHECK(r1.witness == r2.witness);
    CHECK(*r1.residual == *r2.residual);

    ReportDocument d1{std::string(kToolVersion), "x", {{"bimodule", r1}}};
    ReportDocument d2{std::string(kToolVersion), "x", {{"bimodule", r2}}};
    CHECK(serialize(d1) == serialize(d2));
}

TEST_CASE("checker witnesses are nonzero for the oracle too") {
    // whenever a checker fails, the oracle must agree at the reported tuple
    AlgebraPresentation p = dual_numbers(QQ);
    BimodulePresentation b = regular_bimodule(p);
    b.left_action.at(0, 0, 0) += Scalar::one(QQ);
    CheckReport r = check_bimodule(b);
    REQUIRE_FALSE(r.pass);
    IdentityContext ctx{.bimodule = &b};
    Vector residual = oracle_identity_eval(r.failed_axiom, ctx, r.witness);
    CHECK_FALSE(residual.is_zero());
    CHECK(residual == *r.residual);
}
