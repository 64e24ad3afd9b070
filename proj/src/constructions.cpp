#include "bihom/constructions.hpp"

namespace bihom {

namespace {

void require_pass(const CheckReport& r, const std::string& hypothesis) {
    if (!r.pass)
        throw PrerequisiteFailedError(hypothesis + " (failed " + r.failed_axiom + ")");
}

Provenance prov(std::string name, std::initializer_list<const PresentationDocument*> docs) {
    Provenance p;
    p.construction = std::move(name);
    for (const auto* d : docs) p.inputs.push_back(digest(*d));
    return p;
}

Provenance prov_of(std::string name, const AlgebraPresentation& p) {
    PresentationDocument d = wrap(p);
    return prov(std::move(name), {&d});
}

// Left/right multiplication matrices of a fixed vector.
LinearMap left_mult_matrix(const BilinearOp& mu, const Vector& v) {
    LinearMap m(mu.field(), mu.dim_out(), mu.dim_b());
    for (int j = 0; j < mu.dim_b(); ++j) {
        Vector img = apply_bilinear(mu, v, Vector::basis(mu.field(), mu.dim_b(), j));
        for (int k = 0; k < mu.dim_out(); ++k) m.at(k, j) = img[k];
    }
    return m;
}

LinearMap right_mult_matrix(const BilinearOp& mu, const Vector& v) {
    LinearMap m(mu.field(), mu.dim_out(), mu.dim_a());
    for (int j = 0; j < mu.dim_a(); ++j) {
        Vector img = apply_bilinear(mu, Vector::basis(mu.field(), mu.dim_a(), j), v);
        for (int k = 0; k < mu.dim_out(); ++k) m.at(k, j) = img[k];
    }
    return m;
}

}  // namespace

BilinearOp star_sum(const AlgebraPresentation& p) {
    return p.op("prec") + p.op("succ") + p.op("vee");
}

NsCharacterization ns_to_bhas_with_bimodule(const AlgebraPresentation& p) {
    require_pass(check_bihom_ns(p), "input is not a BiHom-NS-algebra");

    AlgebraPresentation bhas;
    bhas.dim = p.dim;
    bhas.field = p.field;
    bhas.ops.emplace("mu", star_sum(p));
    bhas.maps.emplace("alpha", p.map("alpha"));
    bhas.maps.emplace("beta", p.map("beta"));
    bhas.kind_claim = "bihom_associative";

    BimodulePresentation b(bhas, p.dim);
    b.left_action = p.op("succ");
    b.right_action = p.op("prec");
    b.alpha_m = p.map("alpha");
    b.beta_m = p.map("beta");

    return NsCharacterization{bhas, b, check_bihom_associative(bhas), check_bimodule(b)};
}

ConstructionResult ns_from_bhas_bimodule(const AlgebraPresentation& bhas, const BilinearOp& succ_action,
                                         const BilinearOp& prec_action) {
    const BilinearOp& star = bhas.op("mu");
    AlgebraPresentation out;
    out.dim = bhas.dim;
    out.field = bhas.field;
    out.ops.emplace("prec", prec_action);
    out.ops.emplace("succ", succ_action);
    out.ops.emplace("vee", star - prec_action - succ_action);
    out.maps.emplace("alpha", bhas.map("alpha"));
    out.maps.emplace("beta", bhas.map("beta"));
    out.kind_claim = "bihom_ns";

    PresentationDocument d = wrap(bhas);
    return ConstructionResult{out, check_bihom_ns(out), prov("ns_from_bhas_bimodule", {&d})};
}

ConstructionResult yau_twist_ns(const AlgebraPresentation& p, const LinearMap& a, const LinearMap& b) {
    require_pass(check_ns(p), "input is not an NS-algebra");
    for (const char* opname : {"prec", "succ", "vee"}) {
        require_pass(is_multiplicative(a, p.op(opname)),
                     std::string("alpha is not an NS-endomorphism for op ") + opname);
        require_pass(is_multiplicative(b, p.op(opname)),
                     std::string("beta is not an NS-endomorphism for op ") + opname);
    }
    if (!maps_commute(a, b)) throw PrerequisiteFailedError("twist endomorphisms do not commute");

    AlgebraPresentation out;
    out.dim = p.dim;
    out.field = p.field;
    out.ops.emplace("prec", precompose(p.op("prec"), &a, &b));
    out.ops.emplace("succ", precompose(p.op("succ"), &a, &b));
    out.ops.emplace("vee", precompose(p.op("vee"), &a, &b));
    out.maps.emplace("alpha", a);
    out.maps.emplace("beta", b);
    out.kind_claim = "bihom_ns";

    return ConstructionResult{out, check_bihom_ns(out), prov_of("yau_twist", p)};
}

CheckReport yau_twist_morphism_transport(const LinearMap& f, const AlgebraPresentation& src,
                                         const LinearMap& a, const LinearMap& b,
                                         const AlgebraPresentation& dst, const LinearMap& a2,
                                         const LinearMap& b2) {
    require_pass(check_morphism(src, dst, f), "f is not an NS-morphism");
    if (compose(f, a) != compose(a2, f)) throw PrerequisiteFailedError("f does not intertwine alpha");
    if (compose(f, b) != compose(b2, f)) throw PrerequisiteFailedError("f does not intertwine beta");

    ConstructionResult tw_src = yau_twist_ns(src, a, b);
    ConstructionResult tw_dst = yau_twist_ns(dst, a2, b2);
    require_pass(tw_src.verification, "source twist is not BiHom-NS");
    require_pass(tw_dst.verification, "destination twist is not BiHom-NS");
    return check_morphism(tw_src.output, tw_dst.output, f);
}

ConstructionResult split_null_extension(const BimodulePresentation& b) {
    b.validate();
    const int na = b.algebra.dim;
    const int nm = b.dim_m;
    const int n = na + nm;
    const FieldDescriptor& f = b.algebra.field;
    const BilinearOp& mu = b.algebra.op("mu");

    BilinearOp product(f, n, n, n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < na; ++k) product.at(i, j, k) = mu.at(i, j, k);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nm; ++j)
            for (int k = 0; k < nm; ++k) product.at(i, na + j, na + k) = b.left_action.at(i, j, k);
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nm; ++k) product.at(na + i, j, na + k) = b.right_action.at(i, j, k);
    if (b.bullet)
        for (int i = 0; i < nm; ++i)
            for (int j = 0; j < nm; ++j)
                for (int k = 0; k < nm; ++k) product.at(na + i, na + j, na + k) = b.bullet->at(i, j, k);

    auto block_diag = [&](const LinearMap& top, const LinearMap& bottom) {
        LinearMap m(f, n, n);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) m.at(i, j) = top.at(i, j);
        for (int i = 0; i < nm; ++i)
            for (int j = 0; j < nm; ++j) m.at(na + i, na + j) = bottom.at(i, j);
        return m;
    };

    AlgebraPresentation out;
    out.dim = n;
    out.field = f;
    out.ops.emplace("mu", std::move(product));
    out.maps.emplace("alpha", block_diag(b.algebra.map("alpha"), b.alpha_m));
    out.maps.emplace("beta", block_diag(b.algebra.map("beta"), b.beta_m));
    out.kind_claim = "bihom_associative";

    PresentationDocument d = wrap(b);
    return ConstructionResult{out, check_bihom_associative(out), prov("split_null_extension", {&d})};
}

ConstructionResult tridend_embed_ns(const AlgebraPresentation& p) {
    require_pass(check_bihom_tridendriform(p), "input is not a BiHom-tridendriform algebra");

    AlgebraPresentation out;
    out.dim = p.dim;
    out.field = p.field;
    out.ops.emplace("prec", p.op("prec"));
    out.ops.emplace("succ", p.op("succ"));
    out.ops.emplace("vee", p.op("dot"));
    out.maps.emplace("alpha", p.map("alpha"));
    out.maps.emplace("beta", p.map("beta"));
    out.kind_claim = "bihom_ns";

    return ConstructionResult{out, check_bihom_ns(out), prov_of("tridend_embed_ns", p)};
}

ConstructionResult ns_from_twisted_rb(const TwistedRBInstance& t) {
    require_pass(check_twisted_rb(t), "input is not a twisted Rota-Baxter operator");

    AlgebraPresentation out;
    out.dim = t.bimodule.dim_m;
    out.field = t.bimodule.algebra.field;
    out.ops.emplace("prec", precompose(t.bimodule.right_action, nullptr, &t.pi));
    out.ops.emplace("succ", precompose(t.bimodule.left_action, &t.pi, nullptr));
    out.ops.emplace("vee", precompose(t.cocycle, &t.pi, &t.pi));
    out.maps.emplace("alpha", t.bimodule.alpha_m);
    out.maps.emplace("beta", t.bimodule.beta_m);
    out.kind_claim = "bihom_ns";

    PresentationDocument d = wrap(t);
    return ConstructionResult{out, check_bihom_ns(out), prov("ns_from_twisted_rb", {&d})};
}

CocycleFromNs cocycle_from_ns(const AlgebraPresentation& p) {
    NsCharacterization ch = ns_to_bhas_with_bimodule(p);
    require_pass(ch.bhas_report, "star sum is not BiHom-associative");
    require_pass(ch.bimodule_report, "(succ, prec) is not a bimodule over the star algebra");
    BilinearOp H = p.op("vee");
    return CocycleFromNs{ch.bimodule, H, check_hochschild_2cocycle(ch.bimodule, H)};
}

FunctorFResult functor_F(const AlgebraPresentation& p) {
    CocycleFromNs c = cocycle_from_ns(p);
    require_pass(c.report, "vee is not a Hochschild 2-cocycle");
    TwistedRBInstance inst{c.bimodule, c.cocycle, LinearMap::identity(p.field, p.dim)};
    return FunctorFResult{inst, check_twisted_rb(inst)};
}

ConstructionResult functor_G(const TwistedRBInstance& t) {
    ConstructionResult r = ns_from_twisted_rb(t);
    r.provenance.construction = "functor_G";
    return r;
}

ConstructionResult ns_from_gen_nijenhuis(const GenNijInstance& g) {
    require_pass(check_gen_nijenhuis(g), "input is not a generalized Nijenhuis operator");

    const BilinearOp& mu = g.algebra.op("mu");
    const LinearMap sg = compose(g.sigma, g.gamma);
    const LinearMap td = compose(g.tau, g.delta);
    const LinearMap dN = compose(g.delta, g.op_n);
    const LinearMap gN = compose(g.gamma, g.op_n);

    AlgebraPresentation out;
    out.dim = g.algebra.dim;
    out.field = g.algebra.field;
    out.ops.emplace("prec", precompose(mu, &sg, &dN));
    out.ops.emplace("succ", precompose(mu, &gN, &td));
    out.ops.emplace("vee", -postcompose(g.op_n, precompose(mu, &g.gamma, &g.delta)));
    out.maps.emplace("alpha", compose(g.algebra.map("alpha"), sg));
    out.maps.emplace("beta", compose(g.algebra.map("beta"), td));
    out.kind_claim = "bihom_ns";

    CheckReport verification = check_bihom_ns(out);
    if (verification.pass) {
        AlgebraPresentation star_alg;
        star_alg.dim = out.dim;
        star_alg.field = out.field;
        star_alg.ops.emplace("mu", star_sum(out));
        star_alg.maps = out.maps;
        verification = check_bihom_associative(star_alg);
    }

    PresentationDocument d = wrap(g.algebra);
    return ConstructionResult{out, verification, prov("ns_from_gen_nijenhuis", {&d})};
}

PerturbationOperators perturbation_operators(const AlgebraPresentation& p, const Vector& a) {
    require_pass(check_bihom_associative(p), "algebra is not BiHom-associative");
    const LinearMap& alpha = p.map("alpha");
    const LinearMap& beta = p.map("beta");
    if (apply_linear(alpha, apply_linear(alpha, a)) != a)
        throw PrerequisiteFailedError("alpha^2(a) != a");
    if (apply_linear(beta, apply_linear(beta, a)) != a)
        throw PrerequisiteFailedError("beta^2(a) != a");

    const Vector alpha_a = apply_linear(alpha, a);
    const BilinearOp& mu = p.op("mu");
    LinearMap n1 = left_mult_matrix(mu, alpha_a);
    LinearMap n2 = right_mult_matrix(mu, alpha_a);

    CorollarySpecialization cor1 = specialize_corollary_1(p, n1);
    CorollarySpecialization cor2 = specialize_corollary_2(p, n2);
    if (!cor1.specialized.pass)
        throw Error("internal: N1 fails the first corollary hypotheses (" +
                    cor1.specialized.failed_axiom + ")");
    if (!cor2.specialized.pass)
        throw Error("internal: N2 fails the second corollary hypotheses (" +
                    cor2.specialized.failed_axiom + ")");
    return PerturbationOperators{std::move(n1), std::move(n2), std::move(cor1), std::move(cor2)};
}

}  // namespace bihom
