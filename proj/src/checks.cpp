#include "bihom/checks.hpp"

#include <variant>

namespace bihom {

namespace {

using Residual = std::variant<LinearMap, BilinearOp, TrilinearForm>;

const AlgebraPresentation& alg(const IdentityContext& ctx) {
    if (ctx.algebra) return *ctx.algebra;
    if (ctx.bimodule) return ctx.bimodule->algebra;
    throw MissingComponentError("identity needs an algebra presentation");
}

const BimodulePresentation& mod(const IdentityContext& ctx) {
    if (!ctx.bimodule) throw MissingComponentError("identity needs a bimodule presentation");
    return *ctx.bimodule;
}

const BilinearOp& cocycle_of(const IdentityContext& ctx) {
    if (!ctx.cocycle) throw MissingComponentError("identity needs a cocycle H");
    return *ctx.cocycle;
}

const LinearMap& pi_of(const IdentityContext& ctx) {
    if (!ctx.pi) throw MissingComponentError("identity needs the operator pi");
    return *ctx.pi;
}

const LinearMap& opn(const IdentityContext& ctx) {
    if (!ctx.op_n) throw MissingComponentError("identity needs the operator map");
    return *ctx.op_n;
}

const LinearMap& named(const IdentityContext& ctx, const LinearMap* m, const char* what) {
    if (!m) throw MissingComponentError(std::string("identity needs the map ") + what);
    (void)ctx;
    return *m;
}

// mu with one slot precomposed, shorthand used all over the builders.
BilinearOp slot1(const BilinearOp& op, const LinearMap& f) { return precompose(op, &f, nullptr); }
BilinearOp slot2(const BilinearOp& op, const LinearMap& g) { return precompose(op, nullptr, &g); }

LinearMap commutator(const LinearMap& f, const LinearMap& g) {
    return compose(f, g) - compose(g, f);
}

BilinearOp multiplicativity_residual(const LinearMap& f, const BilinearOp& op) {
    return postcompose(f, op) - precompose(op, &f, &f);
}

Residual build_residual(const std::string& name, const IdentityContext& ctx) {
    // --- BiHom-associative algebra ------------------------------------
    if (name == "commutation") {
        const auto& p = alg(ctx);
        return commutator(p.map("alpha"), p.map("beta"));
    }
    if (name == "eqalfabeta(alpha)") {
        const auto& p = alg(ctx);
        return multiplicativity_residual(p.map("alpha"), p.op("mu"));
    }
    if (name == "eqalfabeta(beta)") {
        const auto& p = alg(ctx);
        return multiplicativity_residual(p.map("beta"), p.op("mu"));
    }
    if (name == "eqasso") {
        const auto& p = alg(ctx);
        const auto& mu = p.op("mu");
        return nest_second(slot1(mu, p.map("alpha")), mu) - nest_first(slot2(mu, p.map("beta")), mu);
    }

    // --- classical NS-algebra ------------------------------------------
    if (name.starts_with("NS")) {
        const auto& p = alg(ctx);
        const auto& prec = p.op("prec");
        const auto& succ = p.op("succ");
        const auto& vee = p.op("vee");
        const BilinearOp star = prec + succ + vee;
        if (name == "NS1") return nest_first(prec, prec) - nest_second(prec, star);
        if (name == "NS2") return nest_first(prec, succ) - nest_second(succ, prec);
        if (name == "NS3") return nest_first(succ, star) - nest_second(succ, succ);
        if (name == "NS4")
            return nest_first(prec, vee) + nest_first(vee, star) - nest_second(succ, vee) -
                   nest_second(vee, star);
    }

    // --- BiHom-NS-algebra ------------------------------------------------
    if (name.starts_with("BiHomNS")) {
        const auto& p = alg(ctx);
        if (name == "BiHomNS0") return commutator(p.map("alpha"), p.map("beta"));
        if (name == "BiHomNS1(prec)") return multiplicativity_residual(p.map("alpha"), p.op("prec"));
        if (name == "BiHomNS1(succ)") return multiplicativity_residual(p.map("alpha"), p.op("succ"));
        if (name == "BiHomNS1(vee)") return multiplicativity_residual(p.map("alpha"), p.op("vee"));
        if (name == "BiHomNS2(prec)") return multiplicativity_residual(p.map("beta"), p.op("prec"));
        if (name == "BiHomNS2(succ)") return multiplicativity_residual(p.map("beta"), p.op("succ"));
        if (name == "BiHomNS2(vee)") return multiplicativity_residual(p.map("beta"), p.op("vee"));
        const auto& prec = p.op("prec");
        const auto& succ = p.op("succ");
        const auto& vee = p.op("vee");
        const auto& a = p.map("alpha");
        const auto& b = p.map("beta");
        const BilinearOp star = prec + succ + vee;
        if (name == "BiHomNS3") return nest_first(slot2(prec, b), prec) - nest_second(slot1(prec, a), star);
        if (name == "BiHomNS4") return nest_first(slot2(prec, b), succ) - nest_second(slot1(succ, a), prec);
        if (name == "BiHomNS5") return nest_first(slot2(succ, b), star) - nest_second(slot1(succ, a), succ);
        if (name == "BiHomNS6")
            return nest_first(slot2(prec, b), vee) + nest_first(slot2(vee, b), star) -
                   nest_second(slot1(succ, a), vee) - nest_second(slot1(vee, a), star);
    }

    // --- BiHom-tridendriform algebra --------------------------------------
    if (name.starts_with("BiHomtridend")) {
        const auto& p = alg(ctx);
        if (name == "BiHomtridend1") return commutator(p.map("alpha"), p.map("beta"));
        if (name == "BiHomtridend4(prec)") return multiplicativity_residual(p.map("alpha"), p.op("prec"));
        if (name == "BiHomtridend4(succ)") return multiplicativity_residual(p.map("alpha"), p.op("succ"));
        if (name == "BiHomtridend4(dot)") return multiplicativity_residual(p.map("alpha"), p.op("dot"));
        if (name == "BiHomtridend5(prec)") return multiplicativity_residual(p.map("beta"), p.op("prec"));
        if (name == "BiHomtridend5(succ)") return multiplicativity_residual(p.map("beta"), p.op("succ"));
        if (name == "BiHomtridend5(dot)") return multiplicativity_residual(p.map("beta"), p.op("dot"));
        const auto& prec = p.op("prec");
        const auto& succ = p.op("succ");
        const auto& dot = p.op("dot");
        const auto& a = p.map("alpha");
        const auto& b = p.map("beta");
        const BilinearOp sum = prec + succ + dot;
        if (name == "BiHomtridend8") return nest_first(slot2(prec, b), prec) - nest_second(slot1(prec, a), sum);
        if (name == "BiHomtridend9") return nest_first(slot2(prec, b), succ) - nest_second(slot1(succ, a), prec);
        if (name == "BiHomtridend10") return nest_second(slot1(succ, a), succ) - nest_first(slot2(succ, b), sum);
        if (name == "BiHomtridend11") return nest_second(slot1(dot, a), succ) - nest_first(slot2(dot, b), prec);
        if (name == "BiHomtridend12") return nest_second(slot1(succ, a), dot) - nest_first(slot2(dot, b), succ);
        if (name == "BiHomtridend13") return nest_second(slot1(dot, a), prec) - nest_first(slot2(prec, b), dot);
        if (name == "BiHomtridend14") return nest_second(slot1(dot, a), dot) - nest_first(slot2(dot, b), dot);
    }

    // --- bimodule ---------------------------------------------------------
    if (name == "bimodule-commutation") {
        const auto& b = mod(ctx);
        return commutator(b.alpha_m, b.beta_m);
    }
    if (name.starts_with("lcompat") || name.starts_with("rcompat") || name == "lmod" ||
        name == "rmod" || name == "bimod") {
        const auto& b = mod(ctx);
        const auto& mu = b.algebra.op("mu");
        const auto& aA = b.algebra.map("alpha");
        const auto& bA = b.algebra.map("beta");
        const auto& l = b.left_action;
        const auto& r = b.right_action;
        if (name == "lcompat(alpha)") return postcompose(b.alpha_m, l) - precompose(l, &aA, &b.alpha_m);
        if (name == "lcompat(beta)") return postcompose(b.beta_m, l) - precompose(l, &bA, &b.beta_m);
        if (name == "rcompat(alpha)") return postcompose(b.alpha_m, r) - precompose(r, &b.alpha_m, &aA);
        if (name == "rcompat(beta)") return postcompose(b.beta_m, r) - precompose(r, &b.beta_m, &bA);
        if (name == "lmod") return nest_second(slot1(l, aA), l) - nest_first(slot2(l, b.beta_m), mu);
        if (name == "rmod") return nest_second(slot1(r, b.alpha_m), mu) - nest_first(slot2(r, bA), r);
        if (name == "bimod") return nest_second(slot1(l, aA), r) - nest_first(slot2(r, bA), l);
    }

    // --- bimodule algebra ---------------------------------------------------
    if (name.starts_with("bullet-") || name == "extra1" || name == "extra2" || name == "extra3") {
        const auto& b = mod(ctx);
        if (!b.bullet) throw MissingComponentError("bimodule has no bullet product");
        const auto& bl = *b.bullet;
        const auto& aA = b.algebra.map("alpha");
        const auto& bA = b.algebra.map("beta");
        const auto& l = b.left_action;
        const auto& r = b.right_action;
        if (name == "bullet-eqalfabeta(alpha)") return multiplicativity_residual(b.alpha_m, bl);
        if (name == "bullet-eqalfabeta(beta)") return multiplicativity_residual(b.beta_m, bl);
        if (name == "bullet-eqasso")
            return nest_second(slot1(bl, b.alpha_m), bl) - nest_first(slot2(bl, b.beta_m), bl);
        if (name == "extra1") return nest_second(slot1(l, aA), bl) - nest_first(slot2(bl, b.beta_m), l);
        if (name == "extra2") return nest_second(slot1(bl, b.alpha_m), r) - nest_first(slot2(r, bA), bl);
        if (name == "extra3") return nest_second(slot1(bl, b.alpha_m), l) - nest_first(slot2(bl, b.beta_m), r);
    }

    // --- Hochschild 2-cocycle -------------------------------------------------
    if (name.starts_with("Hoc1") || name == "cocycle") {
        const auto& b = mod(ctx);
        const auto& H = cocycle_of(ctx);
        const auto& aA = b.algebra.map("alpha");
        const auto& bA = b.algebra.map("beta");
        if (name == "Hoc1(alpha)") return precompose(H, &aA, &aA) - postcompose(b.alpha_m, H);
        if (name == "Hoc1(beta)") return precompose(H, &bA, &bA) - postcompose(b.beta_m, H);
        const auto& mu = b.algebra.op("mu");
        const auto& l = b.left_action;
        const auto& r = b.right_action;
        if (name == "cocycle")
            return nest_second(slot1(l, aA), H) - nest_first(slot2(H, bA), mu) +
                   nest_second(slot1(H, aA), mu) - nest_first(slot2(r, bA), H);
    }

    // --- twisted Rota-Baxter -----------------------------------------------
    if (name.starts_with("supTRB") || name == "trb") {
        const auto& b = mod(ctx);
        const auto& pi = pi_of(ctx);
        const auto& aA = b.algebra.map("alpha");
        const auto& bA = b.algebra.map("beta");
        if (name == "supTRB(alpha)") return compose(pi, b.alpha_m) - compose(aA, pi);
        if (name == "supTRB(beta)") return compose(pi, b.beta_m) - compose(bA, pi);
        const auto& mu = b.algebra.op("mu");
        const auto& H = cocycle_of(ctx);
        if (name == "trb") {
            BilinearOp inner =
                precompose(b.left_action, &pi, nullptr) + precompose(b.right_action, nullptr, &pi) +
                precompose(H, &pi, &pi);
            return precompose(mu, &pi, &pi) - postcompose(pi, inner);
        }
    }

    // --- operators on the algebra itself ---------------------------------
    if (name == "opcommute(alpha)") {
        const auto& p = alg(ctx);
        return commutator(opn(ctx), p.map("alpha"));
    }
    if (name == "opcommute(beta)") {
        const auto& p = alg(ctx);
        return commutator(opn(ctx), p.map("beta"));
    }
    if (name == "reynolds") {
        const auto& p = alg(ctx);
        const auto& mu = p.op("mu");
        const auto& R = opn(ctx);
        BilinearOp inner = slot1(mu, R) + slot2(mu, R) - precompose(mu, &R, &R);
        return precompose(mu, &R, &R) - postcompose(R, inner);
    }
    if (name == "Nijeq") {
        const auto& p = alg(ctx);
        const auto& mu = p.op("mu");
        const auto& N = opn(ctx);
        BilinearOp inner = slot2(mu, N) + slot1(mu, N) - postcompose(N, mu);
        return precompose(mu, &N, &N) - postcompose(N, inner);
    }

    // --- generalized Nijenhuis ----------------------------------------------
    if (name.starts_with("extracom") || name.starts_with("genNij")) {
        const auto& p = alg(ctx);
        const auto& mu = p.op("mu");
        const auto& a = p.map("alpha");
        const auto& b = p.map("beta");
        const auto& s = named(ctx, ctx.sigma, "sigma");
        const auto& g = named(ctx, ctx.gamma, "gamma");
        const auto& t = named(ctx, ctx.tau, "tau");
        const auto& d = named(ctx, ctx.delta, "delta");
        const auto& N = opn(ctx);
        const LinearMap sg = compose(s, g);
        const LinearMap td = compose(t, d);
        if (name == "extracom1") return commutator(compose(a, sg), N);
        if (name == "extracom2") return commutator(compose(b, td), N);
        if (name == "genNij") {
            const LinearMap sgN = compose(sg, N), tdN = compose(td, N);
            const LinearMap dN = compose(d, N), gN = compose(g, N);
            BilinearOp inner = precompose(mu, &sg, &dN) + precompose(mu, &gN, &td) -
                               postcompose(N, precompose(mu, &g, &d));
            return precompose(mu, &sgN, &tdN) - postcompose(N, inner);
        }
        if (name == "genNijsup1") {
            const LinearMap asg2 = compose(a, compose(s, compose(g, g)));
            const LinearMap ag2 = compose(a, compose(g, g));
            const LinearMap asg2N = compose(asg2, N), tdN = compose(td, N);
            const LinearMap dN = compose(d, N), ag2N = compose(ag2, N);
            BilinearOp inner = precompose(mu, &asg2, &dN) + precompose(mu, &ag2N, &td) -
                               postcompose(N, precompose(mu, &ag2, &d));
            return precompose(mu, &asg2N, &tdN) - postcompose(N, inner);
        }
        if (name == "genNijsup2") {
            const LinearMap btd2 = compose(b, compose(t, compose(d, d)));
            const LinearMap bd2 = compose(b, compose(d, d));
            const LinearMap sgN = compose(sg, N), btd2N = compose(btd2, N);
            const LinearMap bd2N = compose(bd2, N), gN = compose(g, N);
            BilinearOp inner = precompose(mu, &sg, &bd2N) + precompose(mu, &gN, &btd2) -
                               postcompose(N, precompose(mu, &g, &bd2));
            return precompose(mu, &sgN, &btd2N) - postcompose(N, inner);
        }
    }

    // --- corollary specializations -------------------------------------------
    if (name.starts_with("gN")) {
        const auto& p = alg(ctx);
        const auto& mu = p.op("mu");
        const auto& a = p.map("alpha");
        const auto& b = p.map("beta");
        const auto& N = opn(ctx);
        const LinearMap aN = compose(a, N), bN = compose(b, N);
        const LinearMap a2 = compose(a, a), b2 = compose(b, b);
        if (name == "gN1") {
            BilinearOp inner =
                precompose(mu, &a, &N) + precompose(mu, &aN, &b) - postcompose(N, slot1(mu, a));
            return precompose(mu, &aN, &bN) - postcompose(N, inner);
        }
        if (name == "gN2") {
            const LinearMap b2N = compose(b2, N);
            BilinearOp inner = precompose(mu, &a, &bN) + precompose(mu, &aN, &b2) -
                               postcompose(N, precompose(mu, &a, &b));
            return precompose(mu, &aN, &b2N) - postcompose(N, inner);
        }
        if (name == "gN3") {
            BilinearOp inner =
                precompose(mu, &a, &bN) + precompose(mu, &N, &b) - postcompose(N, slot2(mu, b));
            return precompose(mu, &aN, &bN) - postcompose(N, inner);
        }
        if (name == "gN4") {
            const LinearMap a2N = compose(a2, N);
            BilinearOp inner = precompose(mu, &a2, &bN) + precompose(mu, &aN, &b) -
                               postcompose(N, precompose(mu, &a, &b));
            return precompose(mu, &a2N, &bN) - postcompose(N, inner);
        }
    }

    throw UnknownIdentityError("no registered identity named '" + name + "'");
}

CheckReport scan(const std::string& name, const Residual& residual) {
    auto hit = std::visit([](const auto& r) { return first_nonzero(r); }, residual);
    if (hit) return CheckReport::failure(name, hit->first, hit->second);
    return CheckReport::passed();
}

CheckReport run_axioms(const std::vector<std::string>& names, const IdentityContext& ctx) {
    for (const auto& name : names) {
        CheckReport r = scan(name, build_residual(name, ctx));
        if (!r.pass) return r;
    }
    return CheckReport::passed();
}

}  // namespace

const std::vector<AxiomInfo>& axiom_catalog() {
    static const std::vector<AxiomInfo> catalog = [] {
        const Slot A = Slot::A, M = Slot::M;
        std::vector<AxiomInfo> c;
        c.push_back({"commutation", {A}});
        c.push_back({"eqalfabeta(alpha)", {A, A}});
        c.push_back({"eqalfabeta(beta)", {A, A}});
        c.push_back({"eqasso", {A, A, A}});
        for (const char* n : {"NS1", "NS2", "NS3", "NS4"}) c.push_back({n, {A, A, A}});
        c.push_back({"BiHomNS0", {A}});
        for (const char* n : {"BiHomNS1(prec)", "BiHomNS1(succ)", "BiHomNS1(vee)", "BiHomNS2(prec)",
                              "BiHomNS2(succ)", "BiHomNS2(vee)"})
            c.push_back({n, {A, A}});
        for (const char* n : {"BiHomNS3", "BiHomNS4", "BiHomNS5", "BiHomNS6"})
            c.push_back({n, {A, A, A}});
        c.push_back({"BiHomtridend1", {A}});
        for (const char* n : {"BiHomtridend4(prec)", "BiHomtridend4(succ)", "BiHomtridend4(dot)",
                              "BiHomtridend5(prec)", "BiHomtridend5(succ)", "BiHomtridend5(dot)"})
            c.push_back({n, {A, A}});
        for (const char* n : {"BiHomtridend8", "BiHomtridend9", "BiHomtridend10", "BiHomtridend11",
                              "BiHomtridend12", "BiHomtridend13", "BiHomtridend14"})
            c.push_back({n, {A, A, A}});
        c.push_back({"bimodule-commutation", {M}});
        c.push_back({"lcompat(alpha)", {A, M}});
        c.push_back({"lcompat(beta)", {A, M}});
        c.push_back({"rcompat(alpha)", {M, A}});
        c.push_back({"rcompat(beta)", {M, A}});
        c.push_back({"lmod", {A, A, M}});
        c.push_back({"rmod", {M, A, A}});
        c.push_back({"bimod", {A, M, A}});
        c.push_back({"bullet-eqalfabeta(alpha)", {M, M}});
        c.push_back({"bullet-eqalfabeta(beta)", {M, M}});
        c.push_back({"bullet-eqasso", {M, M, M}});
        c.push_back({"extra1", {A, M, M}});
        c.push_back({"extra2", {M, M, A}});
        c.push_back({"extra3", {M, A, M}});
        c.push_back({"Hoc1(alpha)", {A, A}});
        c.push_back({"Hoc1(beta)", {A, A}});
        c.push_back({"cocycle", {A, A, A}});
        c.push_back({"supTRB(alpha)", {M}});
        c.push_back({"supTRB(beta)", {M}});
        c.push_back({"trb", {M, M}});
        c.push_back({"opcommute(alpha)", {A}});
        c.push_back({"opcommute(beta)", {A}});
        c.push_back({"reynolds", {A, A}});
        c.push_back({"Nijeq", {A, A}});
        c.push_back({"extracom1", {A}});
        c.push_back({"extracom2", {A}});
        for (const char* n : {"genNij", "genNijsup1", "genNijsup2", "gN1", "gN2", "gN3", "gN4"})
            c.push_back({n, {A, A}});
        return c;
    }();
    return catalog;
}

CheckReport check_axiom(const std::string& name, const IdentityContext& ctx) {
    return scan(name, build_residual(name, ctx));
}

CheckReport check_bihom_associative(const AlgebraPresentation& p) {
    p.validate();
    IdentityContext ctx{.algebra = &p};
    return run_axioms({"commutation", "eqalfabeta(alpha)", "eqalfabeta(beta)", "eqasso"}, ctx);
}

CheckReport check_ns(const AlgebraPresentation& p) {
    p.validate();
    IdentityContext ctx{.algebra = &p};
    return run_axioms({"NS1", "NS2", "NS3", "NS4"}, ctx);
}

CheckReport check_bihom_ns(const AlgebraPresentation& p) {
    p.validate();
    IdentityContext ctx{.algebra = &p};
    return run_axioms({"BiHomNS0", "BiHomNS1(prec)", "BiHomNS1(succ)", "BiHomNS1(vee)",
                       "BiHomNS2(prec)", "BiHomNS2(succ)", "BiHomNS2(vee)", "BiHomNS3", "BiHomNS4",
                       "BiHomNS5", "BiHomNS6"},
                      ctx);
}

CheckReport check_bihom_tridendriform(const AlgebraPresentation& p) {
    p.validate();
    IdentityContext ctx{.algebra = &p};
    return run_axioms({"BiHomtridend1", "BiHomtridend4(prec)", "BiHomtridend4(succ)",
                       "BiHomtridend4(dot)", "BiHomtridend5(prec)", "BiHomtridend5(succ)",
                       "BiHomtridend5(dot)", "BiHomtridend8", "BiHomtridend9", "BiHomtridend10",
                       "BiHomtridend11", "BiHomtridend12", "BiHomtridend13", "BiHomtridend14"},
                      ctx);
}

CheckReport check_bimodule(const BimodulePresentation& b) {
    b.validate();
    CheckReport base = check_bihom_associative(b.algebra);
    if (!base.pass) return CheckReport::prerequisite(base);
    IdentityContext ctx{.bimodule = &b};
    return run_axioms({"bimodule-commutation", "lcompat(alpha)", "lcompat(beta)", "rcompat(alpha)",
                       "rcompat(beta)", "lmod", "rmod", "bimod"},
                      ctx);
}

CheckReport check_bimodule_algebra(const BimodulePresentation& b) {
    if (!b.bullet) throw MissingComponentError("bimodule-algebra check needs a bullet product");
    CheckReport module_report = check_bimodule(b);
    if (!module_report.pass) return module_report;
    IdentityContext ctx{.bimodule = &b};
    return run_axioms({"bullet-eqalfabeta(alpha)", "bullet-eqalfabeta(beta)", "bullet-eqasso",
                       "extra1", "extra2", "extra3"},
                      ctx);
}

CheckReport check_hochschild_2cocycle(const BimodulePresentation& b, const BilinearOp& H) {
    if (H.dim_a() != b.algebra.dim || H.dim_b() != b.algebra.dim || H.dim_out() != b.dim_m)
        throw DimensionMismatchError("cocycle H must have shape dim x dim x dim_M");
    CheckReport module_report = check_bimodule(b);
    if (!module_report.pass) return CheckReport::prerequisite(module_report);
    IdentityContext ctx{.bimodule = &b, .cocycle = &H};
    return run_axioms({"Hoc1(alpha)", "Hoc1(beta)", "cocycle"}, ctx);
}

CheckReport check_morphism(const AlgebraPresentation& src, const AlgebraPresentation& dst,
                           const LinearMap& f) {
    src.validate();
    dst.validate();
    auto keys = [](const auto& m) {
        std::vector<std::string> k;
        for (const auto& [name, v] : m) k.push_back(name);
        return k;
    };
    if (keys(src.ops) != keys(dst.ops) || keys(src.maps) != keys(dst.maps))
        throw KindMismatchError("morphism endpoints present different op/map names");
    if (f.cols() != src.dim || f.rows() != dst.dim)
        throw DimensionMismatchError("morphism matrix must map dim(src) to dim(dst)");

    for (const auto& [name, m] : src.maps) {
        LinearMap residual = compose(dst.map(name), f) - compose(f, m);
        if (auto hit = first_nonzero(residual))
            return CheckReport::failure("morphism-intertwine(" + name + ")", hit->first, hit->second);
    }
    for (const auto& [name, op] : src.ops) {
        BilinearOp residual = postcompose(f, op) - precompose(dst.op(name), &f, &f);
        if (auto hit = first_nonzero(residual))
            return CheckReport::failure("morphism-multiplicative(" + name + ")", hit->first,
                                        hit->second);
    }
    return CheckReport::passed();
}

}  // namespace bihom
