#include "bihom/oracle.hpp"

namespace bihom {

namespace {

struct Tuple3 {
    int i = -1, j = -1, k = -1;
};

Tuple3 unpack(std::span<const int> tuple, size_t arity, const std::string& name) {
    if (tuple.size() != arity)
        throw DimensionMismatchError("identity '" + name + "' takes " + std::to_string(arity) +
                                     " basis indices, got " + std::to_string(tuple.size()));
    Tuple3 t;
    if (arity > 0) t.i = tuple[0];
    if (arity > 1) t.j = tuple[1];
    if (arity > 2) t.k = tuple[2];
    return t;
}

}  // namespace

Vector oracle_identity_eval(const std::string& name, const IdentityContext& ctx,
                            std::span<const int> tuple) {
    const auto& catalog = axiom_catalog();
    const AxiomInfo* info = nullptr;
    for (const auto& a : catalog)
        if (a.name == name) {
            info = &a;
            break;
        }
    if (!info) throw UnknownIdentityError("no registered identity named '" + name + "'");
    const Tuple3 t = unpack(tuple, info->slots.size(), name);

    const AlgebraPresentation* palg = ctx.algebra;
    const BimodulePresentation* pmod = ctx.bimodule;
    if (!palg && pmod) palg = &pmod->algebra;

    auto basis_for = [&](Slot s, int idx) {
        if (s == Slot::A) {
            if (!palg) throw MissingComponentError("identity needs an algebra presentation");
            return Vector::basis(palg->field, palg->dim, idx);
        }
        if (!pmod) throw MissingComponentError("identity needs a bimodule presentation");
        return Vector::basis(pmod->algebra.field, pmod->dim_m, idx);
    };

    auto L = [&](const LinearMap& f, const Vector& v) { return apply_linear(f, v); };
    auto B = [&](const BilinearOp& op, const Vector& x, const Vector& y) {
        return apply_bilinear(op, x, y);
    };

    // An identity is applicable only where its axiom system's full signature
    // is present, whether or not the particular identity mentions every op.
    if (name == "NS1" || name == "NS2" || name == "NS3" || name == "NS4") {
        for (const char* op : {"prec", "succ", "vee"}) (void)palg->op(op);
    } else if (name.starts_with("BiHomNS") && name != "BiHomNS0" && name.find('(') == std::string::npos) {
        for (const char* op : {"prec", "succ", "vee"}) (void)palg->op(op);
        (void)palg->map("alpha");
        (void)palg->map("beta");
    } else if (name.starts_with("BiHomtridend") && name != "BiHomtridend1" &&
               name.find('(') == std::string::npos) {
        for (const char* op : {"prec", "succ", "dot"}) (void)palg->op(op);
        (void)palg->map("alpha");
        (void)palg->map("beta");
    }

    // Slot values.
    Vector x = basis_for(info->slots[0], t.i);
    std::optional<Vector> yv, zv;
    if (info->slots.size() > 1) yv = basis_for(info->slots[1], t.j);
    if (info->slots.size() > 2) zv = basis_for(info->slots[2], t.k);

    // ----- algebra-level identities -----
    if (name == "commutation" || name == "BiHomNS0" || name == "BiHomtridend1") {
        const auto& a = palg->map("alpha");
        const auto& b = palg->map("beta");
        return L(a, L(b, x)) - L(b, L(a, x));
    }
    if (name == "eqalfabeta(alpha)" || name == "eqalfabeta(beta)") {
        const auto& f = palg->map(name == "eqalfabeta(alpha)" ? "alpha" : "beta");
        const auto& mu = palg->op("mu");
        const Vector& y = *yv;
        return L(f, B(mu, x, y)) - B(mu, L(f, x), L(f, y));
    }
    if (name == "eqasso") {
        const auto& mu = palg->op("mu");
        const auto& a = palg->map("alpha");
        const auto& b = palg->map("beta");
        const Vector &y = *yv, &z = *zv;
        return B(mu, L(a, x), B(mu, y, z)) - B(mu, B(mu, x, y), L(b, z));
    }

    auto star_val = [&](const char* third, const Vector& u, const Vector& v) {
        return B(palg->op("prec"), u, v) + B(palg->op("succ"), u, v) + B(palg->op(third), u, v);
    };

    if (name == "NS1") {
        const auto& prec = palg->op("prec");
        const Vector &y = *yv, &z = *zv;
        return B(prec, B(prec, x, y), z) - B(prec, x, star_val("vee", y, z));
    }
    if (name == "NS2") {
        const auto& prec = palg->op("prec");
        const auto& succ = palg->op("succ");
        const Vector &y = *yv, &z = *zv;
        return B(prec, B(succ, x, y), z) - B(succ, x, B(prec, y, z));
    }
    if (name == "NS3") {
        const auto& succ = palg->op("succ");
        const Vector &y = *yv, &z = *zv;
        return B(succ, star_val("vee", x, y), z) - B(succ, x, B(succ, y, z));
    }
    if (name == "NS4") {
        const auto& prec = palg->op("prec");
        const auto& succ = palg->op("succ");
        const auto& vee = palg->op("vee");
        const Vector &y = *yv, &z = *zv;
        Vector lhs = B(prec, B(vee, x, y), z) + B(vee, star_val("vee", x, y), z);
        Vector rhs = B(succ, x, B(vee, y, z)) + B(vee, x, star_val("vee", y, z));
        return lhs - rhs;
    }

    if (name.starts_with("BiHomNS1(") || name.starts_with("BiHomNS2(") ||
        name.starts_with("BiHomtridend4(") || name.starts_with("BiHomtridend5(")) {
        const bool is_alpha = name.starts_with("BiHomNS1(") || name.starts_with("BiHomtridend4(");
        const auto open = name.find('(');
        const std::string opname = name.substr(open + 1, name.size() - open - 2);
        const auto& f = palg->map(is_alpha ? "alpha" : "beta");
        const auto& op = palg->op(opname);
        const Vector& y = *yv;
        return L(f, B(op, x, y)) - B(op, L(f, x), L(f, y));
    }

    if (name == "BiHomNS3") {
        const auto& prec = palg->op("prec");
        const auto& a = palg->map("alpha");
        const auto& b = palg->map("beta");
        const Vector &y = *yv, &z = *zv;
        return B(prec, B(prec, x, y), L(b, z)) - B(prec, L(a, x), star_val("vee", y, z));
    }
    if (name == "BiHomNS4") {
        const auto& prec = palg->op("prec");
        const auto& succ = palg->op("succ");
        const auto& a = palg->map("alpha");
        const auto& b = palg->map("beta");
        const Vector &y = *yv, &z = *zv;
        return B(prec, B(succ, x, y), L(b, z)) - B(succ, L(a, x), B(prec, y, z));
    }
    if (name == "BiHomNS5") {
        const auto& succ = palg->op("succ");
        const auto& a = palg->map("alpha");
        const auto& b = palg->map("beta");
        const Vector &y = *yv, &z = *zv;
        return B(succ, star_val("vee", x, y), L(b, z)) - B(succ, L(a, x), B(succ, y, z));
    }
    if (name == "BiHomNS6") {
        const auto& prec = palg->op("prec");
        const auto& succ = palg->op("succ");
        const auto& vee = palg->op("vee");
        const auto& a = palg->map("alpha");
        const auto& b = palg->map("beta");
        const Vector &y = *yv, &z = *zv;
        Vector lhs = B(prec, B(vee, x, y), L(b, z)) + B(vee, star_val("vee", x, y), L(b, z));
        Vector rhs = B(succ, L(a, x), B(vee, y, z)) + B(vee, L(a, x), star_val("vee", y, z));
        return lhs - rhs;
    }

    if (name.starts_with("BiHomtridend")) {
        const auto& prec = palg->op("prec");
        const auto& succ = palg->op("succ");
        const auto& dot = palg->op("dot");
        const auto& a = palg->map("alpha");
        const auto& b = palg->map("beta");
        const Vector &y = *yv, &z = *zv;
        if (name == "BiHomtridend8")
            return B(prec, B(prec, x, y), L(b, z)) - B(prec, L(a, x), star_val("dot", y, z));
        if (name == "BiHomtridend9")
            return B(prec, B(succ, x, y), L(b, z)) - B(succ, L(a, x), B(prec, y, z));
        if (name == "BiHomtridend10")
            return B(succ, L(a, x), B(succ, y, z)) - B(succ, star_val("dot", x, y), L(b, z));
        if (name == "BiHomtridend11")
            return B(dot, L(a, x), B(succ, y, z)) - B(dot, B(prec, x, y), L(b, z));
        if (name == "BiHomtridend12")
            return B(succ, L(a, x), B(dot, y, z)) - B(dot, B(succ, x, y), L(b, z));
        if (name == "BiHomtridend13")
            return B(dot, L(a, x), B(prec, y, z)) - B(prec, B(dot, x, y), L(b, z));
        if (name == "BiHomtridend14")
            return B(dot, L(a, x), B(dot, y, z)) - B(dot, B(dot, x, y), L(b, z));
    }

    // ----- bimodule identities -----
    const bool module_identity =
        name.starts_with("lcompat") || name.starts_with("rcompat") ||
        name.starts_with("bimodule") || name == "lmod" || name == "rmod" || name == "bimod" ||
        name.starts_with("bullet") || name == "extra1" || name == "extra2" || name == "extra3" ||
        name.starts_with("Hoc1") || name == "cocycle" || name.starts_with("supTRB") || name == "trb";
    if (!pmod && module_identity)
        throw MissingComponentError("identity '" + name + "' needs a bimodule presentation");

    if (name == "bimodule-commutation")
        return L(pmod->alpha_m, L(pmod->beta_m, x)) - L(pmod->beta_m, L(pmod->alpha_m, x));

    if (name.starts_with("lcompat") || name.starts_with("rcompat")) {
        const bool is_alpha = name.ends_with("(alpha)");
        const auto& fA = pmod->algebra.map(is_alpha ? "alpha" : "beta");
        const auto& fM = is_alpha ? pmod->alpha_m : pmod->beta_m;
        const Vector& y = *yv;
        if (name.starts_with("lcompat"))
            return L(fM, B(pmod->left_action, x, y)) - B(pmod->left_action, L(fA, x), L(fM, y));
        return L(fM, B(pmod->right_action, x, y)) - B(pmod->right_action, L(fM, x), L(fA, y));
    }
    if (name == "lmod") {
        const auto& aA = pmod->algebra.map("alpha");
        const auto& mu = pmod->algebra.op("mu");
        const Vector &y = *yv, &z = *zv;
        return B(pmod->left_action, L(aA, x), B(pmod->left_action, y, z)) -
               B(pmod->left_action, B(mu, x, y), L(pmod->beta_m, z));
    }
    if (name == "rmod") {
        const auto& bA = pmod->algebra.map("beta");
        const auto& mu = pmod->algebra.op("mu");
        const Vector &y = *yv, &z = *zv;
        return B(pmod->right_action, L(pmod->alpha_m, x), B(mu, y, z)) -
               B(pmod->right_action, B(pmod->right_action, x, y), L(bA, z));
    }
    if (name == "bimod") {
        const auto& aA = pmod->algebra.map("alpha");
        const auto& bA = pmod->algebra.map("beta");
        const Vector &y = *yv, &z = *zv;
        return B(pmod->left_action, L(aA, x), B(pmod->right_action, y, z)) -
               B(pmod->right_action, B(pmod->left_action, x, y), L(bA, z));
    }

    if (name.starts_with("bullet-") || name == "extra1" || name == "extra2" || name == "extra3") {
        if (!pmod->bullet) throw MissingComponentError("bimodule has no bullet product");
        const auto& bl = *pmod->bullet;
        if (name == "bullet-eqalfabeta(alpha)" || name == "bullet-eqalfabeta(beta)") {
            const auto& fM = name.ends_with("(alpha)") ? pmod->alpha_m : pmod->beta_m;
            const Vector& y = *yv;
            return L(fM, B(bl, x, y)) - B(bl, L(fM, x), L(fM, y));
        }
        const Vector &y = *yv, &z = *zv;
        if (name == "bullet-eqasso")
            return B(bl, L(pmod->alpha_m, x), B(bl, y, z)) - B(bl, B(bl, x, y), L(pmod->beta_m, z));
        const auto& aA = pmod->algebra.map("alpha");
        const auto& bA = pmod->algebra.map("beta");
        if (name == "extra1")
            return B(pmod->left_action, L(aA, x), B(bl, y, z)) -
                   B(bl, B(pmod->left_action, x, y), L(pmod->beta_m, z));
        if (name == "extra2")
            return B(bl, L(pmod->alpha_m, x), B(pmod->right_action, y, z)) -
                   B(pmod->right_action, B(bl, x, y), L(bA, z));
        if (name == "extra3")
            return B(bl, L(pmod->alpha_m, x), B(pmod->left_action, y, z)) -
                   B(bl, B(pmod->right_action, x, y), L(pmod->beta_m, z));
    }

    if (name.starts_with("Hoc1") || name == "cocycle") {
        if (!ctx.cocycle) throw MissingComponentError("identity needs a cocycle H");
        const auto& H = *ctx.cocycle;
        const auto& aA = pmod->algebra.map("alpha");
        const auto& bA = pmod->algebra.map("beta");
        if (name == "Hoc1(alpha)") {
            const Vector& y = *yv;
            return B(H, L(aA, x), L(aA, y)) - L(pmod->alpha_m, B(H, x, y));
        }
        if (name == "Hoc1(beta)") {
            const Vector& y = *yv;
            return B(H, L(bA, x), L(bA, y)) - L(pmod->beta_m, B(H, x, y));
        }
        const auto& mu = pmod->algebra.op("mu");
        const Vector &y = *yv, &z = *zv;
        return B(pmod->left_action, L(aA, x), B(H, y, z)) - B(H, B(mu, x, y), L(bA, z)) +
               B(H, L(aA, x), B(mu, y, z)) - B(pmod->right_action, B(H, x, y), L(bA, z));
    }

    if (name.starts_with("supTRB")) {
        if (!ctx.pi) throw MissingComponentError("identity needs the operator pi");
        const auto& pi = *ctx.pi;
        const bool is_alpha = name.ends_with("(alpha)");
        const auto& fA = pmod->algebra.map(is_alpha ? "alpha" : "beta");
        const auto& fM = is_alpha ? pmod->alpha_m : pmod->beta_m;
        return L(pi, L(fM, x)) - L(fA, L(pi, x));
    }
    if (name == "trb") {
        if (!ctx.pi) throw MissingComponentError("identity needs the operator pi");
        if (!ctx.cocycle) throw MissingComponentError("identity needs a cocycle H");
        const auto& pi = *ctx.pi;
        const auto& H = *ctx.cocycle;
        const auto& mu = pmod->algebra.op("mu");
        const Vector& y = *yv;
        Vector inner = B(pmod->left_action, L(pi, x), y) + B(pmod->right_action, x, L(pi, y)) +
                       B(H, L(pi, x), L(pi, y));
        return B(mu, L(pi, x), L(pi, y)) - L(pi, inner);
    }

    // ----- operator identities on the algebra -----
    if (name == "opcommute(alpha)" || name == "opcommute(beta)") {
        if (!ctx.op_n) throw MissingComponentError("identity needs the operator map");
        const auto& f = palg->map(name == "opcommute(alpha)" ? "alpha" : "beta");
        return L(*ctx.op_n, L(f, x)) - L(f, L(*ctx.op_n, x));
    }
    if (name == "reynolds") {
        if (!ctx.op_n) throw MissingComponentError("identity needs the operator map");
        const auto& R = *ctx.op_n;
        const auto& mu = palg->op("mu");
        const Vector& y = *yv;
        Vector inner = B(mu, L(R, x), y) + B(mu, x, L(R, y)) - B(mu, L(R, x), L(R, y));
        return B(mu, L(R, x), L(R, y)) - L(R, inner);
    }
    if (name == "Nijeq") {
        if (!ctx.op_n) throw MissingComponentError("identity needs the operator map");
        const auto& N = *ctx.op_n;
        const auto& mu = palg->op("mu");
        const Vector& y = *yv;
        Vector inner = B(mu, x, L(N, y)) + B(mu, L(N, x), y) - L(N, B(mu, x, y));
        return B(mu, L(N, x), L(N, y)) - L(N, inner);
    }

    // ----- generalized Nijenhuis -----
    if (name.starts_with("extracom") || name.starts_with("genNij") || name.starts_with("gN")) {
        if (!ctx.op_n) throw MissingComponentError("identity needs the operator map");
        const auto& N = *ctx.op_n;
        const auto& mu = palg->op("mu");
        const auto& a = palg->map("alpha");
        const auto& b = palg->map("beta");
        auto need = [&](const LinearMap* m, const char* what) -> const LinearMap& {
            if (!m) throw MissingComponentError(std::string("identity needs the map ") + what);
            return *m;
        };
        if (name == "extracom1") {
            const auto &s = need(ctx.sigma, "sigma"), &g = need(ctx.gamma, "gamma");
            return L(a, L(s, L(g, L(N, x)))) - L(N, L(a, L(s, L(g, x))));
        }
        if (name == "extracom2") {
            const auto &tm = need(ctx.tau, "tau"), &d = need(ctx.delta, "delta");
            return L(b, L(tm, L(d, L(N, x)))) - L(N, L(b, L(tm, L(d, x))));
        }
        if (name == "genNij") {
            const auto &s = need(ctx.sigma, "sigma"), &g = need(ctx.gamma, "gamma");
            const auto &tm = need(ctx.tau, "tau"), &d = need(ctx.delta, "delta");
            const Vector& y = *yv;
            Vector lhs = B(mu, L(s, L(g, L(N, x))), L(tm, L(d, L(N, y))));
            Vector inner = B(mu, L(s, L(g, x)), L(d, L(N, y))) +
                           B(mu, L(g, L(N, x)), L(tm, L(d, y))) - L(N, B(mu, L(g, x), L(d, y)));
            return lhs - L(N, inner);
        }
        if (name == "genNijsup1") {
            const auto &s = need(ctx.sigma, "sigma"), &g = need(ctx.gamma, "gamma");
            const auto &tm = need(ctx.tau, "tau"), &d = need(ctx.delta, "delta");
            const Vector& y = *yv;
            Vector lhs = B(mu, L(a, L(s, L(g, L(g, L(N, x))))), L(tm, L(d, L(N, y))));
            Vector inner = B(mu, L(a, L(s, L(g, L(g, x)))), L(d, L(N, y))) +
                           B(mu, L(a, L(g, L(g, L(N, x)))), L(tm, L(d, y))) -
                           L(N, B(mu, L(a, L(g, L(g, x))), L(d, y)));
            return lhs - L(N, inner);
        }
        if (name == "genNijsup2") {
            const auto &s = need(ctx.sigma, "sigma"), &g = need(ctx.gamma, "gamma");
            const auto &tm = need(ctx.tau, "tau"), &d = need(ctx.delta, "delta");
            const Vector& y = *yv;
            Vector lhs = B(mu, L(s, L(g, L(N, x))), L(b, L(tm, L(d, L(d, L(N, y))))));
            Vector inner = B(mu, L(s, L(g, x)), L(b, L(d, L(d, L(N, y))))) +
                           B(mu, L(g, L(N, x)), L(b, L(tm, L(d, L(d, y))))) -
                           L(N, B(mu, L(g, x), L(b, L(d, L(d, y)))));
            return lhs - L(N, inner);
        }
        const Vector& y = *yv;
        if (name == "gN1") {
            Vector lhs = B(mu, L(a, L(N, x)), L(b, L(N, y)));
            Vector inner = B(mu, L(a, x), L(N, y)) + B(mu, L(a, L(N, x)), L(b, y)) -
                           L(N, B(mu, L(a, x), y));
            return lhs - L(N, inner);
        }
        if (name == "gN2") {
            Vector lhs = B(mu, L(a, L(N, x)), L(b, L(b, L(N, y))));
            Vector inner = B(mu, L(a, x), L(b, L(N, y))) + B(mu, L(a, L(N, x)), L(b, L(b, y))) -
                           L(N, B(mu, L(a, x), L(b, y)));
            return lhs - L(N, inner);
        }
        if (name == "gN3") {
            Vector lhs = B(mu, L(a, L(N, x)), L(b, L(N, y)));
            Vector inner = B(mu, L(a, x), L(b, L(N, y))) + B(mu, L(N, x), L(b, y)) -
                           L(N, B(mu, x, L(b, y)));
            return lhs - L(N, inner);
        }
        if (name == "gN4") {
            Vector lhs = B(mu, L(a, L(a, L(N, x))), L(b, L(N, y)));
            Vector inner = B(mu, L(a, L(a, x)), L(b, L(N, y))) + B(mu, L(a, L(N, x)), L(b, y)) -
                           L(N, B(mu, L(a, x), L(b, y)));
            return lhs - L(N, inner);
        }
    }

    throw UnknownIdentityError("no registered identity named '" + name + "'");
}

bool oracle_identity_holds(const std::string& identity, const IdentityContext& ctx) {
    const auto& catalog = axiom_catalog();
    const AxiomInfo* info = nullptr;
    for (const auto& a : catalog)
        if (a.name == identity) {
            info = &a;
            break;
        }
    if (!info) throw UnknownIdentityError("no registered identity named '" + identity + "'");

    const AlgebraPresentation* palg = ctx.algebra;
    if (!palg && ctx.bimodule) palg = &ctx.bimodule->algebra;
    auto dim_of = [&](Slot s) {
        if (s == Slot::A) {
            if (!palg) throw MissingComponentError("identity needs an algebra presentation");
            return palg->dim;
        }
        if (!ctx.bimodule) throw MissingComponentError("identity needs a bimodule presentation");
        return ctx.bimodule->dim_m;
    };

    std::vector<int> dims;
    for (Slot s : info->slots) dims.push_back(dim_of(s));
    std::vector<int> tuple(dims.size(), 0);
    while (true) {
        if (!oracle_identity_eval(identity, ctx, tuple).is_zero()) return false;
        int pos = static_cast<int>(tuple.size()) - 1;
        while (pos >= 0) {
            if (++tuple[static_cast<size_t>(pos)] < dims[static_cast<size_t>(pos)]) break;
            tuple[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return true;
}

}  // namespace bihom
