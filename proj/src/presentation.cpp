#include "bihom/presentation.hpp"

namespace bihom {

namespace {

void require_field(const FieldDescriptor& want, const FieldDescriptor& got, const std::string& what) {
    if (want != got)
        throw ValidationError(what + " lives over " + got.str() + ", presentation over " + want.str());
}

void require_shape(const BilinearOp& op, int a, int b, int out, const std::string& what) {
    if (op.dim_a() != a || op.dim_b() != b || op.dim_out() != out)
        throw ValidationError(what + " has shape " + std::to_string(op.dim_a()) + "x" +
                              std::to_string(op.dim_b()) + "x" + std::to_string(op.dim_out()) +
                              ", expected " + std::to_string(a) + "x" + std::to_string(b) + "x" +
                              std::to_string(out));
}

void require_shape(const LinearMap& m, int rows, int cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw ValidationError(what + " has shape " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                              std::to_string(cols));
}

}  // namespace

void AlgebraPresentation::validate() const {
    if (dim <= 0) throw ValidationError("presentation dimension must be positive");
    for (const auto& [name, op] : ops) {
        require_field(field, op.field(), "op '" + name + "'");
        require_shape(op, dim, dim, dim, "op '" + name + "'");
    }
    for (const auto& [name, m] : maps) {
        require_field(field, m.field(), "map '" + name + "'");
        require_shape(m, dim, dim, "map '" + name + "'");
    }
}

void BimodulePresentation::validate() const {
    algebra.validate();
    if (dim_m <= 0) throw ValidationError("module dimension must be positive");
    const auto& f = algebra.field;
    require_field(f, left_action.field(), "left action");
    require_field(f, right_action.field(), "right action");
    require_field(f, alpha_m.field(), "alpha_M");
    require_field(f, beta_m.field(), "beta_M");
    require_shape(left_action, algebra.dim, dim_m, dim_m, "left action");
    require_shape(right_action, dim_m, algebra.dim, dim_m, "right action");
    require_shape(alpha_m, dim_m, dim_m, "alpha_M");
    require_shape(beta_m, dim_m, dim_m, "beta_M");
    if (bullet) {
        require_field(f, bullet->field(), "bullet");
        require_shape(*bullet, dim_m, dim_m, dim_m, "bullet");
    }
    algebra.op("mu");
    algebra.map("alpha");
    algebra.map("beta");
}

BimodulePresentation regular_bimodule(const AlgebraPresentation& p) {
    const BilinearOp& mu = p.op("mu");
    BimodulePresentation b(p, p.dim);
    b.left_action = mu;
    b.right_action = mu;
    b.alpha_m = p.map("alpha");
    b.beta_m = p.map("beta");
    return b;
}

void TwistedRBInstance::validate() const {
    bimodule.validate();
    const auto& f = bimodule.algebra.field;
    if (cocycle.field() != f || pi.field() != f)
        throw ValidationError("cocycle/pi field differs from the bimodule field");
    require_shape(cocycle, bimodule.algebra.dim, bimodule.algebra.dim, bimodule.dim_m, "cocycle H");
    require_shape(pi, bimodule.algebra.dim, bimodule.dim_m, "pi");
}

void GenNijInstance::validate() const {
    algebra.validate();
    algebra.op("mu");
    algebra.map("alpha");
    algebra.map("beta");
    for (const auto* m : {&sigma, &gamma, &tau, &delta, &op_n}) {
        if (m->field() != algebra.field) throw ValidationError("operator field differs from the algebra field");
        require_shape(*m, algebra.dim, algebra.dim, "operator map");
    }
}

}  // namespace bihom
