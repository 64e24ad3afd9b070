#include "bihom/linalg.hpp"

namespace bihom {

namespace {

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (a != b) throw FieldMismatchError("operands live over different fields");
}

}  // namespace

LinearMap LinearMap::operator+(const LinearMap& o) const {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatchError("matrix shapes differ");
    LinearMap r(field_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatchError("matrix shapes differ");
    LinearMap r(field_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

BilinearOp BilinearOp::operator+(const BilinearOp& o) const {
    require_same_field(field_, o.field_);
    if (da_ != o.da_ || db_ != o.db_ || dout_ != o.dout_)
        throw DimensionMismatchError("tensor shapes differ");
    BilinearOp r(field_, da_, db_, dout_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

BilinearOp BilinearOp::operator-(const BilinearOp& o) const {
    require_same_field(field_, o.field_);
    if (da_ != o.da_ || db_ != o.db_ || dout_ != o.dout_)
        throw DimensionMismatchError("tensor shapes differ");
    BilinearOp r(field_, da_, db_, dout_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

BilinearOp BilinearOp::operator-() const {
    BilinearOp r(field_, da_, db_, dout_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

TrilinearForm TrilinearForm::operator+(const TrilinearForm& o) const {
    require_same_field(field_, o.field_);
    if (da_ != o.da_ || db_ != o.db_ || dc_ != o.dc_ || dout_ != o.dout_)
        throw DimensionMismatchError("trilinear shapes differ");
    TrilinearForm r(field_, da_, db_, dc_, dout_);
    for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = t_[i] + o.t_[i];
    return r;
}

TrilinearForm TrilinearForm::operator-(const TrilinearForm& o) const {
    require_same_field(field_, o.field_);
    if (da_ != o.da_ || db_ != o.db_ || dc_ != o.dc_ || dout_ != o.dout_)
        throw DimensionMismatchError("trilinear shapes differ");
    TrilinearForm r(field_, da_, db_, dc_, dout_);
    for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = t_[i] - o.t_[i];
    return r;
}

Vector apply_linear(const LinearMap& f, const Vector& v) {
    require_same_field(f.field(), v.field());
    if (f.cols() != v.dim()) throw DimensionMismatchError("matrix/vector dimensions differ");
    Vector out(f.field(), f.rows());
    for (int r = 0; r < f.rows(); ++r) {
        Scalar acc = Scalar::zero(f.field());
        for (int c = 0; c < f.cols(); ++c) acc += f.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

Vector apply_bilinear(const BilinearOp& op, const Vector& x, const Vector& y) {
    require_same_field(op.field(), x.field());
    require_same_field(op.field(), y.field());
    if (op.dim_a() != x.dim() || op.dim_b() != y.dim())
        throw DimensionMismatchError("bilinear op applied to vectors of the wrong dimension");
    Vector out(op.field(), op.dim_out());
    for (int i = 0; i < op.dim_a(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < op.dim_b(); ++j) {
            if (y[j].is_zero()) continue;
            const Scalar xy = x[i] * y[j];
            for (int k = 0; k < op.dim_out(); ++k) out[k] += xy * op.at(i, j, k);
        }
    }
    return out;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    require_same_field(f.field(), g.field());
    if (f.cols() != g.rows()) throw DimensionMismatchError("composed maps have mismatched dimensions");
    LinearMap r(f.field(), f.rows(), g.cols());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            Scalar acc = Scalar::zero(f.field());
            for (int k = 0; k < f.cols(); ++k) acc += f.at(i, k) * g.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

bool maps_commute(const LinearMap& f, const LinearMap& g) {
    if (f.rows() != f.cols() || g.rows() != g.cols() || f.rows() != g.rows())
        throw DimensionMismatchError("commutation needs square maps of one dimension");
    return compose(f, g) == compose(g, f);
}

BilinearOp precompose(const BilinearOp& op, const LinearMap* f, const LinearMap* g) {
    int da = op.dim_a(), db = op.dim_b();
    if (f) {
        require_same_field(op.field(), f->field());
        if (f->rows() != op.dim_a()) throw DimensionMismatchError("first-slot map lands outside the op domain");
        da = f->cols();
    }
    if (g) {
        require_same_field(op.field(), g->field());
        if (g->rows() != op.dim_b()) throw DimensionMismatchError("second-slot map lands outside the op domain");
        db = g->cols();
    }
    BilinearOp r(op.field(), da, db, op.dim_out());
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            for (int p = 0; p < op.dim_a(); ++p) {
                const Scalar fp = f ? f->at(p, i) : (p == i ? Scalar::one(op.field()) : Scalar::zero(op.field()));
                if (fp.is_zero()) continue;
                for (int q = 0; q < op.dim_b(); ++q) {
                    const Scalar gq =
                        g ? g->at(q, j) : (q == j ? Scalar::one(op.field()) : Scalar::zero(op.field()));
                    if (gq.is_zero()) continue;
                    const Scalar w = fp * gq;
                    for (int k = 0; k < op.dim_out(); ++k) r.at(i, j, k) += w * op.at(p, q, k);
                }
            }
        }
    return r;
}

BilinearOp postcompose(const LinearMap& f, const BilinearOp& op) {
    require_same_field(op.field(), f.field());
    if (f.cols() != op.dim_out()) throw DimensionMismatchError("postcomposed map domain differs from op output");
    BilinearOp r(op.field(), op.dim_a(), op.dim_b(), f.rows());
    for (int i = 0; i < op.dim_a(); ++i)
        for (int j = 0; j < op.dim_b(); ++j)
            for (int m = 0; m < op.dim_out(); ++m) {
                const Scalar& c = op.at(i, j, m);
                if (c.is_zero()) continue;
                for (int k = 0; k < f.rows(); ++k) r.at(i, j, k) += c * f.at(k, m);
            }
    return r;
}

TrilinearForm nest_first(const BilinearOp& outer, const BilinearOp& inner) {
    require_same_field(outer.field(), inner.field());
    if (outer.dim_a() != inner.dim_out())
        throw DimensionMismatchError("inner op output does not fit the outer first slot");
    TrilinearForm t(outer.field(), inner.dim_a(), inner.dim_b(), outer.dim_b(), outer.dim_out());
    for (int i = 0; i < inner.dim_a(); ++i)
        for (int j = 0; j < inner.dim_b(); ++j)
            for (int q = 0; q < inner.dim_out(); ++q) {
                const Scalar& w = inner.at(i, j, q);
                if (w.is_zero()) continue;
                for (int k = 0; k < outer.dim_b(); ++k)
                    for (int m = 0; m < outer.dim_out(); ++m) {
                        const Scalar& o = outer.at(q, k, m);
                        if (o.is_zero()) continue;
                        t.at(i, j, k, m) += w * o;
                    }
            }
    return t;
}

TrilinearForm nest_second(const BilinearOp& outer, const BilinearOp& inner) {
    require_same_field(outer.field(), inner.field());
    if (outer.dim_b() != inner.dim_out())
        throw DimensionMismatchError("inner op output does not fit the outer second slot");
    TrilinearForm t(outer.field(), outer.dim_a(), inner.dim_a(), inner.dim_b(), outer.dim_out());
    for (int j = 0; j < inner.dim_a(); ++j)
        for (int k = 0; k < inner.dim_b(); ++k)
            for (int q = 0; q < inner.dim_out(); ++q) {
                const Scalar& w = inner.at(j, k, q);
                if (w.is_zero()) continue;
                for (int i = 0; i < outer.dim_a(); ++i)
                    for (int m = 0; m < outer.dim_out(); ++m) {
                        const Scalar& o = outer.at(i, q, m);
                        if (o.is_zero()) continue;
                        t.at(i, j, k, m) += w * o;
                    }
            }
    return t;
}

std::optional<std::pair<std::vector<int>, Vector>> first_nonzero(const LinearMap& residual) {
    for (int j = 0; j < residual.cols(); ++j) {
        Vector col = residual.column(j);
        if (!col.is_zero()) return std::make_pair(std::vector<int>{j}, std::move(col));
    }
    return std::nullopt;
}

std::optional<std::pair<std::vector<int>, Vector>> first_nonzero(const BilinearOp& residual) {
    for (int i = 0; i < residual.dim_a(); ++i)
        for (int j = 0; j < residual.dim_b(); ++j) {
            Vector v = residual.image(i, j);
            if (!v.is_zero()) return std::make_pair(std::vector<int>{i, j}, std::move(v));
        }
    return std::nullopt;
}

std::optional<std::pair<std::vector<int>, Vector>> first_nonzero(const TrilinearForm& residual) {
    for (int i = 0; i < residual.dim_a(); ++i)
        for (int j = 0; j < residual.dim_b(); ++j)
            for (int k = 0; k < residual.dim_c(); ++k) {
                Vector v = residual.image(i, j, k);
                if (!v.is_zero()) return std::make_pair(std::vector<int>{i, j, k}, std::move(v));
            }
    return std::nullopt;
}

CheckReport is_multiplicative(const LinearMap& f, const BilinearOp& op) {
    if (!op.is_square() || !f.is_square() || f.rows() != op.dim_a())
        throw DimensionMismatchError("multiplicativity needs a square op and map on one space");
    BilinearOp residual = postcompose(f, op) - precompose(op, &f, &f);
    if (auto hit = first_nonzero(residual))
        return CheckReport::failure("multiplicativity", hit->first, hit->second);
    return CheckReport::passed();
}

}  // namespace bihom
