#pragma once

// Linear maps and bilinear operations as exact structure-constant tensors,
// plus the composition engine used to evaluate identities like
// alpha(x)(yz) = (xy)beta(z) on all basis tuples at once.
//
// Conventions:
//   LinearMap stores an n_out x n_in matrix acting on coordinates,
//   (f v)[r] = sum_c f[r][c] v[c].
//   BilinearOp stores c[i][j][k] with e_i o e_j = sum_k c_ij^k e_k; mixed
//   shapes cover module actions (l: A x M -> M, r: M x A -> M) and cocycles
//   (H: A x A -> M).
//   compose(f, g) is "f after g": (compose(f, g))(v) = f(g(v)).

#include <optional>
#include <vector>

#include "bihom/check_report.hpp"
#include "bihom/scalar.hpp"
#include "bihom/vector.hpp"

namespace bihom {

class LinearMap {
public:
    LinearMap(const FieldDescriptor& f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols),
          entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar::zero(f)) {
        if (rows < 0 || cols < 0) throw DimensionMismatchError("negative matrix dimension");
    }

    static LinearMap identity(const FieldDescriptor& f, int n) {
        LinearMap m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static LinearMap zero(const FieldDescriptor& f, int n) { return LinearMap(f, n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldDescriptor& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(int r, int c) const { return entries_[index(r, c)]; }
    Scalar& at(int r, int c) { return entries_[index(r, c)]; }

    // Image of the c-th basis vector.
    Vector column(int c) const {
        Vector v(field_, rows_);
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;

    bool operator==(const LinearMap& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const LinearMap& o) const { return !(*this == o); }

private:
    size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw DimensionMismatchError("matrix index out of range");
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }

    FieldDescriptor field_;
    int rows_, cols_;
    std::vector<Scalar> entries_;
};

class BilinearOp {
public:
    BilinearOp(const FieldDescriptor& f, int dim_a, int dim_b, int dim_out)
        : field_(f), da_(dim_a), db_(dim_b), dout_(dim_out),
          c_(static_cast<size_t>(dim_a) * static_cast<size_t>(dim_b) * static_cast<size_t>(dim_out),
             Scalar::zero(f)) {
        if (dim_a < 0 || dim_b < 0 || dim_out < 0)
            throw DimensionMismatchError("negative tensor dimension");
    }

    static BilinearOp zero(const FieldDescriptor& f, int n) { return BilinearOp(f, n, n, n); }

    int dim_a() const { return da_; }
    int dim_b() const { return db_; }
    int dim_out() const { return dout_; }
    const FieldDescriptor& field() const { return field_; }
    bool is_square() const { return da_ == db_ && db_ == dout_; }

    const Scalar& at(int i, int j, int k) const { return c_[index(i, j, k)]; }
    Scalar& at(int i, int j, int k) { return c_[index(i, j, k)]; }

    // e_i o e_j as a coordinate vector in the output space.
    Vector image(int i, int j) const {
        Vector v(field_, dout_);
        for (int k = 0; k < dout_; ++k) v[k] = at(i, j, k);
        return v;
    }

    BilinearOp operator+(const BilinearOp& o) const;
    BilinearOp operator-(const BilinearOp& o) const;
    BilinearOp operator-() const;

    bool operator==(const BilinearOp& o) const {
        return field_ == o.field_ && da_ == o.da_ && db_ == o.db_ && dout_ == o.dout_ && c_ == o.c_;
    }
    bool operator!=(const BilinearOp& o) const { return !(*this == o); }

private:
    size_t index(int i, int j, int k) const {
        if (i < 0 || i >= da_ || j < 0 || j >= db_ || k < 0 || k >= dout_)
            throw DimensionMismatchError("tensor index out of range");
        return (static_cast<size_t>(i) * static_cast<size_t>(db_) + static_cast<size_t>(j)) *
                   static_cast<size_t>(dout_) +
               static_cast<size_t>(k);
    }

    FieldDescriptor field_;
    int da_, db_, dout_;
    std::vector<Scalar> c_;
};

// Composite of a bilinear op with an inner bilinear op in one slot; the
// result t[i][j][k][m] is the coordinate expansion of a ternary expression
// on basis triples (e_i, e_j, e_k).
class TrilinearForm {
public:
    TrilinearForm(const FieldDescriptor& f, int dim_a, int dim_b, int dim_c, int dim_out)
        : field_(f), da_(dim_a), db_(dim_b), dc_(dim_c), dout_(dim_out),
          t_(static_cast<size_t>(dim_a) * static_cast<size_t>(dim_b) * static_cast<size_t>(dim_c) *
                 static_cast<size_t>(dim_out),
             Scalar::zero(f)) {}

    int dim_a() const { return da_; }
    int dim_b() const { return db_; }
    int dim_c() const { return dc_; }
    int dim_out() const { return dout_; }
    const FieldDescriptor& field() const { return field_; }

    const Scalar& at(int i, int j, int k, int m) const { return t_[index(i, j, k, m)]; }
    Scalar& at(int i, int j, int k, int m) { return t_[index(i, j, k, m)]; }

    Vector image(int i, int j, int k) const {
        Vector v(field_, dout_);
        for (int m = 0; m < dout_; ++m) v[m] = at(i, j, k, m);
        return v;
    }

    TrilinearForm operator+(const TrilinearForm& o) const;
    TrilinearForm operator-(const TrilinearForm& o) const;

private:
    size_t index(int i, int j, int k, int m) const {
        if (i < 0 || i >= da_ || j < 0 || j >= db_ || k < 0 || k >= dc_ || m < 0 || m >= dout_)
            throw DimensionMismatchError("trilinear index out of range");
        return ((static_cast<size_t>(i) * static_cast<size_t>(db_) + static_cast<size_t>(j)) *
                    static_cast<size_t>(dc_) +
                static_cast<size_t>(k)) *
                   static_cast<size_t>(dout_) +
               static_cast<size_t>(m);
    }

    FieldDescriptor field_;
    int da_, db_, dc_, dout_;
    std::vector<Scalar> t_;
};

Vector apply_linear(const LinearMap& f, const Vector& v);
Vector apply_bilinear(const BilinearOp& op, const Vector& x, const Vector& y);

// f after g.
LinearMap compose(const LinearMap& f, const LinearMap& g);
bool maps_commute(const LinearMap& f, const LinearMap& g);

// op(f(x), g(y)); a null map means the identity on that slot.
BilinearOp precompose(const BilinearOp& op, const LinearMap* f, const LinearMap* g);
// f(op(x, y)).
BilinearOp postcompose(const LinearMap& f, const BilinearOp& op);

// outer(inner(x, y), z)
TrilinearForm nest_first(const BilinearOp& outer, const BilinearOp& inner);
// outer(x, inner(y, z))
TrilinearForm nest_second(const BilinearOp& outer, const BilinearOp& inner);

// Lexicographically first basis tuple with nonzero residual, if any.
std::optional<std::pair<std::vector<int>, Vector>> first_nonzero(const LinearMap& residual);
std::optional<std::pair<std::vector<int>, Vector>> first_nonzero(const BilinearOp& residual);
std::optional<std::pair<std::vector<int>, Vector>> first_nonzero(const TrilinearForm& residual);

// Pass iff f(e_i o e_j) = f(e_i) o f(e_j) on all basis pairs; multilinearity
// makes basis pairs sufficient.
CheckReport is_multiplicative(const LinearMap& f, const BilinearOp& op);

}  // namespace bihom
