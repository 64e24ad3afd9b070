#pragma once

#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

// Coordinate vector of a fixed ambient dimension; all entries share one field.
class Vector {
public:
    Vector(const FieldDescriptor& f, int dim)
        : field_(f), coords_(static_cast<size_t>(dim), Scalar::zero(f)) {
        if (dim < 0) throw DimensionMismatchError("negative vector dimension");
    }

    static Vector basis(const FieldDescriptor& f, int dim, int i) {
        Vector v(f, dim);
        v[i] = Scalar::one(f);
        return v;
    }

    int dim() const { return static_cast<int>(coords_.size()); }
    const FieldDescriptor& field() const { return field_; }

    const Scalar& operator[](int i) const { return coords_.at(static_cast<size_t>(i)); }
    Scalar& operator[](int i) { return coords_.at(static_cast<size_t>(i)); }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    Vector operator+(const Vector& o) const {
        require_compatible(o);
        Vector r(field_, dim());
        for (int i = 0; i < dim(); ++i) r[i] = coords_[static_cast<size_t>(i)] + o[i];
        return r;
    }

    Vector operator-(const Vector& o) const {
        require_compatible(o);
        Vector r(field_, dim());
        for (int i = 0; i < dim(); ++i) r[i] = coords_[static_cast<size_t>(i)] - o[i];
        return r;
    }

    Vector operator-() const {
        Vector r(field_, dim());
        for (int i = 0; i < dim(); ++i) r[i] = -coords_[static_cast<size_t>(i)];
        return r;
    }

    Vector scaled(const Scalar& s) const {
        Vector r(field_, dim());
        for (int i = 0; i < dim(); ++i) r[i] = s * coords_[static_cast<size_t>(i)];
        return r;
    }

    bool operator==(const Vector& o) const {
        return field_ == o.field_ && coords_ == o.coords_;
    }
    bool operator!=(const Vector& o) const { return !(*this == o); }

    std::vector<std::string> str_coords() const {
        std::vector<std::string> out;
        out.reserve(coords_.size());
        for (const auto& c : coords_) out.push_back(c.str());
        return out;
    }

private:
    void require_compatible(const Vector& o) const {
        if (field_ != o.field_) throw FieldMismatchError("vector fields differ");
        if (dim() != o.dim()) throw DimensionMismatchError("vector dimensions differ");
    }

    FieldDescriptor field_;
    std::vector<Scalar> coords_;
};

}  // namespace bihom
