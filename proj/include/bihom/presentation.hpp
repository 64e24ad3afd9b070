#pragma once

// Named algebraic-structure presentations: dimension, field, named bilinear
// ops and linear maps. One container serves every structure in the library;
// kind claims are advisory, checkers always compute ground truth.

#include <map>
#include <optional>
#include <string>

#include "bihom/linalg.hpp"

namespace bihom {

struct AlgebraPresentation {
    int dim = 0;
    FieldDescriptor field;
    std::map<std::string, BilinearOp> ops;   // each dim x dim x dim
    std::map<std::string, LinearMap> maps;   // each dim x dim
    std::optional<std::string> kind_claim;

    bool has_op(const std::string& name) const { return ops.count(name) != 0; }
    bool has_map(const std::string& name) const { return maps.count(name) != 0; }

    const BilinearOp& op(const std::string& name) const {
        auto it = ops.find(name);
        if (it == ops.end()) throw MissingComponentError("presentation has no op '" + name + "'");
        return it->second;
    }

    const LinearMap& map(const std::string& name) const {
        auto it = maps.find(name);
        if (it == maps.end()) throw MissingComponentError("presentation has no map '" + name + "'");
        return it->second;
    }

    // Shape and field consistency; ValidationError on violation.
    void validate() const;

    // dim, field, ops and maps entrywise; kind claims are not compared.
    bool structurally_equal(const AlgebraPresentation& o) const {
        return dim == o.dim && field == o.field && ops == o.ops && maps == o.maps;
    }
};

// A module M over a BiHom-associative algebra: left action l: A x M -> M,
// right action r: M x A -> M, structure maps on M, and optionally a product
// bullet: M x M -> M (bimodule-algebra data).
struct BimodulePresentation {
    AlgebraPresentation algebra;  // expects op "mu", maps "alpha", "beta"
    int dim_m = 0;
    BilinearOp left_action;   // (dim, dim_m, dim_m)
    BilinearOp right_action;  // (dim_m, dim, dim_m)
    LinearMap alpha_m, beta_m;
    std::optional<BilinearOp> bullet;  // (dim_m, dim_m, dim_m)

    BimodulePresentation(AlgebraPresentation alg, int dm)
        : algebra(std::move(alg)), dim_m(dm),
          left_action(algebra.field, algebra.dim, dm, dm),
          right_action(algebra.field, dm, algebra.dim, dm),
          alpha_m(LinearMap::identity(algebra.field, dm)),
          beta_m(LinearMap::identity(algebra.field, dm)) {}

    void validate() const;

    bool operator==(const BimodulePresentation& o) const {
        return algebra.structurally_equal(o.algebra) && dim_m == o.dim_m &&
               left_action == o.left_action && right_action == o.right_action &&
               alpha_m == o.alpha_m && beta_m == o.beta_m && bullet == o.bullet;
    }
};

// The regular bimodule M = A with both actions given by mu.
BimodulePresentation regular_bimodule(const AlgebraPresentation& p);

// A cocycle-twisted Rota-Baxter operator candidate: pi: M -> A against a
// bimodule and a 2-cocycle H: A x A -> M.
struct TwistedRBInstance {
    BimodulePresentation bimodule;
    BilinearOp cocycle;  // (dim, dim, dim_m)
    LinearMap pi;        // dim x dim_m

    void validate() const;
};

// Data for a generalized Nijenhuis operator: four multiplicative maps
// sigma, gamma, tau, delta pairwise commuting with each other and with the
// structure maps, and the operator N itself.
struct GenNijInstance {
    AlgebraPresentation algebra;  // expects op "mu", maps "alpha", "beta"
    LinearMap sigma, gamma, tau, delta, op_n;

    void validate() const;
};

}  // namespace bihom
