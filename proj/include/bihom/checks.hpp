#pragma once

// Axiom checkers for every structure handled by the library. Each axiom is
// identified by a stable label ("BiHomNS4", "extra2", "cocycle", ...) and is
// decided by exhaustive iteration over basis tuples: the checker assembles
// the left-minus-right residual of the identity as a composite
// structure-constant tensor and scans it lexicographically. Exact scalars
// make the scan sound, multilinearity makes basis tuples sufficient.
//
// A second, independently coded evaluator of the same identities lives in
// oracle.hpp; the two are kept free of shared identity-assembly code on
// purpose.

#include <string>
#include <vector>

#include "bihom/presentation.hpp"

namespace bihom {

// Which space each argument slot of an identity ranges over.
enum class Slot { A, M };

struct AxiomInfo {
    std::string name;
    std::vector<Slot> slots;
};

// Every registered axiom with its slot signature, in a fixed order.
const std::vector<AxiomInfo>& axiom_catalog();

// References to the data an identity may mention. Checkers fill this
// internally; it is exposed so single axioms can be evaluated directly
// (used by the oracle-agreement tests).
struct IdentityContext {
    const AlgebraPresentation* algebra = nullptr;
    const BimodulePresentation* bimodule = nullptr;
    const BilinearOp* cocycle = nullptr;  // H
    const LinearMap* pi = nullptr;
    const LinearMap* op_n = nullptr;  // N or R
    const LinearMap* sigma = nullptr;
    const LinearMap* gamma = nullptr;
    const LinearMap* tau = nullptr;
    const LinearMap* delta = nullptr;
};

// Check one named axiom on all basis tuples. UnknownIdentityError for names
// outside the catalog, MissingComponentError when the context lacks data.
CheckReport check_axiom(const std::string& name, const IdentityContext& ctx);

// Structure checkers. Requirements on the presentation are by op/map name:
//   bihom_associative: op mu, maps alpha, beta
//   ns:                ops prec, succ, vee
//   bihom_ns:          ops prec, succ, vee, maps alpha, beta
//   bihom_tridendriform: ops prec, succ, dot, maps alpha, beta
CheckReport check_bihom_associative(const AlgebraPresentation& p);
CheckReport check_ns(const AlgebraPresentation& p);
CheckReport check_bihom_ns(const AlgebraPresentation& p);
CheckReport check_bihom_tridendriform(const AlgebraPresentation& p);

CheckReport check_bimodule(const BimodulePresentation& b);
CheckReport check_bimodule_algebra(const BimodulePresentation& b);
CheckReport check_hochschild_2cocycle(const BimodulePresentation& b, const BilinearOp& H);

// f intertwines every structure map and is multiplicative for every op.
// Source and destination must present the same op and map names.
CheckReport check_morphism(const AlgebraPresentation& src, const AlgebraPresentation& dst,
                           const LinearMap& f);

}  // namespace bihom
