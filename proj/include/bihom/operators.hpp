#pragma once

// Verifiers for operator notions: cocycle-twisted Rota-Baxter operators,
// Reynolds operators, classical Nijenhuis operators, and the generalized
// Nijenhuis operators with auxiliary maps sigma, gamma, tau, delta.
//
// Preconditions are verified eagerly and reported as
// "prerequisite:<condition>" so diagnostics say which hypothesis broke, as
// opposed to which identity failed.

#include "bihom/checks.hpp"
#include "bihom/presentation.hpp"

namespace bihom {

// pi against its bimodule and cocycle. Prerequisites: the bimodule chain
// (base algebra BiHom-associative, module axioms, H a 2-cocycle). Axioms:
// supTRB(alpha), supTRB(beta), trb.
CheckReport check_twisted_rb(const TwistedRBInstance& t);

// Reynolds operator on p: the twisted Rota-Baxter operator for H = -mu on
// the regular bimodule. Verified both through check_twisted_rb and by direct
// evaluation of the Reynolds identity; the two routes must agree.
CheckReport check_reynolds(const AlgebraPresentation& p, const LinearMap& R);

// Classical Nijenhuis operator; prerequisites: p BiHom-associative and N
// commuting with alpha and beta.
CheckReport check_nijenhuis(const AlgebraPresentation& p, const LinearMap& N);

// Generalized Nijenhuis operator; prerequisites: the algebra is
// BiHom-associative, sigma/gamma/tau/delta are multiplicative, and every
// pair among {alpha, beta, sigma, gamma, tau, delta} commutes. Axioms:
// extracom1, extracom2, genNij, genNijsup1, genNijsup2.
CheckReport check_gen_nijenhuis(const GenNijInstance& g);

struct CorollarySpecialization {
    GenNijInstance instance;
    CheckReport specialized;  // the two corollary identities
    CheckReport general;      // check_gen_nijenhuis on the instance
};

// sigma = id, gamma = alpha, tau = beta, delta = id; checks gN1, gN2 and
// demands verdict agreement with the general checker.
// PrerequisiteFailedError if N fails the alpha^2/beta^2 commutation.
CorollarySpecialization specialize_corollary_1(const AlgebraPresentation& p, const LinearMap& N);

// sigma = alpha, gamma = id, tau = id, delta = beta; checks gN3, gN4.
CorollarySpecialization specialize_corollary_2(const AlgebraPresentation& p, const LinearMap& N);

}  // namespace bihom
