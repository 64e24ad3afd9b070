#pragma once

// Constructive results as executable transformations between presentations.
// Every construction re-verifies its own output and returns the verification
// report; a Fail report means an implementation bug or a hypothesis
// violation, and the report names which axiom broke. Constructions whose
// hypotheses are stated as preconditions throw PrerequisiteFailedError when
// the inputs do not satisfy them.

#include "bihom/checks.hpp"
#include "bihom/io.hpp"
#include "bihom/operators.hpp"
#include "bihom/presentation.hpp"

namespace bihom {

struct ConstructionResult {
    AlgebraPresentation output;
    CheckReport verification;
    Provenance provenance;
};

// Entrywise prec + succ + vee.
BilinearOp star_sum(const AlgebraPresentation& p);

// A BiHom-NS structure characterized as a BiHom-associative algebra with a
// bimodule on itself: mu = star, l = succ, r = prec.
struct NsCharacterization {
    AlgebraPresentation bhas;
    BimodulePresentation bimodule;
    CheckReport bhas_report;
    CheckReport bimodule_report;
};
NsCharacterization ns_to_bhas_with_bimodule(const AlgebraPresentation& p);

// Converse assembly: given (A, star, alpha, beta) and the two actions on A
// itself, reconstruct vee = star - prec - succ and return the NS candidate
// with verification = check_bihom_ns.
ConstructionResult ns_from_bhas_bimodule(const AlgebraPresentation& bhas, const BilinearOp& succ_action,
                                         const BilinearOp& prec_action);

// Twist of a classical NS-algebra along commuting NS-endomorphisms a, b:
// x prec' y = a(x) prec b(y) and so on, structure maps (a, b).
ConstructionResult yau_twist_ns(const AlgebraPresentation& p, const LinearMap& a, const LinearMap& b);

// An NS-morphism f with f a = a' f and f b = b' f stays a morphism between
// the twisted structures; returns that morphism check.
CheckReport yau_twist_morphism_transport(const LinearMap& f, const AlgebraPresentation& src,
                                         const LinearMap& a, const LinearMap& b,
                                         const AlgebraPresentation& dst, const LinearMap& a2,
                                         const LinearMap& b2);

// Algebra on A + M with product (x,m)(x',m') = (xx', x.m' + m.x' [+ m bullet m'])
// and block-diagonal structure maps; verification = check_bihom_associative.
// No hypotheses beyond shape validity: a Fail verification is exactly how
// defective module data shows up.
ConstructionResult split_null_extension(const BimodulePresentation& b);

// A BiHom-tridendriform algebra is a BiHom-NS-algebra with vee = dot.
ConstructionResult tridend_embed_ns(const AlgebraPresentation& p);

// NS structure induced on M by a verified twisted Rota-Baxter operator:
// m prec n = m.pi(n), m succ n = pi(m).n, m vee n = H(pi(m), pi(n)).
ConstructionResult ns_from_twisted_rb(const TwistedRBInstance& t);

// H(x, y) = x vee y is a Hochschild 2-cocycle on the star algebra with
// values in the (succ, prec) bimodule.
struct CocycleFromNs {
    BimodulePresentation bimodule;
    BilinearOp cocycle;
    CheckReport report;
};
CocycleFromNs cocycle_from_ns(const AlgebraPresentation& p);

// One adjoint direction: a BiHom-NS structure as the twisted Rota-Baxter
// operator id_A on its own (succ, prec) bimodule with H = vee.
struct FunctorFResult {
    TwistedRBInstance instance;
    CheckReport verification;
};
FunctorFResult functor_F(const AlgebraPresentation& p);

// The other adjoint direction; alias of ns_from_twisted_rb.
ConstructionResult functor_G(const TwistedRBInstance& t);

// NS structure induced by a generalized Nijenhuis operator, with structure
// maps alpha sigma gamma and beta tau delta stored as explicit matrix
// products. Also re-checks that the induced star product is BiHom-associative
// for those maps.
ConstructionResult ns_from_gen_nijenhuis(const GenNijInstance& g);

// Left and right multiplication by alpha(a) for a vector a fixed by alpha^2
// and beta^2; N1 satisfies the first corollary specialization, N2 the second.
struct PerturbationOperators {
    LinearMap n1, n2;
    CorollarySpecialization cor1, cor2;
};
PerturbationOperators perturbation_operators(const AlgebraPresentation& p, const Vector& a);

}  // namespace bihom
