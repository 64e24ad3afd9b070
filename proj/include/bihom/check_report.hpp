#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihom/vector.hpp"

namespace bihom {

// Outcome of one axiom-system check. On failure, `witness` is the
// lexicographically first basis tuple where an axiom breaks (a single index
// for map-level axioms, a pair for binary identities, a triple for ternary
// ones) and `residual` the nonzero left-minus-right value there.
// Precondition failures carry failed_axiom = "prerequisite:<description>".
struct CheckReport {
    bool pass = true;
    std::string failed_axiom;
    std::vector<int> witness;
    std::optional<Vector> residual;

    static CheckReport passed() { return CheckReport{}; }

    static CheckReport failure(std::string axiom, std::vector<int> witness_tuple, Vector residual_vec) {
        CheckReport r;
        r.pass = false;
        r.failed_axiom = std::move(axiom);
        r.witness = std::move(witness_tuple);
        r.residual = std::move(residual_vec);
        return r;
    }

    // Wraps an inner failure as a precondition failure of an outer check;
    // already-wrapped reports propagate unchanged.
    static CheckReport prerequisite(const CheckReport& inner) {
        if (inner.is_prerequisite_failure()) return inner;
        CheckReport r = inner;
        r.pass = false;
        r.failed_axiom = "prerequisite:" + inner.failed_axiom;
        return r;
    }

    bool is_prerequisite_failure() const {
        return !pass && failed_axiom.starts_with("prerequisite:");
    }
};

}  // namespace bihom
