#pragma once

// Second, independent evaluator for every registered identity. Each identity
// is assembled here from scratch as nested apply_linear/apply_bilinear calls
// on basis vectors, one tuple at a time; no identity-assembly code is shared
// with checks.cpp. Checker and oracle agreeing across the corpus is the
// anti-bug property for both.

#include <span>
#include <string>

#include "bihom/checks.hpp"

namespace bihom {

// Left-minus-right of the named identity at one basis tuple.
// UnknownIdentityError for unregistered names.
Vector oracle_identity_eval(const std::string& identity, const IdentityContext& ctx,
                            std::span<const int> tuple);

// Scans every basis tuple of the identity's signature; true iff all residuals
// vanish.
bool oracle_identity_holds(const std::string& identity, const IdentityContext& ctx);

}  // namespace bihom
