#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gog/agraph.hpp"

namespace gog {

struct MembershipCertificate {
    APath path;               // the reduced query
    BPath q;                  // from the base vertex back to it
    std::vector<Expr> b_expr;  // each b_i over the generators of its vertex group
    std::vector<Elem> c;       // one edge group element per edge
};

struct MembershipResult {
    bool member = false;
    std::optional<MembershipCertificate> certificate;
    std::vector<std::string> trace;  // failed coset tests for negative answers
};

// p must run from the type of the base vertex to itself. Throws std::invalid_argument when
// check_folded is set and B is not folded, and std::logic_error when two branches both succeed.
MembershipResult decide_membership(const AGraph& B, const APath& p, bool check_folded = true);
bool verify_certificate(const AGraph& B, const APath& p, const MembershipCertificate& cert);

}  // namespace gog
