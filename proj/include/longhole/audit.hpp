#pragma once

#include "longhole/graph.hpp"

#include <string>
#include <vector>

namespace longhole {

struct AuditViolation {
    std::string lemma; // triad, shortcuts, 2paths, 3pairwisenonadjacent, prismjump
    std::vector<int> witness;
    std::string detail;
};

struct AuditReport {
    bool prospect = false;
    bool candidate = false;
    int prisms_audited = 0;
    int holes_audited = 0;
    long checks = 0;
    std::vector<AuditViolation> violations;

    [[nodiscard]] auto ok() const -> bool { return violations.empty(); }
};

// Certifies g with the oracle, finds the extremal structures the structural lemmas talk about
// (tidy shortest long near-prisms in a prospect, shortest long even holes in a candidate) and
// checks each lemma on them. At most max_objects structures of each kind are audited.
auto audit_lemmas(const Graph & g, const EdgeOrder & order, int ell, int max_objects = 4) -> AuditReport;

} // namespace longhole
