#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"
#include "mdim/solvers.hpp"

namespace mdim {

// Closed forms. ccc_formula requires n >= 2. lcg_formula requires n >= 3,
// k >= 2, and n >= 4 for the doubly parameter.
std::size_t ccc_formula(Parameter kind, int n);
std::size_t lcg_formula(Parameter kind, int n, int k);
bool lcg_claim_in_range(Parameter kind, int n, int k);

/// Witness sets built from the last layer, in the order the constructions
/// list them:
///   resolving: positions 2 then 4 of every cube;
///   doubly:    positions 2, 4, 5;
///   strong:    positions 2, 4, 5 plus position 7 (antipode of the head) of
///              every cube but the last.
OrderedVertexSet ccc_witness(Parameter kind, int n);

///   resolving: position n of every cycle;
///   doubly:    position n, then position floor(n/2)+1;
///   strong:    positions 2..ceil(n/2) of every cycle, then one vertex at
///              maximum distance from the head (n/2+1 for even n,
///              floor(n/2)+2 for odd n) of every cycle but the last.
OrderedVertexSet lcg_witness(Parameter kind, int n, int k);

enum class Verdict { confirmed, refuted, untested, no_claim };
std::string to_string(Verdict v);

struct TheoremClaim {
    FamilyTag family;
    Parameter kind = Parameter::resolving;
    std::optional<std::size_t> claimed_value;  // empty outside the theorem's range
    OrderedVertexSet witness;
    bool witness_checked = false;
    bool witness_ok = false;
    std::optional<std::size_t> optimum;
    std::string method = "-";
    Verdict verified = Verdict::untested;
    /// Human-readable details: counterexamples, budget shortfalls, cross-checks.
    std::vector<std::string> notes;
};

struct AuditOptions {
    SearchBudget budget{5'000'000, std::chrono::seconds(30)};
    /// Fall back to last-layer-restricted search when unrestricted search runs out of budget.
    bool allow_family_pruned = true;
};

/// Ties closed form, witness, verifier and exact solvers into one verdict.
/// Budget shortfalls degrade the verdict to untested; they never throw.
TheoremClaim audit_claim(const FamilyTag& family, Parameter kind, const AuditOptions& options = {});

/// Every theorem at its smallest in-range parameters, plus the doubly
/// parameter of LCG(3,k) as an unclaimed observation.
std::vector<TheoremClaim> reproduce(const AuditOptions& options = {});

std::string audit_tsv_header();
/// One TSV row, no trailing newline.
std::string audit_tsv_row(const TheoremClaim& claim);
/// "params" column: "n=2" or "n=3,k=2".
std::string params_string(const FamilyTag& family);

}  // namespace mdim
