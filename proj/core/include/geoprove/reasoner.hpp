#pragma once

#include "geoprove/algebraize.hpp"
#include "geoprove/groebner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geoprove {

enum class Verdict { True, TrueUnderConditions, Unproved, Timeout };

/// Wire name: "TRUE", "TRUE_UNDER_CONDITIONS", "UNPROVED", "TIMEOUT".
std::string verdict_name(Verdict v);

struct ProofResult {
    Verdict verdict = Verdict::Unproved;
    /// Nondegeneracy conditions over the free variables of the system ring;
    /// nonempty exactly for TRUE_UNDER_CONDITIONS.
    std::vector<Polynomial> conditions;
    std::string order_key;
    double time_ms = 0;
};

/// Decides whether the thesis vanishes on every component of the hypothesis
/// variety on which it can (generic truth).  A TRUE verdict may stop the
/// basis computation early, so its condition list is always empty.
ProofResult prove(const AlgebraicSystem& sys, const ResourceLimits& limits = {},
                  const TraceFn& trace = nullptr);

/// Same verdict as prove but runs the basis to completion so the condition
/// list for TRUE_UNDER_CONDITIONS is the full eliminated ideal.  If the
/// budget runs out after a unit element has already appeared the verdict is
/// still TRUE, just without conditions.
ProofResult prove_details(const AlgebraicSystem& sys, const ResourceLimits& limits = {},
                          const TraceFn& trace = nullptr);

class NotMemberError : public std::runtime_error {
public:
    explicit NotMemberError(const std::string& what) : std::runtime_error(what) {}
};

struct GradeLedgerRow {
    unsigned q_degree = 0;
    unsigned cofactor_degree = 0;
};

/// Complexity certificate for a proved statement.  The witness identity
///   thesis = sum_i reduction.quotients[i] * basis.elements[i]
/// holds exactly, with every basis element in turn an exact combination of
/// basis.generators through basis.cofactors.  The grade is the maximum over
/// used elements of multiplier degree plus that element's cofactor degree,
/// where degrees count the free and dependent variables only; auxiliary
/// variables, the fallback's inversion variable included, are scaffolding.
struct GradeReport {
    unsigned grade = 0;
    std::size_t basis_size = 0;
    unsigned max_multiplier_degree = 0;
    unsigned max_cofactor_degree = 0;
    /// One row per basis element with a nonzero multiplier.
    std::vector<GradeLedgerRow> ledger;
    std::string order_key;
    /// Set when the direct reduction failed and the statement was graded
    /// over the extended generator set instead.
    bool used_fallback = false;
    double time_ms = 0;
    /// The thesis in the ring the grading ran in (one variable wider than
    /// the system ring when used_fallback is set).
    Polynomial thesis;
    TrackedBasis basis;
    TrackedReduction reduction;
};

/// Grades the thesis against the hypothesis ideal under `ord` (lex or
/// grevlex over the system ring).  Falls back to the extended generator set
/// when the thesis is not a direct ideal member; throws NotMemberError when
/// that fails too or the statement is unproved.
GradeReport grade(const AlgebraicSystem& sys, const MonomialOrder& ord,
                  const ResourceLimits& limits = {}, const TraceFn& trace = nullptr);

enum class FindingStage { NumericCandidate, Proved };

/// Wire name: "NUMERIC_CANDIDATE", "PROVED".
std::string stage_name(FindingStage s);

struct Finding {
    Predicate predicate;
    FindingStage stage = FindingStage::NumericCandidate;
    std::optional<ProofResult> proof;
    /// Index of the construction step at which the predicate first becomes
    /// statable; findings are ordered by it.
    std::size_t statable_step = 0;
};

struct DiscoverOptions {
    Pinning pinning;
    unsigned seed = 1;
    std::size_t max_candidates = 2000;
    /// Pair budget per confirmation attempt.  Machine independent, unlike a
    /// time slice, so the finding list is reproducible.
    std::size_t pair_budget = 4000;
};

struct DiscoverResult {
    std::vector<Finding> findings;
    /// Set when the candidate cap or the deadline cut the search short.
    bool truncated = false;
    double time_ms = 0;
};

/// Enumerates candidate predicates over the constructed points, filters them
/// at random exact instances and confirms the survivors with prove.
DiscoverResult discover(const Construction& c, const DiscoverOptions& opts = {},
                        const ResourceLimits& limits = {}, const TraceFn& trace = nullptr);

/// Canonical text of a predicate, e.g. "concyclic A B C E".
std::string predicate_text(const Predicate& p);

} // namespace geoprove
