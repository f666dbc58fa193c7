#pragma once

#include "roots/catalog.hpp"
#include "roots/gram_search.hpp"
#include "roots/weights.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <variant>

namespace roots::verify {

enum class Status { Verified, Refuted, Infeasible };

std::string status_name(Status s);

struct TraceStep {
    std::string op;
    std::string assertion;
    bool checked = true;  // false marks an annotation carried for context
    bool passed = true;
};

using Artifact = std::variant<RootSet, GramMatrix, catalog::IdentificationResult, std::string>;

struct Report {
    std::string claim;
    std::string kind;  // lemma-gram | prop-bounds | theorem | r14 | rank-table
    Status status = Status::Verified;
    std::vector<TraceStep> steps;
    std::vector<std::pair<std::string, Artifact>> artifacts;

    bool all_checked_passed() const;
};

enum class LimitCaseId { I, II, III, IV };

std::string limit_case_name(LimitCaseId id);
LimitCaseId limit_case_from_name(const std::string& name);

// One limiting configuration: the rank, the weight configuration, the
// expected isotropy-complement components, the expected total system, and
// the expected cardinalities (|W|, |R(h)|, |R(g)|).
struct LimitCase {
    LimitCaseId id;
    std::size_t r = 0;
    weights::WeightConfig config;
    std::vector<Vec> h_roots;
    catalog::Family expected_g_family;
    std::size_t expected_g_rank = 0;
    std::vector<std::pair<catalog::Family, std::size_t>> expected_h;
    std::array<std::size_t, 3> expected_counts{};
    bool normalize_before_identify = false;
};

LimitCase limit_case(LimitCaseId id);

// Builds the configuration, closes the weight set, compares the produced
// roots with the expected lists, and identifies the assembled system.
Report verify_limit_case(LimitCaseId id);

// Same runner on an explicit (possibly perturbed) case description.
Report run_limit_case(const LimitCase& c);

// Replays the impossibility of rank 14: the forced orthogonal Gram, the D8
// complement, and the exact refutation of a second translation vector.
Report exclude_r14();

// Gram classification runs for q in {3, 4, 8}, checked against the known
// solution sets and admissibility filters.
Report gram_classification_report(std::size_t q);

// Maximal-q bounds for the four configuration families.
Report prop_bounds_report(gram::BoundCase c);

// Allowed ranks per 2-valuation class, each entry justified by the bound
// reports and the rank-14 exclusion.
std::map<std::string, std::set<std::size_t>> rank_bound_table();
Report rank_bound_report();

Status expected_status(const Report& r);

struct Aggregate {
    std::vector<Report> reports;
    bool all_expected = true;
};

// Runs the whole suite (3 classification runs, 4 bound cases, 4 limiting
// cases, the rank-14 exclusion); `filter` restricts by kind.
Aggregate verify_all(const std::optional<std::string>& filter = std::nullopt);

}  // namespace roots::verify
