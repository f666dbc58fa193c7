#pragma once

#include "roots/rootset.hpp"

#include <string>
#include <vector>

namespace roots::gram {

// A Gram matrix together with the lexicographically least representative of
// its orbit under simultaneous index permutations and sign flips. Solution
// sets compare and dedupe on the canonical form.
struct CanonicalGram {
    GramMatrix g;          // as found
    GramMatrix canonical;  // orbit representative

    bool operator==(const CanonicalGram& other) const { return canonical == other.canonical; }
    bool operator<(const CanonicalGram& other) const { return canonical < other.canonical; }
};

CanonicalGram canonicalize(const GramMatrix& g);

enum class SignClassFilter { All, ProductPlus };

// Realizes the sign-combination set {sum_j e_j b_j} of a PSD Gram matrix as
// an honest RootSet, without leaving the rationals. For a nondegenerate
// matrix the coordinates are the sign tuples themselves and the form is the
// matrix. A degenerate matrix is realized on a maximal independent subset of
// its generators: dependent generators are rewritten through the radical, so
// vector equality in coordinates coincides with geometric equality.
RootSet realize_signs(const GramMatrix& g, SignClassFilter filter);

// Complete search for the Gram matrices of q generators whose full
// sign-combination set can sit inside a root system, normalized so the
// maximal norm is 1 and attained by the all-plus combination:
//   - every combination norm lies in {1, 1/2, 1/3};
//   - distinct non-opposite combinations u, v have <u,v> in
//     {0, +/- max(|u|^2,|v|^2)/2}, with norm ratio in {1,2,3} when nonzero;
//   - no two combinations coincide (weights are simple);
//   - the matrix is realizable (positive semidefinite);
//   - the realized set closes into a root system (it is a subsystem, not
//     merely pairwise compatible).
// The search walks the 3^(2^(q-1)) norm assignments with exact linear
// pruning, recovers off-diagonals by polarization, and resolves the
// diagonal through the <b, b-2b_i> constraint choices. Supported for
// 2 <= q <= 5; q = 5 returns the empty set and is part of the feasibility
// bounds.
std::vector<CanonicalGram> enumerate_p1_grams(std::size_t q);

// Keeps the solutions whose realized sign set is admissible (its closure
// complement is again a root system).
std::vector<CanonicalGram> filter_admissible(const std::vector<CanonicalGram>& solutions,
                                             std::size_t q);

// Statistics of one enumeration run, for reporting. Candidates that satisfy
// every pairwise rule but whose closure escapes all root systems are counted
// in closure_rejected, never silently dropped.
struct EnumerationStats {
    std::size_t free_classes = 0;
    std::size_t dependent_classes = 0;
    std::size_t assignments_pruned = 0;   // dependent-value contradictions
    std::size_t assignments_completed = 0;
    std::size_t candidates_verified = 0;  // diagonal resolutions checked
    std::size_t closure_rejected = 0;     // pairwise-feasible, not a subsystem
    std::size_t solutions = 0;
};

std::vector<CanonicalGram> enumerate_p1_grams(std::size_t q, EnumerationStats& stats);

// Result of the rank-8 half-sign classification: the unique Gram matrix of
// eight generators whose product-one sign class is an admissible subsystem,
// derived by propagating the two q=4 candidates across all pair partitions.
// The trace records the branch eliminations, including the clash between a
// forced 1/16 scalar product and forced orthogonality that kills the
// coupled branch.
struct HalfSignClassification {
    CanonicalGram gram;
    std::vector<std::string> trace;
    std::size_t m0_eliminations = 0;
};

HalfSignClassification classify_halfsign_q8();

enum class BoundCase { P1, P2, P3, P4 };

std::string bound_case_name(BoundCase c);
BoundCase bound_case_from_name(const std::string& name);

// Feasibility data for one configuration family: either an enumeration run
// at fixed q, or a maximal-q bound with its justification.
struct FeasibilityReport {
    std::string case_id;
    std::size_t q = 0;  // the maximal feasible q for bound reports
    bool alpha_nonzero = false;
    bool feasible = false;
    std::vector<CanonicalGram> solutions;  // witnesses at the maximal q
    std::vector<std::string> trace;
};

// Maximal feasible q for each configuration family, with machine-checked
// justification: the exact sum inequality for the full sign set, the
// half-sign embedding for the odd-q family, and the pairing reduction for
// the even-q families, each cross-validated by the emptiness of the q = 5
// enumeration.
FeasibilityReport prop34_bound(BoundCase c, bool alpha_nonzero);

// Enumeration wrapped as a FeasibilityReport (feasible iff nonempty).
FeasibilityReport enumeration_report(std::size_t q);

}  // namespace roots::gram
