#pragma once

#include "roots/exact.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace roots {

// Raised when a candidate set cannot sit inside any root system (an
// integrality or multiple-of-a-root violation surfaces during closure).
struct NotASubsystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a closure would grow past its size guard; signals malformed
// input rather than a genuine root system.
struct SizeExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Axiom { R1, R2, R3, R4 };

std::string axiom_name(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    std::vector<Vec> witness;          // offending vectors; for R4 the last entry
                                       // is the reflected image that escapes the set
    std::optional<Rational> ratio;     // the non-integer ratio, for R3
    std::string describe() const;
};

struct RootSystemCheck {
    bool ok = false;
    std::vector<AxiomViolation> violations;
};

// A finite set of nonzero rational coordinate vectors sharing one bilinear
// form. Vectors are kept sorted lexicographically and pairwise distinct;
// scalar products are cached on construction.
class RootSet {
public:
    RootSet(GramMatrix basis_form, std::vector<Vec> vectors);

    const GramMatrix& basis_form() const { return form_; }
    const std::vector<Vec>& vectors() const { return vectors_; }
    std::size_t size() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }

    const Rational& product(std::size_t i, std::size_t j) const;
    const Rational& norm(std::size_t i) const { return product(i, i); }

    bool contains(const Vec& v) const;
    std::optional<std::size_t> index_of(const Vec& v) const;

    // Rank of the span of the set, measured through the form (not through
    // the ambient coordinates).
    std::size_t span_rank() const;

    // Set operations; both arguments must share the same form.
    RootSet set_union(const RootSet& other) const;
    RootSet set_difference(const RootSet& other) const;

private:
    friend RootSet closure(const RootSet&, std::size_t);
    struct Trusted {};
    RootSet(Trusted, GramMatrix basis_form, std::vector<Vec> vectors);
    void build_cache();

    GramMatrix form_;
    std::vector<Vec> vectors_;
    std::vector<Rational> products_;  // row-major size() x size()
};

inline constexpr std::size_t kDefaultClosureMaxSize = 512;

// s_alpha(v) = v - (2<alpha,v>/<alpha,alpha>) alpha. Throws if alpha has
// zero norm (in particular if alpha = 0).
Vec reflect(const Vec& alpha, const Vec& v, const GramMatrix& g);

// Checks the four root-system axioms. The span axiom is evaluated against
// the span of the set itself (rank of its Gram matrix), so ambient bases may
// be larger than the span.
RootSystemCheck is_root_system(const RootSet& s);

// Least superset of p closed under all of its own reflections. Iteration is
// a worklist fixpoint in lexicographic order, so the result and any trace of
// it are reproducible. Throws NotASubsystemError if an integrality or
// multiple violation is generated, SizeExceededError past max_size.
RootSet closure(const RootSet& p, std::size_t max_size = kDefaultClosureMaxSize);

// Partition into irreducible components: transitive closure of
// non-orthogonality. Classes are mutually orthogonal and are returned in
// lexicographic order of their least member.
std::vector<RootSet> components(const RootSet& s);

struct NormalizeResult {
    RootSet set;                 // same coordinates, componentwise-rescaled form
    std::vector<Rational> factors;  // factor applied to the form per component
};

// Rescales the form on each component span so the maximal norm per
// component becomes 1. Coordinates are untouched.
NormalizeResult normalize(const RootSet& s);

struct AdmissibilityResult {
    bool admissible = false;
    RootSet complement;  // closure(p) \ p, returned in both cases
    RootSystemCheck complement_check;
};

// p is admissible when closure(p) \ p is itself a root system (within its
// own span).
AdmissibilityResult is_admissible(const RootSet& p,
                                  std::size_t max_size = kDefaultClosureMaxSize);

}  // namespace roots
