#pragma once

#include "roots/rootset.hpp"

#include <string>
#include <vector>

namespace roots::catalog {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

struct SystemId {
    Family family;
    std::size_t rank;
    Rational scale;  // norm of the long root in the presented set

    bool operator==(const SystemId& other) const {
        return family == other.family && rank == other.rank && scale == other.scale;
    }
    std::string name() const;  // e.g. "D4"
};

struct ComponentId {
    SystemId id;
    std::size_t roots;
};

struct IdentificationResult {
    std::vector<ComponentId> components;
    std::size_t total_roots = 0;
};

struct UnrecognizedSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True for the (family, rank) pairs this catalog builds: A_n (n>=1),
// B_n (n>=2), C_n (n>=3, C2 is presented as B2), D_n (n>=3), E6..E8, F4, G2.
bool is_valid(Family family, std::size_t rank);

// Standard integer/half-integer coordinate realization with the identity
// bilinear form; A_n lives in the sum-zero hyperplane of dimension n+1.
RootSet build(Family family, std::size_t rank);

// Number of roots of each system, from the classical count formulas.
std::size_t root_count(Family family, std::size_t rank);

// Decomposes into irreducible components and names each one. The
// fingerprint (span rank, root count, norm-ratio histogram) identifies every
// type of rank <= 8; B/C are separated by their long/short counts. Low-rank
// coincidences resolve to one canonical name: D2 -> A1 x A1, D3 -> A3,
// B1/C1 -> A1, C2 -> B2. Throws UnrecognizedSystemError when nothing
// matches.
IdentificationResult identify(const RootSet& s);

}  // namespace roots::catalog
