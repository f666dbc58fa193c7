#pragma once

#include "roots/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace roots {

// Symmetric rational matrix of scalar products. Symmetry is maintained by
// construction: set() always writes both mirror entries.
class GramMatrix {
public:
    GramMatrix() : GramMatrix(1) {}
    explicit GramMatrix(std::size_t dim);
    static GramMatrix identity_scaled(std::size_t dim, const Rational& scale);
    static GramMatrix diagonal(const Vec& entries);
    static GramMatrix from_rows(const std::vector<Vec>& rows);

    std::size_t dim() const { return dim_; }
    const Rational& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& value);

    std::vector<Vec> rows() const;
    Rational trace() const;
    bool is_diagonal() const { return offdiag_nonzero_ == 0; }

    bool operator==(const GramMatrix& other) const;
    bool operator<(const GramMatrix& other) const;  // lexicographic, row-major

private:
    std::size_t dim_;
    std::vector<Rational> entries_;  // row-major
    std::size_t offdiag_nonzero_ = 0;
};

// A q-tuple over {+1, -1}.
class SignVector {
public:
    explicit SignVector(std::vector<int8_t> entries);
    static SignVector all_plus(std::size_t q);
    // Enumerates all 2^q sign vectors in a fixed (bit-pattern) order.
    static std::vector<SignVector> all(std::size_t q);

    std::size_t size() const { return entries_.size(); }
    int at(std::size_t i) const { return entries_[i]; }
    int product() const;
    SignVector negated() const;
    SignVector flipped(std::size_t i) const;

    bool operator==(const SignVector& other) const { return entries_ == other.entries_; }
    bool operator<(const SignVector& other) const { return entries_ < other.entries_; }

private:
    std::vector<int8_t> entries_;
};

// u^T g v, evaluated through the basis bilinear form. Throws on any
// dimension mismatch.
Rational dot(const Vec& u, const Vec& v, const GramMatrix& g);

inline Rational norm2(const Vec& u, const GramMatrix& g) { return dot(u, u, g); }

// True iff every principal minor of g is >= 0, i.e. g is the Gram matrix of
// some real vectors. Checks all 2^dim - 1 principal minors, not just the
// leading ones; leading minors alone do not certify semidefiniteness.
bool is_psd(const GramMatrix& g);

// Polarization: recovers the off-diagonal entries of a symmetric matrix from
// the norms of its sign combinations,
//     g_ij = 2^{-q-1} * sum_e e_i e_j N(e)   (i != j).
// The diagonal is not recoverable this way (e_i e_i = 1 erases it); only the
// trace survives, returned separately.
struct PolarizationResult {
    GramMatrix off_diagonal;  // diagonal entries are zero and carry no meaning
    Rational trace;
};

PolarizationResult offdiag_from_norms(std::size_t q, const std::map<SignVector, Rational>& norms);

}  // namespace roots
