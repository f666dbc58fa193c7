#pragma once

#include "roots/rootset.hpp"

#include <cstdint>
#include <vector>

namespace roots::weights {

enum class FieldKind { Real, Complex, Quaternion };

std::string field_name(FieldKind k);

// Matrix-algebra data of the even real Clifford algebra in rank r: the
// coefficient field, the module dimension n_r, and whether the algebra
// splits into two inequivalent modules (r divisible by 4).
struct CliffordInfo {
    std::size_t r = 0;
    FieldKind field_kind = FieldKind::Real;
    Int n_r;
    bool split = false;
};

CliffordInfo clifford_info(std::size_t r);

// Sign patterns of the (half-)spin weights: all 2^q tuples for r = 2q+1;
// for r = 2q the product +1 class, plus the product -1 class as the minus
// half when q is even.
struct SpinWeightSigns {
    std::size_t q = 0;
    std::vector<SignVector> plus_half;            // all of them when r is odd
    std::vector<SignVector> minus_half;           // nonempty only for r = 2q, q even
    bool is_full_set = false;                     // true for odd r
};

SpinWeightSigns spin_weight_signs(std::size_t r);

enum class Shape { I, II, III, IV };

std::string shape_name(Shape s);
Shape shape_from_name(const std::string& name);

struct DuplicateWeightError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A weight configuration: translation vectors A (and Gamma for the split
// shapes) plus the q generators B, all expressed over one basis form.
//   I   : W = A + { sum e_j b_j : all sign tuples },        r = 2q+1
//   II  : W = { (prod e) a + sum e_j b_j : a-orbit pairs },  r = 2q, q odd
//   III : W = (A + even class) u (Gamma + odd class),        r = 2q, q = 2 mod 4
//   IV  : same as III,                                       r = 2q, q = 0 mod 4
// A and Gamma are stored symmetrically (A = -A) for shapes I, III, IV; the
// shape II orbit is symmetric on its own, so A is deduped into +/- pairs
// there and each pair contributes a single orbit.
struct WeightConfig {
    Shape shape = Shape::I;
    GramMatrix basis_form;
    std::vector<Vec> A;
    std::vector<Vec> Gamma;  // shapes III/IV only
    std::vector<Vec> B;      // the q generators

    std::size_t q() const { return B.size(); }
};

// Checks the structural invariants of cfg and assembles W. Throws
// DuplicateWeightError when members collide (weights must be simple) and
// std::invalid_argument on shape/parity violations or zero weights.
RootSet build_weights(const WeightConfig& cfg);

}  // namespace roots::weights
