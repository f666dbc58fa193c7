#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roots/weights.hpp"

#include <set>

using namespace roots;
using namespace roots::weights;

namespace {

Vec unit(std::size_t dim, std::size_t i, int value = 1) {
    Vec v(dim, Rational(0));
    v[i] = value;
    return v;
}

std::vector<Vec> unit_generators(std::size_t dim, std::size_t first, std::size_t count) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(unit(dim, first + i));
    return out;
}

bool symmetric(const RootSet& s) {
    for (const auto& v : s.vectors()) {
        Vec neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            neg[i] = -v[i];
        if (!s.contains(neg))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("clifford_info follows the 8-periodic table") {
    auto info9 = clifford_info(9);
    CHECK(info9.field_kind == FieldKind::Real);
    CHECK(info9.n_r == 16);
    CHECK_FALSE(info9.split);

    auto info10 = clifford_info(10);
    CHECK(info10.field_kind == FieldKind::Complex);
    CHECK(info10.n_r == 16);
    CHECK_FALSE(info10.split);

    auto info16 = clifford_info(16);
    CHECK(info16.field_kind == FieldKind::Real);
    CHECK(info16.n_r == 128);
    CHECK(info16.split);

    // Field kinds cycle with period 8.
    const FieldKind expected[8] = {FieldKind::Real,       FieldKind::Real,
                                   FieldKind::Complex,    FieldKind::Quaternion,
                                   FieldKind::Quaternion, FieldKind::Quaternion,
                                   FieldKind::Complex,    FieldKind::Real};
    for (std::size_t r = 2; r <= 24; ++r) {
        auto info = clifford_info(r);
        CHECK(info.field_kind == expected[r % 8]);
        CHECK(info.split == (r % 4 == 0));
    }

    // Module dimensions: n_{r+8} = 16 n_r.
    for (std::size_t r = 2; r <= 16; ++r)
        CHECK(clifford_info(r + 8).n_r == 16 * clifford_info(r).n_r);

    // The low-rank ladder itself.
    CHECK(clifford_info(2).n_r == 1);
    CHECK(clifford_info(3).n_r == 1);
    CHECK(clifford_info(4).n_r == 1);
    CHECK(clifford_info(5).n_r == 2);
    CHECK(clifford_info(6).n_r == 4);
    CHECK(clifford_info(7).n_r == 8);
    CHECK(clifford_info(8).n_r == 8);
    CHECK(clifford_info(12).n_r == 16);

    CHECK_THROWS_AS(clifford_info(1), std::invalid_argument);
}

TEST_CASE("spin weight sign classes have the right cardinalities") {
    auto r5 = spin_weight_signs(5);
    CHECK(r5.q == 2);
    CHECK(r5.is_full_set);
    CHECK(r5.plus_half.size() == 4);
    CHECK(r5.minus_half.empty());

    auto r6 = spin_weight_signs(6);
    CHECK(r6.q == 3);
    CHECK_FALSE(r6.is_full_set);
    CHECK(r6.plus_half.size() == 4);
    CHECK(r6.minus_half.empty());  // odd q has a single class
    for (const auto& sv : r6.plus_half)
        CHECK(sv.product() == 1);

    auto r16 = spin_weight_signs(16);
    CHECK(r16.q == 8);
    CHECK(r16.plus_half.size() == 128);
    CHECK(r16.minus_half.size() == 128);
    for (const auto& sv : r16.minus_half)
        CHECK(sv.product() == -1);

    for (std::size_t q = 1; q <= 6; ++q)
        CHECK(spin_weight_signs(2 * q + 1).plus_half.size() == (std::size_t(1) << q));
    for (std::size_t q = 2; q <= 8; q += 2) {
        auto signs = spin_weight_signs(2 * q);
        CHECK(signs.plus_half.size() == (std::size_t(1) << (q - 1)));
        CHECK(signs.minus_half.size() == (std::size_t(1) << (q - 1)));
    }
}

TEST_CASE("shape I assembles translated full sign sets") {
    WeightConfig cfg;
    cfg.shape = Shape::I;
    cfg.basis_form = GramMatrix::identity_scaled(4, Rational(1, 4));
    cfg.A = {Vec(4, Rational(0))};
    cfg.B = unit_generators(4, 0, 4);
    auto w = build_weights(cfg);
    CHECK(w.size() == 16);
    CHECK(symmetric(w));
    for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(w.norm(i) == 1);
}

TEST_CASE("shape II realizes one orbit per translation pair") {
    WeightConfig cfg;
    cfg.shape = Shape::II;
    Vec diag{Rational(3, 4)};
    diag.insert(diag.end(), 5, Rational(1, 4));
    cfg.basis_form = GramMatrix::diagonal(diag);
    cfg.A = {unit(6, 0), unit(6, 0, -1)};
    cfg.B = unit_generators(6, 1, 5);
    auto w = build_weights(cfg);
    CHECK(w.size() == 32);
    CHECK(symmetric(w));
    // The translation sign is tied to the sign product.
    for (const auto& v : w.vectors()) {
        int prod = 1;
        for (std::size_t i = 1; i <= 5; ++i)
            prod *= v[i] > 0 ? 1 : -1;
        CHECK(Rational(prod) == v[0]);
    }
    // A single representative gives the same set.
    WeightConfig single = cfg;
    single.A = {unit(6, 0)};
    CHECK(build_weights(single).vectors() == w.vectors());
}

TEST_CASE("shapes III and IV split translations across the two sign classes") {
    WeightConfig cfg;
    cfg.shape = Shape::III;
    Vec diag{Rational(1, 4)};
    diag.insert(diag.end(), 6, Rational(1, 8));
    cfg.basis_form = GramMatrix::diagonal(diag);
    cfg.A = {unit(7, 0), unit(7, 0, -1)};
    cfg.B = unit_generators(7, 1, 6);
    auto w = build_weights(cfg);
    CHECK(w.size() == 64);
    CHECK(symmetric(w));
    for (const auto& v : w.vectors()) {
        int prod = 1;
        for (std::size_t i = 1; i <= 6; ++i)
            prod *= v[i] > 0 ? 1 : -1;
        CHECK(prod == 1);  // Gamma is empty: only the product-one class appears
    }

    WeightConfig iv;
    iv.shape = Shape::IV;
    iv.basis_form = GramMatrix::identity_scaled(8, Rational(1, 8));
    iv.A = {Vec(8, Rational(0))};
    iv.B = unit_generators(8, 0, 8);
    auto w4 = build_weights(iv);
    CHECK(w4.size() == 128);
    CHECK(symmetric(w4));
    for (std::size_t i = 0; i < w4.size(); ++i)
        CHECK(w4.norm(i) == 1);
}

TEST_CASE("weight collisions are detected, not absorbed") {
    WeightConfig cfg;
    cfg.shape = Shape::I;
    cfg.basis_form = GramMatrix::identity_scaled(4, Rational(1, 4));
    cfg.A = {unit(4, 0), unit(4, 0, -1)};  // translations parallel to a generator
    cfg.B = unit_generators(4, 0, 4);
    CHECK_THROWS_AS(build_weights(cfg), DuplicateWeightError);
}

TEST_CASE("zero weights are rejected") {
    WeightConfig cfg;
    cfg.shape = Shape::I;
    cfg.basis_form = GramMatrix::identity_scaled(3, Rational(1, 4));
    Vec sum(3, Rational(1));
    Vec neg(3, Rational(-1));
    cfg.A = {sum, neg};  // -sum + (+,+,+) collapses to zero
    cfg.B = unit_generators(3, 0, 3);
    CHECK_THROWS_AS(build_weights(cfg), std::invalid_argument);
}

TEST_CASE("shape and parity constraints are enforced") {
    WeightConfig cfg;
    cfg.basis_form = GramMatrix::identity_scaled(5, Rational(1, 4));
    cfg.B = unit_generators(5, 0, 5);

    SUBCASE("shape I with q = 1 mod 4 forbids a zero translation") {
        cfg.shape = Shape::I;
        cfg.A = {Vec(5, Rational(0))};
        CHECK_THROWS_AS(build_weights(cfg), std::invalid_argument);
    }
    SUBCASE("shape I requires A = -A") {
        cfg.shape = Shape::I;
        cfg.A = {unit(5, 0)};
        CHECK_THROWS_AS(build_weights(cfg), std::invalid_argument);
    }
    SUBCASE("shape II requires odd q") {
        WeightConfig even;
        even.shape = Shape::II;
        even.basis_form = GramMatrix::identity_scaled(4, Rational(1, 4));
        even.A = {unit(4, 0)};
        even.B = unit_generators(4, 0, 4);
        CHECK_THROWS_AS(build_weights(even), std::invalid_argument);
    }
    SUBCASE("shape III requires q = 2 mod 4 and nonzero translations") {
        WeightConfig iii;
        iii.shape = Shape::III;
        iii.basis_form = GramMatrix::identity_scaled(4, Rational(1, 4));
        iii.A = {unit(4, 0), unit(4, 0, -1)};
        iii.B = unit_generators(4, 0, 4);
        CHECK_THROWS_AS(build_weights(iii), std::invalid_argument);  // q = 4

        WeightConfig zero;
        zero.shape = Shape::III;
        zero.basis_form = GramMatrix::identity_scaled(6, Rational(1, 8));
        zero.A = {Vec(6, Rational(0))};
        zero.B = unit_generators(6, 0, 6);
        CHECK_THROWS_AS(build_weights(zero), std::invalid_argument);
    }
    SUBCASE("shape IV requires q = 0 mod 4") {
        WeightConfig iv;
        iv.shape = Shape::IV;
        iv.basis_form = GramMatrix::identity_scaled(6, Rational(1, 8));
        iv.A = {Vec(6, Rational(0))};
        iv.B = unit_generators(6, 0, 6);
        CHECK_THROWS_AS(build_weights(iv), std::invalid_argument);
    }
    SUBCASE("generators must be nonzero and dimension-consistent") {
        cfg.shape = Shape::I;
        cfg.A = {unit(5, 0), unit(5, 0, -1)};
        cfg.B = unit_generators(5, 0, 4);
        cfg.B.push_back(Vec(5, Rational(0)));
        CHECK_THROWS_AS(build_weights(cfg), std::invalid_argument);
    }
}
