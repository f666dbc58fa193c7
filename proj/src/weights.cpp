#include "roots/weights.hpp"

#include <algorithm>
#include <set>

namespace roots::weights {

namespace {

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vec negated(const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = -v[i];
    return out;
}

bool symmetric_set(const std::vector<Vec>& vs) {
    std::set<Vec> index(vs.begin(), vs.end());
    return std::all_of(vs.begin(), vs.end(),
                       [&](const Vec& v) { return index.count(negated(v)) > 0; });
}

Vec combine(const Vec& base, const SignVector& signs, const std::vector<Vec>& b) {
    Vec out = base;
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] += Rational(signs.at(j)) * b[j][k];
    return out;
}

}  // namespace

std::string field_name(FieldKind k) {
    switch (k) {
        case FieldKind::Real: return "R";
        case FieldKind::Complex: return "C";
        case FieldKind::Quaternion: return "H";
    }
    return "?";
}

CliffordInfo clifford_info(std::size_t r) {
    if (r < 2)
        throw std::invalid_argument("clifford_info: r must be >= 2");
    CliffordInfo info;
    info.r = r;
    switch (r % 8) {
        case 0: case 1: case 7: info.field_kind = FieldKind::Real; break;
        case 2: case 6: info.field_kind = FieldKind::Complex; break;
        default: info.field_kind = FieldKind::Quaternion; break;
    }
    // Write r = 8k + q with 1 <= q <= 8; the module dimension follows the
    // 8-periodic ladder 1,1,1,1,2,4,8,8 scaled by 16^k.
    const std::size_t q = (r - 1) % 8 + 1;
    const std::size_t k = (r - q) / 8;
    static const int ladder[9] = {0, 1, 1, 1, 1, 2, 4, 8, 8};
    info.n_r = Int(ladder[q]) << (4 * k);
    info.split = (r % 4 == 0);
    return info;
}

SpinWeightSigns spin_weight_signs(std::size_t r) {
    if (r < 2)
        throw std::invalid_argument("spin_weight_signs: r must be >= 2");
    SpinWeightSigns out;
    if (r % 2 == 1) {
        out.q = (r - 1) / 2;
        out.plus_half = SignVector::all(out.q);
        out.is_full_set = true;
        return out;
    }
    out.q = r / 2;
    for (const auto& sv : SignVector::all(out.q)) {
        if (sv.product() == 1)
            out.plus_half.push_back(sv);
        else if (out.q % 2 == 0)
            out.minus_half.push_back(sv);
    }
    return out;
}

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::I: return "I";
        case Shape::II: return "II";
        case Shape::III: return "III";
        case Shape::IV: return "IV";
    }
    return "?";
}

Shape shape_from_name(const std::string& name) {
    if (name == "I") return Shape::I;
    if (name == "II") return Shape::II;
    if (name == "III") return Shape::III;
    if (name == "IV") return Shape::IV;
    throw std::invalid_argument("unknown shape '" + name + "'");
}

RootSet build_weights(const WeightConfig& cfg) {
    const std::size_t q = cfg.q();
    if (q == 0)
        throw std::invalid_argument("build_weights: no generators");
    for (const auto& b : cfg.B)
        if (b.size() != cfg.basis_form.dim() || is_zero(b))
            throw std::invalid_argument("build_weights: generators must be nonzero vectors of the ambient dimension");
    for (const auto* set : {&cfg.A, &cfg.Gamma})
        for (const auto& a : *set)
            if (a.size() != cfg.basis_form.dim())
                throw std::invalid_argument("build_weights: translation vector dimension mismatch");
    if (cfg.A.empty())
        throw std::invalid_argument("build_weights: A must be nonempty");

    const bool has_zero_a = std::any_of(cfg.A.begin(), cfg.A.end(), is_zero);
    const bool has_zero_gamma = std::any_of(cfg.Gamma.begin(), cfg.Gamma.end(), is_zero);

    switch (cfg.shape) {
        case Shape::I:
            if (!symmetric_set(cfg.A))
                throw std::invalid_argument("shape I requires A = -A");
            if ((q % 4 == 1 || q % 4 == 2) && has_zero_a)
                throw std::invalid_argument("shape I with q = 1,2 mod 4 forbids zero translation vectors");
            if (!cfg.Gamma.empty())
                throw std::invalid_argument("shape I takes no Gamma");
            break;
        case Shape::II:
            if (q % 2 != 1)
                throw std::invalid_argument("shape II requires odd q");
            if (!cfg.Gamma.empty())
                throw std::invalid_argument("shape II takes no Gamma");
            break;
        case Shape::III:
            if (q % 4 != 2)
                throw std::invalid_argument("shape III requires q = 2 mod 4");
            if (!symmetric_set(cfg.A) || !symmetric_set(cfg.Gamma))
                throw std::invalid_argument("shapes III/IV require A = -A and Gamma = -Gamma");
            if (has_zero_a || has_zero_gamma)
                throw std::invalid_argument("shape III forbids zero translation vectors");
            break;
        case Shape::IV:
            if (q % 4 != 0)
                throw std::invalid_argument("shape IV requires q = 0 mod 4");
            if (!symmetric_set(cfg.A) || !symmetric_set(cfg.Gamma))
                throw std::invalid_argument("shapes III/IV require A = -A and Gamma = -Gamma");
            break;
    }

    std::set<Vec> members;
    std::size_t expected = 0;
    auto emit = [&](Vec w) {
        if (is_zero(w))
            throw std::invalid_argument("build_weights: a weight is the zero vector");
        members.insert(std::move(w));
        ++expected;
    };

    const auto all_signs = SignVector::all(q);
    switch (cfg.shape) {
        case Shape::I:
            for (const auto& a : cfg.A)
                for (const auto& sv : all_signs)
                    emit(combine(a, sv, cfg.B));
            break;
        case Shape::II: {
            // The orbit of a and of -a coincide up to the global sign tied to
            // prod(e), so A is deduped into +/- pairs, one orbit per pair.
            std::vector<Vec> reps;
            std::set<Vec> seen;
            for (const auto& a : cfg.A) {
                if (seen.count(a))
                    continue;
                seen.insert(a);
                seen.insert(negated(a));
                reps.push_back(a);
            }
            for (const auto& a : reps) {
                for (const auto& sv : all_signs) {
                    Vec base = sv.product() == 1 ? a : negated(a);
                    emit(combine(base, sv, cfg.B));
                }
            }
            break;
        }
        case Shape::III:
        case Shape::IV:
            for (const auto& sv : all_signs) {
                if (sv.product() == 1) {
                    for (const auto& a : cfg.A)
                        emit(combine(a, sv, cfg.B));
                } else {
                    for (const auto& g : cfg.Gamma)
                        emit(combine(g, sv, cfg.B));
                }
            }
            break;
    }

    if (members.size() != expected)
        throw DuplicateWeightError("build_weights: weights collide (" +
                                   std::to_string(members.size()) + " distinct of " +
                                   std::to_string(expected) + "); weights must be simple");

    return RootSet(cfg.basis_form, std::vector<Vec>(members.begin(), members.end()));
}

}  // namespace roots::weights
