#include "roots/catalog.hpp"

#include <algorithm>
#include <map>

namespace roots::catalog {

namespace {

Vec unit(std::size_t dim, std::size_t i, int value = 1) {
    Vec v(dim, Rational(0));
    v[i] = value;
    return v;
}

void push_pm(std::vector<Vec>& out, const Vec& v) {
    out.push_back(v);
    Vec neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        neg[i] = -v[i];
    out.push_back(std::move(neg));
}

// All +/- e_i +/- e_j for i < j.
void push_pair_family(std::vector<Vec>& out, std::size_t dim, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) {
        for (std::size_t j = i + 1; j < upto; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    Vec v(dim, Rational(0));
                    v[i] = si;
                    v[j] = sj;
                    out.push_back(std::move(v));
                }
            }
        }
    }
}

std::vector<Vec> build_a(std::size_t n) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            if (i != j) {
                Vec v(n + 1, Rational(0));
                v[i] = 1;
                v[j] = -1;
                out.push_back(std::move(v));
            }
    return out;
}

std::vector<Vec> build_e8() {
    std::vector<Vec> out;
    push_pair_family(out, 8, 8);
    for (std::size_t bits = 0; bits < 256; ++bits) {
        if (__builtin_popcount(static_cast<unsigned>(bits)) % 2 != 0)
            continue;
        Vec v(8);
        for (std::size_t i = 0; i < 8; ++i)
            v[i] = (bits >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> build_e7() {
    std::vector<Vec> out;
    push_pair_family(out, 8, 6);
    {
        Vec v(8, Rational(0));
        v[6] = 1;
        v[7] = -1;
        push_pm(out, v);
    }
    for (std::size_t bits = 0; bits < 64; ++bits) {
        if (__builtin_popcount(static_cast<unsigned>(bits)) % 2 != 1)
            continue;
        Vec v(8);
        for (std::size_t i = 0; i < 6; ++i)
            v[i] = (bits >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
        v[6] = Rational(1, 2);
        v[7] = Rational(-1, 2);
        push_pm(out, v);
    }
    return out;
}

std::vector<Vec> build_e6() {
    std::vector<Vec> out;
    push_pair_family(out, 8, 5);
    for (std::size_t bits = 0; bits < 32; ++bits) {
        if (__builtin_popcount(static_cast<unsigned>(bits)) % 2 != 0)
            continue;
        Vec v(8);
        for (std::size_t i = 0; i < 5; ++i)
            v[i] = (bits >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
        v[5] = Rational(-1, 2);
        v[6] = Rational(-1, 2);
        v[7] = Rational(1, 2);
        push_pm(out, v);
    }
    return out;
}

std::vector<Vec> build_f4() {
    std::vector<Vec> out;
    push_pair_family(out, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        push_pm(out, unit(4, i));
    for (std::size_t bits = 0; bits < 16; ++bits) {
        Vec v(4);
        for (std::size_t i = 0; i < 4; ++i)
            v[i] = (bits >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> build_g2() {
    // Sum-zero realization in three coordinates: short roots e_i - e_j,
    // long roots +/-(2e_i - e_j - e_k).
    std::vector<Vec> out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) {
                Vec v(3, Rational(0));
                v[i] = 1;
                v[j] = -1;
                out.push_back(std::move(v));
            }
    for (std::size_t i = 0; i < 3; ++i) {
        Vec v(3, Rational(-1));
        v[i] = 2;
        push_pm(out, v);
    }
    return out;
}

}  // namespace

Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
    }
    throw std::invalid_argument(std::string("unknown family '") + c + "'");
}

std::string SystemId::name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool is_valid(Family family, std::size_t rank) {
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 3;
        case Family::D: return rank >= 3;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

std::size_t root_count(Family family, std::size_t rank) {
    switch (family) {
        case Family::A: return rank * (rank + 1);
        case Family::B:
        case Family::C: return 2 * rank * rank;
        case Family::D: return 2 * rank * (rank - 1);
        case Family::E: return rank == 6 ? 72 : (rank == 7 ? 126 : 240);
        case Family::F: return 48;
        case Family::G: return 12;
    }
    return 0;
}

RootSet build(Family family, std::size_t rank) {
    if (!is_valid(family, rank))
        throw std::invalid_argument("catalog: no system " +
                                    SystemId{family, rank, Rational(1)}.name());
    std::vector<Vec> vectors;
    std::size_t dim = rank;
    switch (family) {
        case Family::A:
            vectors = build_a(rank);
            dim = rank + 1;
            break;
        case Family::B:
            push_pair_family(vectors, rank, rank);
            for (std::size_t i = 0; i < rank; ++i)
                push_pm(vectors, unit(rank, i));
            break;
        case Family::C:
            push_pair_family(vectors, rank, rank);
            for (std::size_t i = 0; i < rank; ++i)
                push_pm(vectors, unit(rank, i, 2));
            break;
        case Family::D:
            push_pair_family(vectors, rank, rank);
            break;
        case Family::E:
            vectors = rank == 6 ? build_e6() : (rank == 7 ? build_e7() : build_e8());
            dim = 8;
            break;
        case Family::F:
            vectors = build_f4();
            break;
        case Family::G:
            vectors = build_g2();
            dim = 3;
            break;
    }
    return RootSet(GramMatrix::identity_scaled(dim, Rational(1)), std::move(vectors));
}

namespace {

SystemId identify_component(const RootSet& comp) {
    const std::size_t count = comp.size();
    const std::size_t rank = comp.span_rank();

    std::map<Rational, std::size_t> norm_counts;
    for (std::size_t i = 0; i < comp.size(); ++i)
        ++norm_counts[comp.norm(i)];
    if (norm_counts.empty() || norm_counts.size() > 2)
        throw UnrecognizedSystemError("component with " + std::to_string(norm_counts.size()) +
                                      " distinct root lengths");

    const Rational short_norm = norm_counts.begin()->first;
    const Rational long_norm = norm_counts.rbegin()->first;
    const Rational ratio = long_norm / short_norm;

    if (ratio == 1) {
        if (count == rank * (rank + 1))
            return {Family::A, rank, long_norm};
        if (rank >= 4 && count == 2 * rank * (rank - 1))
            return {Family::D, rank, long_norm};
        if (rank >= 6 && rank <= 8 && count == root_count(Family::E, rank))
            return {Family::E, rank, long_norm};
    } else if (ratio == 2) {
        const std::size_t n_long = norm_counts.rbegin()->second;
        const std::size_t n_short = norm_counts.begin()->second;
        if (rank == 4 && count == 48 && n_long == 24 && n_short == 24)
            return {Family::F, 4, long_norm};
        if (count == 2 * rank * rank) {
            if (n_short == 2 * rank && n_long == 2 * rank * (rank - 1))
                return {Family::B, rank, long_norm};
            if (rank >= 3 && n_long == 2 * rank && n_short == 2 * rank * (rank - 1))
                return {Family::C, rank, long_norm};
        }
    } else if (ratio == 3) {
        if (rank == 2 && count == 12 && norm_counts.begin()->second == 6 &&
            norm_counts.rbegin()->second == 6)
            return {Family::G, 2, long_norm};
    }
    throw UnrecognizedSystemError("no catalog entry matches rank " + std::to_string(rank) +
                                  ", " + std::to_string(count) + " roots, length ratio " +
                                  to_string(ratio));
}

}  // namespace

IdentificationResult identify(const RootSet& s) {
    IdentificationResult result;
    for (const auto& comp : components(s)) {
        result.components.push_back({identify_component(comp), comp.size()});
        result.total_roots += comp.size();
    }
    return result;
}

}  // namespace roots::catalog
