#include "roots/rootset.hpp"

#include "roots/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace roots {

namespace {

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::string vec_to_string(const Vec& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out << ",";
        out << to_string(v[i]);
    }
    out << ")";
    return out.str();
}

// If u = c * v coordinatewise, returns c.
std::optional<Rational> proportionality(const Vec& u, const Vec& v) {
    std::optional<Rational> c;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            if (u[i] != 0)
                return std::nullopt;
            continue;
        }
        Rational ratio = u[i] / v[i];
        if (!c)
            c = ratio;
        else if (*c != ratio)
            return std::nullopt;
    }
    return c;
}

Vec scaled_difference(const Vec& v, const Rational& k, const Vec& alpha) {
    Vec result(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        result[i] = v[i] - k * alpha[i];
    return result;
}

}  // namespace

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::R1: return "R1";
        case Axiom::R2: return "R2";
        case Axiom::R3: return "R3";
        case Axiom::R4: return "R4";
    }
    return "?";
}

std::string AxiomViolation::describe() const {
    std::ostringstream out;
    out << axiom_name(axiom) << " violation:";
    for (const auto& v : witness)
        out << " " << vec_to_string(v);
    if (ratio)
        out << " ratio " << to_string(*ratio);
    return out.str();
}

RootSet::RootSet(GramMatrix basis_form, std::vector<Vec> vectors)
    : form_(std::move(basis_form)), vectors_(std::move(vectors)) {
    if (!is_psd(form_))
        throw std::invalid_argument("RootSet: basis form is not positive semidefinite");
    for (const auto& v : vectors_) {
        if (v.size() != form_.dim())
            throw std::invalid_argument("RootSet: vector length does not match form dimension");
        if (is_zero(v))
            throw std::invalid_argument("RootSet: the zero vector is never a member");
    }
    std::sort(vectors_.begin(), vectors_.end());
    if (std::adjacent_find(vectors_.begin(), vectors_.end()) != vectors_.end())
        throw std::invalid_argument("RootSet: duplicate vector");
    build_cache();
}

RootSet::RootSet(Trusted, GramMatrix basis_form, std::vector<Vec> vectors)
    : form_(std::move(basis_form)), vectors_(std::move(vectors)) {
    std::sort(vectors_.begin(), vectors_.end());
    build_cache();
}

void RootSet::build_cache() {
    const std::size_t n = vectors_.size();
    products_.assign(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rational p = dot(vectors_[i], vectors_[j], form_);
            products_[i * n + j] = p;
            products_[j * n + i] = p;
        }
    }
}

const Rational& RootSet::product(std::size_t i, std::size_t j) const {
    return products_.at(i * vectors_.size() + j);
}

bool RootSet::contains(const Vec& v) const {
    return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

std::optional<std::size_t> RootSet::index_of(const Vec& v) const {
    auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v);
    if (it == vectors_.end() || *it != v)
        return std::nullopt;
    return std::size_t(it - vectors_.begin());
}

std::size_t RootSet::span_rank() const {
    // Greedy extraction of a basis using only scalar products: v extends the
    // basis iff its projection residual has nonzero norm.
    std::vector<std::size_t> basis;
    for (std::size_t v = 0; v < size(); ++v) {
        if (basis.empty()) {
            if (norm(v) != 0)
                basis.push_back(v);
            continue;
        }
        Matrix gb = make_matrix(basis.size(), basis.size());
        Vec rhs(basis.size());
        for (std::size_t a = 0; a < basis.size(); ++a) {
            rhs[a] = product(basis[a], v);
            for (std::size_t b = 0; b < basis.size(); ++b)
                gb[a][b] = product(basis[a], basis[b]);
        }
        auto lambda = solve_linear(gb, rhs);
        if (!lambda) {
            basis.push_back(v);
            continue;
        }
        Rational residual = norm(v);
        for (std::size_t a = 0; a < basis.size(); ++a)
            residual -= (*lambda)[a] * product(basis[a], v);
        if (residual != 0)
            basis.push_back(v);
    }
    return basis.size();
}

RootSet RootSet::set_union(const RootSet& other) const {
    if (!(form_ == other.form_))
        throw std::invalid_argument("set_union: forms differ");
    std::vector<Vec> merged = vectors_;
    for (const auto& v : other.vectors_)
        if (!contains(v))
            merged.push_back(v);
    return RootSet(Trusted{}, form_, std::move(merged));
}

RootSet RootSet::set_difference(const RootSet& other) const {
    if (!(form_ == other.form_))
        throw std::invalid_argument("set_difference: forms differ");
    std::vector<Vec> rest;
    for (const auto& v : vectors_)
        if (!other.contains(v))
            rest.push_back(v);
    return RootSet(Trusted{}, form_, std::move(rest));
}

Vec reflect(const Vec& alpha, const Vec& v, const GramMatrix& g) {
    const Rational alpha_norm = dot(alpha, alpha, g);
    if (alpha_norm == 0)
        throw std::invalid_argument("reflect: alpha has zero norm");
    const Rational k = 2 * dot(alpha, v, g) / alpha_norm;
    return scaled_difference(v, k, alpha);
}

RootSystemCheck is_root_system(const RootSet& s) {
    RootSystemCheck check;
    constexpr std::size_t kMaxViolations = 64;
    const std::size_t n = s.size();
    std::vector<bool> degenerate(n, false);

    auto add = [&](AxiomViolation v) {
        if (check.violations.size() < kMaxViolations)
            check.violations.push_back(std::move(v));
    };

    // R1: members must be honest nonzero vectors of the geometry. The span
    // condition is relative to the set's own span, hence automatic. A member
    // with zero norm is the zero vector of the quotient geometry.
    for (std::size_t i = 0; i < n; ++i) {
        if (s.norm(i) == 0) {
            degenerate[i] = true;
            add({Axiom::R1, {s.vectors()[i]}, std::nullopt});
        }
    }

    // R2/R3 over unordered pairs.
    for (std::size_t i = 0; i < n; ++i) {
        if (degenerate[i])
            continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (degenerate[j])
                continue;
            if (auto c = proportionality(s.vectors()[i], s.vectors()[j]); c && *c != 1 && *c != -1)
                add({Axiom::R2, {s.vectors()[i], s.vectors()[j]}, *c});
            const Rational& p = s.product(i, j);
            Rational r1 = 2 * p / s.norm(i);
            Rational r2 = 2 * p / s.norm(j);
            if (!is_integer(r1))
                add({Axiom::R3, {s.vectors()[i], s.vectors()[j]}, r1});
            if (!is_integer(r2))
                add({Axiom::R3, {s.vectors()[j], s.vectors()[i]}, r2});
        }
    }

    // R4: s_alpha maps the set into itself.
    for (std::size_t a = 0; a < n && check.violations.size() < kMaxViolations; ++a) {
        if (degenerate[a])
            continue;
        for (std::size_t v = 0; v < n; ++v) {
            if (degenerate[v])
                continue;
            const Rational k = 2 * s.product(a, v) / s.norm(a);
            if (!is_integer(k))
                continue;  // already reported as R3
            Vec image = scaled_difference(s.vectors()[v], k, s.vectors()[a]);
            if (!s.contains(image)) {
                add({Axiom::R4, {s.vectors()[a], s.vectors()[v], image}, std::nullopt});
                if (check.violations.size() >= kMaxViolations)
                    break;
            }
        }
    }

    check.ok = check.violations.empty();
    return check;
}

namespace {

// Shared pair validation for closure: R2 multiples and R3 integrality.
void validate_pair(const Vec& u, const Rational& nu, const Vec& v, const Rational& nv,
                   const Rational& p) {
    if (auto c = proportionality(u, v); c && *c != 1 && *c != -1)
        throw NotASubsystemError("R2 violation: " + vec_to_string(u) + " is a non-unit multiple (" +
                                 to_string(*c) + ") of " + vec_to_string(v));
    Rational r1 = 2 * p / nu;
    Rational r2 = 2 * p / nv;
    if (!is_integer(r1) || !is_integer(r2))
        throw NotASubsystemError("R3 violation: 2<u,v>/<u,u> = " +
                                 to_string(is_integer(r1) ? r2 : r1) + " for u=" + vec_to_string(u) +
                                 ", v=" + vec_to_string(v));
}

}  // namespace

RootSet closure(const RootSet& p, std::size_t max_size) {
    if (p.empty())
        throw std::invalid_argument("closure: input set is empty");
    if (p.size() > max_size)
        throw SizeExceededError("closure: input already exceeds max_size " +
                                std::to_string(max_size));

    std::vector<Vec> members = p.vectors();
    std::set<Vec> member_index(members.begin(), members.end());
    std::vector<Rational> norms(members.size());
    // Lower-triangular product table, grown as members are appended.
    std::vector<std::vector<Rational>> prod(members.size());

    auto record_products = [&](std::size_t t) {
        prod[t].resize(t + 1);
        for (std::size_t u = 0; u <= t; ++u)
            prod[t][u] = dot(members[t], members[u], p.basis_form());
        norms[t] = prod[t][t];
        if (norms[t] == 0)
            throw NotASubsystemError("member with zero norm: " + vec_to_string(members[t]));
        for (std::size_t u = 0; u < t; ++u)
            validate_pair(members[t], norms[t], members[u], norms[u], prod[t][u]);
    };

    norms.resize(members.size());
    for (std::size_t t = 0; t < members.size(); ++t)
        record_products(t);

    std::size_t processed = 0;  // pairs with both indices below this are done
    while (true) {
        const std::size_t n = members.size();
        std::set<Vec> fresh;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                if (i < processed && j < processed)
                    continue;
                const Rational& pij = j >= i ? prod[j][i] : prod[i][j];
                auto consider = [&](const Vec& alpha, const Rational& alpha_norm, const Vec& v) {
                    const Rational k = 2 * pij / alpha_norm;
                    if (k == 0)
                        return;
                    Vec image = scaled_difference(v, k, alpha);
                    if (!member_index.count(image))
                        fresh.insert(std::move(image));
                };
                consider(members[i], norms[i], members[j]);
                if (i != j)
                    consider(members[j], norms[j], members[i]);
            }
        }
        if (fresh.empty())
            break;
        if (members.size() + fresh.size() > max_size)
            throw SizeExceededError("closure exceeds max_size " + std::to_string(max_size));
        processed = n;
        for (const auto& v : fresh) {
            if (is_zero(v))
                throw NotASubsystemError("closure generated the zero vector");
            members.push_back(v);
            member_index.insert(v);
            norms.resize(members.size());
            prod.resize(members.size());
            record_products(members.size() - 1);
        }
    }

    return RootSet(RootSet::Trusted{}, p.basis_form(), std::move(members));
}

std::vector<RootSet> components(const RootSet& s) {
    if (s.empty())
        throw std::invalid_argument("components: input set is empty");
    const std::size_t n = s.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i)
        parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (s.product(i, j) != 0)
                parent[find(i)] = find(j);

    std::map<std::size_t, std::vector<Vec>> classes;
    for (std::size_t i = 0; i < n; ++i)
        classes[find(i)].push_back(s.vectors()[i]);

    std::vector<std::vector<Vec>> ordered;
    for (auto& [root, vecs] : classes)
        ordered.push_back(std::move(vecs));
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<RootSet> result;
    result.reserve(ordered.size());
    for (auto& vecs : ordered)
        result.emplace_back(RootSet(s.basis_form(), std::move(vecs)));
    return result;
}

NormalizeResult normalize(const RootSet& s) {
    auto comps = components(s);
    std::vector<Rational> factors;
    factors.reserve(comps.size());
    bool trivial = true;
    for (const auto& c : comps) {
        Rational max_norm(0);
        for (std::size_t i = 0; i < c.size(); ++i)
            max_norm = std::max(max_norm, c.norm(i));
        factors.push_back(1 / max_norm);
        if (max_norm != 1)
            trivial = false;
    }
    if (trivial)
        return {s, std::move(factors)};

    const std::size_t dim = s.basis_form().dim();
    Matrix g = s.basis_form().rows();
    Matrix adjusted = g;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (factors[c] == 1)
            continue;
        // Projector onto the component span, orthogonal with respect to g:
        // pi = V (V^T g V)^{-1} V^T g for a basis matrix V of the span.
        std::vector<std::size_t> basis;
        for (std::size_t v = 0; v < comps[c].size(); ++v) {
            std::vector<Vec> candidate;
            for (auto b : basis)
                candidate.push_back(comps[c].vectors()[b]);
            candidate.push_back(comps[c].vectors()[v]);
            Matrix gram = make_matrix(candidate.size(), candidate.size());
            for (std::size_t a = 0; a < candidate.size(); ++a)
                for (std::size_t b = 0; b < candidate.size(); ++b)
                    gram[a][b] = dot(candidate[a], candidate[b], s.basis_form());
            if (determinant(gram) != 0)
                basis.push_back(v);
        }
        Matrix v_cols = make_matrix(dim, basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t r = 0; r < dim; ++r)
                v_cols[r][k] = comps[c].vectors()[basis[k]][r];
        Matrix vt = transpose(v_cols);
        Matrix core = matmul(matmul(vt, g), v_cols);
        auto core_inv = invert(core);
        if (!core_inv)
            throw std::logic_error("normalize: component basis Gram is singular");
        Matrix projector = matmul(matmul(v_cols, *core_inv), matmul(vt, g));
        Matrix bump = matmul(matmul(transpose(projector), g), projector);
        const Rational delta = factors[c] - 1;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                adjusted[i][j] += delta * bump[i][j];
    }
    GramMatrix new_form = GramMatrix::from_rows(adjusted);
    return {RootSet(new_form, s.vectors()), std::move(factors)};
}

AdmissibilityResult is_admissible(const RootSet& p, std::size_t max_size) {
    RootSet closed = closure(p, max_size);
    RootSet complement = closed.set_difference(p);
    if (complement.empty())
        return {true, std::move(complement), {true, {}}};
    RootSystemCheck check = is_root_system(complement);
    bool ok = check.ok;
    return {ok, std::move(complement), std::move(check)};
}

}  // namespace roots
