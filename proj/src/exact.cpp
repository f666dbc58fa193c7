#include "roots/exact.hpp"

#include "roots/linalg.hpp"

#include <stdexcept>

namespace roots {

GramMatrix::GramMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Rational(0)) {
    if (dim == 0)
        throw std::invalid_argument("GramMatrix: dimension must be positive");
}

GramMatrix GramMatrix::identity_scaled(std::size_t dim, const Rational& scale) {
    GramMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        g.set(i, i, scale);
    return g;
}

GramMatrix GramMatrix::diagonal(const Vec& entries) {
    GramMatrix g(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        g.set(i, i, entries[i]);
    return g;
}

GramMatrix GramMatrix::from_rows(const std::vector<Vec>& rows) {
    GramMatrix g(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("GramMatrix: rows do not form a square matrix");
        for (std::size_t j = i; j < rows.size(); ++j) {
            if (rows[j][i] != rows[i][j])
                throw std::invalid_argument("GramMatrix: matrix is not symmetric");
            g.set(i, j, rows[i][j]);
        }
    }
    return g;
}

const Rational& GramMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_)
        throw std::out_of_range("GramMatrix::at: index out of range");
    return entries_[i * dim_ + j];
}

void GramMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= dim_ || j >= dim_)
        throw std::out_of_range("GramMatrix::set: index out of range");
    if (i != j) {
        const bool was_zero = entries_[i * dim_ + j] == 0;
        const bool is_zero = value == 0;
        if (was_zero && !is_zero)
            offdiag_nonzero_ += 2;
        else if (!was_zero && is_zero)
            offdiag_nonzero_ -= 2;
    }
    entries_[i * dim_ + j] = value;
    entries_[j * dim_ + i] = value;
}

std::vector<Vec> GramMatrix::rows() const {
    std::vector<Vec> result(dim_, Vec(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            result[i][j] = entries_[i * dim_ + j];
    return result;
}

Rational GramMatrix::trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < dim_; ++i)
        t += entries_[i * dim_ + i];
    return t;
}

bool GramMatrix::operator==(const GramMatrix& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
}

bool GramMatrix::operator<(const GramMatrix& other) const {
    if (dim_ != other.dim_)
        return dim_ < other.dim_;
    return entries_ < other.entries_;
}

SignVector::SignVector(std::vector<int8_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("SignVector: length must be >= 1");
    for (int8_t e : entries_)
        if (e != 1 && e != -1)
            throw std::invalid_argument("SignVector: entries must be +1 or -1");
}

SignVector SignVector::all_plus(std::size_t q) {
    return SignVector(std::vector<int8_t>(q, 1));
}

std::vector<SignVector> SignVector::all(std::size_t q) {
    std::vector<SignVector> result;
    result.reserve(std::size_t(1) << q);
    for (std::size_t bits = 0; bits < (std::size_t(1) << q); ++bits) {
        std::vector<int8_t> entries(q);
        for (std::size_t i = 0; i < q; ++i)
            entries[i] = (bits >> i) & 1 ? -1 : 1;
        result.emplace_back(std::move(entries));
    }
    return result;
}

int SignVector::product() const {
    int p = 1;
    for (int8_t e : entries_)
        p *= e;
    return p;
}

SignVector SignVector::negated() const {
    std::vector<int8_t> entries(entries_);
    for (auto& e : entries)
        e = -e;
    return SignVector(std::move(entries));
}

SignVector SignVector::flipped(std::size_t i) const {
    std::vector<int8_t> entries(entries_);
    entries.at(i) = -entries.at(i);
    return SignVector(std::move(entries));
}

Rational dot(const Vec& u, const Vec& v, const GramMatrix& g) {
    if (u.size() != g.dim() || v.size() != g.dim())
        throw std::invalid_argument("dot: vector length does not match form dimension");
    Rational result(0);
    if (g.is_diagonal()) {
        for (std::size_t i = 0; i < g.dim(); ++i) {
            if (u[i] == 0 || v[i] == 0)
                continue;
            result += u[i] * v[i] * g.at(i, i);
        }
        return result;
    }
    for (std::size_t i = 0; i < g.dim(); ++i) {
        if (u[i] == 0)
            continue;
        Rational row(0);
        for (std::size_t j = 0; j < g.dim(); ++j) {
            if (v[j] == 0)
                continue;
            row += g.at(i, j) * v[j];
        }
        result += u[i] * row;
    }
    return result;
}

bool is_psd(const GramMatrix& g) {
    const std::size_t n = g.dim();
    if (n > 20)
        throw std::invalid_argument("is_psd: dimension too large for exhaustive minors");
    // Every nonempty subset of indices gives one principal minor.
    for (std::size_t subset = 1; subset < (std::size_t(1) << n); ++subset) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if ((subset >> i) & 1)
                idx.push_back(i);
        Matrix minor = make_matrix(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                minor[a][b] = g.at(idx[a], idx[b]);
        if (determinant(std::move(minor)) < 0)
            return false;
    }
    return true;
}

PolarizationResult offdiag_from_norms(std::size_t q,
                                      const std::map<SignVector, Rational>& norms) {
    if (q == 0)
        throw std::invalid_argument("offdiag_from_norms: q must be >= 1");
    const auto all = SignVector::all(q);
    if (norms.size() != all.size())
        throw std::invalid_argument("offdiag_from_norms: assignment must cover all 2^q sign vectors");
    for (const auto& sv : all) {
        auto it = norms.find(sv);
        if (it == norms.end())
            throw std::invalid_argument("offdiag_from_norms: assignment must cover all 2^q sign vectors");
        if (norms.at(sv.negated()) != it->second)
            throw std::invalid_argument("offdiag_from_norms: N(e) != N(-e)");
    }

    PolarizationResult result{GramMatrix(q), Rational(0)};
    const Rational scale = make_rational(1, Int(1) << (q + 1));
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i + 1; j < q; ++j) {
            Rational sum(0);
            for (const auto& sv : all)
                sum += Rational(sv.at(i) * sv.at(j)) * norms.at(sv);
            result.off_diagonal.set(i, j, scale * sum);
        }
    }
    Rational total(0);
    for (const auto& sv : all)
        total += norms.at(sv);
    result.trace = make_rational(1, Int(1) << q) * total;
    return result;
}

}  // namespace roots
