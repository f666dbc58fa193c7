#include "roots/json_io.hpp"

#include <fstream>
#include <map>

namespace roots::io {

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer())
            return Rational(Int(j.get<long long>()));
        if (j.is_string())
            return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected an integer or a rational string, got " + j.dump());
}

json gram_to_json(const GramMatrix& g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.dim(); ++j)
            row.push_back(rational_to_json(g.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

GramMatrix gram_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": expected a nonempty array of rows");
    const std::size_t dim = j.size();
    GramMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (!j[r].is_array() || j[r].size() != dim)
            throw ParseError(where + "[" + std::to_string(r) + "]: expected a row of length " +
                             std::to_string(dim));
        for (std::size_t c = 0; c < dim; ++c) {
            Rational v = rational_from_json(
                j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
            if (c < r && g.at(r, c) != v)
                throw ParseError(where + ": matrix is not symmetric at (" + std::to_string(r) +
                                 "," + std::to_string(c) + ")");
            g.set(r, c, v);
        }
    }
    return g;
}

namespace {

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(rational_to_json(x));
    return out;
}

Vec vec_from_json(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(where + ": expected a vector of length " + std::to_string(dim));
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

std::vector<Vec> vec_list_from_json(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array())
        throw ParseError(where + ": expected an array of vectors");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(vec_from_json(j[i], dim, where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

json rootset_to_json(const RootSet& s, bool with_norms) {
    json out;
    out["basis_gram"] = gram_to_json(s.basis_form());
    json vectors = json::array();
    for (const auto& v : s.vectors())
        vectors.push_back(vec_to_json(v));
    out["vectors"] = std::move(vectors);
    if (with_norms) {
        std::map<Rational, std::size_t> counts;
        for (std::size_t i = 0; i < s.size(); ++i)
            ++counts[s.norm(i)];
        json norms = json::array();
        for (const auto& [norm, count] : counts)
            norms.push_back(json{{"count", count}, {"norm", rational_to_json(norm)}});
        out["norms"] = std::move(norms);
    }
    return out;
}

RootSet rootset_from_json(const json& j, const std::string& where) {
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    if (!j.contains("basis_gram"))
        throw ParseError(where + ": missing \"basis_gram\"");
    if (!j.contains("vectors"))
        throw ParseError(where + ": missing \"vectors\"");
    GramMatrix form = gram_from_json(j["basis_gram"], where + ".basis_gram");
    auto vectors = vec_list_from_json(j["vectors"], form.dim(), where + ".vectors");
    try {
        return RootSet(std::move(form), std::move(vectors));
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json identification_to_json(const catalog::IdentificationResult& id) {
    json comps = json::array();
    std::vector<json> items;
    for (const auto& c : id.components) {
        items.push_back(json{{"family", std::string(1, static_cast<char>(c.id.family))},
                             {"rank", c.id.rank},
                             {"roots", c.roots},
                             {"scale", rational_to_json(c.id.scale)}});
    }
    std::sort(items.begin(), items.end(),
              [](const json& a, const json& b) { return a.dump() < b.dump(); });
    for (auto& item : items)
        comps.push_back(std::move(item));
    json out;
    out["components"] = std::move(comps);
    out["total_roots"] = id.total_roots;
    return out;
}

json weight_config_to_json(const weights::WeightConfig& cfg) {
    json out;
    out["shape"] = weights::shape_name(cfg.shape);
    out["basis_gram"] = gram_to_json(cfg.basis_form);
    json a = json::array();
    for (const auto& v : cfg.A)
        a.push_back(vec_to_json(v));
    out["A"] = std::move(a);
    json g = json::array();
    for (const auto& v : cfg.Gamma)
        g.push_back(vec_to_json(v));
    out["Gamma"] = std::move(g);
    json b = json::array();
    for (const auto& v : cfg.B)
        b.push_back(vec_to_json(v));
    out["vectors"] = std::move(b);
    return out;
}

weights::WeightConfig weight_config_from_json(const json& j, const std::string& where) {
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    for (const char* key : {"shape", "basis_gram", "A", "vectors"})
        if (!j.contains(key))
            throw ParseError(where + ": missing \"" + std::string(key) + "\"");
    weights::WeightConfig cfg;
    if (!j["shape"].is_string())
        throw ParseError(where + ".shape: expected a string");
    try {
        cfg.shape = weights::shape_from_name(j["shape"].get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where + ".shape: " + e.what());
    }
    cfg.basis_form = gram_from_json(j["basis_gram"], where + ".basis_gram");
    const std::size_t dim = cfg.basis_form.dim();
    cfg.A = vec_list_from_json(j["A"], dim, where + ".A");
    if (j.contains("Gamma"))
        cfg.Gamma = vec_list_from_json(j["Gamma"], dim, where + ".Gamma");
    cfg.B = vec_list_from_json(j["vectors"], dim, where + ".vectors");
    return cfg;
}

json report_to_json(const verify::Report& r) {
    json steps = json::array();
    for (const auto& s : r.steps) {
        json step;
        step["assertion"] = s.assertion;
        step["checked"] = s.checked;
        step["op"] = s.op;
        step["passed"] = s.passed;
        steps.push_back(std::move(step));
    }
    json artifacts = json::object();
    for (const auto& [name, value] : r.artifacts) {
        if (std::holds_alternative<RootSet>(value))
            artifacts[name] = rootset_to_json(std::get<RootSet>(value));
        else if (std::holds_alternative<GramMatrix>(value))
            artifacts[name] = gram_to_json(std::get<GramMatrix>(value));
        else if (std::holds_alternative<catalog::IdentificationResult>(value))
            artifacts[name] = identification_to_json(std::get<catalog::IdentificationResult>(value));
        else
            artifacts[name] = std::get<std::string>(value);
    }
    json out;
    out["artifacts"] = std::move(artifacts);
    out["claim"] = r.claim;
    out["kind"] = r.kind;
    out["status"] = verify::status_name(r.status);
    out["steps"] = std::move(steps);
    return out;
}

json aggregate_to_json(const verify::Aggregate& agg) {
    json reports = json::array();
    for (const auto& r : agg.reports)
        reports.push_back(report_to_json(r));
    json out;
    out["all_expected"] = agg.all_expected;
    out["reports"] = std::move(reports);
    return out;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
}

}  // namespace roots::io
