#include "dlower/json_io.hpp"

namespace dlower {

namespace {

std::vector<Scalar> scalars_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw InputError(std::string("missing array \"") + key + "\"");
    std::vector<Scalar> out;
    for (const auto& v : j.at(key)) out.push_back(scalar_from_json(v));
    return out;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

Json triple_to_json(const ParameterTriple& t) {
    return Json{{"beta", to_json(t.beta)}, {"gamma", to_json(t.gamma)}, {"rho", to_json(t.rho)}};
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
    try {
        if (j.is_string()) return parse_scalar(j.get<std::string>());
        if (j.is_number_integer()) return Scalar(j.get<long>());
    } catch (const ParseError& e) {
        throw InputError(e.what());
    }
    throw InputError("expected a scalar string like \"p/q\", got " + j.dump());
}

Json to_json(const Data& d) { return Json{{"a", scalars_to_json(d.a())}, {"b", scalars_to_json(d.b())}}; }

Data data_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("data must be an object with arrays \"a\" and \"b\"");
    auto a = scalars_from_json(j, "a");
    auto b = scalars_from_json(j, "b");
    if (a.size() != b.size()) throw InputError("arrays \"a\" and \"b\" differ in length");
    if (a.empty()) throw InputError("data must have N >= 1");
    return {std::move(a), std::move(b)};
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const OperatorMatrix& m) { return Json{{"basis", to_string(m.basis)}, {"rows", to_json(m.matrix)}}; }

Json to_json(const Classification& c) {
    Json cases = Json::array();
    Json witness = Json::object();
    for (const auto& hit : c.cases) {
        const std::string name = to_string(hit.kind);
        cases.push_back(name);
        Json w = Json::object();
        if (hit.theta) w["theta"] = to_json(*hit.theta);
        if (hit.triple) w = triple_to_json(*hit.triple);
        witness[name] = std::move(w);
    }
    return Json{{"verdict", to_string(c.verdict)}, {"cases", std::move(cases)}, {"witness", std::move(witness)}};
}

Json to_json(const CrossCheck& c) {
    Json out = to_json(c.classification);
    out["dim"] = c.dim;
    out["agree"] = c.agree;
    return out;
}

Json to_json(const Report& r) {
    Json out = Json::array();
    for (const auto& e : r) {
        Json mm = nullptr;
        if (e.first_mismatch) mm = Json::array({e.first_mismatch->first, e.first_mismatch->second});
        out.push_back(Json{{"identity", e.identity}, {"status", e.pass ? "pass" : "fail"}, {"first_mismatch", mm}});
    }
    return out;
}

Json to_json(const std::vector<CorpusEntry>& corpus) {
    Json out = Json::array();
    for (const auto& e : corpus) {
        out.push_back(Json{{"kind", to_string(e.kind)}, {"a", scalars_to_json(e.data.a())}, {"b", scalars_to_json(e.data.b())}});
    }
    return out;
}

std::vector<CorpusEntry> corpus_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("corpus must be a JSON array");
    std::vector<CorpusEntry> out;
    for (const auto& e : j) {
        if (!e.contains("kind") || !e.at("kind").is_string()) throw InputError("corpus entry without \"kind\"");
        try {
            out.push_back({parse_corpus_kind(e.at("kind").get<std::string>()), data_from_json(e)});
        } catch (const std::invalid_argument& ex) {
            throw InputError(ex.what());
        }
    }
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace dlower
