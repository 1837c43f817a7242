#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlower/corpus.hpp"
#include "dlower/data.hpp"
#include "dlower/matrix.hpp"
#include "dlower/recurrence.hpp"
#include "dlower/report.hpp"
#include "dlower/verify.hpp"

namespace dlower {

using Json = nlohmann::ordered_json;

/// Malformed JSON payload (wrong shape, bad scalar text).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"a": [...], "b": [...]}
Json to_json(const Data& d);
Data data_from_json(const Json& j);

/// {"basis": ..., "rows": [[...], ...]}
Json to_json(const OperatorMatrix& m);
Json to_json(const Matrix& m);

/// {"verdict", "cases", "witness"}
Json to_json(const Classification& c);
/// The classification plus "dim" and "agree".
Json to_json(const CrossCheck& c);

/// [{"identity", "status", "first_mismatch"}, ...]
Json to_json(const Report& r);

/// [{"kind", "a", "b"}, ...]
Json to_json(const std::vector<CorpusEntry>& corpus);
std::vector<CorpusEntry> corpus_from_json(const Json& j);

Json parse_json(const std::string& text);

}  // namespace dlower
