#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cedual/ce_complex.hpp"
#include "cedual/duality.hpp"
#include "cedual/lie.hpp"
#include "cedual/lubin_tate.hpp"
#include "cedual/signs.hpp"

namespace cedual::io {

using Json = nlohmann::json;

/// Malformed document content: bad rationals, wrong shapes, missing fields.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Scalar& x);
Json to_json(const Matrix& m);
Json to_json(const OrderedInjection& phi);
Json to_json(const CohomologyReport& h);
Json to_json(const DualityReport& r);
Json to_json(const LTContext& ctx, const TruncatedSeries& f);
Json to_json(const LaurentPoly& f);

/// Accepts "p/q" strings and JSON integers.
Scalar scalar_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

struct NormQuery {
    LaurentPoly poly;
    std::optional<Scalar> t;
    std::optional<Scalar> r;
    std::optional<Scalar> s;
};

struct LTSection {
    unsigned long p = 2;
    unsigned long q = 2;
    std::optional<Scalar> pi;
    unsigned N = 2;
    Scalar u = 1;
    std::vector<NormQuery> norms;
};

struct ModuleSection {
    enum class Kind { explicit_action, adjoint, trivial };
    Kind kind = Kind::trivial;
    std::size_t dim = 1;
    std::vector<Matrix> action;
};

struct GroupSection {
    std::vector<AutomorphismPair> automorphisms;
    std::optional<FiniteGroupRep> finite;
};

/// The parsed problem document. Indices are 1-based in JSON, 0-based here.
struct ProblemDocument {
    std::optional<std::string> task;
    std::optional<LieAlgebra> algebra;
    std::optional<ModuleSection> module;
    std::optional<GroupSection> group;
    std::optional<LTSection> lt;
};

/// Throws SchemaError on structural problems. Does not run validators.
ProblemDocument parse_document(const Json& j);

/// Canonical form: scalars as strings, keys sorted, zero brackets dropped.
Json serialize_document(const ProblemDocument& doc);

/// Builds the representation described by the algebra and module sections.
Representation representation(const ProblemDocument& doc);

} // namespace cedual::io
