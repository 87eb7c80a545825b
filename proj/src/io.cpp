#include "cedual/io.hpp"

namespace cedual::io {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

std::size_t size_from_json(const Json& j, const std::string& where)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(where + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

long long int_from_json(const Json& j, const std::string& where)
{
    if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return j.get<long long>();
}

} // namespace

Json to_json(const Scalar& x) { return to_string(x); }

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const OrderedInjection& phi)
{
    return Json{{"d", phi.codomain_size()}, {"k", phi.domain_size()}, {"values", phi.values()}};
}

Json to_json(const CohomologyReport& h)
{
    Json reps = Json::array();
    for (const auto& m : h.representatives) reps.push_back(to_json(m));
    return Json{{"dims", h.dims}, {"representatives", reps}};
}

Json to_json(const DualityReport& r)
{
    Json degrees = Json::array();
    for (const auto& d : r.degrees) {
        degrees.push_back(Json{{"k", d.k},
                               {"dim_dual", d.dim_dual},
                               {"dim_primal", d.dim_primal},
                               {"gram_rank", d.gram_rank},
                               {"chain_sign", d.chain_sign ? Json(*d.chain_sign) : Json(nullptr)},
                               {"ok", d.ok}});
    }
    return Json{{"mode", r.mode == DualityMode::twisted ? "twisted" : "untwisted"},
                {"sign_table", r.sign_table.signs},
                {"degrees", degrees},
                {"ok", r.ok()}};
}

Json to_json(const LTContext& ctx, const TruncatedSeries& f)
{
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"p", ctx.p}, {"q", ctx.q}, {"pi", to_json(ctx.pi)}, {"N", ctx.N}, {"coeffs", coeffs}};
}

Json to_json(const LaurentPoly& f)
{
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
    return Json{{"p", f.p}, {"lo", f.lo}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) {
        if (auto x = parse_scalar(j.get<std::string>())) return *x;
        throw SchemaError(where + ": malformed rational \"" + j.get<std::string>() + "\"");
    }
    throw SchemaError(where + ": expected a rational string or integer");
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    if (!j.is_array() || j.size() != rows) throw SchemaError(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != cols) {
            throw SchemaError(where + ": row " + std::to_string(i + 1) + " needs " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(row[c], where);
    }
    return m;
}

namespace {

LieAlgebra parse_algebra(const Json& j)
{
    const std::string where = "lie_algebra";
    const std::size_t dim = size_from_json(require(j, "dim", where), where + ".dim");
    std::vector<BracketTerm> terms;
    if (j.contains("brackets")) {
        const Json& list = j.at("brackets");
        if (!list.is_array()) throw SchemaError(where + ".brackets: expected an array");
        for (const Json& entry : list) {
            if (!entry.is_array() || entry.size() != 4) throw SchemaError(where + ".brackets: entries are [i, j, k, c]");
            std::size_t idx[3];
            for (int a = 0; a < 3; ++a) {
                const long long v = int_from_json(entry[a], where + ".brackets");
                if (v < 1 || static_cast<std::size_t>(v) > dim) throw SchemaError(where + ".brackets: index out of range");
                idx[a] = static_cast<std::size_t>(v - 1);
            }
            if (idx[0] >= idx[1]) throw SchemaError(where + ".brackets: need i < j");
            terms.push_back({idx[0], idx[1], idx[2], scalar_from_json(entry[3], where + ".brackets")});
        }
    }
    return LieAlgebra(dim, std::move(terms));
}

ModuleSection parse_module(const Json& j, std::size_t alg_dim)
{
    const std::string where = "module";
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    ModuleSection m;
    if (j.value("adjoint", false)) {
        m.kind = ModuleSection::Kind::adjoint;
        m.dim = alg_dim;
        return m;
    }
    m.dim = size_from_json(require(j, "dim", where), where + ".dim");
    if (!j.contains("action")) return m;
    const Json& action = j.at("action");
    if (!action.is_array() || action.size() != alg_dim) {
        throw SchemaError(where + ".action: need one matrix per algebra basis vector");
    }
    m.kind = ModuleSection::Kind::explicit_action;
    for (std::size_t i = 0; i < alg_dim; ++i) {
        m.action.push_back(matrix_from_json(action[i], m.dim, m.dim, where + ".action[" + std::to_string(i + 1) + "]"));
    }
    return m;
}

GroupSection parse_group(const Json& j, std::optional<std::size_t> alg_dim, std::optional<std::size_t> mod_dim)
{
    const std::string where = "group";
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    GroupSection g;
    if (j.contains("automorphisms")) {
        if (!alg_dim || !mod_dim) throw SchemaError(where + ".automorphisms: needs lie_algebra and module sections");
        const Json& list = j.at("automorphisms");
        if (!list.is_array()) throw SchemaError(where + ".automorphisms: expected an array");
        for (const Json& entry : list) {
            g.automorphisms.push_back({matrix_from_json(require(entry, "alg_map", where), *alg_dim, *alg_dim, where + ".alg_map"),
                                       matrix_from_json(require(entry, "mod_map", where), *mod_dim, *mod_dim, where + ".mod_map")});
        }
    }
    if (j.contains("finite")) {
        const Json& f = j.at("finite");
        FiniteGroupRep rep;
        rep.dim = size_from_json(require(f, "dim", where + ".finite"), where + ".finite.dim");
        const Json& elements = require(f, "elements", where + ".finite");
        if (!elements.is_array()) throw SchemaError(where + ".finite.elements: expected an array");
        for (const Json& e : elements) rep.elements.push_back(matrix_from_json(e, rep.dim, rep.dim, where + ".finite.elements"));
        g.finite = std::move(rep);
    }
    return g;
}

LaurentPoly parse_poly(const Json& j, unsigned long p, const std::string& where)
{
    LaurentPoly f;
    f.p = p;
    f.lo = static_cast<long>(j.contains("lo") ? int_from_json(j.at("lo"), where + ".lo") : 0);
    const Json& coeffs = require(j, "coeffs", where);
    if (!coeffs.is_array()) throw SchemaError(where + ".coeffs: expected an array");
    for (const Json& c : coeffs) f.coeffs.push_back(scalar_from_json(c, where + ".coeffs"));
    return f;
}

LTSection parse_lt(const Json& j)
{
    const std::string where = "lt";
    LTSection s;
    s.p = size_from_json(require(j, "p", where), where + ".p");
    s.q = j.contains("q") ? size_from_json(j.at("q"), where + ".q") : s.p;
    if (j.contains("pi")) s.pi = scalar_from_json(j.at("pi"), where + ".pi");
    s.N = static_cast<unsigned>(size_from_json(require(j, "N", where), where + ".N"));
    if (j.contains("u")) s.u = scalar_from_json(j.at("u"), where + ".u");
    if (j.contains("norms")) {
        const Json& list = j.at("norms");
        if (!list.is_array()) throw SchemaError(where + ".norms: expected an array");
        for (const Json& entry : list) {
            NormQuery q{parse_poly(entry, s.p, where + ".norms"), {}, {}, {}};
            if (entry.contains("t")) q.t = scalar_from_json(entry.at("t"), where + ".norms.t");
            if (entry.contains("r")) q.r = scalar_from_json(entry.at("r"), where + ".norms.r");
            if (entry.contains("s")) q.s = scalar_from_json(entry.at("s"), where + ".norms.s");
            if (!q.t && !(q.r && q.s)) throw SchemaError(where + ".norms: each entry needs \"t\" or both \"r\" and \"s\"");
            s.norms.push_back(std::move(q));
        }
    }
    return s;
}

} // namespace

ProblemDocument parse_document(const Json& j)
{
    if (!j.is_object()) throw SchemaError("document: expected a JSON object");
    ProblemDocument doc;
    if (j.contains("task")) {
        if (!j.at("task").is_string()) throw SchemaError("task: expected a string");
        doc.task = j.at("task").get<std::string>();
    }
    try {
        if (j.contains("lie_algebra")) doc.algebra = parse_algebra(j.at("lie_algebra"));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("lie_algebra: ") + e.what());
    }
    if (j.contains("module")) {
        if (!doc.algebra) throw SchemaError("module: needs a lie_algebra section");
        doc.module = parse_module(j.at("module"), doc.algebra->dim());
    }
    if (j.contains("group")) {
        std::optional<std::size_t> alg_dim, mod_dim;
        if (doc.algebra) alg_dim = doc.algebra->dim();
        if (doc.module) mod_dim = doc.module->dim;
        doc.group = parse_group(j.at("group"), alg_dim, mod_dim);
    }
    if (j.contains("lt")) doc.lt = parse_lt(j.at("lt"));
    return doc;
}

Json serialize_document(const ProblemDocument& doc)
{
    Json j = Json::object();
    if (doc.task) j["task"] = *doc.task;
    if (doc.algebra) {
        Json brackets = Json::array();
        for (const auto& t : doc.algebra->terms()) brackets.push_back(Json{t.i + 1, t.j + 1, t.k + 1, to_json(t.coeff)});
        j["lie_algebra"] = Json{{"dim", doc.algebra->dim()}, {"brackets", brackets}};
    }
    if (doc.module) {
        Json m = Json::object();
        switch (doc.module->kind) {
        case ModuleSection::Kind::adjoint: m["adjoint"] = true; break;
        case ModuleSection::Kind::trivial: m["dim"] = doc.module->dim; break;
        case ModuleSection::Kind::explicit_action: {
            m["dim"] = doc.module->dim;
            Json action = Json::array();
            for (const auto& a : doc.module->action) action.push_back(to_json(a));
            m["action"] = action;
            break;
        }
        }
        j["module"] = m;
    }
    if (doc.group) {
        Json g = Json::object();
        if (!doc.group->automorphisms.empty()) {
            Json list = Json::array();
            for (const auto& p : doc.group->automorphisms) list.push_back(Json{{"alg_map", to_json(p.alg_map)}, {"mod_map", to_json(p.mod_map)}});
            g["automorphisms"] = list;
        }
        if (doc.group->finite) {
            Json elements = Json::array();
            for (const auto& e : doc.group->finite->elements) elements.push_back(to_json(e));
            g["finite"] = Json{{"dim", doc.group->finite->dim}, {"elements", elements}};
        }
        j["group"] = g;
    }
    if (doc.lt) {
        const LTSection& s = *doc.lt;
        Json lt{{"p", s.p}, {"q", s.q}, {"N", s.N}, {"u", to_json(s.u)}};
        if (s.pi) lt["pi"] = to_json(*s.pi);
        if (!s.norms.empty()) {
            Json norms = Json::array();
            for (const auto& q : s.norms) {
                Json entry = to_json(q.poly);
                entry.erase("p");
                if (q.t) entry["t"] = to_json(*q.t);
                if (q.r) entry["r"] = to_json(*q.r);
                if (q.s) entry["s"] = to_json(*q.s);
                norms.push_back(entry);
            }
            lt["norms"] = norms;
        }
        j["lt"] = lt;
    }
    return j;
}

Representation representation(const ProblemDocument& doc)
{
    if (!doc.algebra) throw SchemaError("document: missing section \"lie_algebra\"");
    if (!doc.module) throw SchemaError("document: missing section \"module\"");
    const ModuleSection& m = *doc.module;
    switch (m.kind) {
    case ModuleSection::Kind::adjoint: return Representation::adjoint(*doc.algebra);
    case ModuleSection::Kind::trivial: return Representation::trivial(*doc.algebra, m.dim);
    case ModuleSection::Kind::explicit_action: break;
    }
    return Representation(*doc.algebra, m.dim, m.action);
}

} // namespace cedual::io
