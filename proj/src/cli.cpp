#include "cedual/cli.hpp"

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cedual/errors.hpp"
#include "cedual/io.hpp"
#include "cedual/linalg.hpp"

namespace cedual::cli {

namespace {

using io::Json;

struct Options {
    std::string format = "human";
    std::string input;
    std::uint64_t seed = 1;
    bool twist = false;
    unsigned max_dim = 8;
    unsigned dim = 5;
    unsigned trials = 100;
};

struct Report {
    std::string task;
    bool ok = true;
    Json results = Json::object();
    std::vector<std::string> lines; // human rendering
    int failure_code = ExitCode::not_ok;
};

std::string join(const std::vector<std::size_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

std::string series_text(const TruncatedSeries& f)
{
    std::string s;
    for (unsigned i = 0; i < f.precision(); ++i) {
        if (f[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(f[i]) + ")";
        if (i == 1) s += "T";
        if (i > 1) s += "T^" + std::to_string(i);
    }
    return (s.empty() ? "0" : s) + " mod T^" + std::to_string(f.precision());
}

Report cmd_validate(const io::ProblemDocument& doc)
{
    Report r;
    r.task = "validate";
    r.failure_code = ExitCode::validation_error;
    bool algebra_ok = true;
    if (doc.algebra) {
        const JacobiReport jac = validate_algebra(*doc.algebra);
        algebra_ok = jac.ok();
        Json failures = Json::array();
        for (const auto& f : jac.failures) failures.push_back(f);
        r.results["algebra"] = Json{{"ok", jac.ok()}, {"jacobi_failures", failures}};
        r.lines.push_back(std::string("algebra: ") + (jac.ok() ? "ok" : "Jacobi identity fails"));
        for (const auto& f : jac.failures) {
            r.lines.push_back("  violation at (" + std::to_string(f[0]) + ", " + std::to_string(f[1]) + ", " +
                              std::to_string(f[2]) + ")");
        }
        r.ok = r.ok && jac.ok();
    }
    std::optional<Representation> rep;
    if (doc.module) {
        rep = io::representation(doc);
        const ValidationReport v = algebra_ok ? validate_rep(*rep) : ValidationReport{{"algebra invalid; module not checked"}};
        r.results["module"] = Json{{"ok", v.ok()}, {"violations", v.violations}};
        r.lines.push_back(std::string("module: ") + (v.ok() ? "ok" : "invalid"));
        for (const auto& s : v.violations) r.lines.push_back("  " + s);
        r.ok = r.ok && v.ok();
    }
    if (doc.group) {
        Json group = Json::object();
        if (doc.group->finite) {
            const ValidationReport v = validate_group(*doc.group->finite);
            group["finite"] = Json{{"ok", v.ok()}, {"violations", v.violations}};
            r.lines.push_back(std::string("finite group: ") + (v.ok() ? "ok" : "invalid"));
            for (const auto& s : v.violations) r.lines.push_back("  " + s);
            r.ok = r.ok && v.ok();
        }
        Json pairs = Json::array();
        for (std::size_t i = 0; i < doc.group->automorphisms.size(); ++i) {
            const ValidationReport v = rep && algebra_ok ? validate_automorphism_pair(*rep, doc.group->automorphisms[i])
                                                         : ValidationReport{{"algebra or module invalid; pair not checked"}};
            pairs.push_back(Json{{"index", i + 1}, {"ok", v.ok()}, {"violations", v.violations}});
            r.lines.push_back("automorphism " + std::to_string(i + 1) + ": " + (v.ok() ? "ok" : "invalid"));
            for (const auto& s : v.violations) r.lines.push_back("  " + s);
            r.ok = r.ok && v.ok();
        }
        if (!pairs.empty()) group["automorphisms"] = pairs;
        r.results["group"] = group;
    }
    if (doc.lt) {
        try {
            make_context(doc.lt->p, doc.lt->q, doc.lt->N, doc.lt->pi);
            r.results["lt"] = Json{{"ok", true}};
            r.lines.push_back("lt: ok");
        } catch (const ValidationError& e) {
            r.results["lt"] = Json{{"ok", false}, {"violations", {e.what()}}};
            r.lines.push_back(std::string("lt: invalid\n  ") + e.what());
            r.ok = false;
        }
    }
    return r;
}

Report cmd_cohomology(const io::ProblemDocument& doc)
{
    Report r;
    r.task = "cohomology";
    const CochainComplex c = build_ce(io::representation(doc));
    const CohomologyReport h = cohomology(c);
    r.results = io::to_json(h);
    r.results["euler_characteristic"] = euler_characteristic(h);
    r.lines.push_back("dims " + join(h.dims));
    r.lines.push_back("euler characteristic " + std::to_string(euler_characteristic(h)));
    return r;
}

Report cmd_duality(const io::ProblemDocument& doc, bool twist)
{
    Report r;
    r.task = "duality";
    const DualityReport d = verify_complex_duality(io::representation(doc), twist);
    r.ok = d.ok();
    r.results = io::to_json(d);
    r.lines.push_back(std::string("mode ") + (twist ? "twisted" : "untwisted"));
    std::string signs;
    for (int s : d.sign_table.signs) signs += s > 0 ? " +" : " -";
    r.lines.push_back("chain signs" + (signs.empty() ? std::string(" (none)") : signs));
    for (const auto& deg : d.degrees) {
        r.lines.push_back("k=" + std::to_string(deg.k) + "  dim H^k(dual)=" + std::to_string(deg.dim_dual) +
                          "  dim H^{d-k}=" + std::to_string(deg.dim_primal) + "  gram rank=" + std::to_string(deg.gram_rank) +
                          (deg.ok ? "  ok" : "  FAIL"));
    }
    return r;
}

Report cmd_group(const io::ProblemDocument& doc)
{
    Report r;
    r.task = "group";
    if (!doc.group) throw io::SchemaError("document: missing section \"group\"");
    if (doc.group->finite) {
        const FiniteGroupRep& g = *doc.group->finite;
        const bool iso = check_invariants_to_coinvariants(g);
        const std::size_t inv = invariants(g).cols();
        const std::size_t co = coinvariants(g).dim;
        r.results["finite"] = Json{{"order", g.elements.size()}, {"invariants_dim", inv}, {"coinvariants_dim", co}, {"composite_iso", iso}};
        r.lines.push_back("finite group of order " + std::to_string(g.elements.size()) + ": dim V^G = " + std::to_string(inv) +
                          ", dim V_G = " + std::to_string(co) + ", V^G -> V_G iso: " + (iso ? "true" : "false"));
        r.ok = r.ok && iso;
    }
    if (!doc.group->automorphisms.empty()) {
        const Representation rep = io::representation(doc);
        Json pairs = Json::array();
        for (std::size_t i = 0; i < doc.group->automorphisms.size(); ++i) {
            const EquivarianceReport e = verify_equivariance(rep, doc.group->automorphisms[i]);
            pairs.push_back(Json{{"index", i + 1},
                                 {"det", io::to_json(e.det)},
                                 {"equivariant", e.holds},
                                 {"factor", e.factor ? io::to_json(*e.factor) : Json(nullptr)}});
            r.lines.push_back("automorphism " + std::to_string(i + 1) + ": det " + to_string(e.det) + ", equivariant " +
                              (e.holds ? "true" : "false") + (e.factor ? ", factor " + to_string(*e.factor) : ""));
            if (e.det == 1) r.ok = r.ok && e.holds;
        }
        r.results["automorphisms"] = pairs;
    }
    return r;
}

Report cmd_lt(const io::ProblemDocument& doc)
{
    Report r;
    r.task = "lt";
    if (!doc.lt) throw io::SchemaError("document: missing section \"lt\"");
    const io::LTSection& s = *doc.lt;
    const LTContext ctx = make_context(s.p, s.q, s.N, s.pi);

    const TruncatedSeries p = bracket_pi(ctx);
    const TruncatedSeries u = gamma_action(ctx, TruncatedSeries::monomial(ctx.N, 1, 1), s.u);
    r.results["bracket_pi"] = io::to_json(ctx, p);
    r.results["bracket_u"] = io::to_json(ctx, u);
    r.results["u"] = io::to_json(s.u);
    r.lines.push_back("[pi](T) = " + series_text(p));
    r.lines.push_back("[u](T) = " + series_text(u) + "  (u = " + to_string(s.u) + ")");

    const MultivariateSeries f = formal_group_law(ctx);
    Json terms = Json::array();
    std::string ftext;
    for (const auto& [e, c] : f.terms()) {
        terms.push_back(Json{e[0], e[1], io::to_json(c)});
        std::string mono;
        if (e[0] > 0) mono += e[0] == 1 ? "X" : "X^" + std::to_string(e[0]);
        if (e[1] > 0) mono += e[1] == 1 ? "Y" : "Y^" + std::to_string(e[1]);
        ftext += (ftext.empty() ? "" : " + ") + std::string("(") + to_string(c) + ")" + mono;
    }
    r.results["formal_group_law"] = terms;
    r.lines.push_back("F(X,Y) = " + ftext + " mod deg " + std::to_string(ctx.N));

    Json psi_json = Json{{"precision", psi_precision(ctx)}};
    for (unsigned i = 1; i <= 2 && i < ctx.N; ++i) {
        const TruncatedSeries dec = psi_dec(ctx, TruncatedSeries::monomial(ctx.N, 1, i));
        psi_json["psi_dec_T" + std::to_string(i)] = io::to_json(ctx, dec);
        r.lines.push_back("psi_dec(T^" + std::to_string(i) + ") = " + series_text(dec));
    }
    r.results["psi"] = psi_json;
    r.lines.push_back("psi_dec guaranteed precision " + std::to_string(psi_precision(ctx)));

    const CohomologyReport herr = cohomology(herr_complex(ctx, s.u));
    r.results["herr"] = Json{{"dims", herr.dims}};
    r.lines.push_back("Herr complex dims " + join(herr.dims) + " (finite level, single generator)");

    Json norms = Json::array();
    for (const auto& q : s.norms) {
        Json entry = io::to_json(q.poly);
        if (q.t) {
            const Scalar v = gauss_norm(q.poly, *q.t);
            entry["t"] = io::to_json(*q.t);
            entry["gauss_norm"] = io::to_json(v);
            r.lines.push_back("||f||_" + to_string(*q.t) + " = " + to_string(v));
        }
        if (q.r && q.s) {
            const Scalar v = interval_norm(q.poly, *q.r, *q.s);
            entry["r"] = io::to_json(*q.r);
            entry["s"] = io::to_json(*q.s);
            entry["interval_norm"] = io::to_json(v);
            r.lines.push_back("||f||_[" + to_string(*q.r) + "," + to_string(*q.s) + "] = " + to_string(v));
        }
        norms.push_back(entry);
    }
    if (!norms.empty()) r.results["norms"] = norms;
    r.results["context"] = Json{{"p", ctx.p}, {"q", ctx.q}, {"pi", io::to_json(ctx.pi)}, {"N", ctx.N}};
    return r;
}

Report cmd_signs(unsigned max_dim)
{
    Report r;
    r.task = "signs";
    std::size_t checked = 0, kdk_failures = 0, sum_failures = 0, star_failures = 0;
    for (unsigned d = 0; d <= max_dim; ++d) {
        const int total = (d * (d + 1) / 2) % 2 == 0 ? 1 : -1;
        for (unsigned k = 0; k <= d; ++k) {
            const int kdk = (k * (d - k)) % 2 == 0 ? 1 : -1;
            for (const auto& phi : LexBasis(d, k)) {
                const int product = sign(phi) * sign(complement(phi));
                ++checked;
                if (product != kdk) ++kdk_failures;
                if (product != total) ++sum_failures;
            }
            const Matrix sq = star_matrix(d, d - k) * star_matrix(d, k);
            if (sq != Scalar(total) * Matrix::identity(binomial(d, k))) ++star_failures;
        }
    }
    r.ok = kdk_failures == 0;
    r.results = Json{{"max_dim", max_dim},
                     {"injections_checked", checked},
                     {"failures_k(d-k)_law", kdk_failures},
                     {"failures_d(d+1)/2_law", sum_failures},
                     {"star_square_failures_d(d+1)/2_law", star_failures}};
    r.lines.push_back("checked " + std::to_string(checked) + " injections for d <= " + std::to_string(max_dim));
    r.lines.push_back("sgn(phi) sgn(phi*) = (-1)^{k(d-k)}: " + std::to_string(kdk_failures) + " failures");
    r.lines.push_back("sgn(phi) sgn(phi*) = (-1)^{d(d+1)/2}: " + std::to_string(sum_failures) + " failures");
    r.lines.push_back("star^2 = (-1)^{d(d+1)/2}: " + std::to_string(star_failures) + " failures");
    return r;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = Scalar(num(rng), den(rng));
                m(i, j).canonicalize();
            }
        if (rank(m) == n) return m;
    }
}

Report cmd_prop38(unsigned dim, unsigned trials, std::uint64_t seed)
{
    Report r;
    r.task = "prop38";
    std::mt19937_64 rng(seed);
    std::size_t checked = 0, failures = 0;
    Json per = Json::array();
    for (unsigned d = 1; d <= dim; ++d) {
        std::vector<Matrix> mats;
        for (unsigned t = 0; t < trials; ++t) mats.push_back(random_invertible(rng, d));
        for (unsigned k = 0; k <= d; ++k) {
            std::size_t f = 0;
            for (const auto& a : mats) {
                ++checked;
                if (!check_star_naturality(a, k)) ++f;
            }
            failures += f;
            per.push_back(Json{{"d", d}, {"k", k}, {"trials", trials}, {"failures", f}});
        }
    }
    r.ok = failures == 0;
    r.results = Json{{"dim", dim}, {"trials", trials}, {"seed", seed}, {"checked", checked}, {"failures", failures}, {"per_degree", per}};
    r.lines.push_back("det A (A^{-1})^t star = star A: " + std::to_string(checked) + " checks, " + std::to_string(failures) +
                      " failures (d <= " + std::to_string(dim) + ", seed " + std::to_string(seed) + ")");
    return r;
}

void emit(const Report& r, const Options& o, std::ostream& out)
{
    if (o.format == "machine") {
        Json j{{"task", r.task}, {"ok", r.ok}, {"version", version}, {"results", r.results}};
        out << j.dump(2) << '\n';
        return;
    }
    out << "cedual " << version << " - " << r.task << '\n';
    for (const auto& line : r.lines) out << line << '\n';
    out << "overall: " << (r.ok ? "ok" : "NOT OK") << '\n';
}

std::string read_all(std::istream& in)
{
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in)
{
    Options o;
    CLI::App app{"Chevalley-Eilenberg duality and Lubin-Tate toolkit", "cedual"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--input", o.input, "Problem document (JSON); stdin when omitted");
    app.add_option("--seed", o.seed, "Seed for randomized checks");

    auto* validate = app.add_subcommand("validate", "Run every validator on the document");
    auto* cohom = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology");
    auto* duality = app.add_subcommand("duality", "Duality pairing on cohomology");
    duality->add_flag("--twist", o.twist, "Use the twisted dual module");
    auto* group = app.add_subcommand("group", "Invariants, coinvariants, equivariance");
    auto* lt = app.add_subcommand("lt", "Lubin-Tate series, operators, norms, Herr complex");
    auto* signs = app.add_subcommand("signs", "Exhaustive sign identities");
    signs->add_option("--max-dim", o.max_dim, "Largest d")->check(CLI::Range(0u, 12u));
    auto* prop38 = app.add_subcommand("prop38", "Star naturality on random invertible matrices");
    prop38->add_option("--dim", o.dim, "Largest d")->check(CLI::Range(1u, 7u));
    prop38->add_option("--trials", o.trials, "Matrices per d");
    prop38->add_option("--seed", o.seed, "Seed for the random matrices");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::parse_error;
    }

    try {
        Report report;
        if (signs->parsed()) {
            report = cmd_signs(o.max_dim);
        } else if (prop38->parsed()) {
            report = cmd_prop38(o.dim, o.trials, o.seed);
        } else {
            std::string text;
            if (o.input.empty() || o.input == "-") {
                text = read_all(in);
            } else {
                std::ifstream file(o.input);
                if (!file) {
                    err << "error: cannot open " << o.input << '\n';
                    return ExitCode::parse_error;
                }
                text = read_all(file);
            }
            Json j;
            try {
                j = Json::parse(text);
            } catch (const Json::parse_error& e) {
                const auto [line, col] = line_column(text, e.byte);
                err << "parse error at line " << line << ", column " << col << ": " << e.what() << '\n';
                return ExitCode::parse_error;
            }
            const io::ProblemDocument doc = io::parse_document(j);
            if (validate->parsed()) report = cmd_validate(doc);
            else if (cohom->parsed()) report = cmd_cohomology(doc);
            else if (duality->parsed()) report = cmd_duality(doc, o.twist);
            else if (group->parsed()) report = cmd_group(doc);
            else if (lt->parsed()) report = cmd_lt(doc);
        }
        emit(report, o, out);
        return report.ok ? ExitCode::ok : report.failure_code;
    } catch (const io::SchemaError& e) {
        err << "parse error: " << e.what() << '\n';
        return ExitCode::parse_error;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return ExitCode::validation_error;
    } catch (const HypothesisError& e) {
        err << "hypothesis not satisfied: " << e.what() << '\n';
        return ExitCode::hypothesis_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return ExitCode::internal_error;
    }
}

} // namespace cedual::cli
