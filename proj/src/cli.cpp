#include "ascheme/cli.hpp"

#include "ascheme/errors.hpp"
#include "ascheme/polyprops.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

namespace ascheme {

namespace {

TheoremReport base_report(const std::string& subject, const std::string& theorem, const Options& opt)
{
    TheoremReport r;
    r.subject = subject;
    r.theorem = theorem;
    r.tolerance = opt.tol;
    return r;
}

nlohmann::json matrix_json(const std::vector<double>& m, int s, double tol)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int j = 0; j < s; ++j) {
        nlohmann::json row = nlohmann::json::array();
        for (int i = 0; i < s; ++i)
            row.push_back(format_value(m[static_cast<std::size_t>(j * s + i)], tol));
        rows.push_back(row);
    }
    return rows;
}

TheoremReport parameters_report(const SchemeParameters& params, const std::string& subject, const Options& opt)
{
    auto r = base_report(subject, "scheme-parameters", opt);
    const int s = params.d + 1;
    r.evidence["n"] = params.n;
    r.evidence["d"] = params.d;
    r.evidence["P"] = matrix_json(params.P, s, opt.tol);
    r.evidence["Q"] = matrix_json(params.Q, s, opt.tol);
    r.evidence["degrees"] = params.degrees;
    std::vector<std::string> mult;
    for (double m : params.multiplicities)
        mult.push_back(format_value(m, opt.tol));
    r.evidence["multiplicities"] = mult;
    const double min_krein = params.krein.empty() ? 0.0 : *std::min_element(params.krein.begin(), params.krein.end());
    r.evidence["min_krein"] = min_krein;
    r.evidence["krein_nonnegative"] = min_krein >= -opt.tol;
    r.max_deviation = params.pq_deviation();
    r.status = Status::Pass;
    if (r.max_deviation > 100.0 * opt.tol)
        r.fail("PQ != nI", {{"max_deviation", r.max_deviation}});
    return r;
}

// The distance-partition and index-graph detectors must agree.
TheoremReport p_ordering_report(const RelationPartition* rel, const SchemeParameters& params, int j,
                                const std::string& subject, const Options& opt)
{
    auto r = base_report(subject, "p-ordering", opt);
    r.evidence["j"] = j;
    const auto index_path = p_polynomial_ordering(params, j, opt.tol);
    r.evidence["index_graph"] = to_json(index_path);
    if (index_path.status == PolyStatus::Inconclusive) {
        r.status = Status::HypothesisNotMet;
        r.reason = index_path.reason;
        return r;
    }
    r.status = Status::Pass;
    r.evidence["verdict"] = std::string(to_string(index_path.status));
    r.evidence["ordering"] = index_path.ordering;
    if (rel) {
        const auto explicit_path = p_polynomial_ordering(*rel, params, j, opt.tol);
        r.evidence["distance_partition"] = to_json(explicit_path);
        if (explicit_path.status != index_path.status || explicit_path.ordering != index_path.ordering)
            r.fail("distance partition and index graph disagree", {{"j", j}});
    }
    return r;
}

TheoremReport large_report(const std::string& theorem, const std::function<PolyVerdict()>& check,
                           const std::string& subject, int j, const Options& opt)
{
    auto r = base_report(subject, theorem, opt);
    r.evidence["j"] = j;
    try {
        const auto v = check();
        r.evidence["verdict"] = to_json(v);
        if (v.polynomial()) {
            r.status = Status::Pass;
        } else if (v.reason == "size hypothesis not met") {
            r.status = Status::Inconclusive;
            r.reason = v.reason;
        } else {
            r.status = Status::HypothesisNotMet;
            r.reason = v.reason;
        }
    } catch (const OverflowError& e) {
        r.status = Status::Inconclusive;
        r.reason = e.what();
    } catch (const Error& e) {
        r.fail(e.what(), {{"j", j}});
    }
    return r;
}

// Product formula holds exactly when the scheme is polynomial, with witness
// equal to the last class of the ordering.
TheoremReport product_report(const std::string& theorem, const PolyVerdict& formula, const PolyVerdict& detector,
                             const std::string& subject, int j, const Options& opt)
{
    auto r = base_report(subject, theorem, opt);
    r.evidence["j"] = j;
    r.evidence["formula"] = to_json(formula);
    r.evidence["detector"] = to_json(detector);
    if (formula.status == PolyStatus::Inconclusive || detector.status == PolyStatus::Inconclusive) {
        r.status = Status::HypothesisNotMet;
        r.reason = formula.status == PolyStatus::Inconclusive ? formula.reason : detector.reason;
        return r;
    }
    r.status = Status::Pass;
    if (formula.polynomial() != detector.polynomial())
        r.fail("product formula and detector disagree on polynomiality", {{"j", j}, {"witness", formula.witness}});
    else if (formula.polynomial() && formula.witness != detector.last())
        r.fail("witness is not the last class of the ordering",
               {{"j", j}, {"witness", formula.witness}, {"last", detector.last()}});
    else if (formula.polynomial())
        r.witnesses.push_back({{"l", formula.witness}});
    return r;
}

TheoremReport q_ordering_report(const SchemeParameters& params, int j, const SymMatrix* idem,
                                const std::string& subject, const Options& opt)
{
    auto r = base_report(subject, "q-ordering", opt);
    r.evidence["j"] = j;
    try {
        const auto v = q_polynomial_ordering(params, j, opt.tol, idem);
        r.evidence["verdict"] = to_json(v);
        if (v.status == PolyStatus::Inconclusive) {
            r.status = Status::HypothesisNotMet;
            r.reason = v.reason;
        } else {
            r.status = Status::Pass;
        }
    } catch (const Error& e) {
        r.fail(e.what(), {{"j", j}});
    }
    return r;
}

void per_index_reports(std::vector<TheoremReport>& out, const SchemeParameters& params, const RelationPartition* rel,
                       const std::vector<SymMatrix>* idem, const std::string& subject, const Options& opt)
{
    for (int j = 1; j <= params.d; ++j) {
        out.push_back(p_ordering_report(rel, params, j, subject, opt));
        out.push_back(large_report("p-large", [&] { return check_p_large(params, j, rel, opt.tol); }, subject, j, opt));
        const auto p_detector = rel ? p_polynomial_ordering(*rel, params, j, opt.tol) : p_polynomial_ordering(params, j, opt.tol);
        out.push_back(product_report("p-product-formula", check_product_formula_P(params, j, opt.tol), p_detector,
                                     subject, j, opt));

        const SymMatrix* ej = idem ? &(*idem)[static_cast<std::size_t>(j)] : nullptr;
        out.push_back(q_ordering_report(params, j, ej, subject, opt));
        out.push_back(large_report("q-large", [&] { return check_q_large(params, j, opt.tol); }, subject, j, opt));
        PolyVerdict q_detector;
        try {
            q_detector = q_polynomial_ordering(params, j, opt.tol);
        } catch (const Error&) {
            q_detector.status = PolyStatus::Inconclusive;
            q_detector.reason = "Krein path unavailable";
        }
        out.push_back(product_report("q-product-formula", check_product_formula_Q(params, j, opt.tol), q_detector,
                                     subject, j, opt));

        if (ej) {
            auto sub = subject + " / E_" + std::to_string(j);
            if (!multiplicity_separated(params, j, opt.tol)) {
                auto r = base_report(sub, "sphere-eigenvalue", opt);
                r.status = Status::HypothesisNotMet;
                r.reason = "Q_j(0) coincides with another Q_j(i): repeated points";
                out.push_back(r);
                continue;
            }
            auto r = verify_sphere_theorem(from_idempotent(*ej, opt.tol), opt.tol, opt.route);
            r.subject = sub;
            out.push_back(std::move(r));
        }
    }
}

std::string spectrum_text(const EigenClusters& spec, double tol)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < spec.count(); ++i)
        os << (i ? ", " : "") << format_value(spec.values[i], tol) << "^" << spec.multiplicities[i];
    return os.str();
}

} // namespace

std::vector<TheoremReport> analyze_graph(const Graph& g, const std::string& subject, const Options& opt)
{
    std::vector<TheoremReport> out;
    auto summary = base_report(subject, "graph-summary", opt);
    const DistanceData dd(g);
    const auto k = g.regular_degree();
    const auto gi = girth(g);
    summary.evidence["order"] = g.order();
    summary.evidence["edges"] = g.edge_count();
    summary.evidence["connected"] = dd.connected();
    summary.evidence["diameter"] = dd.connected() ? nlohmann::json(dd.diameter()) : nlohmann::json(nullptr);
    summary.evidence["girth"] = gi ? nlohmann::json(*gi) : nlohmann::json("acyclic");
    summary.status = Status::Pass;
    if (!k) {
        summary.status = Status::HypothesisNotMet;
        summary.reason = "not regular";
    } else {
        summary.evidence["degree"] = *k;
        const auto spec = eigen_clusters(g.adjacency_matrix(), opt.tol);
        summary.evidence["spectrum"] = spectrum_text(spec, opt.tol);
        if (!dd.connected()) {
            summary.status = Status::HypothesisNotMet;
            summary.reason = "not connected";
        }
    }
    out.push_back(summary);

    auto moore = base_report(subject, "moore-bound", opt);
    if (!k || !dd.connected()) {
        moore.status = Status::HypothesisNotMet;
        moore.reason = !k ? "not regular" : "not connected";
    } else {
        try {
            const auto bound = moore_bound(static_cast<std::uint64_t>(*k), static_cast<unsigned>(dd.diameter()));
            moore.evidence["moore_bound_diameter"] = bound;
            moore.status = Status::Pass;
            if (static_cast<std::uint64_t>(g.order()) > bound)
                moore.fail("order exceeds the Moore bound", {{"order", g.order()}, {"bound", bound}});
        } catch (const OverflowError& e) {
            moore.status = Status::Inconclusive;
            moore.reason = e.what();
        }
    }
    out.push_back(moore);

    auto entries = verify_projector_entries(g, opt.tol);
    entries.subject = subject;
    out.push_back(std::move(entries));
    auto large = large_graph_report(g, opt.tol);
    large.subject = subject;
    out.push_back(std::move(large));
    return out;
}

std::vector<TheoremReport> analyze_scheme(const RelationPartition& rel, const std::string& subject, const Options& opt)
{
    const auto scheme = analyze_explicit(rel, opt.tol, seed_set(opt.seed_set));
    std::vector<TheoremReport> out;
    auto params_report = parameters_report(scheme.params, subject, opt);
    try {
        const auto par = parametric_parameters(scheme.params.p, scheme.params.n, opt.tol, seed_set(opt.seed_set));
        const auto perm = match_idempotents(scheme.params, par, 100.0 * opt.tol);
        params_report.evidence["parametric_agrees"] = !perm.empty();
        if (perm.empty())
            params_report.fail("parametric path disagrees with the explicit eigenmatrices", {{"path", "parametric"}});
    } catch (const Error& e) {
        params_report.fail(std::string("parametric path failed: ") + e.what(), {{"path", "parametric"}});
    }
    out.push_back(std::move(params_report));
    per_index_reports(out, scheme.params, &scheme.rel, &scheme.idempotents, subject, opt);
    return out;
}

std::vector<TheoremReport> analyze_parametric(const TensorFile& tensor, const std::string& subject, const Options& opt)
{
    const auto params = parametric_parameters(tensor.p, tensor.n, opt.tol, seed_set(opt.seed_set));
    std::vector<TheoremReport> out;
    out.push_back(parameters_report(params, subject, opt));
    per_index_reports(out, params, nullptr, nullptr, subject, opt);
    return out;
}

std::vector<TheoremReport> analyze_gram(const SymMatrix& gram, const std::string& subject, const Options& opt,
                                        std::optional<int> declared_d)
{
    auto r = verify_sphere_theorem(from_gram(gram, opt.tol), opt.tol, opt.route, declared_d);
    r.subject = subject;
    return {r};
}

std::pair<int, int> parse_range(const std::string& text)
{
    static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw DomainError("range must look like lo..hi, got '" + text + "'");
    const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    if (lo > hi)
        throw DomainError("empty range '" + text + "'");
    return {lo, hi};
}

ScanResult scan_family(const std::string& family, int lo, int hi, double tol)
{
    static const std::regex re(R"(^(johnson|hamming)(\d+)$)");
    std::smatch m;
    if (!std::regex_match(family, m, re))
        throw DomainError("scan family must be johnson<k> or hamming<d>, got '" + family + "'");
    const bool johnson = m[1] == "johnson";
    const int fixed = std::stoi(m[2]);
    ScanResult res;
    res.family = family;
    for (int t = lo; t <= hi; ++t) {
        ScanRow row;
        row.parameter = t;
        try {
            const FamilySpec spec = johnson ? FamilySpec{Family::Johnson, {t, fixed}}
                                            : FamilySpec{Family::Hamming, {fixed, t}};
            spec.validate();
            const auto cf = closed_form(spec);
            const auto params = family_parameters(spec, tol);
            row.points = cf.points;
            row.k1 = cf.degrees.at(1);
            row.m1 = cf.multiplicities.at(1);
            row.moore = moore_bound(static_cast<std::uint64_t>(row.k1), static_cast<unsigned>(params.d - 1));
            row.absolute = absolute_bound(static_cast<std::uint64_t>(row.m1), static_cast<unsigned>(params.d - 1));
            row.p_holds = check_p_large(params, 1, nullptr, tol).polynomial();
            row.q_holds = check_q_large(params, 1, tol).polynomial();
        } catch (const Error& e) {
            row.error = e.what();
        }
        res.rows.push_back(std::move(row));
    }
    auto summarize = [&](bool ScanRow::*holds) {
        ScanSide side;
        for (const auto& row : res.rows) {
            if (!row.error.empty())
                continue;
            if (row.*holds) {
                if (!side.first_true)
                    side.first_true = row.parameter;
            } else {
                side.last_false = row.parameter;
                if (side.first_true)
                    side.monotone = false;
            }
        }
        return side;
    };
    res.p_side = summarize(&ScanRow::p_holds);
    res.q_side = summarize(&ScanRow::q_holds);
    return res;
}

nlohmann::json to_json(const ScanResult& scan)
{
    auto side = [](const ScanSide& s) {
        return nlohmann::json{{"first_true", s.first_true ? nlohmann::json(*s.first_true) : nlohmann::json(nullptr)},
                              {"last_false", s.last_false ? nlohmann::json(*s.last_false) : nlohmann::json(nullptr)},
                              {"monotone", s.monotone}};
    };
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : scan.rows) {
        nlohmann::json j = {{"parameter", r.parameter}, {"points", r.points}, {"k1", r.k1},
                            {"moore_bound", r.moore},   {"p_holds", r.p_holds}, {"m1", r.m1},
                            {"absolute_bound", r.absolute}, {"q_holds", r.q_holds}};
        if (!r.error.empty())
            j["error"] = r.error;
        rows.push_back(j);
    }
    return {{"family", scan.family}, {"rows", rows}, {"p_condition", side(scan.p_side)}, {"q_condition", side(scan.q_side)}};
}

std::string render_scan(const ScanResult& scan)
{
    std::ostringstream os;
    os << "scan " << scan.family << " (j = 1)\n";
    os << std::setw(6) << "param" << std::setw(12) << "|X|" << std::setw(8) << "k_1" << std::setw(14) << "M(k_1,d-1)"
       << std::setw(6) << "P" << std::setw(8) << "m_1" << std::setw(14) << "N(m_1,d-1)" << std::setw(6) << "Q" << '\n';
    for (const auto& r : scan.rows) {
        os << std::setw(6) << r.parameter;
        if (!r.error.empty()) {
            os << "  error: " << r.error << '\n';
            continue;
        }
        os << std::setw(12) << r.points << std::setw(8) << r.k1 << std::setw(14) << r.moore << std::setw(6)
           << (r.p_holds ? "yes" : "-") << std::setw(8) << r.m1 << std::setw(14) << r.absolute << std::setw(6)
           << (r.q_holds ? "yes" : "-") << '\n';
    }
    auto line = [&](const char* name, const ScanSide& s) {
        os << name << " condition: first holds at "
           << (s.first_true ? std::to_string(*s.first_true) : std::string("never"))
           << ", largest failing parameter "
           << (s.last_false ? std::to_string(*s.last_false) : std::string("none"))
           << (s.monotone ? ", holds throughout after the first success" : ", NOT monotone") << '\n';
    };
    line("P", scan.p_side);
    line("Q", scan.q_side);
    return os.str();
}

namespace {

void emit_reports(std::ostream& out, const std::string& subject, const std::vector<TheoremReport>& reports,
                  const Options& opt)
{
    if (opt.json) {
        out << reports_to_json(subject, reports).dump(2) << '\n';
        return;
    }
    out << subject << '\n';
    for (const auto& r : reports)
        out << render_text(r) << '\n';
}

void print_bounds(std::ostream& out, int kmax, int dmax, const Options& opt)
{
    if (opt.json) {
        nlohmann::json moore = nlohmann::json::array(), absolute = nlohmann::json::array();
        for (int k = 1; k <= kmax; ++k)
            for (int d = 0; d <= dmax; ++d) {
                auto cell = [&](auto fn) {
                    try {
                        return nlohmann::json(fn());
                    } catch (const OverflowError&) {
                        return nlohmann::json("overflow");
                    }
                };
                moore.push_back({{"k", k}, {"d", d}, {"value", cell([&] { return moore_bound(static_cast<std::uint64_t>(k), static_cast<unsigned>(d)); })}});
                absolute.push_back({{"m", k}, {"d", d}, {"value", cell([&] { return absolute_bound(static_cast<std::uint64_t>(k), static_cast<unsigned>(d)); })}});
            }
        out << nlohmann::json{{"moore", moore}, {"absolute", absolute}}.dump(2) << '\n';
        return;
    }
    auto table = [&](const char* title, const char* row_name, auto fn) {
        out << title << '\n' << std::setw(6) << row_name;
        for (int d = 0; d <= dmax; ++d)
            out << std::setw(14) << ("d=" + std::to_string(d));
        out << '\n';
        for (int k = 1; k <= kmax; ++k) {
            out << std::setw(6) << k;
            for (int d = 0; d <= dmax; ++d) {
                try {
                    out << std::setw(14) << fn(static_cast<std::uint64_t>(k), static_cast<unsigned>(d));
                } catch (const OverflowError&) {
                    out << std::setw(14) << "overflow";
                }
            }
            out << '\n';
        }
    };
    table("Moore bound M(k,d)", "k", [](std::uint64_t k, unsigned d) { return moore_bound(k, d); });
    table("Absolute bound N(m,d)", "m", [](std::uint64_t m, unsigned d) { return absolute_bound(m, d); });
}

int gen_command(std::ostream& out, const std::string& family, const std::vector<int>& params,
                const std::string& format, int idempotent, const Options& opt)
{
    const auto spec = parse_family(family, params);
    std::string fmt = format;
    if (fmt.empty())
        fmt = spec.family == Family::Johnson || spec.family == Family::Hamming ? "relations" : "edges";
    if (fmt == "edges") {
        write_edge_list(out, build_graph(spec, opt.max_dense));
    } else if (fmt == "relations") {
        write_relation_matrix(out, build_scheme(spec, opt.max_dense));
    } else if (fmt == "tensor") {
        if (spec.family == Family::Johnson || spec.family == Family::Hamming)
            write_tensor(out, static_cast<std::int64_t>(spec.point_count()), family_intersection_numbers(spec));
        else
            write_tensor(out, static_cast<std::int64_t>(spec.point_count()), validate_scheme(build_scheme(spec, opt.max_dense)));
    } else if (fmt == "gram") {
        const auto scheme = analyze_explicit(build_scheme(spec, opt.max_dense), opt.tol, seed_set(opt.seed_set));
        if (idempotent < 1 || idempotent > scheme.params.d)
            throw DomainError("--idempotent must lie in 1.." + std::to_string(scheme.params.d));
        write_gram(out, from_idempotent(scheme.idempotents[static_cast<std::size_t>(idempotent)], opt.tol).gram);
    } else {
        throw DomainError("unknown format '" + fmt + "'");
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectral analysis of regular graphs, association schemes and spherical sets"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    std::string route = "size";
    app.add_option("--tol", opt.tol, "absolute numerical tolerance")->check(CLI::PositiveNumber);
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--max-dense", opt.max_dense, "largest explicit matrix dimension");
    app.add_option("--seed-set", opt.seed_set, "fixed seed alternates for generic elements")->check(CLI::Range(0, 1));
    app.add_option("--route", route, "spherical verification route")->check(CLI::IsMember({"size", "schur"}));

    std::string family, format, path, range;
    std::vector<int> params;
    int idempotent = 1;
    auto* gen = app.add_subcommand("gen", "write a catalog graph or scheme");
    gen->add_option("family", family, "cycle, complete, petersen, hoffman_singleton, paley, johnson, hamming")->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--format", format, "edges, relations, tensor or gram");
    gen->add_option("--idempotent", idempotent, "idempotent index for --format gram");

    auto* ag = app.add_subcommand("analyze-graph", "spectral checks on an edge list");
    ag->add_option("path", path)->required();

    bool parametric = false;
    auto* as = app.add_subcommand("analyze-scheme", "polynomial-property checks on a scheme");
    as->add_option("path", path)->required();
    as->add_flag("--parametric", parametric, "input is an intersection-number tensor");

    std::optional<int> declared_d;
    auto* agr = app.add_subcommand("analyze-gram", "forced eigenvalues of a spherical set");
    agr->add_option("path", path)->required();
    agr->add_option("--declared-d", declared_d, "upper bound on the number of inner products");

    int kmax = 10, dmax = 4;
    auto* bounds = app.add_subcommand("bounds", "print Moore and absolute bound tables");
    bounds->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
    bounds->add_option("--dmax", dmax)->check(CLI::NonNegativeNumber);

    auto* scan = app.add_subcommand("scan", "threshold scan over a family");
    scan->add_option("family", family, "johnson<k> or hamming<d>")->required();
    scan->add_option("range", range, "lo..hi")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    opt.route = route == "schur" ? SphereRoute::SchurDiameter : SphereRoute::Size;

    try {
        if (*gen)
            return gen_command(out, family, params, format, idempotent, opt);
        if (*bounds) {
            print_bounds(out, kmax, dmax, opt);
            return 0;
        }
        if (*scan) {
            const auto [lo, hi] = parse_range(range);
            const auto res = scan_family(family, lo, hi, opt.tol);
            if (opt.json)
                out << to_json(res).dump(2) << '\n';
            else
                out << render_scan(res);
            return res.p_side.monotone && res.q_side.monotone ? 0 : 1;
        }
        std::vector<TheoremReport> reports;
        auto in = open_input(path);
        if (*ag)
            reports = analyze_graph(read_edge_list(in, opt.max_dense), path, opt);
        else if (*as && parametric)
            reports = analyze_parametric(read_tensor(in), path, opt);
        else if (*as)
            reports = analyze_scheme(read_relation_matrix(in, opt.max_dense), path, opt);
        else
            reports = analyze_gram(read_gram(in, opt.max_dense), path, opt, declared_d);
        emit_reports(out, path, reports, opt);
        return any_failed(reports) ? 1 : 0;
    } catch (const SchemeAxiomError& e) {
        err << "error: " << e.what() << '\n';
        for (auto [x, y] : e.witnesses())
            err << "  witness pair (" << x << ", " << y << ")\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace ascheme
