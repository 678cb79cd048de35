// Command-line front end: mutation traces, identity verification, Y-system
// runs, scattering diagrams, quantum identities, and the selftest suite.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "cdl/accept.hpp"
#include "cdl/dilog.hpp"
#include "cdl/quantum.hpp"
#include "cdl/qalgebra.hpp"
#include "cdl/report.hpp"
#include "cdl/scatter.hpp"
#include "cdl/ysystem.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cdl;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& doc, const std::string& text) const {
        std::string body = format == "json" ? doc.dump(2) + "\n" : text;
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream os(path);
            os << body;
        }
    }
};

json load_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open " + path);
    json j;
    is >> j;
    return j;
}

std::vector<long> parse_delta(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        long d = std::stol(tok);
        if (d < 1) throw std::invalid_argument("delta entries must be positive");
        out.push_back(d);
    }
    return out;
}

void apply_delta(pattern::MutationWord& w, const std::string& delta_csv) {
    if (delta_csv.empty()) return;
    std::vector<long> d = parse_delta(delta_csv);
    if (static_cast<int>(d.size()) != w.B0.rows())
        throw std::invalid_argument("--delta size must match the matrix");
    for (int i = 0; i < w.B0.rows(); ++i)
        for (int j = 0; j < w.B0.rows(); ++j)
            if (d[static_cast<size_t>(j)] * w.B0.at(i, j) !=
                -d[static_cast<size_t>(i)] * w.B0.at(j, i))
                throw std::invalid_argument("--delta is not a skew-symmetrizer");
    w.delta = d;
}

std::vector<int> parse_word(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int k = std::stoi(tok);
        if (k < 1) throw std::invalid_argument("word entries are 1-based directions");
        out.push_back(k - 1);
    }
    return out;
}

pattern::PatternRun load_run(const std::string& run_path, const std::string& matrix_path,
                             const std::string& word_csv, const std::string& delta_csv) {
    pattern::MutationWord w;
    if (!run_path.empty()) {
        w = report::word_from_run_json(load_json(run_path));
    } else {
        if (matrix_path.empty()) throw std::invalid_argument("need --run or --matrix with --word");
        seed::IntMat B = report::exchange_matrix_from_json(load_json(matrix_path));
        w = pattern::make_word(B, parse_word(word_csv));
    }
    apply_delta(w, delta_csv);
    return pattern::run_pattern(w);
}

int cmd_mutate(const std::string& matrix_path, const std::string& word_csv,
               const std::string& delta_csv, const Output& out) {
    seed::IntMat B = report::exchange_matrix_from_json(load_json(matrix_path));
    pattern::MutationWord mw = pattern::make_word(B, parse_word(word_csv));
    apply_delta(mw, delta_csv);
    pattern::PatternRun run = pattern::run_pattern(mw);
    pattern::verify_dualities(run);
    json doc = report::run_json(run);
    bool skew = true;
    for (int i = 0; i < B.rows() && skew; ++i)
        for (int j = 0; j < B.cols(); ++j)
            if (B.at(i, j) != -B.at(j, i)) { skew = false; break; }
    if (skew) doc["quiver"] = report::quiver_json(seed::quiver_of(B));
    auto nu = pattern::detect_period(run);
    doc["periodic"] = nu.has_value();
    if (nu) doc["nu"] = report::perm_json(*nu);
    auto w = pattern::di_weights(run);
    doc["n_plus"] = w.n_plus;
    doc["n_minus"] = w.n_minus;
    std::ostringstream text;
    text << "steps: " << run.P << "  periodic: " << (nu ? "yes" : "no") << "  N+ = " << w.n_plus
         << "  N- = " << w.n_minus << "\n";
    out.emit(doc, text.str());
    return kExitOk;
}

int cmd_verify_di(const std::string& run_path, const std::string& matrix_path,
                  const std::string& word_csv, const std::string& delta_csv, long samples,
                  double tol, unsigned long long seed, bool wedge, bool vt, const Output& out) {
    pattern::PatternRun run = load_run(run_path, matrix_path, word_csv, delta_csv);
    json doc;
    doc["schema"] = "cdl/1";
    doc["command"] = "verify-di";
    auto nu = pattern::detect_period(run);
    doc["periodic"] = nu.has_value();
    if (!nu) {
        doc["error"] = "mutation word is not periodic";
        out.emit(doc, "not periodic\n");
        return kExitVerification;
    }
    doc["nu"] = report::perm_json(*nu);
    int code = kExitOk;
    try {
        dilog::DIReport rep = dilog::verify_period_di(run, *nu, samples, tol, seed);
        doc["samples"] = rep.samples;
        doc["rng_seed"] = rep.rng_seed;
        doc["tolerance"] = tol;
        doc["n_plus"] = rep.weights.n_plus;
        doc["n_minus"] = rep.weights.n_minus;
        doc["constant_times_pi2_over_6"] = rep.constant_n_minus.get_str();
        doc["max_residual"] = {{"di1", rep.max_residual_di1},
                               {"di2", rep.max_residual_di2},
                               {"di3", rep.max_residual_di3}};
        json ys = json::array();
        for (long s = 0; s < run.P; ++s)
            ys.push_back(report::factored_json(pattern::separation_y(run, s, run.dir(s))));
        doc["y_factored"] = ys;
        doc["ok"] = true;
    } catch (const dilog::ToleranceExceeded& e) {
        doc["ok"] = false;
        doc["error"] = e.what();
        code = kExitVerification;
    }
    if (wedge) {
        auto el = dilog::wedge_check(run);
        doc["wedge"] = {{"zero", el.is_zero()}, {"surviving_pairs", el.size()}};
        if (!el.is_zero()) code = kExitVerification;
    }
    if (vt) {
        try {
            auto rep = dilog::vt_check(run);
            doc["vt"] = {{"steps", rep.steps_checked}, {"periodic", rep.periodic_equal}};
            if (!rep.periodic_equal) code = kExitVerification;
        } catch (const dilog::StepMismatch& e) {
            doc["vt"] = {{"error", e.what()}};
            code = kExitVerification;
        }
    }
    std::ostringstream text;
    text << "verify-di: " << (code == kExitOk ? "ok" : "FAILED") << "\n";
    out.emit(doc, text.str());
    return code;
}

int cmd_ysystem(const std::string& xname, const std::string& xpname, const std::string& mode,
                long samples, double tol, const Output& out) {
    ysys::Diagram X = ysys::make_diagram(xname), Xp = ysys::make_diagram(xpname);
    json doc;
    doc["schema"] = "cdl/1";
    doc["command"] = "ysystem";
    doc["X"] = X.name();
    doc["Xp"] = Xp.name();
    doc["mode"] = mode;
    if (mode == "tropical") {
        auto res = ysys::tropical_run(X, Xp);
        doc["period"] = res.period;
        doc["omega_pair_used"] = res.omega_pair_used;
        doc["n_plus"] = res.n_plus;
        doc["n_minus"] = res.n_minus;
        json trace = json::array();
        for (size_t s = 0; s < res.C.size(); ++s)
            trace.push_back({{"step", s}, {"C", report::matrix_json(res.C[s])}});
        doc["trace"] = trace;
        std::ostringstream text;
        text << "period " << res.period << ", N+ = " << res.n_plus << ", N- = " << res.n_minus
             << "\n";
        out.emit(doc, text.str());
        return kExitOk;
    }
    if (mode != "symbolic") throw std::invalid_argument("mode must be tropical or symbolic");
    ysys::BipartiteQuiver Q = ysys::build_bipartite_quiver(X, Xp);
    int half = X.coxeter_number + Xp.coxeter_number;
    pattern::PatternRun hrun = pattern::run_pattern(ysys::build_bipartite_word(Q, half));
    auto nu = pattern::detect_period(hrun);
    bool halfok = nu.has_value() && *nu == ysys::omega_perm(Q);
    doc["half_period"] = half;
    doc["half_periodic"] = halfok;
    pattern::PatternRun frun = pattern::run_pattern(ysys::build_bipartite_word(Q, 2 * half));
    auto nuf = pattern::detect_period(frun);
    bool ok = halfok && nuf.has_value() && seed::perm_is_identity(*nuf);
    auto w = pattern::di_weights(frun);
    doc["n_plus"] = w.n_plus;
    doc["n_minus"] = w.n_minus;
    if (ok) {
        try {
            auto rep = dilog::verify_period_di(frun, *nuf, samples, tol, 1);
            doc["max_residual_di1"] = rep.max_residual_di1;
        } catch (const dilog::ToleranceExceeded& e) {
            doc["error"] = e.what();
            ok = false;
        }
    }
    doc["ok"] = ok;
    std::ostringstream text;
    text << "symbolic " << (ok ? "ok" : "FAILED") << ", N- = " << w.n_minus << "\n";
    out.emit(doc, text.str());
    return ok ? kExitOk : kExitVerification;
}

int cmd_csd(const std::string& delta_csv, int degree, const Output& out) {
    auto comma = delta_csv.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--delta needs d1,d2");
    long d1 = std::stol(delta_csv.substr(0, comma));
    long d2 = std::stol(delta_csv.substr(comma + 1));
    scatter::Rank2Diagram d = scatter::build_rank2_csd(d1, d2, degree);
    json doc = report::csd_json(d);
    std::ostringstream text;
    for (auto& w : d.walls) {
        text << (w.incoming ? "incoming " : "outgoing ") << "ray (" << w.ray[0] << "," << w.ray[1]
             << ") normal (" << w.normal[0] << "," << w.normal[1] << "):";
        for (auto& f : w.factors)
            text << "  [" << f.n[0] << "," << f.n[1] << "]^" << f.exponent.get_str();
        text << "\n";
    }
    out.emit(doc, text.str());
    return kExitOk;
}

int cmd_qdi(const std::string& type, const std::string& form, const std::string& qcase,
            int degree, const Output& out) {
    json doc;
    doc["schema"] = "cdl/1";
    doc["command"] = "qdi";
    quantum::QReport rep;
    if (!qcase.empty()) {
        doc["case"] = qcase;
        doc["degree"] = degree;
        if (qcase == "a1affine")
            rep = quantum::qcsd_wall_identity(quantum::QcsdCase::A1Affine, degree);
        else if (qcase == "a2twisted")
            rep = quantum::qcsd_wall_identity(quantum::QcsdCase::A2Twisted, degree);
        else
            throw std::invalid_argument("case must be a1affine or a2twisted");
    } else {
        doc["type"] = type;
        doc["form"] = form;
        doc["degree"] = degree;
        seed::IntMat B;
        if (type == "A2") B = [] { seed::IntMat m(2, 2); m.at(0, 1) = -1; m.at(1, 0) = 1; return m; }();
        else if (type == "B2") B = [] { seed::IntMat m(2, 2); m.at(0, 1) = -1; m.at(1, 0) = 2; return m; }();
        else if (type == "G2") B = [] { seed::IntMat m(2, 2); m.at(0, 1) = -1; m.at(1, 0) = 3; return m; }();
        else throw std::invalid_argument("type must be A2, B2, or G2");
        int len = type == "A2" ? 5 : (type == "B2" ? 6 : 8);
        std::vector<int> dirs;
        for (int s = 0; s < len; ++s) dirs.push_back(s % 2);
        pattern::PatternRun run = pattern::run_pattern(pattern::make_word(B, dirs));
        if (form == "tropical")
            rep = quantum::verify_qdi_tropical(run, degree);
        else if (form == "universal")
            rep = quantum::verify_qdi_universal(run, degree);
        else
            throw std::invalid_argument("form must be tropical or universal");
    }
    doc["ok"] = rep.ok;
    if (!rep.ok) doc["error"] = rep.detail;
    // base quantum dilogarithm data: root order and the series coefficients,
    // each as a numerator/denominator coefficient-array pair in t
    {
        qq::Ctx ctx = qq::make_context({{Rat(0)}}, {1}, degree);
        qq::QLaurent psi = qq::psi_q_series(qq::QLaurent::generator(ctx, 0), ctx->d);
        doc["root_order"] = ctx->d;
        json coeffs = json::array();
        for (int j = 0; j <= degree; ++j) {
            qq::QCoeff c = psi.abs_coeff({j});
            json num = json::array(), den = json::array();
            for (long k = 0; k <= std::max(0L, c.num().deg()); ++k)
                num.push_back(c.num().coeff(k).get_str());
            for (long k = 0; k <= std::max(0L, c.den().deg()); ++k)
                den.push_back(c.den().coeff(k).get_str());
            coeffs.push_back({{"num", num}, {"den", den}});
        }
        doc["psi_coefficients"] = coeffs;
    }
    out.emit(doc, std::string("qdi ") + (rep.ok ? "ok" : "FAILED") + "\n");
    return rep.ok ? kExitOk : kExitVerification;
}

int cmd_selftest(const Output& out) {
    auto results = accept::run_all();
    json doc;
    doc["schema"] = "cdl/1";
    doc["command"] = "selftest";
    json list = json::array();
    std::ostringstream text;
    for (auto& r : results) {
        list.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"ms", r.ms},
                        {"budget_ms", r.budget_ms},
                        {"detail", r.detail}});
        text << accept::format_line(r) << "\n";
        std::cerr << accept::format_line(r) << "\n";
    }
    bool ok = accept::all_pass(results);
    doc["criteria"] = list;
    doc["ok"] = ok;
    text << (ok ? "selftest: all criteria pass\n" : "selftest: FAILURES\n");
    out.emit(doc, text.str());
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for cluster patterns and dilogarithm identities"};
    app.require_subcommand(1);

    Output out;
    std::string matrix_path, word_csv, run_path;
    long samples = 100;
    double tol = 1e-9;
    unsigned long long rng_seed = 0;
    int degree_classical = 12, degree_quantum = 8;
    bool wedge = false, vt = false;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", out.format, "json or text")->default_val("json");
        sub->add_option("--out", out.path, "write the report to a file");
    };

    std::string delta_csv;
    auto* mutate = app.add_subcommand("mutate", "run a mutation word and emit the trace");
    mutate->add_option("--matrix", matrix_path, "exchange matrix JSON file")->required();
    mutate->add_option("--word", word_csv, "comma-separated 1-based directions")->required();
    mutate->add_option("--delta", delta_csv, "skew-symmetrizer override d1,d2,...");
    add_output(mutate);

    auto* vdi = app.add_subcommand("verify-di", "verify the identities attached to a period");
    vdi->add_option("--run", run_path, "run JSON produced by mutate");
    vdi->add_option("--matrix", matrix_path, "exchange matrix JSON file");
    vdi->add_option("--word", word_csv, "comma-separated 1-based directions");
    vdi->add_option("--delta", delta_csv, "skew-symmetrizer override d1,d2,...");
    vdi->add_option("--samples", samples)->default_val(100);
    vdi->add_option("--tol", tol)->default_val(1e-9);
    vdi->add_option("--rng-seed", rng_seed)->default_val(0);
    vdi->add_flag("--wedge", wedge, "also run the wedge condition");
    vdi->add_flag("--vt", vt, "also run the V-element check");
    add_output(vdi);

    std::string xname, xpname, mode = "tropical";
    auto* ysy = app.add_subcommand("ysystem", "tropical or symbolic Y-system run");
    ysy->add_option("--X", xname, "horizontal simply-laced diagram, e.g. A3")->required();
    ysy->add_option("--Xp", xpname, "vertical simply-laced diagram, e.g. A2")->required();
    ysy->add_option("--mode", mode, "tropical or symbolic")->default_val("tropical");
    ysy->add_option("--samples", samples)->default_val(20);
    ysy->add_option("--tol", tol)->default_val(1e-8);
    add_output(ysy);

    auto* csd = app.add_subcommand("csd", "build a rank-2 cluster scattering diagram");
    csd->add_option("--delta", delta_csv, "d1,d2")->required();
    csd->add_option("--degree", degree_classical)->default_val(12);
    add_output(csd);

    std::string qtype, qform = "tropical", qcase;
    auto* qdi = app.add_subcommand("qdi", "verify quantum dilogarithm identities");
    qdi->add_option("--type", qtype, "A2, B2, or G2");
    qdi->add_option("--form", qform, "tropical or universal")->default_val("tropical");
    qdi->add_option("--case", qcase, "a1affine or a2twisted");
    qdi->add_option("--degree", degree_quantum)->default_val(8);
    add_output(qdi);

    auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
    add_output(self);

    CLI11_PARSE(app, argc, argv);

    try {
        if (mutate->parsed()) return cmd_mutate(matrix_path, word_csv, delta_csv, out);
        if (vdi->parsed())
            return cmd_verify_di(run_path, matrix_path, word_csv, delta_csv, samples, tol,
                                 rng_seed, wedge, vt, out);
        if (ysy->parsed()) return cmd_ysystem(xname, xpname, mode, samples, tol, out);
        if (csd->parsed()) return cmd_csd(delta_csv, degree_classical, out);
        if (qdi->parsed()) return cmd_qdi(qtype, qform, qcase, degree_quantum, out);
        if (self->parsed()) return cmd_selftest(out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const seed::BadMatrix& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
