// Command-line front end: constructions, verification, analysis, searches,
// and circuit export, with reproducible JSON artifacts.
//
// Exit codes: 0 success/valid; 1 invalid representation; 2 input error;
// 3 infeasible (no object with the requested shape exists); 4 candidate
// budget exhausted (indeterminate).

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nnrep/boolfn.hpp"
#include "nnrep/circuit.hpp"
#include "nnrep/construct.hpp"
#include "nnrep/json_io.hpp"
#include "nnrep/linalg.hpp"
#include "nnrep/nnrepr.hpp"
#include "nnrep/rational.hpp"
#include "nnrep/search.hpp"

namespace {

using nnrep::AnchorMatrix;
using nnrep::BooleanFunction;
using nnrep::Rational;
using nnrep::SymmetricProfile;
using Json = nnrep::io::Json;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

// Collects artifacts for one run and writes the closing manifest (the only
// artifact that carries timing).
class Run {
  public:
    Run(std::filesystem::path dir, std::string command, std::vector<std::string> args)
        : dir_(std::move(dir)), command_(std::move(command)), args_(std::move(args)) {
        std::filesystem::create_directories(dir_);
        start_ = std::chrono::steady_clock::now();
    }

    void write(const std::string& name, const Json& j) {
        nnrep::io::save_json(j, dir_ / name);
        names_.push_back(name);
    }

    void write_text(const std::string& name, const std::string& text) {
        std::ofstream out(dir_ / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + (dir_ / name).string());
        out << text;
        names_.push_back(name);
    }

    void finish() {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        Json m;
        m["command"] = command_;
        m["arguments"] = args_;
        m["artifacts"] = names_;
        m["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        m["version"] = kVersion;
        nnrep::io::save_json(m, dir_ / "manifest.json");
    }

  private:
    std::filesystem::path dir_;
    std::string command_;
    std::vector<std::string> args_;
    std::vector<std::string> names_;
    std::chrono::steady_clock::time_point start_;
};

void emit(const Json& summary, const std::string& text, const std::string& format) {
    if (format == "json")
        std::cout << nnrep::io::dump_canonical(summary);
    else
        std::cout << text;
}

BooleanFunction load_function(const std::string& path) {
    return nnrep::io::function_from_json(nnrep::io::load_json(path));
}

std::string describe_failures(const nnrep::VerificationReport& report, std::size_t limit) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.failures.size() && i < limit; ++i) {
        const auto& f = report.failures[i];
        out << "  input " << f.input << ": "
            << (f.reason == nnrep::FailureReason::WrongLabel ? "wrong label" : "cross-label tie")
            << "\n";
    }
    if (report.failures.size() > limit)
        out << "  ... and " << (report.failures.size() - limit) << " more\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// construct

int cmd_construct(Run& run, const std::string& function_path, const std::string& method,
                  const std::string& params_path, int jobs, const std::string& format) {
    const BooleanFunction f = load_function(function_path);
    nnrep::ConstructionParams params;
    if (!params_path.empty())
        params = nnrep::io::params_from_json(nnrep::io::load_json(params_path));

    std::optional<AnchorMatrix> anchors;
    if (method == "parity" || method == "parity-ext" || method == "interval" ||
        method == "symlt") {
        const SymmetricProfile* p = f.as_symmetric();
        if (!p)
            throw std::invalid_argument("method " + method + " needs a symmetric function");
        if (method == "parity") {
            anchors = nnrep::parity_based(*p);
        } else if (method == "parity-ext") {
            nnrep::FmCertificate certificate;
            anchors = nnrep::parity_extension(*p, &certificate);
            if (!anchors) {
                Json c;
                c["feasible"] = false;
                c["constraints"] = certificate.sources;
                c["detail"] = certificate.detail;
                run.write("certificate.json", c);
                run.finish();
                Json summary;
                summary["method"] = method;
                summary["status"] = "infeasible";
                emit(summary,
                     "infeasible: no equal-entry anchor set exists for this function\n" +
                         certificate.detail,
                     format);
                return kExitInfeasible;
            }
        } else if (method == "interval") {
            anchors = nnrep::interval_construction(*p, params);
        } else {  // symlt
            const nnrep::IntervalList runs = nnrep::intervals(*p);
            if (runs.size() != 2 || runs[0].value != 0)
                throw std::invalid_argument(
                    "method symlt needs a profile of the form 0...01...1");
            anchors = nnrep::symmetric_lt_anchor(p->n, runs[1].lo);
        }
    } else if (method == "lt") {
        const nnrep::LinearThresholdFn* t = f.as_threshold();
        if (!t) throw std::invalid_argument("method lt needs a threshold function");
        anchors = nnrep::lt_two_anchor(*t);
    } else {
        throw std::invalid_argument("unknown method " + method);
    }

    const nnrep::VerificationReport report = nnrep::verify_representation(*anchors, f, jobs);
    const int res = nnrep::res_of_matrix(anchors->coords);

    run.write("anchors.json", nnrep::io::anchors_to_json(*anchors));
    Json rj = nnrep::io::report_to_json(report);
    rj["anchor_count"] = static_cast<int>(anchors->count());
    rj["res"] = res;
    run.write("report.json", rj);
    run.finish();

    Json summary;
    summary["method"] = method;
    summary["anchor_count"] = static_cast<int>(anchors->count());
    summary["res"] = res;
    summary["valid"] = report.valid;
    std::ostringstream text;
    text << "method " << method << ": " << anchors->count() << " anchors, res " << res << ", "
         << (report.valid ? "valid" : "INVALID") << "\n";
    if (!report.valid) text << describe_failures(report, 10);
    emit(summary, text.str(), format);
    return report.valid ? kExitValid : kExitInvalid;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(Run& run, const std::string& function_path, const std::string& anchors_path,
               int jobs, const std::string& format) {
    const BooleanFunction f = load_function(function_path);
    const AnchorMatrix anchors =
        nnrep::io::anchors_from_json(nnrep::io::load_json(anchors_path));
    if (anchors.n() != f.n())
        throw std::invalid_argument("anchor dimension does not match function arity");

    const nnrep::VerificationReport report = nnrep::verify_representation(anchors, f, jobs);
    Json rj = nnrep::io::report_to_json(report);
    rj["res"] = nnrep::res_of_matrix(anchors.coords);
    run.write("report.json", rj);
    run.finish();

    std::ostringstream text;
    text << (report.valid ? "valid" : "INVALID") << " (" << anchors.count() << " anchors over "
         << anchors.n() << " inputs)\n";
    if (!report.valid) text << describe_failures(report, 10);
    if (!report.warning.empty()) text << "warning: " << report.warning << "\n";
    emit(rj, text.str(), format);
    return report.valid ? kExitValid : kExitInvalid;
}

// ---------------------------------------------------------------------------
// analyze

std::optional<SymmetricProfile> deduce_profile(const BooleanFunction& f) {
    if (const SymmetricProfile* p = f.as_symmetric()) return *p;
    if (f.n() > 24) return std::nullopt;
    SymmetricProfile p;
    p.n = f.n();
    p.values.assign(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<char> seen(static_cast<std::size_t>(p.n) + 1, 0);
    for (std::uint32_t x = 0; x < (1u << p.n); ++x) {
        const int k = std::popcount(x);
        const std::uint8_t v = f.eval(x);
        if (!seen[k]) {
            seen[k] = 1;
            p.values[k] = v;
        } else if (p.values[k] != v) {
            return std::nullopt;
        }
    }
    return p;
}

int cmd_analyze(Run& run, const std::string& function_path, const std::string& format) {
    const BooleanFunction f = load_function(function_path);
    Json a;
    a["n"] = f.n();

    std::ostringstream text;
    text << "n = " << f.n() << "\n";

    const auto profile = deduce_profile(f);
    a["symmetric"] = profile.has_value();
    if (profile) {
        const nnrep::IntervalList runs = nnrep::intervals(*profile);
        Json iv = Json::array();
        for (const auto& r : runs)
            iv.push_back({{"lo", r.lo}, {"hi", r.hi}, {"value", static_cast<int>(r.value)}});
        a["intervals"] = iv;
        a["interval_count"] = static_cast<int>(runs.size());
        const auto period = nnrep::is_periodic(*profile);
        a["periodic"] = period.has_value();
        a["period"] = period ? Json(*period) : Json(nullptr);
        text << "symmetric, " << runs.size() << " intervals";
        if (period) text << ", periodic with T = " << *period;
        text << "\n";
    } else {
        text << "not symmetric\n";
    }

    std::optional<nnrep::LinearThresholdFn> witness;
    if (profile) {
        witness = nnrep::is_linear_threshold(BooleanFunction(*profile));
    } else if (f.as_threshold()) {
        witness = nnrep::is_linear_threshold(f);
    } else if (f.n() <= 12) {
        witness = nnrep::is_linear_threshold(f);
    }
    if (witness) {
        Json w;
        w["weights"] = Json::array();
        for (int i = 0; i < witness->weights.size(); ++i)
            w["weights"].push_back(nnrep::io::int_to_json(witness->weights(i)));
        w["threshold"] = nnrep::io::int_to_json(witness->threshold);
        a["linear_threshold"] = w;
        text << "linear threshold function (threshold " << witness->threshold << ")\n";
    } else {
        a["linear_threshold"] = nullptr;
        text << "not a linear threshold function\n";
    }

    run.write("analysis.json", a);
    run.finish();
    emit(a, text.str(), format);
    return kExitValid;
}

// ---------------------------------------------------------------------------
// search

int cmd_search(Run& run, const std::string& function_path, const std::string& mode,
               const std::string& budget_path, const std::string& format) {
    const BooleanFunction f = load_function(function_path);
    nnrep::SearchBudget budget;
    if (!budget_path.empty())
        budget = nnrep::io::budget_from_json(nnrep::io::load_json(budget_path));

    nnrep::SearchResult result;
    if (mode == "bnn")
        result = nnrep::bnn_exhaustive(f, budget);
    else if (mode == "grid")
        result = nnrep::nn_grid_search(f, budget);
    else
        throw std::invalid_argument("unknown search mode " + mode);

    Json rj = nnrep::io::search_result_to_json(result);
    rj["mode"] = mode;
    run.write("result.json", rj);
    run.finish();

    std::ostringstream text;
    switch (result.status) {
        case nnrep::SearchStatus::Found:
            text << "found " << result.witness->count() << "-anchor representation after "
                 << result.candidates_tried << " candidates\n";
            break;
        case nnrep::SearchStatus::ExhaustedSpace:
            text << "no representation in the search space (" << result.candidates_tried
                 << " candidates checked)\n";
            break;
        case nnrep::SearchStatus::ExhaustedBudget:
            text << "budget exhausted after " << result.candidates_tried
                 << " candidates, result indeterminate\n";
            break;
    }
    if (result.grid_relative) text << "note: result is relative to the value grid\n";
    emit(rj, text.str(), format);
    switch (result.status) {
        case nnrep::SearchStatus::Found:
            return kExitValid;
        case nnrep::SearchStatus::ExhaustedSpace:
            return kExitInfeasible;
        default:
            return kExitBudget;
    }
}

// ---------------------------------------------------------------------------
// circuit

int cmd_circuit(Run& run, const std::string& anchors_path, const std::string& function_path,
                int jobs, const std::string& format) {
    const AnchorMatrix anchors =
        nnrep::io::anchors_from_json(nnrep::io::load_json(anchors_path));
    const BooleanFunction f = load_function(function_path);
    if (anchors.n() != f.n())
        throw std::invalid_argument("anchor dimension does not match function arity");

    const nnrep::VerificationReport report = nnrep::verify_representation(anchors, f, jobs);
    if (!report.valid) {
        run.finish();
        emit(Json{{"valid", false}},
             "INVALID representation, refusing to export a circuit\n" +
                 describe_failures(report, 10),
             format);
        return kExitInvalid;
    }

    const bool has_pos = std::find(anchors.labels.begin(), anchors.labels.end(), 1) !=
                         anchors.labels.end();
    const bool has_neg = std::find(anchors.labels.begin(), anchors.labels.end(), 0) !=
                         anchors.labels.end();
    if (!has_pos || !has_neg) {
        // A valid single-label representation means f is constant; there is no
        // OR-of-AND-of-THR circuit to export, so emit a diagnostic instead.
        const int value = has_pos ? 1 : 0;
        Json diag;
        diag["constant"] = value;
        diag["n"] = f.n();
        run.write("constant.json", diag);
        run.finish();
        emit(Json{{"constant", value}, {"gates", nullptr}},
             "constant function (value " + std::to_string(value) +
                 "), no threshold circuit to export\n",
             format);
        return kExitValid;
    }

    const nnrep::ThresholdCircuit circuit = nnrep::nn_to_circuit(anchors);
    const bool equivalent = nnrep::circuit_equiv_check(circuit, f);

    run.write("circuit.json", nnrep::io::circuit_to_json(circuit));
    run.write_text("netlist.txt", nnrep::to_netlist(circuit));
    run.finish();

    Json summary;
    summary["gates"] = circuit.size();
    summary["threshold_gates"] = static_cast<int>(circuit.thr.size());
    summary["and_gates"] = static_cast<int>(circuit.and_gates.size());
    summary["equivalent"] = equivalent;
    std::ostringstream text;
    text << circuit.size() << " gates (" << circuit.thr.size() << " threshold, "
         << circuit.and_gates.size() << " AND, 1 OR), equivalence "
         << (equivalent ? "verified" : "FAILED") << "\n";
    emit(summary, text.str(), format);
    return equivalent ? kExitValid : kExitInvalid;
}

// ---------------------------------------------------------------------------
// reproduce scenarios

struct Scenario {
    std::string id;
    bool pass = false;
    std::string detail;
};

SymmetricProfile make_profile(int n, std::initializer_list<int> values) {
    SymmetricProfile p;
    p.n = n;
    for (int v : values) p.values.push_back(static_cast<std::uint8_t>(v));
    return p;
}

SymmetricProfile parity_profile(int n) {
    SymmetricProfile p;
    p.n = n;
    for (int k = 0; k <= n; ++k) p.values.push_back(static_cast<std::uint8_t>(k & 1));
    return p;
}

AnchorMatrix constant_row_anchors(int n, std::initializer_list<std::pair<const char*, int>> rows) {
    AnchorMatrix a;
    a.coords = nnrep::RatMatrix::Zero(static_cast<Eigen::Index>(rows.size()), n);
    Eigen::Index i = 0;
    for (const auto& [value, label] : rows) {
        const Rational r = nnrep::parse_rational(value);
        for (int j = 0; j < n; ++j) a.coords(i, j) = r;
        a.labels.push_back(static_cast<std::uint8_t>(label));
        ++i;
    }
    return a;
}

bool matrix_equals(const AnchorMatrix& a, const AnchorMatrix& b) {
    if (a.count() != b.count() || a.n() != b.n() || a.labels != b.labels) return false;
    return a.coords == b.coords;
}

Scenario scenario_fig1(const std::string& id) {
    Scenario s{id};
    AnchorMatrix a;
    SymmetricProfile p;
    if (id == "fig1-and") {
        a = constant_row_anchors(2, {{"0.5", 0}, {"1", 1}});
        p = make_profile(2, {0, 0, 1});
    } else if (id == "fig1-or") {
        a = constant_row_anchors(2, {{"0", 0}, {"0.5", 1}});
        p = make_profile(2, {0, 1, 1});
    } else {
        a = constant_row_anchors(2, {{"0", 0}, {"0.5", 1}, {"1", 0}});
        p = make_profile(2, {0, 1, 0});
    }
    const auto report = nnrep::verify_representation(a, BooleanFunction(p));
    s.pass = report.valid;
    s.detail = s.pass ? "printed anchors verify" : "printed anchors failed verification";
    return s;
}

Scenario scenario_fig2_bnn_xor() {
    Scenario s{"fig2-bnn-xor"};
    nnrep::SearchBudget budget;
    budget.max_anchors = 4;
    budget.max_candidates = std::uint64_t(-1);
    const auto result = nnrep::bnn_exhaustive(BooleanFunction(make_profile(2, {0, 1, 0})), budget);
    s.pass = result.status == nnrep::SearchStatus::Found && result.witness->count() == 4;
    s.detail = "minimal vertex-anchor size " +
               std::to_string(result.witness ? result.witness->count() : -1) + ", expected 4";
    return s;
}

Scenario scenario_fig3(const std::string& id) {
    Scenario s{id};
    const bool is_and = id == "fig3-parity-and";
    const SymmetricProfile p =
        is_and ? make_profile(2, {0, 0, 1}) : make_profile(2, {0, 1, 1});
    const AnchorMatrix expected =
        is_and ? constant_row_anchors(2, {{"0", 0}, {"0.5", 0}, {"1", 1}})
               : constant_row_anchors(2, {{"0", 0}, {"0.5", 1}, {"1", 1}});
    const AnchorMatrix got = nnrep::parity_based(p);
    const auto report = nnrep::verify_representation(got, BooleanFunction(p));
    s.pass = matrix_equals(got, expected) && report.valid;
    s.detail = s.pass ? "construction matches printed anchors and verifies"
                      : "construction deviates from printed anchors";
    return s;
}

Scenario scenario_eq1() {
    Scenario s{"eq1-parity-based"};
    const SymmetricProfile p = make_profile(5, {0, 0, 1, 1, 1, 0});
    const AnchorMatrix expected = constant_row_anchors(
        5, {{"0", 0}, {"0.2", 0}, {"0.4", 1}, {"0.6", 1}, {"0.8", 1}, {"1", 0}});
    const AnchorMatrix got = nnrep::parity_based(p);
    const auto report = nnrep::verify_representation(got, BooleanFunction(p));
    s.pass = matrix_equals(got, expected) && report.valid;
    s.detail = s.pass ? "one anchor per weight at (i-1)/n, verified"
                      : "construction deviates from printed anchors";
    return s;
}

Scenario scenario_eq2() {
    Scenario s{"eq2-intervals"};
    const auto runs = nnrep::intervals(make_profile(5, {0, 0, 1, 1, 1, 0}));
    s.pass = runs.size() == 3 && runs[0].lo == 0 && runs[0].hi == 1 && runs[0].value == 0 &&
             runs[1].lo == 2 && runs[1].hi == 4 && runs[1].value == 1 && runs[2].lo == 5 &&
             runs[2].hi == 5 && runs[2].value == 0 &&
             nnrep::interval_count(make_profile(2, {0, 1, 0})) == 3 &&
             nnrep::interval_count(make_profile(2, {0, 0, 1})) == 2 &&
             nnrep::interval_count(make_profile(2, {0, 1, 1})) == 2;
    s.detail = "interval split [0,1],[2,4],[5,5] with 3/3/2/2 counts";
    return s;
}

Scenario scenario_eq3() {
    Scenario s{"eq3-parity-extension"};
    const SymmetricProfile p = make_profile(5, {0, 0, 1, 1, 1, 0});
    const AnchorMatrix printed =
        constant_row_anchors(5, {{"0.1", 0}, {"0.6", 1}, {"1.1", 0}});
    const auto report = nnrep::verify_representation(printed, BooleanFunction(p));
    const bool printed_ok = report.valid && nnrep::check_ns_condition(printed, nnrep::intervals(p));
    const auto ours = nnrep::parity_extension(p);
    const bool ours_ok =
        ours && nnrep::verify_representation(*ours, BooleanFunction(p)).valid;
    s.pass = printed_ok && ours_ok;
    s.detail = "printed equal-entry anchors verify; solver finds its own witness";
    return s;
}

Scenario scenario_eq25() {
    Scenario s{"eq25-counterexample"};
    const SymmetricProfile p = make_profile(8, {1, 0, 1, 1, 1, 1, 1, 0, 1});
    const AnchorMatrix got = nnrep::interval_construction(p);
    const char* printed[5][8] = {
        {"17.78", "2.28", "-5.72", "-21.22", "-1.53", "-1.53", "-1.53", "-1.53"},
        {"19.28", "3.28", "-4.72", "-20.22", "-0.53", "-0.53", "-0.53", "-0.53"},
        {"20.28", "4.78", "-3.72", "-19.22", "0.47", "0.47", "0.47", "0.47"},
        {"21.28", "5.78", "-2.22", "-18.22", "1.47", "1.47", "1.47", "1.47"},
        {"22.28", "6.78", "-1.22", "-16.72", "2.47", "2.47", "2.47", "2.47"},
    };
    const std::vector<std::uint8_t> labels{1, 0, 1, 0, 1};
    Rational max_dev(0);
    bool shape = got.count() == 5 && got.n() == 8 && got.labels == labels;
    if (shape)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 8; ++j) {
                Rational dev = got.coords(i, j) - nnrep::parse_rational(printed[i][j]);
                if (dev < 0) dev = -dev;
                if (dev > max_dev) max_dev = dev;
            }
    const bool close = shape && max_dev <= Rational(1, 100);
    const bool valid = nnrep::verify_representation(got, BooleanFunction(p)).valid;
    s.pass = close && valid;
    s.detail = "max per-entry deviation from the printed two-decimal matrix: " +
               nnrep::to_string(max_dev);
    return s;
}

Scenario scenario_eq26() {
    Scenario s{"eq26-infeasible"};
    const SymmetricProfile p = make_profile(8, {1, 0, 1, 1, 1, 1, 1, 0, 1});
    nnrep::FmCertificate certificate;
    const auto result = nnrep::parity_extension(p, &certificate);
    s.pass = !result && !certificate.sources.empty();
    s.detail = s.pass ? "no equal-entry anchor set; certificate combines " +
                            std::to_string(certificate.sources.size()) + " constraints"
                      : "expected infeasibility was not detected";
    return s;
}

Scenario scenario_eq37() {
    Scenario s{"eq37-no-interval-assignment"};
    const SymmetricProfile p = make_profile(5, {0, 1, 1, 1, 1, 0});
    AnchorMatrix a;
    a.coords = nnrep::RatMatrix::Zero(3, 5);
    const char* rows[3][5] = {
        {"0", "0.57", "0.57", "0.57", "0.57"},
        {"0.5", "0.5", "0.5", "0.5", "0.5"},
        {"1", "0.43", "0.43", "0.43", "0.43"},
    };
    a.labels = {1, 0, 1};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) a.coords(i, j) = nnrep::parse_rational(rows[i][j]);
    const auto report = nnrep::verify_representation(a, BooleanFunction(p));
    const bool interval = nnrep::is_interval_assignment(report, nnrep::intervals(p));
    s.pass = report.valid && !interval;
    s.detail = "valid representation whose winners do not follow the interval order";
    return s;
}

Scenario scenario_thm1_nn(int n) {
    Scenario s{"thm1-nn-parity-" + std::to_string(n)};
    const SymmetricProfile p = parity_profile(n);
    const AnchorMatrix a = nnrep::parity_based(p);
    const auto report = nnrep::verify_representation(a, BooleanFunction(p));
    s.pass = a.count() == n + 1 && report.valid;
    s.detail = std::to_string(n + 1) + " anchors, one per weight";
    return s;
}

Scenario scenario_thm1_bnn(int n) {
    Scenario s{"thm1-bnn-parity-" + std::to_string(n)};
    const int bnn = nnrep::bnn_parity_check(n);
    s.pass = bnn == (1 << n);
    s.detail = "minimal vertex-anchor size " + std::to_string(bnn) + ", expected " +
               std::to_string(1 << n);
    return s;
}

Scenario scenario_thm2(int n) {
    Scenario s{"thm2-majority-bnn-" + std::to_string(n)};
    nnrep::SearchBudget budget;
    budget.max_anchors = 2;
    budget.max_candidates = std::uint64_t(-1);
    const auto result = nnrep::bnn_exhaustive(
        BooleanFunction(nnrep::symmetric_threshold(n, (n + 1) / 2)), budget);
    s.pass = result.status == nnrep::SearchStatus::Found && result.witness->count() == 2;
    s.detail = "majority over " + std::to_string(n) + " inputs has a 2-vertex representation";
    return s;
}

std::vector<std::string> all_scenario_ids() {
    std::vector<std::string> ids{"fig1-and",
                                 "fig1-or",
                                 "fig1-xor",
                                 "fig2-bnn-xor",
                                 "fig3-parity-and",
                                 "fig3-parity-or",
                                 "eq1-parity-based",
                                 "eq2-intervals",
                                 "eq3-parity-extension",
                                 "eq25-counterexample",
                                 "eq26-infeasible",
                                 "eq37-no-interval-assignment"};
    for (int n = 1; n <= 8; ++n) ids.push_back("thm1-nn-parity-" + std::to_string(n));
    for (int n = 1; n <= 3; ++n) ids.push_back("thm1-bnn-parity-" + std::to_string(n));
    ids.push_back("thm2-majority-bnn-3");
    ids.push_back("thm2-majority-bnn-5");
    return ids;
}

Scenario run_scenario(const std::string& id) {
    if (id.rfind("fig1-", 0) == 0) return scenario_fig1(id);
    if (id == "fig2-bnn-xor") return scenario_fig2_bnn_xor();
    if (id.rfind("fig3-", 0) == 0) return scenario_fig3(id);
    if (id == "eq1-parity-based") return scenario_eq1();
    if (id == "eq2-intervals") return scenario_eq2();
    if (id == "eq3-parity-extension") return scenario_eq3();
    if (id == "eq25-counterexample") return scenario_eq25();
    if (id == "eq26-infeasible") return scenario_eq26();
    if (id == "eq37-no-interval-assignment") return scenario_eq37();
    if (id.rfind("thm1-nn-parity-", 0) == 0)
        return scenario_thm1_nn(std::stoi(id.substr(std::string("thm1-nn-parity-").size())));
    if (id.rfind("thm1-bnn-parity-", 0) == 0)
        return scenario_thm1_bnn(std::stoi(id.substr(std::string("thm1-bnn-parity-").size())));
    if (id == "thm2-majority-bnn-3") return scenario_thm2(3);
    if (id == "thm2-majority-bnn-5") return scenario_thm2(5);
    throw std::invalid_argument("unknown scenario id " + id);
}

int cmd_reproduce(Run& run, std::vector<std::string> ids, const std::string& format) {
    if (ids.empty()) ids = all_scenario_ids();
    std::vector<Scenario> results;
    for (const std::string& id : ids) results.push_back(run_scenario(id));

    Json rj = Json::array();
    bool all_pass = true;
    std::ostringstream text;
    for (const Scenario& s : results) {
        rj.push_back({{"id", s.id}, {"pass", s.pass}, {"detail", s.detail}});
        all_pass = all_pass && s.pass;
        text << (s.pass ? "pass  " : "FAIL  ") << s.id << " — " << s.detail << "\n";
    }
    text << (all_pass ? "all scenarios pass" : "some scenarios FAILED") << "\n";

    run.write("reproduce.json", rj);
    run.finish();
    emit(rj, text.str(), format);
    return all_pass ? kExitValid : kExitInvalid;
}

// ---------------------------------------------------------------------------
// corpus generation

int cmd_seed_corpus(Run& run, int n, const std::string& format) {
    if (n < 1 || n > 10) throw std::invalid_argument("--seed-corpus n must be in [1,10]");
    const std::uint32_t total = 1u << (n + 1);
    for (std::uint32_t index = 0; index < total; ++index) {
        SymmetricProfile p;
        p.n = n;
        std::string bits;
        for (int k = 0; k <= n; ++k) {
            p.values.push_back(static_cast<std::uint8_t>((index >> k) & 1u));
            bits += static_cast<char>('0' + ((index >> k) & 1u));
        }
        run.write("sym" + std::to_string(n) + "_" + bits + ".json",
                  nnrep::io::function_to_json(BooleanFunction(p)));
    }
    run.finish();
    Json summary;
    summary["profiles"] = total;
    emit(summary, "wrote " + std::to_string(total) + " profiles\n", format);
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nearest-neighbor representations of Boolean functions"};
    app.set_version_flag("--version", kVersion);

    std::string output_dir = ".";
    std::string format = "text";
    int jobs = 1;
    int seed_corpus = 0;
    app.add_option("--output-dir", output_dir, "Directory for JSON artifacts");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", jobs, "Worker threads for verification")
        ->check(CLI::Range(1, 64));
    app.add_option("--seed-corpus", seed_corpus,
                   "Generate all 2^(n+1) symmetric profiles for the given n and exit");

    std::string function_path, anchors_path, params_path, budget_path;
    std::string method, mode;
    std::vector<std::string> ids;

    CLI::App* construct = app.add_subcommand("construct", "Build an anchor set for a function");
    construct->add_option("--function", function_path, "Function JSON file")->required();
    construct->add_option("--method", method, "parity | parity-ext | interval | lt | symlt")
        ->required()
        ->check(CLI::IsMember({"parity", "parity-ext", "interval", "lt", "symlt"}));
    construct->add_option("--params", params_path, "Construction parameters JSON file");

    CLI::App* verify = app.add_subcommand("verify", "Check an anchor set against a function");
    verify->add_option("--function", function_path, "Function JSON file")->required();
    verify->add_option("--anchors", anchors_path, "Anchor JSON file")->required();

    CLI::App* analyze = app.add_subcommand("analyze", "Intervals, periodicity, separability");
    analyze->add_option("--function", function_path, "Function JSON file")->required();

    CLI::App* search = app.add_subcommand("search", "Exhaustive representation search");
    search->add_option("--function", function_path, "Function JSON file")->required();
    search->add_option("--mode", mode, "bnn (vertex anchors) | grid (bounded-resolution)")
        ->required()
        ->check(CLI::IsMember({"bnn", "grid"}));
    search->add_option("--budget", budget_path, "Budget JSON file");

    CLI::App* circuit = app.add_subcommand("circuit", "Export a threshold circuit");
    circuit->add_option("--anchors", anchors_path, "Anchor JSON file")->required();
    circuit->add_option("--function", function_path, "Function JSON file")->required();

    CLI::App* reproduce = app.add_subcommand("reproduce", "Run the reference scenarios");
    reproduce->add_option("--id", ids, "Scenario id (repeatable; default: all)");
    bool list_ids = false;
    reproduce->add_flag("--list", list_ids, "List scenario ids and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help/--version exit 0; anything malformed is an input error
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (seed_corpus > 0) {
            if (!app.get_subcommands().empty())
                throw std::invalid_argument("--seed-corpus does not take a subcommand");
            Run run(output_dir, "seed-corpus", args);
            return cmd_seed_corpus(run, seed_corpus, format);
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return kExitInputError;
        }
        if (list_ids) {
            for (const std::string& id : all_scenario_ids()) std::cout << id << "\n";
            return kExitValid;
        }

        if (app.got_subcommand(construct)) {
            Run run(output_dir, "construct", args);
            return cmd_construct(run, function_path, method, params_path, jobs, format);
        }
        if (app.got_subcommand(verify)) {
            Run run(output_dir, "verify", args);
            return cmd_verify(run, function_path, anchors_path, jobs, format);
        }
        if (app.got_subcommand(analyze)) {
            Run run(output_dir, "analyze", args);
            return cmd_analyze(run, function_path, format);
        }
        if (app.got_subcommand(search)) {
            Run run(output_dir, "search", args);
            return cmd_search(run, function_path, mode, budget_path, format);
        }
        if (app.got_subcommand(circuit)) {
            Run run(output_dir, "circuit", args);
            return cmd_circuit(run, anchors_path, function_path, jobs, format);
        }
        if (app.got_subcommand(reproduce)) {
            Run run(output_dir, "reproduce", args);
            return cmd_reproduce(run, ids, format);
        }
        std::cerr << app.help();
        return kExitInputError;
    } catch (const nnrep::ConstructionError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
