#include "nnrep/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace nnrep::io {
namespace {

[[noreturn]] void bad(const std::string& message) { throw std::invalid_argument(message); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + '"');
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

int bit_value(const Json& j, const char* what) {
    if (j.is_boolean()) return j.get<bool>() ? 1 : 0;
    if (j.is_number_integer()) {
        const int v = j.get<int>();
        if (v == 0 || v == 1) return v;
    }
    bad(std::string(what) + " must be 0 or 1");
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("rational values must be strings like \"p/q\" or integers");
}

Json int_to_json(const Int& v) { return v.str(); }

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        const Rational q = parse_rational(j.get<std::string>());
        if (denominator(q) != 1) bad("expected an integer, got " + j.get<std::string>());
        return Int(numerator(q));
    }
    bad("integer values must be strings or integers");
}

Json function_to_json(const BooleanFunction& f) {
    Json j;
    if (const SymmetricProfile* p = f.as_symmetric()) {
        j["type"] = "symmetric";
        j["n"] = p->n;
        j["values"] = Json::array();
        for (auto v : p->values) j["values"].push_back(static_cast<int>(v));
    } else if (const LinearThresholdFn* t = f.as_threshold()) {
        j["type"] = "threshold";
        j["weights"] = Json::array();
        for (int i = 0; i < t->weights.size(); ++i) j["weights"].push_back(int_to_json(t->weights(i)));
        j["threshold"] = int_to_json(t->threshold);
    } else {
        const TruthTable* tab = f.as_truth_table();
        j["type"] = "truth_table";
        j["n"] = tab->n;
        std::string bits(tab->bits.size(), '0');
        for (std::size_t k = 0; k < tab->bits.size(); ++k)
            if (tab->bits[k]) bits[k] = '1';
        j["bits"] = bits;
    }
    return j;
}

BooleanFunction function_from_json(const Json& j) {
    const Json& type = field(j, "type");
    if (!type.is_string()) bad("function \"type\" must be a string");
    const std::string kind = type.get<std::string>();

    if (kind == "symmetric") {
        SymmetricProfile p;
        p.n = int_field(j, "n");
        const Json& values = field(j, "values");
        if (!values.is_array()) bad("\"values\" must be an array");
        for (const Json& v : values)
            p.values.push_back(static_cast<std::uint8_t>(bit_value(v, "profile value")));
        return BooleanFunction(std::move(p));
    }
    if (kind == "threshold") {
        const Json& weights = field(j, "weights");
        if (!weights.is_array() || weights.empty()) bad("\"weights\" must be a non-empty array");
        LinearThresholdFn t;
        t.weights = IntVector::Zero(static_cast<Eigen::Index>(weights.size()));
        for (std::size_t i = 0; i < weights.size(); ++i)
            t.weights(static_cast<Eigen::Index>(i)) = int_from_json(weights[i]);
        t.threshold = int_from_json(field(j, "threshold"));
        return BooleanFunction(std::move(t));
    }
    if (kind == "truth_table") {
        TruthTable t;
        t.n = int_field(j, "n");
        const Json& bits = field(j, "bits");
        if (!bits.is_string()) bad("\"bits\" must be a string of 0s and 1s");
        for (char c : bits.get<std::string>()) {
            if (c != '0' && c != '1') bad("\"bits\" must contain only 0 and 1");
            t.bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BooleanFunction(std::move(t));
    }
    bad("unknown function type \"" + kind + '"');
}

Json anchors_to_json(const AnchorMatrix& a) {
    Json j;
    j["n"] = a.n();
    j["anchors"] = Json::array();
    for (Eigen::Index i = 0; i < a.count(); ++i) {
        Json row;
        row["label"] = static_cast<int>(a.labels[static_cast<std::size_t>(i)]);
        row["coords"] = Json::array();
        for (int c = 0; c < a.n(); ++c) row["coords"].push_back(rational_to_json(a.coords(i, c)));
        j["anchors"].push_back(std::move(row));
    }
    return j;
}

AnchorMatrix anchors_from_json(const Json& j) {
    const int n = int_field(j, "n");
    if (n < 1) bad("anchor sets need n >= 1");
    const Json& rows = field(j, "anchors");
    if (!rows.is_array() || rows.empty()) bad("\"anchors\" must be a non-empty array");

    AnchorMatrix a;
    a.coords = RatMatrix::Zero(static_cast<Eigen::Index>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        a.labels.push_back(static_cast<std::uint8_t>(bit_value(field(rows[i], "label"), "label")));
        const Json& coords = field(rows[i], "coords");
        if (!coords.is_array() || coords.size() != static_cast<std::size_t>(n))
            bad("every \"coords\" array must have exactly n entries");
        for (int c = 0; c < n; ++c)
            a.coords(static_cast<Eigen::Index>(i), c) = rational_from_json(coords[c]);
    }
    return a;
}

Json circuit_to_json(const ThresholdCircuit& c) {
    Json j;
    j["n"] = c.n;
    j["thr"] = Json::array();
    for (const auto& gate : c.thr) {
        Json g;
        g["w"] = Json::array();
        for (int i = 0; i < gate.weights.size(); ++i) g["w"].push_back(int_to_json(gate.weights(i)));
        g["b"] = int_to_json(gate.threshold);
        j["thr"].push_back(std::move(g));
    }
    j["and"] = c.and_gates;
    j["or"] = c.or_gate;
    return j;
}

ThresholdCircuit circuit_from_json(const Json& j) {
    ThresholdCircuit c;
    c.n = int_field(j, "n");
    if (c.n < 1) bad("circuits need n >= 1");
    const Json& thr = field(j, "thr");
    if (!thr.is_array()) bad("\"thr\" must be an array");
    for (const Json& g : thr) {
        const Json& w = field(g, "w");
        if (!w.is_array() || w.size() != static_cast<std::size_t>(c.n))
            bad("every gate \"w\" must have exactly n entries");
        ThresholdCircuit::Gate gate;
        gate.weights = IntVector::Zero(c.n);
        for (int i = 0; i < c.n; ++i) gate.weights(i) = int_from_json(w[i]);
        gate.threshold = int_from_json(field(g, "b"));
        c.thr.push_back(std::move(gate));
    }
    const Json& ands = field(j, "and");
    if (!ands.is_array()) bad("\"and\" must be an array of index arrays");
    for (const Json& a : ands) {
        if (!a.is_array()) bad("\"and\" must be an array of index arrays");
        std::vector<int> conj;
        for (const Json& g : a) {
            if (!g.is_number_integer()) bad("gate references must be integers");
            const int idx = g.get<int>();
            if (idx < 0 || idx >= static_cast<int>(c.thr.size())) bad("threshold gate index out of range");
            conj.push_back(idx);
        }
        c.and_gates.push_back(std::move(conj));
    }
    const Json& ors = field(j, "or");
    if (!ors.is_array()) bad("\"or\" must be an array of indices");
    for (const Json& a : ors) {
        if (!a.is_number_integer()) bad("gate references must be integers");
        const int idx = a.get<int>();
        if (idx < 0 || idx >= static_cast<int>(c.and_gates.size())) bad("AND gate index out of range");
        c.or_gate.push_back(idx);
    }
    return c;
}

Json budget_to_json(const SearchBudget& b) {
    Json j;
    j["max_anchors"] = b.max_anchors;
    j["max_resolution"] = b.max_resolution;
    j["max_candidates"] = b.max_candidates;
    return j;
}

SearchBudget budget_from_json(const Json& j) {
    if (!j.is_object()) bad("budget must be an object");
    SearchBudget b;
    if (j.contains("max_anchors")) b.max_anchors = int_field(j, "max_anchors");
    if (j.contains("max_resolution")) b.max_resolution = int_field(j, "max_resolution");
    if (j.contains("max_candidates")) {
        const Json& v = j.at("max_candidates");
        if (!v.is_number_integer() || v.get<long long>() < 0)
            bad("\"max_candidates\" must be a non-negative integer");
        b.max_candidates = v.get<std::uint64_t>();
    }
    return b;
}

Json params_to_json(const ConstructionParams& p) {
    Json j;
    j["eps"] = rational_to_json(p.eps);
    j["lambdas"] = Json::array();
    for (const Rational& l : p.lambdas) j["lambdas"].push_back(rational_to_json(l));
    return j;
}

ConstructionParams params_from_json(const Json& j) {
    if (!j.is_object()) bad("params must be an object");
    ConstructionParams p;
    if (j.contains("eps")) p.eps = rational_from_json(j.at("eps"));
    if (j.contains("lambdas")) {
        const Json& ls = j.at("lambdas");
        if (!ls.is_array()) bad("\"lambdas\" must be an array");
        for (const Json& l : ls) p.lambdas.push_back(rational_from_json(l));
    }
    return p;
}

Json report_to_json(const VerificationReport& r, std::size_t max_failures) {
    Json j;
    j["valid"] = r.valid;
    j["failure_count"] = r.failures.size();
    j["failures"] = Json::array();
    for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) {
        Json f;
        f["input"] = r.failures[i].input;
        f["reason"] = r.failures[i].reason == FailureReason::WrongLabel ? "wrong_label"
                                                                        : "cross_label_tie";
        j["failures"].push_back(std::move(f));
    }
    if (!r.warning.empty()) j["warning"] = r.warning;
    return j;
}

Json search_result_to_json(const SearchResult& r) {
    Json j;
    j["status"] = r.status == SearchStatus::Found ? "found" : "exhausted";
    if (r.status != SearchStatus::Found)
        j["reason"] = r.status == SearchStatus::ExhaustedSpace ? "search space exhausted"
                                                               : "candidate budget exceeded";
    j["candidates_tried"] = r.candidates_tried;
    j["grid_relative"] = r.grid_relative;
    j["witness"] = r.witness ? anchors_to_json(*r.witness) : Json(nullptr);
    return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

void save_json(const Json& j, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << dump_canonical(j);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

Json load_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

}  // namespace nnrep::io
