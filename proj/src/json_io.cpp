#include "lipwb/json_io.hpp"

#include "lipwb/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lipwb {

Json q_to_json(const Q& q) { return to_string(q); }

Q q_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

Json qvec_to_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(q_to_json(q));
    return a;
}

QVec qvec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    QVec v;
    for (const auto& e : j) v.push_back(q_from_json(e));
    return v;
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t as_index(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

}  // namespace

Json space_to_json(const FiniteMetricSpace& sp) {
    Json j;
    j["name"] = sp.name;
    j["base"] = 0;
    Json pts = Json::array();
    for (std::size_t i = 0; i < sp.size(); ++i) pts.push_back(sp.label(i));
    j["points"] = pts;
    Json d = Json::array();
    for (const auto& row : sp.dist) d.push_back(qvec_to_json(row));
    j["dist"] = d;
    return j;
}

SpacePtr space_from_json(const Json& j) {
    std::string name = j.contains("name") ? field(j, "name").get<std::string>() : "space";
    const Json& dj = field(j, "dist");
    if (!dj.is_array()) throw ParseError("'dist' must be an array of rows");
    QMat d;
    for (const auto& row : dj) d.push_back(qvec_from_json(row));
    for (const auto& row : d)
        if (row.size() != d.size()) throw StructuralError("distance matrix is not square");
    std::vector<std::string> labels;
    if (j.contains("points")) {
        for (const auto& p : j.at("points")) labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
        if (labels.size() != d.size()) throw StructuralError("'points' and 'dist' differ in size");
    }
    std::size_t base = j.contains("base") ? as_index(j.at("base"), "base") : 0;
    auto sp = make_space(name, std::move(d), std::move(labels));
    if (base >= sp->size()) throw StructuralError("base out of range");
    if (base == 0) return sp;
    auto moved = repoint(*sp, base);
    return make_space(name, moved->dist, moved->labels);
}

Json function_to_json(const LipschitzFunction& f, bool inline_space) {
    Json j;
    j["space"] = inline_space ? space_to_json(*f.space) : Json(f.space->name);
    j["values"] = qvec_to_json(f.values);
    return j;
}

LipschitzFunction function_from_json(const Json& j, SpacePtr sp) {
    const Json& s = field(j, "space");
    if (s.is_object()) sp = space_from_json(s);
    else if (!sp) throw ParseError("function names space '" + s.dump() + "' but none was supplied");
    else if (s.is_string() && s.get<std::string>() != sp->name)
        throw ParseError("function space '" + s.get<std::string>() + "' does not match '" + sp->name + "'");
    return LipschitzFunction(sp, qvec_from_json(field(j, "values")));
}

Json attainment_to_json(const AttainmentReport& r) {
    Json j;
    j["norm"] = q_to_json(r.norm);
    Json pairs = Json::array();
    for (const auto& [p, q] : r.strong_pairs) pairs.push_back({p, q});
    j["strong_pairs"] = pairs;
    j["pointwise_sup"] = qvec_to_json(r.pointwise_sup);
    j["pointwise_defect"] = qvec_to_json(r.pointwise_defect);
    return j;
}

Json free_element_to_json(const FreeElement& mu) {
    Json j;
    j["space"] = mu.space ? mu.space->name : "";
    Json w = Json::object();
    for (const auto& [k, v] : mu.weights) w[std::to_string(k)] = q_to_json(v);
    j["weights"] = w;
    return j;
}

FreeElement free_element_from_json(const Json& j, SpacePtr sp) {
    if (!sp) throw ParseError("free element needs a space");
    const Json& w = field(j, "weights");
    if (!w.is_object()) throw ParseError("'weights' must be an object");
    std::map<std::size_t, Q> weights;
    for (const auto& [k, v] : w.items()) {
        std::size_t idx;
        try {
            std::size_t used = 0;
            idx = std::stoul(k, &used);
            if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            throw ParseError("weight key '" + k + "' is not an index");
        }
        weights[idx] += q_from_json(v);
    }
    return FreeElement(sp, std::move(weights));
}

Json free_norm_to_json(const FreeNormResult& r) {
    Json j;
    j["norm"] = q_to_json(r.norm);
    j["dual_witness"] = qvec_to_json(r.witness.values);
    j["pivots"] = r.pivots;
    return j;
}

Json pl_to_json(const PiecewiseLinearFunction& f) {
    Json j;
    j["breakpoints"] = qvec_to_json(f.xs);
    j["values"] = qvec_to_json(f.ys);
    j["extend"] = f.extend_left && f.extend_right ? "constant" : f.extend_left ? "left" : f.extend_right ? "right" : "none";
    j["base"] = q_to_json(f.base);
    return j;
}

PiecewiseLinearFunction pl_from_json(const Json& j) {
    std::string ext = j.contains("extend") ? j.at("extend").get<std::string>() : "none";
    bool l = ext == "constant" || ext == "left", r = ext == "constant" || ext == "right";
    if (!l && !r && ext != "none") throw ParseError("unknown extend mode '" + ext + "'");
    Q base = j.contains("base") ? q_from_json(j.at("base")) : Q(0);
    return PiecewiseLinearFunction(qvec_from_json(field(j, "breakpoints")), qvec_from_json(field(j, "values")), l, r, base);
}

Json tree_to_json(const WeightedTree& t) {
    Json j;
    j["vertices"] = t.vertices;
    Json e = Json::array();
    for (const auto& ed : t.edges) e.push_back({ed.u, ed.v, q_to_json(ed.length)});
    j["edges"] = e;
    j["base"] = t.base;
    return j;
}

WeightedTree tree_from_json(const Json& j) {
    WeightedTree t;
    t.vertices = as_index(field(j, "vertices"), "vertices");
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 3) throw ParseError("edge must be [u, v, length]");
        t.edges.push_back({as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"), q_from_json(e[2])});
    }
    t.base = j.contains("base") ? as_index(j.at("base"), "base") : 0;
    check_tree(t);
    return t;
}

Json check_to_json(const CheckResult& r) {
    Json j;
    j["passed"] = r.passed;
    if (!r.passed) {
        j["clause"] = r.clause;
        j["witness"] = r.witness;
        j["values"] = qvec_to_json(r.values);
    }
    return j;
}

Json report_to_json(const VerificationReport& r, std::optional<std::size_t> N, std::optional<bool> checker) {
    Json j;
    j["theorem"] = r.theorem;
    j["space"] = r.space;
    j["N"] = N ? Json(*N) : Json(nullptr);
    j["checker"] = checker ? Json(*checker) : Json(nullptr);
    j["target"] = to_string(r.target);
    j["coeff_count"] = r.coeff_count;
    j["seed"] = r.seed;
    j["exact_pass"] = r.exact_pass;
    j["norm_bounded"] = r.norm_bounded;
    j["residue_pass"] = r.residue_pass;
    j["failures"] = r.failures;
    j["worst_defect"] = q_to_json(r.worst_defect);
    Json samples = Json::array();
    for (const auto& s : r.samples) {
        Json e;
        e["coeffs"] = qvec_to_json(s.coeffs);
        e["norm"] = q_to_json(s.norm);
        e["target"] = q_to_json(s.target);
        e["point"] = s.point;
        e["partner"] = s.partner ? Json(*s.partner) : Json(nullptr);
        e["defect"] = q_to_json(s.defect);
        e["residue"] = q_to_json(s.residue);
        e["ok"] = s.ok;
        samples.push_back(e);
    }
    j["witness_samples"] = samples;
    return j;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

}  // namespace lipwb
