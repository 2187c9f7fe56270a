#include "scx/report.hpp"

#include "scx/enumerate.hpp"
#include "scx/generators.hpp"
#include "scx/invariants.hpp"
#include "scx/pattern.hpp"
#include "scx/version.hpp"

#include <fstream>
#include <sstream>

namespace scx {

using nlohmann::json;

Z2Action ActionSpec::action() const {
    return Z2Action(Permutation::from_images(sigma1), Permutation::from_images(sigma2));
}

namespace {

std::vector<int> parse_sigma(const json& j, const char* name, int k) {
    try {
        if (j.is_string())
            return Permutation::from_cycles(j.get<std::string>(), k).images();
        if (j.is_array()) {
            std::vector<int> images = j.get<std::vector<int>>();
            if (static_cast<int>(images.size()) != k)
                throw std::invalid_argument("images array has length " +
                                            std::to_string(images.size()) + ", expected " +
                                            std::to_string(k));
            return Permutation::from_images(std::move(images)).images();
        }
    } catch (const std::invalid_argument& e) {
        throw SpecError(std::string(name) + ": " + e.what());
    } catch (const json::exception& e) {
        throw SpecError(std::string(name) + ": " + e.what());
    }
    throw SpecError(std::string(name) + ": expected a cycle-notation string or an images array");
}

json tool_header() {
    return json{{"name", kToolName}, {"version", kToolVersion}};
}

json input_json(const ActionSpec& spec) {
    return json{
        {"k", spec.k}, {"degree", spec.degree}, {"sigma1", spec.sigma1}, {"sigma2", spec.sigma2}};
}

json invariant_json(const CodimInvariant& inv) {
    json strata = json::object();
    for (Stratum s : all_strata) strata[stratum_name(s)] = inv.stratum_dims.at(s);
    return json{{"k", inv.k},
                {"degree", inv.degree_cap},
                {"cap_warning", inv.cap_warning},
                {"strata", strata},
                {"distinct", std::vector<int>(inv.distinct.begin(), inv.distinct.end())}};
}

json decomposition_json(const PerpDecomposition& d) {
    std::vector<std::vector<int>> h;
    for (const auto& [y1, y2] : d.h) h.push_back({y1, y2});
    return json{{"x0", d.x0},
                {"X1", d.X1.points},
                {"X2", d.X2.points},
                {"tau1", d.tau1.images()},
                {"tau2", d.tau2.images()},
                {"h", h},
                {"factor_sizes", std::vector<int>{d.X1.size(), d.X2.size()}},
                {"tensor_relabeling", d.tensor_relabeling()}};
}

json pattern_json(const Pattern& p) {
    std::vector<std::vector<int>> keys;
    keys.reserve(p.keys().size());
    for (const auto& key : p.keys()) keys.push_back({key.i, key.j, key.m, key.n});
    return json{{"k", p.size()},
                {"degree", p.degree_cap()},
                {"total_keys", keys.size()},
                {"keys_per_degree", p.keys_per_degree()},
                {"mult_closed", is_mult_closed(p)},
                {"keys", keys}};
}

json violation_json(const PerpViolation& v) {
    return json{
        {"condition", v.condition == PerpViolation::Condition::OrbitIntersection ? "i" : "ii"},
        {"witness", std::vector<int>{v.witness.first, v.witness.second}},
        {"message", v.describe()}};
}

/// Relabeling that conjugates a transitive cycle to the shift x -> x - 1:
/// the t-th point of the orbit of 0 goes to -t (mod k).
std::vector<int> shift_relabeling(const Permutation& cycle) {
    const int k = cycle.size();
    const Orbit o = orbit(cycle, 0);
    std::vector<int> g(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) g[static_cast<size_t>(o.points[static_cast<size_t>(t)])] = (k - t) % k;
    return g;
}

json identifications_json(const Z2Action& a, int degree,
                          const std::optional<PerpDecomposition>& dec) {
    const int k = a.size();
    json out;
    out["bk2_exact"] = verify_identification(a, pattern_bk2(k, degree), degree).equal;
    bool bk2_relabeled = false;
    if (a.sigma1() == a.sigma2() && orbit(a.sigma1(), 0).size() == k)
        bk2_relabeled = verify_identification(a, pattern_bk2(k, degree), degree,
                                              shift_relabeling(a.sigma1()))
                            .equal;
    out["bk2_relabeled"] = bk2_relabeled;

    if (dec) {
        const Pattern target = pattern_tensor(dec->X1.size(), dec->X2.size(), degree);
        out["tensor_exact"] = verify_identification(a, target, degree).equal;
        out["tensor_relabeled"] =
            verify_identification(a, target, degree, dec->tensor_relabeling()).equal;
        out["tensor_factors"] = std::vector<int>{dec->X1.size(), dec->X2.size()};
    } else {
        out["tensor_exact"] = false;
        out["tensor_relabeled"] = false;
        out["tensor_factors"] = nullptr;
    }
    return out;
}

}  // namespace

ActionSpec parse_action_spec(const json& j) {
    if (!j.is_object()) throw SpecError("spec: expected a JSON object");
    if (!j.contains("k") || !j["k"].is_number_integer())
        throw SpecError("spec: missing integer field \"k\"");
    ActionSpec spec;
    spec.k = j["k"].get<int>();
    if (spec.k < 1 || spec.k > kMaxSpecSize)
        throw SpecError("spec: k must be in [1, " + std::to_string(kMaxSpecSize) + "]");
    if (j.contains("degree")) {
        if (!j["degree"].is_number_integer()) throw SpecError("spec: \"degree\" must be an integer");
        spec.degree = j["degree"].get<int>();
        if (spec.degree < 0 || spec.degree > kMaxSpecDegree)
            throw SpecError("spec: degree must be in [0, " + std::to_string(kMaxSpecDegree) + "]");
    }
    if (!j.contains("sigma1") || !j.contains("sigma2"))
        throw SpecError("spec: both \"sigma1\" and \"sigma2\" are required");
    spec.sigma1 = parse_sigma(j["sigma1"], "sigma1", spec.k);
    spec.sigma2 = parse_sigma(j["sigma2"], "sigma2", spec.k);
    return spec;
}

ActionSpec load_action_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SpecError("spec file " + path + " is not valid JSON: " + e.what());
    }
    return parse_action_spec(j);
}

json analyze_report(const ActionSpec& spec) {
    const Z2Action a = spec.action();
    const int degree = spec.degree;

    json out;
    out["schema"] = kReportSchema;
    out["tool"] = tool_header();
    out["command"] = "analyze";
    out["input"] = input_json(spec);

    const auto violation = check_perpendicular(a);
    out["classification"] = json{{"commuting", true},
                                 {"transitive", is_transitive(a)},
                                 {"perpendicular", !violation.has_value()}};

    std::optional<PerpDecomposition> dec;
    if (!violation) {
        dec = perp_decompose(a);
        out["decomposition"] = decomposition_json(*dec);
    } else {
        out["decomposition"] = nullptr;
        out["perpendicular_violation"] = violation_json(*violation);
    }

    const Pattern generated = generated_pattern(semicrossed_generators(a), degree);
    out["pattern"] = pattern_json(generated);
    out["identifications"] = identifications_json(a, degree, dec);
    out["invariant"] = invariant_json(codim_invariant(generated));
    return out;
}

json compare_report(const ActionSpec& spec_a, const ActionSpec& spec_b) {
    const Z2Action a = spec_a.action();
    const Z2Action b = spec_b.action();
    const Pattern pa = generated_pattern(semicrossed_generators(a), spec_a.degree);
    const Pattern pb = generated_pattern(semicrossed_generators(b), spec_b.degree);
    const DistinguishResult r = distinguish(pa, pb);

    json out;
    out["schema"] = kReportSchema;
    out["tool"] = tool_header();
    out["command"] = "compare";
    out["a"] = json{{"input", input_json(spec_a)}, {"invariant", invariant_json(r.a)}};
    out["b"] = json{{"input", input_json(spec_b)}, {"invariant", invariant_json(r.b)}};
    out["verdict"] = distinguish_verdict_name(r.verdict);
    return out;
}

json decompose_report(const ActionSpec& spec) {
    const Z2Action a = spec.action();
    json out;
    out["schema"] = kReportSchema;
    out["tool"] = tool_header();
    out["command"] = "decompose";
    out["input"] = input_json(spec);
    const auto violation = check_perpendicular(a);
    out["classification"] = json{{"commuting", true},
                                 {"transitive", is_transitive(a)},
                                 {"perpendicular", !violation.has_value()}};
    if (violation) {
        out["decomposition"] = nullptr;
        out["perpendicular_violation"] = violation_json(*violation);
    } else {
        out["decomposition"] = decomposition_json(perp_decompose(a));
    }
    return out;
}

std::vector<json> sweep_rows(int max_k, int degree) {
    if (max_k < 1 || max_k > kMaxSweepSize)
        throw SpecError("sweep: max-k must be in [1, " + std::to_string(kMaxSweepSize) + "]");
    if (degree < 0 || degree > kMaxSpecDegree)
        throw SpecError("sweep: degree must be in [0, " + std::to_string(kMaxSpecDegree) + "]");

    std::vector<json> rows;
    for (int k = 1; k <= max_k; ++k) {
        for (const CanonicalPair& pair : canonical_commuting_pairs(k)) {
            const Z2Action a(Permutation::from_images(pair.sigma1),
                             Permutation::from_images(pair.sigma2));
            const Pattern generated = generated_pattern(semicrossed_generators(a), degree);
            const CodimInvariant inv = codim_invariant(generated);
            const bool perp = is_perpendicular(a);

            json row;
            row["k"] = k;
            row["degree"] = degree;
            row["sigma1"] = pair.sigma1;
            row["sigma2"] = pair.sigma2;
            row["transitive"] = is_transitive(a);
            row["perpendicular"] = perp;
            if (perp) {
                const PerpDecomposition dec = perp_decompose(a);
                row["factor_sizes"] = std::vector<int>{dec.X1.size(), dec.X2.size()};
            } else {
                row["factor_sizes"] = nullptr;
            }
            row["distinct"] = std::vector<int>(inv.distinct.begin(), inv.distinct.end());
            json strata = json::object();
            for (Stratum s : all_strata) strata[stratum_name(s)] = inv.stratum_dims.at(s);
            row["strata"] = strata;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

namespace {

std::string join_ints(const json& arr, const char* sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : arr) {
        if (!first) os << sep;
        os << v.get<long long>();
        first = false;
    }
    return os.str();
}

std::string cycle_text(const std::vector<int>& images) {
    return Permutation::from_images(images).cycle_string();
}

void render_invariant_text(std::ostringstream& os, const json& inv, const std::string& indent) {
    os << indent << "degree cap: " << inv["degree"].get<int>();
    if (inv["cap_warning"].get<bool>())
        os << "  (warning: cap below 2k; invariant may be partial)";
    os << "\n";
    for (const char* name : {"origin", "z_only", "w_only", "generic"})
        os << indent << name << ": [" << join_ints(inv["strata"][name], ", ") << "]\n";
    os << indent << "distinct dimensions: {" << join_ints(inv["distinct"], ", ") << "}\n";
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    const std::string command = report["command"].get<std::string>();
    os << kToolName << " " << kToolVersion << " " << command << "\n";

    const auto render_input = [&](const json& input, const std::string& indent) {
        os << indent << "k = " << input["k"].get<int>()
           << ", degree = " << input["degree"].get<int>() << "\n";
        os << indent << "sigma1 = " << cycle_text(input["sigma1"].get<std::vector<int>>())
           << "  " << input["sigma1"].dump() << "\n";
        os << indent << "sigma2 = " << cycle_text(input["sigma2"].get<std::vector<int>>())
           << "  " << input["sigma2"].dump() << "\n";
    };

    if (command == "compare") {
        for (const char* side : {"a", "b"}) {
            os << "action " << side << ":\n";
            render_input(report[side]["input"], "  ");
            os << "  invariant:\n";
            render_invariant_text(os, report[side]["invariant"], "    ");
        }
        os << "verdict: " << report["verdict"].get<std::string>() << "\n";
        return os.str();
    }

    render_input(report["input"], "");
    const json& cls = report["classification"];
    os << "transitive: " << (cls["transitive"].get<bool>() ? "yes" : "no") << "\n";
    os << "perpendicular: " << (cls["perpendicular"].get<bool>() ? "yes" : "no") << "\n";
    if (report.contains("perpendicular_violation") && !report["perpendicular_violation"].is_null())
        os << "  " << report["perpendicular_violation"]["message"].get<std::string>() << "\n";
    if (!report["decomposition"].is_null()) {
        const json& d = report["decomposition"];
        os << "decomposition (x0 = " << d["x0"].get<int>() << "):\n";
        os << "  X1 = [" << join_ints(d["X1"], ", ") << "], tau1 = "
           << cycle_text(d["tau1"].get<std::vector<int>>()) << "\n";
        os << "  X2 = [" << join_ints(d["X2"], ", ") << "], tau2 = "
           << cycle_text(d["tau2"].get<std::vector<int>>()) << "\n";
        os << "  h:";
        const auto& h = d["h"];
        for (size_t x = 0; x < h.size(); ++x)
            os << " " << x << "->(" << h[x][0].get<int>() << "," << h[x][1].get<int>() << ")";
        os << "\n";
    }
    if (command == "analyze") {
        const json& pat = report["pattern"];
        os << "pattern: " << pat["total_keys"].get<size_t>() << " keys to degree "
           << pat["degree"].get<int>() << " (per degree: " << join_ints(pat["keys_per_degree"])
           << "), multiplicatively closed: " << (pat["mult_closed"].get<bool>() ? "yes" : "no")
           << "\n";
        const json& ids = report["identifications"];
        const int k = report["input"]["k"].get<int>();
        os << "identifications:\n";
        os << "  B_{" << k << ",2} exact: " << (ids["bk2_exact"].get<bool>() ? "yes" : "no")
           << ", relabeled: " << (ids["bk2_relabeled"].get<bool>() ? "yes" : "no") << "\n";
        if (!ids["tensor_factors"].is_null()) {
            os << "  B_" << ids["tensor_factors"][0].get<int>() << " (x) B_"
               << ids["tensor_factors"][1].get<int>()
               << " exact: " << (ids["tensor_exact"].get<bool>() ? "yes" : "no")
               << ", via h: " << (ids["tensor_relabeled"].get<bool>() ? "yes" : "no") << "\n";
        } else {
            os << "  tensor: not applicable (not perpendicular)\n";
        }
        os << "invariant:\n";
        render_invariant_text(os, report["invariant"], "  ");
    }
    return os.str();
}

std::string render_sweep_jsonl(const std::vector<json>& rows) {
    std::ostringstream os;
    for (const json& row : rows) os << row.dump() << "\n";
    return os.str();
}

std::string render_sweep_csv(const std::vector<json>& rows) {
    std::ostringstream os;
    os << "k,degree,sigma1,sigma2,transitive,perpendicular,factor_sizes,distinct\n";
    for (const json& row : rows) {
        os << row["k"].get<int>() << "," << row["degree"].get<int>() << ",";
        os << '"' << cycle_text(row["sigma1"].get<std::vector<int>>()) << "\",";
        os << '"' << cycle_text(row["sigma2"].get<std::vector<int>>()) << "\",";
        os << (row["transitive"].get<bool>() ? "true" : "false") << ",";
        os << (row["perpendicular"].get<bool>() ? "true" : "false") << ",";
        if (row["factor_sizes"].is_null())
            os << ",";
        else
            os << '"' << row["factor_sizes"][0].get<int>() << "x"
               << row["factor_sizes"][1].get<int>() << "\",";
        os << '"' << join_ints(row["distinct"]) << "\"\n";
    }
    return os.str();
}

}  // namespace scx
