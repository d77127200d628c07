#include <hypack/json_io.hpp>
#include <hypack/version.hpp>

#include <fstream>

namespace hypack {

namespace {

Mode mode_from_json(const Json& j) {
    const std::string s = j.get<std::string>();
    if (s == "euclidean") return Mode::Euclidean;
    if (s == "hyperbolic") return Mode::Hyperbolic;
    throw Error("json: unknown mode '" + s + "'");
}

}  // namespace

Json rat_to_json(const Rat& q) { return rat_str(q); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    return parse_rat(j.get<std::string>());
}

Json region_to_json(const RectRegion& r) {
    Json rects = Json::array();
    for (const auto& rc : r.rects())
        rects.push_back(Json::array({rat_str(rc.x0), rat_str(rc.x1), rat_str(rc.y0),
                                     rat_str(rc.y1)}));
    return Json{{"mode", mode_name(r.mode())}, {"rects", std::move(rects)}};
}

RectRegion region_from_json(const Json& j) {
    const Mode mode = mode_from_json(j.at("mode"));
    std::vector<Rect> rects;
    for (const auto& rj : j.at("rects")) {
        if (!rj.is_array() || rj.size() != 4)
            throw Error("json: region rect must be [x0, x1, y0, y1]");
        rects.push_back(Rect{rat_from_json(rj[0]), rat_from_json(rj[1]),
                             rat_from_json(rj[2]), rat_from_json(rj[3])});
    }
    return RectRegion::from_rects(mode, std::move(rects));
}

Json placement_to_json(const Placement& g) {
    if (g.mode == Mode::Hyperbolic) return Json{{"a", g.a}, {"t", rat_str(g.t)}};
    return Json{{"tx", rat_str(g.tx)}, {"ty", rat_str(g.ty)}};
}

Placement placement_from_json(const Json& j, Mode mode, int base) {
    if (mode == Mode::Hyperbolic)
        return Placement::hyperbolic(base, j.at("a").get<long>(),
                                     rat_from_json(j.at("t")));
    return Placement::euclidean(rat_from_json(j.at("tx")), rat_from_json(j.at("ty")));
}

Json body_to_json(const Body& b) {
    Json pieces = Json::object();
    for (const auto& [name, piece] : b.pieces) pieces[name] = region_to_json(piece);
    return Json{{"mode", mode_name(b.mode)},
                {"m", b.m},
                {"delta", rat_str(b.delta)},
                {"delta_prime", rat_str(b.delta_prime)},
                {"epsilon", rat_str(b.epsilon)},
                {"region", region_to_json(b.region)},
                {"pieces", std::move(pieces)}};
}

Body body_from_json(const Json& j) {
    Body b;
    b.mode = mode_from_json(j.at("mode"));
    b.m = j.at("m").get<int>();
    b.delta = rat_from_json(j.at("delta"));
    b.delta_prime = rat_from_json(j.at("delta_prime"));
    b.epsilon = rat_from_json(j.at("epsilon"));
    b.region = region_from_json(j.at("region"));
    for (const auto& [name, piece] : j.at("pieces").items())
        b.pieces[name] = region_from_json(piece);
    return b;
}

Json window_to_json(const PackingWindow& w) {
    Json placements = Json::array();
    for (const auto& g : w.placements) placements.push_back(placement_to_json(g));
    return Json{{"body", body_to_json(w.body)},
                {"mode", mode_name(w.mode())},
                {"kind", w.kind == WindowKind::Packing ? "packing" : "covering-candidate"},
                {"complete", w.complete},
                {"placements", std::move(placements)},
                {"window", region_to_json(w.window)}};
}

PackingWindow window_from_json(const Json& j) {
    PackingWindow w;
    w.body = body_from_json(j.at("body"));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "packing")
        w.kind = WindowKind::Packing;
    else if (kind == "covering-candidate")
        w.kind = WindowKind::CoveringCandidate;
    else
        throw Error("json: unknown window kind '" + kind + "'");
    w.complete = j.value("complete", true);
    for (const auto& gj : j.at("placements"))
        w.placements.push_back(placement_from_json(gj, w.body.mode, w.body.m));
    w.window = region_from_json(j.at("window"));
    return w;
}

Json bound_chain_to_json(const BoundChain& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps)
        steps.push_back(Json{{"name", s.name}, {"statement", s.statement}});
    return Json{{"m", c.m},
                {"lambda_Q0", rat_str(c.lambda_Q0)},
                {"lambda_Rprime", rat_str(c.lambda_Rprime)},
                {"ratio", rat_str(c.ratio)},
                {"mu_upper", rat_str(c.mu_upper)},
                {"bound", rat_str(c.bound)},
                {"bound_approx", rat_d(c.bound)},
                {"method", "exact"},
                {"steps", std::move(steps)}};
}

Json density_report_to_json(const DensityReport& r) {
    Json out{{"value", r.value}, {"method", r.method}, {"tol", r.tol}};
    if (r.has_exact) out["exact_value"] = rat_str(r.exact_value);
    if (!r.sweep.empty()) {
        Json sweep = Json::array();
        for (const auto& s : r.sweep)
            sweep.push_back(Json{{"r", s.r}, {"value", s.value}, {"error", s.error}});
        out["sweep"] = std::move(sweep);
    }
    if (r.samples > 0) {
        out["samples"] = r.samples;
        out["seed"] = r.seed;
    }
    return out;
}

Json fit_report_to_json(const FitReport& r, int base) {
    (void)base;
    Json witnesses = Json::array();
    for (const auto& g : r.witnesses) witnesses.push_back(placement_to_json(g));
    return Json{{"holds", r.holds},
                {"candidates", r.candidates},
                {"contacts", r.contacts},
                {"a_min", r.params.a_min},
                {"a_max", r.params.a_max},
                {"grid_step", rat_str(r.params.grid_step)},
                {"margin", rat_str(r.params.margin)},
                {"witnesses", std::move(witnesses)}};
}

Json metric_result_to_json(const MetricResult& r) {
    Json out{{"value", r.value.value()},
             {"exact", r.exact},
             {"error_bound", r.error_bound},
             {"n_evaluated", r.n_evaluated}};
    if (r.value.exact && !r.value.inf) {
        out["value_linear"] = rat_str(r.value.lin);
        out["value_log_coeff"] = rat_str(r.value.lg);
        out["value_log_base"] = r.value.base;
    }
    return out;
}

Json epsilon_bound_to_json(const EpsilonBound& b, const Rat& epsilon) {
    return Json{{"holds", b.holds},
                {"bound", rat_str(b.bound)},
                {"bound_approx", rat_d(b.bound)},
                {"epsilon", rat_str(epsilon)},
                {"method", "exact"}};
}

Json manifest_to_json(const RunManifest& m) {
    Json inputs = Json::array();
    for (const auto& in : m.inputs)
        inputs.push_back(Json{{"name", in.name}, {"sha256", in.sha256}});
    Json outputs = Json::array();
    for (const auto& out : m.outputs) outputs.push_back(out);
    return Json{{"tool", "hypack"},        {"version", kVersion},
                {"command", m.command},    {"parameters", m.parameters},
                {"inputs", std::move(inputs)}, {"seed", m.seed},
                {"threads", m.threads},    {"outputs", std::move(outputs)}};
}

Json envelope(const RunManifest& m, Json payload) {
    Json out{{"schema", kSchema}, {"manifest", manifest_to_json(m)}};
    for (auto& [key, value] : payload.items()) out[key] = std::move(value);
    return out;
}

void write_json_file(const std::string& path, const Json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    Json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

}  // namespace hypack
