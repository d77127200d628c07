#pragma once

#include <hypack/body.hpp>
#include <hypack/density.hpp>
#include <hypack/packing.hpp>
#include <hypack/saturation.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace hypack {

// Key-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& q);          // "p/q" string
Rat rat_from_json(const Json& j);

Json region_to_json(const RectRegion& r);  // {mode, rects: [["a","b","c","d"],...]}
RectRegion region_from_json(const Json& j);

Json placement_to_json(const Placement& g);  // {a, t} | {tx, ty}
Placement placement_from_json(const Json& j, Mode mode, int base);

Json body_to_json(const Body& b);
Body body_from_json(const Json& j);

Json window_to_json(const PackingWindow& w);
PackingWindow window_from_json(const Json& j);

Json bound_chain_to_json(const BoundChain& c);
Json density_report_to_json(const DensityReport& r);
Json fit_report_to_json(const FitReport& r, int base);
Json metric_result_to_json(const MetricResult& r);
Json epsilon_bound_to_json(const EpsilonBound& b, const Rat& epsilon);

// Input file reference with content digest.
struct InputRef {
    std::string name;
    std::string sha256;
};

// Run manifest embedded in every CLI artifact: identical manifests produce
// byte-identical outputs.
struct RunManifest {
    std::string command;
    Json parameters;  // rationals as "p/q" strings
    std::vector<InputRef> inputs;
    std::uint64_t seed = 0;
    int threads = 0;
    std::vector<std::string> outputs;
};

Json manifest_to_json(const RunManifest& m);

// Wraps a payload with {schema, manifest, ...payload}.
Json envelope(const RunManifest& m, Json payload);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hypack
