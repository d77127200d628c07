#include <hypack/body.hpp>
#include <hypack/kernels.hpp>

#include <algorithm>

namespace hypack {

Body Body::euclidean(RectRegion r) {
    if (r.mode() != Mode::Euclidean)
        throw ModeMismatchError("Body::euclidean: region must be euclidean");
    if (r.empty()) throw DomainError("Body::euclidean: empty region is not a body");
    if (!edge_connected(r)) throw DomainError("Body::euclidean: region not connected");
    Body b;
    b.mode = Mode::Euclidean;
    b.region = std::move(r);
    b.m = 1;
    return b;
}

const RectRegion& Body::piece(const std::string& name) const {
    auto it = pieces.find(name);
    if (it == pieces.end()) throw DomainError("Body::piece: no piece named " + name);
    return it->second;
}

Placement Body::tau() const { return Placement::hyperbolic(m, 0, Rat(m)); }
Placement Body::s() const { return Placement::hyperbolic(m, 1, 0); }
Placement Body::identity() const { return Placement::identity(mode, m); }

BodyParams choose_parameters(const Rat& epsilon) {
    if (epsilon <= 0 || epsilon >= 1)
        throw DomainError("choose_parameters: epsilon must lie strictly in (0, 1)");
    // smallest m with 1/m < epsilon, i.e. m > 1/epsilon
    const long m = rat_floor_long(Rat(1) / epsilon) + 1;
    Rat delta = rat(1, 10);
    for (int iter = 0; iter < 200; ++iter) {
        Rat delta_prime = delta / 5;
        Body body = build_body(static_cast<int>(m), delta, delta_prime, epsilon);
        if (verify_epsilon_bound(body, epsilon).holds)
            return BodyParams{static_cast<int>(m), delta, delta_prime};
        delta /= 2;
    }
    throw DomainError("choose_parameters: no admissible delta found");
}

Body build_body(int m, const Rat& delta, const Rat& delta_prime, const Rat& epsilon) {
    if (m < 2) throw DomainError("build_body: m must be an integer >= 2");
    if (!(delta_prime > 0 && delta_prime < delta / 2 && delta < rat(1, 3)))
        throw DomainError("build_body: parameters must satisfy 0 < delta' < delta/2 < 1/6");

    const Mode mode = Mode::Hyperbolic;
    const Rat one = 1, half = rat(1, 2);

    Body body;
    body.mode = mode;
    body.m = m;
    body.delta = delta;
    body.delta_prime = delta_prime;
    body.epsilon = epsilon;

    const RectRegion R = RectRegion::rect(mode, make_rect(Rat(0), Rat(m), one, Rat(m)));
    const RectRegion Q0 = RectRegion::rect(
        mode, make_rect(delta, one - delta, one + delta, Rat(m) - delta));
    const RectRegion Qp0 = RectRegion::rect(
        mode, make_rect(half - delta_prime, half + delta_prime, one, one + delta));

    body.pieces["R"] = R;
    RectRegion pockets(mode), small_pockets(mode);
    for (int j = 0; j < m; ++j) {
        RectRegion Qj = region_scaled_translated(Q0, 1, Rat(j), 0);
        RectRegion Qpj = region_scaled_translated(Qp0, 1, Rat(j), 0);
        pockets = region_union(pockets, Qj);
        small_pockets = region_union(small_pockets, Qpj);
        body.pieces["Q" + std::to_string(j)] = std::move(Qj);
        body.pieces["Q'" + std::to_string(j)] = std::move(Qpj);
    }
    const Placement s_m = Placement::hyperbolic(m, 1, 0);
    const RectRegion P = transform(Q0, s_m);
    const RectRegion Pp = transform(Qp0, s_m);
    body.pieces["P"] = P;
    body.pieces["P'"] = Pp;
    body.pieces["R'"] = region_difference(region_union(R, Pp), small_pockets);

    body.region = region_difference(
        region_difference(region_union(region_union(R, P), Pp), pockets), small_pockets);

    if (!edge_connected(body.region))
        throw DomainError("build_body: resulting region is not connected");
    return body;
}

EpsilonBound verify_epsilon_bound(const Body& body, const Rat& epsilon) {
    const Rat q0 = body.piece("Q0").area();
    const Rat rp = body.piece("R'").area();
    Rat bound = 1 - Rat(body.m - 1) * q0 / rp;
    return EpsilonBound{bound < epsilon, std::move(bound)};
}

FitReport verify_fit_condition(const Body& body, const FitSearchParams& params) {
    if (body.mode != Mode::Hyperbolic || body.m < 2)
        throw DomainError("verify_fit_condition: requires a built hyperbolic body");
    if (params.grid_step <= 0)
        throw ConfigError("verify_fit_condition: grid step must be positive");
    if (params.a_min > params.a_max)
        throw ConfigError("verify_fit_condition: empty scale-exponent range");

    const RectRegion& K = body.region;
    const RectRegion& Q0 = body.piece("Q0");
    const RectRegion& P = body.piece("P");
    const Rect kbox = K.bbox();
    const Rect qbox = Q0.bbox();
    const Rat& h = params.grid_step;

    // Candidate translations per scale level: g K can meet the closure of Q0
    // only if the boxes meet, which pins t to a bounded interval.
    std::vector<Placement> candidates;
    for (long a = params.a_min; a <= params.a_max; ++a) {
        const Rat scale = rat_pow(Rat(body.m), a);
        if (scale * kbox.y0 > qbox.y1 || scale * kbox.y1 < qbox.y0) continue;
        const Rat t_lo = qbox.x0 - scale * kbox.x1 - params.margin;
        const Rat t_hi = qbox.x1 - scale * kbox.x0 + params.margin;
        // integer k with t = k h in [t_lo, t_hi]
        long k_lo = rat_floor_long(t_lo / h);
        if (Rat(k_lo) * h < t_lo) ++k_lo;
        const long k_hi = rat_floor_long(t_hi / h);
        for (long k = k_lo; k <= k_hi; ++k) {
            Placement g = Placement::hyperbolic(body.m, a, Rat(k) * h);
            if (!g.is_identity()) candidates.push_back(std::move(g));
        }
    }
    if (candidates.empty())
        throw ConfigError("verify_fit_condition: empty candidate family");

    // closed contact test between normalized regions
    auto touches = [](const RectRegion& x, const RectRegion& y) {
        for (const auto& rx : x.rects())
            for (const auto& ry : y.rects())
                if (rx.x0 <= ry.x1 && ry.x0 <= rx.x1 && rx.y0 <= ry.y1 && ry.y0 <= rx.y1)
                    return true;
        return false;
    };

    std::vector<char> contact(candidates.size(), 0);
    auto is_witness = [&](std::size_t i) {
        const Placement& g = candidates[i];
        RectRegion gK = transform(K, g);
        if (!interiors_disjoint(gK, K)) return false;  // cannot coexist with K
        if (!touches(gK, Q0)) return false;
        contact[i] = 1;
        // the touching copy must be the one whose protrusion fills the pocket
        return !region_difference(transform(P, g), Q0).empty();
    };

    const auto hits = kernels::scan_hits(candidates.size(), is_witness);

    FitReport report;
    report.params = params;
    report.candidates = static_cast<long>(candidates.size());
    report.contacts = static_cast<long>(std::count(contact.begin(), contact.end(), 1));
    for (auto i : hits) report.witnesses.push_back(candidates[i]);
    std::sort(report.witnesses.begin(), report.witnesses.end());
    report.holds = report.witnesses.empty();
    return report;
}

}  // namespace hypack
