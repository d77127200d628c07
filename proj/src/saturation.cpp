#include <hypack/saturation.hpp>

#include <algorithm>
#include <set>

namespace hypack {

namespace {

// Integer k range with k*h in [lo, hi].
std::pair<long, long> grid_range(const Rat& lo, const Rat& hi, const Rat& h) {
    long k_lo = rat_floor_long(lo / h);
    if (Rat(k_lo) * h < lo) ++k_lo;
    const long k_hi = rat_floor_long(hi / h);
    return {k_lo, k_hi};
}

void check_family(const CandidateFamily& f) {
    if (f.grid_step <= 0) throw ConfigError("candidate family: grid step must be positive");
    if (f.window.x0 >= f.window.x1 || f.window.y0 >= f.window.y1)
        throw ConfigError("candidate family: degenerate window");
    if (f.a_min > f.a_max) throw ConfigError("candidate family: empty exponent range");
}

}  // namespace

std::vector<Placement> enumerate_candidates(const FillingProblem& p) {
    check_family(p.family);
    if (p.family.mode != p.region.mode() || p.body.mode != p.region.mode())
        throw ModeMismatchError("enumerate_candidates: mixed modes");
    std::vector<Placement> out;
    if (p.region.empty()) return out;
    const Rect kb = p.body.region.bbox();
    const Rect fb = p.region.bbox();
    const Rect& win = p.family.window;
    const Rat& h = p.family.grid_step;

    auto consider = [&](Placement g) {
        RectRegion copy = transform(p.body.region, g);
        if (!interiors_disjoint(copy, p.region)) out.push_back(std::move(g));
    };

    if (p.family.mode == Mode::Euclidean) {
        // copy must stay inside the family window and overlap the bbox of F
        const Rat tx_lo = rat_max(win.x0 - kb.x0, fb.x0 - kb.x1);
        const Rat tx_hi = rat_min(win.x1 - kb.x1, fb.x1 - kb.x0);
        const Rat ty_lo = rat_max(win.y0 - kb.y0, fb.y0 - kb.y1);
        const Rat ty_hi = rat_min(win.y1 - kb.y1, fb.y1 - kb.y0);
        auto [kx0, kx1] = grid_range(tx_lo, tx_hi, h);
        auto [ky0, ky1] = grid_range(ty_lo, ty_hi, h);
        for (long kx = kx0; kx <= kx1; ++kx)
            for (long ky = ky0; ky <= ky1; ++ky)
                consider(Placement::euclidean(Rat(kx) * h, Rat(ky) * h));
    } else {
        for (long a = p.family.a_min; a <= p.family.a_max; ++a) {
            const Rat scale = rat_pow(Rat(p.body.m), a);
            if (scale * kb.y0 >= fb.y1 || scale * kb.y1 <= fb.y0) continue;
            if (scale * kb.y0 < win.y0 || scale * kb.y1 > win.y1) continue;
            const Rat t_lo = rat_max(win.x0 - scale * kb.x0, fb.x0 - scale * kb.x1);
            const Rat t_hi = rat_min(win.x1 - scale * kb.x1, fb.x1 - scale * kb.x0);
            auto [k0, k1] = grid_range(t_lo, t_hi, h);
            for (long k = k0; k <= k1; ++k)
                consider(Placement::hyperbolic(p.body.m, a, Rat(k) * h));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Shared branch-and-bound: maximum independent set of candidate copies, all
// contained in F and disjoint from the obstacles, maximizing cardinality
// with the exact area bound as admissible pruning. Returns the
// lexicographically least maximum set (include-first depth-first search,
// improvements strictly).
struct MaxPackSearch {
    std::vector<Placement> candidates;       // sorted
    std::vector<RectRegion> copies;          // transformed candidate copies
    std::vector<std::vector<char>> conflict; // candidate-candidate conflicts
    Rat body_area;
    Rat free_area;  // area of F not taken by obstacles
    long budget = kDefaultNodeBudget;
    long nodes = 0;
    bool complete = true;

    std::vector<std::size_t> chosen, best;
    bool has_best = false;

    void run() {
        chosen.clear();
        best.clear();
        has_best = false;
        Rat free = free_area;
        dfs(0, free);
        if (!has_best) best.clear();
    }

    long area_cap(const Rat& free) const {
        if (free <= 0) return 0;
        return rat_floor_long(free / body_area);
    }

    void dfs(std::size_t start, const Rat& free) {
        if (++nodes > budget) {
            complete = false;
            return;
        }
        const long cap = static_cast<long>(chosen.size()) +
                         std::min<long>(static_cast<long>(candidates.size() - start),
                                        area_cap(free));
        const long best_count = has_best ? static_cast<long>(best.size()) : -1;
        if (cap <= best_count) return;
        if (start == candidates.size()) {
            if (static_cast<long>(chosen.size()) > best_count) {
                best = chosen;
                has_best = true;
            }
            return;
        }
        bool ok = true;
        for (auto c : chosen) {
            if (conflict[c][start]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            chosen.push_back(start);
            dfs(start + 1, free - body_area);
            chosen.pop_back();
            if (!complete) return;
        }
        dfs(start + 1, free);
    }
};

// Builds the search for candidates contained in F, compatible with the given
// obstacle copies.
MaxPackSearch make_search(const Body& body, const RectRegion& F,
                          const std::vector<Placement>& raw_candidates,
                          const std::vector<RectRegion>& obstacle_copies,
                          long budget) {
    MaxPackSearch s;
    s.budget = budget;
    s.body_area = body.region.area();
    for (const auto& g : raw_candidates) {
        RectRegion copy = transform(body.region, g);
        if (!region_difference(copy, F).empty()) continue;  // must sit inside F
        bool blocked = false;
        for (const auto& obs : obstacle_copies) {
            if (!interiors_disjoint(copy, obs)) {
                blocked = true;
                break;
            }
        }
        if (blocked) continue;
        s.candidates.push_back(g);
        s.copies.push_back(std::move(copy));
    }
    const std::size_t n = s.candidates.size();
    s.conflict.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!interiors_disjoint(s.copies[i], s.copies[j]))
                s.conflict[i][j] = s.conflict[j][i] = 1;

    RectRegion taken(F.mode());
    for (const auto& obs : obstacle_copies) taken = region_union(taken, obs);
    s.free_area = F.area() - region_intersect(taken, F).area();
    return s;
}

}  // namespace

FillingResult solve_filling(const FillingProblem& p, long node_budget) {
    if (p.region.empty()) throw DomainError("solve_filling: empty region");
    // boundary copies must meet the boundary of F and form a packing
    const auto boundary_segs = boundary_segments(p.region);
    std::vector<RectRegion> obstacle_copies;
    obstacle_copies.reserve(p.boundary.size());
    for (const auto& g : p.boundary) {
        RectRegion copy = transform(p.body.region, g);
        if (!interior_meets_segments(copy, boundary_segs))
            throw DomainError("solve_filling: boundary copy does not meet the boundary");
        obstacle_copies.push_back(std::move(copy));
    }
    for (std::size_t i = 0; i < obstacle_copies.size(); ++i)
        for (std::size_t j = i + 1; j < obstacle_copies.size(); ++j)
            if (!interiors_disjoint(obstacle_copies[i], obstacle_copies[j]))
                throw DomainError("solve_filling: boundary copies overlap");

    std::vector<Placement> cands = enumerate_candidates(p);
    cands.insert(cands.end(), p.extra_candidates.begin(), p.extra_candidates.end());
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    MaxPackSearch s = make_search(p.body, p.region, cands, obstacle_copies, node_budget);
    s.run();

    FillingResult out;
    for (auto i : s.best) out.placements.push_back(s.candidates[i]);
    out.count = out.placements.size();
    out.optimal_within_family = s.complete;
    out.nodes = s.nodes;
    return out;
}

PackingWindow saturate_map_euclid(const PackingWindow& w, long cell_side,
                                  const Rat& grid_step, long node_budget) {
    if (w.mode() != Mode::Euclidean)
        throw ModeMismatchError("saturate_map_euclid: euclidean packings only");
    if (cell_side < 1) throw DomainError("saturate_map_euclid: cell side must be >= 1");
    if (w.window.size() != 1)
        throw AlignmentError("saturate_map_euclid: window must be a single rectangle");
    const Rect win = w.window.rects().front();
    const Rat j(cell_side);
    const Rat half = j / 2;
    auto aligned = [&](const Rat& v) { return Rat((v + half) / j).get_den() == 1; };
    if (!aligned(win.x0) || !aligned(win.x1) || !aligned(win.y0) || !aligned(win.y1))
        throw AlignmentError("saturate_map_euclid: window not aligned with the cell grid");

    const auto copies = placed_copies(w);
    for (const auto& c : copies)
        if (!region_difference(c, w.window).empty())
            throw DomainError("saturate_map_euclid: copy sticks out of the window");

    const long ix0 = rat_floor_long((win.x0 + half) / j);
    const long ix1 = rat_floor_long((win.x1 + half) / j);
    const long iy0 = rat_floor_long((win.y0 + half) / j);
    const long iy1 = rat_floor_long((win.y1 + half) / j);

    std::set<Placement> result;
    const RectRegion local_cell =
        RectRegion::rect(Mode::Euclidean, make_rect(-half, half, -half, half));
    const auto local_segs = boundary_segments(local_cell);

    for (long ix = ix0; ix < ix1; ++ix) {
        for (long iy = iy0; iy < iy1; ++iy) {
            const Rat cx = Rat(ix) * j, cy = Rat(iy) * j;  // cell center (lattice point)
            std::vector<Placement> crossers, contained;
            for (std::size_t i = 0; i < copies.size(); ++i) {
                // classify in cell-local coordinates
                Placement local = w.placements[i];
                local.tx -= cx;
                local.ty -= cy;
                RectRegion local_copy = transform(w.body.region, local);
                if (interior_meets_segments(local_copy, local_segs))
                    crossers.push_back(w.placements[i]);
                else if (region_difference(local_copy, local_cell).empty())
                    contained.push_back(std::move(local));
            }
            for (const auto& g : crossers) result.insert(g);

            FillingProblem prob;
            prob.body = w.body;
            prob.region = local_cell;
            for (const auto& g : crossers)
                prob.boundary.push_back(Placement::euclidean(g.tx - cx, g.ty - cy));
            prob.family = CandidateFamily::euclidean(
                grid_step, make_rect(-half, half, -half, half));
            prob.extra_candidates = contained;
            FillingResult filled = solve_filling(prob, node_budget);
            for (const auto& g : filled.placements)
                result.insert(Placement::euclidean(g.tx + cx, g.ty + cy));
        }
    }

    PackingWindow out;
    out.body = w.body;
    out.placements.assign(result.begin(), result.end());
    out.window = w.window;
    out.kind = w.kind;
    out.complete = w.complete;
    auto check = is_packing(out);
    if (!check.ok)
        throw ConstructionFailure("saturate_map_euclid: produced an overlap",
                                  check.violation->first, check.violation->second);
    return out;
}

namespace {

// Next k-combination of indices in increasing order; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

}  // namespace

UnsaturatedReport check_unsaturated(const PackingWindow& w, const RectRegion& F,
                                    int k_max, const CandidateFamily& family,
                                    long node_budget) {
    if (k_max < 0) throw DomainError("check_unsaturated: k_max must be >= 0");
    if (F.empty()) throw DomainError("check_unsaturated: empty region");
    const auto copies = placed_copies(w);

    std::vector<std::size_t> inside;       // copies confined to F
    std::vector<std::size_t> relevant;     // copies whose interior meets F
    for (std::size_t i = 0; i < copies.size(); ++i) {
        if (!interiors_disjoint(copies[i], F)) relevant.push_back(i);
        if (!copies[i].empty() && region_difference(copies[i], F).empty())
            inside.push_back(i);
    }

    FillingProblem probe;
    probe.body = w.body;
    probe.region = F;
    probe.family = family;
    const std::vector<Placement> cands = enumerate_candidates(probe);

    UnsaturatedReport report;
    long nodes_left = node_budget;
    bool truncated = false;

    const int k_cap = std::min<int>(k_max, static_cast<int>(inside.size()));
    for (int k = 0; k <= k_cap; ++k) {
        report.k_searched = k;
        auto combo = first_combination(static_cast<std::size_t>(k));
        bool more = true;
        while (more) {
            std::vector<char> removed(copies.size(), 0);
            for (auto ci : combo) removed[inside[ci]] = 1;
            std::vector<RectRegion> obstacles;
            for (auto idx : relevant)
                if (!removed[idx]) obstacles.push_back(copies[idx]);
            MaxPackSearch s = make_search(w.body, F, cands, obstacles,
                                          std::max(1L, nodes_left));
            s.run();
            nodes_left -= s.nodes;
            report.nodes += s.nodes;
            if (!s.complete) truncated = true;
            if (s.has_best && static_cast<long>(s.best.size()) >= k + 1) {
                SwapWitness witness;
                for (auto ci : combo) witness.removed.push_back(w.placements[inside[ci]]);
                for (int t = 0; t <= k; ++t)
                    witness.added.push_back(s.candidates[s.best[static_cast<std::size_t>(t)]]);
                report.unsaturated = Verdict::Yes;
                report.witness = std::move(witness);
                return report;
            }
            if (nodes_left <= 0) {
                report.unsaturated = Verdict::Unknown;
                return report;
            }
            more = next_combination(combo, inside.size());
        }
    }
    report.unsaturated = truncated ? Verdict::Unknown : Verdict::No;
    return report;
}

ReducibleReport check_reducible_covering(const PackingWindow& w, const RectRegion& F,
                                         int k_max, const CandidateFamily& family,
                                         long combo_budget) {
    if (k_max < 0) throw DomainError("check_reducible_covering: k_max must be >= 0");
    auto base_cover = covers(w, F);
    if (!base_cover.covered)
        throw DomainError("check_reducible_covering: the window does not cover F");

    const auto copies = placed_copies(w);
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < copies.size(); ++i)
        if (!copies[i].empty() && region_difference(copies[i], F).empty())
            inside.push_back(i);

    FillingProblem probe;
    probe.body = w.body;
    probe.region = F;
    probe.family = family;
    std::vector<Placement> cands;
    std::vector<RectRegion> cand_copies;
    for (const auto& g : enumerate_candidates(probe)) {
        RectRegion copy = transform(w.body.region, g);
        if (!region_difference(copy, F).empty()) continue;  // confined to F
        cands.push_back(g);
        cand_copies.push_back(std::move(copy));
    }

    ReducibleReport report;
    const int k_cap = std::min<int>(k_max, static_cast<int>(inside.size()));
    for (int k = 1; k <= k_cap; ++k) {
        report.k_searched = k;
        auto combo = first_combination(static_cast<std::size_t>(k));
        bool more = !combo.empty();
        while (more) {
            // union of all copies except the removed ones
            std::vector<Rect> rest;
            for (std::size_t i = 0; i < copies.size(); ++i) {
                bool removed = false;
                for (auto ci : combo)
                    if (inside[ci] == i) removed = true;
                if (removed) continue;
                rest.insert(rest.end(), copies[i].rects().begin(), copies[i].rects().end());
            }
            RectRegion base = RectRegion::from_rects(F.mode(), rest);
            RectRegion hole = region_difference(F, base);

            if (k == 1) {
                if (++report.combos > combo_budget) {
                    report.reducible = Verdict::Unknown;
                    return report;
                }
                if (hole.empty()) {
                    SwapWitness witness;
                    for (auto ci : combo) witness.removed.push_back(w.placements[inside[ci]]);
                    report.reducible = Verdict::Yes;
                    report.witness = std::move(witness);
                    return report;
                }
            } else {
                auto add = first_combination(static_cast<std::size_t>(k - 1));
                bool add_more = true;
                while (add_more) {
                    if (++report.combos > combo_budget) {
                        report.reducible = Verdict::Unknown;
                        return report;
                    }
                    RectRegion left = hole;
                    for (auto ai : add) left = region_difference(left, cand_copies[ai]);
                    if (left.empty()) {
                        SwapWitness witness;
                        for (auto ci : combo)
                            witness.removed.push_back(w.placements[inside[ci]]);
                        for (auto ai : add) witness.added.push_back(cands[ai]);
                        report.reducible = Verdict::Yes;
                        report.witness = std::move(witness);
                        return report;
                    }
                    add_more = next_combination(add, cands.size());
                }
            }
            more = next_combination(combo, inside.size());
        }
    }
    report.reducible = Verdict::No;
    return report;
}

}  // namespace hypack
