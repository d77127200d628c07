#include <hypack/kernels.hpp>

#include <algorithm>
#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypack::kernels {

namespace {

std::atomic<int> g_max_threads{0};

bool bbox_disjoint(const Rect& a, const Rect& b) {
    return a.x1 <= b.x0 || b.x1 <= a.x0 || a.y1 <= b.y0 || b.y1 <= a.y0;
}

}  // namespace

void set_max_threads(int n) {
    g_max_threads.store(n < 0 ? 0 : n);
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads() { return g_max_threads.load(); }

bool parallel_enabled() {
#ifdef _OPENMP
    return g_max_threads.load() != 1;
#else
    return false;
#endif
}

PairHit first_overlap_serial(const std::vector<RectRegion>& copies) {
    std::vector<Rect> boxes;
    boxes.reserve(copies.size());
    for (const auto& c : copies)
        boxes.push_back(c.empty() ? Rect{0, 0, 0, 0} : c.bbox());
    for (std::size_t i = 0; i < copies.size(); ++i) {
        if (copies[i].empty()) continue;
        for (std::size_t j = i + 1; j < copies.size(); ++j) {
            if (copies[j].empty() || bbox_disjoint(boxes[i], boxes[j])) continue;
            if (!interiors_disjoint(copies[i], copies[j])) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

PairHit first_overlap_omp(const std::vector<RectRegion>& copies) {
    const std::size_t n = copies.size();
    if (n < 2) return std::nullopt;
    std::vector<Rect> boxes;
    boxes.reserve(n);
    for (const auto& c : copies)
        boxes.push_back(c.empty() ? Rect{0, 0, 0, 0} : c.bbox());
    const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best = none;
#ifdef _OPENMP
#pragma omp parallel reduction(min : best)
    {
#pragma omp for schedule(dynamic)
        for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            if (copies[i].empty()) continue;
            const std::uint64_t row_base = static_cast<std::uint64_t>(i) * n;
            if (row_base >= best) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (copies[j].empty() || bbox_disjoint(boxes[i], boxes[j])) continue;
                if (!interiors_disjoint(copies[i], copies[j])) {
                    best = std::min(best, row_base + j);
                    break;  // smallest j for this i
                }
            }
        }
    }
#else
    return first_overlap_serial(copies);
#endif
    if (best == none) return std::nullopt;
    return std::make_pair(static_cast<std::size_t>(best / n),
                          static_cast<std::size_t>(best % n));
}

PairHit first_overlap(const std::vector<RectRegion>& copies) {
    return parallel_enabled() ? first_overlap_omp(copies) : first_overlap_serial(copies);
}

std::vector<std::size_t> scan_hits_serial(std::size_t n,
                                          const std::function<bool(std::size_t)>& pred) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

std::vector<std::size_t> scan_hits_omp(std::size_t n,
                                       const std::function<bool(std::size_t)>& pred) {
#ifdef _OPENMP
    std::vector<char> flags(n, 0);
#pragma omp parallel for schedule(dynamic)
    for (long long ii = 0; ii < static_cast<long long>(n); ++ii)
        flags[static_cast<std::size_t>(ii)] = pred(static_cast<std::size_t>(ii)) ? 1 : 0;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (flags[i]) out.push_back(i);
    return out;
#else
    return scan_hits_serial(n, pred);
#endif
}

std::vector<std::size_t> scan_hits(std::size_t n,
                                   const std::function<bool(std::size_t)>& pred) {
    return parallel_enabled() ? scan_hits_omp(n, pred) : scan_hits_serial(n, pred);
}

double sum_pieces_serial(std::size_t n, const std::function<double(std::size_t)>& f) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += f(i);
    return total;
}

double sum_pieces_omp(std::size_t n, const std::function<double(std::size_t)>& f) {
#ifdef _OPENMP
    std::vector<double> parts(n, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (long long ii = 0; ii < static_cast<long long>(n); ++ii)
        parts[static_cast<std::size_t>(ii)] = f(static_cast<std::size_t>(ii));
    double total = 0.0;
    for (double p : parts) total += p;  // fixed order
    return total;
#else
    return sum_pieces_serial(n, f);
#endif
}

double sum_pieces(std::size_t n, const std::function<double(std::size_t)>& f) {
    return parallel_enabled() ? sum_pieces_omp(n, f) : sum_pieces_serial(n, f);
}

McTally mc_tally_serial(std::size_t chunks,
                        const std::function<McTally(std::size_t)>& chunk_fn) {
    McTally total;
    for (std::size_t c = 0; c < chunks; ++c) total += chunk_fn(c);
    return total;
}

McTally mc_tally_omp(std::size_t chunks,
                     const std::function<McTally(std::size_t)>& chunk_fn) {
#ifdef _OPENMP
    std::vector<McTally> parts(chunks);
#pragma omp parallel for schedule(dynamic)
    for (long long ii = 0; ii < static_cast<long long>(chunks); ++ii)
        parts[static_cast<std::size_t>(ii)] = chunk_fn(static_cast<std::size_t>(ii));
    McTally total;
    for (const auto& p : parts) total += p;
    return total;
#else
    return mc_tally_serial(chunks, chunk_fn);
#endif
}

McTally mc_tally(std::size_t chunks, const std::function<McTally(std::size_t)>& chunk_fn) {
    return parallel_enabled() ? mc_tally_omp(chunks, chunk_fn) : mc_tally_serial(chunks, chunk_fn);
}

}  // namespace hypack::kernels
