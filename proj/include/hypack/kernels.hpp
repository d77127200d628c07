#pragma once

#include <hypack/region.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace hypack::kernels {

// Global thread budget: 0 = library default, 1 = force serial. Parallel and
// serial variants of every kernel return identical results; the *_omp
// variants only reorder independent work items.
void set_max_threads(int n);
int max_threads();
bool parallel_enabled();

using PairHit = std::optional<std::pair<std::size_t, std::size_t>>;

// Lexicographically smallest pair (i, j), i < j, whose regions have
// overlapping interiors; nullopt when all pairs are interior-disjoint.
PairHit first_overlap_serial(const std::vector<RectRegion>& copies);
PairHit first_overlap_omp(const std::vector<RectRegion>& copies);
PairHit first_overlap(const std::vector<RectRegion>& copies);

// Indices where pred holds, ascending.
std::vector<std::size_t> scan_hits_serial(std::size_t n,
                                          const std::function<bool(std::size_t)>& pred);
std::vector<std::size_t> scan_hits_omp(std::size_t n,
                                       const std::function<bool(std::size_t)>& pred);
std::vector<std::size_t> scan_hits(std::size_t n,
                                   const std::function<bool(std::size_t)>& pred);

// Sum of f(0..n-1) accumulated in index order, so the result does not depend
// on the parallel schedule.
double sum_pieces_serial(std::size_t n, const std::function<double(std::size_t)>& f);
double sum_pieces_omp(std::size_t n, const std::function<double(std::size_t)>& f);
double sum_pieces(std::size_t n, const std::function<double(std::size_t)>& f);

// Monte Carlo tallies combined in chunk order (chunk index seeds the RNG, so
// results are independent of the thread count).
struct McTally {
    std::int64_t proposed = 0;
    std::int64_t accepted = 0;
    std::int64_t hits = 0;
    McTally& operator+=(const McTally& o) {
        proposed += o.proposed;
        accepted += o.accepted;
        hits += o.hits;
        return *this;
    }
};

McTally mc_tally_serial(std::size_t chunks,
                        const std::function<McTally(std::size_t)>& chunk_fn);
McTally mc_tally_omp(std::size_t chunks,
                     const std::function<McTally(std::size_t)>& chunk_fn);
McTally mc_tally(std::size_t chunks, const std::function<McTally(std::size_t)>& chunk_fn);

}  // namespace hypack::kernels
