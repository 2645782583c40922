#include "selfdual/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "selfdual/families.hpp"

namespace selfdual {

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t r = comb.size();
    std::size_t i = r;
    while (i-- > 0) {
        if (comb[i] != n - r + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> unrank_combination(std::size_t rank, std::size_t n,
                                            std::size_t r) {
    std::vector<std::size_t> comb(r);
    std::size_t x = 0;
    for (std::size_t i = 0; i < r; ++i) {
        while (true) {
            Int c = binomial(static_cast<unsigned long>(n - x - 1),
                             static_cast<unsigned long>(r - i - 1));
            if (!c.fits_ulong_p())
                throw error("unrank_combination: counts overflow");
            const std::size_t block = static_cast<std::size_t>(c.get_ui());
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        comb[i] = x++;
    }
    return comb;
}

namespace {

// Symmetries of the box: axis permutations among equal lengths composed
// with per-axis reflections x_i -> l_i - x_i.
std::vector<std::vector<IntVec>> symmetry_images(
    const std::vector<IntVec>& points, const std::vector<int>& lengths) {
    const std::size_t m = lengths.size();
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;

    std::vector<std::vector<IntVec>> images;
    do {
        bool compatible = true;
        for (std::size_t i = 0; i < m; ++i)
            if (lengths[perm[i]] != lengths[i]) {
                compatible = false;
                break;
            }
        if (!compatible) continue;
        for (std::size_t flips = 0; flips < (std::size_t(1) << m); ++flips) {
            std::vector<IntVec> img;
            img.reserve(points.size());
            for (const IntVec& p : points) {
                IntVec q(m);
                for (std::size_t i = 0; i < m; ++i) {
                    q[i] = p[perm[i]];
                    if (flips & (std::size_t(1) << i)) q[i] = lengths[i] - q[i];
                }
                img.push_back(std::move(q));
            }
            std::sort(img.begin(), img.end());
            images.push_back(std::move(img));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return images;
}

std::vector<IntVec> canonical_key(const std::vector<IntVec>& points,
                                  const std::vector<int>& lengths) {
    auto images = symmetry_images(points, lengths);
    return *std::min_element(images.begin(), images.end());
}

}  // namespace

SearchResult run_search(const SearchJob& job, std::size_t workers) {
    const LatticeConfiguration grid = box(job.box_lengths);
    const std::size_t total = grid.size();
    if (job.subset_size == 0 || job.subset_size > total)
        throw error("run_search: subset size out of range");

    Int count_big = binomial(static_cast<unsigned long>(total),
                             static_cast<unsigned long>(job.subset_size));
    if (!count_big.fits_ulong_p() ||
        count_big.get_ui() > job.max_candidates)
        throw error("run_search: " + count_big.get_str() +
                    " candidate subsets exceed the budget of " +
                    std::to_string(job.max_candidates));
    const std::size_t count = static_cast<std::size_t>(count_big.get_ui());

    if (workers == 0) {
        const char* env = std::getenv("SELFDUAL_WORKERS");
        if (env && *env) workers = static_cast<std::size_t>(std::atoi(env));
        if (workers == 0) workers = std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
    }
    const std::size_t chunk = 1024;
    const std::size_t nchunks = (count + chunk - 1) / chunk;
    workers = std::min(workers, nchunks);

    std::vector<std::vector<SearchHit>> chunk_hits(nchunks);
    std::vector<std::size_t> chunk_knap(nchunks, 0), chunk_sd(nchunks, 0);
    std::atomic<std::size_t> next_chunk{0};

    auto work = [&]() {
        while (true) {
            const std::size_t c = next_chunk.fetch_add(1);
            if (c >= nchunks) return;
            const std::size_t lo = c * chunk, hi = std::min(count, lo + chunk);
            auto comb = unrank_combination(lo, total, job.subset_size);
            for (std::size_t ord = lo; ord < hi; ++ord) {
                LatticeConfiguration sub = grid.subconfiguration(comb);
                SelfdualVerdict v = classify(sub, job.k);
                if (v.knap.is_knap) ++chunk_knap[c];
                if (v.selfdual) ++chunk_sd[c];
                const bool emit =
                    job.filter == SearchJob::Filter::All ||
                    (job.filter == SearchJob::Filter::Knap && v.knap.is_knap) ||
                    (job.filter == SearchJob::Filter::Selfdual && v.selfdual);
                if (emit)
                    chunk_hits[c].push_back(SearchHit{
                        ord, comb, std::move(sub), v.selfdual,
                        v.knap.is_knap, v.c_k});
                if (ord + 1 < hi) next_combination(comb, total);
            }
        }
    };

    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    SearchResult result;
    result.examined = count;
    std::set<std::vector<IntVec>> seen;
    for (std::size_t c = 0; c < nchunks; ++c) {
        result.knap_count += chunk_knap[c];
        result.selfdual_count += chunk_sd[c];
        for (auto& hit : chunk_hits[c]) {
            if (job.dedup &&
                !seen.insert(canonical_key(hit.cfg.points(), job.box_lengths))
                     .second)
                continue;
            result.hits.push_back(std::move(hit));
        }
    }
    return result;
}

}  // namespace selfdual
