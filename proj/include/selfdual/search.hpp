#pragma once

#include "selfdual/classify.hpp"

namespace selfdual {

// Brute-force sweep over all subsets of a given cardinality of the lattice
// points of a box, classifying each at order k.
struct SearchJob {
    std::vector<int> box_lengths;
    std::size_t subset_size = 0;
    int k = 1;
    enum class Filter { All, Knap, Selfdual } filter = Filter::Selfdual;
    bool dedup = false;  // drop repeats under the symmetries of the box
    // Guard against accidentally huge jobs; raise explicitly when needed.
    std::size_t max_candidates = 5'000'000;
};

struct SearchHit {
    std::size_t ordinal = 0;  // position in the lexicographic enumeration
    std::vector<std::size_t> indices;
    LatticeConfiguration cfg;
    bool selfdual = false;
    bool knap = false;
    std::size_t c_k = 0;
};

struct SearchResult {
    std::vector<SearchHit> hits;  // in enumeration order
    std::size_t examined = 0;
    std::size_t selfdual_count = 0;
    std::size_t knap_count = 0;
};

// Enumerates index subsets in lexicographic order. Work is sharded across
// worker threads by ordinal ranges and merged back in order, so the output
// stream does not depend on the worker count.
SearchResult run_search(const SearchJob& job, std::size_t workers = 0);

// Lexicographic successor of a size-r index combination drawn from
// {0, ..., n-1}; returns false after the last one.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n);

// The rank-th size-r combination of {0, ..., n-1} in lexicographic order.
std::vector<std::size_t> unrank_combination(std::size_t rank, std::size_t n,
                                            std::size_t r);

}  // namespace selfdual
