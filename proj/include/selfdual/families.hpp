#pragma once

#include "selfdual/config.hpp"

namespace selfdual {

struct unknown_fixture : error {
    explicit unknown_fixture(const std::string& name)
        : error("unknown fixture: " + name) {}
};

struct budget_exhausted : error {
    explicit budget_exhausted(const std::string& what) : error(what) {}
};

// {0, 1, ..., d} on a line; the rational normal curve of degree d.
LatticeConfiguration segment(int d);

// All lattice points of [0, l_1] x ... x [0, l_m].
LatticeConfiguration box(const std::vector<int>& lengths);

// Vertices of the unit n-cube.
LatticeConfiguration cube_vertices(std::size_t n);

// Lattice points of the size-k standard simplex in Z^n.
LatticeConfiguration simplex(std::size_t n, int k);

// Cayley configuration: part j gets the j-th unit prefix in Z^{r-1} (the
// redundant first indicator coordinate is dropped). Parts of differing
// ambient dimension are padded with zeros.
LatticeConfiguration cayley(const std::vector<LatticeConfiguration>& parts);

// Projective join: the parts are first embedded into disjoint coordinate
// blocks, then combined as a Cayley configuration, which makes the
// homogenized matrix block diagonal. Needs at least two parts.
LatticeConfiguration join(const std::vector<LatticeConfiguration>& parts);

// Rational normal scroll: cayley(segment(d_1), ..., segment(d_r)).
LatticeConfiguration scroll(const std::vector<int>& degrees);

// The classical six-point hexagon {(0,0),(1,0),(0,1),(2,1),(1,2),(2,2)},
// the unique conic through it being x^2 - xy + y^2 - x - y.
LatticeConfiguration togliatti();

// The six points (m_i, m_j), i != j, for distinct integers m_1, m_2, m_3;
// they are cut out by the conic (f(x) - f(y))/(x - y), f = prod (x - m_i).
LatticeConfiguration three_root_conic(long m1, long m2, long m3);

// A' = {(0,0),(1,0),(0,1),(3,1),(1,2)} plus any subset of the three extra
// points {(3,3),(4,3),(4,2)} on its conic x^2 - 2xy + 2y^2 - x - 2y.
LatticeConfiguration aprime(const std::vector<IntVec>& extras);

// The ten-point centrally symmetric family
// {(0,0),(1,0),(0,1),(2,1),(c-1,e),(c,d-1),(c,d),(c-1,d),(c-2,d-1),(1,d-e)}.
// Rejects d = 1 and d = 2(c-1), where the 3-selfduality guarantee fails,
// and parameter choices with coincident points.
LatticeConfiguration mulliken(long c, long d, long e);

// Named catalog entries; see fixture_names(). Coordinates transcribed from
// the published diagrams, confirmed behaviorally by the verification suite.
LatticeConfiguration fixture(const std::string& name);
std::vector<std::string> fixture_names();

struct RandomGeneralResult {
    LatticeConfiguration cfg;
    int attempts = 0;
};

// binom(n+k,k)+1 points sampled uniformly without replacement from
// [0, box_size]^n, resampled until the k-jet matrix has full rank and the
// configuration is knap; such a configuration is k-selfdual. Throws
// budget_exhausted when the box is too small or the budget runs out.
RandomGeneralResult random_general(std::size_t n, int k, std::uint64_t seed,
                                   long box_size, int budget = 1000);

}  // namespace selfdual
