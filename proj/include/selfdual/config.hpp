#pragma once

#include <optional>
#include <string>
#include <utility>

#include "selfdual/exactla.hpp"

namespace selfdual {

struct config_error : error {
    explicit config_error(const std::string& what) : error(what) {}
};

struct duplicate_point : config_error {
    std::size_t first, second;
    duplicate_point(std::size_t a, std::size_t b)
        : config_error("duplicate points at indices " + std::to_string(a) +
                       " and " + std::to_string(b)),
          first(a),
          second(b) {}
};

struct empty_configuration : config_error {
    empty_configuration() : config_error("configuration has no points") {}
};

// An ordered list of N+1 distinct lattice points a_0, ..., a_N in Z^n.
// Point order is significant: indices appear in all reports and
// certificates downstream.
class LatticeConfiguration {
public:
    static LatticeConfiguration validate(std::vector<IntVec> points,
                                         std::string label = {});

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return points_.size(); }  // N + 1
    // Ref-qualified so iterating points() of a temporary cannot dangle.
    const std::vector<IntVec>& points() const& { return points_; }
    std::vector<IntVec> points() && { return std::move(points_); }
    const IntVec& point(std::size_t i) const { return points_[i]; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    // Subconfiguration on the given point indices, preserving input order
    // and original coordinates.
    LatticeConfiguration subconfiguration(const std::vector<std::size_t>& idx,
                                          std::string label = {}) const;

    bool same_points(const LatticeConfiguration& o) const {
        return points_ == o.points_;
    }

private:
    LatticeConfiguration() = default;
    std::size_t ambient_dim_ = 0;
    std::vector<IntVec> points_;
    std::string label_;
};

// The (n+1) x (N+1) matrix with columns (1, a_i): first row all ones,
// column j reads back point a_j.
IntMatrix homogenize(const LatticeConfiguration& cfg);

// Dimension of the projective toric variety: rank of the homogenized
// matrix minus one (the dimension of the affine span of the points).
std::size_t dimension(const LatticeConfiguration& cfg);

// Record of the affine map from normalized coordinates back to the
// original ones: original point = origin + c * basis (c a row vector).
struct AffineTransformRecord {
    IntVec origin;        // a_0 of the input
    IntMatrix basis;      // rows: lattice basis of the difference lattice
    bool changed = false; // false when the input was already normalized
};

// Re-embeds the configuration so that the homogenized matrix has full row
// rank and maximal_minor_gcd 1, i.e. the points affinely generate the full
// lattice. Returns the input unchanged when already normalized.
std::pair<LatticeConfiguration, AffineTransformRecord> normalize_lattice(
    const LatticeConfiguration& cfg);

}  // namespace selfdual
