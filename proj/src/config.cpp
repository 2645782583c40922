#include "selfdual/config.hpp"

#include <map>

namespace selfdual {

LatticeConfiguration LatticeConfiguration::validate(std::vector<IntVec> points,
                                                    std::string label) {
    if (points.empty()) throw empty_configuration();
    const std::size_t n = points.front().size();
    for (const IntVec& p : points)
        if (p.size() != n)
            throw dimension_mismatch("points of mixed ambient dimension");
    std::map<IntVec, std::size_t> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto [it, inserted] = seen.emplace(points[i], i);
        if (!inserted) throw duplicate_point(it->second, i);
    }
    LatticeConfiguration cfg;
    cfg.ambient_dim_ = n;
    cfg.points_ = std::move(points);
    cfg.label_ = std::move(label);
    return cfg;
}

LatticeConfiguration LatticeConfiguration::subconfiguration(
    const std::vector<std::size_t>& idx, std::string label) const {
    std::vector<IntVec> pts;
    pts.reserve(idx.size());
    for (std::size_t i : idx) {
        if (i >= size()) throw config_error("subconfiguration: index out of range");
        pts.push_back(points_[i]);
    }
    return validate(std::move(pts), std::move(label));
}

IntMatrix homogenize(const LatticeConfiguration& cfg) {
    const std::size_t n = cfg.ambient_dim(), np = cfg.size();
    IntMatrix a(n + 1, np);
    for (std::size_t j = 0; j < np; ++j) {
        a(0, j) = 1;
        for (std::size_t i = 0; i < n; ++i) a(i + 1, j) = cfg.point(j)[i];
    }
    return a;
}

std::size_t dimension(const LatticeConfiguration& cfg) {
    return rank(homogenize(cfg)) - 1;
}

std::pair<LatticeConfiguration, AffineTransformRecord> normalize_lattice(
    const LatticeConfiguration& cfg) {
    const std::size_t n = cfg.ambient_dim(), np = cfg.size();

    AffineTransformRecord rec;
    rec.origin = cfg.point(0);

    IntMatrix a = homogenize(cfg);
    if (rank(a) == n + 1 && maximal_minor_gcd(a) == 1) {
        rec.basis = IntMatrix::identity(n);
        rec.changed = false;
        return {cfg, rec};
    }

    // Basis of the lattice generated by the differences a_i - a_0 (the
    // lattice itself, not its saturation: an index-m sublattice rescales).
    IntMatrix diffs(np - 1, n);
    for (std::size_t i = 1; i < np; ++i)
        for (std::size_t j = 0; j < n; ++j)
            diffs(i - 1, j) = cfg.point(i)[j] - cfg.point(0)[j];
    IntMatrix h = row_hermite_normal_form(diffs);
    std::vector<IntVec> basis_rows;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        IntVec r = h.row(i);
        if (!is_zero(r)) basis_rows.push_back(std::move(r));
    }
    const std::size_t nprime = basis_rows.size();
    IntMatrix basis = basis_rows.empty() ? IntMatrix(0, n)
                                         : IntMatrix::from_rows(basis_rows);

    // Coordinates of each difference in the new basis; integral because the
    // Hermite form generates the same lattice.
    IntMatrix bt = basis.transposed();
    std::vector<IntVec> new_points;
    new_points.reserve(np);
    for (std::size_t i = 0; i < np; ++i) {
        IntVec d(n);
        for (std::size_t j = 0; j < n; ++j)
            d[j] = cfg.point(i)[j] - rec.origin[j];
        auto x = solve(bt, d);
        if (!x) throw internal_error("normalize_lattice: inconsistent solve");
        IntVec c(nprime);
        for (std::size_t j = 0; j < nprime; ++j) {
            Rat v = (*x)[j];
            v.canonicalize();
            if (v.get_den() != 1)
                throw internal_error("normalize_lattice: non-integral coordinate");
            c[j] = v.get_num();
        }
        new_points.push_back(std::move(c));
    }

    rec.basis = basis;
    rec.changed = true;
    auto out = LatticeConfiguration::validate(std::move(new_points), cfg.label());
    return {out, rec};
}

}  // namespace selfdual
