#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "selfdual/dualdim.hpp"
#include "selfdual/families.hpp"
#include "selfdual/io.hpp"
#include "selfdual/search.hpp"
#include "selfdual/verification.hpp"

namespace py = pybind11;

namespace {

using Points = std::vector<std::vector<long long>>;

selfdual::LatticeConfiguration to_config(const Points& points) {
    std::vector<selfdual::IntVec> pts;
    pts.reserve(points.size());
    for (const auto& p : points) {
        selfdual::IntVec q;
        q.reserve(p.size());
        for (long long x : p) q.emplace_back(static_cast<long>(x));
        pts.push_back(std::move(q));
    }
    return selfdual::LatticeConfiguration::validate(std::move(pts));
}

Points from_config(const selfdual::LatticeConfiguration& cfg) {
    Points out;
    out.reserve(cfg.size());
    for (const auto& p : cfg.points()) {
        std::vector<long long> q;
        q.reserve(p.size());
        for (const auto& x : p) {
            if (!x.fits_slong_p())
                throw selfdual::error("coordinate does not fit 64 bits");
            q.push_back(x.get_si());
        }
        out.push_back(std::move(q));
    }
    return out;
}

py::object json_to_py(const selfdual::io::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

selfdual::IntMatrix to_matrix(const Points& rows) {
    std::vector<selfdual::IntVec> r;
    for (const auto& row : rows) {
        selfdual::IntVec q;
        for (long long x : row) q.emplace_back(static_cast<long>(x));
        r.push_back(std::move(q));
    }
    return selfdual::IntMatrix::from_rows(r);
}

}  // namespace

PYBIND11_MODULE(pyselfdual, m) {
    m.doc() =
        "Exact-arithmetic classification of k-selfdual equivariant "
        "projective toric embeddings given as lattice point configurations";

    // Translators run newest-first, so the base class goes in first.
    py::register_exception<selfdual::error>(m, "SelfdualError",
                                            PyExc_RuntimeError);
    py::register_exception<selfdual::config_error>(m, "ConfigError",
                                                   PyExc_ValueError);

    m.def(
        "classify",
        [](const Points& points, int k, bool crosscheck, std::size_t trials,
           std::uint64_t seed) {
            auto cfg = to_config(points);
            selfdual::SelfdualVerdict v = selfdual::classify(cfg, k);
            if (crosscheck && v.c_k >= 1)
                v.dual_dim_check =
                    selfdual::dual_dimension(cfg, k, trials, seed);
            return json_to_py(selfdual::io::to_json(v));
        },
        py::arg("points"), py::arg("k"), py::arg("crosscheck") = false,
        py::arg("trials") = 3, py::arg("seed") = 0,
        "Full k-selfduality verdict with certificates, as a dict");

    m.def(
        "knap",
        [](const Points& points, int k) {
            return json_to_py(
                selfdual::io::to_json(selfdual::knap_check(to_config(points), k)));
        },
        py::arg("points"), py::arg("k"),
        "The knap (not-a-pyramid) report for order k");

    m.def(
        "hilbert_function",
        [](const Points& points, int k) {
            return selfdual::hilbert_function(to_config(points), k);
        },
        py::arg("points"), py::arg("k"),
        "Independent conditions the points impose on degree-<=k polynomials");

    m.def(
        "dual_dimension",
        [](const Points& points, int k, std::size_t trials,
           std::uint64_t seed) {
            return json_to_py(selfdual::io::to_json(
                selfdual::dual_dimension(to_config(points), k, trials, seed)));
        },
        py::arg("points"), py::arg("k"), py::arg("trials") = 3,
        py::arg("seed") = 0, "Jacobian-rank probe of the k-th dual variety");

    m.def(
        "rank",
        [](const Points& rows) { return selfdual::rank(to_matrix(rows)); },
        py::arg("rows"), "Exact rank of an integer matrix");

    m.def(
        "right_kernel",
        [](const Points& rows) {
            Points out;
            for (const auto& v :
                 selfdual::right_kernel(to_matrix(rows)).vectors) {
                std::vector<long long> q;
                for (const auto& x : v) {
                    if (!x.fits_slong_p())
                        throw selfdual::error("kernel entry exceeds 64 bits");
                    q.push_back(x.get_si());
                }
                out.push_back(std::move(q));
            }
            return out;
        },
        py::arg("rows"),
        "Canonical saturated basis of the integer right kernel lattice");

    m.def("segment", [](int d) { return from_config(selfdual::segment(d)); },
          py::arg("d"));
    m.def("box",
          [](const std::vector<int>& l) { return from_config(selfdual::box(l)); },
          py::arg("lengths"));
    m.def("cube_vertices",
          [](std::size_t n) { return from_config(selfdual::cube_vertices(n)); },
          py::arg("n"));
    m.def("simplex",
          [](std::size_t n, int k) { return from_config(selfdual::simplex(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("togliatti", [] { return from_config(selfdual::togliatti()); });
    m.def("three_root_conic",
          [](long m1, long m2, long m3) {
              return from_config(selfdual::three_root_conic(m1, m2, m3));
          },
          py::arg("m1"), py::arg("m2"), py::arg("m3"));
    m.def("aprime",
          [](const Points& extras) {
              std::vector<selfdual::IntVec> e;
              for (const auto& p : extras) {
                  selfdual::IntVec q;
                  for (long long x : p) q.emplace_back(static_cast<long>(x));
                  e.push_back(std::move(q));
              }
              return from_config(selfdual::aprime(e));
          },
          py::arg("extras") = Points{});
    m.def("mulliken",
          [](long c, long d, long e) {
              return from_config(selfdual::mulliken(c, d, e));
          },
          py::arg("c"), py::arg("d"), py::arg("e"));
    m.def("scroll",
          [](const std::vector<int>& degrees) {
              return from_config(selfdual::scroll(degrees));
          },
          py::arg("degrees"));
    m.def("cayley",
          [](const std::vector<Points>& parts) {
              std::vector<selfdual::LatticeConfiguration> cfgs;
              for (const auto& p : parts) cfgs.push_back(to_config(p));
              return from_config(selfdual::cayley(cfgs));
          },
          py::arg("parts"));
    m.def("join",
          [](const std::vector<Points>& parts) {
              std::vector<selfdual::LatticeConfiguration> cfgs;
              for (const auto& p : parts) cfgs.push_back(to_config(p));
              return from_config(selfdual::join(cfgs));
          },
          py::arg("parts"));
    m.def("fixture",
          [](const std::string& name) {
              return from_config(selfdual::fixture(name));
          },
          py::arg("name"));
    m.def("fixture_names", &selfdual::fixture_names);
    m.def("random_general",
          [](std::size_t n, int k, std::uint64_t seed, long box_size) {
              auto r = selfdual::random_general(n, k, seed, box_size);
              return py::make_tuple(from_config(r.cfg), r.attempts);
          },
          py::arg("n"), py::arg("k"), py::arg("seed"), py::arg("box_size"),
          "Returns (points, attempts)");

    m.def(
        "search",
        [](const std::vector<int>& box_lengths, std::size_t size, int k,
           const std::string& filter, bool dedup) {
            selfdual::SearchJob job;
            job.box_lengths = box_lengths;
            job.subset_size = size;
            job.k = k;
            job.filter = filter == "all" ? selfdual::SearchJob::Filter::All
                         : filter == "knap"
                             ? selfdual::SearchJob::Filter::Knap
                             : selfdual::SearchJob::Filter::Selfdual;
            job.dedup = dedup;
            selfdual::SearchResult r = selfdual::run_search(job);
            py::list hits;
            for (const auto& h : r.hits) {
                py::dict d;
                d["indices"] = h.indices;
                d["points"] = from_config(h.cfg);
                d["selfdual"] = h.selfdual;
                d["knap"] = h.knap;
                d["c_k"] = h.c_k;
                hits.append(std::move(d));
            }
            py::dict out;
            out["hits"] = std::move(hits);
            out["examined"] = r.examined;
            out["selfdual_count"] = r.selfdual_count;
            out["knap_count"] = r.knap_count;
            return out;
        },
        py::arg("box_lengths"), py::arg("size"), py::arg("k"),
        py::arg("filter") = "selfdual", py::arg("dedup") = false);

    m.def("verify", [] {
        selfdual::VerificationReport rep = selfdual::run_verification();
        py::list checks;
        for (const auto& c : rep.checks) {
            py::dict d;
            d["name"] = c.name;
            d["pass"] = c.pass;
            d["detail"] = c.detail;
            checks.append(std::move(d));
        }
        py::dict out;
        out["checks"] = std::move(checks);
        out["notes"] = rep.notes;
        out["passed"] = rep.passed;
        out["failed"] = rep.failed;
        return out;
    });

    m.attr("__version__") = "0.1.0";
}
