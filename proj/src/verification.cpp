#include "selfdual/verification.hpp"

#include <algorithm>
#include <sstream>

#include "selfdual/dualdim.hpp"
#include "selfdual/families.hpp"

namespace selfdual {

namespace {

struct Suite {
    VerificationReport report;
    std::string inject;

    void check(const std::string& name, bool pass, const std::string& detail) {
        bool p = (name == inject) ? !pass : pass;
        report.checks.push_back({name, p, detail});
        if (p)
            ++report.passed;
        else
            ++report.failed;
    }

    void verdict_check(const std::string& name, const LatticeConfiguration& cfg,
                       int k, bool want_selfdual,
                       long want_c = -1) {
        SelfdualVerdict v = classify(cfg, k);
        bool pass = (v.selfdual == want_selfdual) && v.diagnostics.empty();
        if (want_c >= 0) pass = pass && v.c_k == static_cast<std::size_t>(want_c);
        std::ostringstream os;
        os << "k=" << k << " selfdual=" << (v.selfdual ? "yes" : "no")
           << " c_k=" << v.c_k << " (" << v.reason << ")";
        check(name, pass, os.str());
    }
};

Rat eval_conic(const IntVec& coeffs, const IntVec& p) {
    // a x^2 + b xy + c y^2 + d x + e y + f
    Rat x(p[0]), y(p[1]);
    return Rat(coeffs[0]) * x * x + Rat(coeffs[1]) * x * y +
           Rat(coeffs[2]) * y * y + Rat(coeffs[3]) * x + Rat(coeffs[4]) * y +
           Rat(coeffs[5]);
}

}  // namespace

VerificationReport run_verification(const std::string& inject_failure) {
    Suite s;
    s.inject = inject_failure;

    // Hexagon on the conic x^2 - xy + y^2 - x - y.
    s.verdict_check("togliatti k=2 selfdual c=1", togliatti(), 2, true, 1);
    {
        const IntVec q1 = {1, -1, 1, -1, -1, 0};
        const LatticeConfiguration hexagon = togliatti();
        bool vanishes = true;
        for (const IntVec& p : hexagon.points())
            vanishes = vanishes && eval_conic(q1, p) == 0;
        bool off = eval_conic(q1, {Int(1), Int(1)}) != 0 &&
                   eval_conic(q1, {Int(2), Int(0)}) != 0 &&
                   eval_conic(q1, {Int(0), Int(2)}) != 0;
        s.check("togliatti conic vanishing", vanishes && off,
                "x^2-xy+y^2-x-y vanishes on the hexagon and nowhere nearby");
    }
    {
        LatticeConfiguration dp = fixture("del_pezzo_hexagon");
        KnapReport rep = knap_check(dp, 2);
        bool pass = !rep.is_knap && rep.offending_indices ==
                                        std::vector<std::size_t>{6};
        LatticeConfiguration d = extract_DJ(dp, 2);
        pass = pass && d.same_points(togliatti());
        s.check("togliatti+interior point: not 2nap, extract_DJ recovers",
                pass, "interior point is the unique offending index");
    }
    {
        // Reflection x -> 2-x carries the hexagon onto three_root_conic(0,1,2).
        auto a = togliatti().points();
        for (IntVec& p : a) p[0] = 2 - p[0];
        std::sort(a.begin(), a.end());
        auto b = three_root_conic(0, 1, 2).points();
        std::sort(b.begin(), b.end());
        s.check("three_root_conic(0,1,2) is the reflected hexagon", a == b, "");
    }
    s.verdict_check("three_root_conic(0,1,2) k=2 selfdual",
                    three_root_conic(0, 1, 2), 2, true, 1);
    s.verdict_check("three_root_conic(0,1,3) k=2 selfdual",
                    three_root_conic(0, 1, 3), 2, true, 1);

    {
        const std::vector<IntVec> extras = {
            {Int(3), Int(3)}, {Int(4), Int(3)}, {Int(4), Int(2)}};
        for (std::size_t i = 0; i < 3; ++i)
            s.verdict_check("aprime+1 extra #" + std::to_string(i) +
                                " k=2 selfdual",
                            aprime({extras[i]}), 2, true, 1);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                s.verdict_check("aprime+2 extras #" + std::to_string(i) +
                                    std::to_string(j) + " k=2 not selfdual",
                                aprime({extras[i], extras[j]}), 2, false);
        s.verdict_check("aprime+3 extras k=3 selfdual", aprime(extras), 3,
                        true, 1);
    }

    s.verdict_check("figure1 k=1 selfdual", fixture("figure1"), 1, true, 1);
    s.verdict_check("figure2_hexagon k=2 selfdual", fixture("figure2_hexagon"),
                    2, true, 1);
    {
        LatticeConfiguration f3 = fixture("figure3");
        SelfdualVerdict v = classify(f3, 4);
        s.check("figure3 k=4: rank 15, c=1, selfdual",
                v.jet_rank == 15 && v.c_k == 1 && v.selfdual &&
                    v.diagnostics.empty(),
                "rank A^(4) = " + std::to_string(v.jet_rank));
    }
    {
        LatticeConfiguration cone = fixture("twisted_cubic_cone");
        KnapReport rep = knap_check(cone, 1);
        DualDimReport dd = dual_dimension(cone, 1, 3, 1);
        s.check("twisted-cubic cone: not 1nap, degenerate dual",
                !rep.is_knap &&
                    rep.offending_indices == std::vector<std::size_t>{0} &&
                    !dd.degenerate_coordinates.empty() &&
                    dd.computed_dim < dd.expected_dim,
                "apex coordinate forced to zero on the dual");
    }
    {
        SelfdualVerdict v = classify(mulliken(5, 4, 2), 3);
        s.check("mulliken(5,4,2) k=3: 3nap, c=1, selfdual",
                v.knap.is_knap && v.c_k == 1 && v.selfdual, v.reason);
    }
    s.verdict_check("mulliken(6,5,3) k=3 selfdual", mulliken(6, 5, 3), 3, true,
                    1);

    for (std::size_t n = 2; n <= 4; ++n)
        s.verdict_check("cube_vertices(" + std::to_string(n) + ") k=" +
                            std::to_string(n - 1) + " selfdual c=1",
                        cube_vertices(n), static_cast<int>(n) - 1, true, 1);

    s.verdict_check("box(2,2) k=3 selfdual c=1", box({2, 2}), 3, true, 1);
    s.verdict_check("box(3,2) k=4 selfdual c=1", box({3, 2}), 4, true, 1);
    s.verdict_check("box(2,2,2) k=5 selfdual c=1", box({2, 2, 2}), 5, true, 1);
    s.verdict_check("cayley(box(1,1) x 3) k=2 selfdual c=2",
                    cayley({box({1, 1}), box({1, 1}), box({1, 1})}), 2, true, 2);

    s.verdict_check("scroll(2,2) k=2 selfdual c=1", scroll({2, 2}), 2, true, 1);
    s.verdict_check("scroll(2,2,2) k=2 selfdual c=2", scroll({2, 2, 2}), 2,
                    true, 2);
    s.verdict_check("scroll(3,3) k=3 selfdual c=1", scroll({3, 3}), 3, true, 1);
    s.verdict_check("scroll(1,2) k=1 not selfdual", scroll({1, 2}), 1, false);

    s.verdict_check("join(segment(3), segment(3)) k=2 selfdual c=2",
                    join({segment(3), segment(3)}), 2, true, 2);
    s.verdict_check("blowup_veronese_segre k=3 selfdual",
                    fixture("blowup_veronese_segre"), 3, true, 1);
    {
        SelfdualVerdict v = classify(fixture("perkinson_octagon"), 3);
        s.check("perkinson_octagon (external coordinates) k=3: 3nap, c=1",
                v.knap.is_knap && v.c_k == 1 && v.selfdual, v.reason);
    }

    // Independent torus-orbit route agrees on every fixture above.
    {
        std::vector<std::pair<LatticeConfiguration, int>> cases;
        cases.emplace_back(togliatti(), 2);
        cases.emplace_back(fixture("del_pezzo_hexagon"), 2);
        cases.emplace_back(fixture("figure1"), 1);
        cases.emplace_back(fixture("figure2_hexagon"), 2);
        cases.emplace_back(fixture("figure3"), 4);
        cases.emplace_back(fixture("twisted_cubic_cone"), 1);
        cases.emplace_back(fixture("blowup_veronese_segre"), 3);
        cases.emplace_back(join({segment(3), segment(3)}), 2);
        cases.emplace_back(scroll({1, 2}), 1);
        cases.emplace_back(mulliken(5, 4, 2), 3);
        bool all = true;
        std::string bad;
        for (const auto& [cfg, k] : cases) {
            CrosscheckReport cc = crosscheck_characterizations(cfg, k, 3, 17);
            if (!cc.agree) {
                all = false;
                bad += cfg.label() + " ";
            }
        }
        s.check("cross-check: combinatorial vs torus-orbit route", all,
                all ? "all fixtures agree" : "disagreement on: " + bad);
    }

    s.report.notes.push_back(
        "note: the published Hilbert-function display equates "
        "binom(n+k,k) - rk A^(k) with binom(n+k,k) + 1 - d_k, which is "
        "off by one against rk A^(k) = d_k + 1; this library uses "
        "H(k) = rk A^(k) throughout.");
    s.report.notes.push_back(
        "note: the published discussion of the six-point conic "
        "configuration says 'the rank of A^(2) equals five, and so c_1=1'; "
        "the corank in question is c_2.");
    s.report.notes.push_back(
        "note: the sixteen-point figure-derived fixture restores two "
        "interior dots lost in the flattened diagram; as printed the dots "
        "would admit the quartic x(x-1)(x-3)(x-4) - y(y-1)(y-3)(y-4) and "
        "could not have corank one.");

    return s.report;
}

}  // namespace selfdual
