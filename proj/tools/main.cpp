#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "selfdual/dualdim.hpp"
#include "selfdual/families.hpp"
#include "selfdual/io.hpp"
#include "selfdual/search.hpp"
#include "selfdual/verification.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using selfdual::io::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw selfdual::error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw selfdual::error("cannot open output file: " + path);
    out << text;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

struct Manifest {
    std::string command;
    json parameters = json::object();
    std::uint64_t seed = 0;
    json input_digests = json::object();
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();

    json finish() const {
        json m;
        m["command"] = command;
        m["parameters"] = parameters;
        m["seed"] = seed;
        m["version"] = kVersion;
        m["input_digests"] = input_digests;
        m["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
        return m;
    }
};

struct CommonOpts {
    std::string input = "-";
    std::string out;
    std::string format = "text";
    int k = 1;
    std::uint64_t seed = 0;
    std::size_t trials = 3;
    bool crosscheck = false;
};

int cmd_classify(const CommonOpts& o) {
    Manifest manifest;
    manifest.command = "classify";
    manifest.seed = o.seed;
    manifest.parameters = {{"k", o.k},
                           {"crosscheck", o.crosscheck},
                           {"trials", o.trials},
                           {"format", o.format}};
    const std::string text = read_input(o.input);
    manifest.input_digests[o.input] = fnv1a_hex(text);

    selfdual::LatticeConfiguration cfg = selfdual::io::parse_configuration(text);
    selfdual::SelfdualVerdict v = selfdual::classify(cfg, o.k);
    if (v.was_normalized)
        std::cerr << "warning: input re-embedded so the points affinely "
                     "generate the full lattice\n";
    if (o.crosscheck && v.c_k >= 1) {
        selfdual::DualDimReport dd =
            selfdual::dual_dimension(cfg, o.k, o.trials, o.seed);
        if (!dd.agrees_with_verdict)
            std::cerr << "warning: torus-orbit cross-check disagrees with the "
                         "combinatorial verdict\n";
        v.dual_dim_check = std::move(dd);
    }

    if (o.format == "json") {
        json out;
        out["manifest"] = manifest.finish();
        out["configuration"] = selfdual::io::to_json(cfg);
        out["verdict"] = selfdual::io::to_json(v);
        write_output(o.out, out.dump(2) + "\n");
    } else {
        write_output(o.out, selfdual::io::to_text(v));
    }
    return v.selfdual ? 0 : 1;
}

int cmd_hilbert(const CommonOpts& o, int k_max) {
    Manifest manifest;
    manifest.command = "hilbert";
    manifest.parameters = {{"k_max", k_max}, {"format", o.format}};
    const std::string text = read_input(o.input);
    manifest.input_digests[o.input] = fnv1a_hex(text);
    selfdual::LatticeConfiguration cfg = selfdual::io::parse_configuration(text);

    std::vector<std::size_t> values;
    for (int k = 1; k <= k_max; ++k)
        values.push_back(selfdual::hilbert_function(cfg, k));

    if (o.format == "json") {
        json out;
        out["manifest"] = manifest.finish();
        out["configuration"] = selfdual::io::to_json(cfg);
        out["values"] = values;
        write_output(o.out, out.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "k   H(k)\n";
        for (int k = 1; k <= k_max; ++k)
            os << k << "   " << values[k - 1] << "\n";
        write_output(o.out, os.str());
    }
    return 0;
}

struct GenerateOpts {
    std::string family;
    int d = 3;
    int n = 2;
    int k = 2;
    std::vector<int> lengths;
    std::vector<int> degrees;
    std::vector<long> roots;
    std::vector<std::string> extras;
    std::vector<long> cde;
    std::string name;
    long box_size = 10;
    std::vector<std::string> inputs;
};

selfdual::LatticeConfiguration generate_family(const GenerateOpts& g,
                                               std::uint64_t seed,
                                               int* attempts) {
    using namespace selfdual;
    if (g.family == "segment") return segment(g.d);
    if (g.family == "box") return box(g.lengths);
    if (g.family == "cube") return cube_vertices(static_cast<std::size_t>(g.n));
    if (g.family == "simplex")
        return simplex(static_cast<std::size_t>(g.n), g.k);
    if (g.family == "togliatti") return togliatti();
    if (g.family == "three_root_conic") {
        if (g.roots.size() != 3)
            throw error("three_root_conic: pass --roots m1,m2,m3");
        return three_root_conic(g.roots[0], g.roots[1], g.roots[2]);
    }
    if (g.family == "aprime") {
        std::vector<IntVec> extras;
        for (const std::string& e : g.extras) {
            IntVec p;
            std::istringstream ss(e);
            std::string tok;
            while (std::getline(ss, tok, ',')) p.emplace_back(Int(tok));
            extras.push_back(std::move(p));
        }
        return aprime(extras);
    }
    if (g.family == "mulliken") {
        if (g.cde.size() != 3) throw error("mulliken: pass --cde c,d,e");
        return mulliken(g.cde[0], g.cde[1], g.cde[2]);
    }
    if (g.family == "fixture") return fixture(g.name);
    if (g.family == "scroll") return scroll(g.degrees);
    if (g.family == "cayley" || g.family == "join") {
        std::vector<LatticeConfiguration> parts;
        for (const std::string& path : g.inputs)
            parts.push_back(io::parse_configuration(read_input(path)));
        return g.family == "cayley" ? cayley(parts) : join(parts);
    }
    if (g.family == "random_general") {
        RandomGeneralResult r = random_general(static_cast<std::size_t>(g.n),
                                               g.k, seed, g.box_size);
        if (attempts) *attempts = r.attempts;
        return r.cfg;
    }
    throw selfdual::error(
        "unknown family: " + g.family +
        " (families: segment box cube simplex togliatti three_root_conic "
        "aprime mulliken fixture scroll cayley join random_general)");
}

int cmd_generate(const CommonOpts& o, const GenerateOpts& g) {
    Manifest manifest;
    manifest.command = "generate";
    manifest.seed = o.seed;
    manifest.parameters = {{"family", g.family}, {"format", o.format}};
    int attempts = 0;
    selfdual::LatticeConfiguration cfg = generate_family(g, o.seed, &attempts);
    if (attempts > 0) manifest.parameters["attempts"] = attempts;
    for (const std::string& path : g.inputs)
        manifest.input_digests[path] = fnv1a_hex(read_input(path));

    if (o.format == "json") {
        json out;
        out["manifest"] = manifest.finish();
        out["configuration"] = selfdual::io::to_json(cfg);
        write_output(o.out, out.dump(2) + "\n");
    } else {
        write_output(o.out, selfdual::io::to_text(cfg));
    }
    return 0;
}

int cmd_search(const CommonOpts& o, const selfdual::SearchJob& job) {
    Manifest manifest;
    manifest.command = "search";
    manifest.parameters = {
        {"box", job.box_lengths},
        {"size", job.subset_size},
        {"k", job.k},
        {"filter", job.filter == selfdual::SearchJob::Filter::All    ? "all"
                   : job.filter == selfdual::SearchJob::Filter::Knap ? "knap"
                                                                     : "selfdual"},
        {"dedup", job.dedup}};

    selfdual::SearchResult result = selfdual::run_search(job);
    std::cerr << "examined " << result.examined << " subsets, "
              << result.selfdual_count << " selfdual, " << result.knap_count
              << " knap\n";

    if (o.format == "json") {
        json hits = json::array();
        for (const auto& hit : result.hits) {
            json h;
            h["ordinal"] = hit.ordinal;
            h["indices"] = hit.indices;
            h["configuration"] = selfdual::io::to_json(hit.cfg);
            h["selfdual"] = hit.selfdual;
            h["knap"] = hit.knap;
            h["c_k"] = hit.c_k;
            hits.push_back(std::move(h));
        }
        json out;
        out["manifest"] = manifest.finish();
        out["examined"] = result.examined;
        out["selfdual_count"] = result.selfdual_count;
        out["knap_count"] = result.knap_count;
        out["hits"] = std::move(hits);
        write_output(o.out, out.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& hit : result.hits) {
            os << (hit.selfdual ? "selfdual" : hit.knap ? "knap" : "plain")
               << " c_k=" << hit.c_k << " points:";
            for (const selfdual::IntVec& p : hit.cfg.points()) {
                os << " (";
                for (std::size_t i = 0; i < p.size(); ++i)
                    os << (i ? "," : "") << p[i];
                os << ")";
            }
            os << "\n";
        }
        os << "examined " << result.examined << ", selfdual "
           << result.selfdual_count << ", knap " << result.knap_count << "\n";
        write_output(o.out, os.str());
    }
    return 0;
}

int cmd_verify_paper(const CommonOpts& o, const std::string& inject) {
    Manifest manifest;
    manifest.command = "verify-paper";
    selfdual::VerificationReport rep = selfdual::run_verification(inject);

    if (o.format == "json") {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back(
                {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        json out;
        out["manifest"] = manifest.finish();
        out["checks"] = std::move(checks);
        out["notes"] = rep.notes;
        out["passed"] = rep.passed;
        out["failed"] = rep.failed;
        write_output(o.out, out.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& c : rep.checks)
            os << (c.pass ? "PASS" : "FAIL") << "  " << c.name
               << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
        for (const auto& n : rep.notes) os << n << "\n";
        os << rep.passed << " passed, " << rep.failed << " failed\n";
        write_output(o.out, os.str());
    }
    return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Decides k-selfduality of equivariant projective toric embeddings "
        "given as lattice point configurations, in exact arithmetic"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOpts o;
    GenerateOpts g;
    selfdual::SearchJob job;
    int k_max = 4;
    std::string inject;
    std::vector<int> box_lengths;
    std::string filter = "selfdual";

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input)
            sub->add_option("--input,-i", o.input,
                            "input file ('-' for stdin)");
        sub->add_option("--out,-o", o.out, "output file (default stdout)");
        sub->add_option("--format,-f", o.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "decide k-selfduality of a configuration");
    add_common(classify, true);
    classify->add_option("--k,-k", o.k, "osculation order k")->required();
    classify->add_flag("--crosscheck", o.crosscheck,
                       "also run the torus-orbit dimension cross-check");
    classify->add_option("--trials", o.trials, "cross-check sample count");
    classify->add_option("--seed", o.seed, "cross-check RNG seed");

    CLI::App* hilbert = app.add_subcommand(
        "hilbert", "Hilbert function H(1..k) of the point configuration");
    add_common(hilbert, true);
    hilbert->add_option("--k-max,-k", k_max, "largest order")->required();

    CLI::App* generate =
        app.add_subcommand("generate", "emit a configuration from a family");
    add_common(generate, false);
    generate->add_option("--family", g.family, "family tag")->required();
    generate->add_option("--d", g.d, "segment degree");
    generate->add_option("--n", g.n, "dimension parameter");
    generate->add_option("--k", g.k, "order parameter");
    generate->add_option("--lengths", g.lengths, "box edge lengths")
        ->delimiter(',');
    generate->add_option("--degrees", g.degrees, "scroll degrees")
        ->delimiter(',');
    generate->add_option("--roots", g.roots, "three distinct integers")
        ->delimiter(',');
    generate->add_option("--extras", g.extras,
                         "extra points for aprime, e.g. --extras 3,3 4,2");
    generate->add_option("--cde", g.cde, "mulliken parameters c,d,e")
        ->delimiter(',');
    generate->add_option("--name", g.name, "fixture name");
    generate->add_option("--box-size", g.box_size,
                         "sampling box for random_general");
    generate->add_option("--inputs", g.inputs,
                         "component files for cayley/join");
    generate->add_option("--seed", o.seed, "RNG seed");

    CLI::App* search = app.add_subcommand(
        "search", "classify every subset of a box of lattice points");
    add_common(search, false);
    search->add_option("--box", box_lengths, "box edge lengths")
        ->delimiter(',')
        ->required();
    search->add_option("--size", job.subset_size, "subset cardinality")
        ->required();
    search->add_option("--k,-k", job.k, "osculation order")->required();
    search->add_option("--filter", filter, "all, knap, or selfdual")
        ->check(CLI::IsMember({"all", "knap", "selfdual"}));
    search->add_flag("--dedup", job.dedup,
                     "drop repeats under the box symmetries");
    search->add_option("--max-candidates", job.max_candidates,
                       "candidate budget");

    CLI::App* verify = app.add_subcommand(
        "verify-paper", "run the built-in suite of published classifications");
    add_common(verify, false);
    verify->add_option("--inject-failure", inject, "")->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(classify)) return cmd_classify(o);
        if (app.got_subcommand(hilbert)) return cmd_hilbert(o, k_max);
        if (app.got_subcommand(generate)) return cmd_generate(o, g);
        if (app.got_subcommand(search)) {
            job.box_lengths = box_lengths;
            job.filter = filter == "all" ? selfdual::SearchJob::Filter::All
                         : filter == "knap"
                             ? selfdual::SearchJob::Filter::Knap
                             : selfdual::SearchJob::Filter::Selfdual;
            return cmd_search(o, job);
        }
        if (app.got_subcommand(verify)) return cmd_verify_paper(o, inject);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
