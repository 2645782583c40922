#include "selfdual/io.hpp"

#include <cctype>
#include <sstream>

namespace selfdual::io {

namespace {

bool fits_int64(const Int& x) {
    static const Int lo = Int(INT64_MIN), hi = Int(INT64_MAX);
    return x >= lo && x <= hi;
}

}  // namespace

json int_to_json(const Int& x) {
    if (fits_int64(x)) return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw parse_error("not an integer: " + j.dump());
        }
    }
    throw parse_error("expected an integer, got " + j.dump());
}

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

json rat_vec_to_json(const RatVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(to_string(x));
    return a;
}

LatticeConfiguration parse_text(const std::string& text) {
    std::vector<IntVec> points;
    std::string label;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        IntVec p;
        std::string tok;
        while (ls >> tok) {
            try {
                p.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw parse_error("line " + std::to_string(lineno) +
                                  ": not an integer: '" + tok + "'");
            }
        }
        if (p.empty()) continue;
        if (!points.empty() && p.size() != points.front().size())
            throw parse_error("line " + std::to_string(lineno) +
                              ": ragged row (" + std::to_string(p.size()) +
                              " entries, expected " +
                              std::to_string(points.front().size()) + ")");
        points.push_back(std::move(p));
    }
    if (points.empty()) throw parse_error("no points in input");
    return LatticeConfiguration::validate(std::move(points));
}

std::string to_text(const LatticeConfiguration& cfg) {
    std::ostringstream os;
    if (!cfg.label().empty()) os << "# " << cfg.label() << "\n";
    for (const IntVec& p : cfg.points()) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) os << ' ';
            os << p[j];
        }
        os << '\n';
    }
    return os.str();
}

LatticeConfiguration parse_json(const json& root) {
    const json* j = &root;
    if (j->is_object() && j->contains("configuration")) j = &(*j)["configuration"];
    if (!j->is_object() || !j->contains("points"))
        throw parse_error("expected an object with a 'points' array");
    const json& pts = (*j)["points"];
    if (!pts.is_array() || pts.empty())
        throw parse_error("'points' must be a nonempty array");
    std::vector<IntVec> points;
    for (const json& row : pts) {
        if (!row.is_array()) throw parse_error("each point must be an array");
        IntVec p;
        for (const json& x : row) p.push_back(int_from_json(x));
        if (!points.empty() && p.size() != points.front().size())
            throw parse_error("ragged point rows");
        points.push_back(std::move(p));
    }
    if (j->contains("dim")) {
        const std::size_t dim = (*j)["dim"].get<std::size_t>();
        if (dim != points.front().size())
            throw parse_error("'dim' does not match the point width");
    }
    std::string label;
    if (j->contains("label") && (*j)["label"].is_string())
        label = (*j)["label"].get<std::string>();
    return LatticeConfiguration::validate(std::move(points), std::move(label));
}

json to_json(const LatticeConfiguration& cfg) {
    json j;
    j["dim"] = cfg.ambient_dim();
    json pts = json::array();
    for (const IntVec& p : cfg.points()) pts.push_back(vec_to_json(p));
    j["points"] = std::move(pts);
    if (!cfg.label().empty()) j["label"] = cfg.label();
    return j;
}

LatticeConfiguration parse_configuration(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') {
            json j = json::parse(text, nullptr, true, true);
            return parse_json(j);
        }
        break;
    }
    return parse_text(text);
}

json to_json(const KnapReport& rep) {
    json j;
    j["is_knap"] = rep.is_knap;
    j["offending_indices"] = rep.offending_indices;
    if (rep.torus_witness) j["torus_witness"] = vec_to_json(*rep.torus_witness);
    return j;
}

json to_json(const LinePartition& part) {
    json lines = json::array();
    for (const Line& l : part.lines) {
        json jl;
        jl["direction"] = vec_to_json(l.direction);
        jl["members"] = l.members;
        jl["multipliers"] = vec_to_json(l.multipliers);
        lines.push_back(std::move(jl));
    }
    json j;
    j["r"] = part.line_count();
    j["lines"] = std::move(lines);
    return j;
}

json to_json(const RowspanCertificate& cert) {
    json j;
    j["member"] = cert.member;
    if (cert.member)
        j["coefficients"] = rat_vec_to_json(cert.coefficients);
    else
        j["witness"] = vec_to_json(cert.witness);
    return j;
}

json to_json(const DualDimReport& rep) {
    json j;
    j["expected_dim"] = rep.expected_dim;
    j["computed_dim"] = rep.computed_dim;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["degenerate_coordinates"] = rep.degenerate_coordinates;
    j["agrees_with_verdict"] = rep.agrees_with_verdict;
    json samples = json::array();
    for (const DualSample& s : rep.samples) {
        json js;
        js["lambda"] = vec_to_json(s.lambda);
        js["t"] = vec_to_json(s.t);
        samples.push_back(std::move(js));
    }
    j["samples"] = std::move(samples);
    return j;
}

json to_json(const SelfdualVerdict& v) {
    json j;
    j["k"] = v.k;
    j["selfdual"] = v.selfdual;
    j["num_points"] = v.num_points;
    j["dim"] = v.dim;
    j["jet_rank"] = v.jet_rank;
    j["d_k"] = v.d_k;
    j["c_k"] = v.c_k;
    j["knap"] = to_json(v.knap);
    json kb = json::array();
    for (const IntVec& vec : v.kernel.vectors) kb.push_back(vec_to_json(vec));
    j["kernel_basis"] = std::move(kb);
    if (!v.b_vectors.empty()) {
        json bs = json::array();
        for (const IntVec& b : v.b_vectors) bs.push_back(vec_to_json(b));
        j["b_vectors"] = std::move(bs);
    }
    if (v.partition) j["line_partition"] = to_json(*v.partition);
    if (!v.el_certificates.empty()) {
        json certs = json::array();
        for (const auto& c : v.el_certificates) certs.push_back(to_json(c));
        j["eL_certificates"] = std::move(certs);
    }
    if (v.cayley_r) j["cayley_r"] = *v.cayley_r;
    j["was_normalized"] = v.was_normalized;
    j["reason"] = v.reason;
    if (!v.diagnostics.empty()) j["diagnostics"] = v.diagnostics;
    if (v.dual_dim_check) j["dual_dim_check"] = to_json(*v.dual_dim_check);
    return j;
}

json to_json(const CrosscheckReport& rep) {
    json j;
    j["verdict"] = to_json(rep.verdict);
    j["dual_dim"] = to_json(rep.dual);
    j["agree"] = rep.agree;
    if (!rep.diagnostics.empty()) j["diagnostics"] = rep.diagnostics;
    return j;
}

std::string to_text(const SelfdualVerdict& v) {
    std::ostringstream os;
    os << "points: " << v.num_points << "  dim: " << v.dim << "  k: " << v.k
       << "\n";
    if (v.was_normalized)
        os << "note: the input was re-embedded so the points affinely "
              "generate the full lattice\n";
    os << "rank A^(" << v.k << ") = " << v.jet_rank << "  (d_k = " << v.d_k
       << ", c_k = " << v.c_k << ")\n";
    os << "knap: " << (v.knap.is_knap ? "yes" : "no");
    if (!v.knap.is_knap) {
        os << "  offending indices:";
        for (std::size_t i : v.knap.offending_indices) os << " " << i;
    }
    os << "\n";
    if (v.knap.torus_witness)
        os << "torus witness: " << to_string(*v.knap.torus_witness) << "\n";
    if (v.partition) {
        os << "lines: " << v.partition->line_count() << "\n";
        for (std::size_t li = 0; li < v.partition->lines.size(); ++li) {
            const Line& l = v.partition->lines[li];
            os << "  L" << li + 1 << ": direction " << to_string(l.direction)
               << "  members {";
            for (std::size_t i = 0; i < l.members.size(); ++i)
                os << (i ? "," : "") << l.members[i];
            os << "}  e_L "
               << (v.el_certificates[li].member ? "in rowspan" : "NOT in rowspan")
               << "\n";
        }
    }
    for (const auto& d : v.diagnostics) os << "diagnostic: " << d << "\n";
    if (v.dual_dim_check) os << to_text(*v.dual_dim_check);
    os << "verdict: "
       << (v.selfdual ? std::to_string(v.k) + "-selfdual"
                      : "not " + std::to_string(v.k) + "-selfdual")
       << "  (" << v.reason << ")\n";
    return os.str();
}

std::string to_text(const DualDimReport& rep) {
    std::ostringstream os;
    os << "dual dimension: computed " << rep.computed_dim << ", expected "
       << rep.expected_dim << " (trials " << rep.trials << ", seed " << rep.seed
       << ")";
    if (!rep.degenerate_coordinates.empty()) {
        os << "  forced-zero coordinates:";
        for (std::size_t i : rep.degenerate_coordinates) os << " " << i;
    }
    os << "\n";
    return os.str();
}

}  // namespace selfdual::io
