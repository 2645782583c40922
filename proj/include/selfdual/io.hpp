#pragma once

#include "json.hpp"
#include "selfdual/classify.hpp"
#include "selfdual/dualdim.hpp"

namespace selfdual::io {

using json = nlohmann::json;

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// Text format: one point per line, space-separated integers, '#' starts a
// comment. Rejects ragged rows.
LatticeConfiguration parse_text(const std::string& text);
std::string to_text(const LatticeConfiguration& cfg);

// Structured format: {"dim": n, "points": [[...], ...], "label": "..."}.
// Integers wider than 64 bits are written as decimal strings; the parser
// accepts both. parse_json also accepts a wrapping object that carries the
// configuration under a "configuration" key, so emitted reports round-trip.
LatticeConfiguration parse_json(const json& j);
json to_json(const LatticeConfiguration& cfg);

// Sniffs the format: leading '{' means JSON, anything else text.
LatticeConfiguration parse_configuration(const std::string& text);

json int_to_json(const Int& x);
Int int_from_json(const json& j);
json vec_to_json(const IntVec& v);
json rat_vec_to_json(const RatVec& v);

json to_json(const KnapReport& rep);
json to_json(const LinePartition& part);
json to_json(const RowspanCertificate& cert);
json to_json(const DualDimReport& rep);
json to_json(const SelfdualVerdict& verdict);
json to_json(const CrosscheckReport& rep);

std::string to_text(const SelfdualVerdict& verdict);
std::string to_text(const DualDimReport& rep);

}  // namespace selfdual::io
