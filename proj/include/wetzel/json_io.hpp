#pragma once

#include <json.hpp>

#include "wetzel/analysis.hpp"
#include "wetzel/hf.hpp"
#include "wetzel/newton.hpp"
#include "wetzel/ordinal.hpp"

namespace wetzel {

// Insertion-ordered JSON keeps serialization byte-deterministic.
using Json = nlohmann::ordered_json;

// Wire formats. Integers travel as decimal strings to avoid width limits:
//   Rat         {"num": "-3", "den": "7"}
//   QC          {"re": Rat, "im": Rat}
//   HFSet       nested arrays, canonical order: {0, {0}} -> [[], [[]]]
//   OrdCNF      [{"exp": OrdCNF, "coef": "2"}, ...], strictly decreasing
//   Poly        array of QC, coefficient of z^k at index k, trailing nonzero
//   NewtonSeries {"points": [QC...], "coeffs": [QC...]}
//
// Decoders are strict: unknown keys, missing keys, wrong types,
// non-canonical rationals and non-normal CNF are rejected with ParseError,
// never silently normalized.

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json qc_to_json(const QC& z);
QC qc_from_json(const Json& j);

Json qc_list_to_json(std::span<const QC> zs);
std::vector<QC> qc_list_from_json(const Json& j);

Json hfset_to_json(const HFSet& s);
HFSet hfset_from_json(const Json& j);  // element order is canonicalized

Json ordcnf_to_json(const OrdCNF& a);
OrdCNF ordcnf_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json series_to_json(const NewtonSeries& s);
NewtonSeries series_from_json(const Json& j);

// Strict-decoding helpers shared by the artifact codecs.
const Json& require_key(const Json& j, const char* key);
void require_exact_keys(const Json& j, std::initializer_list<const char*> keys);
std::string require_string(const Json& j, const char* what);
std::uint64_t require_uint(const Json& j, const char* what);
bool require_bool(const Json& j, const char* what);
const Json& require_array(const Json& j, const char* what);

}  // namespace wetzel
