#ifndef TRIGONAL_JSON_IO_HPP
#define TRIGONAL_JSON_IO_HPP

#include <json.hpp>

#include "trigonal/cover.hpp"
#include "trigonal/crimps.hpp"
#include "trigonal/families.hpp"
#include "trigonal/models.hpp"
#include "trigonal/picard.hpp"

namespace trig {

// Ordered maps keep the emitted key order stable, so identical inputs
// produce byte-identical output.
using Json = nlohmann::ordered_json;

// Rationals travel as "p" or "p/q" strings, never as floats.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json qvec_to_json(const QVec& v);
QVec qvec_from_json(const Json& j);

// Schema: {"m", "n", "a", "b", "c", "d"} with ascending coefficient lists.
Json cover_to_json(const MirandaCover& cover);
MirandaCover cover_from_json(const Json& j);

// Schema: {"ram": "etale"|"total"|"simple", "truncation", "gens":
// [[coeffs per ambient coordinate]]}.  A positive trunc_override replaces
// the stored truncation (jets are padded or cut to it).
Json crimp_to_json(const CrimpGens& c);
CrimpGens crimp_from_json(const Json& j, int trunc_override = 0);

// Schema: {"m", "n", "t_trunc", "e": [[jet coeffs]]}.
Json family_to_json(const ExtensionFamily& f);
ExtensionFamily family_from_json(const Json& j);

// Schema: {"g", "a", "b", "c", "d"} with d starting at index 2.
Json wpoint_to_json(const WPoint& w);
WPoint wpoint_from_json(const Json& j);

Json stratum_to_json(const CrimpStratum& s);

Json fan_to_json(const ChamberFan& fan);
// CSV columns: l, ray_u, ray_v, lambda_ratio, label.
std::string fan_to_csv(const ChamberFan& fan);

Json trace_to_json(const ReductionTrace& trace);

Json line_to_json(const TracelessLine& line);
Json coarse_to_json(const CoarsePoint& pt);

} // namespace trig

#endif
