#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "weil/enumerate.hpp"
#include "weil/hodge.hpp"
#include "weil/k3.hpp"
#include "weil/lattice.hpp"
#include "weil/orbit.hpp"
#include "weil/reduction.hpp"

namespace weil {

// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Parses a document, rejecting malformed text with SchemaError.
Json parse_document(const std::string& text, const std::string& where);

// Requires j to be an object whose keys are exactly `required` plus any of
// `optional`; unknown keys are rejected.
void require_object(const Json& j, const std::vector<std::string>& required,
                    const std::vector<std::string>& optional, const std::string& where);

Rational parse_rational(const Json& j, const std::string& where);
GaussRational parse_gauss(const Json& j, const std::string& where);
Json gauss_json(const GaussRational& z);

PolarizedLattice parse_lattice(const Json& j);
QMat parse_rational_matrix(const Json& j, const std::string& where);
QVec parse_rational_vector(const Json& j, const std::string& where);
GVec parse_gauss_vector(const Json& j, const std::string& where);
IVec parse_int_vector(const Json& j, const std::string& where);

// A Hodge input is either { "weight", "pieces" } or a direct { "weil" } matrix.
WeilOperator parse_weil(const Json& j, const PolarizedLattice& l, const std::string& where);

SL2Input parse_orbit_input(const Json& j);

// Config document: { "minkowski_constants": { "2": "4/3", ... } }.
std::map<int, Rational> parse_minkowski_config(const Json& j);

Json enumeration_json(const EnumerationResult& r);
Json locus_json(const LocusComponent& c);
Json reduction_json(const ReductionReport& r);

// 2-space indentation plus trailing newline; the only dump used for output.
std::string dump_json(const Json& j);

// FNV-1a 64-bit, as 16 hex digits; used for input digests in run reports.
std::string fnv1a_hex(const std::string& bytes);

// "x=a:b:step,s=c:d:step" with rational endpoints, inclusive.
GridSpec parse_grid_flag(const std::string& text);

}  // namespace weil
