#include "weil/json_io.hpp"

#include <algorithm>
#include <cstdint>

#include "weil/error.hpp"

namespace weil {

Json parse_document(const std::string& text, const std::string& where) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError(where + ": not valid JSON");
  return j;
}

void require_object(const Json& j, const std::vector<std::string>& required,
                    const std::vector<std::string>& optional, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  for (const auto& key : required)
    if (!j.contains(key)) throw SchemaError(where + ": missing key '" + key + "'");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end())
      throw SchemaError(where + ": unknown key '" + key + "'");
  }
}

Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw SchemaError(where + ": expected a rational as \"p/q\" or an integer");
}

GaussRational parse_gauss(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw SchemaError(where + ": expected [\"re\",\"im\"]");
  return GaussRational(parse_rational(j[0], where + "[0]"), parse_rational(j[1], where + "[1]"));
}

Json gauss_json(const GaussRational& z) { return Json::array({z.re().str(), z.im().str()}); }

PolarizedLattice parse_lattice(const Json& j) {
  const std::string where = "lattice";
  require_object(j, {"rank", "weight", "gram"}, {}, where);
  if (!j["rank"].is_number_integer() || !j["weight"].is_number_integer())
    throw SchemaError(where + ": rank and weight must be integers");
  const int n = j["rank"].get<int>();
  const int w = j["weight"].get<int>();
  if (!j["gram"].is_array() || int(j["gram"].size()) != n)
    throw SchemaError(where + ": gram must be a rank x rank integer matrix");
  QMat gram(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j["gram"][std::size_t(i)];
    if (!row.is_array() || int(row.size()) != n)
      throw SchemaError(where + ": gram must be a rank x rank integer matrix");
    for (int k = 0; k < n; ++k) {
      if (!row[std::size_t(k)].is_number_integer())
        throw SchemaError(where + ": gram entries must be integers");
      gram(i, k) = Rational(row[std::size_t(k)].get<long long>());
    }
  }
  return PolarizedLattice(w, gram);
}

QMat parse_rational_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a matrix");
  const int rows = int(j.size());
  const Json& first = j[0];
  if (!first.is_array() || first.empty()) throw SchemaError(where + ": expected a matrix");
  const int cols = int(first.size());
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[std::size_t(i)];
    if (!row.is_array() || int(row.size()) != cols)
      throw SchemaError(where + ": ragged matrix rows");
    for (int k = 0; k < cols; ++k)
      m(i, k) = parse_rational(row[std::size_t(k)],
                               where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

QVec parse_rational_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  QVec v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    v[k] = parse_rational(j[k], where + "[" + std::to_string(k) + "]");
  return v;
}

GVec parse_gauss_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  GVec v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    v[k] = parse_gauss(j[k], where + "[" + std::to_string(k) + "]");
  return v;
}

IVec parse_int_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an integer array");
  IVec v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer())
      throw SchemaError(where + "[" + std::to_string(k) + "]: expected an integer");
    v[k] = j[k].get<std::int64_t>();
  }
  return v;
}

WeilOperator parse_weil(const Json& j, const PolarizedLattice& l, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  if (j.contains("weil")) {
    require_object(j, {"weil"}, {}, where);
    return WeilOperator::from_matrix(l, parse_rational_matrix(j["weil"], where + ".weil"), where);
  }
  require_object(j, {"weight", "pieces"}, {}, where);
  if (!j["weight"].is_number_integer())
    throw SchemaError(where + ": weight must be an integer");
  if (!j["pieces"].is_array()) throw SchemaError(where + ": pieces must be an array");
  std::vector<HodgePiece> pieces;
  for (std::size_t k = 0; k < j["pieces"].size(); ++k) {
    const Json& pj = j["pieces"][k];
    const std::string pw = where + ".pieces[" + std::to_string(k) + "]";
    require_object(pj, {"p", "q", "basis"}, {}, pw);
    if (!pj["p"].is_number_integer() || !pj["q"].is_number_integer())
      throw SchemaError(pw + ": p and q must be integers");
    if (!pj["basis"].is_array()) throw SchemaError(pw + ": basis must be an array");
    HodgePiece piece{pj["p"].get<int>(), pj["q"].get<int>(), {}};
    for (std::size_t b = 0; b < pj["basis"].size(); ++b)
      piece.basis.push_back(
          parse_gauss_vector(pj["basis"][b], pw + ".basis[" + std::to_string(b) + "]"));
    pieces.push_back(std::move(piece));
  }
  return weil_operator(l, HodgeDecomposition(j["weight"].get<int>(), pieces));
}

SL2Input parse_orbit_input(const Json& j) {
  const std::string where = "orbit";
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  for (const char* key : {"lattice", "N", "Y", "F"})
    if (!j.contains(key)) throw SchemaError(where + ": missing key '" + std::string(key) + "'");
  SL2Input in{parse_lattice(j["lattice"]), parse_rational_matrix(j["N"], where + ".N"),
              parse_rational_matrix(j["Y"], where + ".Y"), {}};
  const Json& f = j["F"];
  if (!f.is_object()) throw SchemaError(where + ".F: expected an object keyed by level");
  for (const auto& item : f.items()) {
    int level = 0;
    try {
      std::size_t used = 0;
      level = std::stoi(item.key(), &used);
      if (used != item.key().size()) throw std::invalid_argument(item.key());
    } catch (const std::exception&) {
      throw SchemaError(where + ".F: key '" + item.key() + "' is not an integer level");
    }
    if (!item.value().is_array())
      throw SchemaError(where + ".F[" + item.key() + "]: expected an array of vectors");
    std::vector<GVec> basis;
    for (std::size_t b = 0; b < item.value().size(); ++b)
      basis.push_back(parse_gauss_vector(item.value()[b],
                                         where + ".F[" + item.key() + "][" + std::to_string(b) + "]"));
    in.f[level] = std::move(basis);
  }
  return in;
}

std::map<int, Rational> parse_minkowski_config(const Json& j) {
  const std::string where = "config";
  require_object(j, {"minkowski_constants"}, {}, where);
  const Json& table = j["minkowski_constants"];
  if (!table.is_object()) throw SchemaError(where + ": minkowski_constants must be an object");
  std::map<int, Rational> out;
  for (const auto& item : table.items()) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(item.key(), &used);
      if (used != item.key().size() || n <= 0) throw std::invalid_argument(item.key());
    } catch (const std::exception&) {
      throw SchemaError(where + ": dimension key '" + item.key() + "' is not a positive integer");
    }
    out[n] = parse_rational(item.value(), where + "." + item.key());
  }
  return out;
}

Json enumeration_json(const EnumerationResult& r) {
  Json out;
  switch (r.mode) {
    case EnumerationMode::SelfDual:
      out["mode"] = "selfdual";
      break;
    case EnumerationMode::AntiSelfDual:
      out["mode"] = "antiselfdual";
      break;
    case EnumerationMode::Pairs:
      out["mode"] = "pairs";
      break;
  }
  out["q"] = to_int64(r.q);
  out["count"] = r.vectors.size();
  Json vectors = Json::array();
  for (const auto& v : r.vectors) {
    Json row = Json::array();
    for (auto x : v) row.push_back(x);
    vectors.push_back(std::move(row));
  }
  out["vectors"] = std::move(vectors);
  return out;
}

Json locus_json(const LocusComponent& c) {
  Json out;
  switch (c.tag) {
    case LocusTag::FullDisk:
      out["component"] = "full_disk";
      break;
    case LocusTag::Ray:
      out["component"] = "ray";
      out["x"] = c.ray_x.str();
      break;
    case LocusTag::Empty:
      out["component"] = "empty";
      break;
  }
  return out;
}

Json reduction_json(const ReductionReport& r) {
  Json out;
  out["reduced"] = r.reduced();
  out["size_chain"] = r.size_chain;
  out["off_diagonal"] = r.off_diagonal;
  out["orthogonality_defect"] = r.orthogonality_defect;
  out["failures"] = r.failures();
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[std::size_t(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

namespace {

std::vector<Rational> grid_range(const std::string& part, const std::string& name) {
  const std::string prefix = name + "=";
  if (part.rfind(prefix, 0) != 0)
    throw SchemaError("grid: expected '" + name + "=lo:hi:step', got '" + part + "'");
  const std::string body = part.substr(prefix.size());
  const auto c1 = body.find(':');
  const auto c2 = body.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw SchemaError("grid: expected '" + name + "=lo:hi:step', got '" + part + "'");
  const Rational lo = Rational::parse(body.substr(0, c1));
  const Rational hi = Rational::parse(body.substr(c1 + 1, c2 - c1 - 1));
  const Rational step = Rational::parse(body.substr(c2 + 1));
  if (!(step > Rational(0))) throw SchemaError("grid: step must be positive in '" + part + "'");
  if (hi < lo) throw SchemaError("grid: empty range in '" + part + "'");
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

}  // namespace

GridSpec parse_grid_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw SchemaError("grid: expected 'x=a:b:step,s=c:d:step', got '" + text + "'");
  GridSpec grid;
  grid.xs = grid_range(text.substr(0, comma), "x");
  grid.ss = grid_range(text.substr(comma + 1), "s");
  return grid;
}

}  // namespace weil
