#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

#include "weil/error.hpp"
#include "weil/json_io.hpp"

namespace {

using namespace weil;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Int parse_target(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return Rational(j.get<long long>()).num();
}

OrderedBasis parse_basis(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of vectors");
  OrderedBasis basis;
  for (std::size_t k = 0; k < j.size(); ++k)
    basis.push_back(parse_rational_vector(j[k], where + "[" + std::to_string(k) + "]"));
  return basis;
}

void note_form_sign(const WeilOperator& c) {
  if (!c.even())
    std::cerr << "note: odd-weight positivity sign auto-detected as "
              << (c.form_sign() > 0 ? "+1" : "-1") << "\n";
}

struct Outcome {
  std::string payload;
  std::size_t count = 0;
};

Outcome run_enumerate(const Json& doc, const std::string& kind) {
  require_object(doc, {"kind", "lattice", "hodge", "q"}, {}, "problem");
  const PolarizedLattice l = parse_lattice(doc["lattice"]);
  const WeilOperator c = parse_weil(doc["hodge"], l, "hodge");
  note_form_sign(c);
  const Int q = parse_target(doc["q"], "q");
  EnumerationResult result;
  if (kind == "enumerate-selfdual")
    result = enumerate_selfdual(l, c, q);
  else if (kind == "enumerate-antiselfdual")
    result = enumerate_antiselfdual(l, c, q);
  else
    result = enumerate_pairs(l, c, q);
  return {dump_json(enumeration_json(result)), result.vectors.size()};
}

Outcome run_orbit(const Json& doc, const std::string& kind, const std::string& grid_flag) {
  require_object(doc, {"kind", "lattice", "N", "Y", "F", "v"}, {}, "problem");
  const SL2OrbitData data = SL2OrbitData::validate(parse_orbit_input(doc));
  for (const auto& note : data.notes()) std::cerr << "note: " << note << "\n";
  const QVec v = parse_rational_vector(doc["v"], "v");
  if (kind == "orbit-classify") {
    const LocusComponent locus = classify_locus(data, v);
    return {dump_json(locus_json(locus)), locus.tag == LocusTag::Empty ? 0u : 1u};
  }
  const GridSpec grid = grid_flag.empty() ? GridSpec::defaults() : parse_grid_flag(grid_flag);
  std::string csv = "x,s,selfdual\n";
  std::size_t hits = 0;
  for (const auto& row : scan_grid(data, v, grid)) {
    csv += row.x.str() + "," + row.s.str() + "," + (row.selfdual ? "1" : "0") + "\n";
    hits += row.selfdual ? 1 : 0;
  }
  return {csv, hits};
}

Outcome run_reduction(const Json& doc, const std::string& kind,
                      const std::map<int, Rational>& c1) {
  ReductionParams params;
  if (!c1.empty()) params.c1 = c1;
  if (kind == "check-reduced") {
    require_object(doc, {"kind", "gram", "basis", "t"}, {}, "problem");
    params.t = parse_rational(doc["t"], "t");
    const ReductionReport report =
        is_t_reduced(parse_rational_matrix(doc["gram"], "gram"), parse_basis(doc["basis"], "basis"), params);
    return {dump_json(reduction_json(report)), report.failures().size()};
  }
  require_object(doc, {"kind", "lattice", "basis", "t", "weil"}, {}, "problem");
  params.t = parse_rational(doc["t"], "t");
  const PolarizedLattice l = parse_lattice(doc["lattice"]);
  const WeilOperator c_g =
      WeilOperator::from_matrix(l, parse_rational_matrix(doc["weil"], "weil"), "siegel operator");
  note_form_sign(c_g);
  const ReductionReport report = siegel_membership(l, parse_basis(doc["basis"], "basis"), params, c_g);
  Json out;
  out["member"] = report.reduced();
  out["size_chain"] = report.size_chain;
  out["off_diagonal"] = report.off_diagonal;
  out["orthogonality_defect"] = report.orthogonality_defect;
  out["failures"] = report.failures();
  return {dump_json(out), report.failures().size()};
}

Outcome run_k3(const Json& doc) {
  require_object(doc, {"kind", "lattice", "sigma"}, {"vectors"}, "problem");
  const PolarizedLattice l = parse_lattice(doc["lattice"]);
  const K3Period period = K3Period::validate(l, parse_gauss_vector(doc["sigma"], "sigma"));
  const TranscendentalRank rank = transcendental_rank(period);
  Json out;
  out["period_point"] = true;
  out["pairing"] = period.pairing().str();
  out["transcendental_rank"] = rank.rank;
  out["label"] = rank.label;
  if (doc.contains("vectors")) {
    if (!doc["vectors"].is_array()) throw SchemaError("vectors: expected an array");
    Json members = Json::array();
    for (std::size_t k = 0; k < doc["vectors"].size(); ++k) {
      const IVec v = parse_int_vector(doc["vectors"][k], "vectors[" + std::to_string(k) + "]");
      QVec qv(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) qv[i] = Rational(static_cast<long long>(v[i]));
      members.push_back(antiselfdual_locus_contains(period, qv));
    }
    out["members"] = std::move(members);
  }
  return {dump_json(out), std::size_t(rank.rank)};
}

Outcome run_tadpole(const Json& doc) {
  require_object(doc, {"kind", "ell"}, {}, "problem");
  const Int ell = parse_target(doc["ell"], "ell");
  QMat gram(2, 2);
  gram(0, 1) = Rational(1);
  gram(1, 0) = Rational(-1);
  const PolarizedLattice l(1, gram);
  QMat c(2, 2);
  c(0, 1) = Rational(1);
  c(1, 0) = Rational(-1);
  const WeilOperator weil = WeilOperator::from_matrix(l, c, "tadpole fixture");
  note_form_sign(weil);
  const EnumerationResult result = enumerate_pairs(l, weil, ell);
  return {dump_json(enumeration_json(result)), result.vectors.size()};
}

int run(int argc, char** argv) {
  CLI::App app{"exact lattice Hodge-theory toolkit"};
  std::string input_path, output_path, grid_flag, config_path;
  int threads = 0;
  app.add_option("--input", input_path, "problem JSON file")->required();
  app.add_option("--output", output_path, "write the result payload to this file");
  app.add_option("--grid", grid_flag, "scan grid as x=a:b:step,s=c:d:step");
  app.add_option("--threads", threads, "worker thread count");
  app.add_option("--config", config_path, "config JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  const auto started = std::chrono::steady_clock::now();
  const std::string bytes = read_file(input_path);
  const Json doc = parse_document(bytes, "problem");
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw SchemaError("problem: missing string key 'kind'");
  const std::string kind = doc["kind"].get<std::string>();

  std::map<int, Rational> c1;
  if (!config_path.empty())
    c1 = parse_minkowski_config(parse_document(read_file(config_path), "config"));

  Outcome outcome;
  if (kind == "enumerate-selfdual" || kind == "enumerate-antiselfdual" ||
      kind == "enumerate-pairs")
    outcome = run_enumerate(doc, kind);
  else if (kind == "orbit-classify" || kind == "orbit-scan")
    outcome = run_orbit(doc, kind, grid_flag);
  else if (kind == "check-reduced" || kind == "siegel-member")
    outcome = run_reduction(doc, kind, c1);
  else if (kind == "k3-locus")
    outcome = run_k3(doc);
  else if (kind == "tadpole-demo")
    outcome = run_tadpole(doc);
  else
    throw SchemaError("problem: unknown kind '" + kind + "'");

  if (output_path.empty()) {
    std::cout << outcome.payload;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw SchemaError("cannot write '" + output_path + "'");
    out << outcome.payload;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "kind: " << kind << "\n"
            << "input-digest: " << fnv1a_hex(bytes) << "\n"
            << "count: " << outcome.count << "\n"
            << "wall-ms: " << elapsed.count() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
