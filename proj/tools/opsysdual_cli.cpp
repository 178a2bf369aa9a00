// Command-line front end: batch analysis of tolerance relations and partial
// Hermitian matrices with machine-readable JSON output.
//
// Exit codes: 0 success, 1 negative verdict (still valid JSON), 2 malformed
// input, 3 numerical failure.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opsysdual/band.hpp"
#include "opsysdual/completion.hpp"
#include "opsysdual/extremal.hpp"
#include "opsysdual/json_io.hpp"
#include "opsysdual/structure.hpp"

namespace {

using osd::Complex;
using osd::Json;

constexpr int kExitVerdict = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNumerical = 3;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw osd::InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw osd::InvalidInput(std::string("JSON parse error in ") + path + ": " +
                            e.what());
  }
}

// Bron-Kerbosch with pivoting over bitmask vertex sets. The library only
// enumerates cliques of chordal graphs; `check` needs them for arbitrary
// patterns too, so the general (exponential) version lives here.
void bron_kerbosch(uint64_t r, uint64_t p, uint64_t x,
                   const std::vector<uint64_t>& adj,
                   std::vector<std::vector<int>>& out) {
  if (p == 0 && x == 0) {
    std::vector<int> clique;
    for (int v = 0; v < 64; ++v) {
      if (r >> v & 1) clique.push_back(v);
    }
    out.push_back(std::move(clique));
    return;
  }
  uint64_t pivot_candidates = p | x;
  int pivot = -1, best = -1;
  for (int v = 0; v < 64; ++v) {
    if (!(pivot_candidates >> v & 1)) continue;
    int deg = std::popcount(p & adj[v]);
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  uint64_t candidates = p & ~adj[pivot];
  for (int v = 0; v < 64; ++v) {
    if (!(candidates >> v & 1)) continue;
    bron_kerbosch(r | (uint64_t{1} << v), p & adj[v], x & adj[v], adj, out);
    p &= ~(uint64_t{1} << v);
    x |= uint64_t{1} << v;
  }
}

std::vector<std::vector<int>> all_maximal_cliques(
    const osd::ToleranceRelation& r) {
  const int n = r.vertex_count();
  if (n > 64) {
    throw osd::InvalidInput(
        "clique enumeration for non-chordal patterns supports n <= 64");
  }
  std::vector<uint64_t> adj(64, 0);
  for (const auto& [a, b] : r.edges()) {
    adj[a] |= uint64_t{1} << b;
    adj[b] |= uint64_t{1} << a;
  }
  std::vector<std::vector<int>> out;
  uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  bron_kerbosch(0, all, 0, adj, out);
  std::sort(out.begin(), out.end());
  return out;
}

Json int_lists_to_json(const std::vector<std::vector<int>>& lists) {
  Json out = Json::array();
  for (const auto& l : lists) out.push_back(l);
  return out;
}

int cmd_analyze(const std::string& graph_path) {
  osd::ToleranceRelation r = osd::graph_from_json(read_json_file(graph_path));
  const bool chordal = osd::is_chordal(r);

  Json j;
  j["n"] = r.vertex_count();
  j["edge_count"] = r.edge_count();
  j["chordal"] = chordal;
  if (chordal) {
    j["peo"] = osd::mcs_order(r).order;
    j["maximal_cliques"] = int_lists_to_json(osd::maximal_cliques(r));
  } else {
    j["peo"] = nullptr;
    j["maximal_cliques"] = nullptr;
  }
  j["components"] = int_lists_to_json(osd::connected_components(r));
  std::optional<int> diam = osd::diameter(r);
  j["diameter"] = diam ? Json(*diam) : Json(nullptr);
  j["is_equivalence"] = osd::is_equivalence(r);
  j["primal_envelope"] = osd::envelope_of_primal(r).block_sizes;
  j["propagation_primal"] = osd::propagation_primal(r);
  if (chordal) {
    j["dual_envelope"] = osd::envelope_of_dual(r).block_sizes;
    j["propagation_dual"] = osd::propagation_dual(r);
  } else {
    j["dual_envelope"] = nullptr;
    j["propagation_dual"] = nullptr;
    j["reason"] = "pattern is not chordal; chordal-only fields are null";
  }
  emit(j);
  return 0;
}

int cmd_check(const std::string& partial_path, double tol) {
  osd::PartialHermitianMatrix x =
      osd::partial_from_json(read_json_file(partial_path));
  const bool chordal = osd::is_chordal(x.pattern());
  const auto cliques = chordal ? osd::maximal_cliques(x.pattern())
                               : all_maximal_cliques(x.pattern());

  bool positive = true;
  std::vector<double> min_eigs;
  for (const auto& c : cliques) {
    osd::HermitianMatrix block = osd::principal_submatrix(x.values(), c);
    if (!osd::is_psd(block, tol)) positive = false;
    min_eigs.push_back(osd::eig_hermitian(block).eigenvalues.back());
  }

  Json j;
  j["n"] = x.dim();
  j["chordal"] = chordal;
  j["partially_positive"] = positive;
  if (chordal) {
    j["dual_member"] = positive;
  } else {
    j["dual_member"] = "unknown(non-chordal)";
  }
  j["cliques"] = int_lists_to_json(cliques);
  j["clique_min_eigenvalues"] = min_eigs;
  emit(j);
  return positive ? 0 : kExitVerdict;
}

int cmd_complete(const std::string& partial_path, const std::string& method,
                 std::optional<double> tol, int max_iter) {
  osd::PartialHermitianMatrix x =
      osd::partial_from_json(read_json_file(partial_path));

  Json j;
  j["method"] = method;
  if (method == "chordal") {
    try {
      osd::HermitianMatrix n =
          osd::chordal_complete(x, tol.value_or(osd::kDefaultPsdTol));
      j["feasible"] = true;
      Json m = osd::hermitian_to_json(n);
      j["n"] = m["n"];
      j["entries"] = m["entries"];
      emit(j);
      return 0;
    } catch (const osd::NotPartiallyPositive& e) {
      j["feasible"] = false;
      j["reason"] = e.what();
      emit(j);
      return kExitVerdict;
    }
  }

  j["approximate"] = true;
  osd::DykstraResult res =
      osd::dykstra_complete(x, max_iter, tol.value_or(osd::kDefaultDykstraTol));
  j["feasible"] = res.feasible;
  j["residual"] = res.residual;
  j["iterations"] = res.iterations;
  if (res.feasible) {
    Json m = osd::hermitian_to_json(res.completion);
    j["n"] = m["n"];
    j["entries"] = m["entries"];
  }
  emit(j);
  return res.feasible ? 0 : kExitVerdict;
}

int cmd_extremal(const std::optional<std::string>& partial_path,
                 const std::optional<std::string>& vector_path,
                 const std::optional<std::string>& graph_path, double tol) {
  std::optional<osd::PartialHermitianMatrix> x;
  if (partial_path) {
    x = osd::partial_from_json(read_json_file(*partial_path));
  } else {
    if (!vector_path || !graph_path) {
      throw osd::InvalidInput(
          "give either a partial-matrix file or --vector with --graph");
    }
    x = osd::extremal_from_vector(
        osd::vector_from_json(read_json_file(*vector_path)),
        osd::graph_from_json(read_json_file(*graph_path)));
  }

  Json j;
  j["n"] = x->dim();
  try {
    osd::ExtremalityReport report = osd::certify_extremal(*x, tol);
    j["in_cone"] = true;
    j["is_extremal"] = report.is_extremal;
    j["marginal"] = report.marginal;
    j["clique_ranks"] = report.clique_ranks;
    j["support"] = report.support;
    j["support_connected"] = report.support_connected;
    j["face_dimension"] = report.face_dimension;
    if (report.is_extremal && !report.marginal) {
      try {
        j["generating_vector"] =
            osd::vector_to_json(osd::recover_generating_vector(*x, tol))["v"];
      } catch (const osd::NumericalError&) {
        j["generating_vector"] = nullptr;
      }
    }
    emit(j);
    return report.is_extremal ? 0 : kExitVerdict;
  } catch (const osd::NotInCone&) {
    j["in_cone"] = false;
    emit(j);
    return kExitVerdict;
  }
}

int cmd_band(int n, int b, const std::optional<std::string>& vector_path,
             double tol) {
  osd::ToleranceRelation r = osd::band_relation(n, b);
  Json j;
  j["n"] = n;
  j["b"] = b;
  j["edge_count"] = r.edge_count();
  j["dual_envelope"] = osd::envelope_of_dual(r).block_sizes;
  j["propagation_primal"] = osd::propagation_primal(r);
  j["propagation_dual"] = osd::propagation_dual(r);
  if (!vector_path) {
    emit(j);
    return 0;
  }

  std::vector<Complex> v =
      osd::vector_from_json(read_json_file(*vector_path));
  if (static_cast<int>(v.size()) != n) {
    throw osd::DimMismatch("vector length does not match --n");
  }
  const bool fast = osd::band_vector_extremal(v, b, tol);
  const bool certified =
      osd::certify_extremal(osd::extremal_from_vector(v, r), tol).is_extremal;
  j["vector_extremal"] = fast;
  j["certified_extremal"] = certified;
  emit(j);
  return fast ? 0 : kExitVerdict;
}

int cmd_prop_span(const std::string& graph_path, bool dual) {
  osd::ToleranceRelation r = osd::graph_from_json(read_json_file(graph_path));
  std::vector<osd::HermitianMatrix> gens;
  int ambient = 0;
  if (dual) {
    gens = osd::dual_span_generators(r);
    ambient = osd::envelope_of_dual(r).algebra_dim();
  } else {
    gens = osd::pattern_space_basis(r);
    ambient = osd::envelope_of_primal(r).algebra_dim();
  }
  osd::SpanResult res = osd::span_propagation(gens, ambient);

  Json j;
  j["mode"] = dual ? "dual" : "primal";
  j["ambient_dim"] = ambient;
  j["dims"] = res.dims;
  j["reached"] = res.reached;
  j["propagation"] = res.reached ? Json(res.propagation) : Json(nullptr);
  emit(j);
  return res.reached ? 0 : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph operator system duals: membership, completion, "
               "extremality, envelopes"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  app.add_option("--seed", seed,
                 "Seed for randomized utilities (reserved; the standard "
                 "subcommands are deterministic)");

  std::string graph_path, partial_path, method = "chordal";
  std::optional<std::string> opt_partial, opt_vector, opt_graph;
  std::optional<double> tol;
  double check_tol = osd::kDefaultPsdTol;
  double extremal_tol = osd::kDefaultRankTol;
  int max_iter = osd::kDefaultDykstraMaxIter;
  int band_n = 0, band_b = 0;
  bool dual = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Chordality, cliques, envelopes and propagation numbers");
  analyze->add_option("graph", graph_path, "Graph JSON file")->required();

  CLI::App* check = app.add_subcommand(
      "check", "Partial positivity and dual-cone membership");
  check->add_option("partial", partial_path, "Partial-matrix JSON file")
      ->required();
  check->add_option("--tol", check_tol, "PSD tolerance (default 1e-9)");

  CLI::App* complete =
      app.add_subcommand("complete", "PSD completion of a partial matrix");
  complete->add_option("partial", partial_path, "Partial-matrix JSON file")
      ->required();
  complete->add_option("--method", method, "chordal (exact) or dykstra")
      ->check(CLI::IsMember({"chordal", "dykstra"}));
  complete->add_option("--tol", tol,
                       "Tolerance (default 1e-9 chordal, 1e-8 dykstra)");
  complete->add_option("--max-iter", max_iter,
                       "Dykstra iteration budget (default 10000)");

  CLI::App* extremal = app.add_subcommand(
      "extremal", "Certify an extremal ray of the dual cone");
  extremal->add_option("partial", opt_partial, "Partial-matrix JSON file");
  extremal->add_option("--vector", opt_vector, "Vector JSON file");
  extremal->add_option("--graph", opt_graph, "Graph JSON file (with --vector)");
  extremal->add_option("--tol", extremal_tol, "Rank tolerance (default 1e-8)");

  CLI::App* band =
      app.add_subcommand("band", "Band-family analysis E_{n,b}");
  band->add_option("--n", band_n, "Matrix size")->required();
  band->add_option("--b", band_b, "Bandwidth")->required();
  band->add_option("--vector", opt_vector,
                   "Vector JSON file for the extremality test");
  band->add_option("--tol", extremal_tol, "Rank tolerance (default 1e-8)");

  CLI::App* prop_span = app.add_subcommand(
      "prop-span", "Propagation number by direct span computation");
  prop_span->add_option("graph", graph_path, "Graph JSON file")->required();
  prop_span->add_flag("--dual", dual,
                      "Use the dual system inside its envelope algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    emit(Json{{"error", e.what()}});
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(graph_path);
    if (app.got_subcommand(check)) return cmd_check(partial_path, check_tol);
    if (app.got_subcommand(complete)) {
      return cmd_complete(partial_path, method, tol, max_iter);
    }
    if (app.got_subcommand(extremal)) {
      return cmd_extremal(opt_partial, opt_vector, opt_graph, extremal_tol);
    }
    if (app.got_subcommand(band)) {
      return cmd_band(band_n, band_b, opt_vector, extremal_tol);
    }
    if (app.got_subcommand(prop_span)) return cmd_prop_span(graph_path, dual);
  } catch (const osd::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    emit(Json{{"error", e.what()}});
    return kExitNumerical;
  } catch (const osd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(Json{{"error", e.what()}});
    return kExitBadInput;
  }
  return kExitBadInput;
}
