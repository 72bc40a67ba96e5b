#ifndef MIXEDSPEC_CLI_HPP
#define MIXEDSPEC_CLI_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mixedspec/cospectral_rules.hpp"
#include "mixedspec/errors.hpp"
#include "mixedspec/expansion_oracle.hpp"
#include "mixedspec/graph_core.hpp"
#include "mixedspec/monograph.hpp"
#include "mixedspec/phase.hpp"
#include "mixedspec/spectra.hpp"

namespace mixedspec::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kNumericalFailure = 1, kInputError = 2 };

/// Rounds to 12 significant digits so dumped JSON is stable.
/// 12 significant digits; round-off below 1e-12 prints as 0.
inline double rounded(double x) {
  if (std::abs(x) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

inline json numbers(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(rounded(v));
  return arr;
}

inline json complex_vector(const ComplexVector& v) {
  json arr = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back({rounded(v(k).real()), rounded(v(k).imag())});
  return arr;
}

inline json walk_json(const Walk& w) { return json(w.vertices); }

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline MonographKind parse_kind(int kind) {
  if (kind == 1) return MonographKind::First;
  if (kind == 2) return MonographKind::Second;
  throw InputError("--kind must be 1 or 2");
}

inline std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto token = detail::trim(item);
    int v = 0;
    if (token.empty() || !detail::parse_int(token, v)) {
      throw InputError("bad vertex list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty vertex list");
  return out;
}

/// `x: 0,1 out` or `y: 2 in`; the label before the colon is informational.
inline Attachment parse_attachment(const std::string& line) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) throw InputError("attachment '" + line + "' lacks ':'");
  std::istringstream rest(line.substr(colon + 1));
  std::string targets, direction, extra;
  if (!(rest >> targets >> direction) || (rest >> extra)) {
    throw InputError("attachment '" + line + "' must read 'label: v1,v2 out|in'");
  }
  Attachment a;
  a.targets = parse_vertex_list(targets);
  if (direction == "out") {
    a.direction = AttachDirection::AllOut;
  } else if (direction == "in") {
    a.direction = AttachDirection::AllIn;
  } else {
    throw InputError("attachment direction must be 'out' or 'in'");
  }
  return a;
}

inline std::vector<EigenPair> parse_basis(const std::string& text, int n) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("eigenbasis: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("eigenbasis must be a JSON array");
  std::vector<EigenPair> basis;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("lambda") || !item.contains("vector") || !item["vector"].is_array()) {
      throw InputError("eigenbasis entries need 'lambda' and 'vector'");
    }
    const auto& vec = item["vector"];
    if (static_cast<int>(vec.size()) != n) throw InputError("eigenbasis vector length differs from vertex count");
    EigenPair p;
    p.lambda = item["lambda"].get<double>();
    p.vector.resize(n);
    for (int k = 0; k < n; ++k) {
      const auto& entry = vec[k];
      if (entry.is_number()) {
        p.vector(k) = entry.get<double>();
      } else if (entry.is_array() && entry.size() == 2) {
        p.vector(k) = {entry[0].get<double>(), entry[1].get<double>()};
      } else {
        throw InputError("eigenbasis entries must be numbers or [re, im] pairs");
      }
    }
    basis.push_back(std::move(p));
  }
  return basis;
}

inline json cospectral_json(const CospectralReport& r) {
  return {{"alpha1", r.alpha1.spec()},
          {"alpha2", r.alpha2.spec()},
          {"cospectral", r.cospectral},
          {"max_gap", rounded(r.max_gap)},
          {"coefficient_gap", rounded(r.coefficient_gap)},
          {"structural_flags",
           {{"even_arc_condition", r.structural_flags.even_arc_condition},
            {"oriented_bipartite", r.structural_flags.oriented_bipartite},
            {"tree", r.structural_flags.tree},
            {"monograph_both", r.structural_flags.monograph_both}}}};
}

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 numerical failure,
/// 2 input error.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermitian spectra and monograph analysis of mixed graphs", "mixedspec"};
  app.require_subcommand(1);

  std::vector<std::string> alphas;
  std::string input;
  double tol = tolerance::spectra;
  int kind = 1;
  bool oracle = false;
  std::string basis_path;
  std::string region;
  std::vector<std::string> attach_lines;
  std::string attach_file;
  int order = 0;
  std::string mode = "exhaustive";
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  auto graph_command = [&](const std::string& name, const std::string& about, int alpha_count) {
    auto* sub = app.add_subcommand(name, about);
    auto* opt = sub->add_option("--alpha", alphas, "alpha: i, gamma, omega, 1, root:k/n, angle:<rad>");
    opt->required()->expected(alpha_count);
    sub->add_option("input", input, "graph file, or - for stdin")->required();
    sub->add_option("--tol", tol, "comparison tolerance");
    return sub;
  };

  auto* spectrum = graph_command("spectrum", "eigenvalues, characteristic polynomial, spectral radius", 1);
  auto* charpoly = graph_command("charpoly", "characteristic polynomial", 1);
  charpoly->add_flag("--oracle", oracle, "use the elementary-subgraph expansion");
  auto* monograph = graph_command("monograph", "decide the monograph property", 1);
  monograph->add_option("--kind", kind, "1 or 2")->check(CLI::IsMember({1, 2}));
  auto* partition = graph_command("partition", "monograph vertex partition", 1);
  partition->add_option("--kind", kind, "1 or 2")->check(CLI::IsMember({1, 2}));
  auto* transfer = graph_command("transfer", "carry eigenvectors of the underlying graph over to H^alpha", 1);
  transfer->add_option("--basis", basis_path, "JSON array of {lambda, vector}; default: computed");
  auto* extend = graph_command("extend", "attach new vertices to a monograph", 1);
  extend->add_option("--region", region, "comma-separated digon-connected vertex set")->required();
  extend->add_option("--attach", attach_lines, "'x: 0,1 out' (repeatable)");
  extend->add_option("--attachments", attach_file, "file with one attachment per line");
  auto* radius = graph_command("radius", "spectral radius versus maximum degree", 1);
  auto* cospectral = graph_command("cospectral", "compare two alpha-spectra", 2);

  auto* search = app.add_subcommand("search-cospectral", "enumerate cospectral mixed graphs on n vertices");
  search->add_option("--n", order, "vertex count")->required();
  search->add_option("--alpha", alphas, "two alpha specs")->required()->expected(2);
  search->add_option("--mode", mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  search->add_option("--count", count, "random sample size");
  auto* seed_opt = search->add_option("--seed", seed, "random seed (required for random mode)");
  search->add_option("--tol", tol, "coefficient tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    std::vector<UnitPhase> alpha;
    for (const auto& spec : alphas) alpha.push_back(make_alpha(spec));

    if (search->parsed()) {
      SearchMode search_mode = Exhaustive{};
      if (mode == "random") {
        if (seed_opt->count() == 0) throw InputError("random mode needs an explicit --seed");
        search_mode = RandomSample{count, seed};
      }
      search_cospectral(order, alpha[0], alpha[1], search_mode, [&](const CospectralHit& hit) {
        json line{{"index", hit.index}, {"graph", serialize_graph(hit.graph)}, {"report", cospectral_json(hit.report)}};
        out << line.dump() << '\n';
      }, tol);
      return kOk;
    }

    const MixedGraph g = parse_graph(read_input(input, in));
    const UnitPhase& a = alpha.front();

    if (spectrum->parsed() || charpoly->parsed()) {
      const HermitianMatrix h = build_hermitian(g, a);
      const Spectrum s = eigen_decomposition(h).spectrum;
      CharPoly p = char_poly_checked(h, s);
      json doc{{"alpha", a.spec()}, {"eigenvalues", numbers(s.eigenvalues)}};
      if (charpoly->parsed() && oracle) {
        const CharPoly expansion = char_poly_expansion(g, a);
        if (max_coefficient_gap(expansion, p) > tol) {
          throw NumericalError("expansion and trace recursion disagree beyond tolerance");
        }
        p = expansion;
      }
      doc["char_poly"] = numbers(p.coefficients);
      doc["spectral_radius"] = rounded(spectral_radius(s));
      if (charpoly->parsed()) doc["method"] = oracle ? "expansion" : "trace-recursion";
      out << doc.dump() << '\n';
      return kOk;
    }

    if (monograph->parsed()) {
      const MonographKind k = parse_kind(kind);
      const MonographCertificate cert = is_monograph(g, a, k);
      json doc{{"alpha", a.spec()}, {"kind", kind}, {"verdict", cert.verdict}};
      json potential = json::array();
      for (std::size_t v = 0; v < cert.potential.size(); ++v) {
        potential.push_back({{"vertex", v}, {"phase", cert.potential[v].to_string()}});
      }
      doc["potential"] = cert.verdict ? potential : json(nullptr);
      doc["violation"] = cert.violation ? walk_json(*cert.violation) : json(nullptr);
      if (is_connected(g)) {
        const StoreDescriptor store = compute_store(g, a, k);
        doc["store_size"] = store.size ? json(*store.size) : json("infinite");
      }
      out << doc.dump() << '\n';
      return kOk;
    }

    if (partition->parsed()) {
      const MonographPartition p = monograph_partition(g, a, parse_kind(kind));
      json classes = json::array();
      for (const auto& c : p.classes) classes.push_back({{"phase", c.key.to_string()}, {"vertices", c.vertices}});
      out << json{{"alpha", a.spec()}, {"kind", kind}, {"classes", classes}}.dump() << '\n';
      return kOk;
    }

    if (transfer->parsed()) {
      std::vector<EigenPair> basis = basis_path.empty()
                                         ? eigen_decomposition(build_hermitian(g, UnitPhase::one())).pairs
                                         : parse_basis(read_input(basis_path, in), g.order());
      json pairs = json::array();
      for (const auto& y : transfer_eigenvectors(g, a, basis)) {
        pairs.push_back({{"lambda", rounded(y.lambda)},
                         {"vector", complex_vector(y.vector)},
                         {"residual", rounded(verify_eigenpair(g, a, y))}});
      }
      out << json{{"alpha", a.spec()}, {"pairs", pairs}}.dump() << '\n';
      return kOk;
    }

    if (extend->parsed()) {
      std::vector<Attachment> attachments;
      for (const auto& line : attach_lines) attachments.push_back(parse_attachment(line));
      if (!attach_file.empty()) {
        std::istringstream lines(read_input(attach_file, in));
        std::string line;
        while (std::getline(lines, line)) {
          if (!detail::trim(line).empty()) attachments.push_back(parse_attachment(line));
        }
      }
      const MixedGraph extended = extend_monograph(g, a, parse_vertex_list(region), attachments);
      out << json{{"alpha", a.spec()},
                  {"n", extended.order()},
                  {"graph", serialize_graph(extended)},
                  {"is_monograph", is_monograph(extended, a, MonographKind::First).verdict}}
                 .dump()
          << '\n';
      return kOk;
    }

    if (radius->parsed()) {
      const RadiusAnalysis r = radius_equality_analysis(g, a);
      out << json{{"alpha", a.spec()},
                  {"rho", rounded(r.rho)},
                  {"delta", r.delta},
                  {"equal", r.equal},
                  {"regular", r.regular},
                  {"mono1", r.mono1},
                  {"mono2", r.mono2},
                  {"minus_one_excluded", r.minus_one_excluded},
                  {"theorem_consistent", r.theorem_consistent}}
                 .dump()
          << '\n';
      return kOk;
    }

    if (cospectral->parsed()) {
      out << cospectral_json(numeric_cospectral(g, alpha[0], alpha[1], tol)).dump() << '\n';
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kInputError;
}

}  // namespace mixedspec::cli

#endif  // MIXEDSPEC_CLI_HPP
