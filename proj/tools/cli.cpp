#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ultra/amalgam.hpp"
#include "ultra/dendrogram.hpp"
#include "ultra/error.hpp"
#include "ultra/gallery.hpp"
#include "ultra/hyperspace.hpp"
#include "ultra/json_io.hpp"
#include "ultra/space.hpp"
#include "ultra/ugh.hpp"

namespace ultra::cli {

namespace {

using json_io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output;
  bool merge_duplicates = false;

  std::string input;
  std::vector<std::string> inputs;
  std::string t;
  std::string a;
  std::string b;
  std::string eps;
  std::string s;
  std::string k;
  std::string certificate;
  bool oracle = false;
  bool emit_dendrogram = false;
  int jobs = 1;

  std::string c;
  std::string base;
  std::string space;
  int n = 0;
  int depth = 0;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, {path}, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json(const std::string& path) { return json_io::parse(read_file(path), path); }

UltrametricSpace read_space(const std::string& path, const Options& opt) {
  const json j = read_json(path);
  if (json_io::is_dendrogram(j)) return from_dendrogram(json_io::dendrogram_from_json(j));
  return json_io::space_from_json(j, opt.merge_duplicates);
}

// Flag values that fail to parse are usage errors, not domain errors.
Rational flag_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

// Inline comma list, inline JSON array, or @file holding a JSON array.
std::vector<std::string> flag_labels(const std::string& text, const char* flag) {
  if (text.starts_with("@")) return json_io::labels_from_json(read_json(text.substr(1)));
  if (text.starts_with("[")) {
    try {
      return json_io::labels_from_json(json_io::parse(text, flag));
    } catch (const Error& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
  }
  if (text.empty()) return {};
  return split_commas(text);
}

SpectrumConstraint flag_constraint(const std::string& text) {
  std::vector<Rational> values;
  if (text.starts_with("[")) {
    json j;
    try {
      j = json_io::parse(text, "--k");
    } catch (const Error& e) {
      throw UsageError(std::string("--k: ") + e.what());
    }
    if (!j.is_array()) throw UsageError("--k: expected an array");
    for (const auto& v : j) {
      try {
        values.push_back(json_io::rational_from_json(v));
      } catch (const Error& e) {
        throw UsageError(std::string("--k: ") + e.what());
      }
    }
  } else {
    for (const auto& item : split_commas(text)) values.push_back(flag_rational(item, "--k"));
  }
  return SpectrumConstraint(std::move(values));
}

json labels_json(const UltrametricSpace& s, const Subset& subset) {
  json out = json::array();
  for (std::size_t i : subset) out.push_back(s.label(i));
  return out;
}

void emit(const json& j, const Options& opt, std::ostream& out) {
  const std::string bytes = json_io::dump(j);
  if (opt.output.empty()) {
    out << bytes;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, {opt.output}, "cannot write file");
  file << bytes;
}

json ugh_json(const UghResult& r) {
  return json{{"scale_witness", r.scale_witness.str()}, {"value", r.value.str()}};
}

json run_ugh_pair(const Options& opt) {
  const UltrametricSpace x = read_space(opt.inputs[0], opt);
  const UltrametricSpace y = read_space(opt.inputs[1], opt);
  const UghResult result = ugh_distance(x, y);
  if (opt.oracle) {
    const Rational expected = ugh_oracle(x, y);
    if (expected != result.value) {
      throw OracleMismatch("quotient scan gave " + result.value.str() + ", oracle gave " + expected.str());
    }
  }
  if (!opt.certificate.empty()) {
    const Certificate cert = certificate(x, y, result);
    if (auto problem = verify_certificate(x, y, cert)) throw OracleMismatch("certificate rejected: " + *problem);
    std::ofstream file(opt.certificate, std::ios::binary);
    if (!file) throw Error(ErrorKind::ParseError, {opt.certificate}, "cannot write file");
    file << json_io::dump(json_io::to_json(cert));
  }
  return ugh_json(result);
}

// Pairwise matrix over three or more spaces; rows follow argument order.
json run_ugh_matrix(const Options& opt) {
  std::vector<UltrametricSpace> spaces;
  for (const auto& path : opt.inputs) spaces.push_back(read_space(path, opt));
  const std::size_t n = spaces.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::optional<Rational>> values(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t p = next++; p < pairs.size(); p = next++) {
      values[p] = ugh_distance(spaces[pairs[p].first], spaces[pairs[p].second]).value;
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::jthread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<std::vector<std::string>> matrix(n, std::vector<std::string>(n, "0"));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    matrix[pairs[p].first][pairs[p].second] = values[p]->str();
    matrix[pairs[p].second][pairs[p].first] = values[p]->str();
  }
  return json{{"spaces", opt.inputs}, {"ugh", matrix}};
}

int dispatch(CLI::App& app, const Options& opt, std::ostream& out) {
  auto* gen = app.get_subcommand("gen");
  if (app.got_subcommand("validate")) {
    const UltrametricSpace s = read_space(opt.input, opt);
    emit(opt.emit_dendrogram ? json_io::to_json(to_dendrogram(s)) : json_io::to_json(s), opt, out);
  } else if (app.got_subcommand("spectrum")) {
    emit(json{{"spectrum", json_io::to_json(spectrum(read_space(opt.input, opt)))}}, opt, out);
  } else if (app.got_subcommand("quotient")) {
    const Rational t = flag_rational(opt.t, "--t");
    const QuotientSpace q = closed_quotient(read_space(opt.input, opt), t);
    json blocks = json::array();
    for (const auto& block : q.blocks) blocks.push_back(labels_json(q.source, block));
    emit(json{{"blocks", blocks}, {"quotient", json_io::to_json(q.quotient)}, {"scale", q.scale.str()}}, opt, out);
  } else if (app.got_subcommand("hausdorff")) {
    const UltrametricSpace s = read_space(opt.input, opt);
    const auto a = subset_of(s, flag_labels(opt.a, "--a"));
    const auto b = subset_of(s, flag_labels(opt.b, "--b"));
    emit(json{{"value", hausdorff_distance(s, a, b).str()}}, opt, out);
  } else if (app.got_subcommand("net")) {
    const Rational eps = flag_rational(opt.eps, "--eps");
    const UltrametricSpace s = read_space(opt.input, opt);
    emit(json{{"net", labels_json(s, epsilon_net(s, eps))}}, opt, out);
  } else if (app.got_subcommand("glue")) {
    const json spec = read_json(opt.input);
    const UltrametricSpace glued = spec.contains("spaces") ? chain_glue(json_io::chain_spec_from_json(spec))
                                                           : glue(json_io::glue_spec_from_json(spec));
    emit(json_io::to_json(glued), opt, out);
  } else if (app.got_subcommand("amalgam")) {
    const Rational s = flag_rational(opt.s, "--s");
    emit(json_io::to_json(disjoint_amalgam(read_space(opt.inputs[0], opt), read_space(opt.inputs[1], opt), s)), opt,
         out);
  } else if (app.got_subcommand("ugh")) {
    if (opt.inputs.size() > 2 && (opt.oracle || !opt.certificate.empty())) {
      throw UsageError("--oracle and --certificate take exactly two spaces");
    }
    emit(opt.inputs.size() == 2 ? run_ugh_pair(opt) : run_ugh_matrix(opt), opt, out);
  } else if (app.got_subcommand("cluster")) {
    json_io::RawSpace raw = json_io::raw_space_from_json(read_json(opt.input));
    emit(json_io::to_json(single_linkage(std::move(raw.labels), raw.dist)), opt, out);
  } else if (app.got_subcommand("in-uk")) {
    const MembershipResult r = in_uk(read_space(opt.input, opt), flag_constraint(opt.k));
    json result{{"member", r.member}};
    if (r.witness) {
      result["witness"] = json{{"points", {r.witness->first, r.witness->second}},
                               {"value", r.offending_value->str()}};
    }
    emit(result, opt, out);
  } else if (gen->got_subcommand("two-point")) {
    emit(json_io::to_json(two_point_space(flag_rational(opt.c, "--c"))), opt, out);
  } else if (gen->got_subcommand("crowd")) {
    const Rational c = flag_rational(opt.c, "--c");
    emit(json_io::to_json(crowd_family(read_space(opt.space, opt), opt.base, c, opt.n)), opt, out);
  } else if (gen->got_subcommand("cauchy")) {
    emit(json_io::to_json(cauchy_sequence(opt.depth)), opt, out);
  } else if (gen->got_subcommand("random")) {
    emit(json_io::to_json(random_space(opt.n, flag_constraint(opt.k), opt.seed)), opt, out);
  }
  return kOk;
}

void build(CLI::App& app, Options& opt) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", opt.output, "Write the result to this file instead of stdout");
  app.add_flag("--merge-duplicates", opt.merge_duplicates,
               "Collapse points at distance 0 instead of rejecting the space");

  auto* validate = app.add_subcommand("validate", "Check a space (or dendrogram) and print its canonical form");
  validate->add_option("space", opt.input, "Space or dendrogram JSON")->required();
  validate->add_flag("--emit-dendrogram", opt.emit_dendrogram, "Print the canonical dendrogram instead");

  auto* spec = app.add_subcommand("spectrum", "Distinct distance values");
  spec->add_option("space", opt.input)->required();

  auto* quotient = app.add_subcommand("quotient", "Closed-ball quotient at scale t");
  quotient->add_option("space", opt.input)->required();
  quotient->add_option("--t", opt.t, "Scale (rational)")->required();

  auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff distance between two subsets");
  hausdorff->add_option("space", opt.input)->required();
  hausdorff->add_option("--a", opt.a, "Labels: a,b,c or [\"a\"] or @file.json")->required();
  hausdorff->add_option("--b", opt.b, "Labels: a,b,c or [\"a\"] or @file.json")->required();

  auto* net = app.add_subcommand("net", "Greedy epsilon-net");
  net->add_option("space", opt.input)->required();
  net->add_option("--eps", opt.eps, "Radius (rational)")->required();

  auto* glue_cmd = app.add_subcommand("glue", "Amalgamate along a common subspace (GlueSpec or chain)");
  glue_cmd->add_option("gluespec", opt.input)->required();

  auto* amalgam = app.add_subcommand("amalgam", "Disjoint amalgam with constant cross distance");
  amalgam->add_option("spaces", opt.inputs)->required()->expected(2);
  amalgam->add_option("--s", opt.s, "Cross distance (rational)")->required();

  auto* ugh = app.add_subcommand("ugh", "Gromov-Hausdorff ultrametric (pairwise matrix for 3+ spaces)");
  ugh->add_option("spaces", opt.inputs)->required()->expected(2, 1 << 20);
  ugh->add_option("--certificate", opt.certificate, "Write a verified certificate to this file");
  ugh->add_flag("--oracle", opt.oracle, "Cross-check against the exhaustive oracle");
  ugh->add_option("--jobs", opt.jobs, "Worker threads for pairwise matrices")->check(CLI::PositiveNumber);

  auto* cluster = app.add_subcommand("cluster", "Single-linkage ultrametric of a metric");
  cluster->add_option("--input", opt.input, "Metric JSON in the space format")->required();

  auto* in_uk_cmd = app.add_subcommand("in-uk", "Check that all distances lie in K");
  in_uk_cmd->add_option("space", opt.input)->required();
  in_uk_cmd->add_option("--k", opt.k, "Allowed values, e.g. 0,1/4,1/2")->required();

  auto* gen = app.add_subcommand("gen", "Generate a space");
  gen->require_subcommand(1);
  auto* two = gen->add_subcommand("two-point", "Two points at distance c");
  two->add_option("--c", opt.c)->required();
  auto* crowd = gen->add_subcommand("crowd", "Space plus n fresh points at scale c near a base point");
  crowd->add_option("--space", opt.space)->required();
  crowd->add_option("--base", opt.base)->required();
  crowd->add_option("--c", opt.c)->required();
  crowd->add_option("--n", opt.n)->required();
  auto* cauchy = gen->add_subcommand("cauchy", "Points 1, 1/2, ..., 2^-depth with d = max");
  cauchy->add_option("--depth", opt.depth)->required();
  auto* random = gen->add_subcommand("random", "Seeded random space with spectrum in K");
  random->add_option("--n", opt.n)->required();
  random->add_option("--k", opt.k)->required();
  random->add_option("--seed", opt.seed)->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Exact toolkit for finite ultrametric spaces", "ultra"};
  Options opt;
  build(app, opt);

  const std::string error_tag = color ? "\033[31merror:\033[0m " : "error: ";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << error_tag << e.what() << "\n";
    return kUsageError;
  }

  try {
    return dispatch(app, opt, out);
  } catch (const UsageError& e) {
    err << error_tag << e.what() << "\n";
    return kUsageError;
  } catch (const OracleMismatch& e) {
    err << error_tag << e.what() << "\n";
    return kOracleMismatch;
  } catch (const Error& e) {
    err << error_tag << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace ultra::cli
