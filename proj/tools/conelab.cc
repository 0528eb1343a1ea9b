// Copyright 2026 The conelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// conelab: batch front end. One command per process, one JSON document out.
//
// Exit status: 0 ok, 1 property falsified, 2 input error, 3 solver failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "conelab/cone.h"
#include "conelab/errors.h"
#include "conelab/json_io.h"
#include "conelab/lattice.h"
#include "conelab/ncp.h"
#include "conelab/projection.h"
#include "conelab/properties.h"

namespace {

using conelab::Cone;
using conelab::Vector;
using conelab::json::Json;

enum ExitCode { kOk = 0, kFalsified = 1, kInputError = 2, kSolverFailure = 3 };

struct Options {
  std::string input_path;
  std::string output_path;
  std::string cone, x, y, op;
  std::string proj_cone, order_cone, set_cone;
  std::string problem;
  std::optional<long> samples;
  std::optional<std::uint64_t> seed;
  conelab::Tolerance tol;
  int workers = 1;
  bool auto_step = false;
};

class UsageError : public conelab::InvalidArgument {
 public:
  using conelab::InvalidArgument::InvalidArgument;
};

Json ParseText(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw conelab::json::SchemaError("malformed JSON in " + what + ": " +
                                     e.what());
  }
}

Json ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseText(buf.str(), path);
}

// Fields come from the flag when given, else from the --input document.
class Inputs {
 public:
  explicit Inputs(const Options& opt) {
    if (!opt.input_path.empty()) {
      doc_ = ReadFile(opt.input_path);
      if (!doc_.is_object()) {
        throw conelab::json::SchemaError("input file must hold an object");
      }
    }
  }

  const Json& document() const { return doc_; }
  bool has_document() const { return !doc_.is_null(); }

  Json Get(const std::string& flag_value, const std::string& key) const {
    if (!flag_value.empty()) return ParseText(flag_value, "--" + key);
    if (doc_.is_object()) {
      if (auto it = doc_.find(key); it != doc_.end()) return *it;
    }
    throw UsageError("missing --" + key);
  }

  std::string GetString(const std::string& flag_value,
                        const std::string& key) const {
    if (!flag_value.empty()) return flag_value;
    if (doc_.is_object()) {
      if (auto it = doc_.find(key); it != doc_.end() && it->is_string()) {
        return it->get<std::string>();
      }
    }
    throw UsageError("missing --" + key);
  }

  Cone GetCone(const std::string& flag_value, const std::string& key) const {
    return conelab::json::ConeFromJson(Get(flag_value, key));
  }

  // "same" reuses `other`.
  Cone GetOrder(const std::string& flag_value, const Cone& other) const {
    if (flag_value == "same") return other;
    if (flag_value.empty() && doc_.is_object()) {
      if (auto it = doc_.find("order-cone");
          it != doc_.end() && it->is_string() && *it == "same") {
        return other;
      }
    }
    return GetCone(flag_value, "order-cone");
  }

 private:
  Json doc_;
};

conelab::CheckConfig MakeCheckConfig(const Options& opt) {
  if (!opt.samples) throw UsageError("--samples is required");
  if (!opt.seed) throw UsageError("--seed is required");
  conelab::CheckConfig config;
  config.samples = *opt.samples;
  config.seed = *opt.seed;
  config.tol = opt.tol;
  config.workers = opt.workers;
  return config;
}

conelab::OpKind ParseOp(const std::string& name) {
  for (conelab::OpKind k : conelab::kAllOpKinds) {
    if (conelab::OpKindName(k) == name) return k;
  }
  throw UsageError("unknown --op '" + name +
                   "' (expected meet_K, join_K, meet_L or join_L)");
}

int ReportExit(const conelab::PropertyReport& r, Json* out) {
  *out = conelab::json::ReportToJson(r);
  return r.falsified() ? kFalsified : kOk;
}

int Dispatch(const std::string& command, const Options& opt, Json* out) {
  opt.tol.Validate();
  if (command == "catalog") {
    *out = conelab::json::DescriptorCatalog();
    return kOk;
  }
  const Inputs in(opt);
  if (command == "project") {
    const Cone cone = in.GetCone(opt.cone, "cone");
    const Vector x = conelab::json::VectorFromJson(in.Get(opt.x, "x"));
    *out = conelab::json::ProjectionToJson(conelab::Project(x, cone, opt.tol));
    return kOk;
  }
  if (command == "decompose") {
    const Cone cone = in.GetCone(opt.cone, "cone");
    const Vector x = conelab::json::VectorFromJson(in.Get(opt.x, "x"));
    *out = conelab::json::MoreauToJson(
        conelab::MoreauDecompose(x, cone, opt.tol));
    return kOk;
  }
  if (command == "lattice") {
    const Cone cone = in.GetCone(opt.cone, "cone");
    const conelab::OpKind kind = ParseOp(in.GetString(opt.op, "op"));
    const Vector x = conelab::json::VectorFromJson(in.Get(opt.x, "x"));
    const Vector y = conelab::json::VectorFromJson(in.Get(opt.y, "y"));
    Json j;
    j["op"] = std::string(conelab::OpKindName(kind));
    j["point"] = conelab::json::VectorToJson(
        conelab::LatticeOp(kind, x, y, cone, opt.tol));
    *out = std::move(j);
    return kOk;
  }
  if (command == "check-isotone" || command == "check-subadditive") {
    const conelab::CheckConfig config = MakeCheckConfig(opt);
    const Cone proj = in.GetCone(opt.proj_cone, "proj-cone");
    const Cone order = in.GetOrder(opt.order_cone, proj);
    return ReportExit(command == "check-isotone"
                          ? conelab::CheckIsotone(proj, order, config)
                          : conelab::CheckSubadditive(proj, order, config),
                      out);
  }
  if (command == "check-invariance") {
    const conelab::CheckConfig config = MakeCheckConfig(opt);
    const Cone set = in.GetCone(opt.set_cone, "set-cone");
    const Cone order = in.GetOrder(opt.order_cone, set);
    return ReportExit(conelab::CheckInvariance(set, order, config), out);
  }
  if (command == "check-duality") {
    const conelab::CheckConfig config = MakeCheckConfig(opt);
    return ReportExit(
        conelab::CheckDuality(in.GetCone(opt.cone, "cone"), config), out);
  }
  if (command == "solve-ncp") {
    Json doc;
    if (!opt.problem.empty()) {
      doc = ParseText(opt.problem, "--problem");
    } else if (in.has_document()) {
      doc = in.document();
    } else {
      throw UsageError("missing --problem or --input");
    }
    conelab::json::NcpInput problem = conelab::json::NcpInputFromJson(doc);
    if (opt.auto_step) {
      const auto* affine = std::get_if<conelab::AffineMap>(&problem.problem.f);
      problem.problem.step = conelab::EstimateStep(affine->M);
    }
    const conelab::NcpSolution sol = conelab::Solve(
        problem.problem, problem.x0, opt.tol.max_iter, opt.tol);
    *out = conelab::json::NcpSolutionToJson(sol, problem.problem.step);
    return sol.residuals.converged ? kOk : kSolverFailure;
  }
  throw UsageError("unknown command '" + command + "'");
}

Json ErrorDocument(const std::string& kind, const std::string& message) {
  Json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j;
}

int Emit(const Json& doc, const std::string& output_path) {
  const std::string text = doc.dump(2) + "\n";
  if (output_path.empty() || output_path == "-") {
    std::cout << text << std::flush;
    return 0;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "conelab: cannot write '" << output_path << "'\n";
    std::cout << ErrorDocument("io", "cannot write '" + output_path + "'")
                     .dump(2)
              << "\n";
    return -1;
  }
  return 0;
}

void AddCommon(CLI::App* sub, Options* opt) {
  sub->add_option("--input", opt->input_path,
                  "JSON file supplying fields not given as flags");
  sub->add_option("--output", opt->output_path, "write the report here")
      ->default_str("stdout");
  sub->add_option("--membership-tol", opt->tol.membership_tol)
      ->capture_default_str();
  sub->add_option("--solver-tol", opt->tol.solver_tol)->capture_default_str();
  sub->add_option("--max-iter", opt->tol.max_iter)->capture_default_str();
}

void AddChecks(CLI::App* sub, Options* opt) {
  sub->add_option("--samples", opt->samples, "number of random trials");
  sub->add_option("--seed", opt->seed, "base seed");
  sub->add_option("--workers", opt->workers, "evaluation threads")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric projections onto closed convex cones, their duals "
               "and order properties.",
               "conelab"};
  app.require_subcommand(1);
  Options opt;

  auto* project = app.add_subcommand("project", "project x onto a cone");
  project->add_option("--cone", opt.cone, "cone descriptor JSON");
  project->add_option("--x", opt.x, "point as JSON array");
  AddCommon(project, &opt);

  auto* decompose =
      app.add_subcommand("decompose", "split x = P_K x - P_L(-x)");
  decompose->add_option("--cone", opt.cone, "cone descriptor JSON");
  decompose->add_option("--x", opt.x, "point as JSON array");
  AddCommon(decompose, &opt);

  auto* lattice = app.add_subcommand("lattice", "one lattice-like operation");
  lattice->add_option("--cone", opt.cone, "cone descriptor JSON");
  lattice->add_option("--op", opt.op, "meet_K, join_K, meet_L or join_L");
  lattice->add_option("--x", opt.x, "first point");
  lattice->add_option("--y", opt.y, "second point");
  AddCommon(lattice, &opt);

  for (const char* name : {"check-isotone", "check-subadditive"}) {
    auto* sub = app.add_subcommand(name, std::string("randomized ") +
                                             (name + 6) + " falsifier");
    sub->add_option("--proj-cone", opt.proj_cone, "cone being projected on");
    sub->add_option("--order-cone", opt.order_cone,
                    "cone inducing the order, or 'same'");
    AddChecks(sub, &opt);
    AddCommon(sub, &opt);
  }

  auto* invariance = app.add_subcommand(
      "check-invariance", "closure of a set under the lattice-like operations");
  invariance->add_option("--set-cone", opt.set_cone, "the candidate set");
  invariance->add_option("--order-cone", opt.order_cone,
                         "cone inducing the operations, or 'same'");
  AddChecks(invariance, &opt);
  AddCommon(invariance, &opt);

  auto* duality = app.add_subcommand(
      "check-duality", "isotone on K versus subadditive on the dual");
  duality->add_option("--cone", opt.cone, "cone descriptor JSON");
  AddChecks(duality, &opt);
  AddCommon(duality, &opt);

  auto* ncp = app.add_subcommand("solve-ncp",
                                 "projected fixed-point complementarity solve");
  ncp->add_option("--problem", opt.problem, "problem JSON");
  ncp->add_flag("--auto-step", opt.auto_step,
                "use step 1/lambda_max of the affine matrix");
  AddCommon(ncp, &opt);

  auto* catalog =
      app.add_subcommand("catalog", "list cone descriptor schemas");
  catalog->add_option("--output", opt.output_path, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "conelab: " << e.what() << "\n";
    std::cout << ErrorDocument("usage", e.what()).dump(2) << "\n";
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Json out;
  int code = kOk;
  try {
    code = Dispatch(command, opt, &out);
  } catch (const conelab::json::SchemaError& e) {
    out = ErrorDocument("schema", e.what());
    code = kInputError;
  } catch (const UsageError& e) {
    out = ErrorDocument("usage", e.what());
    code = kInputError;
  } catch (const conelab::DimensionMismatch& e) {
    out = ErrorDocument("dimension_mismatch", e.what());
    code = kInputError;
  } catch (const conelab::InvalidArgument& e) {
    out = ErrorDocument("invalid_argument", e.what());
    code = kInputError;
  } catch (const conelab::NonConvergence& e) {
    out = ErrorDocument("non_convergence", e.what());
    code = kSolverFailure;
  } catch (const conelab::ConsistencyFailure& e) {
    out = ErrorDocument("consistency_failure", e.what());
    code = kSolverFailure;
  } catch (const conelab::NumericalBlowup& e) {
    out = ErrorDocument("numerical_blowup", e.what());
    code = kSolverFailure;
  }
  if (out.contains("error")) {
    std::cerr << "conelab: " << out["error"]["message"].get<std::string>()
              << "\n";
  }
  if (Emit(out, opt.output_path) != 0) return kInputError;
  return code;
}
