// Copyright 2026 The tdbound Authors.
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


#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "tdbound/bounds/bounds.hpp"
#include "tdbound/montecarlo/estimate.hpp"
#include "tdbound/repcore/indicator.hpp"
#include "tdbound/repcore/lambda_set.hpp"
#include "tdbound/repcore/multiplicity.hpp"
#include "tdbound/solver/solver.hpp"
#include "tdbound/util/parallel.hpp"

namespace tdb::cli {
namespace {

std::string big(const rep::BigInt& v) { return v.str(); }

std::string rational(const rep::Rational& v) {
  return boost::multiprecision::denominator(v) == 1
             ? boost::multiprecision::numerator(v).str()
             : v.str();
}

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell(Null{});
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void check_d_t(int d, int t) {
  require(d >= 2, "--d must be >= 2");
  require(t >= 1, "--t must be >= 1");
}

void check_delta_prob(double delta, double prob) {
  require(delta > 0.0 && delta < 1.0, "--delta must lie in (0, 1)");
  require(prob > 0.0 && prob < 1.0, "--prob must lie in (0, 1)");
}

BoundMethod method_arg(const std::string& name) {
  try {
    return parse_bound_method(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

GateSetKind kind_arg(const std::string& name) {
  try {
    return parse_gate_set_kind(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

rep::HighestWeight lambda_arg(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](char c) { return c == '(' || c == ')' ||
                                                c == ' '; }),
             body.end());
  try {
    return rep::HighestWeight(parse_int_list(body));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
}

// Default Table 2 grid, in the order the rows are printed.
std::vector<std::pair<int, std::vector<int>>> table2_grid() {
  return {{2, {2, 3, 4, 5, 20, 500, 5000}},
          {4, {2, 3, 4, 5, 20}},
          {8, {2, 3, 4, 5}},
          {16, {2, 3, 4, 5}},
          {32, {2, 3, 4, 5}},
          {64, {2, 3, 4, 5}}};
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size())
      throw UsageError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  auto to_double = [](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty())
      throw UsageError("not a number: '" + s + "'");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::stringstream in(text);
    std::string a, b, n;
    std::getline(in, a, ':');
    std::getline(in, b, ':');
    std::getline(in, n);
    const double lo = to_double(a);
    const double hi = to_double(b);
    const int count = static_cast<int>(to_double(n));
    if (count < 1) throw UsageError("grid needs at least one point");
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
      out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return out;
  }
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(to_double(item));
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

Table lambda_set_table(const LambdaSetArgs& args) {
  check_d_t(args.d, args.t);
  const rep::RepConfig config;
  const auto labels = rep::enumerate_lambda_set(args.d, args.t);
  std::vector<std::vector<Cell>> rows(labels.size());
  parallel_for(labels.size(), [&](std::size_t i) {
    const auto& lambda = labels[i];
    const bool exact = args.d <= config.max_weyl_rank;
    Cell m0 = Null{};
    std::string fs;
    if (exact) {
      m0 = big(rep::zero_weight_multiplicity(lambda, config));
      fs = rational(rep::fs_indicator(lambda, 2, config));
    } else {
      fs = rational(rep::fs_indicator_two_by_duality(lambda));
    }
    rows[i] = {static_cast<std::int64_t>(i), lambda.to_string(),
               static_cast<std::int64_t>(lambda.norm1()),
               big(rep::weyl_dimension(lambda)), m0, fs,
               std::string(exact ? "weyl-sum" : "duality")};
  });
  Table table({"index", "lambda", "norm1", "dim", "zero_weight_multiplicity",
               "fs_indicator_2", "fs_source"});
  for (auto& row : rows) table.add_row(std::move(row));
  return table;
}

Table bounds_curve_table(const CurveArgs& args) {
  check_d_t(args.d, args.t);
  require(args.size >= 1, "--size must be >= 1");
  require(!args.symmetric_size || (*args.symmetric_size >= 2 &&
                                   *args.symmetric_size % 2 == 0),
          "--symmetric-size must be even and >= 2");
  require(args.kind == "all" || args.kind == "plain" ||
              args.kind == "symmetric",
          "--kind must be plain, symmetric or all");
  std::vector<BoundMethod> methods;
  if (args.methods.empty()) {
    for (BoundMethod m : kAllMethods) {
      const auto k = kind_of(m);
      if (args.kind == "all" || (args.kind == "plain") ==
                                    (k == GateSetKind::Plain))
        methods.push_back(m);
    }
  } else {
    for (const auto& name : split_list(args.methods))
      methods.push_back(method_arg(name));
  }
  require(!methods.empty(), "no bound methods selected");
  const auto deltas = parse_grid(args.delta_grid);
  for (double delta : deltas)
    require(delta > 0.0 && delta < 1.0, "delta grid must lie in (0, 1)");

  const long sym_size = args.symmetric_size.value_or(2 * args.size);
  std::vector<std::string> columns = {"delta"};
  for (BoundMethod m : methods) columns.emplace_back(to_string(m));
  Table table(columns);

  std::vector<std::vector<double>> values(methods.size());
  for (std::size_t j = 0; j < methods.size(); ++j) {
    const TotalBound total(args.d, args.t, methods[j]);
    const long size =
        kind_of(methods[j]) == GateSetKind::Symmetric ? sym_size : args.size;
    values[j].resize(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i)
      values[j][i] = total.at(size, deltas[i]).raw();
  }
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    std::vector<Cell> row = {deltas[i]};
    for (std::size_t j = 0; j < methods.size(); ++j)
      row.emplace_back(values[j][i]);
    table.add_row(std::move(row));
  }
  return table;
}

Table min_size_table(const MinSizeArgs& args) {
  check_d_t(args.d, args.t);
  check_delta_prob(args.delta, args.prob);
  const BoundMethod method = method_arg(args.method);
  require(!args.closed_form || method == BoundMethod::MasterPlain,
          "--closed-form applies only to master-plain");
  const MinSizeResult r =
      args.closed_form
          ? min_size_closed_form(args.d, args.t, args.delta, args.prob)
          : min_size_search(args.d, args.t, args.delta, args.prob, method);
  Table table({"d", "t", "delta", "prob", "method", "size", "reported_size",
               "log_bound", "log_bound_before"});
  table.add_row({static_cast<std::int64_t>(r.d), static_cast<std::int64_t>(r.t),
                 r.delta, r.prob, std::string(to_string(r.method)),
                 static_cast<std::int64_t>(r.size),
                 static_cast<std::int64_t>(r.reported_size()), r.log_bound,
                 optional_cell(r.log_bound_before)});
  return table;
}

Table table_table(const TableArgs& args) {
  check_delta_prob(args.delta, args.prob);
  std::vector<std::pair<int, std::vector<int>>> grid;
  if (args.table2) {
    require(args.ds.empty() && args.ts.empty(),
            "--table2 fixes the grid; drop --d/--t");
    grid = table2_grid();
  } else {
    require(!args.ds.empty() && !args.ts.empty(),
            "give --table2 or both --d and --t lists");
    const auto ts = parse_int_list(args.ts);
    for (int d : parse_int_list(args.ds)) grid.emplace_back(d, ts);
  }
  std::vector<BoundMethod> methods;
  for (const auto& name : split_list(args.methods))
    methods.push_back(method_arg(name));
  require(!methods.empty(), "--methods is empty");

  struct CellSpec {
    int d;
    int t;
    BoundMethod method;
  };
  std::vector<CellSpec> cells;
  for (const auto& [d, ts] : grid)
    for (BoundMethod m : methods)
      for (int t : ts) {
        check_d_t(d, t);
        cells.push_back({d, t, m});
      }

  const rep::RepConfig config;
  std::vector<std::vector<Cell>> rows(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    const auto& c = cells[i];
    std::vector<Cell> row = {static_cast<std::int64_t>(c.d),
                             static_cast<std::int64_t>(c.t),
                             std::string(to_string(c.method)), args.delta,
                             args.prob};
    if (required_level(c.method) == IrrepProfile::Level::Full &&
        c.d > config.max_weyl_rank) {
      row.insert(row.end(), {Null{}, Null{}, Null{}, Null{},
                             std::string("beyond-weyl-cap")});
    } else {
      const auto r =
          min_size_search(c.d, c.t, args.delta, args.prob, c.method, config);
      row.insert(row.end(), {static_cast<std::int64_t>(r.size),
                             static_cast<std::int64_t>(r.reported_size()),
                             r.log_bound, optional_cell(r.log_bound_before),
                             std::string("ok")});
    }
    rows[i] = std::move(row);
  });
  Table table({"d", "t", "method", "delta", "prob", "size", "reported_size",
               "log_bound", "log_bound_before", "status"});
  for (auto& row : rows) table.add_row(std::move(row));
  return table;
}

Table clifford_table(const CliffordArgs& args) {
  require(args.max_qubits >= 1 && args.max_qubits <= 50,
          "--max-qubits must lie in [1, 50]");
  Table table({"qubits", "cardinality", "rounded_size", "exact_size",
               "log10_ratio", "log10_ratio_exact"});
  for (int n = 1; n <= args.max_qubits; ++n) {
    const auto r = clifford_ratio(n);
    table.add_row({static_cast<std::int64_t>(n), big(r.cardinality),
                   static_cast<std::int64_t>(r.rounded_size),
                   static_cast<std::int64_t>(r.exact_size), r.log10_ratio,
                   r.log10_ratio_exact});
  }
  return table;
}

Table mc_verify_table(const McVerifyArgs& args) {
  check_d_t(args.d, args.t);
  const GateSetKind kind = kind_arg(args.kind);
  require(kind != GateSetKind::BeamsplitterLifted,
          "no union bound applies to beamsplitter sets; use plain or "
          "symmetric");
  try {
    validate_size(kind, args.size);
    mc::moment_dimension(args.d, args.t);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  require(args.delta >= 0.0 && args.delta < 1.0, "--delta must lie in [0, 1)");
  require(args.trials >= 1, "--trials must be >= 1");

  const auto tail = mc::empirical_tail(args.d, args.t, kind, args.size,
                                       args.delta, args.trials, args.seed);
  if (!args.trace.empty()) {
    std::ofstream trace(args.trace, std::ios::binary);
    if (!trace) throw std::runtime_error("cannot open " + args.trace);
    for (const auto& rec : tail.trials) {
      nlohmann::ordered_json line;
      line["trial"] = rec.index;
      line["seed"] = rec.seed;
      line["delta"] = rec.delta;
      line["iterations"] = rec.iterations;
      trace << line.dump() << '\n';
    }
  }

  Table table({"d", "t", "kind", "size", "delta", "trials", "seed", "method",
               "bound_raw", "bound_clipped", "tail_fraction", "tail_stderr",
               "mean_delta", "verdict"});
  for (BoundMethod m : kAllMethods) {
    if (kind_of(m) != kind) continue;
    const auto r = TotalBound(args.d, args.t, m).at(args.size, args.delta);
    const bool pass =
        tail.fraction <= r.probability() + 3.0 * tail.stderr_fraction;
    table.add_row({static_cast<std::int64_t>(args.d),
                   static_cast<std::int64_t>(args.t), args.kind,
                   static_cast<std::int64_t>(args.size), args.delta,
                   static_cast<std::int64_t>(args.trials),
                   std::to_string(args.seed), std::string(to_string(m)),
                   r.raw(), r.probability(), tail.fraction,
                   tail.stderr_fraction, tail.mean_delta,
                   std::string(pass ? "PASS" : "FAIL")});
  }
  return table;
}

Table objective_table(const ObjectiveArgs& args) {
  const auto lambda = lambda_arg(args.lambda);
  require(!lambda.is_zero() && lambda.sum() == 0,
          "--lambda must be a nonzero zero-sum weight");
  require(args.size >= 2 && args.size % 2 == 0, "--size must be even, >= 2");
  require(args.delta > 0.0 && args.delta < 1.0, "--delta must lie in (0, 1)");
  const auto thetas = parse_grid(args.theta_grid);
  for (double th : thetas) require(th > 0.0, "theta grid must be positive");

  const auto profile =
      IrrepProfile::build(lambda, IrrepProfile::Level::Full);
  Table table({"theta", "objective_plus", "objective_minus", "value_plus",
               "value_minus"});
  for (double th : thetas) {
    const double plus =
        symmetric_objective(profile, args.size, args.delta, th, 1);
    const double minus =
        symmetric_objective(profile, args.size, args.delta, th, -1);
    table.add_row({th, plus, minus, std::exp(plus), std::exp(minus)});
  }
  return table;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bounds on random gate-sets forming approximate t-designs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tdbound 1.0.0");

  std::string format = "csv";
  std::string output;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "write to this file instead of stdout");
  };

  std::function<Table()> command;

  LambdaSetArgs ls;
  auto* ls_cmd = app.add_subcommand("lambda-set", "list the irrep labels");
  ls_cmd->add_option("--d", ls.d, "dimension")->required();
  ls_cmd->add_option("--t", ls.t, "moment order")->required();
  add_io(ls_cmd);
  ls_cmd->callback([&] { command = [&] { return lambda_set_table(ls); }; });

  CurveArgs cv;
  auto* cv_cmd =
      app.add_subcommand("bounds-curve", "total bounds across a delta grid");
  cv_cmd->add_option("--d", cv.d, "dimension")->required();
  cv_cmd->add_option("--t", cv.t, "moment order")->required();
  cv_cmd->add_option("--size", cv.size, "independent draws")->required();
  cv_cmd->add_option("--symmetric-size", cv.symmetric_size,
                     "|S| for symmetric methods (default 2 x size)");
  cv_cmd->add_option("--kind", cv.kind, "plain, symmetric or all");
  cv_cmd->add_option("--methods", cv.methods, "comma-separated methods");
  cv_cmd->add_option("--delta-grid", cv.delta_grid, "a:b:n or x,y,...");
  add_io(cv_cmd);
  cv_cmd->callback([&] { command = [&] { return bounds_curve_table(cv); }; });

  MinSizeArgs ms;
  auto* ms_cmd = app.add_subcommand("min-size", "minimal gate-set size");
  ms_cmd->add_option("--d", ms.d, "dimension")->required();
  ms_cmd->add_option("--t", ms.t, "moment order")->required();
  ms_cmd->add_option("--delta", ms.delta, "approximation threshold");
  ms_cmd->add_option("--prob", ms.prob, "target success probability");
  ms_cmd->add_option("--method", ms.method, "bound method");
  ms_cmd->add_flag("--closed-form", ms.closed_form,
                   "invert the factored master-plain bound directly");
  add_io(ms_cmd);
  ms_cmd->callback([&] { command = [&] { return min_size_table(ms); }; });

  TableArgs tb;
  auto* tb_cmd = app.add_subcommand("table", "grid of minimal sizes");
  tb_cmd->add_flag("--table2", tb.table2, "the full published grid");
  tb_cmd->add_option("--d", tb.ds, "comma-separated dimensions");
  tb_cmd->add_option("--t", tb.ts, "comma-separated moment orders");
  tb_cmd->add_option("--methods", tb.methods, "comma-separated methods");
  tb_cmd->add_option("--delta", tb.delta, "approximation threshold");
  tb_cmd->add_option("--prob", tb.prob, "target success probability");
  add_io(tb_cmd);
  tb_cmd->callback([&] { command = [&] { return table_table(tb); }; });

  CliffordArgs cl;
  auto* cl_cmd = app.add_subcommand("clifford", "Clifford group comparison");
  cl_cmd->add_option("--max-qubits", cl.max_qubits, "largest n");
  add_io(cl_cmd);
  cl_cmd->callback([&] { command = [&] { return clifford_table(cl); }; });

  McVerifyArgs mc;
  auto* mc_cmd = app.add_subcommand("mc-verify",
                                    "empirical tail against the bounds");
  mc_cmd->add_option("--d", mc.d, "dimension");
  mc_cmd->add_option("--t", mc.t, "moment order");
  mc_cmd->add_option("--size", mc.size, "|S|");
  mc_cmd->add_option("--kind", mc.kind, "plain or symmetric");
  mc_cmd->add_option("--delta", mc.delta, "threshold in [0, 1)");
  mc_cmd->add_option("--trials", mc.trials, "number of seeded trials");
  mc_cmd->add_option("--seed", mc.seed, "base seed");
  mc_cmd->add_option("--trace", mc.trace, "JSON-lines file of trial records");
  add_io(mc_cmd);
  mc_cmd->callback([&] { command = [&] { return mc_verify_table(mc); }; });

  ObjectiveArgs ob;
  auto* ob_cmd = app.add_subcommand(
      "objective", "symmetric master objective across a theta grid");
  ob_cmd->add_option("--lambda", ob.lambda, "highest weight, e.g. 1,-1");
  ob_cmd->add_option("--size", ob.size, "|S| (even)");
  ob_cmd->add_option("--delta", ob.delta, "threshold");
  ob_cmd->add_option("--theta-grid", ob.theta_grid, "a:b:n or x,y,...");
  add_io(ob_cmd);
  ob_cmd->callback([&] { command = [&] { return objective_table(ob); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Table table = command();
    std::ostringstream buffer;
    table.write(buffer, parse_format(format));
    if (output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + output);
      file << buffer.str();
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace tdb::cli
