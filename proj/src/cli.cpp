#include "cubal/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubal/cubic_matrix.hpp"
#include "cubal/enumerate.hpp"
#include "cubal/io.hpp"
#include "cubal/semigroup.hpp"
#include "cubal/structure.hpp"
#include "cubal/verify.hpp"

namespace cubal::cli {

namespace {

constexpr int kMaxCensusVerify = 3;
constexpr int kMaxClassify = kMaxOrbitCensus;
constexpr std::size_t kExampleLimit = 5;

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json input_entry(const std::string& role, const std::string& path) {
  Json e;
  e["role"] = role;
  e["path"] = path;
  e["digest"] = fnv1a64(read_file(path));
  return e;
}

Checking checking_of(const RunConfig& c) { return c.unchecked ? Checking::Unchecked : Checking::Associative; }

Operation load_op(const RunConfig& c) {
  if (!c.op_path) throw UsageError("--op is required");
  return load_operation(*c.op_path, checking_of(c));
}

void write_output(const RunConfig& c, const Json& doc) {
  if (!c.output) return;
  std::ofstream f(*c.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + *c.output);
  f << doc.dump(2) << '\n';
}

// --- human-readable rendering ----------------------------------------------

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool is_flat_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x); });
}

bool is_grid(const Json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json& x) { return is_flat_array(x) && !x.empty(); });
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, std::ostream& os, int indent);

void render_grid(const Json& grid, std::ostream& os, int indent) {
  std::size_t width = 1;
  for (const auto& row : grid)
    for (const auto& x : row) width = std::max(width, scalar_text(x).size());
  for (const auto& row : grid) {
    os << std::string(static_cast<std::size_t>(indent), ' ');
    for (const auto& x : row) os << std::setw(static_cast<int>(width) + 1) << scalar_text(x);
    os << '\n';
  }
}

void render_value(const std::string& label, const Json& v, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(v)) {
    os << pad << label << ": " << scalar_text(v) << '\n';
  } else if (is_flat_array(v)) {
    os << pad << label << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
    os << "]\n";
  } else if (is_grid(v)) {
    os << pad << label << ":\n";
    render_grid(v, os, indent + 2);
  } else {
    os << pad << label << ":\n";
    render(v, os, indent + 2);
  }
}

void render(const Json& j, std::ostream& os, int indent) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) render_value(it.key(), it.value(), os, indent);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_value("[" + std::to_string(i + 1) + "]", j[i], os, indent);
  } else {
    os << std::string(static_cast<std::size_t>(indent), ' ') << scalar_text(j) << '\n';
  }
}

// --- commands ----------------------------------------------------------------

EnumOptions enum_options(const RunConfig& c) { return EnumOptions{.jobs = c.jobs, .max_m = c.max_m}; }

int cmd_enum(const RunConfig& c, Json& report) {
  const int m = *c.m;
  report["m"] = m;
  if (c.count_only) {
    report["total"] = count_operations(m, enum_options(c));
  } else {
    Json tables = Json::array();
    std::uint64_t total = 0;
    enumerate_operations(
        m,
        [&](const Operation& op) {
          tables.push_back(table_json(op));
          ++total;
        },
        enum_options(c));
    report["total"] = total;
    report["operations"] = std::move(tables);
  }
  if (c.output) {
    const auto census = orbit_census(m, enum_options(c));
    write_output(c, to_json(census));
    report["census"] = *c.output;
    report["orbit_count"] = census.orbit_count();
  }
  return kOk;
}

int cmd_orbits(const RunConfig& c, Json& report) {
  const auto census = orbit_census(*c.m, enum_options(c));
  auto doc = to_json(census);
  Json symmetric = Json::array();
  for (const auto& o : census.orbits)
    if (o.size == 1) symmetric.push_back(table_json(o.representative));
  doc["symmetric"] = std::move(symmetric);
  write_output(c, to_json(census));
  report["result"] = std::move(doc);
  return kOk;
}

int cmd_mul(const RunConfig& c, Json& report) {
  if (c.inputs.size() != 2) throw UsageError("mul needs exactly two matrix files");
  const auto a = load_op(c);
  const auto x = load_cubic_matrix(c.inputs[0]);
  const auto y = load_cubic_matrix(c.inputs[1]);
  const auto result = to_json(mul(x, y, a));
  write_output(c, result);
  report["result"] = result;
  return kOk;
}

int cmd_plenary(const RunConfig& c, Json& report) {
  if (c.inputs.size() != 1) throw UsageError("plenary needs exactly one matrix file");
  const auto a = load_op(c);
  const auto x = load_cubic_matrix(c.inputs[0]);
  const auto result = to_json(plenary_power(x, c.power, a));
  write_output(c, result);
  report["n"] = c.power;
  report["result"] = result;
  return kOk;
}

int cmd_char(const RunConfig& c, Json& report) {
  const auto a = load_op(c);
  const auto reduction = reduce_characters(a);
  Json chars = Json::array();
  bool genuine = true;
  for (const auto& chi : reduction.characters) {
    chars.push_back(to_json(chi));
    genuine = genuine && is_character(chi, a);
  }
  Json slices = Json::array();
  for (const auto& s : reduction.slices) {
    Json e;
    e["slice"] = s.slice + 1;
    e["forced_by_cross_terms"] = to_json(s.forced_by_cross_terms);
    e["forced_by_squares"] = to_json(s.forced_by_squares);
    e["free"] = to_json(s.free);
    slices.push_back(std::move(e));
  }
  Json result;
  result["count"] = reduction.characters.size();
  result["baric"] = !reduction.characters.empty();
  result["characters"] = std::move(chars);
  result["reduction"]["off_diagonal_zeros"] = reduction.off_diagonal_zeros;
  result["reduction"]["slices"] = std::move(slices);
  report["result"] = std::move(result);
  return genuine ? kOk : kVerificationFailed;
}

int cmd_phi(const RunConfig& c, Json& report) {
  if (c.inputs.size() != 1) throw UsageError("phi needs exactly one matrix file");
  const auto x = load_cubic_matrix(c.inputs[0]);
  const auto u = phi(x);
  write_output(c, to_json(u));
  report["result"] = to_json(u);
  report["in_kernel"] = u.is_zero();
  return kOk;
}

int cmd_zerodiv(const RunConfig& c, Json& report) {
  if (c.inputs.size() != 1) throw UsageError("zerodiv needs exactly one matrix file");
  const auto a = load_op(c);
  const auto x = load_cubic_matrix(c.inputs[0]);
  const bool left = c.side == Side::Left;
  const auto witness = left ? left_zero_divisor_witness(x, a) : right_zero_divisor_witness(x, a);
  const auto b = accompanying_matrix(x);
  const Scalar d = det(b);

  bool consistent = true;
  if (witness) {
    const auto product = left ? mul(x, *witness, a) : mul(*witness, x, a);
    consistent = product.is_zero() && !witness->is_zero();
  }
  // Symmetric operations: one side is governed by det B, the other always has a witness (m >= 2).
  const auto sym = symmetry_class(a);
  if (sym != Symmetry::None) {
    const bool det_side = (sym == Symmetry::Left) != left;
    if (det_side) consistent = consistent && (witness.has_value() == (sgn(d) == 0));
    else if (a.size() >= 2) consistent = consistent && witness.has_value();
  }

  Json result;
  result["side"] = left ? "left" : "right";
  result["accompanying_matrix"] = square_matrix_json(b);
  result["det"] = format_scalar(d);
  result["zero_divisor"] = witness.has_value();
  result["witness"] = witness ? to_json(*witness) : Json(nullptr);
  result["symmetry"] = to_string(sym);
  result["consistent"] = consistent;
  if (witness) write_output(c, to_json(*witness));
  report["result"] = std::move(result);
  return consistent ? kOk : kVerificationFailed;
}

int cmd_subalg(const RunConfig& c, Json& report) {
  const auto a = load_op(c);
  const int m = a.size();
  const auto invariant = enumerate_invariant_subsets(a);
  bool ok = true;
  for (const auto& j : invariant)
    if (!j.is_empty())
      for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) ok = ok && is_subalgebra(subalgebra_span(a, j, i, k), a);
  const auto ideal = ideal_Ia_span(a);
  const bool ideal_ok = is_ideal(ideal, a);
  const auto count = count_subalgebras_from_invariants(a);

  Json closures = Json::array();
  for (int x = 0; x < m; ++x) {
    Json e;
    e["generator"] = x + 1;
    e["closure"] = to_json(closure(Subset::of(m, {x}), a));
    closures.push_back(std::move(e));
  }
  Json sequences = Json::array();
  for (int i = 0; i < m; ++i) {
    const auto cls = power_sequence_classify(i, a);
    Json e = to_json(cls);
    const auto cyc = cls.cycle_set(m);
    e["cycle_invariant"] = is_invariant(cyc, a);
    if (!e["cycle_invariant"].get<bool>()) {
      // Name a product that escapes the cycle.
      for (int s : cyc.members())
        for (int t : cyc.members())
          if (!cyc.contains(a(s, t)) && !e.contains("escape"))
            e["escape"] = Json::array({s + 1, t + 1, a(s, t) + 1});
    }
    e["index"] = i + 1;
    sequences.push_back(std::move(e));
  }

  Json result;
  result["image"] = to_json(image(a));
  result["ideal"] = to_json(ideal);
  result["ideal_is_ideal"] = ideal_ok;
  result["nonempty_invariant_subsets"] = count.per_block;
  result["subalgebras_per_block"] = count.per_block;
  result["subalgebras_lower_bound"] = count.total;
  result["all_spans_closed"] = ok;
  result["closures"] = std::move(closures);
  result["power_sequences"] = std::move(sequences);
  if (c.list_invariant_sets) {
    Json list = Json::array();
    for (const auto& j : invariant) list.push_back(to_json(j));
    result["invariant_subsets"] = std::move(list);
  }
  report["result"] = std::move(result);
  return ok && ideal_ok ? kOk : kVerificationFailed;
}

int cmd_verify(const RunConfig& c, Json& report, std::ostream& err) {
  std::vector<Operation> ops;
  if (c.op_path) {
    ops.push_back(load_op(c));
  } else {
    if (!c.all || !c.m) throw UsageError("verify needs --op FILE or --m N --all");
    if (*c.m > kMaxCensusVerify)
      throw CapacityError("census verification is limited to m <= " + std::to_string(kMaxCensusVerify));
    ops = all_operations(*c.m, enum_options(c));
    report["m"] = *c.m;
  }
  Json reports = Json::array();
  bool passed = true;
  for (const auto& op : ops) {
    const auto r = verify_operation(op);
    if (!r.all_passed()) {
      passed = false;
      err << "verification failed for operation " << table_json(op).dump() << ":";
      for (const auto& f : r.failures) err << ' ' << f;
      err << '\n';
    }
    reports.push_back(to_json(r));
  }
  report["operations_checked"] = ops.size();
  report["passed"] = passed;
  report["operations"] = std::move(reports);
  return passed ? kOk : kVerificationFailed;
}

int cmd_classify(const RunConfig& c, Json& report) {
  if (c.op_path) {
    const auto a = load_op(c);
    Json result;
    result["operation"] = table_json(a);
    result["canonical_representative"] = table_json(canonical_representative(a));
    result["orbit_size"] = orbit(a).size();
    result["symmetric"] = is_symmetric(a);
    result["symmetry"] = to_string(symmetry_class(a));
    Json seq = Json::array();
    for (int i = 0; i < a.size(); ++i) seq.push_back(to_json(power_sequence_classify(i, a)));
    result["power_sequences"] = std::move(seq);
    report["result"] = std::move(result);
    return kOk;
  }
  if (!c.m) throw UsageError("classify needs --op FILE or --m N");
  const int m = *c.m;
  if (m > kMaxClassify) throw CapacityError("classify --m is limited to m <= " + std::to_string(kMaxClassify));
  const auto census = orbit_census(m, enum_options(c));
  std::map<std::string, std::uint64_t> tally{
      {"periodic", 0}, {"convergent", 0}, {"eventually_periodic", 0}};
  Json examples = Json::array();
  std::uint64_t symmetric = 0;
  enumerate_operations(
      m,
      [&](const Operation& op) {
        if (is_symmetric(op)) ++symmetric;
        for (int i = 0; i < m; ++i) {
          const auto cls = power_sequence_classify(i, op);
          ++tally[to_string(cls.kind)];
          if (cls.kind == SequenceClass::Kind::EventuallyPeriodic && examples.size() < kExampleLimit) {
            Json e;
            e["operation"] = table_json(op);
            e["index"] = i + 1;
            e["sequence"] = to_json(cls);
            examples.push_back(std::move(e));
          }
        }
      },
      enum_options(c));
  Json result;
  result["m"] = m;
  result["total"] = census.total;
  result["orbit_count"] = census.orbit_count();
  result["symmetric_operations"] = symmetric;
  Json t;
  for (const auto& [k, v] : tally) t[k] = v;
  result["sequence_classes"] = std::move(t);
  result["eventually_periodic_occurs"] = tally["eventually_periodic"] > 0;
  result["eventually_periodic_examples"] = std::move(examples);
  report["result"] = std::move(result);
  return kOk;
}

std::optional<int> parse_max_m(const std::optional<std::string>& env) {
  if (!env || env->empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(*env, &used);
    if (used != env->size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw UsageError("CUBAL_MAX_M must be an integer, got \"" + *env + "\"");
  }
}

void require_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw UsageError("missing file: " + path);
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Enum: return "enum";
    case Command::Orbits: return "orbits";
    case Command::Mul: return "mul";
    case Command::Plenary: return "plenary";
    case Command::Char: return "char";
    case Command::Phi: return "phi";
    case Command::Zerodiv: return "zerodiv";
    case Command::Subalg: return "subalg";
    case Command::Verify: return "verify";
    case Command::Classify: return "classify";
  }
  return "?";
}

RunConfig parse_args(int argc, const char* const* argv, std::optional<std::string> max_m_env) {
  RunConfig c;
  CLI::App app{"cubal: algebras of cubic matrices over associative operations on {1..m}", "cubal"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  int m = 0;
  std::string op;
  std::string output;
  std::string side = "left";
  std::vector<std::string> inputs;
  bool allow_m6 = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", c.pretty, "Human-readable output instead of JSON");
    sub->add_flag("--timing", c.timing, "Print elapsed time to stderr");
  };
  auto add_op = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--op", op, "Cayley table file (text or JSON)");
    if (required) o->required();
    sub->add_flag("--unchecked", c.unchecked, "Accept tables that are not associative");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", c.jobs, "Worker threads for the enumeration")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-m6", allow_m6, "Permit m = 6 enumeration");
  };

  std::map<CLI::App*, Command> commands;
  auto* s_enum = app.add_subcommand("enum", "Enumerate associative operations");
  s_enum->add_option("--m", m, "Set size")->required();
  s_enum->add_flag("--count-only", c.count_only, "Report the count only");
  s_enum->add_option("--census", output, "Write the orbit census JSON here");
  add_jobs(s_enum);
  add_common(s_enum);
  commands[s_enum] = Command::Enum;

  auto* s_orbits = app.add_subcommand("orbits", "Orbit census under relabelling");
  s_orbits->add_option("--m", m, "Set size")->required();
  s_orbits->add_option("-o,--output", output, "Also write the census JSON here");
  add_jobs(s_orbits);
  add_common(s_orbits);
  commands[s_orbits] = Command::Orbits;

  auto* s_mul = app.add_subcommand("mul", "Product A *_a B");
  add_op(s_mul, true);
  s_mul->add_option("inputs", inputs, "A.json B.json")->expected(2);
  s_mul->add_option("-o,--output", output, "Write the product matrix here");
  add_common(s_mul);
  commands[s_mul] = Command::Mul;

  auto* s_plenary = app.add_subcommand("plenary", "Plenary power A^[n]");
  add_op(s_plenary, true);
  s_plenary->add_option("--n", c.power, "Exponent")->check(CLI::NonNegativeNumber);
  s_plenary->add_option("inputs", inputs, "A.json")->expected(1);
  s_plenary->add_option("-o,--output", output, "Write the result matrix here");
  add_common(s_plenary);
  commands[s_plenary] = Command::Plenary;

  auto* s_char = app.add_subcommand("char", "Characters (multiplicative linear forms)");
  add_op(s_char, true);
  add_common(s_char);
  commands[s_char] = Command::Char;

  auto* s_phi = app.add_subcommand("phi", "Image in the accompanying algebra");
  s_phi->add_option("inputs", inputs, "X.json")->expected(1);
  s_phi->add_option("-o,--output", output, "Write the result here");
  add_common(s_phi);
  commands[s_phi] = Command::Phi;

  auto* s_zd = app.add_subcommand("zerodiv", "Zero-divisor witness");
  add_op(s_zd, true);
  s_zd->add_option("--side", side, "left: A *_a X = 0, right: X *_a A = 0")
      ->check(CLI::IsMember({"left", "right"}));
  s_zd->add_option("inputs", inputs, "A.json")->expected(1);
  s_zd->add_option("-o,--output", output, "Write the witness here");
  add_common(s_zd);
  commands[s_zd] = Command::Zerodiv;

  auto* s_sub = app.add_subcommand("subalg", "Invariant sets, subalgebras and ideals");
  add_op(s_sub, true);
  s_sub->add_flag("--list-invariant-sets", c.list_invariant_sets, "Include every invariant subset");
  add_common(s_sub);
  commands[s_sub] = Command::Subalg;

  auto* s_verify = app.add_subcommand("verify", "Run the theorem suite");
  add_op(s_verify, false);
  s_verify->add_option("--m", m, "Set size (with --all)");
  s_verify->add_flag("--all", c.all, "Every operation of the census");
  add_jobs(s_verify);
  add_common(s_verify);
  commands[s_verify] = Command::Verify;

  auto* s_classify = app.add_subcommand("classify", "Orbit and squaring-sequence classification");
  add_op(s_classify, false);
  s_classify->add_option("--m", m, "Tally over the whole census instead");
  add_jobs(s_classify);
  add_common(s_classify);
  commands[s_classify] = Command::Classify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& [sub, cmd] : commands)
    if (sub->parsed()) {
      c.command = cmd;
      auto given = [&](const char* name) {
        const auto* o = sub->get_option_no_throw(name);
        return o != nullptr && o->count() > 0;
      };
      if (given("--m")) c.m = m;
      if (given("--op")) c.op_path = op;
    }
  if (!output.empty()) c.output = output;
  c.inputs = inputs;
  c.side = side == "right" ? Side::Right : Side::Left;

  c.max_m = kDefaultMaxEnumeration;
  if (auto env = parse_max_m(max_m_env)) c.max_m = std::max(c.max_m, *env);
  if (allow_m6) c.max_m = std::max(c.max_m, kHardMaxEnumeration);

  if (c.op_path) require_file(*c.op_path);
  for (const auto& p : c.inputs) require_file(p);
  if (c.jobs < 1) throw UsageError("--jobs must be >= 1");
  if (c.m && *c.m < 1) throw UsageError("--m must be positive");
  if (c.command == Command::Enum || c.command == Command::Orbits) {
    try {
      check_enumeration_budget(*c.m, enum_options(c));
    } catch (const CapacityError& e) {
      throw UsageError(e.what());
    }
  }
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["command"] = to_string(c.command);
  int status = kOk;
  try {
    Json inputs = Json::array();
    if (c.op_path) inputs.push_back(input_entry("operation", *c.op_path));
    for (const auto& p : c.inputs) inputs.push_back(input_entry("matrix", p));
    if (!inputs.empty()) report["inputs"] = std::move(inputs);

    switch (c.command) {
      case Command::Enum: status = cmd_enum(c, report); break;
      case Command::Orbits: status = cmd_orbits(c, report); break;
      case Command::Mul: status = cmd_mul(c, report); break;
      case Command::Plenary: status = cmd_plenary(c, report); break;
      case Command::Char: status = cmd_char(c, report); break;
      case Command::Phi: status = cmd_phi(c, report); break;
      case Command::Zerodiv: status = cmd_zerodiv(c, report); break;
      case Command::Subalg: status = cmd_subalg(c, report); break;
      case Command::Verify: status = cmd_verify(c, report, err); break;
      case Command::Classify: status = cmd_classify(c, report); break;
    }
  } catch (const Error& e) {
    err << "cubal " << to_string(c.command) << ": error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "cubal " << to_string(c.command) << ": malformed JSON input: " << e.what() << '\n';
    return kUsageError;
  }
  if (c.pretty)
    render(report, out, 0);
  else
    out << report.dump() << '\n';
  if (c.timing) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    err << "elapsed: " << elapsed.count() << " s\n";
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const char* env = std::getenv("CUBAL_MAX_M");
  RunConfig config;
  try {
    config = parse_args(argc, argv, env ? std::optional<std::string>(env) : std::nullopt);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kOk;
  } catch (const Error& e) {
    err << "cubal: " << e.what() << '\n';
    return kUsageError;
  }
  return run(config, out, err);
}

}  // namespace cubal::cli
