#include "sullivan/cli.hpp"

#include "sullivan/dsl.hpp"
#include "sullivan/homology.hpp"
#include "sullivan/minimal_model.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace sullivan::cli {

namespace {

struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::variant<DGAlgebra, DGModule> load(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UserError(path + ":" + e.what());
  } catch (const InvalidInput& e) {
    throw UserError(path + ": " + e.what());
  }
}

DGAlgebra load_algebra(const std::string& path) {
  auto v = load(path);
  if (auto* a = std::get_if<DGAlgebra>(&v)) return std::move(*a);
  throw UserError(path + ": expected an algebra description, found mode module");
}

std::string describe_violations(const std::string& path, const ValidationReport& rep) {
  std::string s;
  for (const auto& v : rep.violations) s += path + ": " + v.message + "\n";
  return s;
}

DGAlgebra load_valid_algebra(const std::string& path) {
  DGAlgebra a = load_algebra(path);
  auto rep = validate_sullivan(a);
  if (!rep.ok()) {
    std::string msg = describe_violations(path, rep);
    msg.pop_back();
    throw UserError(msg);
  }
  return a;
}

std::string dims_text(const std::vector<DegreeDim>& dims) {
  std::ostringstream os;
  for (const auto& d : dims) os << "H^" << d.degree << " = " << d.dimension << "\n";
  return os.str();
}

RunResult run_validate(const RunConfig& cfg) {
  auto v = load(cfg.input);
  if (std::holds_alternative<DGModule>(v)) return {kOk, "valid module\n", ""};
  auto rep = validate_sullivan(std::get<DGAlgebra>(v));
  if (rep.ok()) return {kOk, "valid\n", ""};
  return {kUserError, "", describe_violations(cfg.input, rep)};
}

RunResult run_minimize(const RunConfig& cfg) {
  FullContraction c = compute_minimal_model(load_valid_algebra(cfg.input));
  return {kOk, cfg.format == Format::Machine ? emit_machine(c) : emit_report(c), ""};
}

RunResult run_at_model(const RunConfig& cfg) {
  auto v = load(cfg.input);
  auto* M = std::get_if<DGModule>(&v);
  if (!M) throw UserError(cfg.input + ": at-model needs a module description (mode module)");
  ATModel A = compute_at_model(*M);
  return {kOk, cfg.format == Format::Machine ? emit_at_machine(*M, A) : emit_at_report(*M, A), ""};
}

std::vector<DegreeDim> dims_of_file(const std::string& path, int max_degree) {
  auto v = load(path);
  if (auto* M = std::get_if<DGModule>(&v)) return cohomology_dims(*M, max_degree);
  const DGAlgebra& a = std::get<DGAlgebra>(v);
  return cohomology_dims(a, a.signature().all(), max_degree);
}

RunResult run_homology(const RunConfig& cfg) {
  auto a = dims_of_file(cfg.input, cfg.max_degree);
  if (!cfg.against) return {kOk, dims_text(a), ""};
  auto b = dims_of_file(*cfg.against, cfg.max_degree);
  std::ostringstream os;
  std::optional<int> mismatch;
  for (std::size_t p = 0; p < a.size(); ++p) {
    os << "H^" << a[p].degree << " = " << a[p].dimension << " vs " << b[p].dimension << "\n";
    if (!mismatch && a[p].dimension != b[p].dimension) mismatch = a[p].degree;
  }
  if (mismatch) {
    os << "differ at degree " << *mismatch << "\n";
    return {kNotEqual, os.str(), ""};
  }
  os << "equal through degree " << cfg.max_degree << "\n";
  return {kOk, os.str(), ""};
}

RunResult run_verify(const RunConfig& cfg) {
  FullContraction c = compute_minimal_model(load_valid_algebra(cfg.input));
  std::ostringstream os;
  bool ok = true;
  auto line = [&](bool pass, const std::string& what) {
    ok = ok && pass;
    os << (pass ? "PASS " : "FAIL ") << what << "\n";
  };
  const Signature& sig = c.source.signature();
  IdentityReport rep = check_contraction(c, cfg.max_degree);
  for (const auto& r : rep.results) {
    std::string what = r.identity + " (" + std::to_string(r.checked) + " monomials)";
    if (!r.passed && r.counterexample)
      what += ": fails at " + format_element(Element(c.source.signature_ptr(), *r.counterexample));
    line(r.passed, what);
  }
  GeneratorSet W = c.w_set();
  bool minimal = true, square_zero = true;
  for (GenIndex w : c.W) {
    minimal = minimal && in_lambda_geq2(c.dW(w), W);
    square_zero = square_zero && apply_d(c.target, c.dW(w)).is_zero();
  }
  line(minimal, "dW is decomposable in W");
  line(square_zero, "dW dW = 0 on generators");
  auto cmp = compare_cohomology(c.source, sig.all(), c.target, W, cfg.max_degree);
  std::string what = "cohomology of LV and LW agree through degree " + std::to_string(cfg.max_degree);
  if (!cmp.equal) what += ": first mismatch in degree " + std::to_string(*cmp.first_mismatch);
  line(cmp.equal, what);
  return {ok ? kOk : kInternalError, os.str(), ok ? "" : "verification failed\n"};
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  try {
    if (cfg.max_degree < 1) throw UserError("--max-degree must be at least 1");
    switch (cfg.command) {
      case Command::Validate:
        return run_validate(cfg);
      case Command::Minimize:
        return run_minimize(cfg);
      case Command::AtModel:
        return run_at_model(cfg);
      case Command::Homology:
        return run_homology(cfg);
      case Command::Verify:
        return run_verify(cfg);
    }
    throw InternalError("unknown command");
  } catch (const UserError& e) {
    return {kUserError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvalidInput& e) {
    return {kUserError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInternalError, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal Sullivan models with certified contractions", "sullivan"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "report";
  std::string output, against;

  struct Sub {
    const char* name;
    Command cmd;
    const char* help;
  };
  const Sub subs[] = {
      {"validate", Command::Validate, "Check the Sullivan conditions"},
      {"minimize", Command::Minimize, "Compute the minimal model and contraction"},
      {"at-model", Command::AtModel, "Compute the AT-model of a module"},
      {"homology", Command::Homology, "Cohomology dimensions by linear algebra"},
      {"verify", Command::Verify, "Minimize and check every contraction identity"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", cfg.input, "Input file")->required();
    sub->add_option("--max-degree", cfg.max_degree, "Degree cap")->capture_default_str();
    sub->add_option("--format", format, "report or machine")->check(CLI::IsMember({"report", "machine"}));
    sub->add_option("--output", output, "Write output to this file");
    if (s.cmd == Command::Homology) sub->add_option("--against", against, "Compare with this file");
    Command cmd = s.cmd;
    sub->callback([&cfg, cmd] { cfg.command = cmd; });
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* shown = &app;
    for (const CLI::App* sub : app.get_subcommands()) shown = sub;
    out << shown->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  }
  cfg.format = format == "machine" ? Format::Machine : Format::Report;
  if (!output.empty()) cfg.output = output;
  if (!against.empty()) cfg.against = against;

  RunResult r = run(cfg);
  if (cfg.output && !r.out.empty()) {
    std::ofstream f(*cfg.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *cfg.output << "\n";
      return kUserError;
    }
    f << r.out;
  } else {
    out << r.out;
  }
  err << r.err;
  return r.exit_code;
}

}  // namespace sullivan::cli
