#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wedderburn/decomposition.hpp"
#include "wedderburn/generators.hpp"
#include "wedderburn/semisimple.hpp"
#include "wedderburn/serialization.hpp"

namespace {

using namespace wedderburn;

enum Exit : int {
  kOk = 0,
  kFailed = 1,
  kNotSemisimple = 2,
  kUnsupported = 3,
  kInvalid = 4,
  kCapExceeded = 5,
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSemisimple: return kNotSemisimple;
    case ErrorCode::UnsupportedCharacteristic: return kUnsupported;
    case ErrorCode::SplitIterationCapExceeded: return kCapExceeded;
    case ErrorCode::InvariantViolation:
    case ErrorCode::WitnessSolveFailed:
    case ErrorCode::InternalSamplingFailure: return kFailed;
    default: return kInvalid;
  }
}

std::string format_vec(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

void emit(const Json& doc, const std::string& path) {
  if (path.empty() || path == "-") std::cout << dump(doc);
  else write_json_file(path, doc);
}

struct DecomposeOptions {
  std::string input;
  std::uint64_t seed = 0;
  std::size_t max_split_iters = kDefaultSplitCap;
  std::string verify_level = "auto";
  std::string format = "text";
  std::string output;
};

int run_decompose(const DecomposeOptions& o) {
  const AlgebraPtr a = algebra_from_json(read_json_file(o.input));
  SemisimpleAlgebra sa = [&] {
    try {
      return require_semisimple(a);
    } catch (const NotSemisimpleError& e) {
      std::cout << "not semisimple: radical dimension " << e.radical_basis().size() << "\n";
      for (const auto& v : e.radical_basis()) std::cout << "  radical " << format_vec(Vec(v.begin(), v.end())) << "\n";
      throw;
    }
  }();
  const DecompositionResult result = full_isomorphism(sa, o.seed, o.max_split_iters);
  const bool full = o.verify_level == "full" || (o.verify_level == "auto" && a->dim() <= 64);
  const DecompositionReport report = make_report(result, *a);
  const VerificationReport verification = verify_isomorphism(a, report, full);
  const Json doc = report_to_json(report, &verification);

  if (o.format == "structured") {
    emit(doc, o.output);
  } else {
    for (std::size_t i = 0; i < result.blocks.size(); ++i)
      std::cout << "block " << i << ": M_" << result.blocks[i].n << "(D), dim D = " << result.blocks[i].degree()
                << "\n";
    if (!o.output.empty()) write_json_file(o.output, doc);
  }
  if (!verification.passed()) {
    for (const auto& f : verification.failures) std::cerr << "verification failed: " << f << "\n";
    return kFailed;
  }
  return kOk;
}

int run_verify(const std::string& report_path, const std::string& algebra_path, const std::string& level) {
  const AlgebraPtr a = algebra_from_json(read_json_file(algebra_path));
  const DecompositionReport report = report_from_json(read_json_file(report_path));
  const VerificationReport v = verify_isomorphism(a, report, level != "fast");
  auto line = [](const char* name, bool ok) { std::cout << name << ": " << (ok ? "ok" : "FAILED") << "\n"; };
  line("matrix_units", v.matrix_units);
  line("bijective", v.bijective);
  line("unit", v.unit);
  line("orthogonality", v.orthogonality);
  if (v.multiplicative_checked) line("multiplicative", v.multiplicative);
  else std::cout << "multiplicative: skipped\n";
  if (v.passed()) return kOk;
  std::cout << "first counterexample: " << v.failures.front() << "\n";
  if (v.multiplicative_witness)
    std::cout << "basis pair: (" << v.multiplicative_witness->first << ", " << v.multiplicative_witness->second
              << ")\n";
  return kFailed;
}

struct GenOptions {
  bool scramble = false;
  std::uint64_t seed = 0;
  std::string output;
  std::string sidecar;
};

int finish_gen(AlgebraPtr a, const GenOptions& o) {
  if (o.scramble) {
    const bool to_stdout = o.output.empty() || o.output == "-";
    if (to_stdout && o.sidecar.empty())
      fail(ErrorCode::InvalidInput, "--scramble writing to stdout needs --sidecar <path>");
    auto [scrambled, s] = scramble(*a, o.seed);
    write_json_file(o.sidecar.empty() ? o.output + ".scramble.json" : o.sidecar, scramble_to_json(s));
    a = std::move(scrambled);
  }
  emit(algebra_to_json(*a), o.output);
  return kOk;
}

void add_gen_flags(CLI::App* sub, GenOptions& o) {
  sub->add_flag("--scramble", o.scramble, "Apply a random change of basis");
  sub->add_option("--seed", o.seed, "Seed for --scramble");
  sub->add_option("-o,--output", o.output, "Output path (default: stdout)");
  sub->add_option("--sidecar", o.sidecar, "Change-of-basis output (default: <output>.scramble.json)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit Wedderburn-Artin decompositions of semisimple algebras over F_p"};
  app.require_subcommand(1);

  DecomposeOptions dec;
  auto* decompose = app.add_subcommand("decompose", "Decompose an algebra and write a verifiable report");
  decompose->add_option("algebra", dec.input, "Algebra document")->required();
  decompose->add_option("--seed", dec.seed, "Seed for randomized splitting");
  decompose->add_option("--max-split-iters", dec.max_split_iters, "Random draws per splitting step")
      ->check(CLI::PositiveNumber);
  decompose->add_option("--verify-level", dec.verify_level, "fast, full, or auto (full when dim <= 64)")
      ->check(CLI::IsMember({"fast", "full", "auto"}));
  decompose->add_option("--format", dec.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  decompose->add_option("-o,--output", dec.output, "Report output path");

  std::string report_path, verify_algebra, verify_level = "full";
  auto* verify = app.add_subcommand("verify", "Re-check a report against its algebra");
  verify->add_option("report", report_path, "Report document")->required();
  verify->add_option("algebra", verify_algebra, "Algebra document")->required();
  verify->add_option("--verify-level", verify_level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  auto* gen = app.add_subcommand("gen", "Generate algebra documents");
  gen->require_subcommand(1);
  GenOptions gen_group_opts, gen_matrix_opts, gen_sum_opts;

  std::string cayley_path, named;
  std::uint32_t group_p = 0;
  auto* gen_group = gen->add_subcommand("group", "Group algebra F_p[G]");
  auto* cayley_opt = gen_group->add_option("--cayley", cayley_path, "Cayley table document");
  gen_group->add_option("--named", named, "Built-in group: C2, C3, C4, S3, D4, Q8")->excludes(cayley_opt);
  gen_group->add_option("-p", group_p, "Prime modulus")->required();
  add_gen_flags(gen_group, gen_group_opts);

  std::size_t matrix_n = 0;
  std::uint32_t matrix_p = 0;
  std::vector<std::uint32_t> ext_poly;
  auto* gen_matrix = gen->add_subcommand("matrix", "Matrix algebra M_n(F_p[T]/(f))");
  gen_matrix->add_option("-n", matrix_n, "Matrix size")->required()->check(CLI::PositiveNumber);
  gen_matrix->add_option("-p", matrix_p, "Prime modulus")->required();
  gen_matrix->add_option("--ext-poly", ext_poly, "Irreducible f, coefficients lowest degree first")
      ->delimiter(',');
  add_gen_flags(gen_matrix, gen_matrix_opts);

  std::vector<std::string> sum_paths;
  auto* gen_sum = gen->add_subcommand("sum", "Direct sum of algebra documents");
  gen_sum->add_option("parts", sum_paths, "Algebra documents")->required();
  add_gen_flags(gen_sum, gen_sum_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*decompose) return run_decompose(dec);
    if (*verify) return run_verify(report_path, verify_algebra, verify_level);
    if (*gen_group) {
      if (cayley_path.empty() == named.empty()) fail(ErrorCode::InvalidInput, "give exactly one of --cayley, --named");
      const CayleyTable table = named.empty() ? cayley_from_json(read_json_file(cayley_path)) : named_group(named);
      return finish_gen(group_algebra(table, group_p), gen_group_opts);
    }
    if (*gen_matrix) {
      const PrimeField f(matrix_p);
      Vec coeffs;
      for (auto c : ext_poly) coeffs.push_back(f.reduce(c));
      const Polynomial poly = ext_poly.empty() ? Polynomial::monomial(f, 1) : Polynomial(f, coeffs);
      return finish_gen(matrix_algebra_over_extension(matrix_n, matrix_p, poly).presentation, gen_matrix_opts);
    }
    if (*gen_sum) {
      std::vector<AlgebraPtr> parts;
      for (const auto& path : sum_paths) parts.push_back(algebra_from_json(read_json_file(path)));
      return finish_gen(direct_sum(parts), gen_sum_opts);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    if (e.code() == ErrorCode::SplitIterationCapExceeded) std::cerr << "retry with a different --seed\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
