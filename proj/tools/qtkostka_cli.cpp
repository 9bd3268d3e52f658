// Command-line front end over the C API.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "qtkostka/qtkostka.h"

namespace {

constexpr int kExitUsage = 64;

int exit_code(qtk_status s) {
  switch (s) {
    case QTK_OK: return 0;
    case QTK_DOMAIN_ERROR: return 1;
    case QTK_INTERNAL_ERROR: return 2;
    case QTK_INVALID_ARGUMENT: return kExitUsage;
  }
  return 2;
}

// Prints the result (or the error) and maps the status to an exit code.
int emit(qtk_context* ctx, qtk_status s, char*& text, const std::string& out_path = "") {
  if (s != QTK_OK) {
    std::cerr << "error: " << qtk_last_error(ctx) << "\n";
    qtk_string_free(text);
    return exit_code(s);
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      qtk_string_free(text);
      return 1;
    }
    out << text;
  }
  qtk_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtkostka: q,t-Kostka matrices, integral-form coefficients and the dual Haglund check"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  int jobs = 0;
  std::string cache_dir;
  if (const char* env = std::getenv("QTKOSTKA_CACHE_DIR")) cache_dir = env;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "latex", "pretty"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--cache-dir", cache_dir, "Directory for cached matrices (env QTKOSTKA_CACHE_DIR)");

  std::string lambda;
  std::string mu;
  int n = 0;
  int k = 0;
  int m = 0;
  int max_n = 0;
  int max_k = 4;
  std::string which = "k2";
  std::string out_path;

  auto* kcoeff = app.add_subcommand("kcoeff", "Integral-form coefficient k_{lambda,mu}(q,t)");
  kcoeff->add_option("--lambda", lambda, "Partition, e.g. 5,3,3")->required();
  kcoeff->add_option("--mu", mu, "Partition")->required();

  auto* matrix = app.add_subcommand("matrix", "One of the five transition matrices in degree n");
  matrix->add_option("--n", n, "Degree")->required()->check(CLI::NonNegativeNumber);
  matrix->add_option("--which", which, "k, k1, k1inv, k2 or k2inv")
      ->check(CLI::IsMember({"k", "k1", "k1inv", "k2", "k2inv"}))
      ->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Decomposition tree into irreducible pairs");
  reduce->add_option("--lambda", lambda, "Partition")->required();
  reduce->add_option("--mu", mu, "Partition")->required();

  auto* haglund = app.add_subcommand("haglund", "Check k_{lambda,mu}(t^k,t)/(1-t)^n for one pair");
  haglund->add_option("--lambda", lambda, "Partition")->required();
  haglund->add_option("--mu", mu, "Partition")->required();
  haglund->add_option("--k", k, "Exponent k in q = t^k")->required()->check(CLI::NonNegativeNumber);

  auto* scan = app.add_subcommand("scan", "Check every pair up to a degree");
  scan->add_option("--max-n", max_n, "Largest degree")->required()->check(CLI::NonNegativeNumber);
  scan->add_option("--max-k", max_k, "Largest k")->capture_default_str()->check(CLI::NonNegativeNumber);
  scan->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* oracle = app.add_subcommand("oracle-verify", "Compare the matrices with the Gram-Schmidt construction");
  oracle->add_option("--max-n", max_n, "Largest degree")->required()->check(CLI::NonNegativeNumber);

  auto* fstat = app.add_subcommand("fstat", "f_mu = sum of q^arm t^leg, optionally against its complement");
  fstat->add_option("--mu", mu, "Partition")->required();
  fstat->add_option("--m", m, "Rectangle width for the complement")->check(CLI::PositiveNumber);
  fstat->add_option("--n", n, "Complement taken in (m^{n+1})")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::map<std::string, qtk_format> formats{
      {"json", QTK_FORMAT_JSON}, {"latex", QTK_FORMAT_LATEX}, {"pretty", QTK_FORMAT_PRETTY}};
  const qtk_format fmt = formats.at(format);

  qtk_context* ctx = nullptr;
  if (qtk_context_new(&ctx) != QTK_OK) return 2;
  qtk_set_jobs(ctx, jobs);
  if (!cache_dir.empty()) qtk_set_cache_dir(ctx, cache_dir.c_str());

  char* text = nullptr;
  int code = 0;
  if (kcoeff->parsed()) {
    const qtk_status s = qtk_kcoeff(ctx, lambda.c_str(), mu.c_str(), fmt, &text);
    code = emit(ctx, s, text);
  } else if (matrix->parsed()) {
    const qtk_status s = qtk_matrix(ctx, n, which.c_str(), fmt, &text);
    code = emit(ctx, s, text);
  } else if (reduce->parsed()) {
    const qtk_status s = qtk_reduce(ctx, lambda.c_str(), mu.c_str(), fmt, &text);
    code = emit(ctx, s, text);
  } else if (haglund->parsed()) {
    const qtk_status s = qtk_haglund(ctx, lambda.c_str(), mu.c_str(), k, fmt, &text);
    code = emit(ctx, s, text);
  } else if (scan->parsed()) {
    long long violations = 0;
    const qtk_status s = qtk_scan(ctx, max_n, max_k, fmt, &text, &violations);
    code = emit(ctx, s, text, out_path);
    if (code == 0 && !out_path.empty()) std::cout << "violations: " << violations << "\n";
  } else if (oracle->parsed()) {
    int passed = 0;
    const qtk_status s = qtk_oracle_verify(ctx, max_n, fmt, &text, &passed);
    code = emit(ctx, s, text);
    if (code == 0 && !passed) code = 2;
  } else if (fstat->parsed()) {
    if ((m > 0) != (n > 0)) {
      std::cerr << "error: --m and --n go together\n";
      code = kExitUsage;
    } else {
      const qtk_status s = qtk_fstat(ctx, mu.c_str(), m, n, fmt, &text);
      code = emit(ctx, s, text);
    }
  }
  qtk_context_free(ctx);
  return code;
}
