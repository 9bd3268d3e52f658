#include "qtkostka/qtkostka.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "qtkostka/errors.hpp"
#include "qtkostka/haglund.hpp"
#include "qtkostka/macdonald.hpp"
#include "qtkostka/oracle.hpp"
#include "qtkostka/parallel.hpp"
#include "qtkostka/reductions.hpp"

struct qtk_context {
  int jobs = qtk::default_jobs();
  std::string cache_dir;
  std::unique_ptr<qtk::MatrixStore> store;
  std::string last_error;

  qtk::MatrixStore& matrices() {
    if (!store) {
      std::optional<std::filesystem::path> dir;
      if (!cache_dir.empty()) dir = cache_dir;
      store = std::make_unique<qtk::MatrixStore>(dir, jobs);
    }
    return *store;
  }
};

namespace {

using qtk::Json;
using qtk::Partition;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
qtk_status guarded(qtk_context* ctx, char** out, Fn&& fn) {
  if (!ctx) return QTK_INVALID_ARGUMENT;
  ctx->last_error.clear();
  if (!out) {
    ctx->last_error = "output pointer is null";
    return QTK_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    *out = copy_string(fn());
    return QTK_OK;
  } catch (const qtk::DomainError& e) {
    ctx->last_error = e.what();
    return QTK_DOMAIN_ERROR;
  } catch (const qtk::ConsistencyError& e) {
    ctx->last_error = e.what();
    return QTK_INTERNAL_ERROR;
  } catch (const Json::exception& e) {
    ctx->last_error = e.what();
    return QTK_DOMAIN_ERROR;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return QTK_INTERNAL_ERROR;
  }
}

Partition parse(const char* text) {
  if (!text) throw qtk::DomainError("partition argument is null");
  return Partition::parse(text);
}

void check_format(qtk_format f) {
  if (f != QTK_FORMAT_JSON && f != QTK_FORMAT_LATEX && f != QTK_FORMAT_PRETTY) throw qtk::DomainError("unknown format");
}

std::string render_poly(const qtk::QtPolynomial& p, qtk_format f) {
  return f == QTK_FORMAT_LATEX ? qtk::to_latex(p) : qtk::to_pretty(p);
}

std::string shape(const Partition& p) { return "(" + p.to_string() + ")"; }

qtk::QtPolynomial k_value(qtk_context* ctx, const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw qtk::DomainError("|lambda| != |mu|");
  if (!qtk::dominance_leq(mu, lambda)) return {};
  // Small degrees go through the cached full matrices; larger ones only
  // build the dominance interval between mu and lambda.
  if (lambda.size() <= 7) return qtk::k_coeff(*ctx->matrices().get(lambda.size()), lambda, mu);
  return qtk::k_coeff(qtk::interval_matrices(lambda, mu, ctx->jobs), lambda, mu);
}

std::string matrix_latex(const qtk::TriangularMatrix& m) {
  std::string s = "\\begin{tabular}{c|" + std::string(m.dimension(), 'c') + "}\n";
  for (const auto& p : m.index()) s += " & " + p.compact();
  s += " \\\\\n\\hline\n";
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    s += m.index()[i].compact();
    for (std::size_t j = 0; j < m.dimension(); ++j) s += " & $" + qtk::to_latex(m.at(i, j)) + "$";
    s += " \\\\\n";
  }
  return s + "\\end{tabular}\n";
}

std::string matrix_pretty(const qtk::TriangularMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      s += shape(m.index()[i]) + " " + shape(m.index()[j]) + ": " + qtk::to_pretty(m.at(i, j)) + "\n";
    }
  }
  return s;
}

std::string verdict_pretty(const qtk::HaglundVerdict& v) {
  std::string s = "lambda " + shape(v.lambda) + "  mu " + shape(v.mu) + "  k " + std::to_string(v.k) + "\n";
  s += "quotient: " + (v.quotient ? qtk::to_pretty(*v.quotient) : std::string("not a polynomial")) + "\n";
  s += std::string("verdict: ") + (v.is_nonnegative ? "nonnegative" : "VIOLATION") + (v.is_zero ? " (zero)" : "") + "\n";
  s += "coverage: " + qtk::to_string(v.coverage) + "\nroute: " + v.route + "\n";
  return s;
}

}  // namespace

extern "C" {

const char* qtk_version(void) { return "1.0.0"; }

qtk_status qtk_context_new(qtk_context** out) {
  if (!out) return QTK_INVALID_ARGUMENT;
  try {
    *out = new qtk_context();
  } catch (...) {
    *out = nullptr;
    return QTK_INTERNAL_ERROR;
  }
  return QTK_OK;
}

void qtk_context_free(qtk_context* ctx) { delete ctx; }

const char* qtk_last_error(const qtk_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void qtk_string_free(char* s) { std::free(s); }

qtk_status qtk_set_jobs(qtk_context* ctx, int jobs) {
  if (!ctx) return QTK_INVALID_ARGUMENT;
  if (jobs < 0) {
    ctx->last_error = "jobs must be nonnegative";
    return QTK_INVALID_ARGUMENT;
  }
  ctx->jobs = jobs == 0 ? qtk::default_jobs() : jobs;
  ctx->store.reset();
  return QTK_OK;
}

qtk_status qtk_set_cache_dir(qtk_context* ctx, const char* dir) {
  if (!ctx) return QTK_INVALID_ARGUMENT;
  ctx->cache_dir = dir ? dir : "";
  ctx->store.reset();
  return QTK_OK;
}

qtk_status qtk_kcoeff(qtk_context* ctx, const char* lambda, const char* mu, qtk_format format, char** out) {
  return guarded(ctx, out, [&] {
    check_format(format);
    const Partition l = parse(lambda);
    const Partition m = parse(mu);
    const auto k = k_value(ctx, l, m);
    if (format == QTK_FORMAT_JSON) {
      return Json{{"lambda", qtk::to_json(l)}, {"mu", qtk::to_json(m)}, {"k", qtk::to_json(k)}}.dump() + "\n";
    }
    return render_poly(k, format) + "\n";
  });
}

qtk_status qtk_matrix(qtk_context* ctx, int n, const char* which, qtk_format format, char** out) {
  return guarded(ctx, out, [&] {
    check_format(format);
    if (n < 0) throw qtk::DomainError("degree must be nonnegative");
    const auto kind = qtk::matrix_kind_from_string(which ? which : "");
    const auto& m = ctx->matrices().get(n)->get(kind);
    if (format == QTK_FORMAT_JSON) return qtk::matrix_to_json(m, kind, n).dump() + "\n";
    if (format == QTK_FORMAT_LATEX) return matrix_latex(m);
    return matrix_pretty(m);
  });
}

qtk_status qtk_reduce(qtk_context* ctx, const char* lambda, const char* mu, qtk_format format, char** out) {
  return guarded(ctx, out, [&] {
    check_format(format);
    const Partition l = parse(lambda);
    const Partition m = parse(mu);
    const auto tree = qtk::decompose_irreducible(l, m);
    const auto value = qtk::replay(tree, [&](const Partition& a, const Partition& b) {
      const auto cls = qtk::classify_bz(a, b);
      return cls.multiplicity_one() ? qtk::fast_k_multiplicity_one(a, b, cls) : k_value(ctx, a, b);
    });
    if (format == QTK_FORMAT_JSON) return Json{{"tree", qtk::to_json(tree)}, {"k", qtk::to_json(value)}}.dump() + "\n";
    if (format == QTK_FORMAT_LATEX) return qtk::to_latex(value) + "\n";
    return qtk::to_ascii(tree) + "k = " + qtk::to_pretty(value) + "\n";
  });
}

qtk_status qtk_haglund(qtk_context* ctx, const char* lambda, const char* mu, int k, qtk_format format, char** out) {
  return guarded(ctx, out, [&] {
    check_format(format);
    const auto v = qtk::check_pair(parse(lambda), parse(mu), k, ctx->matrices());
    if (format == QTK_FORMAT_JSON) return qtk::to_json(v).dump() + "\n";
    if (format == QTK_FORMAT_LATEX) return (v.quotient ? qtk::to_latex(*v.quotient) : std::string("\\text{not a polynomial}")) + "\n";
    return verdict_pretty(v);
  });
}

qtk_status qtk_scan(qtk_context* ctx, int max_n, int max_k, qtk_format format, char** out, long long* violations) {
  return guarded(ctx, out, [&] {
    check_format(format);
    const auto report = qtk::scan(max_n, max_k, ctx->matrices(), ctx->jobs);
    if (violations) *violations = report.summary.violations;
    if (format == QTK_FORMAT_JSON) return qtk::to_json(report).dump() + "\n";
    const auto& s = report.summary;
    std::ostringstream os;
    os << "pairs " << s.pairs << ", verdicts " << s.verdicts << "\n"
       << "theorem_row_or_col " << s.theorem_row_or_col << ", theorem_mult_one " << s.theorem_mult_one
       << ", conjecture_only " << s.conjecture_only << "\n"
       << "violations " << s.violations << " (on theorem-covered pairs " << s.theorem_violations << ")\n";
    for (const auto& v : report.verdicts) {
      if (!v.is_nonnegative) os << "violation: " << shape(v.lambda) << " " << shape(v.mu) << " k=" << v.k << "\n";
    }
    return os.str();
  });
}

qtk_status qtk_oracle_verify(qtk_context* ctx, int max_n, qtk_format format, char** out, int* all_passed) {
  return guarded(ctx, out, [&] {
    check_format(format);
    if (max_n < 0) throw qtk::DomainError("max-n must be nonnegative");
    Json rows = Json::array();
    bool all = true;
    std::ostringstream pretty;
    pretty << "n  k1_match  orthogonal  qn_plethysm\n";
    for (int n = 1; n <= max_n; ++n) {
      const auto gs = qtk::oracle::gram_schmidt_P(n);
      const auto set = ctx->matrices().get(n);
      bool match = true;
      for (std::size_t i = 0; i < gs.index.size(); ++i) {
        for (std::size_t j = 0; j < gs.index.size(); ++j) match = match && gs.K1[i][j] == set->K1.at(i, j);
      }
      const bool orth = qtk::oracle::audit_orthogonality(gs);
      const bool qn = qtk::oracle::check_Qn_plethysm(gs);
      all = all && match && orth && qn;
      rows.push_back(Json{{"n", n}, {"k1_match", match}, {"orthogonal", orth}, {"qn_plethysm", qn}});
      pretty << n << "  " << (match ? "pass" : "FAIL") << "      " << (orth ? "pass" : "FAIL") << "        "
             << (qn ? "pass" : "FAIL") << "\n";
    }
    if (all_passed) *all_passed = all ? 1 : 0;
    if (format == QTK_FORMAT_JSON) return Json{{"max_n", max_n}, {"passed", all}, {"degrees", rows}}.dump() + "\n";
    return pretty.str();
  });
}

qtk_status qtk_fstat(qtk_context* ctx, const char* mu, int m, int n, qtk_format format, char** out) {
  return guarded(ctx, out, [&] {
    check_format(format);
    const Partition p = parse(mu);
    const auto f = qtk::f_stat(p);
    const auto rows = qtk::f_stat_rows(p);
    Json j{{"mu", qtk::to_json(p)}, {"f", qtk::to_json(f)}, {"rows_formula_agrees", f == rows}};
    std::string text = "f = " + render_poly(f, format) + "\nrow formula agrees: " + (f == rows ? "yes" : "no") + "\n";
    if (m > 0 && n > 0) {
      const auto check = qtk::check_fmu_complement(p, m, n);
      Json c{{"m", m},
             {"n", n},
             {"mu_c", qtk::to_json(qtk::complement(p, m, n + 1))},
             {"difference", qtk::to_json(check.direct)},
             {"closed_form_applies", check.closed_form_applies},
             {"nonnegativity_applies", check.nonnegativity_applies}};
      text += "f_mu - f_mu^c = " + render_poly(check.direct, format) + "\n";
      if (check.closed_form) {
        c["closed_form_agrees"] = *check.closed_form == check.direct;
        text += std::string("closed form agrees: ") + (*check.closed_form == check.direct ? "yes" : "no") + "\n";
      }
      if (check.nonnegativity_applies) {
        const bool nonneg = std::all_of(check.direct.terms().begin(), check.direct.terms().end(),
                                        [](const qtk::Term& x) { return x.coeff > 0; });
        c["nonnegative"] = nonneg;
        text += std::string("nonnegative: ") + (nonneg ? "yes" : "no") + "\n";
      }
      if (!check.note.empty()) {
        c["note"] = check.note;
        text += "note: " + check.note + "\n";
      }
      j["complement"] = std::move(c);
    }
    if (format == QTK_FORMAT_JSON) return j.dump() + "\n";
    return text;
  });
}

}  // extern "C"
