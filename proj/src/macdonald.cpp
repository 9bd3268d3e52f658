#include "qtkostka/macdonald.hpp"

#include <fstream>

#include "qtkostka/errors.hpp"
#include "qtkostka/parallel.hpp"
#include "qtkostka/tableaux.hpp"

namespace qtk {

FactorList c_factors(const Partition& mu) {
  FactorList out;
  for (const auto& x : mu.cells()) {
    const auto s = diagram_stats(mu, x);
    out.push_back({s.arm, s.leg + 1, 1});
  }
  return canonical_factors(std::move(out));
}

FactorList c_prime_factors(const Partition& mu) {
  FactorList out;
  for (const auto& x : mu.cells()) {
    const auto s = diagram_stats(mu, x);
    out.push_back({s.arm + 1, s.leg, 1});
  }
  return canonical_factors(std::move(out));
}

NormalizationConstants normalization(const Partition& mu) {
  const FactorList c = c_factors(mu);
  const FactorList cp = c_prime_factors(mu);
  return {expand_factors(c), expand_factors(cp), QtRational::from_factors(c, cp)};
}

QtRational psi_strip(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(lambda, mu)) {
    throw DomainError("(" + lambda.to_string() + ")/(" + mu.to_string() + ") is not a horizontal strip");
  }
  const Partition lc = lambda.conjugate();
  const Partition mc = mu.conjugate();
  FactorList num;
  FactorList den;
  for (const auto& x : mu.cells()) {
    if (lambda.part(x.row) == mu.part(x.row) || lc.part(x.col) != mc.part(x.col)) continue;
    const auto sm = diagram_stats(mu, x);
    const auto sl = diagram_stats(lambda, x);
    num.push_back({sm.arm, sm.leg + 1, 1});
    den.push_back({sm.arm + 1, sm.leg, 1});
    num.push_back({sl.arm + 1, sl.leg, 1});
    den.push_back({sl.arm, sl.leg + 1, 1});
  }
  return QtRational::from_factors(num, den);
}

QtRational k1_entry(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() || !dominance_leq(mu, lambda)) return {};
  if (lambda == mu) return 1;
  // Forward pass over the chain: each layer maps an intermediate shape to the
  // summed weight of all tableau prefixes ending there.
  std::map<Partition, QtRational> layer{{Partition{}, QtRational(1)}};
  const Partition lc = lambda.conjugate();
  for (int step = 1; step <= mu.length(); ++step) {
    std::map<Partition, QtRational> next_layer;
    const int left = mu.length() - step;
    for (const auto& [shape, weight] : layer) {
      for (auto& next : add_horizontal_strips(shape, mu.part(step), lambda)) {
        const Partition nc = next.conjugate();
        bool ok = true;
        for (int c = 1; c <= lc.length() && ok; ++c) ok = lc.part(c) - nc.part(c) <= left;
        if (!ok) continue;
        QtRational w = weight * psi_strip(next, shape);
        auto [it, inserted] = next_layer.try_emplace(std::move(next), w);
        if (!inserted) it->second += w;
      }
    }
    layer = std::move(next_layer);
  }
  auto it = layer.find(lambda);
  return it == layer.end() ? QtRational{} : it->second;
}

// ---------------------------------------------------------------------------
// TriangularMatrix

TriangularMatrix::TriangularMatrix(std::vector<Partition> index)
    : index_(std::move(index)), entries_(index_.size() * index_.size()) {}

TriangularMatrix TriangularMatrix::identity(std::vector<Partition> index) {
  TriangularMatrix m(std::move(index));
  for (std::size_t i = 0; i < m.dimension(); ++i) m.at(i, i) = 1;
  return m;
}

std::optional<std::size_t> TriangularMatrix::position(const Partition& p) const {
  // Descending lex order: binary search with reversed comparison.
  auto it = std::lower_bound(index_.begin(), index_.end(), p, [](const Partition& a, const Partition& b) { return a > b; });
  if (it == index_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - index_.begin());
}

const QtRational& TriangularMatrix::operator()(const Partition& lambda, const Partition& mu) const {
  auto i = position(lambda);
  auto j = position(mu);
  if (!i || !j) throw DomainError("(" + lambda.to_string() + "), (" + mu.to_string() + ") outside the matrix index");
  return at(*i, *j);
}

bool TriangularMatrix::is_unitriangular() const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    for (std::size_t j = 0; j < dimension(); ++j) {
      const QtRational& e = at(i, j);
      if (i == j) {
        if (!(e == QtRational(1))) return false;
      } else if (!e.is_zero() && !dominance_leq(index_[j], index_[i])) {
        return false;
      }
    }
  }
  return true;
}

TriangularMatrix TriangularMatrix::inverse(int jobs) const {
  TriangularMatrix inv(index_);
  const std::size_t d = dimension();
  // Rows of N = M^{-1} are independent: N_ij = -sum_{i<=k<j} N_ik M_kj.
  parallel_for(d, jobs, [&](std::size_t i) {
    inv.at(i, i) = 1;
    for (std::size_t j = i + 1; j < d; ++j) {
      if (!dominance_leq(index_[j], index_[i])) continue;
      QtRational s;
      for (std::size_t k = i; k < j; ++k) {
        if (inv.at(i, k).is_zero() || at(k, j).is_zero()) continue;
        s += inv.at(i, k) * at(k, j);
      }
      inv.at(i, j) = -s;
    }
  });
  return inv;
}

TriangularMatrix TriangularMatrix::multiply(const TriangularMatrix& rhs, int jobs) const {
  if (index_ != rhs.index_) throw DomainError("matrix indices differ");
  TriangularMatrix out(index_);
  const std::size_t d = dimension();
  parallel_for(d, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < d; ++j) {
      QtRational s;
      for (std::size_t k = 0; k < d; ++k) {
        if (at(i, k).is_zero() || rhs.at(k, j).is_zero()) continue;
        s += at(i, k) * rhs.at(k, j);
      }
      out.at(i, j) = std::move(s);
    }
  });
  return out;
}

TriangularMatrix TriangularMatrix::swap_qt() const {
  TriangularMatrix out(index_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].swap_qt();
  return out;
}

bool operator==(const TriangularMatrix& a, const TriangularMatrix& b) {
  if (a.index_ != b.index_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (!(a.entries_[i] == b.entries_[i])) return false;
  }
  return true;
}

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::K: return "k";
    case MatrixKind::K1: return "k1";
    case MatrixKind::K1Inv: return "k1inv";
    case MatrixKind::K2: return "k2";
    case MatrixKind::K2Inv: return "k2inv";
  }
  return "?";
}

MatrixKind matrix_kind_from_string(const std::string& name) {
  for (auto kind : {MatrixKind::K, MatrixKind::K1, MatrixKind::K1Inv, MatrixKind::K2, MatrixKind::K2Inv}) {
    if (to_string(kind) == name) return kind;
  }
  throw DomainError("unknown matrix '" + name + "' (expected k, k1, k1inv, k2, k2inv)");
}

const TriangularMatrix& MatrixSet::get(MatrixKind kind) const {
  switch (kind) {
    case MatrixKind::K: return K;
    case MatrixKind::K1: return K1;
    case MatrixKind::K1Inv: return K1Inv;
    case MatrixKind::K2: return K2;
    case MatrixKind::K2Inv: return K2Inv;
  }
  return K;
}

TriangularMatrix& MatrixSet::get(MatrixKind kind) {
  return const_cast<TriangularMatrix&>(static_cast<const MatrixSet&>(*this).get(kind));
}

namespace {

MatrixSet build_on_index(int n, const std::vector<Partition>& index, int jobs) {
  MatrixSet set;
  set.n = n;
  set.K = TriangularMatrix(index);
  set.K1 = TriangularMatrix(index);
  const std::size_t d = index.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      if (dominance_leq(index[j], index[i])) pairs.emplace_back(i, j);
    }
  }
  parallel_for(pairs.size(), jobs, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    set.K.at(i, j) = QtRational(QtPolynomial(Integer(static_cast<long>(kostka_number(index[i], index[j])))));
    set.K1.at(i, j) = k1_entry(index[i], index[j]);
  });
  set.K1Inv = set.K1.inverse(jobs);
  set.K2 = set.K.multiply(set.K1Inv, jobs);
  set.K2Inv = set.K1.multiply(set.K.inverse(jobs), jobs);
  return set;
}

}  // namespace

MatrixSet build_matrices(int n, int jobs) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  return build_on_index(n, partitions_of(n), jobs);
}

MatrixSet interval_matrices(const Partition& lambda, const Partition& mu, int jobs) {
  if (lambda.size() != mu.size() || !dominance_leq(mu, lambda)) {
    throw DomainError("(" + mu.to_string() + ") is not dominated by (" + lambda.to_string() + ")");
  }
  std::vector<Partition> index;
  for (auto& nu : partitions_of(lambda.size())) {
    if (dominance_leq(mu, nu) && dominance_leq(nu, lambda)) index.push_back(std::move(nu));
  }
  return build_on_index(lambda.size(), index, jobs);
}

// ---------------------------------------------------------------------------
// Serialization and the disk cache

Json matrix_to_json(const TriangularMatrix& m, MatrixKind kind, int n) {
  Json index = Json::array();
  for (const auto& p : m.index()) index.push_back(to_json(p));
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"format_version", kCacheFormatVersion},
              {"n", n},
              {"which", to_string(kind)},
              {"index", std::move(index)},
              {"entries", std::move(entries)}};
}

TriangularMatrix matrix_from_json(const Json& j) {
  std::vector<Partition> index;
  for (const auto& p : j.at("index")) index.push_back(partition_from_json(p));
  TriangularMatrix m(std::move(index));
  const auto& entries = j.at("entries");
  if (entries.size() != m.dimension()) throw DomainError("matrix JSON has the wrong number of rows");
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (entries[i].size() != m.dimension()) throw DomainError("matrix JSON has a ragged row");
    for (std::size_t k = 0; k < m.dimension(); ++k) m.at(i, k) = rational_from_json(entries[i][k]);
  }
  return m;
}

MatrixStore::MatrixStore(std::optional<std::filesystem::path> cache_dir, int jobs)
    : dir_(std::move(cache_dir)), jobs_(std::max(1, jobs)) {}

namespace {

constexpr MatrixKind kAllKinds[] = {MatrixKind::K, MatrixKind::K1, MatrixKind::K1Inv, MatrixKind::K2, MatrixKind::K2Inv};

std::filesystem::path cache_file(const std::filesystem::path& dir, MatrixKind kind, int n) {
  return dir / (to_string(kind) + "_n" + std::to_string(n) + ".json");
}

}  // namespace

std::optional<MatrixSet> MatrixStore::load(int n) const {
  if (!dir_) return std::nullopt;
  MatrixSet set;
  set.n = n;
  for (auto kind : kAllKinds) {
    std::ifstream in(cache_file(*dir_, kind, n));
    if (!in) return std::nullopt;
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("format_version", -1) != kCacheFormatVersion ||
        j.value("n", -1) != n || j.value("which", "") != to_string(kind)) {
      return std::nullopt;
    }
    try {
      set.get(kind) = matrix_from_json(j);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (set.get(kind).index() != partitions_of(n)) return std::nullopt;
  }
  return set;
}

void MatrixStore::save(const MatrixSet& set) const {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec) return;  // an unwritable cache only costs recomputation
  for (auto kind : kAllKinds) {
    const auto path = cache_file(*dir_, kind, set.n);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << matrix_to_json(set.get(kind), kind, set.n).dump() << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
  }
}

std::shared_ptr<const MatrixSet> MatrixStore::get(int n) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto it = memory_.find(n); it != memory_.end()) return it->second;
  std::shared_ptr<const MatrixSet> set;
  if (auto loaded = load(n)) {
    set = std::make_shared<const MatrixSet>(std::move(*loaded));
  } else {
    set = std::make_shared<const MatrixSet>(build_matrices(n, jobs_));
    save(*set);
  }
  memory_.emplace(n, set);
  return set;
}

// ---------------------------------------------------------------------------
// Integral form coefficients and closed forms

QtPolynomial k_from_k2(const QtRational& k2, const Partition& mu) {
  const QtRational k = k2 * QtRational(expand_factors(c_prime_factors(mu)));
  auto poly = k.as_polynomial();
  if (!poly) throw ConsistencyError("k coefficient kept a denominator for mu = (" + mu.to_string() + ")");
  return *poly;
}

QtPolynomial k_coeff(const MatrixSet& set, const Partition& lambda, const Partition& mu) {
  return k_from_k2(set.K2(lambda, mu), mu);
}

QtPolynomial k_coeff(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("|lambda| != |mu|");
  if (!dominance_leq(mu, lambda)) return {};
  return k_coeff(interval_matrices(lambda, mu), lambda, mu);
}

QtRational k2_at_t_one(const QtPolynomial& k, const Partition& mu) {
  FactorList den;
  for (const auto& f : c_prime_factors(mu)) den.push_back({f.a, 0, f.multiplicity});
  return QtRational(k.at_t_one(), std::move(den));
}

QtPolynomial closed_form_row(const Partition& mu) {
  QtPolynomial r = QtPolynomial::monomial(0, n_stat(mu));
  for (const auto& x : mu.cells()) {
    const auto s = diagram_stats(mu, x);
    r *= QtPolynomial(1) - QtPolynomial::monomial(s.coarm + 1, -s.coleg);
  }
  return r;
}

QtPolynomial hook_kostka_foulkes_column(const Partition& lambda) {
  QtPolynomial num = QtPolynomial::monomial(0, n_stat(lambda.conjugate()));
  for (int i = 1; i <= lambda.size(); ++i) num *= t_integer(i);
  QtPolynomial den(1);
  for (const auto& x : lambda.cells()) den *= t_integer(diagram_stats(lambda, x).hook());
  auto q = num.exact_divide(den);
  if (!q) throw ConsistencyError("hook formula did not divide for (" + lambda.to_string() + ")");
  return *q;
}

QtPolynomial closed_form_column(const Partition& lambda) {
  QtPolynomial r = hook_kostka_foulkes_column(lambda);
  for (const auto& x : lambda.cells()) {
    r *= QtPolynomial(1) - QtPolynomial::monomial(1, -diagram_stats(lambda, x).content());
  }
  return r;
}

QtRational principal_specialization_P(const Partition& lambda, Monomial z) {
  QtPolynomial num(1);
  FactorList den;
  for (const auto& x : lambda.cells()) {
    const auto s = diagram_stats(lambda, x);
    num *= QtPolynomial::monomial(0, s.coleg) - QtPolynomial::monomial(s.coarm + z.eq, z.et);
    den.push_back({s.arm, s.leg + 1, 1});
  }
  return QtRational(std::move(num), std::move(den));
}

}  // namespace qtk
