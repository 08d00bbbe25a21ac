#include "hypersurf/block_search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "hypersurf/error.hpp"
#include "hypersurf/knot_forms.hpp"
#include "hypersurf/linalg.hpp"
#include "hypersurf/milnor_fiber.hpp"

namespace hypersurf {

namespace {

void check_shape(const IntMatrix& form, const BlockCertificate& cert) {
  if (!form.is_square()) throw Error(Errc::NonSquare, "form must be square");
  if (cert.r == 0) throw Error(Errc::InvalidArgument, "certificate rank must be positive");
  if (cert.ambient_rank != form.rows())
    throw Error(Errc::DimensionMismatch, "certificate ambient rank differs from form size");
  if (cert.x.size() != cert.r || cert.x_prime.size() != cert.r)
    throw Error(Errc::DimensionMismatch, "certificate must hold r vectors on each side");
  for (const auto* side : {&cert.x, &cert.x_prime})
    for (const auto& v : *side)
      if (v.size() != form.rows()) throw Error(Errc::DimensionMismatch, "certificate vector has wrong length");
}

IntMatrix basis_matrix(const BlockCertificate& cert) {
  std::vector<IntVector> cols(cert.x);
  cols.insert(cols.end(), cert.x_prime.begin(), cert.x_prime.end());
  return IntMatrix::from_columns(cols);
}

// Small dense copy of the form for the enumerator.
struct Dense {
  std::size_t n = 0;
  std::vector<std::int64_t> a;
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

using Vec = std::vector<std::int64_t>;

Dense to_dense(const IntMatrix& form, long bound) {
  Dense d{form.rows(), {}};
  d.a.reserve(d.n * d.n);
  Integer max_abs = 0;
  for (const Integer& e : form.entries()) {
    if (mpz_cmpabs(e.get_mpz_t(), max_abs.get_mpz_t()) > 0) max_abs = abs(e);
    d.a.push_back(e.fits_slong_p() ? e.get_si() : 0);
  }
  // Every partial sum is bounded by 2·max|θ|·B²·n².
  const Integer worst = 2 * max_abs * bound * bound * Integer(d.n) * Integer(d.n);
  if (cmp(worst, Integer(std::numeric_limits<std::int64_t>::max() / 4)) > 0)
    throw Error(Errc::InvalidArgument, "form entries or coefficient bound too large for search");
  return d;
}

class Budget {
 public:
  explicit Budget(std::uint64_t cap, std::function<bool()> cancel = {}) : cap_(cap), cancel_(std::move(cancel)) {}

  bool charge() {
    if (stopped()) return false;
    if (used_ >= cap_) {
      exceeded_ = true;
      return false;
    }
    ++used_;
    if ((used_ & 0xfff) == 0 && cancel_ && cancel_()) cancelled_ = true;
    return !cancelled_;
  }
  bool stopped() const { return exceeded_ || cancelled_; }
  bool exceeded() const { return exceeded_; }
  bool cancelled() const { return cancelled_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t cap_;
  std::function<bool()> cancel_;
  bool exceeded_ = false;
  bool cancelled_ = false;
};

// Resumable depth-first enumeration of nonzero x in [−B, B]^n with first
// nonzero coordinate positive and θ(x, x) = 0, in canonical order. Partial
// assignments are cut when the fixed part of θ(x, x) exceeds what the
// remaining coordinates can cancel.
class Enumerator {
 public:
  Enumerator(const Dense& f, long bound, Budget& budget) : n_(f.n), bound_(bound), budget_(budget) {
    for (long v = 0; v <= bound; ++v) {
      values_.push_back(v);
      if (v != 0) values_.push_back(-v);
    }
    diag_.resize(n_);
    pairs_.resize(n_);
    reach_tail_.assign(n_ + 1, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      diag_[a] = f(a, a);
      for (std::size_t b = a + 1; b < n_; ++b)
        if (const std::int64_t s = f(a, b) + f(b, a); s != 0) pairs_[a].emplace_back(b, s);
    }
    for (std::size_t p = n_; p-- > 0;) {
      std::int64_t row = std::llabs(diag_[p]);
      for (const auto& [b, s] : pairs_[p]) row += std::llabs(s);
      reach_tail_[p] = reach_tail_[p + 1] + bound * bound * row;
    }
    x_.assign(n_, 0);
    choice_.assign(n_, -1);
    coef_.assign(n_, 0);
    quad_.assign(n_ + 1, 0);
    leading_zero_.assign(n_ + 1, true);
  }

  bool next(Vec& out) {
    while (pos_ >= 0) {
      const auto p = static_cast<std::size_t>(pos_);
      if (x_[p] != 0) apply(p, -x_[p]);
      x_[p] = 0;
      if (++choice_[p] == static_cast<int>(values_.size())) {
        choice_[p] = -1;
        --pos_;
        continue;
      }
      const std::int64_t v = values_[choice_[p]];
      if (leading_zero_[p] && v < 0) continue;
      if (!budget_.charge()) {
        pos_ = -1;
        return false;
      }

      const std::int64_t q = quad_[p] + diag_[p] * v * v + coef_[p] * v;
      if (v != 0) {
        apply(p, v);
        x_[p] = v;
      }
      std::int64_t reach = reach_tail_[p + 1];
      for (std::size_t b = p + 1; b < n_; ++b) reach += bound_ * std::llabs(coef_[b]);
      if (std::llabs(q) > reach) continue;

      const bool zero = leading_zero_[p] && v == 0;
      if (p + 1 == n_) {
        if (zero || q != 0) continue;
        out = x_;
        return true;
      }
      quad_[p + 1] = q;
      leading_zero_[p + 1] = zero;
      ++pos_;
    }
    return false;
  }

 private:
  void apply(std::size_t p, std::int64_t v) {
    for (const auto& [b, s] : pairs_[p]) coef_[b] += s * v;
  }

  std::size_t n_;
  long bound_;
  Budget& budget_;
  Vec values_;
  Vec diag_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> pairs_;
  Vec reach_tail_;  // bound on the quadratic terms among coordinates ≥ p

  long pos_ = 0;
  Vec x_;
  std::vector<int> choice_;
  Vec coef_;
  Vec quad_;
  std::vector<bool> leading_zero_;
};

// θᵀx and θx, so that θ(x, y) = left·y and θ(y, x) = right·y.
std::pair<Vec, Vec> pairings(const Dense& f, const Vec& x) {
  Vec left(f.n, 0), right(f.n, 0);
  for (std::size_t a = 0; a < f.n; ++a)
    for (std::size_t b = 0; b < f.n; ++b) {
      left[b] += x[a] * f(a, b);
      right[a] += f(a, b) * x[b];
    }
  return {left, right};
}

// Solves for x'_1..x'_k given x_1..x_k, or nullopt if some x'_j has no
// integral solution.
std::optional<std::vector<IntVector>> complete(const Dense& f, const std::vector<Vec>& xs) {
  const std::size_t k = xs.size();
  std::vector<IntVector> left, right;
  for (const Vec& x : xs) {
    const auto [l, r] = pairings(f, x);
    left.emplace_back(l.begin(), l.end());
    right.emplace_back(r.begin(), r.end());
  }
  std::vector<IntVector> sols;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<IntVector> rows{left[j]};
    IntVector rhs{1};
    for (std::size_t i = j + 1; i < k; ++i) {
      rows.push_back(left[i]);
      rhs.emplace_back(0);
    }
    for (std::size_t i = j; i < k; ++i) {
      rows.push_back(right[i]);
      rhs.emplace_back(0);
    }
    auto s = solve_integer(IntMatrix::from_rows(rows), rhs);
    if (!s) return std::nullopt;
    sols.push_back(std::move(*s));
  }
  return sols;
}

// Level-one candidates: every x whose own dual system is solvable. Any x_i
// of a certificate is one of them, since the system for x'_i contains
// θ(x_i, x'_i) = 1 and θ(x'_i, x_i) = 0.
struct Pool {
  std::size_t n = 0;
  std::vector<std::int8_t> values;
  std::vector<std::uint64_t> charged;  // scan nodes spent up to each entry
  std::vector<IntVector> duals;
  bool complete = false;

  std::size_t size() const { return charged.size(); }
  Vec at(std::size_t i) const { return Vec(values.begin() + i * n, values.begin() + (i + 1) * n); }
  std::int64_t dot(const Vec& u, std::size_t i) const {
    std::int64_t s = 0;
    const std::int8_t* row = &values[i * n];
    for (std::size_t a = 0; a < n; ++a) s += u[a] * row[a];
    return s;
  }
};

constexpr std::size_t kPoolBytes = std::size_t{1} << 30;

Pool scan(const Dense& f, long bound, std::size_t stop_after, Budget& budget) {
  Pool pool;
  pool.n = f.n;
  Enumerator e(f, bound, budget);
  Vec x;
  while (pool.size() < stop_after && e.next(x)) {
    auto s = complete(f, {x});
    if (!s) continue;
    if (pool.values.size() + f.n > kPoolBytes) return pool;
    pool.values.insert(pool.values.end(), x.begin(), x.end());
    pool.charged.push_back(budget.used());
    pool.duals.push_back(std::move(s->front()));
  }
  pool.complete = !budget.exceeded();
  return pool;
}

// Depth-first search over pool entries orthogonal to the chosen ones.
// Each orthogonality test is one node.
bool descend(const Dense& f, const Pool& pool, const std::vector<std::uint32_t>& allowed, std::size_t r,
             std::vector<Vec>& xs, Budget& budget, std::vector<IntVector>& sols) {
  const auto [left, right] = pairings(f, xs.back());
  std::vector<std::uint32_t> next;
  for (std::uint32_t i : allowed) {
    if (!budget.charge()) return false;
    if (pool.dot(left, i) == 0 && pool.dot(right, i) == 0) next.push_back(i);
  }
  for (std::uint32_t i : next) {
    if (!budget.charge()) return false;
    xs.push_back(pool.at(i));
    if (auto s = complete(f, xs)) {
      if (xs.size() == r) {
        sols = std::move(*s);
        return true;
      }
      if (descend(f, pool, next, r, xs, budget, sols)) return true;
    }
    xs.pop_back();
  }
  return false;
}

struct Outcome {
  bool success = false;
  std::uint64_t nodes = 0;
  std::vector<Vec> xs;
  std::vector<IntVector> sols;
};

// Runs the subtree of each first vector on worker threads and merges the
// results in pool order, charging nodes as a sequential search would.
class Driver {
 public:
  Driver(const Dense& f, const Pool& pool, const SearchOptions& o)
      : f_(f), pool_(pool), o_(o), results_(pool.size()) {
    all_.resize(pool.size());
    for (std::size_t i = 0; i < all_.size(); ++i) all_[i] = static_cast<std::uint32_t>(i);
  }

  void work() {
    while (true) {
      const std::size_t idx = next_.fetch_add(1);
      if (idx >= pool_.size() || idx > best_.load() || idx > stop_at_.load()) return;
      const std::uint64_t base = pool_.charged.back();
      Budget budget(o_.node_budget > base ? o_.node_budget - base : 0,
                    [&, idx] { return idx > best_.load() || idx > stop_at_.load(); });
      Outcome out;
      out.xs.push_back(pool_.at(idx));
      out.success = descend(f_, pool_, all_, o_.r, out.xs, budget, out.sols);
      out.nodes = budget.used();
      if (budget.cancelled()) continue;

      std::lock_guard lock(mutex_);
      if (out.success) {
        std::size_t b = best_.load();
        while (idx < b && !best_.compare_exchange_weak(b, idx)) {}
      }
      results_[idx] = std::move(out);
      while (prefix_ < results_.size() && results_[prefix_]) {
        const Outcome& o = *results_[prefix_];
        if (base + prefix_sub_ + o.nodes > o_.node_budget || o.success) {
          stop_at_.store(prefix_);
          break;
        }
        prefix_sub_ += o.nodes;
        ++prefix_;
      }
    }
  }

  SearchResult finish() const {
    SearchResult res;
    const std::uint64_t base = pool_.charged.empty() ? 0 : pool_.charged.back();
    std::uint64_t sub = 0;
    for (std::size_t i = 0; i < results_.size() && results_[i]; ++i) {
      const Outcome& o = *results_[i];
      if (base + sub + o.nodes > o_.node_budget) break;
      sub += o.nodes;
      if (o.success) {
        res.status = SearchStatus::Found;
        res.certificate = make_certificate(o.xs, o.sols);
        res.nodes = base + sub;
        return res;
      }
      if (i + 1 == results_.size()) {
        res.status = SearchStatus::ProvenEmpty;
        res.nodes = base + sub;
        return res;
      }
    }
    res.status = SearchStatus::BudgetExhausted;
    res.nodes = o_.node_budget;
    return res;
  }

  BlockCertificate make_certificate(const std::vector<Vec>& xs, const std::vector<IntVector>& sols) const {
    BlockCertificate cert;
    cert.r = o_.r;
    cert.ambient_rank = f_.n;
    for (const Vec& v : xs) {
      IntVector iv;
      for (std::int64_t e : v) iv.emplace_back(static_cast<long>(e));
      cert.x.push_back(std::move(iv));
    }
    cert.x_prime = sols;
    return cert;
  }

 private:
  const Dense& f_;
  const Pool& pool_;
  const SearchOptions& o_;
  std::vector<std::uint32_t> all_;
  std::mutex mutex_;
  std::vector<std::optional<Outcome>> results_;
  std::atomic<std::size_t> next_{0};
  std::atomic<std::size_t> best_{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> stop_at_{std::numeric_limits<std::size_t>::max()};
  std::size_t prefix_ = 0;
  std::uint64_t prefix_sub_ = 0;
};

nlohmann::json vector_json(const IntVector& v) {
  auto arr = nlohmann::json::array();
  for (const Integer& e : v) {
    if (e.fits_slong_p())
      arr.push_back(e.get_si());
    else
      arr.push_back(e.get_str());
  }
  return arr;
}

std::vector<IntVector> vectors_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw Error(Errc::Parse, std::string("certificate needs array '") + key + "'");
  std::vector<IntVector> out;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw Error(Errc::Parse, "certificate vectors must be arrays");
    IntVector v;
    for (const auto& e : row) {
      if (e.is_number_integer())
        v.emplace_back(e.get<long>());
      else if (e.is_string()) {
        Integer z;
        if (z.set_str(e.get<std::string>(), 10) != 0) throw Error(Errc::Parse, "bad integer in certificate");
        v.push_back(z);
      } else
        throw Error(Errc::Parse, "certificate entries must be integers");
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ProvenEmpty: return "proven_empty";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

IntMatrix certificate_gram(const IntMatrix& form, const BlockCertificate& cert) {
  check_shape(form, cert);
  const IntMatrix c = basis_matrix(cert);
  return c.transpose() * form * c;
}

bool verify_block_certificate(const IntMatrix& form, const BlockCertificate& cert) {
  check_shape(form, cert);
  const IntMatrix c = basis_matrix(cert);
  if (rank(c) < 2 * cert.r) throw Error(Errc::RankDeficient, "certificate vectors are linearly dependent");
  const IntMatrix g = c.transpose() * form * c;
  const std::size_t r = cert.r;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (sgn(g(i, j)) != 0) return false;
      if (i == j && g(i, r + j) != 1) return false;
      if (j < i && sgn(g(i, r + j)) != 0) return false;
      if (i <= j && sgn(g(r + i, j)) != 0) return false;
    }
  return true;
}

SearchResult search_block(const IntMatrix& form, const SearchOptions& options) {
  if (!form.is_square()) throw Error(Errc::NonSquare, "form must be square");
  if (options.r < 1) throw Error(Errc::InvalidArgument, "block rank must be positive");
  if (options.coeff_bound < 1 || options.coeff_bound > 127)
    throw Error(Errc::InvalidArgument, "coefficient bound must lie in [1, 127]");
  if (2 * options.r > form.rows()) return {SearchStatus::ProvenEmpty, std::nullopt, 0};

  const Dense f = to_dense(form, options.coeff_bound);
  Budget budget(options.node_budget);
  const std::size_t stop_after = options.r == 1 ? 1 : std::numeric_limits<std::size_t>::max();
  const Pool pool = scan(f, options.coeff_bound, stop_after, budget);
  if (options.r == 1 && pool.size() == 1) {
    Driver driver(f, pool, options);
    return {SearchStatus::Found, driver.make_certificate({pool.at(0)}, pool.duals), pool.charged[0]};
  }
  if (!pool.complete) return {SearchStatus::BudgetExhausted, std::nullopt, options.node_budget};
  if (pool.size() == 0) return {SearchStatus::ProvenEmpty, std::nullopt, budget.used()};

  Driver driver(f, pool, options);
  const unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::jthread> workers;
  for (unsigned t = 1; t < threads; ++t) workers.emplace_back([&] { driver.work(); });
  driver.work();
  workers.clear();
  return driver.finish();
}

BlockCertificate lift_certificate(const BlockCertificate& cert, long d) {
  if (d < 3) throw Error(Errc::DegreeTooSmall, "degree must be at least 3");
  const FiberForms forms = linking_form(d);
  const IntMatrix& theta = forms.theta.matrix;
  bool valid = false;
  try {
    valid = verify_block_certificate(theta, cert);
  } catch (const Error&) {
    valid = false;
  }
  if (!valid) throw Error(Errc::InvalidCertificate, "certificate does not verify on the degree's Seifert form");

  const std::size_t m = static_cast<std::size_t>(d - 1);
  const std::size_t n = cert.ambient_rank;
  auto lift = [&](const std::vector<IntVector>& side) {
    std::vector<IntVector> out;
    for (const IntVector& v : side)
      for (std::size_t k = 0; k < m; ++k) {
        IntVector w(n * m);
        for (std::size_t a = 0; a < n; ++a) w[a * m + k] = v[a];
        out.push_back(std::move(w));
      }
    return out;
  };
  BlockCertificate out;
  out.d = d;
  out.r = cert.r * m;
  out.ambient_rank = n * m;
  out.x = lift(cert.x);
  out.x_prime = lift(cert.x_prime);
  return out;
}

nlohmann::json to_json(const BlockCertificate& cert) {
  nlohmann::json j;
  j["d"] = cert.d;
  j["r"] = cert.r;
  j["ambient_rank"] = cert.ambient_rank;
  j["x"] = nlohmann::json::array();
  j["x_prime"] = nlohmann::json::array();
  for (const auto& v : cert.x) j["x"].push_back(vector_json(v));
  for (const auto& v : cert.x_prime) j["x_prime"].push_back(vector_json(v));
  return j;
}

BlockCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(Errc::Parse, "certificate must be a JSON object");
  for (const char* key : {"d", "r", "ambient_rank"})
    if (!j.contains(key) || !j[key].is_number_integer())
      throw Error(Errc::Parse, std::string("certificate needs integer '") + key + "'");
  if (j["r"].get<long>() < 0 || j["ambient_rank"].get<long>() < 0)
    throw Error(Errc::Parse, "certificate sizes must be non-negative");
  BlockCertificate cert;
  cert.d = j["d"].get<long>();
  cert.r = j["r"].get<std::size_t>();
  cert.ambient_rank = j["ambient_rank"].get<std::size_t>();
  cert.x = vectors_from_json(j, "x");
  cert.x_prime = vectors_from_json(j, "x_prime");
  return cert;
}

}  // namespace hypersurf
