#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypersurf/int_matrix.hpp"

namespace hypersurf {

/// Basis vectors x_1..x_r, x'_1..x'_r on which a bilinear form θ has the
/// block shape [[0, I + U], [L, *]] with U strictly upper and L strictly
/// lower triangular:
///   θ(x_i, x_j) = 0,  θ(x_i, x'_i) = 1,  θ(x_i, x'_j) = 0 for j < i,
///   θ(x'_i, x_j) = 0 for i ≤ j.
struct BlockCertificate {
  long d = 0;  // degree the certificate belongs to, 0 if unspecified
  std::size_t r = 0;
  std::size_t ambient_rank = 0;
  std::vector<IntVector> x;
  std::vector<IntVector> x_prime;
  friend bool operator==(const BlockCertificate&, const BlockCertificate&) = default;
};

/// Checks the block conditions above. Throws DimensionMismatch if the form
/// or any vector has the wrong size and RankDeficient if the 2r vectors are
/// linearly dependent.
bool verify_block_certificate(const IntMatrix& form, const BlockCertificate& cert);

/// Gram matrix Cᵀ·form·C for C = [x_1 … x_r x'_1 … x'_r].
IntMatrix certificate_gram(const IntMatrix& form, const BlockCertificate& cert);

enum class SearchStatus { Found, ProvenEmpty, BudgetExhausted };
const char* to_string(SearchStatus s);

struct SearchOptions {
  std::size_t r = 1;
  long coeff_bound = 1;
  std::uint64_t node_budget = 100'000'000;
  unsigned threads = 1;
};

struct SearchResult {
  SearchStatus status = SearchStatus::ProvenEmpty;
  std::optional<BlockCertificate> certificate;
  std::uint64_t nodes = 0;  // nodes charged against the budget
};

/// Bounded exhaustive search for a rank-r block certificate.
///
/// The x vectors range over [−coeff_bound, coeff_bound]^n in canonical order:
/// lexicographic by coordinate, each coordinate taking 0, 1, −1, 2, −2, ….
/// Only vectors whose first nonzero coordinate is positive are visited
/// (negating x_i and x'_i together preserves every condition). Each level
/// prunes on the linear conditions against earlier x's and a bound on the
/// quadratic condition θ(x, x) = 0; the x' vectors are completed by
/// solve_integer. The first certificate in canonical order is returned.
///
/// Level-one candidates are handed to worker threads in order and merged by
/// index; the node charge of a result is that of the sequential search, so
/// the outcome does not depend on the thread count.
SearchResult search_block(const IntMatrix& form, const SearchOptions& options);

/// Tensor lift x_i ⊗ e_k, x'_i ⊗ e_k ordered (i outer, k inner) onto
/// Θ_d = θ_d ⊗ Λ_{d−1}. Throws InvalidCertificate if cert does not verify on θ_d.
BlockCertificate lift_certificate(const BlockCertificate& cert, long d);

// Certificate JSON: {"d", "r", "ambient_rank", "x": [[ints]], "x_prime": [[ints]]}.
nlohmann::json to_json(const BlockCertificate& cert);
BlockCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace hypersurf
