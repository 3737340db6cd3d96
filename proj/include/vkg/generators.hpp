#pragma once

#include <string>
#include <vector>

namespace vkg {

/// Members of the Poincare set: d_t, d_{x^i}, boosts Omega_{0i} = t d_{x^i} + x^i d_t,
/// rotations Omega_{ij} = x^i d_{x^j} - x^j d_{x^i} (i < j). Indices i, j are 1-based.
enum class GeneratorKind { Dt, Dx, Boost, Rotation };

struct Generator {
  GeneratorKind kind = GeneratorKind::Dt;
  int i = 0;
  int j = 0;
  bool lifted = false;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generator ids are dense in [0, generator_count(n)): d_t, then d_{x^1..n},
/// then Omega_{01..0n}, then Omega_{ij} in lexicographic (i, j) order.
int generator_count(int n);
Generator generator_from_id(int id, int n, bool lifted = false);
int generator_id(const Generator& g, int n);
bool is_translation(int id, int n);

/// Short ASCII names: "dt", "dx1", "O01", "O12".
std::string generator_name(int id, int n);
int generator_from_name(const std::string& name, int n);

/// Ordered composition Z_{a_1} ... Z_{a_q}; the empty sequence is the identity.
using MultiIndex = std::vector<int>;

std::string multi_index_name(const MultiIndex& a, int n);
MultiIndex multi_index_from_name(const std::string& name, int n);

/// All multi-indices of exactly the given order, in lexicographic id order.
std::vector<MultiIndex> multi_indices_of_order(int n, int order);
/// All multi-indices with order <= max_order, sorted by (order, lexicographic).
std::vector<MultiIndex> multi_indices_up_to(int n, int max_order);

MultiIndex prepend(int a, const MultiIndex& rest);

/// Killing field written as sum_mu (M^mu_nu x^nu + b^mu) d_mu with x^0 = t.
struct LinearVectorField {
  int n = 0;
  std::vector<std::vector<int>> m;  // (n+1) x (n+1)
  std::vector<int> b;               // n+1

  static LinearVectorField zero(int n);
  static LinearVectorField of_generator(int id, int n);

  LinearVectorField& operator+=(const LinearVectorField& o);
  friend bool operator==(const LinearVectorField&, const LinearVectorField&) = default;
};

/// Lie bracket [X, Y] of two linear vector fields (exact).
LinearVectorField bracket(const LinearVectorField& x, const LinearVectorField& y);

/// Coordinates of a field in the generator basis; throws if it is not a
/// member of the span of the Poincare generators.
std::vector<int> decompose(const LinearVectorField& field);

/// Constants c with [Z_a, d_mu] = sum_nu c[nu] d_nu (mu, nu = 0..n).
std::vector<int> translation_commutator(int a, int mu, int n);

}  // namespace vkg
