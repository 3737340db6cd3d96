#pragma once

#include <string>
#include <vector>

#include "vkg/generators.hpp"
#include "vkg/polynomials.hpp"

namespace vkg {

/// C[a][b][c] with [Z_a, Z_b] = sum_c C[a][b][c] Z_c (same table for the lifts).
using StructureTable = std::vector<std::vector<std::vector<int>>>;

StructureTable structure_constants(int n);

struct AlgebraCheck {
  bool antisymmetric = true;
  bool jacobi = true;
  std::string first_failure;
};
AlgebraCheck check_structure_table(const StructureTable& c);

/// One term Q * d_mu(Z_B phi) * Zhat_C f; mu = 0 is d_t, mu = k is d_{x^k}.
struct VlasovTerm {
  QPoly coeff;
  int mu = 0;
  MultiIndex b;
  MultiIndex c;
};

struct CommutedVlasovRHS {
  int n = 0;
  MultiIndex a;
  std::vector<VlasovTerm> terms;  // canonical order, like terms merged
};

/// One term int P^B Zhat_B f dv.
struct KGTerm {
  PPoly coeff;
  MultiIndex b;
};

struct CommutedKGRHS {
  int n = 0;
  MultiIndex a;
  std::vector<KGTerm> terms;
};

/// [T_phi, Zhat_A] f = sum Q d_mu(Z_B phi) Zhat_C f, by induction on |A|.
CommutedVlasovRHS derive_commuted_vlasov(const MultiIndex& a, int n);
/// Z_A int f dv = sum int P^B Zhat_B f dv.
CommutedKGRHS derive_commuted_kg(const MultiIndex& a, int n);

std::string to_text(const CommutedVlasovRHS& rhs);
std::string to_text(const CommutedKGRHS& rhs);
std::string to_json(const std::vector<CommutedVlasovRHS>& list, int n, int order);
std::string to_json(const std::vector<CommutedKGRHS>& list, int n, int order);

}  // namespace vkg
