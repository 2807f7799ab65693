#pragma once

#include <string>
#include <vector>

#include "hyperlattice/matrix.hpp"

namespace hyperlattice {

enum class Group { SU2, SU3 };

struct FusionSystem {
  Group group = Group::SU3;
  std::string name;
  int level = 0;  // k
  int N = 0;      // k + Coxeter number
  int rank = 0;   // number of graph vertices r_E
  IntMatrix fundamental;
  // Z3 grading for SU3 (+1 per arrow), bipartite parity for SU2.
  std::vector<int> grading;
  int eta() const { return group == Group::SU3 ? 1 : 2; }
  int grading_modulus() const { return group == Group::SU3 ? 3 : 2; }
};

// SU3: A0..A6 (L0..L6 accepted), D3, D6, E5, E9, E21.
// SU2: su2.A<n> (n >= 1), su2.D<n> (n >= 4), su2.E6, su2.E7, su2.E8.
FusionSystem load_fusion_system(const std::string& name);
std::vector<std::string> shipped_su3_systems();
std::vector<std::string> shipped_su2_examples();

// Build a system from an arbitrary fundamental matrix; computes the grading.
FusionSystem make_fusion_system(Group group, const std::string& name, int level, IntMatrix fundamental);

// Grading by breadth-first propagation from vertex 0; throws Error if the
// graph is disconnected or admits no grading.
std::vector<int> compute_grading(const IntMatrix& m, int modulus);

// Fusion graph of A_k(SU3): integrable weights (p,q), p+q <= k, ordered by
// p+q then by q; arrows (p,q) -> (p+1,q), (p-1,q+1), (p,q-1).
IntMatrix su3_weight_graph(int k);

// Adjacency matrices of the simply-laced Dynkin diagrams.
IntMatrix dynkin_adjacency(char type, int n);

class FusionTable {
 public:
  explicit FusionTable(FusionSystem system);

  const FusionSystem& system() const { return sys_; }
  int N() const { return sys_.N; }
  int rank() const { return sys_.rank; }
  Group group() const { return sys_.group; }

  // SU3, shifted labels {p,q}: the extended signed periodic family.
  const IntMatrix& lookup(int p, int q) const;
  // SU2, shifted label {n}.
  const IntMatrix& lookup(int n) const;

  // Alcove value F_{{p,q}} with p,q >= 1, p + q <= N - 1 (SU3).
  const IntMatrix& alcove(int p, int q) const;
  // Rotation P = F_{{N-2,1}} (SU3).
  const IntMatrix& rotation() const { return rotation_; }
  // perm[b] = c with P[c][b] = 1; P is a permutation matrix.
  const std::vector<int>& rotation_permutation() const { return rotation_perm_; }

 private:
  void build_su3();
  void build_su2();
  std::size_t slot(int p0, int q0, int e) const { return (std::size_t(e) * sys_.N + p0) * sys_.N + q0; }

  FusionSystem sys_;
  std::vector<IntMatrix> alcove_;   // indexed p*N + q, shifted labels
  std::vector<IntMatrix> extended_; // SU3: 3*N*N rotated rhombus values; SU2: 2N values
  IntMatrix zero_;
  IntMatrix rotation_;
  std::vector<int> rotation_perm_;
};

// Free-function forms of the table operations.
FusionTable build_alcove(const FusionSystem& system);
FusionTable build_alcove_su2(const FusionSystem& system);
IntMatrix lookup_extended(const FusionTable& table, int p, int q);

}  // namespace hyperlattice
