// Root systems, Weyl groups, parabolic subsets and their cones.
//
// Conventions used throughout:
//   * weights live in fundamental-weight coordinates (IntVec of length rank),
//   * coroots live in simple-coroot coordinates,
//   * pairing(weight, coroot) = dot product,
//   * cartan[i][j] = <alpha_j, alpha_i^vee>, so the j-th simple root written
//     in weight coordinates is the j-th column of the Cartan matrix.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/vectors.hpp"

namespace alcove {

struct Root {
  IntVec simple_coords;  // expansion in simple roots
  IntVec weight_coords;  // expansion in fundamental weights
  IntVec coroot;         // coroot in simple-coroot coordinates
  Int height() const {
    Int h = 0;
    for (Int c : simple_coords) h += c;
    return h;
  }
  Int coroot_height() const {
    Int h = 0;
    for (Int c : coroot) h += c;
    return h;
  }
};

struct WeylElement {
  std::vector<int> word;              // a reduced word in simple reflections (0-based)
  std::vector<IntVec> matrix;         // action on weight coordinates, row-major
  int length = 0;
  bool is_identity = false;
  bool is_longest = false;
};

struct ParabolicType {
  std::vector<int> J;           // 0-based simple indices
  std::vector<IntVec> levi_basis;  // integral basis of Lambda_L
  std::vector<IntVec> cone_generators;  // generators of C_P inside Lambda_L
};

class RootDatum {
public:
  static RootDatum build(char series, int rank);

  char series() const { return series_; }
  int rank() const { return rank_; }
  const std::vector<IntVec>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  Int coxeter_number() const { return coxeter_; }
  IntVec rho() const { return IntVec(rank_, 1); }

  IntVec simple_root(int i) const;    // weight coordinates
  IntVec simple_coroot(int i) const;  // coroot coordinates (= e_i)

  // <weight, coroot> in the fixed bases.
  static Int pairing(const IntVec& weight, const IntVec& coroot) {
    return dot(weight, coroot);
  }

  // s_i on weight coordinates.
  IntVec reflect_weight(int i, const IntVec& w) const;
  RatVec reflect_weight(int i, const RatVec& w) const;
  // s_i on coroot coordinates.
  IntVec reflect_coroot(int i, const IntVec& c) const;

  // Index of the positive root whose coroot is the highest coroot; its
  // level-one wall bounds the fundamental alcove.
  int highest_coroot_index() const;

  std::string label() const { return std::string(1, series_) + std::to_string(rank_); }

private:
  char series_ = 'A';
  int rank_ = 0;
  std::vector<IntVec> cartan_;
  std::vector<Root> positive_;
  Int coxeter_ = 0;
};

// Full Weyl group with reduced words, lengths, identity/longest flags.
// Deterministic ordering: BFS by length with lexicographic tie-breaks on
// action matrices. Throws GroupTooLarge past the bound.
std::vector<WeylElement> weyl_group(const RootDatum& rd, size_t bound = 100000);

std::vector<IntVec> weyl_matrix_product(const RootDatum& rd,
                                        const std::vector<int>& word);

// Integral basis of {lambda : <lambda, alpha_j^vee> = 0 for j in J}.
// In fundamental-weight coordinates this is the coordinate sublattice
// spanned by the omega_i with i outside J.
std::vector<IntVec> levi_lattice(const RootDatum& rd, const std::vector<int>& J);

// All J' such that some w in W maps the root subsystem of J onto that of J'.
// Includes J; deterministic (sorted) order.
std::vector<std::vector<int>> associated_subsets(const RootDatum& rd,
                                                 const std::vector<int>& J,
                                                 size_t bound = 100000);

// Generators of C_P = {v in Lambda_L (x) R : <v, alpha_i^vee> >= 0, i not in J}.
std::vector<IntVec> cone_of_parabolic(const RootDatum& rd, const std::vector<int>& J);

ParabolicType parabolic_type(const RootDatum& rd, const std::vector<int>& J);

}  // namespace alcove
