#pragma once

#include <vector>

#include "perron/errors.hpp"
#include "perron/trop.hpp"

namespace perron {

/// Matrix over the min-plus semifield. All arithmetic is exact rational.
class TropicalMatrix {
 public:
  TropicalMatrix() : rows_(0), cols_(0) {}
  TropicalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Trop::infinity()) {}

  static TropicalMatrix identity(int n) {
    TropicalMatrix I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = Trop(Rational(0));
    return I;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Trop& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Trop& operator()(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  friend bool operator==(const TropicalMatrix& a, const TropicalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  int rows_, cols_;
  std::vector<Trop> entries_;
};

/// Min-plus product: X_{i,j} = min_k (C_{i,k} + D_{k,j}).
TropicalMatrix trop_product(const TropicalMatrix& C, const TropicalMatrix& D);

/// Entrywise scalar action a + C.
TropicalMatrix trop_scale(const Trop& a, const TropicalMatrix& C);

/// Kleene star min(Id, C, C^2, ..., C^{n-1}); requires no negative cycle.
TropicalMatrix kleene_star(const TropicalMatrix& C);

/// Minimum cycle mean of the adjacency graph (arc j -> i of weight C_{i,j}),
/// computed with Karp's recursion per strongly connected component; +inf when
/// acyclic.
Trop trop_eigenvalue(const TropicalMatrix& C);

/// Nodes lying on a cycle of mean exactly lambda.
std::vector<int> critical_nodes(const TropicalMatrix& C, const Trop& lambda);

/// Tropical eigenvector: V != (+inf,...) with C ⊙ V = lambda + V, built from
/// the Kleene star column of a critical node (lexicographically smallest by
/// default). Throws NotIrreducible when no such vector exists.
std::vector<Trop> trop_eigenvector(const TropicalMatrix& C, const Trop& lambda);
std::vector<Trop> trop_eigenvector_at(const TropicalMatrix& C, const Trop& lambda,
                                      int critical_node);

/// Exact verification of C ⊙ V = lambda + V.
bool is_trop_eigenvector(const TropicalMatrix& C, const Trop& lambda,
                         const std::vector<Trop>& V);

/// Diagonal Γ (finite entries) with (-Γ) ⊙ C ⊙ Γ having every row minimum
/// equal to the tropical eigenvalue. Throws NotIrreducible.
std::vector<Rational> row_min_scaling(const TropicalMatrix& C);

}  // namespace perron
