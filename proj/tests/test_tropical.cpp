#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "perron/tropical.hpp"
#include "perron/wdigraph.hpp"

using namespace perron;
using namespace perron::testing;

namespace {

TropicalMatrix example48() {
  TropicalMatrix C(3, 3);
  int w[3][3] = {{1, 1, 0}, {0, 4, 2}, {3, 3, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) C(i, j) = Trop(Rational(w[i][j]));
  return C;
}

/// Independent brute-force min-plus product.
TropicalMatrix naive_product(const TropicalMatrix& C, const TropicalMatrix& D) {
  TropicalMatrix X(C.rows(), D.cols());
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j)
      for (int k = 0; k < C.cols(); ++k) X(i, j) = min(X(i, j), C(i, k) + D(k, j));
  return X;
}

TropicalMatrix random_tropical(std::mt19937_64& rng, int n, double inf_prob = 0.25) {
  TropicalMatrix C(n, n);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (u(rng) >= inf_prob) C(i, j) = Trop(random_rational(rng));
  return C;
}

TropicalMatrix random_irreducible(std::mt19937_64& rng, int n) {
  WeightedDigraph G = random_strongly_connected(rng, n);
  return G.adjacency_matrix();
}

}  // namespace

TEST_CASE("trop_product: identity and absorbing element") {
  TropicalMatrix C = example48();
  CHECK(trop_product(C, TropicalMatrix::identity(3)) == C);
  CHECK(trop_product(TropicalMatrix::identity(3), C) == C);

  TropicalMatrix inf(3, 3);
  TropicalMatrix P = trop_product(inf, C);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(P(i, j).is_inf());

  TropicalMatrix bad(2, 3);
  CHECK_THROWS_AS(trop_product(C, bad), DimensionMismatch);
}

TEST_CASE("trop_product squares the running example") {
  TropicalMatrix C = example48();
  TropicalMatrix X = trop_product(C, C);
  // Frozen from the brute-force oracle below.
  int expect[3][3] = {{1, 2, 1}, {1, 1, 0}, {3, 4, 3}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(X(i, j) == Trop(Rational(expect[i][j])));
  CHECK(X == naive_product(C, C));
}

TEST_CASE("trop_eigenvalue on the running example is 1/2") {
  CHECK(trop_eigenvalue(example48()) == Trop(Rational(1, 2)));
}

TEST_CASE("trop_eigenvalue of a single loop") {
  TropicalMatrix C(1, 1);
  C(0, 0) = Trop(Rational(7, 3));
  CHECK(trop_eigenvalue(C) == Trop(Rational(7, 3)));

  TropicalMatrix acyclic(2, 2);
  acyclic(0, 1) = Trop(Rational(1));
  CHECK(trop_eigenvalue(acyclic).is_inf());
}

TEST_CASE("trop_eigenvalue equals exhaustive cycle enumeration (randomized)") {
  std::mt19937_64 rng(777);
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> size(1, 6);
    TropicalMatrix C = random_tropical(rng, size(rng));
    WeightedDigraph G = WeightedDigraph::from_adjacency_matrix(C);
    CHECK(trop_eigenvalue(C) == min_cycle_mean_exhaustive(G));
  }
}

TEST_CASE("trop_eigenvector on the running example") {
  TropicalMatrix C = example48();
  Trop lam(Rational(1, 2));
  // The fixed reference vector satisfies the defining equation ...
  std::vector<Trop> paper{Trop(Rational(1, 2)), Trop(Rational(0)), Trop(Rational(5, 2))};
  CHECK(is_trop_eigenvector(C, lam, paper));
  // ... and so does the constructed one.
  std::vector<Trop> V = trop_eigenvector(C, lam);
  CHECK(is_trop_eigenvector(C, lam, V));
}

TEST_CASE("trop_eigenvector of 1x1") {
  TropicalMatrix C(1, 1);
  C(0, 0) = Trop(Rational(5));
  std::vector<Trop> V = trop_eigenvector(C, Trop(Rational(5)));
  CHECK(V.size() == 1);
  CHECK(V[0] == Trop(Rational(0)));
}

TEST_CASE("trop_eigenvector verification on random irreducible matrices") {
  std::mt19937_64 rng(778);
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> size(1, 6);
    TropicalMatrix C = random_irreducible(rng, size(rng));
    Trop lam = trop_eigenvalue(C);
    std::vector<Trop> V = trop_eigenvector(C, lam);
    CHECK(is_trop_eigenvector(C, lam, V));
  }
}

TEST_CASE("row_min_scaling: running example") {
  TropicalMatrix C = example48();
  std::vector<Rational> gamma = row_min_scaling(C);
  Trop lam = trop_eigenvalue(C);
  for (int i = 0; i < 3; ++i) {
    Trop row = Trop::infinity();
    for (int j = 0; j < 3; ++j) row = min(row, C(i, j) + gamma[j] - gamma[i]);
    CHECK(row == lam);
  }
}

TEST_CASE("row_min_scaling: already scaled input gets a constant diagonal") {
  TropicalMatrix C(2, 2);
  C(0, 1) = Trop(Rational(0));
  C(1, 0) = Trop(Rational(0));
  C(0, 0) = Trop(Rational(1));
  std::vector<Rational> gamma = row_min_scaling(C);
  CHECK(gamma[0] == gamma[1]);
}

TEST_CASE("row_min_scaling property on random irreducible matrices") {
  std::mt19937_64 rng(779);
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> size(2, 6);
    TropicalMatrix C = random_irreducible(rng, size(rng));
    std::vector<Rational> gamma = row_min_scaling(C);
    Trop lam = trop_eigenvalue(C);
    for (int i = 0; i < C.rows(); ++i) {
      Trop row = Trop::infinity();
      for (int j = 0; j < C.cols(); ++j) row = min(row, C(i, j) + gamma[j] - gamma[i]);
      CHECK(row == lam);
    }
  }
  TropicalMatrix reducible(2, 2);
  reducible(0, 1) = Trop(Rational(1));
  CHECK_THROWS_AS(row_min_scaling(reducible), NotIrreducible);
}

TEST_CASE("tropical eigenvalue is similarity invariant (randomized)") {
  std::mt19937_64 rng(780);
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> size(1, 6);
    int n = size(rng);
    TropicalMatrix C = random_tropical(rng, n);
    std::vector<Rational> gamma;
    for (int i = 0; i < n; ++i) gamma.push_back(random_rational(rng));
    TropicalMatrix scaled(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) scaled(i, j) = C(i, j) + gamma[j] - gamma[i];
    CHECK(trop_eigenvalue(scaled) == trop_eigenvalue(C));
  }
}

TEST_CASE("s(G) <= eigenvalue, equality iff the leading term has a closed path") {
  std::mt19937_64 rng(781);
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> size(1, 6);
    TropicalMatrix C = random_tropical(rng, size(rng));
    WeightedDigraph G = WeightedDigraph::from_adjacency_matrix(C);
    Trop lam = trop_eigenvalue(C);
    Trop s = G.smallest_weight();
    CHECK(s <= lam);
    if (lam.is_inf()) continue;
    bool leading_cycle = !min_cycle_mean_exhaustive(graph_leading_term(G)).is_inf();
    CHECK((s == lam) == leading_cycle);
  }
}
