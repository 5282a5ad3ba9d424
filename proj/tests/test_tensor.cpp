#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <netshare/observables.hpp>
#include <netshare/tensor.hpp>

#include "helpers.hpp"

using namespace netshare;

TEST_CASE("kron maps basis states the way the factors do") {
  // sigma_z ⊗ sigma_x sends |00> to |01>.
  const Matrix op = kron(pauli_z(), pauli_x());
  Vector e00 = Vector::Zero(4);
  e00(0) = 1.0;
  const Vector mapped = op * e00;
  CHECK(std::abs(mapped(1) - Complex(1.0, 0.0)) < kAlgebraTol);
  CHECK(std::abs(mapped(0)) < kAlgebraTol);
  CHECK(std::abs(mapped(2)) < kAlgebraTol);
  CHECK(std::abs(mapped(3)) < kAlgebraTol);
}

TEST_CASE("kron matches the index-loop oracle and takes expressions") {
  std::mt19937_64 rng(41);
  const Matrix a = testutil::random_complex(2, 3, rng);
  const Matrix b = testutil::random_complex(3, 2, rng);
  CHECK((kron(a, b) - oracle::naive_kron(a, b)).norm() < kAlgebraTol);
  CHECK(kron(a, b).rows() == 6);
  CHECK(kron(a, b).cols() == 6);
  // Expression arguments, not just plain matrices.
  CHECK((kron(a + a, 2.0 * b) - 4.0 * oracle::naive_kron(a, b)).norm() < kAlgebraTol);
}

TEST_CASE("kron is bilinear, associative, and respects products") {
  std::mt19937_64 rng(42);
  const Matrix a = testutil::random_complex(2, 2, rng);
  const Matrix b = testutil::random_complex(2, 2, rng);
  const Matrix c = testutil::random_complex(3, 3, rng);
  const Matrix d = testutil::random_complex(3, 3, rng);
  const Complex alpha(0.7, -0.3);

  CHECK((kron(alpha * a + b, c) - (alpha * kron(a, c) + kron(b, c))).norm() < 1e-11);
  CHECK((kron(a, alpha * c + d) - (alpha * kron(a, c) + kron(a, d))).norm() < 1e-11);
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).norm() < 1e-11);
  CHECK((kron(a, c) * kron(b, d) - kron((a * b).eval(), (c * d).eval())).norm() < 1e-10);
}

TEST_CASE("identity and frobenius_distance basics") {
  CHECK(identity(3).isApprox(Matrix::Identity(3, 3)));
  CHECK_THROWS_AS(identity(0), InvalidDimension);
  CHECK(frobenius_distance(pauli_x(), pauli_x()) == 0.0);
  CHECK(frobenius_distance(pauli_x(), pauli_y()) > 1.0);
  CHECK_THROWS_AS(frobenius_distance(pauli_x(), identity(3)), DimensionMismatch);
}

TEST_CASE("hermiticity, positivity, and density checks") {
  std::mt19937_64 rng(43);
  CHECK(is_hermitian(pauli_y()));
  CHECK_FALSE(is_hermitian((Matrix(2, 2) << 0, 1, 0, 0).finished()));

  const Matrix rho = testutil::random_density(4, rng);
  CHECK(is_density_matrix(rho));
  CHECK(is_positive_semidefinite(rho));
  CHECK_FALSE(is_density_matrix(2.0 * rho));
  CHECK_FALSE(is_positive_semidefinite(pauli_z()));
  CHECK(std::abs(min_hermitian_eigenvalue(pauli_z()) + 1.0) < kAlgebraTol);
}

TEST_CASE("dichotomic predicate accepts involutions only") {
  CHECK(is_dichotomic(pauli_x()));
  CHECK(is_dichotomic(identity(2)));  // one-point spectrum, still an involution
  CHECK_FALSE(is_dichotomic((identity(2) + pauli_z()) / 2.0));  // projector
  CHECK_FALSE(is_dichotomic(0.5 * pauli_x()));
  CHECK_FALSE(is_dichotomic((Matrix(2, 2) << 0, 1, 0, 0).finished()));
}

TEST_CASE("anticommutator values") {
  CHECK(anticommutator(pauli_x(), pauli_y()).norm() < kAlgebraTol);
  CHECK((anticommutator(pauli_z(), pauli_z()) - 2.0 * identity(2)).norm() < kAlgebraTol);
  // (A + B) and (A - B) anticommute whenever A and B are involutions.
  const double s = 1.0 / std::sqrt(2.0);
  const Matrix plus = s * (pauli_z() + pauli_x());
  const Matrix minus = s * (pauli_z() - pauli_x());
  CHECK(anticommutator(plus, minus).norm() < kAlgebraTol);
  CHECK_THROWS_AS(anticommutator(pauli_x(), identity(3)), DimensionMismatch);
}

TEST_CASE("expectation agrees with the trace-loop oracle") {
  std::mt19937_64 rng(44);
  const Matrix rho = testutil::random_density(4, rng);
  const Matrix op = testutil::random_hermitian(4, rng);
  const double direct = oracle::trace_product(op, rho).real();
  CHECK(std::abs(expectation(op, rho) - direct) < kAlgebraTol);
}

TEST_CASE("expectation reproduces the tilted-pair correlator") {
  // <(sigma_z+sigma_x)/sqrt2 ⊗ (sigma_z+sigma_x)/sqrt2> = 1 on the
  // maximally entangled qubit pair.
  const Matrix tilted = (pauli_z() + pauli_x()) / std::sqrt(2.0);
  const Matrix phi = max_entangled_state(2);
  CHECK(std::abs(expectation(kron(tilted, tilted), phi) - 1.0) < kAlgebraTol);
  CHECK(std::abs(expectation(pauli_z(), (Matrix(2, 2) << 1, 0, 0, 0).finished()) - 1.0) <
        kAlgebraTol);
}

TEST_CASE("expectation rejects broken operands") {
  const Matrix rho = max_entangled_state(2);
  CHECK_THROWS_AS(expectation((Matrix(2, 2) << 0, 1, 0, 0).finished(), pauli_z()),
                  NonHermitianObservable);
  CHECK_THROWS_AS(expectation(pauli_z(), rho), DimensionMismatch);
}

TEST_CASE("expectation is linear in the state") {
  std::mt19937_64 rng(45);
  const Matrix op = testutil::random_hermitian(3, rng);
  const Matrix r1 = testutil::random_density(3, rng);
  const Matrix r2 = testutil::random_density(3, rng);
  const double mixed = expectation(op, (0.3 * r1 + 0.7 * r2).eval());
  CHECK(std::abs(mixed - (0.3 * expectation(op, r1) + 0.7 * expectation(op, r2))) <
        kAlgebraTol);
}

TEST_CASE("partial_trace matches the bipartite loop oracle") {
  std::mt19937_64 rng(46);
  const Matrix rho = testutil::random_density(6, rng);
  const std::vector<Index> dims{2, 3};
  CHECK((partial_trace(rho, dims, {0}) - oracle::bipartite_trace(rho, 2, 3, 0)).norm() <
        kAlgebraTol);
  CHECK((partial_trace(rho, dims, {1}) - oracle::bipartite_trace(rho, 2, 3, 1)).norm() <
        kAlgebraTol);
}

TEST_CASE("partial_trace of a product state recovers the factors") {
  std::mt19937_64 rng(47);
  const Matrix r1 = testutil::random_density(2, rng);
  const Matrix r2 = testutil::random_density(3, rng);
  const Matrix r3 = testutil::random_density(2, rng);
  const Matrix rho = kron(kron(r1, r2), r3);
  const std::vector<Index> dims{2, 3, 2};
  CHECK((partial_trace(rho, dims, {0}) - r1).norm() < kAlgebraTol);
  CHECK((partial_trace(rho, dims, {1}) - r2).norm() < kAlgebraTol);
  CHECK((partial_trace(rho, dims, {0, 2}) - kron(r1, r3)).norm() < kAlgebraTol);
  CHECK(std::abs(partial_trace(rho, dims, {1}).trace() - Complex(1, 0)) < kAlgebraTol);
}

TEST_CASE("partial_trace of the maximally entangled state is maximally mixed") {
  for (Index d : {2, 3, 4}) {
    const Matrix reduced =
        partial_trace(max_entangled_state(d), {d, d}, {0});
    CHECK((reduced - Matrix::Identity(d, d) / double(d)).norm() < kAlgebraTol);
  }
}

TEST_CASE("partial_trace input validation") {
  const Matrix rho = max_entangled_state(2);
  CHECK_THROWS_AS(partial_trace(rho, {2, 3}, {0}), DimensionMismatch);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {1, 0}), IndexOutOfRange);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {0, 0}), IndexOutOfRange);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {2}), IndexOutOfRange);
}

TEST_CASE("embed_at places the operator on the requested factor") {
  std::mt19937_64 rng(48);
  const std::vector<Index> dims{2, 2, 3};
  const Matrix embedded = embed_at(pauli_x(), dims, 1);
  const Matrix expected =
      oracle::naive_kron(oracle::naive_kron(identity(2), pauli_x()), identity(3));
  CHECK((embedded - expected).norm() < kAlgebraTol);

  const Matrix a = testutil::random_hermitian(2, rng);
  const Matrix b = testutil::random_hermitian(3, rng);
  CHECK((embed_at(a, dims, 0) * embed_at(b, dims, 2) -
         embed_at(b, dims, 2) * embed_at(a, dims, 0))
            .norm() < kAlgebraTol);

  const Matrix ra = testutil::random_density(2, rng);
  const Matrix rb = testutil::random_density(6, rng);
  CHECK(std::abs(expectation(embed_at(a, dims, 0), kron(ra, rb)) - expectation(a, ra)) <
        kAlgebraTol);

  CHECK_THROWS_AS(embed_at(a, dims, 3), IndexOutOfRange);
  CHECK_THROWS_AS(embed_at(a, dims, 2), DimensionMismatch);
}
