#include "doctest.h"
#include "mincm/catalog.hpp"
#include "mincm/homology.hpp"
#include "oracles.hpp"

using namespace mincm;

namespace {

std::int64_t oracle_prime(const FieldSpec& f) {
  return f.is_rational() ? oracle::kRationalProxy
                         : static_cast<std::int64_t>(f.characteristic());
}

const std::vector<FieldSpec>& fields() {
  static const std::vector<FieldSpec> all = {
      FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
      FieldSpec::prime(101)};
  return all;
}

}  // namespace

TEST_CASE("boundary of a boundary vanishes") {
  for (int seed = 0; seed < 40; ++seed) {
    auto c = catalog::random_mixed_complex(4 + seed % 4, 4, 0.5, 500 + seed);
    auto maps = boundary_matrices(c);
    for (std::size_t k = 1; k < maps.size(); ++k) {
      auto prod = multiply(maps[k - 1].matrix, maps[k].matrix);
      CHECK(prod.nonzeros() == 0);
    }
  }
  for (const auto& name : {"rp2_6", "dunce_hat_8", "ziegler_ball"}) {
    auto maps = boundary_matrices(catalog::get(name));
    for (std::size_t k = 1; k < maps.size(); ++k)
      CHECK(multiply(maps[k - 1].matrix, maps[k].matrix).nonzeros() == 0);
  }
}

TEST_CASE("reduced homology agrees with the dense oracle") {
  for (int seed = 0; seed < 60; ++seed) {
    auto c = (seed % 2) ? catalog::random_mixed_complex(4 + seed % 5, 4, 0.45, seed)
                        : catalog::random_complex(4 + seed % 5, 2 + seed % 3, 0.5, seed);
    auto faces = oracle::faces_of(c);
    for (const auto& f : fields()) {
      auto b = reduced_homology(c, f);
      CHECK(b.dims == oracle::reduced_homology(faces, oracle_prime(f)));
      CHECK(reduced_homology(c, f, EliminationRoute::Sparse) ==
            reduced_homology(c, f, EliminationRoute::Dense));
      // Euler-Poincare: alternating Betti sum equals alternating face count.
      CHECK(b.euler_characteristic() == reduced_euler_characteristic(c));
    }
  }
}

TEST_CASE("reference spaces") {
  auto q = FieldSpec::rationals();
  auto gf2 = FieldSpec::prime(2);
  auto sphere = reduced_homology(SimplicialComplex::boundary_of_simplex(5), q);
  CHECK(sphere[3] == 1);
  CHECK(sphere.euler_characteristic() == -1);
  CHECK(reduced_homology(SimplicialComplex::simplex(4), q).is_zero());
  CHECK(reduced_homology(SimplicialComplex::irrelevant(2), q)[-1] == 1);
  CHECK(reduced_homology(SimplicialComplex::void_complex(2), q).dims.empty());

  auto rp2 = catalog::get("rp2_6");
  CHECK(reduced_homology(rp2, gf2)[1] == 1);
  CHECK(reduced_homology(rp2, gf2)[2] == 1);
  CHECK(is_acyclic(rp2, FieldSpec::prime(3)));
  CHECK(is_acyclic(rp2, q));
  auto dunce = catalog::get("dunce_hat_8");
  for (const auto& f : {q, gf2, FieldSpec::prime(3)}) CHECK(is_acyclic(dunce, f));
  auto two_points = SimplicialComplex::from_faces(2, {Face{0}, Face{1}});
  CHECK(reduced_homology(two_points, q)[0] == 1);
}

TEST_CASE("l-fold acyclicity") {
  auto q = FieldSpec::rationals();
  auto simplex = SimplicialComplex::simplex(4);
  for (int l = 1; l <= 4; ++l) CHECK(is_l_fold_acyclic(simplex, q, l));
  auto dunce = catalog::get("dunce_hat_8");
  CHECK(is_l_fold_acyclic(dunce, q, 1));
  CHECK_FALSE(is_l_fold_acyclic(dunce, q, 2));  // vertex links are graphs with cycles
  auto ball = catalog::get("ziegler_ball");
  CHECK(is_l_fold_acyclic(ball, q, 2));
  CHECK_FALSE(is_l_fold_acyclic(catalog::get("octahedron"), q, 1));
}

TEST_CASE("top cycles are cycles") {
  auto q = FieldSpec::rationals();
  for (const auto& c : {catalog::get("octahedron"), catalog::get("k_6_2"),
                        SimplicialComplex::boundary_of_simplex(4)}) {
    for (const auto& f : fields()) {
      auto z = top_cycle(c, f);
      REQUIRE(z.has_value());
      CHECK(is_cycle(*z));
      CHECK(z->degree == c.dim());
      CHECK_FALSE(z->support.empty());
    }
  }
  CHECK_FALSE(top_cycle(catalog::get("dunce_hat_8"), q).has_value());
  auto z2 = top_cycle(catalog::get("rp2_6"), FieldSpec::prime(2));
  REQUIRE(z2.has_value());
  CHECK(z2->support.size() == 10);
}
