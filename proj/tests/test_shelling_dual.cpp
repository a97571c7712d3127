#include <algorithm>

#include "doctest.h"
#include "mincm/catalog.hpp"
#include "mincm/cm.hpp"
#include "mincm/dual.hpp"
#include "mincm/error.hpp"
#include "mincm/shelling.hpp"
#include "oracles.hpp"

using namespace mincm;

namespace {

SimplicialComplex from(std::vector<std::vector<int>> facets) {
  return SimplicialComplex::from_facets(facets);
}

/// (1 - t)^n times the Hilbert series of k[Sigma], as polynomial coefficients:
/// sum over faces F of t^|F| (1 - t)^(n - |F|).
std::vector<std::int64_t> k_polynomial(const oracle::FaceSet& faces, int n) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n + 1), 0);
  for (auto f : faces) {
    int s = oracle::popcount(f);
    // t^s (1 - t)^(n - s)
    std::int64_t binom = 1;
    for (int k = 0; k <= n - s; ++k) {
      out[static_cast<std::size_t>(s + k)] += (k % 2 == 0) ? binom : -binom;
      binom = binom * (n - s - k) / (k + 1);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("shelling moves agree with the definition") {
  for (int seed = 0; seed < 60; ++seed) {
    auto c = (seed % 2) ? catalog::random_complex(6, 3, 0.4, 70 + seed)
                        : catalog::random_mixed_complex(6, 3, 0.3, 70 + seed);
    auto masks = oracle::facet_masks(c);
    for (Face f : c.facets())
      CHECK(is_shelling_move(c, f) == oracle::is_shelling_move(masks, f.bits()));
  }
  auto single = SimplicialComplex::simplex(3);
  CHECK(is_shelling_move(single, single.facets()[0]));
  CHECK_THROWS_AS(is_shelling_move(single, Face{0, 1}), Error);
}

TEST_CASE("shellability search agrees with exhaustive orders") {
  for (int seed = 0; seed < 60; ++seed) {
    auto c = catalog::random_complex(5 + seed % 2, 3, 0.35, 300 + seed);
    if (c.num_facets() > 7) continue;
    auto cert = is_shellable(c);
    CHECK(cert.has_value() == oracle::shellable(oracle::facet_masks(c)));
    if (cert) CHECK(replay(*cert));
  }
  CHECK(is_shellable(catalog::get("octahedron")).has_value());
  CHECK_FALSE(is_shellable(catalog::get("rp2_6")).has_value());
  CHECK_THROWS_AS(is_shellable(from({{0, 1, 2}, {3, 4}})), Error);
}

TEST_CASE("certificates: replay and tampering") {
  auto k62 = catalog::get("k_6_2");
  auto rp2 = catalog::get("rp2_6");
  auto cert = shelled_over(k62, rp2);
  REQUIRE(cert.has_value());
  CHECK(cert->moves.size() == 10);
  CHECK(replay(*cert));
  auto broken = *cert;
  std::swap(broken.moves.front(), broken.moves.back());
  broken.moves.pop_back();
  CHECK_FALSE(replay(broken));
  // base must sit inside the target
  auto wrong = from({{0, 1, 7}});
  CHECK_THROWS_AS(shelled_over(k62, wrong), Error);
}

TEST_CASE("with (S_2), every facet is a shelling move") {
  int tested = 0;
  for (int seed = 0; seed < 200; ++seed) {
    auto c = catalog::random_complex(4 + seed % 5, 2 + seed % 3, 0.5, 12000 + seed);
    if (c.num_facets() < 2) continue;
    if (!satisfies_serre(c, FieldSpec::rationals(), 2)) continue;
    ++tested;
    for (Face f : c.facets()) CHECK(is_shelling_move(c, f));
  }
  MESSAGE("(S_2) samples: " << tested);
  CHECK(tested > 0);
}

TEST_CASE("reduction to a minimal CM complex") {
  auto q = FieldSpec::rationals();
  auto k62 = catalog::get("k_6_2");
  auto red = reduce_to_minimal(k62, q);
  CHECK(replay(red.certificate));
  CHECK(red.certificate.target == k62);
  CHECK(is_minimal_cm(red.minimal, q, false).is_minimal);
  auto rp2 = catalog::get("rp2_6");
  auto fixed = reduce_to_minimal(rp2, FieldSpec::prime(3));
  CHECK(fixed.certificate.moves.empty());
  CHECK(fixed.minimal == rp2);
  CHECK_THROWS_AS(reduce_to_minimal(rp2, FieldSpec::prime(2)), Error);
}

TEST_CASE("dual ideal generators are facet complements") {
  auto rp2 = catalog::get("rp2_6");
  auto ideal = dual_ideal(rp2, 6);
  CHECK(ideal.generators.size() == 10);
  CHECK(ideal.common_degree() == 3);
  CHECK_THROWS_AS(dual_ideal(SimplicialComplex::void_complex(3), 3), Error);
  auto padded = dual_ideal(rp2, 7);
  CHECK(padded.common_degree() == 4);
  auto i = SquarefreeIdeal::from_generators(4, {Face{0, 1}, Face{0, 1, 2}, Face{3}});
  CHECK(i.generators.size() == 2);
  CHECK(i.contains_monomial(Face{0, 1, 3}));
  CHECK_FALSE(i.contains_monomial(Face{0, 2}));
  CHECK(colon(i, Face{0}).generators == std::vector<Face>{Face{1}, Face{3}});
}

TEST_CASE("Betti tables satisfy the K-polynomial identity") {
  for (int seed = 0; seed < 30; ++seed) {
    auto c = catalog::random_mixed_complex(5 + seed % 2, 3, 0.4, 8800 + seed);
    int n = c.num_vertices();
    auto ideal = dual_ideal(c, n);
    if (ideal.is_unit() || ideal.is_zero()) continue;
    auto sigma = oracle::alexander_dual(oracle::faces_of(c), n);
    auto k = k_polynomial(sigma, n);
    for (auto field : {FieldSpec::prime(2), FieldSpec::rationals()}) {
      auto table = betti_table(ideal, field);
      std::vector<std::int64_t> alt(static_cast<std::size_t>(n + 1), 0);
      alt[0] = 1;
      for (const auto& [key, value] : table.entries)
        alt[static_cast<std::size_t>(key.second)] -= (key.first % 2 == 0) ? value : -value;
      CHECK(alt == k);
    }
  }
}

TEST_CASE("Eagon-Reiner and Herzog-Hibi dictionaries on small samples") {
  for (int seed = 0; seed < 60; ++seed) {
    auto c = catalog::random_complex(5, 2 + seed % 2, 0.5, 5100 + seed);
    int n = c.num_vertices();
    auto ideal = dual_ideal(c, n);
    if (ideal.is_unit()) continue;
    for (auto field : {FieldSpec::prime(2), FieldSpec::prime(101)})
      CHECK(is_cm(c, field) == has_linear_resolution(ideal, field));
    if (c.num_facets() <= 7) {
      bool lq = linear_quotients_order(ideal).has_value();
      CHECK(lq == oracle::has_linear_quotients(
                      [&] {
                        std::vector<oracle::Mask> g;
                        for (Face f : ideal.generators) g.push_back(f.bits());
                        return g;
                      }()));
      CHECK(lq == oracle::shellable(oracle::facet_masks(c)));
    }
    for (Face f : c.facets()) {
      auto rest = remove_facet(c, f);
      auto rest_ideal = rest.is_void() ? SquarefreeIdeal{n, {}} : dual_ideal(rest, n);
      CHECK(is_shelling_move(c, f) == colon_is_degree_one(rest_ideal, f, n));
    }
  }
}

TEST_CASE("linear quotient orders are valid") {
  auto ideal = dual_ideal(catalog::get("octahedron"), 6);
  auto order = linear_quotients_order(ideal);
  REQUIRE(order.has_value());
  for (std::size_t j = 1; j < order->size(); ++j) {
    auto prefix = SquarefreeIdeal::from_generators(
        6, std::vector<Face>(order->begin(), order->begin() + static_cast<long>(j)));
    auto q = colon(prefix, (*order)[j]);
    CHECK(q.common_degree() == 1);
  }
  CHECK_FALSE(linear_quotients_order(dual_ideal(catalog::get("rp2_6"), 6)).has_value());
}
