#include "doctest.h"
#include "mincm/catalog.hpp"
#include "mincm/cm.hpp"
#include "mincm/error.hpp"
#include "oracles.hpp"

using namespace mincm;

namespace {

SimplicialComplex from(std::vector<std::vector<int>> facets) {
  return SimplicialComplex::from_facets(facets);
}

std::int64_t oracle_prime(const FieldSpec& f) {
  return f.is_rational() ? oracle::kRationalProxy
                         : static_cast<std::int64_t>(f.characteristic());
}

}  // namespace

TEST_CASE("depth: small examples") {
  auto q = FieldSpec::rationals();
  CHECK(depth(from({{0}, {1}}), q) == 1);
  CHECK(depth(from({{0, 1, 2}, {2, 3, 4}}), q) == 2);
  CHECK(depth(SimplicialComplex::simplex(5), q) == 5);
  CHECK(depth(SimplicialComplex::void_complex(3), q) == 0);
  CHECK(depth(SimplicialComplex::irrelevant(3), q) == 0);
  CHECK(depth(catalog::get("rp2_6"), FieldSpec::prime(2)) == 2);
  CHECK(depth(catalog::get("rp2_6"), FieldSpec::prime(3)) == 3);
}

TEST_CASE("CM report and witness") {
  auto r = analyze_cm(catalog::get("rp2_6"), FieldSpec::prime(2));
  CHECK_FALSE(r.is_cm);
  CHECK(r.depth == 2);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->face == Face{});
  CHECK(r.witness->degree == 1);
  CHECK(r.witness->bound() == 2);

  auto ok = analyze_cm(catalog::get("rp2_6"), FieldSpec::prime(3));
  CHECK(ok.is_cm);
  CHECK_FALSE(ok.witness.has_value());
  CHECK(is_cm(SimplicialComplex::void_complex(2), FieldSpec::rationals()));
  CHECK(is_cm(SimplicialComplex::irrelevant(2), FieldSpec::rationals()));
  CHECK_FALSE(is_cm(from({{0, 1, 2}, {3, 4}}), FieldSpec::rationals()));
}

TEST_CASE("depth agrees with the link-homology oracle and the skeleton identity") {
  for (int seed = 0; seed < 80; ++seed) {
    auto c = (seed % 3 == 0)
                 ? catalog::random_mixed_complex(4 + seed % 4, 4, 0.4, 900 + seed)
                 : catalog::random_complex(4 + seed % 4, 2 + seed % 3, 0.4, 900 + seed);
    auto faces = oracle::faces_of(c);
    for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
      int dep = depth(c, f);
      CHECK(dep == oracle::depth(faces, oracle_prime(f)));
      CHECK(dep == depth_by_skeletons(c, f));
      CHECK(is_cm(c, f) == oracle::is_cm(faces, oracle_prime(f)));
      auto r = analyze_cm(c, f);
      CHECK(r.depth == dep);
      CHECK(r.is_cm == (dep == c.d()));
      CHECK(r.witness.has_value() == (dep < c.d()));
      if (r.witness) {
        CHECK(r.witness->bound() == dep);
        auto lk = oracle::link(faces, r.witness->face.bits());
        auto b = oracle::reduced_homology(lk, oracle_prime(f));
        REQUIRE(r.witness->degree + 1 < static_cast<int>(b.size()));
        CHECK(b[static_cast<std::size_t>(r.witness->degree + 1)] != 0);
      }
    }
  }
}

TEST_CASE("jobs never change the reported depth") {
  for (int seed = 0; seed < 20; ++seed) {
    auto c = catalog::random_complex(7, 3, 0.5, 4242 + seed);
    auto one = analyze_cm(c, FieldSpec::prime(2), 1);
    auto four = analyze_cm(c, FieldSpec::prime(2), 4);
    CHECK(one.depth == four.depth);
    CHECK(one.witness.has_value() == four.witness.has_value());
    if (one.witness) {
      CHECK(one.witness->face == four.witness->face);
      CHECK(one.witness->degree == four.witness->degree);
    }
    CHECK(removable_facets(c, FieldSpec::rationals(), 1) ==
          removable_facets(c, FieldSpec::rationals(), 3));
  }
}

TEST_CASE("Serre's condition") {
  auto q = FieldSpec::rationals();
  auto bowtie = from({{0, 1, 2}, {2, 3, 4}});
  CHECK(satisfies_serre(bowtie, q, 1));
  CHECK_FALSE(satisfies_serre(bowtie, q, 2));
  CHECK_THROWS_AS(satisfies_serre(bowtie, q, 0), Error);
  for (const auto& name : {"octahedron", "k_6_2", "dunce_hat_8"})
    for (int l = 1; l <= 4; ++l) CHECK(satisfies_serre(catalog::get(name), q, l));
  // S_d is CM for pure complexes
  for (int seed = 0; seed < 30; ++seed) {
    auto c = catalog::random_complex(6, 3, 0.5, 77 + seed);
    CHECK(satisfies_serre(c, q, c.d()) == is_cm(c, q));
  }
}

TEST_CASE("minimal and strongly CM") {
  auto q = FieldSpec::rationals();
  auto rp2 = catalog::get("rp2_6");
  auto m = is_minimal_cm(rp2, FieldSpec::prime(3), false);
  CHECK(m.is_minimal);
  CHECK(m.brute_forced);
  CHECK(m.removable_facets.empty());
  CHECK_FALSE(is_minimal_cm(rp2, FieldSpec::prime(2), false).is_cm);

  auto oct = catalog::get("octahedron");
  auto mo = is_minimal_cm(oct, q, true);
  CHECK(mo.is_cm);
  CHECK_FALSE(mo.is_minimal);
  CHECK(mo.removable_facets.size() == 8);
  CHECK(is_strongly_cm(oct, q));
  CHECK_FALSE(is_strongly_cm(rp2, q));

  auto dunce = catalog::get("dunce_hat_8");
  auto fast = is_minimal_cm(dunce, q, true);
  CHECK(fast.is_minimal);
  REQUIRE(fast.fast_path.has_value());
  CHECK(fast.fast_path->l == 1);
  CHECK_FALSE(fast.brute_forced);
  auto brute = is_minimal_cm(dunce, q, false);
  CHECK(brute.is_minimal);
  CHECK(brute.brute_forced);
  // void complex: CM and vacuously minimal
  CHECK(is_minimal_cm(SimplicialComplex::void_complex(2), q, false).is_minimal);
}

TEST_CASE("minimal CM complexes are acyclic (random search)") {
  auto q = FieldSpec::rationals();
  int found = 0;
  for (int seed = 0; seed < 150; ++seed) {
    auto c = catalog::random_complex(6, 3, 0.35, 3100 + seed);
    auto m = is_minimal_cm(c, q, false);
    if (!m.is_minimal) continue;
    ++found;
    CHECK(is_acyclic(c, q));
  }
  MESSAGE("minimal CM samples: " << found);
}

TEST_CASE("fast-path certificates imply brute-force minimality") {
  for (int seed = 0; seed < 150; ++seed) {
    auto c = catalog::random_complex(6, 3, 0.45, 6100 + seed);
    auto q = FieldSpec::rationals();
    auto cert = fast_path_certificate(c, q);
    if (!cert) continue;
    CHECK(is_minimal_cm(c, q, false).is_minimal);
  }
  for (const auto& name : {"rp2_6", "dunce_hat_8", "rudin_ball", "ziegler_ball"})
    CHECK(fast_path_certificate(catalog::get(name),
                                name == std::string("rp2_6") ? FieldSpec::prime(3)
                                                             : FieldSpec::rationals())
              .has_value());
  CHECK_FALSE(fast_path_certificate(catalog::get("octahedron"), FieldSpec::rationals()));
}

TEST_CASE("ridge certificates") {
  auto q = FieldSpec::rationals();
  auto dunce = catalog::get("dunce_hat_8");
  for (Face f : dunce.facets()) {
    auto r = ridge_certificate(dunce, q, f);
    CHECK(r.verdict == RidgeCertificate::Verdict::Certified);
    CHECK(r.l == 1);
    CHECK(r.sigma == Face{});
    CHECK(r.top_h == -1);
  }
  auto oct = catalog::get("octahedron");
  CHECK(ridge_certificate(oct, q, oct.facets()[0]).verdict ==
        RidgeCertificate::Verdict::Inapplicable);
  CHECK_THROWS_AS(ridge_certificate(oct, q, Face{0, 2}), Error);
  // A stack of two tetrahedra: each facet has three boundary ridges, too
  // many for the available acyclicity.
  auto stack = from({{0, 1, 2, 3}, {1, 2, 3, 4}});
  auto r = ridge_certificate(stack, q, stack.facets()[0]);
  CHECK(r.verdict != RidgeCertificate::Verdict::Certified);
  // Certified facets really are essential.
  auto ziegler = catalog::get("ziegler_ball");
  for (Face f : ziegler.facets()) {
    auto rc = ridge_certificate(ziegler, q, f);
    if (rc.verdict == RidgeCertificate::Verdict::Certified)
      CHECK_FALSE(is_cm(remove_facet(ziegler, f), q));
  }
}

TEST_CASE("facet death keeps depth and lowers only the top") {
  auto q = FieldSpec::rationals();
  for (const auto& c : {catalog::get("octahedron"), catalog::get("k_6_2"),
                        SimplicialComplex::boundary_of_simplex(5)}) {
    auto fd = facet_death(c, q);
    REQUIRE(fd.has_value());
    CHECK(fd->depth_before == fd->depth_after);
    auto after = remove_facet(c, fd->facet);
    auto hb = reduced_homology(c, q), ha = reduced_homology(after, q);
    CHECK(ha[c.dim()] == hb[c.dim()] - 1);
    for (int i = -1; i < c.dim(); ++i) CHECK(ha[i] == hb[i]);
  }
  CHECK_FALSE(facet_death(catalog::get("dunce_hat_8"), q).has_value());
}

TEST_CASE("free facets and balls") {
  auto q = FieldSpec::rationals();
  auto stack = from({{0, 1, 2, 3}, {1, 2, 3, 4}});
  CHECK(free_facets(stack).size() == 2);
  CHECK(free_facet(stack).has_value());
  CHECK_FALSE(is_strongly_nonshellable(stack));
  CHECK_FALSE(is_strongly_nonshellable(SimplicialComplex::simplex(4)));
  CHECK(check_ball_necessary(stack, q).passed());
  for (const auto& name : {"rudin_ball", "ziegler_ball"}) {
    auto ball = catalog::get(name);
    CHECK(check_ball_necessary(ball, q).passed());
    CHECK(free_facets(ball).empty());
    CHECK(is_strongly_nonshellable(ball));
  }
  auto sphere = check_ball_necessary(catalog::get("octahedron"), q);
  CHECK_FALSE(sphere.passed());
  CHECK_FALSE(sphere.acyclic);
  CHECK_FALSE(sphere.boundary_nonempty);
  CHECK_FALSE(check_ball_necessary(catalog::get("dunce_hat_8"), q).passed());
  CHECK_THROWS_AS(free_facets(from({{0, 1, 2}, {3, 4}})), Error);
}
