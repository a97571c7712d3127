#include <algorithm>

#include "doctest.h"
#include "mincm/catalog.hpp"
#include "mincm/complex.hpp"
#include "mincm/error.hpp"
#include "oracles.hpp"

using namespace mincm;

namespace {

std::vector<SimplicialComplex> sample_complexes(int count, std::uint64_t seed) {
  std::vector<SimplicialComplex> out;
  for (int i = 0; i < count; ++i) {
    int n = 3 + i % 5;
    int d = 1 + (i / 5) % std::min(n, 4);
    double density = 0.25 + 0.1 * (i % 6);
    if (i % 3 == 0)
      out.push_back(catalog::random_mixed_complex(n, d, density, seed + i));
    else
      out.push_back(catalog::random_complex(n, d, density, seed + i));
  }
  return out;
}

oracle::FaceSet to_set(const SimplicialComplex& c) { return oracle::faces_of(c); }

}  // namespace

TEST_CASE("face masks: set operations and lexicographic order") {
  Face a{0, 2, 5};
  CHECK(a.size() == 3);
  CHECK(a.dim() == 2);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK((a | Face{1}) == Face{0, 1, 2, 5});
  CHECK((a - Face{2}) == Face{0, 5});
  CHECK(a.to_string() == "{0,2,5}");
  CHECK(Face{}.to_string() == "{}");
  CHECK(lex_less(Face{0, 1, 5}, Face{0, 2, 3}));
  CHECK(lex_less(Face{0, 1}, Face{0, 1, 2}));
  CHECK_FALSE(lex_less(Face{1}, Face{0, 5}));
  int subsets = 0;
  a.for_each_subset([&](Face) { ++subsets; });
  CHECK(subsets == 8);
}

TEST_CASE("construction keeps a canonical facet antichain") {
  std::size_t absorbed = 0;
  auto c = SimplicialComplex::from_facets(
      std::vector<std::vector<int>>{{2, 1, 0}, {0, 1}, {3, 2}, {1, 2, 0}},
      &absorbed);
  CHECK(c.num_facets() == 2);
  CHECK(absorbed == 2);
  CHECK(c.facets()[0] == Face{0, 1, 2});
  CHECK(c.facets()[1] == Face{2, 3});
  CHECK(c.d() == 3);
  CHECK(c.dim() == 2);
  CHECK_FALSE(is_pure(c));
  CHECK(c.contains(Face{1, 2}));
  CHECK_FALSE(c.contains(Face{1, 3}));
}

TEST_CASE("void and irrelevant complexes") {
  auto v = SimplicialComplex::void_complex(3);
  auto e = SimplicialComplex::irrelevant(3);
  CHECK(v.is_void());
  CHECK(v.d() == 0);
  CHECK(f_vector(v).entries.empty());
  CHECK(e.is_irrelevant());
  CHECK(f_vector(e).entries == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(h_vector(v), Error);
}

TEST_CASE("labels follow natural order") {
  auto c = SimplicialComplex::from_facets(
      std::vector<std::vector<std::string>>{{"10", "9"}, {"9", "2"}});
  CHECK(c.label(0) == "2");
  CHECK(c.label(1) == "9");
  CHECK(c.label(2) == "10");
  auto named = SimplicialComplex::from_facets(
      std::vector<std::vector<std::string>>{{"b", "a"}, {"c"}});
  CHECK(named.labels_of(named.facets()[0]) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("f-vector and h-vector agree with enumeration") {
  for (const auto& c : sample_complexes(60, 11)) {
    auto f = f_vector(c);
    CHECK(f.entries == oracle::f_vector(to_set(c)));
    auto h = h_vector(c);
    // h_d = (-1)^(d-1) reduced Euler characteristic
    int d = c.d();
    std::int64_t chi = reduced_euler_characteristic(c);
    CHECK(h.entries.back() == ((d - 1) % 2 == 0 ? chi : -chi));
    // sum of h equals f_{d-1}
    std::int64_t sum = 0;
    for (auto x : h.entries) sum += x;
    CHECK(sum == f[d - 1]);
  }
  CHECK(h_vector(skeleton(SimplicialComplex::simplex(6), 2)).entries ==
        std::vector<std::int64_t>{1, 3, 6, 10});
}

TEST_CASE("links agree with enumeration") {
  for (const auto& c : sample_complexes(40, 23)) {
    auto all = to_set(c);
    for (oracle::Mask t : all) {
      auto lk = link(c, Face(t));
      CHECK(to_set(lk) == oracle::link(all, t));
      CHECK(lk.num_vertices() == c.num_vertices());
    }
  }
  auto c = SimplicialComplex::simplex(3);
  CHECK_THROWS_AS(link(c, Face{0, 5}), Error);
  CHECK(link(c, Face{0, 1, 2}).is_irrelevant());
}

TEST_CASE("skeleta, induced subcomplexes, facet removal") {
  auto s = SimplicialComplex::simplex(5);
  for (int i = -1; i <= 4; ++i) {
    auto k = skeleton(s, i);
    auto f = f_vector(k);
    CHECK(f.top_dim() == i);
  }
  CHECK_THROWS_AS(skeleton(s, 5), Error);
  CHECK_THROWS_AS(skeleton(s, -2), Error);
  auto oct = catalog::get("octahedron");
  auto induced = induced_subcomplex(oct, Face{0, 1, 2});
  CHECK(to_set(induced) ==
        oracle::faces_of(std::vector<oracle::Mask>{0b101, 0b110}));
  auto removed = remove_facet(oct, oct.facets()[0]);
  CHECK(removed.num_facets() == 7);
  CHECK_THROWS_AS(remove_facet(oct, Face{0, 1}), Error);
}

TEST_CASE("join multiplies f-polynomials") {
  auto samples = sample_complexes(12, 5);
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    const auto& a = samples[i];
    const auto& b = samples[i + 1];
    if (a.num_vertices() + b.num_vertices() > 12) continue;
    auto j = join(a, b);
    auto fa = f_vector(a).entries, fb = f_vector(b).entries;
    std::vector<std::int64_t> prod(fa.size() + fb.size() - 1, 0);
    for (std::size_t x = 0; x < fa.size(); ++x)
      for (std::size_t y = 0; y < fb.size(); ++y) prod[x + y] += fa[x] * fb[y];
    CHECK(f_vector(j).entries == prod);
  }
  // A cone over anything is a cone: join with a point.
  auto cone = join(catalog::get("rp2_6"), SimplicialComplex::simplex(1));
  CHECK(cone.num_vertices() == 7);
  CHECK(cone.num_facets() == 10);
}

TEST_CASE("alexander dual agrees with enumeration and is an involution") {
  for (const auto& c : sample_complexes(50, 101)) {
    int n = c.num_vertices();
    auto dual = alexander_dual(c, n);
    CHECK(to_set(dual) == oracle::alexander_dual(to_set(c), n));
    CHECK(to_set(alexander_dual(dual, n)) == to_set(c));
    // minimal non-faces are the minimal faces missing from the complex
    auto all = to_set(c);
    for (Face m : minimal_nonfaces(c, n)) {
      CHECK_FALSE(all.count(m.bits()));
      m.for_each_vertex([&](Vertex v) {
        CHECK(all.count((m - Face{v}).bits()));
      });
    }
  }
  auto rp2 = catalog::get("rp2_6");
  CHECK(alexander_dual(rp2, 6).num_facets() == 10);
  CHECK_THROWS_AS(alexander_dual(rp2, 5), Error);
}

TEST_CASE("boundary ridges, dual graph, pseudomanifolds") {
  auto oct = catalog::get("octahedron");
  CHECK(boundary_ridges(oct).empty());
  CHECK(has_no_boundary_ridges(oct));
  CHECK(is_pseudomanifold(oct));
  auto disk = remove_facet(oct, oct.facets()[0]);
  CHECK(boundary_ridges(disk).size() == 3);
  CHECK(f_vector(boundary_complex(disk)).entries ==
        std::vector<std::int64_t>{1, 3, 3});
  CHECK_FALSE(is_pseudomanifold(disk));
  auto two = SimplicialComplex::from_facets(
      std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
  CHECK_FALSE(dual_graph(two).is_connected());
  CHECK(ridges_per_facet(two) == std::vector<int>{3, 3});
  auto rp2 = catalog::get("rp2_6");
  CHECK(is_pseudomanifold(rp2));
  CHECK(is_pseudomanifold(catalog::get("dunce_hat_8")) == false);
  CHECK(has_no_boundary_ridges(catalog::get("dunce_hat_8")));
}

TEST_CASE("gluing and intersecting by label") {
  auto a = SimplicialComplex::from_facets(
      std::vector<std::vector<std::string>>{{"x", "y", "z"}});
  auto b = SimplicialComplex::from_facets(
      std::vector<std::vector<std::string>>{{"y", "z", "w"}});
  auto g = glue(a, b);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_facets() == 2);
  auto i = intersect(a, b);
  CHECK(labeled_facets(i) == std::vector<std::vector<std::string>>{{"y", "z"}});
}

TEST_CASE("compact drops unused vertices and keeps labels") {
  auto c = SimplicialComplex::from_faces(6, {Face{1, 4}, Face{4, 5}});
  auto k = compact(c);
  CHECK(k.num_vertices() == 3);
  CHECK(labeled_facets(k) ==
        std::vector<std::vector<std::string>>{{"1", "4"}, {"4", "5"}});
}
