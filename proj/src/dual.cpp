#include "mincm/dual.hpp"

#include <algorithm>
#include <unordered_set>

#include "mincm/error.hpp"
#include "mincm/homology.hpp"
#include "mincm/parallel.hpp"

namespace mincm {

SquarefreeIdeal SquarefreeIdeal::from_generators(int n,
                                                 std::vector<Face> supports) {
  // A complex generated by the supports keeps exactly the maximal ones; here
  // the minimal ones are wanted.
  std::sort(supports.begin(), supports.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  SquarefreeIdeal ideal;
  ideal.n = n;
  for (Face s : supports) {
    if (s.span() > n)
      throw Error(ErrorKind::MalformedInput,
                  "generator " + s.to_string() + " outside the variables");
    bool redundant = std::any_of(ideal.generators.begin(), ideal.generators.end(),
                                 [s](Face g) { return g.is_subset_of(s); });
    if (!redundant) ideal.generators.push_back(s);
  }
  std::sort(ideal.generators.begin(), ideal.generators.end(), LexLess{});
  return ideal;
}

std::optional<int> SquarefreeIdeal::common_degree() const {
  if (generators.empty()) return std::nullopt;
  int deg = generators.front().size();
  for (Face g : generators)
    if (g.size() != deg) return std::nullopt;
  return deg;
}

bool SquarefreeIdeal::contains_monomial(Face support) const {
  return std::any_of(generators.begin(), generators.end(),
                     [support](Face g) { return g.is_subset_of(support); });
}

SquarefreeIdeal dual_ideal(const SimplicialComplex& c, int n) {
  if (n < c.num_vertices())
    throw Error(ErrorKind::OutOfRange,
                "n = " + std::to_string(n) + " is below the " +
                    std::to_string(c.num_vertices()) + "-vertex universe");
  if (c.is_void())
    throw Error(ErrorKind::DegenerateIdeal,
                "the void complex has no dual ideal generators");
  std::vector<Face> gens;
  Face all = Face::range(n);
  for (Face f : c.facets()) gens.push_back(all - f);
  return SquarefreeIdeal::from_generators(n, std::move(gens));
}

SquarefreeIdeal colon(const SquarefreeIdeal& ideal, Face m) {
  std::vector<Face> gens;
  for (Face g : ideal.generators) gens.push_back(g - m);
  return SquarefreeIdeal::from_generators(ideal.n, std::move(gens));
}

namespace {

void require_proper(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero())
    throw Error(ErrorKind::DegenerateIdeal, "zero ideal has no resolution");
  if (ideal.is_unit())
    throw Error(ErrorKind::DegenerateIdeal,
                "unit ideal (dual of a full simplex) is excluded");
}

}  // namespace

BettiTable betti_table(const SquarefreeIdeal& ideal, const FieldSpec& field,
                       unsigned jobs) {
  require_proper(ideal);
  const int n = ideal.n;
  if (n > kMaxBettiVariables)
    throw Error(ErrorKind::TooLarge, "Hochster sums support at most " +
                                         std::to_string(kMaxBettiVariables) +
                                         " variables");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<char> is_face(count);
  for (std::uint64_t s = 0; s < count; ++s)
    is_face[s] = ideal.contains_monomial(Face(s)) ? 0 : 1;

  // Per-W contributions, summed afterwards in W order.
  std::vector<std::vector<std::pair<int, std::int64_t>>> parts(count);
  parallel_for(count, jobs, [&](std::size_t w_index) {
    const Face w(w_index);
    const int j = w.size();
    std::vector<std::vector<Face>> buckets(static_cast<std::size_t>(j + 1));
    w.for_each_subset([&](Face s) {
      if (is_face[s.bits()]) buckets[static_cast<std::size_t>(s.size())].push_back(s);
    });
    while (!buckets.empty() && buckets.back().empty()) buckets.pop_back();
    for (auto& b : buckets) std::sort(b.begin(), b.end(), LexLess{});
    BettiVector h = reduced_homology(buckets, field);
    for (int t = -1; t <= static_cast<int>(h.dims.size()) - 2; ++t) {
      int i = j - t - 2;
      if (h[t] != 0 && i >= 0) parts[w_index].emplace_back(i, h[t]);
    }
  });
  BettiTable table;
  for (std::uint64_t w = 0; w < count; ++w)
    for (const auto& [i, v] : parts[w])
      table.entries[{i, Face(w).size()}] += v;
  return table;
}

bool has_linear_resolution(const SquarefreeIdeal& ideal, const FieldSpec& field,
                           unsigned jobs) {
  require_proper(ideal);
  auto deg = ideal.common_degree();
  if (!deg) return false;
  for (const auto& [key, value] : betti_table(ideal, field, jobs).entries)
    if (value != 0 && key.second != key.first + *deg) return false;
  return true;
}

namespace {

/// (placed) : m generated by variables.
bool colon_is_linear(const std::vector<Face>& gens, std::uint64_t placed,
                     Face m) {
  std::vector<Face> quotients;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if ((placed >> i) & 1U) quotients.push_back(gens[i] - m);
  for (Face q : quotients) {
    bool has_variable = std::any_of(quotients.begin(), quotients.end(),
                                    [q](Face v) {
                                      return v.size() == 1 && v.is_subset_of(q);
                                    });
    if (!has_variable) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Face>> linear_quotients_order(
    const SquarefreeIdeal& ideal) {
  const auto& gens = ideal.generators;
  if (gens.size() > 64)
    throw Error(ErrorKind::TooLarge, "ordering search supports at most 64 generators");
  const std::uint64_t full =
      gens.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << gens.size()) - 1;
  std::unordered_set<std::uint64_t> dead;
  std::vector<std::size_t> order;
  auto search = [&](auto&& self, std::uint64_t placed) -> bool {
    if (placed == full) return true;
    if (dead.count(placed) != 0) return false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if (placed & bit) continue;
      if (!colon_is_linear(gens, placed, gens[i])) continue;
      order.push_back(i);
      if (self(self, placed | bit)) return true;
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<Face> out;
  for (std::size_t i : order) out.push_back(gens[i]);
  return out;
}

bool colon_is_degree_one(const SquarefreeIdeal& ideal, Face facet, int n) {
  if (ideal.is_zero()) return true;
  SquarefreeIdeal q = colon(ideal, Face::range(n) - facet);
  return std::all_of(q.generators.begin(), q.generators.end(),
                     [](Face g) { return g.size() == 1; });
}

}  // namespace mincm
