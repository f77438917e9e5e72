#include "aughts/group_atlas.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace aughts {

std::optional<std::size_t> GroupCatalog::find(const SignedPermElement& e) const {
  auto it = index.find(normalize(e));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<int> GroupCatalog::word(std::size_t i) const {
  std::vector<int> w;
  for (long cur = static_cast<long>(i); parent[static_cast<std::size_t>(cur)].first >= 0;
       cur = parent[static_cast<std::size_t>(cur)].first)
    w.push_back(parent[static_cast<std::size_t>(cur)].second);
  return w;
}

int GroupCatalog::max_distance() const {
  return distance.empty() ? 0 : *std::max_element(distance.begin(), distance.end());
}

std::vector<std::size_t> GroupCatalog::distance_histogram() const {
  std::vector<std::size_t> hist(static_cast<std::size_t>(max_distance()) + 1, 0);
  for (int d : distance) ++hist[static_cast<std::size_t>(d)];
  return hist;
}

namespace {

std::size_t factorial(int k) {
  std::size_t f = 1;
  for (int t = 2; t <= k; ++t) f *= static_cast<std::size_t>(t);
  return f;
}

}  // namespace

GroupCatalog enumerate_group(int n) {
  if (n < 1 || n > kMaxEnumerationDimension)
    throw ArgumentError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationDimension));
  GroupCatalog cat;
  cat.n = n;
  std::vector<SignedPermElement> gens;
  for (int j = 1; j <= n; ++j) gens.push_back(generator(n, j));

  auto add = [&](SignedPermElement e, int dist, long par, int gen, Permutation image) {
    cat.index.emplace(e, cat.elements.size());
    cat.elements.push_back(std::move(e));
    cat.distance.push_back(dist);
    cat.parent.emplace_back(par, gen);
    cat.psi_images.push_back(std::move(image));
  };
  add(identity_element(n), 0, -1, 0, Permutation::identity(n + 1));

  for (std::size_t head = 0; head < cat.elements.size(); ++head) {
    for (int j = 1; j <= n; ++j) {
      SignedPermElement child = normalize(msih_mul(gens[static_cast<std::size_t>(j - 1)], cat.elements[head]));
      if (cat.index.contains(child)) continue;
      Permutation image = compose(psi_generator(n, j), cat.psi_images[head]);
      add(std::move(child), cat.distance[head] + 1, static_cast<long>(head), j, std::move(image));
    }
  }
  if (cat.size() != factorial(n + 1))
    throw ConsistencyError("M(" + std::to_string(n) + ") has " + std::to_string(cat.size()) +
                           " elements, expected (n+1)!");
  return cat;
}

unsigned long element_order(const SignedPermElement& e) {
  const SignedPermElement id = identity_element(e.degree());
  SignedPermElement acc = normalize(e);
  unsigned long k = 1;
  while (acc != id) {
    acc = normalize(msih_mul(acc, e));
    ++k;
  }
  return k;
}

std::map<unsigned long, std::size_t> order_spectrum(const GroupCatalog& cat) {
  std::map<unsigned long, std::size_t> spectrum;
  for (const auto& e : cat.elements) ++spectrum[element_order(e)];
  return spectrum;
}

std::vector<std::vector<SignedPermElement>> coset_decomposition(const GroupCatalog& cat) {
  std::vector<SignedPermElement> subgroup;
  for (const auto& e : cat.elements)
    if (e.eps == 0) subgroup.push_back(e);
  std::sort(subgroup.begin(), subgroup.end());

  std::vector<std::vector<SignedPermElement>> blocks{subgroup};
  std::set<SignedPermElement> covered(subgroup.begin(), subgroup.end());
  for (int j = 1; j <= cat.n; ++j) {
    std::vector<SignedPermElement> block;
    for (const auto& g : subgroup) block.push_back(normalize(msih_mul(generator(cat.n, j), g)));
    std::sort(block.begin(), block.end());
    for (const auto& e : block)
      if (!covered.insert(e).second) throw ConsistencyError("cosets K_j M_0(n) overlap");
    blocks.push_back(std::move(block));
  }
  if (covered.size() != cat.size()) throw ConsistencyError("cosets do not cover M(n)");
  return blocks;
}

Permutation psi_generator(int n, int j) {
  if (j < 1 || j > n) throw ArgumentError("generator index outside 1..n");
  return Permutation::transposition(n + 1, 1, j + 1);
}

Permutation psi(const SignedPermElement& e, const GroupCatalog& cat) {
  auto idx = cat.find(e);
  if (!idx) throw ArgumentError("element " + to_text(e) + " is not in M(" + std::to_string(cat.n) + ")");
  return cat.psi_images[*idx];
}

Permutation psi_of_word(int n, const std::vector<int>& word) {
  Permutation acc = Permutation::identity(n + 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = compose(psi_generator(n, *it), acc);
  return acc;
}

SignedPermElement element_of_word(int n, const std::vector<int>& word) {
  SignedPermElement acc = identity_element(n);
  for (int j : word) acc = normalize(msih_mul(acc, generator(n, j)));
  return acc;
}

const Permutation& IsoWitness::image(const SignedPermElement& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), normalize(e));
  if (it == elements.end() || *it != normalize(e)) throw ArgumentError("element not in the witness domain");
  return forward[static_cast<std::size_t>(it - elements.begin())];
}

const SignedPermElement& IsoWitness::preimage(const Permutation& p) const {
  auto it = backward.find(p);
  if (it == backward.end()) throw ArgumentError("permutation not in the witness range");
  return elements[it->second];
}

IsoWitness verify_isomorphism(int n, IsoCheckCounts* counts) {
  if (n < 1 || n > kMaxIsomorphismDimension)
    throw ArgumentError("isomorphism check supports 1 <= n <= " + std::to_string(kMaxIsomorphismDimension));
  const GroupCatalog cat = enumerate_group(n);

  for (int j = 1; j <= n; ++j)
    if (psi(generator(n, j), cat) != psi_generator(n, j))
      throw ConsistencyError("psi(K_j) is not the transposition (1, j+1)");

  // Word independence: random words against the breadth-first words.
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long long>(n));
  std::uniform_int_distribution<int> pick(1, n);
  std::uniform_int_distribution<int> len(0, 4 * (n + 1));
  constexpr std::size_t kRandomWords = 1000;
  for (std::size_t t = 0; t < kRandomWords; ++t) {
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (int& j : w) j = pick(rng);
    if (psi_of_word(n, w) != psi(element_of_word(n, w), cat))
      throw ConsistencyError("psi depends on the word chosen for an element");
  }

  IsoWitness wit;
  wit.n = n;
  std::vector<std::size_t> perm(cat.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return cat.elements[a] < cat.elements[b]; });
  for (std::size_t i : perm) {
    wit.elements.push_back(cat.elements[i]);
    wit.forward.push_back(cat.psi_images[i]);
  }
  for (std::size_t i = 0; i < wit.forward.size(); ++i) {
    if (!wit.backward.emplace(wit.forward[i], i).second) throw ConsistencyError("psi is not injective");
    if (order(wit.forward[i]) != element_order(wit.elements[i]))
      throw ConsistencyError("psi does not preserve the order of " + to_text(wit.elements[i]));
  }
  if (wit.backward.size() != factorial(n + 1)) throw ConsistencyError("psi is not onto S_{n+1}");

  std::size_t pairs = 0;
  for (std::size_t a = 0; a < cat.size(); ++a) {
    for (std::size_t b = 0; b < cat.size(); ++b) {
      const auto prod = cat.find(msih_mul(cat.elements[a], cat.elements[b]));
      if (!prod) throw ConsistencyError("M(n) is not closed under multiplication");
      if (cat.psi_images[*prod] != compose(cat.psi_images[a], cat.psi_images[b]))
        throw ConsistencyError("psi is not a homomorphism");
      ++pairs;
    }
  }
  if (counts) {
    counts->homomorphism_pairs = pairs;
    counts->random_words = kRandomWords;
  }
  return wit;
}

Permutation full_cycle_permutation(int n) {
  if (n < 1) throw ArgumentError("dimension must be positive");
  std::vector<Permutation> factors;
  for (int k = 2; k <= n + 1; ++k) factors.push_back(Permutation::transposition(n + 1, 1, k));
  return product_left_to_right(factors);
}

unsigned long full_cycle_order_via_sym(int n) {
  const unsigned long sym = order(full_cycle_permutation(n));
  const unsigned long mat = multiplicative_order(full_cycle_matrix(n, Direction::down));
  if (sym != mat)
    throw ConsistencyError("symmetric-group order " + std::to_string(sym) + " differs from matrix order " +
                           std::to_string(mat));
  return sym;
}

SignedPermElement embed(const SignedPermElement& e) {
  SignedPermElement out = e;
  out.sigma.images.push_back(e.degree() + 1);
  return out;
}

}  // namespace aughts
