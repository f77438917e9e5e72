#pragma once

// Enumeration of the group generated by K_1..K_n, its Cayley distances, order
// spectrum, cosets of the eps = 0 subgroup, and the isomorphism onto S_{n+1}
// determined by K_j -> (1, j+1).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "aughts/signed_perm.hpp"

namespace aughts {

/// Elements of M(n) in breadth-first order from the identity.
///
/// The search multiplies by generators on the LEFT: a child is K_j * parent.
/// Consequently word(i) lists generators in matrix-product order, i.e. the
/// element equals K_{word[0]} K_{word[1]} ... and word[last] was applied first.
struct GroupCatalog {
  int n = 0;
  std::vector<SignedPermElement> elements;
  std::vector<int> distance;
  /// parent[i] = {index of predecessor, generator j}; {-1, 0} for the identity.
  std::vector<std::pair<long, int>> parent;
  std::map<SignedPermElement, std::size_t> index;
  /// psi image of each element, degree n + 1.
  std::vector<Permutation> psi_images;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> find(const SignedPermElement& e) const;
  std::vector<int> word(std::size_t i) const;
  int max_distance() const;
  /// histogram[d] = number of elements at Cayley distance d.
  std::vector<std::size_t> distance_histogram() const;
};

inline constexpr int kMaxEnumerationDimension = 7;
inline constexpr int kMaxIsomorphismDimension = 5;

GroupCatalog enumerate_group(int n);

unsigned long element_order(const SignedPermElement& e);
std::map<unsigned long, std::size_t> order_spectrum(const GroupCatalog& cat);

/// Block 0 is M_0(n) (eps = 0); block j is K_j M_0(n).
std::vector<std::vector<SignedPermElement>> coset_decomposition(const GroupCatalog& cat);

/// The image of a generator K_j, namely the transposition (1, j+1).
Permutation psi_generator(int n, int j);
Permutation psi(const SignedPermElement& e, const GroupCatalog& cat);
/// psi evaluated along an arbitrary word, K_{word[0]} K_{word[1]} ...
Permutation psi_of_word(int n, const std::vector<int>& word);
SignedPermElement element_of_word(int n, const std::vector<int>& word);

struct IsoWitness {
  int n = 0;
  std::vector<SignedPermElement> elements;  // sorted
  std::vector<Permutation> forward;          // forward[i] = psi(elements[i])
  std::map<Permutation, std::size_t> backward;

  const Permutation& image(const SignedPermElement& e) const;
  const SignedPermElement& preimage(const Permutation& p) const;
};

struct IsoCheckCounts {
  std::size_t homomorphism_pairs = 0;
  std::size_t random_words = 0;
};

/// Checks psi is word-independent, a bijection onto S_{n+1}, a homomorphism on
/// every pair, and preserves element orders. Throws ConsistencyError on failure.
IsoWitness verify_isomorphism(int n, IsoCheckCounts* counts = nullptr);

/// Order of pi = (1,2)(1,3)...(1,n+1), factors acting left to right; cross-checked
/// against the matrix order of K_n ... K_1.
unsigned long full_cycle_order_via_sym(int n);
Permutation full_cycle_permutation(int n);

/// M(n) -> M(n+1): sigma gains the fixed point n+1, (h, eps) unchanged.
SignedPermElement embed(const SignedPermElement& e);

}  // namespace aughts
