#pragma once

// Symbolic group elements M(sigma, h, eps) and their multiplication rules.
//
// Composition convention: (tau sigma)(j) = tau(sigma(j)), written
// compose(tau, sigma). With it, M(sigma,.,0) M(tau,.,0) = M(compose(tau, sigma),.,0).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aughts/involution.hpp"

namespace aughts {

struct Permutation {
  std::vector<int> images;  // images[j-1] = sigma(j), values 1..n

  static Permutation identity(int n);
  /// The transposition (a b) on {1..n}.
  static Permutation transposition(int n, int a, int b);
  /// Throws ArgumentError unless `images` is a bijection of {1..n}.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int j) const { return images[static_cast<std::size_t>(j - 1)]; }
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
};

/// (p o q)(j) = p(q(j)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// Multiplicative order in the symmetric group.
unsigned long order(const Permutation& p);
/// Product of a sequence read left to right: the first factor acts first.
Permutation product_left_to_right(const std::vector<Permutation>& factors);
/// Cycle notation such as "(1 2)(3 4)"; "()" for the identity.
std::string cycle_string(const Permutation& p);

struct SignedPermElement {
  Permutation sigma;
  int h = 1;
  int eps = 0;

  int degree() const { return sigma.degree(); }
  auto operator<=>(const SignedPermElement&) const = default;
};

/// Canonical form: h = 1 whenever eps = 0.
SignedPermElement normalize(SignedPermElement e);
SignedPermElement identity_element(int n);
/// K_h = M(id, h, 1).
SignedPermElement generator(int n, int h);

SmallIntMatrix to_matrix(const SignedPermElement& e);
SmallIntMatrix to_matrix(const SignedPermElement& e, int n);

SignedPermElement msih_mul(const SignedPermElement& a, const SignedPermElement& b);
SignedPermElement msih_inverse(const SignedPermElement& a);
/// Decodes a matrix of either M(sigma, h, eps) shape; throws NotGroupElement otherwise.
SignedPermElement matrix_to_msih(const SmallIntMatrix& m);

/// "M(σ=[2,1,3];h=1;eps=0)".
std::string to_text(const SignedPermElement& e);
SignedPermElement parse_element(std::string_view text);

}  // namespace aughts
