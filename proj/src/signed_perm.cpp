#include "aughts/signed_perm.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace aughts {

Permutation Permutation::identity(int n) {
  if (n < 1) throw ArgumentError("permutation degree must be positive");
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || a > n || b < 1 || b > n) throw ArgumentError("transposition point outside 1..n");
  std::swap(p.images[static_cast<std::size_t>(a - 1)], p.images[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw ArgumentError("permutation must have positive degree");
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v)])
      throw ArgumentError("images do not form a bijection of 1..n");
    hit[static_cast<std::size_t>(v)] = true;
  }
  return Permutation{std::move(images)};
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images.size(); ++k)
    if (images[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw ArgumentError("composing permutations of different degree");
  Permutation out;
  out.images.resize(q.images.size());
  for (std::size_t k = 0; k < q.images.size(); ++k) out.images[k] = p(q.images[k]);
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out;
  out.images.resize(p.images.size());
  for (std::size_t k = 0; k < p.images.size(); ++k)
    out.images[static_cast<std::size_t>(p.images[k] - 1)] = static_cast<int>(k) + 1;
  return out;
}

unsigned long order(const Permutation& p) {
  unsigned long k = 1;
  Permutation acc = p;
  while (!acc.is_identity()) {
    acc = compose(p, acc);
    ++k;
  }
  return k;
}

Permutation product_left_to_right(const std::vector<Permutation>& factors) {
  if (factors.empty()) throw ArgumentError("empty product has no degree");
  Permutation acc = Permutation::identity(factors.front().degree());
  for (const auto& f : factors) acc = compose(f, acc);
  return acc;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.images.size() + 1, false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (done[static_cast<std::size_t>(start)] || p(start) == start) continue;
    out += '(';
    int j = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j);
      done[static_cast<std::size_t>(j)] = true;
      j = p(j);
      first = false;
    } while (j != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

SignedPermElement normalize(SignedPermElement e) {
  if (e.eps == 0) e.h = 1;
  return e;
}

SignedPermElement identity_element(int n) { return {Permutation::identity(n), 1, 0}; }

SignedPermElement generator(int n, int h) {
  if (h < 1 || h > n) throw ArgumentError("generator index outside 1..n");
  return {Permutation::identity(n), h, 1};
}

namespace {

void check_element(const SignedPermElement& e) {
  if (e.eps != 0 && e.eps != 1) throw ArgumentError("eps must be 0 or 1");
  if (e.h < 1 || e.h > e.degree()) throw ArgumentError("pivot h outside 1..n");
}

}  // namespace

SmallIntMatrix to_matrix(const SignedPermElement& e) {
  check_element(e);
  const int n = e.degree();
  SmallIntMatrix m = SmallIntMatrix::Zero(n, n);
  for (int j = 1; j <= n; ++j) {
    const int k = e.sigma(j);
    m(j - 1, k - 1) = sign_pow<std::int64_t>(j + k);
  }
  if (e.eps == 1) m.row(e.h - 1) = alternating_row(n, e.h);
  return m;
}

SmallIntMatrix to_matrix(const SignedPermElement& e, int n) {
  if (e.degree() != n)
    throw ArgumentError("element has degree " + std::to_string(e.degree()) + ", expected " + std::to_string(n));
  return to_matrix(e);
}

SignedPermElement msih_mul(const SignedPermElement& a, const SignedPermElement& b) {
  if (a.degree() != b.degree()) throw ArgumentError("multiplying elements of different degree");
  check_element(a);
  check_element(b);
  const Permutation& sigma = a.sigma;
  const Permutation& tau = b.sigma;
  Permutation ts = compose(tau, sigma);
  const int u = a.h;
  const int v = b.h;

  if (a.eps == 0 && b.eps == 0) return {std::move(ts), 1, 0};
  if (a.eps == 1 && b.eps == 0) return {std::move(ts), u, 1};
  const int w = inverse(sigma)(v);
  if (a.eps == 0) return {std::move(ts), w, 1};
  if (w == u) return {std::move(ts), 1, 0};

  Permutation eta = ts;
  eta.images[static_cast<std::size_t>(w - 1)] = ts(u);
  eta.images[static_cast<std::size_t>(u - 1)] = ts(w);
  return {std::move(eta), w, 1};
}

SignedPermElement msih_inverse(const SignedPermElement& a) {
  check_element(a);
  if (a.eps == 0) return {inverse(a.sigma), 1, 0};
  return {inverse(a.sigma), a.sigma(a.h), 1};
}

SignedPermElement matrix_to_msih(const SmallIntMatrix& m) {
  const Index n = m.rows();
  if (n < 1 || m.cols() != n) throw NotGroupElement("not a square matrix");
  int pivot = 0;
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  for (Index j = 1; j <= n; ++j) {
    if (m.row(j - 1) == alternating_row(n, j)) {
      if (pivot != 0) throw NotGroupElement("more than one alternating row");
      pivot = static_cast<int>(j);
      continue;
    }
    int col = 0;
    for (Index k = 1; k <= n; ++k) {
      const auto v = m(j - 1, k - 1);
      if (v == 0) continue;
      if (col != 0 || v != sign_pow<std::int64_t>(j + k))
        throw NotGroupElement("row " + std::to_string(j) + " is not a signed permutation row");
      col = static_cast<int>(k);
    }
    if (col == 0) throw NotGroupElement("row " + std::to_string(j) + " is zero");
    if (used[static_cast<std::size_t>(col)]) throw NotGroupElement("two rows share a column");
    used[static_cast<std::size_t>(col)] = true;
    images[static_cast<std::size_t>(j - 1)] = col;
  }

  if (pivot != 0) {
    for (Index k = 1; k <= n; ++k)
      if (!used[static_cast<std::size_t>(k)]) images[static_cast<std::size_t>(pivot - 1)] = static_cast<int>(k);
  }
  return normalize({Permutation::from_images(std::move(images)), pivot == 0 ? 1 : pivot, pivot == 0 ? 0 : 1});
}

std::string to_text(const SignedPermElement& e) {
  std::ostringstream os;
  os << "M(σ=[";
  for (std::size_t k = 0; k < e.sigma.images.size(); ++k) os << (k ? "," : "") << e.sigma.images[k];
  os << "];h=" << e.h << ";eps=" << e.eps << ")";
  return os.str();
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ArgumentError("not an integer: '" + std::string(s) + "'");
  return v;
}

void expect(std::string_view& s, std::string_view token) {
  if (s.substr(0, token.size()) != token)
    throw ArgumentError("malformed element text, expected '" + std::string(token) + "'");
  s.remove_prefix(token.size());
}

}  // namespace

SignedPermElement parse_element(std::string_view text) {
  std::string_view s = text;
  expect(s, "M(σ=[");
  const auto close = s.find(']');
  if (close == std::string_view::npos) throw ArgumentError("malformed element text, missing ']'");
  std::vector<int> images;
  std::string_view list = s.substr(0, close);
  while (!list.empty()) {
    const auto comma = list.find(',');
    images.push_back(parse_int(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  s.remove_prefix(close + 1);
  expect(s, ";h=");
  const auto semi = s.find(';');
  if (semi == std::string_view::npos) throw ArgumentError("malformed element text, missing ';'");
  const int h = parse_int(s.substr(0, semi));
  s.remove_prefix(semi);
  expect(s, ";eps=");
  const auto paren = s.find(')');
  if (paren == std::string_view::npos || paren + 1 != s.size())
    throw ArgumentError("malformed element text, missing ')'");
  const int eps = parse_int(s.substr(0, paren));
  SignedPermElement e{Permutation::from_images(std::move(images)), h, eps};
  check_element(e);
  return e;
}

}  // namespace aughts
