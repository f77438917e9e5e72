// aughts: group verification, orbit queries, lattice censuses and SVG renders.
//
// Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O, 4 resource.

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "aughts/errors.hpp"
#include "aughts/group_atlas.hpp"
#include "aughts/json_io.hpp"
#include "aughts/orbit.hpp"
#include "aughts/render.hpp"
#include "aughts/statistics.hpp"

using namespace aughts;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3, kResource = 4 };

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::int64_t v = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    while (first < last && *first == ' ') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
      throw ArgumentError(std::string("malformed ") + what + " '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ArgumentError(std::string("empty ") + what);
  return out;
}

SeedOrder parse_seed_order(const std::string& s) {
  if (s == "k1-first") return SeedOrder::k1_first;
  if (s == "k2-first") return SeedOrder::k2_first;
  throw ArgumentError("--seed-order must be k1-first or k2-first");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

struct RegionFlags {
  std::optional<std::int64_t> square, sym_square, hexagon, disk;
  std::string rect;

  void attach(CLI::App* app) {
    auto* g = app->add_option_group("region", "lattice region");
    g->add_option("--square", square, "[0,M]^2");
    g->add_option("--sym-square", sym_square, "[-R,R]^2");
    g->add_option("--hexagon", hexagon, "|x|,|y|,|x-y| <= M");
    g->add_option("--disk", disk, "x^2 + y^2 <= R^2");
    g->add_option("--rect", rect, "x0,x1,y0,y1");
    g->require_option(1);
  }

  Region region() const {
    if (square) return Region::square(*square);
    if (sym_square) return Region::sym_square(*sym_square);
    if (hexagon) return Region::hexagon(*hexagon);
    if (disk) return Region::disk(*disk);
    auto b = parse_int_list(rect, "rectangle");
    if (b.size() != 4) throw ArgumentError("--rect takes x0,x1,y0,y1");
    return Region::rect(b[0], b[1], b[2], b[3]);
  }
};

// ---- verify ---------------------------------------------------------------

void check(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

std::string matrix_text(const SmallIntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::size_t verify_involutions(int max_n) {
  std::size_t checks = 0;
  std::mt19937_64 rng(2024);
  for (Index n = 1; n <= max_n; ++n) {
    const SmallIntMatrix id = SmallIntMatrix::Identity(n, n);
    for (Index j = 1; j <= n; ++j) {
      const SmallIntMatrix kj = make_k(n, j);
      check(mat_mul(kj, kj) == id, "K_" + std::to_string(j) + "^2 != Id at n=" + std::to_string(n));
      ++checks;
      for (Index l = 1; l <= n; ++l) {
        if (l == j) continue;
        const SmallIntMatrix kl = make_k(n, l);
        check(mat_pow(mat_mul(kj, kl), 3) == id,
              "(K_" + std::to_string(j) + " K_" + std::to_string(l) + ")^3 != Id at n=" + std::to_string(n));
        check(mat_mul(mat_mul(kj, kl), kj) == mat_mul(mat_mul(kl, kj), kl),
              "braid relation fails for j=" + std::to_string(j) + ", l=" + std::to_string(l));
        checks += 2;
      }
    }
    std::vector<Index> pool(static_cast<std::size_t>(n));
    for (Index k = 0; k < n; ++k) pool[static_cast<std::size_t>(k)] = k + 1;
    for (int t = 0; t < 200; ++t) {
      std::shuffle(pool.begin(), pool.end(), rng);
      const auto len = std::uniform_int_distribution<std::size_t>(1, pool.size())(rng);
      std::span<const Index> js(pool.data(), len);
      const auto brute = k_product(n, js);
      const auto closed = product_closed_form(n, js);
      if (brute != closed)
        throw VerificationFailure("closed-form product differs at n=" + std::to_string(n) + ":\n" + matrix_text(brute) +
                                  "\nvs\n" + matrix_text(closed));
      ++checks;
    }
  }
  return checks;
}

std::size_t verify_msih(int max_n) {
  std::size_t checks = 0;
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    const GroupCatalog cat = enumerate_group(n);
    const std::size_t sz = cat.size();
    const bool exhaustive = n <= 4;
    std::mt19937_64 rng(77 + static_cast<unsigned>(n));
    std::uniform_int_distribution<std::size_t> pick(0, sz - 1);
    const std::size_t total = exhaustive ? sz * sz : 20000;
    std::size_t passed = 0;
    for (std::size_t t = 0; t < total; ++t) {
      const std::size_t a = exhaustive ? t / sz : pick(rng);
      const std::size_t b = exhaustive ? t % sz : pick(rng);
      const auto& ea = cat.elements[a];
      const auto& eb = cat.elements[b];
      if (to_matrix(msih_mul(ea, eb)) != mat_mul(to_matrix(ea), to_matrix(eb)))
        throw VerificationFailure("msih product disagrees with the matrix product for " + to_text(ea) + " * " +
                                  to_text(eb));
      ++passed;
    }
    std::printf("  n=%d: %zu msih-oracle pair checks passed (%s)\n", n, passed, exhaustive ? "all pairs" : "sampled");
    checks += passed;
  }
  return checks;
}

void print_spectrum(const std::map<unsigned long, std::size_t>& spectrum) {
  std::printf("{");
  bool first = true;
  for (auto [o, c] : spectrum) {
    std::printf("%s%lu:%zu", first ? "" : ",", o, c);
    first = false;
  }
  std::printf("}");
}

std::size_t verify_groups(int max_n) {
  std::size_t checks = 0;
  for (int n = 1; n <= max_n; ++n) {
    const GroupCatalog cat = enumerate_group(n);
    std::printf("  |M(%d)| = %zu, order spectrum ", n, cat.size());
    print_spectrum(order_spectrum(cat));
    std::printf(", max Cayley distance %d\n", cat.max_distance());
    coset_decomposition(cat);
    checks += 2;
    if (n <= kMaxIsomorphismDimension) {
      IsoCheckCounts counts;
      verify_isomorphism(n, &counts);
      std::printf("  isomorphism M(%d) -> S_%d: OK (%zu homomorphism pairs, %zu random words)\n", n, n + 1,
                  counts.homomorphism_pairs, counts.random_words);
      ++checks;
    }
    check(full_cycle_order_via_sym(n) == static_cast<unsigned long>(n + 1),
          "K_n...K_1 does not have order n+1 at n=" + std::to_string(n));
    ++checks;
  }
  return checks;
}

std::size_t verify_orbits() {
  std::size_t checks = 0;
  const auto word = aught_word();
  for (std::int64_t x = -20; x <= 20; ++x) {
    for (std::int64_t y = -20; y <= 20; ++y) {
      const Point2 p(x, y);
      const Orbit2D o(p);
      const Trajectory t = run_word(make_point({x, y}), word);
      const std::string where = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      check(t.closed, "the alternating word does not close the orbit of " + where);
      for (std::size_t k = 0; k < 6; ++k)
        check(t.path[k](0) == o.cycle()[k](0) && t.path[k](1) == o.cycle()[k](1),
              "closed-form cycle differs from the traced path at " + where);
      const auto g = reach_graph(make_point({x, y}));
      check(g.nodes.size() == o.size(), "orbit size mismatch at " + where);
      check(o.box_side() == box_side(p), "bounding-box law fails at " + where);
      checks += 4;
    }
  }
  return checks;
}

int cmd_verify(int max_n) {
  if (max_n < 1 || max_n > 6) throw ArgumentError("--max-n must be between 1 and 6");
  try {
    std::printf("involution suite\n");
    const auto a = verify_involutions(max_n);
    std::printf("  %zu identity checks passed\n", a);
    std::printf("group suite\n");
    const auto b = verify_groups(max_n);
    std::printf("  %zu group checks passed\n", b);
    std::printf("msih oracle suite\n");
    const auto c = verify_msih(max_n);
    std::printf("orbit suite\n");
    const auto d = verify_orbits();
    std::printf("  %zu orbit checks passed\n", d);
    std::printf("verify: all %zu checks passed\n", a + b + c + d);
  } catch (const VerificationFailure& e) {
    std::fprintf(stderr, "verify: FAILED: %s\n", e.what());
    return kVerifyFailed;
  } catch (const ConsistencyError& e) {
    std::fprintf(stderr, "verify: FAILED: %s\n", e.what());
    return kVerifyFailed;
  } catch (const NotGroupElement& e) {
    std::fprintf(stderr, "verify: FAILED: %s\n", e.what());
    return kVerifyFailed;
  }
  return kOk;
}

// ---- queries --------------------------------------------------------------

int cmd_group(int dim, const std::string& format, const std::string& out) {
  const GroupCatalog cat = enumerate_group(dim);
  if (format == "json") {
    write_output(out, catalog_json(cat).dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  os << "|M(" << dim << ")| = " << cat.size() << "\n";
  const auto hist = cat.distance_histogram();
  for (std::size_t d = 0; d < hist.size(); ++d) os << "distance " << d << ": " << hist[d] << "\n";
  for (auto [o, c] : order_spectrum(cat)) os << "order " << o << ": " << c << "\n";
  write_output(out, os.str());
  return kOk;
}

int cmd_orbit(const std::string& point, SeedOrder order, const std::string& out) {
  const auto coords = parse_int_list(point, "point");
  if (coords.size() < 2 || coords.size() > 6) throw ArgumentError("orbit points need 2 to 6 coordinates");
  const LatticePoint x = make_point(std::span<const std::int64_t>(coords));
  if (coords.size() == 2) {
    write_output(out, orbit_json(orbit2d(x, order)).dump(2) + "\n");
  } else {
    write_output(out, reach_json(x, reach_graph(x)).dump(2) + "\n");
  }
  return kOk;
}

int cmd_trace(const std::string& point, const std::string& word_text, SeedOrder order, const std::string& out) {
  const auto coords = parse_int_list(point, "point");
  const LatticePoint x = make_point(std::span<const std::int64_t>(coords));
  std::vector<Index> word;
  if (word_text.empty()) {
    if (coords.size() != 2) throw ArgumentError("--word is required outside the plane");
    word = aught_word(order);
  } else {
    for (auto j : parse_int_list(word_text, "word")) word.push_back(j);
  }
  write_output(out, trajectory_json(run_word(x, word)).dump(2) + "\n");
  return kOk;
}

int cmd_census(const Region& region, std::optional<std::int64_t> modulus, bool diametral, unsigned threads,
               const std::string& out) {
  const CensusReport r = census(region, {modulus, threads});
  const std::string text = census_json(r).dump(2) + "\n";
  if (out.empty() || out == "-") {
    write_output(out, text);
    return kOk;
  }
  write_output(out, text);
  std::printf("points %llu, orbits %llu\n", static_cast<unsigned long long>(r.total_points),
              static_cast<unsigned long long>(r.total_orbits));
  if (diametral || !modulus) std::printf("diametral fraction %s\n", format12(r.diametral_fraction()).c_str());
  if (modulus && region.kind == RegionKind::square_0M) {
    const double m2 = static_cast<double>(region.params[0]) * static_cast<double>(region.params[0]);
    for (auto [res, cnt] : r.residue_counts)
      std::printf("residue %lld: %llu orbits, %s M^2\n", static_cast<long long>(res),
                  static_cast<unsigned long long>(cnt), format12(static_cast<double>(cnt) / m2).c_str());
  }
  if (!modulus) {
    std::printf("mean orbit diameter %s\n", format12(r.mean_orbit_diameter()).c_str());
    std::printf("mean point length %s\n", format12(r.mean_point_length()).c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aughts: alternating involutions, their group, and the twisted-aught orbits"};
  app.require_subcommand(1);

  std::string seed_order_text = "k1-first";
  std::string out;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed-order", seed_order_text, "k1-first | k2-first")
        ->check(CLI::IsMember({"k1-first", "k2-first"}));
  };

  int max_n = 3;
  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  verify->add_option("--max-n", max_n, "largest dimension, 1..6");
  add_common(verify);

  int dim = 3;
  auto* group = app.add_subcommand("group", "enumerate M(n)");
  group->add_option("--dim", dim, "dimension n");
  group->add_option("--out", out, "output path");
  group->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  add_common(group);

  std::string point_pos, point_flag;
  auto* orbit = app.add_subcommand("orbit", "orbit of a lattice point");
  orbit->add_option("coords", point_pos, "comma-separated coordinates");
  orbit->add_option("--point", point_flag, "comma-separated coordinates");
  orbit->add_option("--out", out, "output path");
  orbit->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  add_common(orbit);

  std::string word;
  auto* trace = app.add_subcommand("trace", "apply a word of operators");
  trace->add_option("coords", point_pos, "comma-separated coordinates");
  trace->add_option("--point", point_flag, "comma-separated coordinates");
  trace->add_option("--word", word, "comma-separated operator indices, applied left to right");
  trace->add_option("--out", out, "output path");
  trace->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  add_common(trace);

  RegionFlags census_region;
  std::optional<std::int64_t> modulus;
  bool diametral = false;
  unsigned threads = 0;
  auto* census_cmd = app.add_subcommand("census", "orbit census over a region");
  census_region.attach(census_cmd);
  census_cmd->add_option("--mod", modulus, "tally orbit lengths mod d");
  census_cmd->add_flag("--diametral", diametral, "report the diametral fraction");
  census_cmd->add_option("--threads", threads, "worker threads, 0 = hardware");
  census_cmd->add_option("--out", out, "output path");
  census_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  add_common(census_cmd);

  RegionFlags render_region;
  std::string mode_text, palette_text;
  int scale = 8;
  std::uint64_t max_points = kDefaultPointBudget;
  std::string render_format = "svg";
  auto* render = app.add_subcommand("render", "deterministic SVG picture");
  render_region.attach(render);
  render->add_option("--mode", mode_text, "mod_color | diametral | projection | single_orbit");
  render->add_option("--mod", modulus, "colour by orbit length mod d");
  render->add_flag("--diametral", diametral, "colour diametral points red");
  render->add_option("--palette", palette_text, "#rrggbb,#rrggbb,...");
  render->add_option("--scale", scale, "pixels per lattice unit");
  render->add_option("--point", point_flag, "seed for single_orbit");
  render->add_option("--max-points", max_points, "lattice point budget");
  render->add_option("--out", out, "output path");
  render->add_option("--format", render_format, "svg")->check(CLI::IsMember({"svg"}));
  add_common(render);
  // single_orbit needs no region
  render->get_option_group("region")->require_option(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const SeedOrder order = parse_seed_order(seed_order_text);
    const std::string point = point_flag.empty() ? point_pos : point_flag;
    if (*verify) return cmd_verify(max_n);
    if (*group) return cmd_group(dim, format, out);
    if (*orbit) {
      if (point.empty()) throw ArgumentError("orbit needs a point");
      return cmd_orbit(point, order, out);
    }
    if (*trace) {
      if (point.empty()) throw ArgumentError("trace needs a point");
      return cmd_trace(point, word, order, out);
    }
    if (*census_cmd) return cmd_census(census_region.region(), modulus, diametral, threads, out);
    if (*render) {
      RenderSpec spec;
      if (!mode_text.empty())
        spec.mode = parse_render_mode(mode_text);
      else if (diametral)
        spec.mode = RenderMode::diametral;
      else if (!point.empty())
        spec.mode = RenderMode::single_orbit;
      else
        spec.mode = RenderMode::mod_color;
      if (spec.mode == RenderMode::single_orbit) {
        const auto c = parse_int_list(point.empty() ? "10,0" : point, "point");
        if (c.size() != 2) throw ArgumentError("single_orbit needs a plane point");
        spec.seed = Point2(c[0], c[1]);
      } else {
        spec.region = render_region.region();
      }
      spec.modulus = modulus;
      if (!palette_text.empty()) spec.palette = parse_palette(palette_text);
      spec.scale = scale;
      spec.max_points = max_points;
      spec.order = order;
      write_output(out, render_svg(spec));
      return kOk;
    }
  } catch (const IoError& e) {
    std::fprintf(stderr, "aughts: %s\n", e.what());
    return kIo;
  } catch (const ResourceError& e) {
    std::fprintf(stderr, "aughts: %s\n", e.what());
    return kResource;
  } catch (const ArgumentError& e) {
    std::fprintf(stderr, "aughts: %s\n", e.what());
    return kUsage;
  } catch (const ArithmeticError& e) {
    std::fprintf(stderr, "aughts: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "aughts: verification failed: %s\n", e.what());
    return kVerifyFailed;
  }
  return kUsage;
}
