#include "shadows/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "shadows/json_io.hpp"
#include "shadows/render.hpp"

namespace shadows {

std::vector<AffineWeylElement> length_ball(const RootSystem& rs, Int bound) {
  std::set<AffineWeylElement, ElementLess> seen;
  std::vector<AffineWeylElement> out;
  std::deque<std::pair<AffineWeylElement, Int>> queue;
  AffineWeylElement id = identity(rs);
  seen.insert(id);
  queue.emplace_back(id, 0);
  while (!queue.empty()) {
    auto [x, len] = queue.front();
    queue.pop_front();
    out.push_back(x);
    if (len == bound) continue;
    for (int s = 0; s <= rs.rank; ++s) {
      AffineWeylElement next = compose(x, generator(rs, s));
      if (length(rs, next) != len + 1) continue;
      if (seen.insert(next).second) queue.emplace_back(next, len + 1);
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    Int la = length(rs, a), lb = length(rs, b);
    if (la != lb) return la < lb;
    return ElementLess{}(a, b);
  });
  return out;
}

namespace {

std::vector<std::vector<int>> all_J_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) J.push_back(i + 1);
    out.push_back(J);
  }
  return out;
}

std::string describe(const RootSystem& rs, const Chimney& c, const AffineWeylElement& x,
                     const FaceType& sigma) {
  std::ostringstream os;
  os << rs.name() << " J={";
  for (std::size_t i = 0; i < c.J.size(); ++i) os << (i ? "," : "") << c.J[i];
  os << "} y=[";
  auto yw = canonical_word(rs, c.y);
  for (std::size_t i = 0; i < yw.size(); ++i) os << (i ? "," : "") << yw[i];
  os << "] x=[";
  auto xw = canonical_word(rs, x);
  for (std::size_t i = 0; i < xw.size(); ++i) os << (i ? "," : "") << xw[i];
  os << "] sigma=" << (sigma.generators.empty() ? "alcove" : "vertex");
  return os.str();
}

}  // namespace

VerifyReport verify_sweep(const RootSystem& rs, Int max_x_len, Int max_y_len, Int cap) {
  VerifyReport report;
  auto xs = length_ball(rs, max_x_len);
  auto ys = length_ball(rs, max_y_len);
  auto Js = all_J_subsets(rs.rank);
  std::vector<FaceType> faces = {alcove_face(), vertex_face(rs)};
  Int w0_len = longest_parabolic_length(rs, vertex_face(rs));

  for (const auto& y : ys) {
    for (const auto& J : Js) {
      Chimney chimney{J, y};
      // One deep alcove serves every x in the sweep: deeper never changes the
      // answer once the level bound is met.
      DeepAlcove deep = deep_alcove(rs, chimney, w0_len + max_x_len);
      for (const auto& x : xs) {
        for (const auto& face : faces) {
          if (!is_reduced(rs, x, face, face)) continue;
          ShadowResult recursion =
              fold_through(rs, shadow_base(rs, x, face, face), deep.letters);
          ShadowResult oracle = shadow_oracle(rs, x, face, face, chimney, cap);
          if (!recursion.same_set(oracle)) {
            report.ok = false;
            report.mismatches.push_back("shadow mismatch: " + describe(rs, chimney, x, face));
          }
          ++report.shadow_checks;

          // Counts vs nonemptiness: bucket the parahoric walk monomials by
          // end alcove, then compare against shadow membership per z. For the
          // alcove face the w = id pass doubles as the sum-rule check.
          std::map<AffineWeylElement, QPolynomial, ElementLess> buckets;
          for (const auto& w : parabolic_elements(rs, face)) {
            std::vector<int> word = canonical_word(rs, w);
            auto xw = canonical_word(rs, x);
            word.insert(word.end(), xw.begin(), xw.end());
            GalleryTypeSpec wspec{alcove_face(), word, alcove_face()};
            QPolynomial total;
            for (const auto& g : enumerate_pf_galleries(rs, wspec, chimney, std::nullopt, cap)) {
              QPolynomial monomial = walk_monomial(walk_stats(rs, g, chimney));
              buckets[end_simplex(rs, g).rep] += monomial;
              total += monomial;
            }
            // Sum rule for the type of this word: the labeled walks of a
            // fixed type partition q^(word length) points.
            if (total != QPolynomial::monomial(static_cast<Int>(word.size()), 0)) {
              report.ok = false;
              report.mismatches.push_back("sum rule failed: " + describe(rs, chimney, x, face));
            }
            ++report.sum_rule_checks;
          }
          std::set<AffineWeylElement, ElementLess> candidates;
          for (const auto& [z, poly] : buckets) candidates.insert(z);
          for (const auto& simplex : recursion.simplices) candidates.insert(simplex.rep);
          for (const auto& z : candidates) {
            bool counted = false;
            auto it = buckets.find(z);
            if (it != buckets.end()) counted = !it->second.is_zero();
            bool in_shadow = recursion.contains(normalize_end_simplex(rs, z, face));
            if (counted != in_shadow) {
              report.ok = false;
              report.mismatches.push_back("nonemptiness mismatch: " +
                                          describe(rs, chimney, x, face));
            }
            ++report.count_checks;
          }
        }
      }
    }
  }
  return report;
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("invalid integer '") + token + "' in " + flag);
    }
  }
  return out;
}

IntVector parse_vector(const RootSystem& rs, const std::string& text, const char* flag) {
  auto ints = parse_int_list(text, flag);
  if (static_cast<int>(ints.size()) != rs.rank)
    throw std::invalid_argument(std::string(flag) + " needs " + std::to_string(rs.rank) +
                                " comma-separated integers");
  IntVector v(rs.rank);
  for (int i = 0; i < rs.rank; ++i) v[i] = ints[i];
  return v;
}

std::vector<int> parse_word(const RootSystem& rs, const std::string& text, const char* flag) {
  auto word = parse_int_list(text, flag);
  for (int s : word)
    if (s < 0 || s > rs.rank)
      throw std::invalid_argument(std::string(flag) + ": letter " + std::to_string(s) +
                                  " out of range 0.." + std::to_string(rs.rank));
  return word;
}

FaceType parse_face(const RootSystem& rs, const std::string& text, const char* flag) {
  if (text == "alcove" || text.empty()) return alcove_face();
  if (text == "vertex") return vertex_face(rs);
  FaceType f;
  f.generators = parse_int_list(text, flag);
  std::sort(f.generators.begin(), f.generators.end());
  f.generators.erase(std::unique(f.generators.begin(), f.generators.end()), f.generators.end());
  for (int s : f.generators)
    if (s < 1 || s > rs.rank)
      throw std::invalid_argument(std::string(flag) + ": generator " + std::to_string(s) +
                                  " out of range 1.." + std::to_string(rs.rank));
  return f;
}

std::vector<int> parse_J(const RootSystem& rs, const std::string& text) {
  return parse_face(rs, text == "vertex" || text == "alcove" ? "" : text, "--J").generators;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("--out: cannot open '" + out_path + "' for writing");
  f << text;
}

struct ShadowArgs {
  std::string type;
  std::string J;
  std::string y;
  std::string x;
  std::string lambda;
  std::string sigma = "alcove";
  std::string tau = "alcove";
  std::string out;
  Int cap = 14;
};

// Shared between the shadow and oracle subcommands: resolve the target
// element and faces from either --lambda or --x.
void resolve_target(const RootSystem& rs, const ShadowArgs& a, AffineWeylElement& x,
                    FaceType& sigma, FaceType& tau) {
  if (!a.lambda.empty() && !a.x.empty())
    throw std::invalid_argument("give either --lambda or --x, not both");
  if (!a.lambda.empty()) {
    IntVector lambda = parse_vector(rs, a.lambda, "--lambda");
    sigma = vertex_face(rs);
    tau = vertex_face(rs);
    AffineWeylElement t{lambda, FiniteWeylElement{IntMatrix::Identity(rs.rank, rs.rank)}};
    x = min_coset_rep(rs, t, sigma, tau);
  } else if (!a.x.empty() || a.x == "") {
    sigma = parse_face(rs, a.sigma, "--sigma");
    tau = parse_face(rs, a.tau, "--tau");
    x = from_word(rs, parse_word(rs, a.x, "--x"));
    if (!is_reduced(rs, x, sigma, tau))
      throw std::invalid_argument(
          "--x is not reduced for the given faces; pass the double coset representative");
  }
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"Exact shadows, folded galleries, and point counts for affine Weyl groups"};
  app.require_subcommand(1);

  ShadowArgs sh_args;
  auto add_common = [&](CLI::App* sub, ShadowArgs& a) {
    sub->add_option("--type", a.type, "root system, e.g. A2, C2, G2")->required();
    sub->add_option("--J", a.J, "chimney simple-root indices, e.g. \"1,2\" (default empty)");
    sub->add_option("--y", a.y, "chimney element as a word in 0..n, e.g. \"0,1\"");
    sub->add_option("--x", a.x, "target element as a word in 0..n");
    sub->add_option("--lambda", a.lambda, "coroot lattice target, e.g. \"2,2\"");
    sub->add_option("--sigma", a.sigma, "start face: alcove, vertex, or generators \"1,2\"");
    sub->add_option("--tau", a.tau, "end face: alcove, vertex, or generators");
    sub->add_option("--cap", a.cap, "enumeration cap in letters");
    sub->add_option("--out", a.out, "write output to this path instead of stdout");
  };

  CLI::App* sh = app.add_subcommand("shadow", "shadow via the folding recursion, JSON out");
  add_common(sh, sh_args);

  ShadowArgs or_args;
  CLI::App* orc = app.add_subcommand("oracle", "shadow via exhaustive enumeration, with "
                                               "multiplicities, JSON out");
  add_common(orc, or_args);

  struct CountArgs : ShadowArgs {
    std::string kind = "iwahori";
    std::string z;
    std::string mu;
  } count_args;
  CLI::App* cnt = app.add_subcommand("count", "double coset intersection cardinality in q");
  add_common(cnt, count_args);
  cnt->add_option("--kind", count_args.kind, "iwahori | parahoric | grassmannian");
  cnt->add_option("--z", count_args.z, "end element as a word in 0..n");
  cnt->add_option("--mu", count_args.mu, "end vertex for grassmannian counts, e.g. \"1,2\"");

  struct RenderArgs : ShadowArgs {
    double window = 4.0;
  } render_args;
  CLI::App* ren = app.add_subcommand("render", "deterministic SVG of a rank-2 scene");
  add_common(ren, render_args);
  ren->add_option("--window", render_args.window, "viewport half-width in Euclidean units");

  struct VerifyArgs {
    std::string type;
    Int max_x_len = 4;
    Int max_y_len = 2;
    Int cap = 14;
  } verify_args;
  CLI::App* ver = app.add_subcommand("verify", "sweep recursion vs oracle and counts vs "
                                               "nonemptiness; exit 0 iff all agree");
  ver->add_option("--type", verify_args.type, "root system")->required();
  ver->add_option("--max-x-len", verify_args.max_x_len, "bound on ell(x)");
  ver->add_option("--max-y-len", verify_args.max_y_len, "bound on ell(y)");
  ver->add_option("--cap", verify_args.cap, "enumeration cap in letters");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sh->parsed() || orc->parsed()) {
      ShadowArgs& a = sh->parsed() ? sh_args : or_args;
      RootSystem rs = build_root_system(a.type);
      Chimney chimney{parse_J(rs, a.J), from_word(rs, parse_word(rs, a.y, "--y"))};
      AffineWeylElement x = identity(rs);
      FaceType sigma = alcove_face(), tau = alcove_face();
      resolve_target(rs, a, x, sigma, tau);
      ShadowResult result = sh->parsed() ? shadow(rs, x, sigma, tau, chimney)
                                         : shadow_oracle(rs, x, sigma, tau, chimney, a.cap);
      write_output(shadow_document(rs, chimney, x, sigma, tau, result).dump(2), a.out);
      return 0;
    }
    if (cnt->parsed()) {
      CountArgs& a = count_args;
      RootSystem rs = build_root_system(a.type);
      Chimney chimney{parse_J(rs, a.J), from_word(rs, parse_word(rs, a.y, "--y"))};
      QPolynomial p;
      if (a.kind == "iwahori") {
        AffineWeylElement x = from_word(rs, parse_word(rs, a.x, "--x"));
        AffineWeylElement z = from_word(rs, parse_word(rs, a.z, "--z"));
        p = count_iwahori(rs, x, z, chimney, a.cap);
      } else if (a.kind == "parahoric") {
        FaceType sigma = parse_face(rs, a.sigma, "--sigma");
        FaceType tau = parse_face(rs, a.tau, "--tau");
        AffineWeylElement x = from_word(rs, parse_word(rs, a.x, "--x"));
        AffineWeylElement z = from_word(rs, parse_word(rs, a.z, "--z"));
        p = count_parahoric(rs, sigma, tau, x, z, chimney, a.cap);
      } else if (a.kind == "grassmannian") {
        IntVector lambda = parse_vector(rs, a.lambda, "--lambda");
        IntVector mu = parse_vector(rs, a.mu, "--mu");
        p = count_grassmannian(rs, lambda, mu, chimney, a.cap);
      } else {
        throw std::invalid_argument("--kind must be iwahori, parahoric, or grassmannian");
      }
      json doc = count_document(p);
      doc["human"] = p.to_string();
      write_output(doc.dump(2), a.out);
      return 0;
    }
    if (ren->parsed()) {
      RenderArgs& a = render_args;
      RootSystem rs = build_root_system(a.type);
      Chimney chimney{parse_J(rs, a.J), from_word(rs, parse_word(rs, a.y, "--y"))};
      Scene scene{rs, a.window, chimney, std::nullopt, {}, {}};
      AffineWeylElement x = identity(rs);
      FaceType sigma = alcove_face(), tau = alcove_face();
      resolve_target(rs, a, x, sigma, tau);
      scene.shadow = shadow_oracle(rs, x, sigma, tau, chimney, a.cap);
      if (!a.lambda.empty()) {
        GalleryTypeSpec spec{sigma, canonical_word(rs, x), tau};
        scene.galleries = enumerate_pf_galleries(rs, spec, chimney, std::nullopt, a.cap);
      } else {
        scene.highlight_alcoves.push_back(x);
      }
      write_output(render_svg(scene), a.out);
      return 0;
    }
    if (ver->parsed()) {
      RootSystem rs = build_root_system(verify_args.type);
      VerifyReport report = verify_sweep(rs, verify_args.max_x_len, verify_args.max_y_len,
                                         verify_args.cap);
      std::cout << "shadow checks:      " << report.shadow_checks << "\n"
                << "count checks:       " << report.count_checks << "\n"
                << "sum rule checks:    " << report.sum_rule_checks << "\n";
      for (const auto& m : report.mismatches) std::cout << "MISMATCH " << m << "\n";
      std::cout << (report.ok ? "verify: all checks agree" : "verify: MISMATCHES FOUND") << "\n";
      return report.ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace shadows
