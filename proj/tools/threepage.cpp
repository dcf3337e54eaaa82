// threepage: command-line front end.
//
// Exit status: 0 success, 1 domain error (invalid presentation, unmet
// precondition), 2 usage error (bad flags, malformed input).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "threepage/braid.hpp"
#include "threepage/diagram.hpp"
#include "threepage/invariants.hpp"
#include "threepage/presentation.hpp"
#include "threepage/reidemeister.hpp"
#include "threepage/render.hpp"
#include "threepage/search.hpp"
#include "threepage/torus.hpp"

using namespace threepage;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

ThreePagePresentation load(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_presentation_json(text);
  return parse_presentation(text);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

std::string describe_components(const ThreePagePresentation& p) {
  std::ostringstream out;
  const auto comps = components(p);
  out << comps.size() << " component(s)\n";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Cycle& c = comps.cycles[i];
    out << "  " << i + 1 << ": " << c.points.front();
    for (std::size_t j = 0; j < c.arcs.size(); ++j)
      out << " -P" << c.arcs[j].page + 1 << "- " << c.points[(j + 1) % c.points.size()];
    out << "  (" << c.arcs.size() << " arcs)\n";
  }
  if (auto split = detect_split_pair(p))
    out << "split certificate: arc " << split->first.arc.lo << "-" << split->first.arc.hi << " on P"
        << split->first.page + 1 << " and P" << split->second.page + 1 << "\n";
  return out.str();
}

std::string describe_invariants(const PlanarDiagram& d, bool show_t) {
  std::ostringstream out;
  const InvariantProfile prof = profile(d);
  out << "crossings " << d.crossing_count() << "\n";
  out << "bracket   " << bracket_skein(d).to_string() << "\n";
  out << "profile   " << to_string(prof) << "\n";
  const std::uint64_t count = std::uint64_t{1} << d.components();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const Orientation o = orientation_from_bits(d, bits);
    const LaurentPoly v = jones(d, o);
    out << "orientation " << bits << ": writhe " << writhe(d, o) << "  jones " << v.to_string();
    if (show_t) out << "  =  " << format_jones_t(v, d.components());
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-page presentations of links"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;

  auto* validate_cmd = app.add_subcommand("validate", "Check a presentation and list violations");
  validate_cmd->add_option("input", input, "presentation file or - for stdin")->required();

  auto* components_cmd = app.add_subcommand("components", "Decompose a presentation into components");
  components_cmd->add_option("input", input, "presentation file or -")->required();

  auto* construct_cmd = app.add_subcommand("construct", "Build torus link presentations");
  construct_cmd->require_subcommand(1);
  int tnn_n = 2;
  int p = 2;
  int q = 3;
  bool tight = false;
  bool verify = false;
  bool as_json = false;
  auto* tnn_cmd = construct_cmd->add_subcommand("tnn", "T(n,n) with 4n-2 arcs");
  tnn_cmd->add_option("--n", tnn_n, "n >= 2")->required();
  auto* tpq_cmd = construct_cmd->add_subcommand("tpq", "T(p,q) with 2p+2q-2 arcs (--tight: 2p+2q-3, q >= 2p)");
  tpq_cmd->add_option("--p", p)->required();
  tpq_cmd->add_option("--q", q)->required();
  tpq_cmd->add_flag("--tight", tight);
  for (auto* c : {tnn_cmd, tpq_cmd}) {
    c->add_flag("--verify", verify, "compare the profile with the torus braid closure");
    c->add_flag("--json", as_json, "JSON output");
  }

  auto* bounds_cmd = app.add_subcommand("bounds", "Arc-count bounds for T(p,q)");
  bounds_cmd->add_option("--p", p)->required();
  bounds_cmd->add_option("--q", q)->required();

  bool show_t = false;
  auto* invariants_cmd = app.add_subcommand("invariants", "Bracket, Jones polynomials and linking numbers");
  invariants_cmd->add_option("input", input, "presentation file or -")->required();
  invariants_cmd->add_flag("--t", show_t, "also print Jones polynomials in t");

  int perturb_steps = 0;
  std::uint64_t seed = 1;
  auto* diagram_cmd = app.add_subcommand("diagram", "Export the projected diagram as PD text");
  diagram_cmd->add_option("input", input, "presentation file or -")->required();
  diagram_cmd->add_option("--perturb", perturb_steps, "apply this many random Reidemeister moves")
      ->check(CLI::NonNegativeNumber);
  diagram_cmd->add_option("--seed", seed, "seed for --perturb");
  diagram_cmd->add_option("--out", out_path);

  int n_max = 8;
  bool refute = false;
  bool unknot_target = false;
  std::vector<int> torus_target;
  std::string braid_target;
  int strands = 2;
  auto* search_cmd = app.add_subcommand("search", "Exact three-page index of a target by exhaustive search");
  search_cmd->add_option("--n-max", n_max, "largest point count to try");
  search_cmd->add_flag("--unknot", unknot_target);
  search_cmd->add_option("--torus", torus_target, "target T(p,q)")->expected(2);
  search_cmd->add_option("--braid", braid_target, "target braid closure, e.g. \"s1 s1 s1\"");
  search_cmd->add_option("--strands", strands);
  search_cmd->add_flag("--refute-t33", refute, "examine all 9-point, 3-component presentations for T(3,3)");

  int census_n = 6;
  auto* census_cmd = app.add_subcommand("census", "All canonical presentations on n points with profiles");
  census_cmd->add_option("--n", census_n)->required();
  census_cmd->add_option("--out", out_path);

  std::string format = "svg";
  double scale = 40.0;
  bool no_labels = false;
  auto* render_cmd = app.add_subcommand("render", "Draw a presentation");
  render_cmd->add_option("input", input, "presentation file or -")->required();
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii"}));
  render_cmd->add_option("--scale", scale);
  render_cmd->add_flag("--no-labels", no_labels);
  render_cmd->add_option("--out", out_path);

  std::string word;
  bool factorizations = false;
  auto* braid_cmd = app.add_subcommand("braid", "Braid words, torus braids and their closures");
  braid_cmd->add_option("--word", word, "braid word, e.g. \"s1 -s2\"");
  braid_cmd->add_option("--strands", strands);
  braid_cmd->add_option("--p", p);
  braid_cmd->add_option("--q", q);
  braid_cmd->add_flag("--factorizations", factorizations, "verify the torus braid factorizations for (p,q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) {
      const auto pres = load(input);
      const auto report = validate(pres);
      if (report.ok()) {
        std::cout << "valid: " << serialize(pres) << "\n";
        return 0;
      }
      std::cout << "invalid\n" << report.describe();
      return 1;
    }
    if (*components_cmd) {
      const auto pres = load(input);
      require_valid(pres);
      std::cout << describe_components(pres);
      return 0;
    }
    if (*construct_cmd) {
      ThreePagePresentation pres;
      BraidWord reference;
      if (*tnn_cmd) {
        pres = tnn(tnn_n);
        reference = torus_braid(tnn_n, tnn_n);
      } else {
        pres = tight ? tpq_tight(p, q) : tpq(p, q);
        reference = torus_braid(p, q);
      }
      std::cout << (as_json ? to_json(pres) : serialize(pres)) << "\n";
      if (verify) {
        const bool valid = validate(pres).ok();
        const bool same = valid && equal_up_to_mirror(profile(pres), profile(braid_closure_diagram(reference)));
        std::cout << "verification: " << (same ? "PASS" : "FAIL") << " (arcs " << pres.arc_count() << ", pages "
                  << pres.page_sizes()[0] << "/" << pres.page_sizes()[1] << "/" << pres.page_sizes()[2] << ")\n";
        return same ? 0 : 1;
      }
      return 0;
    }
    if (*bounds_cmd) {
      std::cout << format_bounds(bounds(p, q));
      return 0;
    }
    if (*invariants_cmd) {
      const auto pres = load(input);
      require_valid(pres);
      std::cout << describe_invariants(project(pres), show_t);
      return 0;
    }
    if (*diagram_cmd) {
      const auto pres = load(input);
      require_valid(pres);
      PlanarDiagram d = project(pres);
      if (perturb_steps > 0) {
        std::mt19937_64 rng(seed);
        d = random_perturbation(d, rng, perturb_steps).diagram;
      }
      emit(to_pd_text(d), out_path);
      return 0;
    }
    if (*search_cmd) {
      if (refute) {
        std::cout << format_report(refute_t33_at_9());
        return 0;
      }
      InvariantProfile target;
      if (unknot_target) {
        target = unlink_profile(1);
      } else if (torus_target.size() == 2) {
        target = profile(braid_closure_diagram(torus_braid(torus_target[0], torus_target[1])));
      } else if (!braid_target.empty()) {
        target = profile(braid_closure_diagram(parse_braid(braid_target, strands)));
      } else {
        throw UsageError("search needs --unknot, --torus P Q, --braid WORD or --refute-t33");
      }
      std::cout << "target " << to_string(target) << "\n";
      const auto found = three_page_index(target, n_max);
      if (!found) {
        std::cout << "not found with n <= " << n_max << "\n";
        return 0;
      }
      std::cout << "index " << found->n << "\nwitness " << serialize(found->witness) << "\n";
      return 0;
    }
    if (*census_cmd) {
      emit(format_census(census(census_n)), out_path);
      return 0;
    }
    if (*render_cmd) {
      const auto pres = load(input);
      RenderSpec spec;
      spec.format = format == "ascii" ? RenderFormat::Ascii : RenderFormat::Svg;
      spec.scale = scale;
      spec.point_labels = spec.page_labels = !no_labels;
      emit(render(pres, spec), out_path);
      return 0;
    }
    if (*braid_cmd) {
      if (factorizations) {
        const auto pq = normalize_torus(p, q);
        auto show = [](const std::string& name, const BraidWord& lhs, const BraidWord& rhs) {
          const auto r = verify_factorization(lhs, rhs);
          std::cout << name << ": " << format_braid(rhs) << "\n  permutation " << (r.same_permutation ? "ok" : "differs")
                    << ", exponent sum " << (r.same_exponent_sum ? "ok" : "differs") << ", closure profile "
                    << (r.same_closure_profile ? "ok" : "differs") << " -> " << (r.passed() ? "PASS" : "FAIL")
                    << "\n";
          return r.passed();
        };
        bool ok = show("small", torus_braid_small(pq.p, pq.q), torus_factorization_small(pq.p, pq.q));
        if (pq.q > pq.p)
          ok &= show("twist-first", torus_braid(pq.p, pq.q), torus_factorization_twist_first(pq.p, pq.q));
        if (pq.q >= 2 * pq.p)
          ok &= show("twist-last", torus_braid(pq.p, pq.q), torus_factorization_twist_last(pq.p, pq.q));
        return ok ? 0 : 1;
      }
      const BraidWord w = word.empty() ? torus_braid(p, q) : parse_braid(word, strands);
      const PlanarDiagram d = braid_closure_diagram(w);
      std::cout << "word        " << format_braid(w) << "\nstrands     " << w.strands << "\npermutation";
      for (int x : permutation(w)) std::cout << " " << x + 1;
      std::cout << "\ncomponents  " << cycle_count(w) << "\n" << describe_invariants(d, true);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
