// altab: command-line front end. Every verb is a thin composition of library
// calls; alternative tableaux are the hub for conversions.

#include <altab/asep.hpp>
#include <altab/decomposition.hpp>
#include <altab/enumeration.hpp>
#include <altab/perm_tableau.hpp>
#include <altab/permutations.hpp>
#include <altab/text.hpp>
#include <altab/trees.hpp>
#include <altab/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace altab;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kReps = {"alt",   "permtab", "forest",    "arcs",
                                        "bintrees", "perm", "signedperm"};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) throw Usage("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// One object per non-empty line.
std::vector<std::string> input_lines(const std::string& path) {
  std::istringstream in(read_input(path));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

AltTableau to_alt(const std::string& rep, const std::string& text) {
  if (rep == "alt") return parse_tableau(text);
  if (rep == "permtab") return alpha(parse_perm_tableau(text));
  if (rep == "forest") return forest_inv(parse_forest(text));
  if (rep == "arcs") return forest_inv(phi_inv(parse_arcs(text)));
  if (rep == "bintrees") {
    const auto [a, b] = parse_bin_pair(text);
    return couple_bin_inv(a, b);
  }
  if (rep == "perm") return phi_n_inv(parse_perm(text));
  if (rep == "signedperm") return signed_inv(parse_signed(text));
  throw Usage("unknown representation " + rep);
}

std::string from_alt(const std::string& rep, const AltTableau& t, const std::string& algo,
                     bool trace) {
  if (rep == "alt") return render_tableau(t);
  if (rep == "permtab") return render_perm_tableau(alpha_inv(t));
  if (rep == "forest") return render_forest(forest_of(t));
  if (rep == "arcs") return render_arcs(arc_of(t));
  if (rep == "bintrees") return render_bin_pair(couple_bin(t));
  if (rep == "perm") {
    if (algo == "forest") return render_perm(phi_n(t, 0));
    std::vector<PermWord> steps;
    const PermWord w = phi_c(t, trace ? &steps : nullptr);
    if (!trace) return render_perm(w);
    std::string out;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (k) out += '\n';
      out += render_perm(steps[k]);
    }
    return out;
  }
  if (rep == "signedperm") return render_signed(signed_of(t));
  throw Usage("unknown representation " + rep);
}

std::string stats_line(const AltTableau& t) {
  const auto s = free_stats(t);
  std::string cells = "{";
  for (std::size_t k = 0; k < s.free_cells.size(); ++k) {
    if (k) cells += ',';
    cells += format_cell(s.free_cells[k]);
  }
  cells += '}';
  return "size=" + std::to_string(t.size()) + " rows=" + std::to_string(t.rows().size()) +
         " frow=" + std::to_string(s.frow()) + " fcol=" + std::to_string(s.fcol()) +
         " fcell=" + std::to_string(s.fcell()) + " free_rows=" + format_label_set(s.free_rows) +
         " free_cols=" + format_label_set(s.free_cols) + " free_cells=" + cells +
         " class=" + std::string(packed_class_name(packed_class(t)));
}

std::string perm_stats_line(const PermWord& w) {
  const auto s = perm_stats(w);
  return "asc=" + format_label_set(s.ascents) + " des=" + format_label_set(s.descents) +
         " rlmin=" + format_label_set(s.rl_minima) + " rlmax=" + format_label_set(s.rl_maxima) +
         " shifted_rlmax=" + format_label_set(s.shifted_rl_maxima);
}

int run(int argc, char** argv) {
  CLI::App app{"Alternative tableaux: validation, bijections, enumeration, ASEP"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "altab 1.0");

  std::string input;
  std::string type = "alt";
  std::string from = "alt", to = "alt", algo = "forest";
  bool trace = false;
  std::string style = "grid";
  std::string format = "compact";
  std::string suite = "all";
  unsigned n = 0;
  unsigned jobs = 1;
  bool via_perm = false;
  std::string q = "1", alpha_s = "1", beta_s = "1";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "input file (default: standard input)");
  };

  auto* validate = app.add_subcommand("validate", "check objects, one per line");
  add_input(validate);
  validate->add_option("--type", type, "representation")->check(CLI::IsMember(kReps));

  auto* stats = app.add_subcommand("stats", "statistics of tableaux or permutations");
  add_input(stats);
  stats->add_option("--type", type, "alt or perm")->check(CLI::IsMember({"alt", "perm"}));

  auto* convert = app.add_subcommand("convert", "convert between representations");
  add_input(convert);
  convert->add_option("--from", from, "input representation")->check(CLI::IsMember(kReps));
  convert->add_option("--to", to, "output representation")->check(CLI::IsMember(kReps));
  convert->add_option("--algo", algo, "permutation algorithm")
      ->check(CLI::IsMember({"forest", "cn"}));
  convert->add_flag("--trace", trace, "print every intermediate word (--to perm --algo cn)");

  auto* split_cmd = app.add_subcommand("split", "decompose into components");
  add_input(split_cmd);

  auto* merge_cmd = app.add_subcommand("merge", "merge tableaux with disjoint labels");
  add_input(merge_cmd);

  auto* enumerate = app.add_subcommand("enumerate", "list every tableau of size n");
  enumerate->add_option("--n", n, "size")->required();
  enumerate->add_flag("--via-perm", via_perm, "generate from permutations instead");
  enumerate->add_option("--format", format, "compact or record")
      ->check(CLI::IsMember({"compact", "record"}));

  auto* count = app.add_subcommand("count", "statistic table for size n");
  count->add_option("--n", n, "size")->required();
  count->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite")
      ->check(CLI::IsMember({"bijections", "counts", "series", "asep", "all"}));
  verify->add_option("--n", n, "largest size")->required();

  auto* asep = app.add_subcommand("asep", "stationary distribution from tableau weights");
  asep->add_option("--n", n, "number of sites")->required();
  asep->add_option("--q", q, "left hop rate");
  asep->add_option("--alpha", alpha_s, "entry rate");
  asep->add_option("--beta", beta_s, "exit rate");

  auto* render = app.add_subcommand("render", "ASCII drawing of tableaux");
  add_input(render);
  render->add_option("--style", style, "grid, forest or arcs")
      ->check(CLI::IsMember({"grid", "forest", "arcs"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostream& out = std::cout;

  if (app.got_subcommand(validate)) {
    auto lines = input_lines(input);
    if (lines.empty() && type == "forest") lines.push_back("");
    int status = 0;
    for (const auto& line : lines) {
      try {
        to_alt(type, line);
        out << "valid\n";
      } catch (const ValidationError& e) {
        out << "invalid\n";
        for (const auto& v : e.violations())
          std::cerr << error_name(v.code) << ": " << v.message << '\n';
        status = 1;
      } catch (const Error& e) {
        out << "invalid\n";
        std::cerr << e.what() << '\n';
        status = 1;
      }
    }
    return status;
  }

  if (app.got_subcommand(stats)) {
    for (const auto& line : input_lines(input))
      out << (type == "perm" ? perm_stats_line(parse_perm(line))
                             : stats_line(parse_tableau(line)))
          << '\n';
    return 0;
  }

  if (app.got_subcommand(convert)) {
    if (trace && !(to == "perm" && algo == "cn"))
      throw Usage("--trace requires --to perm --algo cn");
    auto lines = input_lines(input);
    if (lines.empty() && from == "forest") lines.push_back("");
    for (const auto& line : lines) out << from_alt(to, to_alt(from, line), algo, trace) << '\n';
    return 0;
  }

  if (app.got_subcommand(split_cmd)) {
    for (const auto& line : input_lines(input)) {
      const auto text = render_partition(split(parse_tableau(line)));
      if (!text.empty()) out << text << '\n';
    }
    return 0;
  }

  if (app.got_subcommand(merge_cmd)) {
    std::vector<AltTableau> parts;
    for (const auto& line : input_lines(input)) {
      // Accept partition lines `<set> :: <tableau>` as produced by split.
      const auto sep = line.find("::");
      parts.push_back(parse_tableau(sep == std::string::npos ? line : line.substr(sep + 2)));
    }
    out << render_tableau(merge_all(parts)) << '\n';
    return 0;
  }

  if (app.got_subcommand(enumerate)) {
    check_enumeration_limit(n);
    const auto fmt = format == "record" ? TableauFormat::Record : TableauFormat::Compact;
    auto emit = [&](const AltTableau& t) { out << render_tableau(t, fmt) << '\n'; };
    if (via_perm) for_each_via_perm(n, emit);
    else for_each_tableau(n, emit);
    return 0;
  }

  if (app.got_subcommand(count)) {
    check_enumeration_limit(n);
    out << count_table(n, jobs).render();
    return 0;
  }

  if (app.got_subcommand(verify)) {
    const Report r = verify_suite(suite, n);
    out << r.render();
    return r.ok() ? 0 : 1;
  }

  if (app.got_subcommand(asep)) {
    const AsepParams p{n, parse_rational(q), parse_rational(alpha_s), parse_rational(beta_s)};
    out << render_asep(n, asep_distribution(p));
    return 0;
  }

  if (app.got_subcommand(render)) {
    for (const auto& line : input_lines(input)) {
      const AltTableau t = parse_tableau(line);
      if (style == "grid") out << render_tableau(t, TableauFormat::Grid) << '\n';
      else if (style == "forest") out << render_forest(forest_of(t)) << '\n';
      else {
        const auto d = arc_of(t);
        out << "points=" << d.points.size() << " arcs=" << d.arcs.size()
            << " crossings=" << crossing_count(d) << '\n';
        for (const auto& [i, j] : d.arcs) out << i << ' ' << j << '\n';
      }
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const altab::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
