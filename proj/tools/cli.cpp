#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "simperm/dynamics.hpp"
#include "simperm/error.hpp"
#include "simperm/format.hpp"
#include "simperm/genealogy.hpp"
#include "simperm/json_io.hpp"
#include "simperm/paste_reverse.hpp"
#include "simperm/simplicity.hpp"

namespace simperm::cli {
namespace {

// Thrown for argument problems the library itself would not reject.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string block_text(const Block& b) {
  return "{" + std::to_string(b.lo()) + ".." + std::to_string(b.hi()) + "}";
}

// "-3x + 13", "x + 1", "-x", "4"
std::string affine_text(const AffinePiece& piece) {
  std::string out;
  if (piece.slope == 1) {
    out = "x";
  } else if (piece.slope == -1) {
    out = "-x";
  } else {
    out = std::to_string(piece.slope) + "x";
  }
  if (piece.intercept > 0) out += " + " + std::to_string(piece.intercept);
  if (piece.intercept < 0) out += " - " + std::to_string(-piece.intercept);
  return out;
}

Permutation require_full_cycle(const std::string& text) {
  Permutation p = parse_permutation(text);
  if (!is_full_cycle(p)) throw UsageError(text + " is not a full cycle");
  return p;
}

void cmd_check(const std::string& text, std::ostream& out) {
  const Permutation p = parse_permutation(text);
  const SimplicityClass cls = classify(p);
  out << to_string(cls) << '\n';
  if (cls.tag != SimplicityClass::Tag::kMixedSimple) return;

  const auto structure = mixed_structure(p);
  if (!structure) throw Error(ErrorCode::kNotInvariant, "mixed simple permutation without block structure");
  const int blocks = 1 << structure->s;
  out << "sigma: " << to_string(structure->sigma) << '\n';
  for (int j = 1; j <= blocks; ++j) {
    const Permutation& r = structure->restrictions[static_cast<std::size_t>(j - 1)];
    const SimplicityClass rc = classify(r);
    out << "block " << j << ' ' << block_text(partition_block(p.degree(), blocks, j)) << " -> "
        << block_text(partition_block(p.degree(), blocks, structure->sigma(j))) << " restriction "
        << to_string(r) << ' ' << to_string(rc.variant.value_or(StefanVariant::kAlpha)) << '\n';
  }
}

int cmd_enumerate(int order, bool json, bool oracle, std::ostream& out) {
  if (order < 6 || order % 4 != 2) throw UsageError("order must be 4n+2 >= 6");
  if (oracle && order > kBruteForceMaxOrder) {
    throw UsageError("--oracle is limited to order <= " + std::to_string(kBruteForceMaxOrder));
  }
  const auto perms = enumerate_sim_4n2((order - 2) / 4);
  std::optional<bool> match;
  if (oracle) {
    auto sorted = perms;
    std::sort(sorted.begin(), sorted.end());
    match = sorted == brute_force_sim(order);
  }
  if (json) {
    out << enumeration_to_json(order, perms, match) << '\n';
  } else {
    for (const Permutation& p : perms) out << to_string(p) << '\n';
    if (match) out << (*match ? "MATCH" : "MISMATCH") << '\n';
  }
  return match.value_or(true) ? kExitOk : kExitInternal;
}

void cmd_branch(const std::string& name, int count, bool one_line, std::ostream& out) {
  const auto family = parse_branch_family(name);
  if (!family) throw UsageError("unknown branch family '" + name + "'");
  if (count < 1) throw UsageError("count must be >= 1");
  for (const Permutation& p : family_chain(*family, count)) {
    out << (one_line ? to_string(p) : to_cycle_string(p)) << '\n';
  }
}

void cmd_markov(const std::string& text, const std::string& dot_path, bool json, std::ostream& out) {
  const MarkovGraph g = markov_graph(require_full_cycle(text));
  if (!dot_path.empty()) {
    std::ofstream file(dot_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + dot_path);
    file << export_dot(g);
    out << dot_path << '\n';
    return;
  }
  if (json) {
    out << graph_to_json(g) << '\n';
    return;
  }
  out << "vertices " << g.vertex_count() << '\n' << "edges " << g.edge_count() << '\n';
  for (const auto& [from, to] : g.edges()) out << 'J' << from << " -> J" << to << '\n';
}

void cmd_forces(const std::string& text, int m, std::ostream& out) {
  const Permutation p = require_full_cycle(text);
  if (m < 1) throw UsageError("period must be >= 1");
  if (!forces_period(p, m)) {
    out << "NO\n";
    return;
  }
  out << "YES period " << m << " forced\n";
  if (m == p.degree()) {
    out << "orbit:";
    int x = 1;
    for (int i = 0; i < m; ++i, x = p(x)) out << (i == 0 ? " " : " -> ") << x;
    out << "\nminimal period: " << m << '\n';
    return;
  }
  const auto loop = find_nonrepetitive_loop(markov_graph(p), m);
  if (!loop) throw Error(ErrorCode::kDegenerateLoop, "forced period without a witness loop");
  out << "loop:";
  for (std::size_t i = 0; i < loop->vertices.size(); ++i) out << (i == 0 ? " J" : " -> J") << loop->vertices[i];
  const PeriodicOrbit orbit = periodic_orbit_from_loop(primitive_function(p), *loop);
  out << "\norbit:";
  for (std::size_t i = 0; i < orbit.points.size(); ++i) out << (i == 0 ? " " : " -> ") << orbit.points[i].str();
  out << "\nminimal period: " << orbit.period << '\n';
}

void cmd_primitive(const std::string& text, std::ostream& out) {
  const PiecewiseLinearMap f = primitive_function(parse_permutation(text));
  out << "x < 1: f(x) = " << f.left_clamp() << '\n';
  for (int k = 1; k < f.degree(); ++k) {
    out << 'J' << k << " [" << k << ',' << k + 1 << "]: f(x) = " << affine_text(f.branch(k)) << '\n';
  }
  out << "x >= " << f.degree() << ": f(x) = " << f.right_clamp() << '\n';
}

void cmd_paste(const std::string& mode, const std::string& a, const std::string& b, std::ostream& out) {
  if (mode == "left") {
    out << to_string(left_paste(parse_permutation(a), parse_permutation(b))) << '\n';
  } else if (mode == "right") {
    out << to_string(right_paste(parse_permutation(a), parse_permutation(b))) << '\n';
  } else if (mode == "cycles") {
    out << to_string(paste_cycles(parse_cycle(a), parse_cycle(b))) << '\n';
  } else {
    throw UsageError("paste mode must be left, right or cycles");
  }
}

void cmd_reverse(const std::string& text, bool cycle, std::ostream& out) {
  if (cycle) {
    out << to_string(reverse_cycle(parse_cycle(text))) << '\n';
  } else {
    out << to_string(reverse_perm(parse_permutation(text))) << '\n';
  }
}

void cmd_cmp(long long a, long long b, std::ostream& out) {
  if (a < 1 || b < 1) throw UsageError("cmp takes positive integers");
  if (sharkovskii_less(a, b)) {
    out << a << " ⊲ " << b << '\n';
  } else if (sharkovskii_less(b, a)) {
    out << b << " ⊲ " << a << '\n';
  } else {
    out << a << " = " << b << '\n';
  }
}

void cmd_genealogy(const std::string& text, std::ostream& out) {
  const GenealogyReport report = genealogy_of(parse_permutation(text));
  out << "class: " << to_string(report.cls) << '\n';
  if (!report.cls.is_simple()) return;
  out << "families:";
  if (report.families.empty()) out << " none";
  for (const BranchFamily f : report.families) out << ' ' << to_string(f);
  out << "\npredecessors:";
  if (report.predecessors.empty()) out << " none";
  for (const Permutation& p : report.predecessors) out << ' ' << to_cycle_string(p);
  out << '\n';
  if (report.square) {
    out << "square: " << to_string(*report.square) << '\n' << "theta(1): " << report.root_index << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple permutations, Pasting and Reversing, Markov graphs and forcing"};
  app.require_subcommand(1);
  int status = kExitOk;
  std::function<void()> action;

  std::string perm_text;
  std::string second_text;
  std::string mode;
  std::string dot_path;
  int order = 0;
  int count = 0;
  int period = 0;
  long long cmp_a = 0;
  long long cmp_b = 0;
  bool json = false;
  bool oracle = false;
  bool one_line = false;
  bool cycle = false;

  auto* check = app.add_subcommand("check", "Classify a permutation");
  check->add_option("perm", perm_text, "One-line or cycle notation")->required();
  check->callback([&] { action = [&] { cmd_check(perm_text, out); }; });

  auto* enumerate = app.add_subcommand("enumerate", "List Sim(4n+2)");
  enumerate->add_option("--order", order, "Order 4n+2")->required();
  enumerate->add_flag("--json", json, "Emit JSON");
  enumerate->add_flag("--oracle", oracle, "Cross-check against exhaustive search");
  enumerate->callback([&] { action = [&] { status = cmd_enumerate(order, json, oracle, out); }; });

  auto* branch = app.add_subcommand("branch", "First members of a genealogy branch");
  branch->add_option("family", mode, "pow2_theta, pow2_phi, mixed_theta, mixed_eta, mixed_phi, "
                                     "mixed_varphi, stefan_alpha, stefan_beta")->required();
  branch->add_option("count", count, "Number of members")->required();
  branch->add_flag("--one-line", one_line, "Print one-line instead of cycle notation");
  branch->callback([&] { action = [&] { cmd_branch(mode, count, one_line, out); }; });

  auto* markov = app.add_subcommand("markov", "Markov graph of a full cycle");
  markov->add_option("perm", perm_text)->required();
  markov->add_option("--dot", dot_path, "Write a DOT file");
  markov->add_flag("--json", json, "Emit JSON");
  markov->callback([&] { action = [&] { cmd_markov(perm_text, dot_path, json, out); }; });

  auto* forces = app.add_subcommand("forces", "Does the orbit force period m?");
  forces->add_option("perm", perm_text)->required();
  forces->add_option("m", period)->required();
  forces->callback([&] { action = [&] { cmd_forces(perm_text, period, out); }; });

  auto* primitive = app.add_subcommand("primitive", "Tabulate the primitive piecewise-linear map");
  primitive->add_option("perm", perm_text)->required();
  primitive->callback([&] { action = [&] { cmd_primitive(perm_text, out); }; });

  auto* paste = app.add_subcommand("paste", "Left/right pasting of permutations or pasting of cycles");
  paste->add_option("mode", mode, "left, right or cycles")->required();
  paste->add_option("a", perm_text)->required();
  paste->add_option("b", second_text)->required();
  paste->callback([&] { action = [&] { cmd_paste(mode, perm_text, second_text, out); }; });

  auto* reverse = app.add_subcommand("reverse", "Reversing of a permutation (or of a cycle)");
  reverse->add_option("perm", perm_text)->required();
  reverse->add_flag("--cycle", cycle, "Reverse a single cycle instead");
  reverse->callback([&] { action = [&] { cmd_reverse(perm_text, cycle, out); }; });

  auto* cmp = app.add_subcommand("cmp", "Compare two integers in the Sharkovskii order");
  cmp->add_option("a", cmp_a)->required();
  cmp->add_option("b", cmp_b)->required();
  cmp->callback([&] { action = [&] { cmd_cmp(cmp_a, cmp_b, out); }; });

  auto* genealogy = app.add_subcommand("genealogy", "Branches and predecessors of a simple permutation");
  genealogy->add_option("perm", perm_text)->required();
  genealogy->callback([&] { action = [&] { cmd_genealogy(perm_text, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (action) action();
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool internal = e.code() == ErrorCode::kDegenerateLoop || e.code() == ErrorCode::kChaseFailure;
    return internal ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace simperm::cli
