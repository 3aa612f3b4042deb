// ordrep: exact computation with lattice representations of finite groups.
//
// Subcommands: factor, decompose, equiv, order-dual, induce, frobenius,
// imprimitivity, verify-paper. Inputs are declarative spec files (see
// specfile.hpp and the fixtures/ directory); output is human-readable text or,
// with --json, a machine-readable document with sorted keys.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict or failed
// checks, 2 input or precondition error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordrep/ordrep.hpp"
#include "ordrep/reports.hpp"

namespace {

using nlohmann::json;
using namespace ordrep;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

struct Options {
  bool json_output = false;
  std::size_t cap = kDefaultCap;
  BlockConvention convention = BlockConvention::literal;
};

std::size_t cap_from_env() {
  if (const char* env = std::getenv("ORDREP_CAP")) {
    try {
      long long v = std::stoll(env);
      if (v < 1) throw std::invalid_argument("cap");
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw Error(std::string("invalid ORDREP_CAP value '") + env + "'");
    }
  }
  return kDefaultCap;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return parse_spec(in);
}

std::string perm_list(const PermGroup& g) {
  std::string out;
  for (const auto& p : g.generators()) {
    if (!out.empty()) out += ", ";
    out += to_cycle_string(p);
  }
  return out.empty() ? "e" : out;
}

json subgroup_json(const PermGroup& g, const Subgroup& h) {
  json j;
  to_json(j, make_subgroup_report(g, h));
  return j;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_output)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_factor(const Options& opt, const std::string& file) {
  SpecFile spec = load_spec(file);
  GroupPtr g = build_group(spec, opt.cap);
  PosRep rho = build_rep(spec, g);
  Factorization f = factor(rho);
  FactorizationReport report = make_factorization_report(rho, f);

  std::ostringstream text;
  text << "group: " << perm_list(*g) << " (order " << g->order() << ")\n";
  text << "degree: " << report.degree << "\n";
  for (std::size_t i = 0; i < report.pi_generators.size(); ++i)
    text << "pi(gen " << i + 1 << ") = " << report.pi_generators[i] << "\n";
  text << "m =";
  for (std::size_t i = 0; i < report.m_symbolic.size(); ++i)
    text << " [" << report.m_symbolic[i] << " ~ " << report.m_decimal[i] << "]";
  text << "\nverified: rho_s = m pi_s m^-1 for all s: "
       << (report.verified ? "yes" : "NO") << "\n";

  json j;
  to_json(j, report);
  emit(opt, j, text.str());
  return report.verified ? kExitOk : kExitNegative;
}

int cmd_decompose(const Options& opt, const std::string& file) {
  SpecFile spec = load_spec(file);
  GroupPtr g = build_group(spec, opt.cap);
  PosRep rho = build_rep(spec, g);
  Decomposition d = decompose(rho);
  DecompositionReport report = make_decomposition_report(*g, d);

  std::ostringstream text;
  text << "degree " << d.total_degree << " splits into:\n";
  for (const auto& s : report.summands) {
    text << "  " << s.multiplicity << " x dim " << s.index << "  (stabilizer class: order "
         << s.subgroup.order << ", <";
    for (std::size_t i = 0; i < s.subgroup.generators.size(); ++i)
      text << (i ? ", " : "") << s.subgroup.generators[i];
    text << ">)\n";
  }
  text << "irreducible: " << (is_irreducible(rho) ? "yes" : "no") << "\n";

  json j;
  to_json(j, report);
  j["irreducible"] = is_irreducible(rho);
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_equiv(const Options& opt, const std::string& mode, const std::string& file1,
              const std::string& file2) {
  SpecFile spec1 = load_spec(file1);
  SpecFile spec2 = load_spec(file2);
  GroupPtr g = build_group(spec1, opt.cap);
  GroupPtr g2 = build_group(spec2, opt.cap);
  if (!(*g == *g2)) throw Error("the two files describe different groups");
  PosRep r1 = build_rep(spec1, g);
  PosRep r2 = build_rep(spec2, g);

  json j;
  std::ostringstream text;
  bool verdict = false;
  if (mode == "order") {
    OrderEquivalence oe = order_equivalent(r1, r2);
    verdict = oe.equivalent;
    j["mode"] = "order";
    j["equivalent"] = verdict;
    text << "order equivalent: " << (verdict ? "yes" : "no") << "\n";
    if (oe.witness) {
      json w;
      w["perm"] = to_cycle_string(oe.witness->sigma);
      std::vector<std::string> mult;
      for (const auto& e : oe.witness->m.entries) mult.push_back(e.str());
      w["multiplier"] = mult;
      j["witness"] = w;
      text << "witness: sigma = " << to_cycle_string(oe.witness->sigma) << ", m =";
      for (const auto& e : oe.witness->m.entries) text << " " << e.str();
      text << "\n";
    }
  } else if (mode == "linear") {
    verdict = linear_equivalent(r1, r2);
    j["mode"] = "linear";
    j["equivalent"] = verdict;
    text << "linearly equivalent (equal characters): " << (verdict ? "yes" : "no") << "\n";
  } else {
    throw Error("unknown --mode '" + mode + "' (use order|linear)");
  }
  emit(opt, j, text.str());
  return verdict ? kExitOk : kExitNegative;
}

int cmd_order_dual(const Options& opt, const std::string& file) {
  SpecFile spec = load_spec(file);
  GroupPtr g = build_group(spec, opt.cap);
  auto dual = order_dual(g);

  std::ostringstream text;
  text << "group of order " << g->order() << ": " << dual.size()
       << " irreducibles (one per conjugacy class of subgroups)\n";
  json entries = json::array();
  for (const auto& e : dual) {
    text << "  dim " << e.rep.degree() << "  from subgroup of order " << e.subgroup.order()
         << " <";
    auto gens = small_generating_set(*g, e.subgroup);
    for (std::size_t i = 0; i < gens.size(); ++i)
      text << (i ? ", " : "") << to_cycle_string(g->element(gens[i]));
    text << ">\n";
    json je;
    je["subgroup"] = subgroup_json(*g, e.subgroup);
    je["dimension"] = e.rep.degree();
    entries.push_back(je);
  }
  json j;
  j["entries"] = entries;
  j["group_order"] = g->order();
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_induce(const Options& opt, const std::string& file) {
  SpecFile spec = load_spec(file);
  GroupPtr g = build_group(spec, opt.cap);
  SubgroupSpec sub = build_subgroup(spec, g);
  ThetaSpec theta = build_theta(spec, g, sub, opt.cap);

  InducedRep ind = induce(theta.rep, sub.subgroup, g);
  Decomposition d = decompose(ind.rep);
  DecompositionReport dreport = make_decomposition_report(*g, d);

  std::ostringstream text;
  text << "subgroup order " << sub.subgroup.order() << ", index "
       << g->order() / sub.subgroup.order() << "\n";
  text << "theta degree " << theta.rep.degree() << " -> induced degree " << ind.rep.degree()
       << "\n";
  text << "induced decomposition:\n";
  for (const auto& s : dreport.summands)
    text << "  " << s.multiplicity << " x dim " << s.index << "\n";

  json j;
  j["subgroup"] = subgroup_json(*g, sub.subgroup);
  j["theta_degree"] = theta.rep.degree();
  j["induced_degree"] = ind.rep.degree();
  to_json(j["decomposition"], dreport);
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_frobenius(const Options& opt, const std::string& file) {
  SpecFile spec = load_spec(file);
  GroupPtr g = build_group(spec, opt.cap);
  SubgroupSpec sub = build_subgroup(spec, g);
  FrobeniusTable table = frobenius_table(g, sub.subgroup);

  std::ostringstream text;
  text << "rows: irreducibles of H (order " << sub.subgroup.order() << "); columns: irreducibles of G\n";
  text << "cell = (m(rho, Ind theta), m(theta, rho|_H))\n";
  for (std::size_t r = 0; r < table.cells.size(); ++r) {
    text << "theta dim " << table.theta_dims[r] << ":";
    for (std::size_t c = 0; c < table.cells[r].size(); ++c) {
      const auto& cell = table.cells[r][c];
      text << "  (" << cell.m_induced << "," << cell.m_restricted << ")"
           << (cell.equal ? "" : "*");
    }
    text << "\n";
  }
  text << "(* marks a cell where the two multiplicities differ)\n";
  text << (table.all_equal() ? "all cells agree\n" : "reciprocity fails on marked cells\n");

  json j;
  j["theta_dims"] = table.theta_dims;
  j["rho_dims"] = table.rho_dims;
  json cells = json::array();
  for (const auto& row : table.cells) {
    json jrow = json::array();
    for (const auto& cell : row)
      jrow.push_back(json{{"m_induced", cell.m_induced},
                          {"m_restricted", cell.m_restricted},
                          {"equal", cell.equal}});
    cells.push_back(jrow);
  }
  j["cells"] = cells;
  j["all_equal"] = table.all_equal();
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_imprimitivity(const Options& opt, const std::string& file) {
  SpecFile spec = load_spec(file);
  GroupPtr g = build_group(spec, opt.cap);
  PosRep rho = build_rep(spec, g);

  auto systems = all_block_systems(rho);
  bool primitive = is_primitive(rho, opt.convention);

  std::ostringstream text;
  json jsystems = json::array();
  text << systems.size() << " block system(s):\n";
  for (const auto& bs : systems) {
    text << "  " << bs.block_count() << " block(s):";
    json jblocks = json::array();
    for (const auto& b : bs.blocks) {
      text << " {";
      json jb = json::array();
      for (std::size_t i = 0; i < b.size(); ++i) {
        text << (i ? " " : "") << b[i] + 1;
        jb.push_back(b[i] + 1);
      }
      text << "}";
      jblocks.push_back(jb);
    }
    text << (covariance_check(rho, bs) ? "" : "  [covariance FAILS]") << "\n";
    jsystems.push_back(json{{"blocks", jblocks}, {"block_count", bs.block_count()}});
  }
  text << "primitive (" << (opt.convention == BlockConvention::literal ? "literal" : "maximal")
       << " convention): " << (primitive ? "yes" : "no") << "\n";

  json j;
  j["systems"] = jsystems;
  j["primitive"] = primitive;
  j["convention"] = opt.convention == BlockConvention::literal ? "literal" : "maximal";

  if (is_irreducible(rho)) {
    auto chain = primitive_chain(rho, opt.convention);
    json jchain = json::array();
    text << "chain to a primitive representation (" << chain.size() << " step(s)):\n";
    for (const auto& step : chain) {
      text << "  subgroup order " << step.h.order() << ", theta degree " << step.theta.degree()
           << "\n";
      jchain.push_back(json{{"subgroup", subgroup_json(*step.parent, step.h)},
                            {"theta_degree", step.theta.degree()}});
    }
    j["chain"] = jchain;
  }
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_verify_paper(const Options& opt, const std::string& filter) {
  auto results = run_verification_checks(filter, opt.convention);
  bool all = true;
  std::ostringstream text;
  json checks = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    text << (r.passed ? "[PASS] " : "[FAIL] ") << "check " << r.id << " " << r.name << ": "
         << r.detail << "\n";
    checks.push_back(
        json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (results.empty()) {
    text << "no checks match filter '" << filter << "'\n";
    all = false;
  }
  text << (all ? "all checks passed\n" : "there were failures\n");
  json j;
  j["checks"] = checks;
  j["all_passed"] = all;
  emit(opt, j, text.str());
  return all ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with lattice representations of finite groups"};
  app.require_subcommand(1);

  Options opt;
  std::string convention_name = "literal";
  try {
    opt.cap = cap_from_env();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json_output, "emit machine-readable JSON");
    sub->add_option("--cap", opt.cap, "group enumeration cap")->capture_default_str();
    sub->add_option("--block-convention", convention_name,
                    "which block systems count as trivial: literal|maximal")
        ->check(CLI::IsMember({"literal", "maximal"}));
  };

  std::string file1, file2, mode = "order", filter;

  CLI::App* factor_cmd = app.add_subcommand("factor", "split rho into (m, pi)");
  add_common(factor_cmd);
  factor_cmd->add_option("file", file1, "rep spec file")->required();

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "decompose into irreducibles");
  add_common(decompose_cmd);
  decompose_cmd->add_option("file", file1, "rep spec file")->required();

  CLI::App* equiv_cmd = app.add_subcommand("equiv", "test order or linear equivalence");
  add_common(equiv_cmd);
  equiv_cmd->add_option("--mode", mode, "order|linear")->check(CLI::IsMember({"order", "linear"}));
  equiv_cmd->add_option("file1", file1, "first rep spec file")->required();
  equiv_cmd->add_option("file2", file2, "second rep spec file")->required();

  CLI::App* dual_cmd = app.add_subcommand("order-dual", "all irreducibles of a group");
  add_common(dual_cmd);
  dual_cmd->add_option("file", file1, "group spec file")->required();

  CLI::App* induce_cmd = app.add_subcommand("induce", "induce theta from a subgroup");
  add_common(induce_cmd);
  induce_cmd->add_option("file", file1, "group+subgroup+theta spec file")->required();

  CLI::App* frob_cmd = app.add_subcommand("frobenius", "reciprocity multiplicity table");
  add_common(frob_cmd);
  frob_cmd->add_option("file", file1, "group+subgroup spec file")->required();

  CLI::App* imp_cmd = app.add_subcommand("imprimitivity", "block systems and primitivity");
  add_common(imp_cmd);
  imp_cmd->add_option("file", file1, "rep spec file")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the built-in verification suite");
  add_common(verify_cmd);
  verify_cmd->add_option("--filter", filter, "run only checks whose name contains this substring");

  CLI11_PARSE(app, argc, argv);
  opt.convention =
      convention_name == "maximal" ? BlockConvention::maximal : BlockConvention::literal;

  try {
    if (factor_cmd->parsed()) return cmd_factor(opt, file1);
    if (decompose_cmd->parsed()) return cmd_decompose(opt, file1);
    if (equiv_cmd->parsed()) return cmd_equiv(opt, mode, file1, file2);
    if (dual_cmd->parsed()) return cmd_order_dual(opt, file1);
    if (induce_cmd->parsed()) return cmd_induce(opt, file1);
    if (frob_cmd->parsed()) return cmd_frobenius(opt, file1);
    if (imp_cmd->parsed()) return cmd_imprimitivity(opt, file1);
    if (verify_cmd->parsed()) return cmd_verify_paper(opt, filter);
  } catch (const NotAHomomorphism& e) {
    std::cerr << "error: not a homomorphism: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
