// Command-line surface for the dual braid monoid of G(e,e,n+1): word and
// conjugacy problems, lattice exploration, enumerative checks, SVG diagrams.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 parse error,
// 3 domain or size-guard error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <string>

#include "ncpgar/ncpgar.hpp"

using nlohmann::json;
using namespace ncpgar;

namespace {

struct Options {
  int e = 0;
  int n = 0;
  bool as_json = false;
};

void emit(const Options& opt, const json& payload, const std::string& text) {
  if (opt.as_json)
    std::cout << payload.dump() << "\n";
  else
    std::cout << text;
}

json base_payload(const Options& opt, const std::string& command) {
  return json{{"command", command}, {"params", {{"e", opt.e}, {"n", opt.n}}}};
}

void require_group_params(const Options& opt) {
  if (opt.e < 2) throw DomainError("group-facing commands require e >= 2");
}

// --- verification suites ----------------------------------------------------

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

template <typename T>
Check make_check(const std::string& name, const T& expected, const T& actual) {
  Check c;
  c.name = name;
  std::ostringstream se, sa;
  se << expected;
  sa << actual;
  c.expected = se.str();
  c.actual = sa.str();
  c.pass = expected == actual;
  return c;
}

void suite_lattice(const Params& P, std::vector<Check>& out) {
  auto members = enumerate_members(P);
  out.push_back(make_check("lattice cardinality = catalan number", catalan(P),
                           (long long)members.size()));
  bool laws = true;
  for (const auto& u : members)
    for (const auto& v : members) {
      Partition m = meet(P, u, v), j = join(P, u, v);
      laws = laws && (meet(P, v, u) == m) && (join(P, v, u) == j);
      laws = laws && (u.refines(v) == (m == u)) && (u.refines(v) == (j == v));
    }
  out.push_back(make_check("meet/join laws", true, laws));
  bool atoms_ok = true;
  int asym = 0, sym = 0;
  for (const auto& a : height_one_members(P)) {
    if (height(P, a) != 1) atoms_ok = false;
    (classify(P, a) == SymmetryClass::Asymmetric ? asym : sym)++;
  }
  out.push_back(make_check("height 1 member classes", true, atoms_ok));
  out.push_back(make_check("asymmetric atom count", P.circle(), asym));
  out.push_back(make_check("symmetric atom count", P.n * (P.n - 1), sym));
}

void suite_correspondence(const Params& P, std::vector<Check>& out) {
  auto members = enumerate_members(P);
  AtomTable T(P);
  GroupTable table(P);
  bool round = true, law = true;
  for (const auto& u : members) {
    GroupElement g = g_of(P, u);
    auto back = u_of(T, g);
    round = round && back && *back == u;
    law = law && height(P, u) == codim(g) && codim(g) == table.l_T(g);
  }
  out.push_back(make_check("u_of inverts g_of", true, round));
  out.push_back(make_check("height = codim = l_T", true, law));
  auto divisors = table.divisors_of_coxeter();
  out.push_back(make_check("|{g : g <=_T c}| = lattice size", (long long)members.size(),
                           (long long)divisors.size()));
  bool order = true;
  for (const auto& u : members)
    for (const auto& v : members)
      order = order && u.refines(v) == table.leq_T(g_of(P, u), g_of(P, v));
  out.push_back(make_check("refines iff <=_T", true, order));
}

void suite_complement(const Params& P, std::vector<Check>& out) {
  auto members = enumerate_members(P);
  bool multiplicative = true, heights = true, anti = true;
  for (const auto& u : members)
    for (const auto& v : members) {
      if (!u.refines(v)) continue;
      Partition w = complement(P, u, v);
      multiplicative =
          multiplicative && mul(g_of(P, u), g_of(P, w)) == g_of(P, v);
      heights = heights && height(P, u) + height(P, w) == height(P, v);
    }
  for (const auto& u : members) anti = anti && bar(P, bar(P, u)) == u.rotated(P.n + 1);
  out.push_back(make_check("g_u g_{u\\v} = g_v", true, multiplicative));
  out.push_back(make_check("ht(u) + ht(u\\v) = ht(v)", true, heights));
  out.push_back(make_check("bar(bar(u)) = rotate(u, n+1)", true, anti));
}

void suite_garside(const Params& P, std::vector<Check>& out) {
  DualBraidMonoid M(P);
  bool rels = true;
  for (const auto& line : check_relations(M)) rels = rels && line.pass;
  out.push_back(make_check("defining relations hold", true, rels));
  out.push_back(make_check("central Delta power commutes with atoms", true,
                           center_commutes(M)));
  std::mt19937 rng(20240811);
  const auto& atoms = M.atom_table().atoms;
  bool idem = true, weighted = true;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Partition> fs;
    for (int i = 0; i < 6; ++i) fs.push_back(atoms[rng() % atoms.size()]);
    CanonicalForm cf = M.normalize(0, fs);
    idem = idem && M.normalize(cf.delta, cf.factors) == cf;
    for (size_t i = 0; i + 1 < cf.factors.size(); ++i)
      weighted = weighted && M.left_weighted(cf.factors[i], cf.factors[i + 1]);
  }
  out.push_back(make_check("normalize idempotent", true, idem));
  out.push_back(make_check("normal forms left-weighted", true, weighted));
}

void suite_enumeration(const Params& P, std::vector<Check>& out) {
  LatticeModel L = LatticeModel::main(P);
  for (int N = 1; N <= 3; ++N)
    out.push_back(make_check("chain_count(" + std::to_string(N) + ") = Z(N+1)",
                             zeta_main(P).eval_integer(N + 1), chain_count(L, N)));
  GroupTable table(P);
  auto reds = table.red_T(coxeter_c(P));
  out.push_back(make_check("|Red_T(c)| = maximal chain count",
                           strict_chain_count_by_inversion(L, P.n + 2),
                           (long long)reds.size()));
  out.push_back(make_check("hurwitz orbit covers Red_T(c)", (long long)reds.size(),
                           (long long)hurwitz_orbit(reds.front()).size()));
  out.push_back(
      make_check("beta acts by conjugation", true, beta_acts_as_conjugation(P, table)));
  auto fib = e_fibration_count(P, 2);
  out.push_back(make_check("derived-sequence fibers have size 1+2n", true, fib.pass));
}

int run_verify(const Options& opt, const std::string& suite) {
  Params P(opt.e, opt.n);
  std::vector<Check> checks;
  bool known = false;
  if (suite == "lattice" || suite == "all") suite_lattice(P, checks), known = true;
  if (suite == "correspondence" || suite == "all") suite_correspondence(P, checks), known = true;
  if (suite == "complement" || suite == "all") suite_complement(P, checks), known = true;
  if (suite == "garside" || suite == "all") suite_garside(P, checks), known = true;
  if (suite == "enumeration" || suite == "all") suite_enumeration(P, checks), known = true;
  if (!known) throw ParseError("unknown suite '" + suite + "'");
  bool all = true;
  json payload = base_payload(opt, "verify");
  payload["suite"] = suite;
  payload["checks"] = json::array();
  std::string text;
  for (const auto& c : checks) {
    all = all && c.pass;
    payload["checks"].push_back(json{{"check", c.name},
                                     {"params", {{"e", opt.e}, {"n", opt.n}}},
                                     {"expected", c.expected},
                                     {"actual", c.actual},
                                     {"pass", c.pass}});
    text += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + " (expected " +
            c.expected + ", got " + c.actual + ")\n";
  }
  payload["pass"] = all;
  emit(opt, payload, text);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"dual braid monoid toolkit for G(e,e,n+1)"};
  app.add_option("--e", opt.e, "symmetry order e")->required();
  app.add_option("--n", opt.n, "rank parameter n (group G(e,e,n+1))")->required();
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.require_subcommand(1);

  std::string word1, word2, literal, suite = "all", out_path;
  int chain_n = -1, svg_size = 400;
  bool flag_count = false, flag_list = false, flag_hasse = false;
  bool flag_dump = false, flag_check = false, flag_orbit = false;

  auto* nf = app.add_subcommand("nf", "left-weighted normal form of a word");
  nf->add_option("word", word1)->required();
  auto* eq = app.add_subcommand("eq", "decide equality of two words");
  eq->add_option("word1", word1)->required();
  eq->add_option("word2", word2)->required();
  auto* conj = app.add_subcommand("conj", "decide conjugacy of two words");
  conj->add_option("word1", word1)->required();
  conj->add_option("word2", word2)->required();
  auto* lattice = app.add_subcommand("lattice", "explore NCP(e,e,n+1)");
  lattice->add_flag("--count", flag_count);
  lattice->add_flag("--list", flag_list);
  lattice->add_flag("--hasse", flag_hasse);
  auto* zeta = app.add_subcommand("zeta", "Zeta polynomial / chain counts");
  zeta->add_option("--N", chain_n, "print the number of weak N-chains");
  app.add_subcommand("catalan", "lattice cardinality from the closed form");
  auto* rels = app.add_subcommand("relations", "defining length-2 relations");
  rels->add_flag("--dump", flag_dump);
  rels->add_flag("--check", flag_check);
  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz action on Red_T(c)");
  hurwitz->add_flag("--orbit", flag_orbit);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite);
  auto* render = app.add_subcommand("render", "SVG diagram of a member partition");
  render->add_option("literal", literal)->required();
  render->add_option("--out", out_path)->required();
  render->add_option("--size", svg_size);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    Params P(opt.e, opt.n);
    if (nf->parsed()) {
      require_group_params(opt);
      DualBraidMonoid M(P);
      CanonicalForm cf = parse(M, word1);
      json payload = base_payload(opt, "nf");
      payload["normal_form"] = print_cf(cf);
      emit(opt, payload, print_cf(cf) + "\n");
      return 0;
    }
    if (eq->parsed()) {
      require_group_params(opt);
      DualBraidMonoid M(P);
      bool same = M.eq(parse(M, word1), parse(M, word2));
      json payload = base_payload(opt, "eq");
      payload["equal"] = same;
      emit(opt, payload, same ? "true\n" : "false\n");
      return same ? 0 : 1;
    }
    if (conj->parsed()) {
      require_group_params(opt);
      DualBraidMonoid M(P);
      bool same = M.conjugacy_test(parse(M, word1), parse(M, word2));
      json payload = base_payload(opt, "conj");
      payload["conjugate"] = same;
      emit(opt, payload, same ? "true\n" : "false\n");
      return same ? 0 : 1;
    }
    if (lattice->parsed()) {
      require_group_params(opt);
      auto members = enumerate_members(P);
      json payload = base_payload(opt, "lattice");
      std::string text;
      if (flag_count || (!flag_list && !flag_hasse)) {
        payload["count"] = members.size();
        text += std::to_string(members.size()) + "\n";
      }
      if (flag_list) {
        payload["members"] = json::array();
        for (const auto& u : members) {
          payload["members"].push_back(print_literal(u));
          text += print_literal(u) + "\n";
        }
      }
      if (flag_hasse) {
        payload["edges"] = json::array();
        for (const auto& u : members)
          for (const auto& v : members) {
            if (!(u.refines(v)) || u == v) continue;
            if (height(P, v) != height(P, u) + 1) continue;  // covers step one level
            payload["edges"].push_back({print_literal(u), print_literal(v)});
            text += print_literal(u) + " < " + print_literal(v) + "\n";
          }
      }
      emit(opt, payload, text);
      return 0;
    }
    if (zeta->parsed()) {
      require_group_params(opt);
      Poly Z = zeta_main(P);
      json payload = base_payload(opt, "zeta");
      std::string text;
      payload["polynomial"] = Z.str();
      text += "Z(" + std::to_string(opt.e) + "," + std::to_string(opt.e) + "," +
              std::to_string(opt.n + 1) + ")(X) = " + Z.str() + "\n";
      if (chain_n >= 0) {
        long long v = Z.eval_integer(chain_n + 1);
        payload["N"] = chain_n;
        payload["chains"] = v;
        text += std::to_string(v) + "\n";
      }
      emit(opt, payload, text);
      return 0;
    }
    if (app.get_subcommand("catalan")->parsed()) {
      require_group_params(opt);
      json payload = base_payload(opt, "catalan");
      payload["catalan"] = catalan(P);
      emit(opt, payload, std::to_string(catalan(P)) + "\n");
      return 0;
    }
    if (rels->parsed()) {
      require_group_params(opt);
      json payload = base_payload(opt, "relations");
      std::string text;
      if (flag_check) {
        DualBraidMonoid M(P);
        bool all = true;
        payload["checks"] = json::array();
        for (const auto& line : check_relations(M)) {
          all = all && line.pass;
          payload["checks"].push_back({{"relation", line.name}, {"pass", line.pass}});
          text += std::string(line.pass ? "PASS  " : "FAIL  ") + line.name + "\n";
        }
        payload["pass"] = all;
        emit(opt, payload, text);
        return all ? 0 : 1;
      }
      payload["relations"] = json::array();
      for (const auto& rel : relations(P)) {
        std::string l, r;
        for (const auto& t : rel.left) l += atom_name(P, atom_partition(P, t)) + " ";
        for (const auto& t : rel.right) r += atom_name(P, atom_partition(P, t)) + " ";
        l.pop_back();
        r.pop_back();
        payload["relations"].push_back({{"family", rel.family}, {"left", l}, {"right", r}});
        text += rel.family + ": " + l + " = " + r + "\n";
      }
      emit(opt, payload, text);
      return 0;
    }
    if (hurwitz->parsed()) {
      require_group_params(opt);
      GroupTable table(P);
      auto reds = table.red_T(coxeter_c(P));
      json payload = base_payload(opt, "hurwitz");
      std::string text;
      payload["red_T_count"] = reds.size();
      text += "|Red_T(c)| = " + std::to_string(reds.size()) + "\n";
      if (flag_orbit) {
        auto orbit = hurwitz_orbit(reds.front());
        payload["orbit"] = orbit.size();
        text += "orbit size = " + std::to_string(orbit.size()) + "\n";
      }
      emit(opt, payload, text);
      return 0;
    }
    if (verify->parsed()) {
      require_group_params(opt);
      return run_verify(opt, suite);
    }
    if (render->parsed()) {
      require_group_params(opt);
      Partition u = parse_literal(P.circle(), true, literal);
      if (!is_member(P, u)) throw DomainError("literal is not a member of NCP(e,e,n+1)");
      std::string svg = render_svg(P, u, svg_size);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw DomainError("cannot open output path " + out_path);
      out << svg;
      json payload = base_payload(opt, "render");
      payload["out"] = out_path;
      payload["bytes"] = svg.size();
      emit(opt, payload, "wrote " + out_path + " (" + std::to_string(svg.size()) + " bytes)\n");
      return 0;
    }
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const DomainError& err) {
    std::cerr << "domain error: " << err.what() << "\n";
    return 3;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
  return 2;
}
