#include "sexpand/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "sexpand/catalog.hpp"
#include "sexpand/cayley.hpp"
#include "sexpand/expansion.hpp"
#include "sexpand/isomorphism.hpp"
#include "sexpand/liealg.hpp"
#include "sexpand/resonance.hpp"
#include "sexpand/survey.hpp"

namespace sexpand::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Catalog catalog_for(int order, const std::string& path, unsigned threads) {
  if (!path.empty()) {
    Catalog c = load(path);
    if (order != 0 && c.order != order)
      throw UsageError("catalog " + path + " has order " + std::to_string(c.order) + ", not " + std::to_string(order));
    return c;
  }
  if (order < 1 || order > kMaxCatalogOrder)
    throw UsageError("--order must be in 1.." + std::to_string(kMaxCatalogOrder));
  return enumerate(order, Equivalence::iso_and_anti, threads);
}

// A table given as a file path, "<order>:<id>" (catalog member), "se:<N>",
// "sm:<N>", or a bare id resolved against --catalog.
CayleyTable resolve_table(const std::string& spec, const std::string& catalog_path, unsigned threads) {
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    const std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
    if (all_digits(tail)) {
      if (head == "se") return make_se(std::stoi(tail));
      if (head == "sm") return make_sm(std::stoi(tail));
      if (all_digits(head)) {
        const Catalog c = catalog_for(std::stoi(head), "", threads);
        const CayleyTable* t = c.find_id(std::stoi(tail));
        if (!t) throw UsageError("no semigroup #" + tail + " of order " + head);
        return *t;
      }
    }
  }
  if (all_digits(spec) && !catalog_path.empty()) {
    const Catalog c = load(catalog_path);
    const CayleyTable* t = c.find_id(std::stoi(spec));
    if (!t) throw UsageError("no semigroup #" + spec + " in " + catalog_path);
    return *t;
  }
  return read_table_file(spec);
}

StructureConstants resolve_algebra(const std::string& spec) {
  try {
    return builtin_algebra(spec);
  } catch (const std::invalid_argument&) {
    return read_algebra_file(spec);
  }
}

// "S0=1,2,3 S1=1,4,5 V0=1 V1=2,3" with any of , ; space {} as separators.
std::map<std::string, std::vector<int>> parse_keyed_sets(const std::string& text) {
  static const std::regex key(R"((S0|S1|V0|V1)\s*=)");
  std::map<std::string, std::vector<int>> out;
  std::vector<std::pair<std::string, std::size_t>> marks;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), key); it != std::sregex_iterator(); ++it)
    marks.emplace_back((*it)[1].str(), static_cast<std::size_t>(it->position() + it->length()));
  if (marks.empty()) throw UsageError("expected S0=..., S1=... in '" + text + "'");
  for (std::size_t m = 0; m < marks.size(); ++m) {
    const std::size_t end = m + 1 < marks.size() ? text.rfind(marks[m + 1].first, marks[m + 1].second) : text.size();
    std::string body = text.substr(marks[m].second, end - marks[m].second);
    for (char& c : body)
      if (c == ',' || c == ';' || c == '{' || c == '}') c = ' ';
    std::istringstream is(body);
    std::vector<int> members;
    std::string tok;
    while (is >> tok) {
      if (!all_digits(tok)) throw UsageError("not an element: '" + tok + "'");
      members.push_back(std::stoi(tok));
    }
    if (out.count(marks[m].first)) throw UsageError("duplicate " + marks[m].first);
    out[marks[m].first] = std::move(members);
  }
  return out;
}

std::optional<SubspaceDecomposition> grading_from(const std::map<std::string, std::vector<int>>& sets, int dim,
                                                  const std::string& algebra) {
  if (sets.count("V0") || sets.count("V1")) {
    if (!sets.count("V0") || !sets.count("V1")) throw UsageError("give both V0 and V1");
    return SubspaceDecomposition(Subset(dim, sets.at("V0")), Subset(dim, sets.at("V1")));
  }
  return default_grading(algebra);
}

void print_table_block(std::ostream& out, const CayleyTable& t) {
  for (int a = 1; a <= t.order(); ++a) {
    for (int b = 1; b <= t.order(); ++b) out << t.at(a, b) << ' ';
    out << '\n';
  }
}

void print_resonances(std::ostream& out, const std::vector<ResonantPair>& rs) {
  for (std::size_t k = 0; k < rs.size(); ++k)
    out << "Resonance #" << k + 1 << "\nS0: " << to_string(rs[k].s0) << "\nS1: " << to_string(rs[k].s1) << '\n';
}

void print_selector(std::ostream& out, const CayleyTable& t) {
  const Selector k(t);
  out << "For the considered semigroup of order m, here we print the m matrices K_{a,b}^{c}=M_{b,c}\n"
      << "(with a=1,...,m) which gives the adjoint representation for the elements of the semigroup.\n";
  for (int a = 1; a <= t.order(); ++a) {
    out << "*********\nAdj [lambda_{" << a << "}] = ( K_{" << a << ",b}^{c} ) =\n";
    for (const auto& row : k.box(a)) {
      for (int v : row) out << ' ' << v;
      out << '\n';
    }
  }
}

void print_metric(std::ostream& out, const std::string& what, const MetricMatrix& m) {
  out << "The " << what << " is:\n\n" << m << "\nwhose determinant is: " << to_string(determinant(m)) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite semigroups and S-expansions of Lie algebras"};
  app.name("sexpand");
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for enumeration and surveys (0: all cores)");

  std::string catalog_path;
  int order = 0;

  auto* check = app.add_subcommand("check", "Associativity and commutativity of a table");
  std::string table_a, table_b;
  check->add_option("table", table_a, "Table file or catalog reference")->required();

  auto* zero = app.add_subcommand("zero", "Zero element of a table, or every one of a commutative catalog");
  zero->add_option("table", table_a, "Table file or catalog reference");
  zero->add_option("--order", order, "Scan the commutative semigroups of this order");
  zero->add_option("--catalog", catalog_path, "Catalog file to scan or resolve ids against");

  auto* selector = app.add_subcommand("selector", "Selector boxes (adjoint representation) of a table");
  bool with_metric = false;
  selector->add_option("table", table_a, "Table file or catalog reference")->required();
  selector->add_flag("--metric", with_metric, "Also print the semigroup metric and its signature");

  auto* iso = app.add_subcommand("iso", "Isomorphisms between two tables, or the catalog class of one");
  bool anti = false, all = false;
  int permutations = 0;
  std::string permute;
  iso->add_option("a", table_a, "Source table");
  iso->add_option("b", table_b, "Target table (omit to look the source up in the catalog)");
  iso->add_flag("--anti", anti, "Also search anti-isomorphisms");
  iso->add_flag("--all", all, "List every witness, not just the first");
  iso->add_option("--catalog", catalog_path, "Catalog for lookups (default: enumerate the table's order)");
  iso->add_option("--permutations", permutations, "List the permutations of n elements with their inverses");
  iso->add_option("--permute", permute, "Apply the permutation (a1 ... an) to the source table");

  auto* resonances = app.add_subcommand("resonances", "Resonant decompositions of a table or of a catalog");
  std::string sizes;
  bool with_zero = false;
  resonances->add_option("table", table_a, "Table file or catalog reference");
  resonances->add_option("--sizes", sizes, "Only |S0|,|S1| = k0,k1");
  resonances->add_option("--order", order, "Scan the commutative semigroups of this order");
  resonances->add_option("--catalog", catalog_path, "Catalog file to scan or resolve ids against");
  resonances->add_flag("--zero", with_zero, "Only semigroups that also have a zero element");
  std::string check_pair;
  resonances->add_option("--check", check_pair, "Test one pair S0=...,S1=... instead of searching");
  resonances->add_option("--permute", permute, "Relabel the table and the pair by (a1 ... an) first");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate the semigroups of one order");
  bool commutative = false, iso_only = false, as_json = false;
  std::string output;
  enumerate_cmd->add_option("--order", order, "Order, 1..6")->required();
  enumerate_cmd->add_flag("--commutative", commutative, "Keep only commutative semigroups");
  enumerate_cmd->add_flag("--iso-only", iso_only, "Classes up to isomorphism only");
  enumerate_cmd->add_option("-o,--output", output, "Output file (default: standard output)");
  enumerate_cmd->add_flag("--json", as_json, "JSON instead of the catalog text format");

  auto* expand_cmd = app.add_subcommand("expand", "S-expansion of a Lie algebra");
  std::string algebra, semigroup, resonance;
  bool reduce = false;
  std::vector<std::string> show;
  expand_cmd->add_option("--algebra", algebra, "Built-in name (sl2, sl2ch, so3, solv2, abelian<n>) or file")
      ->required();
  expand_cmd->add_option("--semigroup", semigroup, "Table file, <order>:<id>, se:<N>, sm:<N> or id with --catalog")
      ->required();
  expand_cmd->add_option("--catalog", catalog_path, "Catalog to resolve a bare id against");
  expand_cmd->add_option("--resonance", resonance, "S0=...,S1=...[,V0=...,V1=...]");
  expand_cmd->add_flag("--reduce", reduce, "0_S-reduce the result");
  expand_cmd->add_option("--show", show, "source, commut, sc, metric, adjoint (comma list or repeated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"source", "commut", "sc", "metric", "adjoint"}));
  expand_cmd->add_flag("--json", as_json, "JSON export of constants and metric");

  auto* survey = app.add_subcommand("survey", "Semisimplicity census over a commutative catalog");
  std::string modes = "full", grading_text, json_path;
  bool resume = false;
  survey->add_option("--algebra", algebra, "Built-in name or file")->required();
  survey->add_option("--order", order, "Order of the semigroups");
  survey->add_option("--catalog", catalog_path, "Catalog file instead of enumerating");
  survey->add_option("--modes", modes, "Comma list of full, res, red, resred");
  survey->add_option("--grading", grading_text, "V0=...,V1=... (default for sl2, sl2ch, so3)");
  survey->add_option("-o,--output", output, "CSV report file (default: CSV on standard output)");
  survey->add_flag("--resume", resume, "Continue an interrupted report file");
  survey->add_option("--json", json_path, "Also write a JSON report to this file");

  auto* profile = app.add_subcommand("profile", "Eigen signatures of the semigroup metrics of a catalog");
  double tau = kDefaultTolerance;
  profile->add_option("--order", order, "Order of the semigroups");
  profile->add_option("--catalog", catalog_path, "Catalog file instead of enumerating");
  profile->add_option("--tau", tau, "Relative zero tolerance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      const CayleyTable t = resolve_table(table_a, "", threads);
      out << (is_associative(t) ? "associative" : "not associative") << '\n';
      out << (is_commutative(t) ? "commutative" : "not commutative") << '\n';
    } else if (zero->parsed()) {
      if (!table_a.empty()) {
        const auto z = find_zero(resolve_table(table_a, catalog_path, threads));
        out << (z ? "zero element: " + std::to_string(*z) : "no zero element") << '\n';
      } else {
        const Catalog c = filter_commutative(catalog_for(order, catalog_path, threads));
        const auto entries = scan_zero(c);
        for (const auto& e : entries) {
          out << "#" << e.id << '\n';
          print_table_block(out, *c.find_id(e.id));
          out << "The zero element is " << e.zero << '\n';
        }
        out << "Number of semigroups with zero element: " << entries.size() << '\n';
      }
    } else if (selector->parsed()) {
      const CayleyTable t = resolve_table(table_a, "", threads);
      if (!is_associative(t)) throw DomainError("the table is not associative");
      print_selector(out, t);
      if (with_metric) {
        const MetricMatrix g = semigroup_metric(t);
        print_metric(out, "semigroup metric", g);
        out << "signature: " << to_string(eigen_signature(g)) << '\n';
      }
    } else if (iso->parsed()) {
      if (permutations > 0) {
        if (permutations > 8) throw UsageError("--permutations is limited to 8 elements");
        const auto perms = all_permutations(permutations);
        for (std::size_t k = 0; k < perms.size(); ++k)
          out << "Permutation #" << k << '\n'
              << to_string(perms[k]) << "\nThe inverse permutation is:\n" << to_string(perms[k].inverse()) << '\n';
        return 0;
      }
      if (table_a.empty()) throw UsageError("iso needs a table");
      const CayleyTable a = resolve_table(table_a, catalog_path, threads);
      if (!permute.empty()) {
        const CayleyTable moved = permute_table(a, parse_permutation(permute));
        print_table_block(out, moved);
        if (!table_b.empty())
          out << (moved == resolve_table(table_b, catalog_path, threads) ? "equal to " : "different from ") << table_b
              << '\n';
      } else if (!table_b.empty()) {
        const CayleyTable b = resolve_table(table_b, catalog_path, threads);
        std::vector<std::pair<bool, Permutation>> found;
        if (all) {
          for (auto& p : find_all_isomorphisms(a, b)) found.emplace_back(false, p);
          if (anti)
            for (auto& p : find_all_anti_isomorphisms(a, b)) found.emplace_back(true, p);
        } else if (auto p = find_isomorphism(a, b)) {
          found.emplace_back(false, *p);
        } else if (auto q = anti ? find_anti_isomorphism(a, b) : std::nullopt) {
          found.emplace_back(true, *q);
        }
        if (found.empty()) out << "none\n";
        for (const auto& [is_anti, p] : found) out << (is_anti ? "anti " : "") << to_string(p) << '\n';
      } else {
        const Catalog c = catalog_for(a.order(), catalog_path, threads);
        const auto hit = lookup(c, a);
        if (!hit) {
          out << "none\n";
        } else {
          const CayleyTable& t = *c.find_id(hit->id);
          out << "The semigroup #" << hit->id << '\n';
          print_table_block(out, t);
          out << "is " << (hit->anti ? "anti-isomorphic" : "isomorphic") << " to the given table.\n";
          std::vector<std::pair<bool, Permutation>> witnesses;
          if (all) {
            for (auto& p : find_all_isomorphisms(t, a)) witnesses.emplace_back(false, p);
            // For commutative tables anti-isomorphisms repeat the isomorphisms.
            if (c.equivalence == Equivalence::iso_and_anti && !is_commutative(t))
              for (auto& p : find_all_anti_isomorphisms(t, a)) witnesses.emplace_back(true, p);
          } else {
            witnesses.emplace_back(hit->anti, hit->witness);
          }
          // P#k is the position in the lexicographic list of all permutations.
          const auto perms = all_permutations(a.order());
          for (const auto& [is_anti, p] : witnesses) {
            const auto k = std::find(perms.begin(), perms.end(), p) - perms.begin();
            out << "A" << (is_anti ? "n anti-" : " ") << "permutation that brings #" << hit->id
                << " to the given table is P#" << k << '\n'
                << to_string(p) << "\nThe inverse permutation is:\n" << to_string(p.inverse()) << '\n';
          }
        }
      }
    } else if (resonances->parsed()) {
      if (!check_pair.empty()) {
        if (table_a.empty()) throw UsageError("--check needs a table");
        CayleyTable t = resolve_table(table_a, catalog_path, threads);
        const auto sets = parse_keyed_sets(check_pair);
        if (!sets.count("S0") || !sets.count("S1")) throw UsageError("--check needs S0 and S1");
        ResonantPair p{Subset(t.order(), sets.at("S0")), Subset(t.order(), sets.at("S1"))};
        if (!permute.empty()) {
          const Permutation sigma = parse_permutation(permute);
          t = permute_table(t, sigma);
          p = {image(sigma, p.s0), image(sigma, p.s1)};
          print_table_block(out, t);
        }
        out << "S0: " << to_string(p.s0) << "\nS1: " << to_string(p.s1) << '\n'
            << (is_resonant(t, p) ? "resonant" : "not resonant") << '\n';
      } else if (!table_a.empty()) {
        const CayleyTable t = resolve_table(table_a, catalog_path, threads);
        std::vector<ResonantPair> rs;
        if (!sizes.empty()) {
          int k0 = 0, k1 = 0;
          char comma = 0;
          std::istringstream is(sizes);
          if (!(is >> k0 >> comma >> k1) || comma != ',') throw UsageError("--sizes expects k0,k1");
          rs = find_resonances(t, k0, k1);
        } else {
          rs = find_all_resonances(t);
        }
        out << "The semigroup has " << rs.size() << " resonances:\n";
        print_resonances(out, rs);
      } else {
        const Catalog c = filter_commutative(catalog_for(order, catalog_path, threads));
        int semigroups = 0, total = 0;
        auto block = [&](int id, const std::vector<ResonantPair>& rs, std::optional<int> z) {
          ++semigroups;
          total += static_cast<int>(rs.size());
          out << "The semigroup #" << id << " has " << rs.size() << " resonances\n";
          print_table_block(out, *c.find_id(id));
          if (z) out << "The zero element is " << *z << '\n';
          print_resonances(out, rs);
        };
        if (with_zero)
          for (const auto& e : scan_zero_and_resonance(c)) block(e.id, e.resonances, e.zero);
        else
          for (const auto& e : scan_resonances(c)) block(e.id, e.resonances, std::nullopt);
        out << "There are " << semigroups << " semigroups with " << (with_zero ? "zero element and " : "")
            << "at least one resonance and there are in total " << total << " different resonances.\n";
      }
    } else if (enumerate_cmd->parsed()) {
      if (order < 1 || order > kMaxCatalogOrder)
        throw UsageError("--order must be in 1.." + std::to_string(kMaxCatalogOrder));
      Catalog c = enumerate(order, iso_only ? Equivalence::iso_only : Equivalence::iso_and_anti, threads);
      if (commutative) c = filter_commutative(c);
      std::ofstream file;
      if (!output.empty()) {
        file.open(output);
        if (!file) throw std::runtime_error("cannot write " + output);
      }
      std::ostream& sink = output.empty() ? out : file;
      if (as_json) sink << to_json(c).dump(1) << '\n';
      else write_catalog(sink, c);
      if (!output.empty()) out << "wrote " << c.tables.size() << " semigroups of order " << order << " to " << output << '\n';
    } else if (expand_cmd->parsed()) {
      const StructureConstants g = resolve_algebra(algebra);
      const CayleyTable t = resolve_table(semigroup, catalog_path, threads);
      ExpandedAlgebra e = expand(g, t);
      if (!resonance.empty()) {
        const auto sets = parse_keyed_sets(resonance);
        if (!sets.count("S0") || !sets.count("S1")) throw UsageError("--resonance needs S0 and S1");
        const auto d = grading_from(sets, g.dim(), algebra);
        if (!d) throw UsageError("--resonance needs V0 and V1 for this algebra");
        e = resonant_subalgebra(e, {Subset(t.order(), sets.at("S0")), Subset(t.order(), sets.at("S1"))}, *d);
      }
      if (reduce) e = zero_reduce(e);
      if (as_json) {
        out << to_json(e).dump(1) << '\n';
      } else {
        if (show.empty()) show = {"commut", "metric"};
        for (const auto& what : show) {
          if (what == "source") {
            out << show_adjoint(g);
            print_metric(out, "Killing-Cartan metric of the original algebra", killing_metric(g));
          } else {
            out << render(e, parse_render_what(what));
            if (what == "metric") out << "signature: " << to_string(eigen_signature(kc_metric(e))) << '\n';
          }
        }
      }
    } else if (survey->parsed()) {
      const StructureConstants g = resolve_algebra(algebra);
      const Catalog c = catalog_for(order, catalog_path, threads);
      CensusOptions opt;
      opt.modes = parse_modes(modes);
      opt.algebra_label = algebra;
      opt.threads = threads;
      opt.csv_path = output;
      opt.resume = resume;
      std::optional<SubspaceDecomposition> d =
          grading_text.empty() ? default_grading(algebra) : grading_from(parse_keyed_sets(grading_text), g.dim(), algebra);
      const SurveyReport report = census(g, d, c, opt);
      if (output.empty()) {
        write_csv_header(out, report);
        for (const auto& row : report.rows) write_csv_row(out, row);
      } else {
        out << summary(report);
      }
      if (!json_path.empty()) {
        std::ofstream js(json_path);
        if (!js) throw std::runtime_error("cannot write " + json_path);
        js << to_json(report).dump(1) << '\n';
      }
    } else if (profile->parsed()) {
      const Catalog c = filter_commutative(catalog_for(order, catalog_path, threads));
      out << "id n_pos n_neg n_zero\n";
      for (const auto& e : compactness_profile(c, tau))
        out << e.id << ' ' << e.signature.n_pos << ' ' << e.signature.n_neg << ' ' << e.signature.n_zero << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sexpand::cli
