#include "sexpand/survey.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace sexpand {

namespace {

template <class Visit>
void for_each_commutative(const Catalog& c, Visit&& visit) {
  for (std::size_t i = 0; i < c.tables.size(); ++i) {
    const auto& t = c.tables[i];
    if (!is_commutative(t)) throw DomainError("scans require a commutative catalog");
    visit(t.id().value_or(static_cast<int>(i) + 1), t);
  }
}

}  // namespace

std::vector<ZeroEntry> scan_zero(const Catalog& c) {
  std::vector<ZeroEntry> out;
  for_each_commutative(c, [&](int id, const CayleyTable& t) {
    if (auto z = find_zero(t)) out.push_back({id, *z});
  });
  return out;
}

std::vector<ResonanceEntry> scan_resonances(const Catalog& c) {
  std::vector<ResonanceEntry> out;
  for_each_commutative(c, [&](int id, const CayleyTable& t) {
    auto r = find_all_resonances(t);
    if (!r.empty()) out.push_back({id, std::move(r)});
  });
  return out;
}

std::vector<ZeroResonanceEntry> scan_zero_and_resonance(const Catalog& c) {
  std::vector<ZeroResonanceEntry> out;
  for_each_commutative(c, [&](int id, const CayleyTable& t) {
    auto z = find_zero(t);
    if (!z) return;
    auto r = find_all_resonances(t);
    if (!r.empty()) out.push_back({id, *z, std::move(r)});
  });
  return out;
}

std::vector<ProfileEntry> compactness_profile(const Catalog& c, double tau) {
  std::vector<ProfileEntry> out;
  for_each_commutative(c, [&](int id, const CayleyTable& t) {
    out.push_back({id, eigen_signature(semigroup_metric(t), tau)});
  });
  return out;
}

ModeTotals SurveyReport::totals(ExpansionMode m) const {
  ModeTotals out;
  int current = -1;
  bool any = false;
  for (const auto& row : rows) {
    if (row.mode != m) continue;
    ++out.rows;
    if (row.error) ++out.failed;
    if (row.semisimple) ++out.semisimple_rows;
    if (row.id != current) {
      if (any) ++out.pss_any;
      current = row.id;
      any = false;
      ++out.semigroups;
      if (row.semisimple) ++out.pss;
    }
    any = any || row.semisimple;
  }
  if (any) ++out.pss_any;
  return out;
}

std::vector<ExpansionMode> parse_modes(const std::string& text) {
  std::set<ExpansionMode> modes;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) modes.insert(parse_mode(item));
  if (modes.empty()) throw std::invalid_argument("no modes given");
  return {modes.begin(), modes.end()};
}

namespace {

constexpr const char* kHeader =
    "id,mode,resonance_index,dim,det_num,det_den,n_pos,n_neg,n_zero,semisimple,compact,abelian,solvable,nilpotent";

std::string preamble(const SurveyReport& r) {
  std::string modes;
  for (auto m : r.modes) modes += (modes.empty() ? "" : ",") + to_string(m);
  return "# sexpand survey algebra=" + r.algebra + " order=" + std::to_string(r.order) + " modes=" + modes;
}

const char* flag(bool b) { return b ? "true" : "false"; }

bool parse_flag(const std::string& s, int line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError(line, "expected true or false, got '" + s + "'");
}

std::vector<std::string> split(const std::string& line, char sep, std::size_t max_fields) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (out.size() + 1 < max_fields) {
    const auto pos = line.find(sep, start);
    if (pos == std::string::npos) break;
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  out.push_back(line.substr(start));
  return out;
}

void analyse(const ExpandedAlgebra& a, double tau, SurveyRow& row) {
  const StructureConstants& k = a.constants();
  const MetricMatrix m = killing_metric(k);
  row.dim = a.dim();
  row.det = determinant(m);
  row.signature = eigen_signature(m, tau);
  row.semisimple = row.det != 0;
  row.compact = row.semisimple && row.signature.n_neg == row.dim;
  row.abelian = is_abelian(k);
  row.solvable = is_solvable(k);
  row.nilpotent = is_nilpotent(k);
}

}  // namespace

void write_csv_header(std::ostream& os, const SurveyReport& r) { os << preamble(r) << '\n' << kHeader << '\n'; }

void write_csv_row(std::ostream& os, const SurveyRow& row) {
  if (row.error) {
    std::string msg = *row.error;
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    os << "# error," << row.id << ',' << to_string(row.mode) << ',' << row.resonance_index << ',' << msg << '\n';
    return;
  }
  os << row.id << ',' << to_string(row.mode) << ',' << row.resonance_index << ',' << row.dim << ','
     << row.det.get_num().get_str() << ',' << row.det.get_den().get_str() << ',' << row.signature.n_pos << ','
     << row.signature.n_neg << ',' << row.signature.n_zero << ',' << flag(row.semisimple) << ',' << flag(row.compact)
     << ',' << flag(row.abelian) << ',' << flag(row.solvable) << ',' << flag(row.nilpotent) << '\n';
}

std::vector<SurveyRow> read_csv_rows(std::istream& in) {
  std::vector<SurveyRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == kHeader) continue;
    try {
      if (line.rfind("# error,", 0) == 0) {
        const auto f = split(line.substr(8), ',', 4);
        if (f.size() != 4) throw ParseError(lineno, "malformed error line");
        SurveyRow r;
        r.id = std::stoi(f[0]);
        r.mode = parse_mode(f[1]);
        r.resonance_index = std::stoi(f[2]);
        r.error = f[3];
        rows.push_back(std::move(r));
        continue;
      }
      if (line[0] == '#') continue;
      const auto f = split(line, ',', 15);
      if (f.size() != 14) throw ParseError(lineno, "expected 14 fields");
      SurveyRow r;
      r.id = std::stoi(f[0]);
      r.mode = parse_mode(f[1]);
      r.resonance_index = std::stoi(f[2]);
      r.dim = std::stoi(f[3]);
      r.det = Rational(BigInt(f[4], 10), BigInt(f[5], 10));
      r.det.canonicalize();
      r.signature = {std::stoi(f[6]), std::stoi(f[7]), std::stoi(f[8])};
      r.semisimple = parse_flag(f[9], lineno);
      r.compact = parse_flag(f[10], lineno);
      r.abelian = parse_flag(f[11], lineno);
      r.solvable = parse_flag(f[12], lineno);
      r.nilpotent = parse_flag(f[13], lineno);
      rows.push_back(std::move(r));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return rows;
}

SurveyReport census(const StructureConstants& g, const std::optional<SubspaceDecomposition>& grading,
                    const Catalog& c, const CensusOptions& options) {
  SurveyReport report;
  report.order = c.order;
  report.algebra = options.algebra_label;
  {
    std::set<ExpansionMode> unique(options.modes.begin(), options.modes.end());
    report.modes.assign(unique.begin(), unique.end());
  }
  if (report.modes.empty()) throw std::invalid_argument("census needs at least one mode");
  auto wants = [&](ExpansionMode m) {
    return std::find(report.modes.begin(), report.modes.end(), m) != report.modes.end();
  };
  const bool resonant_modes = wants(ExpansionMode::resonant) || wants(ExpansionMode::resonant_reduced);
  if (resonant_modes) {
    if (!grading) throw std::invalid_argument("resonant modes need a subspace decomposition of the algebra");
    if (grading->v0.ambient() != g.dim() || !check_subspace_structure(g, *grading))
      throw DomainError("the grading is not a subspace structure of the algebra");
  }

  struct Work {
    int id;
    const CayleyTable* table;
  };
  std::vector<Work> work;
  for (std::size_t i = 0; i < c.tables.size(); ++i) {
    const auto& t = c.tables[i];
    if (!is_commutative(t)) continue;
    const int id = t.id().value_or(static_cast<int>(i) + 1);
    work.push_back({id, &t});
    ++report.semigroups;
    const bool has_zero = find_zero(t).has_value();
    report.with_zero += has_zero;
    const auto r = find_all_resonances(t);
    report.with_resonance += !r.empty();
    report.resonances += static_cast<int>(r.size());
  }

  // Resume: keep every complete semigroup block of the existing file. The
  // last id present may be cut short, so it is recomputed.
  int resume_from = 0;
  std::ofstream csv;
  if (!options.csv_path.empty()) {
    std::vector<SurveyRow> kept;
    if (options.resume && std::filesystem::exists(options.csv_path)) {
      std::ifstream in(options.csv_path);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      if (!text.empty() && text.back() != '\n') text.erase(text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1);
      std::istringstream lines(text);
      std::string first;
      std::getline(lines, first);
      if (first != preamble(report))
        throw std::runtime_error(options.csv_path + " was written by a census with different settings");
      kept = read_csv_rows(lines);
      if (!kept.empty()) {
        resume_from = kept.back().id;
        std::erase_if(kept, [&](const SurveyRow& r) { return r.id >= resume_from; });
      }
    }
    csv.open(options.csv_path, std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot write " + options.csv_path);
    write_csv_header(csv, report);
    for (const auto& r : kept) write_csv_row(csv, r);
    csv.flush();
    report.rows = std::move(kept);
  }
  std::erase_if(work, [&](const Work& w) { return w.id < resume_from; });

  auto rows_for = [&](const Work& w) {
    std::vector<SurveyRow> out;
    const CayleyTable& t = *w.table;
    const auto zero = find_zero(t);
    const std::vector<ResonantPair> resonances = resonant_modes ? find_all_resonances(t) : std::vector<ResonantPair>{};
    std::optional<ExpandedAlgebra> full;
    std::string expand_error;
    try {
      full = expand(g, t);
    } catch (const std::exception& e) {
      expand_error = e.what();
    }
    auto add = [&](ExpansionMode mode, int index, auto&& build) {
      SurveyRow row;
      row.id = w.id;
      row.mode = mode;
      row.resonance_index = index;
      try {
        if (!full) throw DomainError(expand_error);
        analyse(build(), options.tau, row);
      } catch (const std::exception& e) {
        row = SurveyRow{};
        row.id = w.id;
        row.mode = mode;
        row.resonance_index = index;
        row.error = e.what();
      }
      out.push_back(std::move(row));
    };
    if (wants(ExpansionMode::full)) add(ExpansionMode::full, 0, [&] { return *full; });
    if (wants(ExpansionMode::resonant))
      for (std::size_t k = 0; k < resonances.size(); ++k)
        add(ExpansionMode::resonant, static_cast<int>(k) + 1,
            [&] { return resonant_subalgebra(*full, resonances[k], *grading); });
    if (wants(ExpansionMode::reduced) && zero) add(ExpansionMode::reduced, 0, [&] { return zero_reduce(*full); });
    if (wants(ExpansionMode::resonant_reduced) && zero)
      for (std::size_t k = 0; k < resonances.size(); ++k)
        add(ExpansionMode::resonant_reduced, static_cast<int>(k) + 1,
            [&] { return zero_reduce(resonant_subalgebra(*full, resonances[k], *grading)); });
    return out;
  };

  auto commit = [&](std::vector<SurveyRow>&& rows) {
    if (csv.is_open()) {
      std::ostringstream block;
      for (const auto& r : rows) write_csv_row(block, r);
      csv << block.str();
      csv.flush();
    }
    for (auto& r : rows) report.rows.push_back(std::move(r));
  };

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  if (threads <= 1 || work.size() <= 1) {
    for (const auto& w : work) commit(rows_for(w));
  } else {
    // Workers fill slots in any order; this thread commits them in id order.
    std::vector<std::optional<std::vector<SurveyRow>>> slots(work.size());
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    {
      std::vector<std::jthread> pool;
      for (unsigned k = 0; k < threads; ++k)
        pool.emplace_back([&] {
          for (std::size_t i = cursor++; i < work.size(); i = cursor++) {
            std::vector<SurveyRow> rows;
            try {
              rows = rows_for(work[i]);
            } catch (...) {
              std::lock_guard lock(mu);
              if (!failure) failure = std::current_exception();
            }
            std::lock_guard lock(mu);
            slots[i] = std::move(rows);
            ready.notify_all();
          }
        });
      for (std::size_t i = 0; i < work.size(); ++i) {
        std::vector<SurveyRow> rows;
        {
          std::unique_lock lock(mu);
          ready.wait(lock, [&] { return slots[i].has_value(); });
          rows = std::move(*slots[i]);
          slots[i].reset();
        }
        commit(std::move(rows));
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  if (csv.is_open() && !csv) throw std::runtime_error("error writing " + options.csv_path);
  return report;
}

nlohmann::json to_json(const SurveyReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j = {{"id", row.id}, {"mode", to_string(row.mode)}, {"resonance_index", row.resonance_index}};
    if (row.error) {
      j["error"] = *row.error;
    } else {
      j.update({{"dim", row.dim},
                {"det", to_string(row.det)},
                {"n_pos", row.signature.n_pos},
                {"n_neg", row.signature.n_neg},
                {"n_zero", row.signature.n_zero},
                {"semisimple", row.semisimple},
                {"compact", row.compact},
                {"abelian", row.abelian},
                {"solvable", row.solvable},
                {"nilpotent", row.nilpotent}});
    }
    rows.push_back(std::move(j));
  }
  nlohmann::json totals = nlohmann::json::object();
  for (auto m : r.modes) {
    const ModeTotals t = r.totals(m);
    totals[to_string(m)] = {{"semigroups", t.semigroups}, {"rows", t.rows},       {"failed", t.failed},
                            {"semisimple_rows", t.semisimple_rows}, {"pss", t.pss}, {"pss_any", t.pss_any}};
  }
  return {{"order", r.order},
          {"algebra", r.algebra},
          {"semigroups", r.semigroups},
          {"with_zero", r.with_zero},
          {"with_resonance", r.with_resonance},
          {"resonances", r.resonances},
          {"totals", totals},
          {"rows", rows}};
}

std::string summary(const SurveyReport& r) {
  std::ostringstream os;
  os << "order " << r.order << ", algebra " << r.algebra << ": " << r.semigroups << " commutative semigroups, "
     << r.with_zero << " with zero, " << r.with_resonance << " with resonance, " << r.resonances << " resonances\n";
  os << std::left << std::setw(8) << "mode" << std::right << std::setw(12) << "semigroups" << std::setw(8) << "rows"
     << std::setw(12) << "semisimple" << std::setw(6) << "pss" << std::setw(9) << "pss_any" << std::setw(8)
     << "failed" << '\n';
  for (auto m : r.modes) {
    const ModeTotals t = r.totals(m);
    os << std::left << std::setw(8) << to_string(m) << std::right << std::setw(12) << t.semigroups << std::setw(8)
       << t.rows << std::setw(12) << t.semisimple_rows << std::setw(6) << t.pss << std::setw(9) << t.pss_any
       << std::setw(8) << t.failed << '\n';
  }
  return os.str();
}

}  // namespace sexpand
