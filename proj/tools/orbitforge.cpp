// Command-line front end: orbits, count, pair, rep, verify.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "orbitforge/counting.hpp"
#include "orbitforge/errors.hpp"
#include "orbitforge/json_io.hpp"
#include "orbitforge/oracle.hpp"
#include "orbitforge/rational.hpp"

using namespace orbitforge;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

constexpr int kMaxOrbitsDim = 200;
constexpr std::uint64_t kMaxListedOrbits = 200000;
constexpr int kMaxCountRank = 60;
constexpr int kCrossCheckRank = 10;

// Aligned text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(rows_[0].size(), 0);
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

WittType type_arg(const std::string& s) {
  const auto t = parse_witt_type(s);
  if (!t) throw InvalidInput("unknown form type '" + s + "' (use odd, + or -)");
  return *t;
}

FieldCtx field_arg(unsigned q) {
  if (q < 2 || (q & (q - 1)) || q > 256) throw InvalidInput("--q must be 2^k with 1 <= k <= 8");
  int k = 0;
  while ((1u << k) < q) ++k;
  return FieldCtx(k);
}

std::vector<bool> bits_arg(const std::string& s) {
  std::vector<bool> out;
  for (char c : s) {
    if (c != '0' && c != '1') throw InvalidInput("--bits takes a string of 0 and 1");
    out.push_back(c == '1');
  }
  return out;
}

SoTag so_arg(const std::string& s) {
  if (s.empty()) return SoTag::None;
  if (s == "I") return SoTag::I;
  if (s == "II") return SoTag::II;
  throw InvalidInput("--so-tag takes I or II");
}

RationalOrbitLabel label_arg(const std::string& symbol, const std::optional<std::string>& bits,
                             const std::string& tag) {
  const Symbol s = parse_symbol(symbol);
  if (auto v = validate_symbol(s)) throw InvalidInput("invalid symbol: " + v->message);
  const std::vector<bool> b =
      bits ? bits_arg(*bits) : std::vector<bool>(break_positions(s).size(), false);
  return make_label(s, b, so_arg(tag));
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

json envelope(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

// orbits ---------------------------------------------------------------------

struct OrbitsArgs {
  int dim = 0;
  std::string type;
  bool so = false;
  unsigned q = 2;
  std::string format = "table";
};

int run_orbits(const OrbitsArgs& a) {
  if (a.dim < 1 || a.dim > kMaxOrbitsDim)
    throw InvalidInput("--dim must lie in 1.." + std::to_string(kMaxOrbitsDim));
  field_arg(a.q);
  const WittType type = type_arg(a.type);
  const Flavor flavor = a.so ? Flavor::SO : Flavor::O;
  if ((a.dim % 2 == 1) != (type == WittType::OddDefective))
    throw InvalidInput("odd dimension goes with --type odd and conversely");
  const Series series = type == WittType::OddDefective ? Series::B
                        : type == WittType::Minus      ? Series::Dminus
                        : a.so                         ? Series::SOplus
                                                       : Series::Dplus;
  const std::uint64_t predicted = orbit_count(series, a.dim / 2);
  if (predicted > kMaxListedOrbits)
    throw ResourceGuard(std::to_string(predicted) + " orbits is more than the listing limit " +
                        std::to_string(kMaxListedOrbits));

  const auto labels = enumerate_rational_orbits(a.dim, type, flavor);
  std::map<std::string, int> split;
  for (const auto& lab : labels) ++split[to_string(lab.symbol)];

  if (a.format == "json") {
    json doc = envelope("orbits");
    doc["dim"] = a.dim;
    doc["type"] = std::string(witt_type_name(type));
    doc["group"] = a.so ? "SO" : "O";
    doc["q"] = a.q;
    json rows = json::array();
    for (const auto& lab : labels) {
      json j = to_json(lab);
      j["split"] = split[to_string(lab.symbol)];
      rows.push_back(j);
    }
    doc["count"] = labels.size();
    doc["orbits"] = rows;
    emit(doc);
    return 0;
  }
  Table t({"symbol", "bits", "type", "so", "pair", "rank", "split"});
  for (const auto& lab : labels) {
    const json j = to_json(lab);
    t.add({to_string(lab.symbol), bits_string(lab), std::string(witt_type_name(lab.form_type)),
           lab.so == SoTag::None ? "" : lab.so == SoTag::I ? "I" : "II",
           to_string(label_to_pair(lab)),
           std::to_string(j["component_group_rank"].get<int>()) + (j["so_splits"].get<bool>() ? "*" : ""),
           std::to_string(split[to_string(lab.symbol)])});
  }
  t.print(std::cout);
  std::cout << labels.size() << " orbits\n";
  return 0;
}

// count ----------------------------------------------------------------------

struct CountArgs {
  std::string series;
  int max_rank = 0;
  std::string format = "table";
};

int run_count(const CountArgs& a) {
  static const std::map<std::string, Series> names = {
      {"B", Series::B}, {"D+", Series::Dplus}, {"D-", Series::Dminus}, {"SOD+", Series::SOplus}};
  const auto it = names.find(a.series);
  if (it == names.end()) throw InvalidInput("--series takes B, D+, D- or SOD+");
  if (a.max_rank < 1 || a.max_rank > kMaxCountRank)
    throw InvalidInput("--max-rank must lie in 1.." + std::to_string(kMaxCountRank));
  const Series s = it->second;

  struct Row {
    int rank;
    std::uint64_t value;
    std::optional<std::uint64_t> enumerated;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= a.max_rank; ++n) {
    Row r{n, orbit_count(s, n), std::nullopt};
    if (n <= kCrossCheckRank) {
      const bool odd = s == Series::B;
      const WittType type = odd ? WittType::OddDefective
                            : s == Series::Dminus ? WittType::Minus
                                                  : WittType::Plus;
      r.enumerated = enumerate_rational_orbits(odd ? 2 * n + 1 : 2 * n, type,
                                               s == Series::SOplus ? Flavor::SO : Flavor::O)
                         .size();
    }
    rows.push_back(r);
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && (!r.enumerated || *r.enumerated == r.value);

  if (a.format == "json") {
    json doc = envelope("count");
    doc["series"] = a.series;
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"rank", r.rank},
                     {"value", r.value},
                     {"enumerated", r.enumerated ? json(*r.enumerated) : json(nullptr)}});
    doc["rows"] = out;
    doc["consistent"] = ok;
    emit(doc);
  } else if (a.format == "csv") {
    std::cout << "rank,value,enumerated\n";
    for (const auto& r : rows)
      std::cout << r.rank << ',' << r.value << ',' << (r.enumerated ? std::to_string(*r.enumerated) : "")
                << '\n';
  } else {
    Table t({"rank", "value", "enumerated"});
    for (const auto& r : rows)
      t.add({std::to_string(r.rank), std::to_string(r.value),
             r.enumerated ? std::to_string(*r.enumerated) : "-"});
    t.print(std::cout);
  }
  return ok ? 0 : kExitMismatch;
}

// pair / rep -------------------------------------------------------------------

struct LabelArgs {
  std::string symbol;
  std::optional<std::string> bits;
  std::string so_tag;
  unsigned q = 2;
  std::string format = "table";
};

int run_pair(const LabelArgs& a) {
  const RationalOrbitLabel lab = label_arg(a.symbol, a.bits, a.so_tag);
  const PartitionPair p = label_to_pair(lab);
  if (a.format == "json") {
    json doc = envelope("pair");
    doc["label"] = to_json(lab);
    doc["pair"] = to_json(p);
    emit(doc);
    return 0;
  }
  std::cout << "label  " << to_string(lab) << '\n'
            << "alpha=[" << join(p.alpha) << "] beta=[" << join(p.beta) << "]\n";
  return 0;
}

void print_matrix(std::ostream& os, const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "  ") << int(m(r, c).bits);
    os << '\n';
  }
}

int run_rep(const LabelArgs& a) {
  const FieldCtx field = field_arg(a.q);
  const RationalOrbitLabel lab = label_arg(a.symbol, a.bits, a.so_tag);
  const Representative rep = representative(lab, field);
  const QuadraticSpace std_space = standard_space(field, rep.space.dim(), lab.form_type);
  const Matrix t_std = representative_in_standard(lab, field);
  if (a.format == "json") {
    json doc = envelope("rep");
    doc["label"] = to_json(lab);
    doc["normal_form"] = {{"space", to_json(rep.space)}, {"t", to_json(rep.t)}};
    doc["standard"] = {{"space", to_json(std_space)}, {"t", to_json(t_std)}};
    emit(doc);
    return 0;
  }
  std::cout << "label  " << to_string(lab) << "\n"
            << "dim " << rep.space.dim() << ", q " << field.order()
            << ", delta " << int(field.pick_delta().bits) << "\n"
            << "normal form Q(e_i): " ;
  for (const auto& e : rep.space.q_diag()) std::cout << int(e.bits) << ' ';
  std::cout << "\nnormal form Gram matrix:\n";
  print_matrix(std::cout, rep.space.gram());
  std::cout << "normal form T:\n";
  print_matrix(std::cout, rep.t);
  std::cout << "T in the standard " << witt_type_name(lab.form_type) << " form:\n";
  print_matrix(std::cout, t_std);
  return 0;
}

// verify -----------------------------------------------------------------------

struct VerifyArgs {
  int dim = 0;
  std::string type;
  bool so = false;
  unsigned q = 2;
  bool large = false;
  bool timing = false;
  int threads = 0;
  std::string format = "table";
};

int run_verify(const VerifyArgs& a) {
  const WittType type = type_arg(a.type);
  if (a.q != 2 && a.q != 4) throw InvalidInput("verify supports --q 2 or 4");
  if ((a.dim % 2 == 1) != (type == WittType::OddDefective))
    throw InvalidInput("odd dimension goes with --type odd and conversely");
  if (a.dim < 1) throw InvalidInput("--dim must be positive");
  if (a.dim > PackedMatrix::kMaxDim)
    throw ResourceGuard("verify enumerates o(V) and supports N <= 8");
  if (!a.large && (a.dim == 8 || (a.q == 4 && a.dim >= 5)))
    throw ResourceGuard("this space needs --large (N = 8, or q = 4 with N >= 5)");
  const FieldCtx field = field_arg(a.q);
  OracleOptions opts;
  opts.threads = a.threads;
  const ReconcileResult res = reconcile(standard_space(field, a.dim, type),
                                        a.so ? Flavor::SO : Flavor::O, opts);
  if (a.format == "json") {
    json doc = envelope("verify");
    doc.update(to_json(res, a.timing));
    emit(doc);
  } else {
    const OrbitReport& r = res.report;
    std::cout << (r.special ? "SO" : "O") << "_" << r.dim << "^" << witt_type_name(r.type) << "(F_"
              << r.q << "): |G| = " << r.group_order << ", " << r.nilpotent_count
              << " nilpotent elements of " << r.scanned << " scanned\n";
    Table t({"#", "size", "|Z|", "jordan", "symbol", "label"});
    for (std::size_t i = 0; i < r.orbits.size(); ++i) {
      const auto& o = r.orbits[i];
      t.add({std::to_string(i + 1), std::to_string(o.size), std::to_string(o.centralizer_order),
             join(o.jordan), to_string(o.symbol), o.label ? to_string(*o.label) : "(none)"});
    }
    t.print(std::cout);
    std::cout << r.orbits.size() << " orbits\n";
    if (a.timing)
      std::cout << "enumerate " << r.enumerate_seconds << " s, orbits " << r.bfs_seconds << " s\n";
    std::cout << (res.pass ? "PASS" : "FAIL") << '\n';
    if (!res.pass) std::cout << to_json(res, false)["issues"].dump(2) << '\n';
  }
  return res.pass ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent orbits of orthogonal Lie algebras over GF(2^k)"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "table"};

  OrbitsArgs oa;
  auto* orbits = app.add_subcommand("orbits", "List rational orbit labels");
  orbits->add_option("--dim", oa.dim, "Dimension N")->required();
  orbits->add_option("--type", oa.type, "Form type: odd, + or -")->required();
  orbits->add_flag("--so", oa.so, "Count SO-orbits instead of O-orbits");
  orbits->add_option("--q", oa.q, "Field order 2^k (labels do not depend on it)");
  orbits->add_option("--format", oa.format)->check(CLI::IsMember(formats));

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Orbit count formulas by rank");
  count->add_option("--series", ca.series, "B, D+, D- or SOD+")->required();
  count->add_option("--max-rank", ca.max_rank, "Largest rank n")->required();
  count->add_option("--format", ca.format)->check(CLI::IsMember({"json", "table", "csv"}));

  LabelArgs pa;
  auto* pair = app.add_subcommand("pair", "Partition pair of a rational label");
  pair->add_option("--symbol", pa.symbol, "Symbol text, e.g. (3)_2^2(1)_1")->required();
  pair->add_option("--bits", pa.bits, "Delta bits at the break positions, e.g. 01");
  pair->add_option("--so-tag", pa.so_tag, "I or II for SO-split orbits");
  pair->add_option("--format", pa.format)->check(CLI::IsMember(formats));

  LabelArgs ra;
  auto* rep = app.add_subcommand("rep", "Explicit nilpotent representative of a label");
  rep->add_option("--symbol", ra.symbol, "Symbol text")->required();
  rep->add_option("--bits", ra.bits, "Delta bits at the break positions");
  rep->add_option("--so-tag", ra.so_tag, "I or II for SO-split orbits");
  rep->add_option("--q", ra.q, "Field order 2^k");
  rep->add_option("--format", ra.format)->check(CLI::IsMember(formats));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Brute-force orbits and compare with the classification");
  verify->add_option("--dim", va.dim, "Dimension N <= 8")->required();
  verify->add_option("--type", va.type, "Form type: odd, + or -")->required();
  verify->add_flag("--so", va.so, "Use SO(V)");
  verify->add_option("--q", va.q, "2 or 4");
  verify->add_flag("--large", va.large, "Allow N = 8 and q = 4 with N >= 5");
  verify->add_flag("--timing", va.timing, "Report wall-clock times");
  verify->add_option("--threads", va.threads, "Worker cap (ORBITFORGE_THREADS also applies)");
  verify->add_option("--format", va.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*orbits) return run_orbits(oa);
    if (*count) return run_count(ca);
    if (*pair) return run_pair(pa);
    if (*rep) return run_rep(ra);
    if (*verify) return run_verify(va);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceGuard& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ConsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
