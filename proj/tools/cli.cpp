#include "cli.hpp"

#include "serialize.hpp"

#include "repring/chartab/chartable.hpp"
#include "repring/groups/catalog.hpp"
#include "repring/groups/conjugacy.hpp"
#include "repring/groups/extension.hpp"
#include "repring/lambdaring/adams.hpp"
#include "repring/lambdaring/ringinv.hpp"
#include "repring/lambdaring/ringiso.hpp"
#include "repring/twist/presets.hpp"
#include "repring/twist/twistbuild.hpp"
#include "repring/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace repring::cli {

namespace {

// ---------------------------------------------------------------------------
// Plumbing

/// FNV-1a 64-bit accumulator over the command tokens and every input file
/// that the command reads, so reports carry a fingerprint of their inputs.
struct Digest {
  std::uint64_t state = 0xcbf29ce484222325ULL;

  void feed(const std::string& bytes) {
    for (const unsigned char c : bytes) {
      state ^= c;
      state *= 0x100000001b3ULL;
    }
    state ^= 0;  // separator byte
    state *= 0x100000001b3ULL;
  }

  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(state));
    return buf;
  }
};

struct Options {
  std::string json_path;
  long long kmax = -1;  // -1: derive (group exponent - 1) where used
  long long seed = 0;
  std::size_t limit_order = 10000;
};

/// One executed subcommand: machine-readable payload, human-readable text,
/// and the exit code (0 ok, 1 verification mismatch).
struct Outcome {
  int exit_code = 0;
  nlohmann::json results;
  std::string pretty;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GroupPtr resolve_group(const std::string& arg, const Options& opts,
                       Digest& digest) {
  if (std::filesystem::exists(arg)) {
    const std::string text = read_file(arg);
    digest.feed(text);
    return group_from_json(nlohmann::json::parse(text), opts.limit_order);
  }
  return catalog_group(arg, opts.limit_order);
}

TwistData twist_from_spec(const std::string& path, const Options& opts,
                          Digest& digest) {
  const std::string text = read_file(path);
  digest.feed(text);
  const nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("group") || !j.contains("subgroup") ||
      !j.contains("alpha")) {
    throw std::invalid_argument(
        "twist spec: expected \"group\", \"subgroup\", and \"alpha\"");
  }
  const GroupPtr g =
      resolve_group(j.at("group").get<std::string>(), opts, digest);
  auto subgroup = j.at("subgroup").get<std::vector<std::size_t>>();
  ExtensionData ext = make_extension(g, std::move(subgroup));

  const auto alpha_rows =
      j.at("alpha").get<std::vector<std::vector<std::string>>>();
  const std::size_t n = alpha_rows.size();
  Mat<QmodZ> alpha(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha_rows[i].size() != n) {
      throw std::invalid_argument("twist spec: \"alpha\" is not square");
    }
    for (std::size_t k = 0; k < n; ++k) {
      alpha(i, k) = parse_qmodz(alpha_rows[i][k]);
    }
  }

  if (!j.contains("z")) return make_twist(std::move(ext), std::move(alpha));

  const std::size_t quotient_order = ext.quotient->order;
  std::vector<std::vector<QmodZ>> z(quotient_order,
                                    std::vector<QmodZ>(n));
  for (const auto& [key, value] : j.at("z").items()) {
    std::size_t q = 0;
    try {
      q = std::stoul(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("twist spec: bad z index: " + key);
    }
    if (q >= quotient_order) {
      throw std::invalid_argument("twist spec: z index out of range: " + key);
    }
    const auto row = value.get<std::vector<std::string>>();
    if (row.size() != n) {
      throw std::invalid_argument("twist spec: z row has wrong length");
    }
    for (std::size_t k = 0; k < n; ++k) z[q][k] = parse_qmodz(row[k]);
  }
  return make_twist_with_z(std::move(ext), std::move(alpha), std::move(z));
}

// ---------------------------------------------------------------------------
// Pretty rendering

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string render_int_matrix(const Mat<Int>& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      width = std::max(width, m(i, j).str().size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << " " << pad_left(m(i, j).str(), width);
    }
    out << "\n";
  }
  return out.str();
}

std::string render_qmodz_matrix(const Mat<QmodZ>& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      width = std::max(width, format_qmodz(m(i, j)).size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << " " << pad_left(format_qmodz(m(i, j)), width);
    }
    out << "\n";
  }
  return out.str();
}

std::string render_int_row(const std::vector<Int>& v) {
  std::ostringstream out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    out << (j ? " " : "") << v[j].str();
  }
  return out.str();
}

std::string render_table(const CharacterTable& t) {
  const ConjugacyData& c = *t.classes;
  std::ostringstream out;
  out << "group " << c.group->name << " (order " << c.group->order << "), "
      << c.classes.size() << " conjugacy classes\n\n";

  out << "class  rep        size  element-order\n";
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const std::size_t rep = c.representatives[i];
    std::ostringstream line;
    line << pad_left(std::to_string(i), 5) << "  ";
    std::string label = c.group->labels[rep];
    label.resize(std::max<std::size_t>(label.size(), 9), ' ');
    line << label << "  " << pad_left(std::to_string(c.classes[i].size()), 4)
         << "  " << pad_left(std::to_string(c.element_orders[rep]), 13);
    out << line.str() << "\n";
  }

  std::vector<std::vector<std::string>> cells(t.size());
  std::size_t width = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (const auto& v : t.irreducibles[i].values) {
      cells[i].push_back(to_display_string(v));
      width = std::max(width, cells[i].back().size());
    }
  }
  out << "\nirreducibles (rows sorted by degree; columns follow the "
         "classes)\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "chi_" << i << "  degree " << t.degrees[i] << " |";
    for (const auto& cell : cells[i]) out << " " << pad_left(cell, width);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Subcommand bodies

Outcome run_chartable(const std::string& group_arg, const Options& opts,
                      Digest& digest) {
  const GroupPtr g = resolve_group(group_arg, opts, digest);
  const CharacterTable t = character_table(g);
  Outcome out;
  out.results = json_table(t);
  out.pretty = render_table(t);
  return out;
}

Outcome run_adams(const std::string& group_arg, long long k,
                  const Options& opts, Digest& digest) {
  const GroupPtr g = resolve_group(group_arg, opts, digest);
  const CharacterTable t = character_table(g);
  const Mat<Int> m = adams_matrix(t, k);
  Outcome out;
  out.results = {{"group", g->name}, {"k", k}, {"matrix", json_int_matrix(m)}};
  std::ostringstream pretty;
  pretty << "power operation k=" << k << " on the representation ring of "
         << g->name << "\nrow i = decomposition of the operation applied to "
            "irreducible i\n"
         << render_int_matrix(m);
  out.pretty = pretty.str();
  return out;
}

Outcome run_lambda(const std::string& group_arg, std::size_t irr, long n,
                   const Options& opts, Digest& digest) {
  const GroupPtr g = resolve_group(group_arg, opts, digest);
  const RepRing ring{character_table(g)};
  if (irr >= ring.rank()) {
    throw std::invalid_argument("irreducible index out of range");
  }
  std::vector<Int> x(ring.rank(), Int(0));
  x[irr] = 1;
  const std::vector<Int> coeffs = ring.lambda(n, x);
  Outcome out;
  out.results = {{"coefficients", json_int_vector(coeffs)},
                 {"group", g->name},
                 {"irr", irr},
                 {"n", n}};
  std::ostringstream pretty;
  pretty << "exterior power lambda^" << n << " of irreducible " << irr
         << " of " << g->name << "\ncoefficients: " << render_int_row(coeffs)
         << "\n";
  out.pretty = pretty.str();
  return out;
}

Outcome run_fs(const std::string& group_arg, long long k, const Options& opts,
               Digest& digest) {
  const GroupPtr g = resolve_group(group_arg, opts, digest);
  const CharacterTable t = character_table(g);
  std::vector<Int> indicators;
  for (std::size_t j = 0; j < t.size(); ++j) {
    indicators.push_back(fs_indicator(t, k, j));
  }
  Outcome out;
  out.results = {{"group", g->name},
                 {"indicators", json_int_vector(indicators)},
                 {"k", k}};
  std::ostringstream pretty;
  pretty << "order-" << k << " indicators of the irreducibles of " << g->name
         << ": " << render_int_row(indicators) << "\n";
  out.pretty = pretty.str();
  return out;
}

Outcome run_ring_order(const std::string& group_arg, const Options& opts,
                       Digest& digest) {
  const GroupPtr g = resolve_group(group_arg, opts, digest);
  const CharacterTable t = character_table(g);
  const Int recovered = order_from_ring(t);
  const bool match = recovered == Int(g->order);
  Outcome out;
  out.exit_code = match ? 0 : 1;
  out.results = {{"group", g->name},
                 {"match", match},
                 {"recovered", json_int(recovered)},
                 {"true_order", g->order}};
  std::ostringstream pretty;
  pretty << "ring-derived order of " << g->name << ": " << recovered.str()
         << " (true order " << g->order << ", "
         << (match ? "match" : "MISMATCH") << ")\n";
  out.pretty = pretty.str();
  return out;
}

Outcome run_ring_exponent(const std::string& group_arg, const Options& opts,
                          Digest& digest) {
  const GroupPtr g = resolve_group(group_arg, opts, digest);
  const CharacterTable t = character_table(g);
  const long long recovered = exponent_from_ring(t);
  const long long truth =
      static_cast<long long>(conjugacy_data(g)->exponent);
  const bool match = recovered == truth;
  Outcome out;
  out.exit_code = match ? 0 : 1;
  out.results = {{"group", g->name},
                 {"match", match},
                 {"recovered", recovered},
                 {"true_exponent", truth}};
  std::ostringstream pretty;
  pretty << "ring-derived exponent of " << g->name << ": " << recovered
         << " (true exponent " << truth << ", "
         << (match ? "match" : "MISMATCH") << ")\n";
  out.pretty = pretty.str();
  return out;
}

Outcome run_ring_iso(const std::string& a_arg, const std::string& b_arg,
                     long long check_adams_k, bool check_adams,
                     const Options& opts, Digest& digest) {
  const GroupPtr a = resolve_group(a_arg, opts, digest);
  const GroupPtr b = resolve_group(b_arg, opts, digest);
  const CharacterTable ta = character_table(a);
  const CharacterTable tb = character_table(b);
  const auto isos = based_ring_isomorphisms(ta, tb);

  Outcome out;
  out.results = {{"count", isos.size()},
                 {"groups", {a->name, b->name}},
                 {"isomorphisms", isos}};
  std::ostringstream pretty;
  pretty << "based ring isomorphisms " << a->name << " -> " << b->name << ": "
         << isos.size() << "\n";
  for (const auto& pi : isos) {
    pretty << "  (";
    for (std::size_t i = 0; i < pi.size(); ++i) {
      pretty << (i ? " " : "") << pi[i];
    }
    pretty << ")";
    if (check_adams) {
      const bool commutes = commutes_with_adams(ta, tb, pi, check_adams_k);
      pretty << (commutes ? "  commutes with the power operation k="
                          : "  does NOT commute with the power operation k=")
             << check_adams_k;
    }
    pretty << "\n";
  }
  if (check_adams) {
    std::vector<bool> commuting;
    bool any = false;
    for (const auto& pi : isos) {
      const bool c = commutes_with_adams(ta, tb, pi, check_adams_k);
      commuting.push_back(c);
      any = any || c;
    }
    out.results["check_adams"] = check_adams_k;
    out.results["commuting"] = commuting;
    out.results["any_commuting"] = any;
    pretty << (any ? "some isomorphism commutes at k="
                   : "no isomorphism commutes at k=")
           << check_adams_k << "\n";
  }
  out.pretty = pretty.str();
  return out;
}

nlohmann::json json_z_family(const TwistData& twist) {
  nlohmann::json z = nlohmann::json::array();
  for (const auto& row : twist.z) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& v : row) jrow.push_back(format_qmodz(v));
    z.push_back(std::move(jrow));
  }
  return z;
}

nlohmann::json json_b_labels(const TwistData& twist) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : twist.b) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const std::size_t e : row) jrow.push_back(twist.ext.g->labels[e]);
    rows.push_back(std::move(jrow));
  }
  return rows;
}

Outcome run_twist(const std::string& spec_path, const std::string& emit_path,
                  const Options& opts, Digest& digest) {
  const TwistData twist = twist_from_spec(spec_path, opts, digest);
  const std::size_t classes_original =
      conjugacy_data(twist.ext.g)->classes.size();
  const std::size_t classes_twisted =
      conjugacy_data(twist.twisted)->classes.size();

  Outcome out;
  out.results = {{"alpha", json_qmodz_matrix(twist.alpha)},
                 {"b", twist.b},
                 {"b_labels", json_b_labels(twist)},
                 {"class_count_original", classes_original},
                 {"class_count_twisted", classes_twisted},
                 {"group", twist.ext.g->name},
                 {"subgroup", twist.ext.a.elements},
                 {"twisted_group", json_group(*twist.twisted)},
                 {"z", json_z_family(twist)}};

  std::ostringstream pretty;
  pretty << "twist of " << twist.ext.g->name << " along the subgroup {";
  for (std::size_t i = 0; i < twist.ext.a.elements.size(); ++i) {
    pretty << (i ? ", " : "")
           << twist.ext.g->labels[twist.ext.a.elements[i]];
  }
  pretty << "}\n\ncocycle on the dual group:\n"
         << render_qmodz_matrix(twist.alpha) << "\ncochain family z (rows "
            "indexed by the quotient, columns by dual characters):\n";
  for (std::size_t q = 0; q < twist.z.size(); ++q) {
    pretty << "  q=" << q << ":";
    for (const auto& v : twist.z[q]) pretty << " " << format_qmodz(v);
    pretty << "\n";
  }
  pretty << "\nquotient cocycle b (values in the subgroup):\n";
  for (const auto& row : twist.b) {
    pretty << " ";
    for (const std::size_t e : row) {
      pretty << " " << twist.ext.g->labels[e];
    }
    pretty << "\n";
  }
  pretty << "\ntwisted group " << twist.twisted->name << ": order "
         << twist.twisted->order << ", " << classes_twisted
         << " conjugacy classes (original had " << classes_original << ")\n";
  out.pretty = pretty.str();

  if (!emit_path.empty()) {
    std::ofstream file(emit_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write file: " + emit_path);
    file << json_group(*twist.twisted).dump(2) << "\n";
  }
  return out;
}

Outcome run_verify_odd_adams(const std::string& spec_path,
                             const Options& opts, Digest& digest) {
  const TwistData twist = twist_from_spec(spec_path, opts, digest);
  const CharacterTable original = character_table(twist.ext.g);
  const CharacterTable twisted = character_table(twist.twisted);
  const long long kmax =
      opts.kmax >= 0
          ? opts.kmax
          : static_cast<long long>(conjugacy_data(twist.ext.g)->exponent) - 1;

  nlohmann::json verdicts = nlohmann::json::array();
  bool all_equal = true;
  std::ostringstream pretty;
  pretty << "odd power operations on " << twist.ext.g->name
         << " vs its twist, k up to " << kmax << "\n";
  for (long long k = 1; k <= kmax; k += 2) {
    const bool equal = compare_adams(original, twisted, k).equal;
    all_equal = all_equal && equal;
    verdicts.push_back({{"equal", equal}, {"k", k}});
    pretty << "  k=" << k << ": " << (equal ? "equal" : "NOT equal") << "\n";
  }
  pretty << (all_equal ? "all odd operations agree\n"
                       : "MISMATCH among odd operations\n");

  Outcome out;
  out.exit_code = all_equal ? 0 : 1;
  out.results = {{"all_equal", all_equal},
                 {"group", twist.ext.g->name},
                 {"kmax", kmax},
                 {"verdicts", std::move(verdicts)}};
  out.pretty = pretty.str();
  return out;
}

Outcome run_compare_adams(const std::string& spec_path, long long k,
                          const Options& opts, Digest& digest) {
  const TwistData twist = twist_from_spec(spec_path, opts, digest);
  const CharacterTable original = character_table(twist.ext.g);
  const CharacterTable twisted = character_table(twist.twisted);
  const AdamsComparison cmp = compare_adams(original, twisted, k);

  Outcome out;
  out.results = {{"difference", json_int_matrix(cmp.difference)},
                 {"equal", cmp.equal},
                 {"group", twist.ext.g->name},
                 {"k", k},
                 {"matching", cmp.matching}};
  std::ostringstream pretty;
  pretty << "power operation k=" << k << " on " << twist.ext.g->name
         << " vs its twist: " << (cmp.equal ? "equal" : "NOT equal") << "\n";
  pretty << "irreducible matching:";
  for (const std::size_t m : cmp.matching) pretty << " " << m;
  pretty << "\n";
  if (!cmp.equal) {
    pretty << "difference (original minus matched twisted):\n"
           << render_int_matrix(cmp.difference);
  }
  out.pretty = pretty.str();
  return out;
}

Outcome run_example_d8() {
  const TwistData twist = d8_example();
  const CharacterTable table = character_table(twist.ext.g);
  const CharacterTable twisted_table = character_table(twist.twisted);

  bool ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      ok = ok && twist.alpha(i, j) ==
                     QmodZ::of(static_cast<long long>(i / 2) *
                                   static_cast<long long>(j % 2),
                               2);
    }
  }
  const std::string b_qq = twist.ext.g->labels[twist.b[1][1]];
  ok = ok && b_qq == "y";

  const Mat<Int> squares = adams_matrix(table, 2);
  std::vector<Int> row_original(5), row_twisted(5);
  for (std::size_t j = 0; j < 5; ++j) row_original[j] = squares(4, j);
  ok = ok && row_original == std::vector<Int>{1, 1, 1, -1, 0};

  const AdamsComparison cmp = compare_adams(table, twisted_table, 2);
  const Mat<Int> twisted_squares = adams_matrix(twisted_table, 2);
  for (std::size_t j = 0; j < 5; ++j) {
    row_twisted[j] = twisted_squares(cmp.matching[4], cmp.matching[j]);
  }
  ok = ok && row_twisted == std::vector<Int>{1, 1, -1, 1, 0};
  ok = ok && !cmp.equal;

  nlohmann::json odd = nlohmann::json::array();
  std::ostringstream odd_pretty;
  for (const long long k : {1LL, 3LL, 5LL, 7LL}) {
    const bool equal = compare_adams(table, twisted_table, k).equal;
    ok = ok && equal;
    odd.push_back({{"equal", equal}, {"k", k}});
    odd_pretty << "  k=" << k << ": " << (equal ? "equal" : "NOT equal")
               << "\n";
  }

  Outcome out;
  out.exit_code = ok ? 0 : 1;
  out.results = {{"alpha", json_qmodz_matrix(twist.alpha)},
                 {"b_qq", b_qq},
                 {"odd_verdicts", std::move(odd)},
                 {"passed", ok},
                 {"square_row_original", json_int_vector(row_original)},
                 {"square_row_twisted", json_int_vector(row_twisted)},
                 {"z", json_z_family(twist)}};

  std::ostringstream pretty;
  pretty << "dihedral twist example (order 8, central quotient pair)\n\n"
         << "cocycle on the dual of the normal four-element subgroup:\n"
         << render_qmodz_matrix(twist.alpha) << "\ncochain family z:\n";
  for (std::size_t q = 0; q < twist.z.size(); ++q) {
    pretty << "  q=" << q << ":";
    for (const auto& v : twist.z[q]) pretty << " " << format_qmodz(v);
    pretty << "\n";
  }
  pretty << "\nquotient cocycle value b(q, q) = " << b_qq << "\n\n"
         << "square of the 2-dimensional irreducible, decomposed in the "
            "degree-1 basis:\n"
         << "  original: " << render_int_row(row_original) << "\n"
         << "  twisted:  " << render_int_row(row_twisted) << "\n\n"
         << "odd power operations:\n"
         << odd_pretty.str() << "\n"
         << (ok ? "example checks passed" : "example checks FAILED") << "\n";
  out.pretty = pretty.str();
  return out;
}

Outcome run_example_klein() {
  const KleinExample example = klein_example();
  bool ok = true;
  nlohmann::json verdicts = nlohmann::json::array();
  std::ostringstream verdict_pretty;
  for (long long k = 0; k <= 3; ++k) {
    const bool equal =
        twisted_adams_abelian(example.table, example.pairing, k) ==
        adams_matrix(example.table, k);
    ok = ok && equal;
    verdicts.push_back({{"equal", equal}, {"k", k}});
    verdict_pretty << "  k=" << k << ": "
                   << (equal ? "twisted equals plain" : "MISMATCH") << "\n";
  }

  Outcome out;
  out.exit_code = ok ? 0 : 1;
  out.results = {{"pairing", json_qmodz_matrix(example.pairing)},
                 {"passed", ok},
                 {"verdicts", std::move(verdicts)}};
  std::ostringstream pretty;
  pretty << "four-group example: power operations twisted by the "
            "alternating pairing\n\npairing on the character basis:\n"
         << render_qmodz_matrix(example.pairing) << "\n"
         << verdict_pretty.str() << "\n"
         << (ok ? "example checks passed" : "example checks FAILED") << "\n";
  out.pretty = pretty.str();
  return out;
}

Outcome run_selftest(const Options& opts) {
  const auto results = run_verification_suite(opts.seed);
  bool all = true;
  nlohmann::json checks = nlohmann::json::array();
  std::ostringstream pretty;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"detail", r.detail},
                      {"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed}});
    pretty << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << " "
           << r.name << " (" << r.elapsed_ms << " ms)";
    if (!r.detail.empty()) pretty << " — " << r.detail;
    pretty << "\n";
  }
  pretty << (all ? "selftest: all checks passed"
                 : "selftest: FAILURES present")
         << "\n";

  Outcome out;
  out.exit_code = all ? 0 : 1;
  out.results = {{"checks", std::move(checks)},
                 {"passed", all},
                 {"seed", opts.seed}};
  out.pretty = pretty.str();
  return out;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "exact character tables, power operations, and group twisting"};
  app.require_subcommand(1);

  Options opts;
  app.add_option("--json", opts.json_path,
                 "write the machine-readable report to this file instead of "
                 "printing the pretty report");
  app.add_flag("--pretty",
               "human-readable output on stdout (the default behavior)");
  app.add_option("--kmax", opts.kmax,
                 "largest operation index for sweeps (default: group "
                 "exponent - 1)");
  app.add_option("--seed", opts.seed, "seed for randomized checks");
  app.add_option("--limit-order", opts.limit_order,
                 "refuse to build groups larger than this");

  std::string group_arg, group_arg2, spec_path, emit_path, example_name;
  long long k_arg = 0;
  std::size_t irr_arg = 0;
  long n_arg = 0;
  long long check_adams_k = 2;

  CLI::App* chartable =
      app.add_subcommand("chartable", "exact character table of a group");
  chartable->add_option("group", group_arg, "catalog name or group file")
      ->required();

  CLI::App* adams = app.add_subcommand(
      "adams", "matrix of the k-th power operation on the character basis");
  adams->add_option("group", group_arg, "catalog name or group file")
      ->required();
  adams->add_option("--k", k_arg, "operation index")->required();

  CLI::App* lambda = app.add_subcommand(
      "lambda", "exterior-power operation applied to one irreducible");
  lambda->add_option("group", group_arg, "catalog name or group file")
      ->required();
  lambda->add_option("--irr", irr_arg, "irreducible index")->required();
  lambda->add_option("--n", n_arg, "exterior power")->required();

  CLI::App* fs = app.add_subcommand(
      "fs", "order-k indicators (trivial-component coefficients) of all "
            "irreducibles");
  fs->add_option("group", group_arg, "catalog name or group file")
      ->required();
  fs->add_option("--k", k_arg, "operation index")->required();

  CLI::App* ring_order = app.add_subcommand(
      "ring-order", "recover the group order from the ring structure");
  ring_order->add_option("group", group_arg, "catalog name or group file")
      ->required();

  CLI::App* ring_exponent = app.add_subcommand(
      "ring-exponent", "recover the group exponent from the ring structure");
  ring_exponent->add_option("group", group_arg, "catalog name or group file")
      ->required();

  CLI::App* ring_iso = app.add_subcommand(
      "ring-iso", "based ring isomorphisms between two character rings");
  ring_iso->add_option("group1", group_arg, "catalog name or group file")
      ->required();
  ring_iso->add_option("group2", group_arg2, "catalog name or group file")
      ->required();
  CLI::Option* check_adams_opt = ring_iso->add_option(
      "--check-adams", check_adams_k,
      "also test whether each isomorphism commutes with this power "
      "operation");

  CLI::App* twist = app.add_subcommand(
      "twist", "build the twisted group from a twist spec file");
  twist->add_option("spec", spec_path, "twist spec file")->required();
  twist->add_option("--emit-group", emit_path,
                    "also write the twisted group as a group file");

  CLI::App* verify_odd = app.add_subcommand(
      "verify-odd-adams",
      "check that all odd power operations agree across a twist");
  verify_odd->add_option("spec", spec_path, "twist spec file")->required();

  CLI::App* compare = app.add_subcommand(
      "compare-adams", "compare one power operation across a twist");
  compare->add_option("spec", spec_path, "twist spec file")->required();
  compare->add_option("--k", k_arg, "operation index")->required();

  CLI::App* example =
      app.add_subcommand("example", "built-in worked examples: d8 | klein");
  example->add_option("which", example_name, "d8 or klein")->required();

  app.add_subcommand("selftest", "run the full verification suite");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  // The digest fingerprints the computation's inputs, so flags that only
  // choose the output medium stay out of it.
  Digest digest;
  for (int i = 1; i < argc; ++i) {
    const std::string token = argv[i];
    if (token == "--pretty") continue;
    if (token == "--json") {
      ++i;
      continue;
    }
    if (token.rfind("--json=", 0) == 0) continue;
    digest.feed(token);
  }

  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (app.got_subcommand("chartable")) {
      outcome = run_chartable(group_arg, opts, digest);
    } else if (app.got_subcommand("adams")) {
      outcome = run_adams(group_arg, k_arg, opts, digest);
    } else if (app.got_subcommand("lambda")) {
      outcome = run_lambda(group_arg, irr_arg, n_arg, opts, digest);
    } else if (app.got_subcommand("fs")) {
      outcome = run_fs(group_arg, k_arg, opts, digest);
    } else if (app.got_subcommand("ring-order")) {
      outcome = run_ring_order(group_arg, opts, digest);
    } else if (app.got_subcommand("ring-exponent")) {
      outcome = run_ring_exponent(group_arg, opts, digest);
    } else if (app.got_subcommand("ring-iso")) {
      outcome = run_ring_iso(group_arg, group_arg2, check_adams_k,
                             check_adams_opt->count() > 0, opts, digest);
    } else if (app.got_subcommand("twist")) {
      outcome = run_twist(spec_path, emit_path, opts, digest);
    } else if (app.got_subcommand("verify-odd-adams")) {
      outcome = run_verify_odd_adams(spec_path, opts, digest);
    } else if (app.got_subcommand("compare-adams")) {
      outcome = run_compare_adams(spec_path, k_arg, opts, digest);
    } else if (app.got_subcommand("example")) {
      if (example_name == "d8") {
        outcome = run_example_d8();
      } else if (example_name == "klein") {
        outcome = run_example_klein();
      } else {
        throw std::invalid_argument("unknown example: " + example_name);
      }
    } else if (app.got_subcommand("selftest")) {
      outcome = run_selftest(opts);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();

  const std::string command =
      app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();
  const nlohmann::json report = {{"command", command},
                                 {"digest", digest.hex()},
                                 {"results", outcome.results}};

  if (!opts.json_path.empty()) {
    std::ofstream file(opts.json_path, std::ios::binary);
    if (!file) {
      std::fprintf(stderr, "error: cannot write file: %s\n",
                   opts.json_path.c_str());
      return 2;
    }
    file << report.dump(2) << "\n";
  } else {
    std::fputs(outcome.pretty.c_str(), stdout);
    std::printf("elapsed: %lld ms\n",
                static_cast<long long>(elapsed_ms));
  }
  return outcome.exit_code;
}

}  // namespace repring::cli
