// mullat: command-line front end for the finite multiplicative-lattice engine.
//
// Subcommands: check-axioms, analyze, decompose, verify, zn, product.
// Exit codes: 0 all pass, 1 input error, 2 verification failure (or a
// --require class shortfall). With --format json the output is machine
// parseable and byte-identical across runs on identical inputs.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mullat/mullat.hpp"

namespace {

using mullat::AxiomClass;
using mullat::CheckStatus;
using mullat::ElementId;
using mullat::Json;
using mullat::MClosedSet;
using mullat::MultiplicativeLattice;
using mullat::PropertyReport;
using mullat::VerdictBundle;
using mullat::ZnLattice;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const std::string& tok : split_csv(s)) out.push_back(std::stoi(tok));
  return out;
}

/// One lattice source per invocation: a JSON file or a generated Id(Z_n).
/// The multiplicative set lives next to the lattice it was validated against.
struct Instance {
  std::optional<ZnLattice> zn;
  std::optional<MultiplicativeLattice> file_m;
  std::optional<MClosedSet> s;
  std::vector<int> s_ring;
  std::string source;

  const MultiplicativeLattice& m() const { return zn ? zn->M : *file_m; }
};

Instance load_instance(const std::string& lattice_file, int zn_n, const std::string& s_spec) {
  if (lattice_file.empty() == (zn_n == 0))
    throw mullat::Error(mullat::ErrorCode::ParseError,
                        "exactly one lattice source required: --lattice FILE xor --zn N");
  Instance inst;
  if (zn_n != 0) {
    inst.zn = mullat::ideal_lattice_zn(zn_n);
    inst.source = "zn:" + std::to_string(zn_n);
    if (!s_spec.empty()) {
      inst.s_ring = parse_int_list(s_spec);
      inst.s = mullat::lift_mult_set(*inst.zn, inst.s_ring);
    }
  } else {
    std::ifstream in(lattice_file);
    if (!in) throw mullat::Error(mullat::ErrorCode::ParseError, "cannot open " + lattice_file);
    Json j;
    in >> j;
    inst.file_m = mullat::mult_lattice_from_json(j);
    inst.source = lattice_file;
    if (!s_spec.empty()) {
      const MultiplicativeLattice& M = *inst.file_m;
      std::vector<ElementId> members;
      if (s_spec == "top") {
        members.push_back(M.top());
      } else {
        for (const std::string& lab : split_csv(s_spec)) {
          const auto e = M.lattice().find_label(lab);
          if (!e)
            throw mullat::Error(mullat::ErrorCode::UnknownLabel, "no element labeled " + lab);
          members.push_back(*e);
        }
      }
      inst.s = MClosedSet::validate(M, members);
    }
  }
  return inst;
}

ElementId resolve_element(const Instance& inst, const std::string& selector) {
  const MultiplicativeLattice& M = inst.m();
  if (const auto e = M.lattice().find_label(selector)) return *e;
  if (inst.zn) {
    try {
      return inst.zn->element_of_residue(std::stoi(selector));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw mullat::Error(mullat::ErrorCode::UnknownLabel, "no element matches " + selector);
}

Json s_to_json(const Instance& inst) {
  Json arr = Json::array();
  if (inst.s)
    for (ElementId e : inst.s->members()) arr.push_back(inst.m().label(e));
  return arr;
}

void emit(const Json& j, const std::string& format, const std::string& table_text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table_text;
}

std::string render_reports_table(const std::vector<PropertyReport>& reports,
                                 const mullat::FiniteLattice* L) {
  std::ostringstream out;
  for (const PropertyReport& r : reports) {
    out << "  [" << to_string(r.status) << "] " << r.name;
    if (!r.counterexample.empty()) {
      out << "  at (";
      for (std::size_t i = 0; i < r.counterexample.size(); ++i) {
        if (i) out << ", ";
        const ElementId e = r.counterexample[i];
        if (L && e < L->size()) out << L->label(e);
        else out << e;
      }
      out << ")";
    }
    if (!r.detail.empty()) out << "  -- " << r.detail;
    out << "\n";
  }
  return out.str();
}

Json reports_to_json(const std::vector<PropertyReport>& reports, const mullat::FiniteLattice* L) {
  Json arr = Json::array();
  for (const PropertyReport& r : reports) arr.push_back(mullat::report_to_json(r, L));
  return arr;
}

/// Per-element classification table shared by `analyze` and `zn`.
Json classification_table(const MultiplicativeLattice& M, const MClosedSet& S) {
  const bool radical_ok = M.at_least(AxiomClass::CLattice);
  const bool mult_ok = M.at_least(AxiomClass::Multiplicative);
  Json rows = Json::array();
  for (ElementId e = 0; e < M.size(); ++e) {
    Json row;
    row["element"] = M.label(e);
    row["prime"] = e != M.top() && M.is_prime(e);
    if (radical_ok)
      row["primary"] = e != M.top() && M.is_primary(e);
    else
      row["primary"] = nullptr;  // gated: needs c-lattice radical

    const mullat::SWitnessResult sp = mullat::is_s_prime(M, S, e);
    Json jsp;
    jsp["value"] = sp.ok();
    jsp["witness"] = sp.ok() ? Json(M.label(sp.witness->s)) : Json(nullptr);
    jsp["reason"] = std::string(to_string(sp.reason));
    row["s_prime"] = std::move(jsp);

    if (radical_ok) {
      const mullat::SWitnessResult sq = mullat::is_s_primary(M, S, e);
      Json jsq;
      jsq["value"] = sq.ok();
      jsq["witness"] = sq.ok() ? Json(M.label(sq.witness->s)) : Json(nullptr);
      jsq["reason"] = std::string(to_string(sq.reason));
      row["s_primary"] = std::move(jsq);
    } else {
      row["s_primary"] = nullptr;
    }

    const mullat::SIrreducibleResult si = mullat::is_s_irreducible(M, S, e);
    Json jsi;
    jsi["value"] = si.value;
    jsi["reason"] = std::string(to_string(si.reason));
    row["s_irreducible"] = std::move(jsi);

    row["saturation"] = mult_ok ? Json(M.label(mullat::saturation(M, S, e))) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string classification_table_text(const Json& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << "  " << row.at("element").get<std::string>() << ": prime="
        << (row.at("prime").get<bool>() ? "yes" : "no");
    out << " primary=";
    if (row.at("primary").is_null()) out << "gated";
    else out << (row.at("primary").get<bool>() ? "yes" : "no");
    const auto& sp = row.at("s_prime");
    out << " s_prime=" << (sp.at("value").get<bool>() ? "yes" : "no");
    if (!sp.at("witness").is_null()) out << "(s=" << sp.at("witness").get<std::string>() << ")";
    if (sp.at("reason").get<std::string>() == "s_meets_element") out << "(S meets element)";
    out << " s_primary=";
    if (row.at("s_primary").is_null()) {
      out << "gated";
    } else {
      const auto& sq = row.at("s_primary");
      out << (sq.at("value").get<bool>() ? "yes" : "no");
      if (!sq.at("witness").is_null()) out << "(s=" << sq.at("witness").get<std::string>() << ")";
      if (sq.at("reason").get<std::string>() == "s_meets_element") out << "(S meets element)";
    }
    out << " s_irreducible=" << (row.at("s_irreducible").at("value").get<bool>() ? "yes" : "no");
    out << " saturation=";
    if (row.at("saturation").is_null()) out << "gated";
    else out << row.at("saturation").get<std::string>();
    out << "\n";
  }
  return out.str();
}

Json decomposition_to_json(const MultiplicativeLattice& M, const mullat::Decomposition& d) {
  Json j;
  j["target"] = M.label(d.target);
  Json comps = Json::array(), rads = Json::array(), sats = Json::array(), wits = Json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    comps.push_back(M.label(d.components[i]));
    rads.push_back(M.label(d.radicals[i]));
    sats.push_back(M.label(d.saturated_radicals[i]));
    wits.push_back(M.label(d.witnesses[i].s));
  }
  j["components"] = std::move(comps);
  j["radicals"] = std::move(rads);
  j["saturated_radicals"] = std::move(sats);
  j["witnesses"] = std::move(wits);
  j["minimal"] = d.minimal;
  j["minimal_clauses"] = {{"distinct_saturated_radicals", d.distinct_saturated_radicals},
                          {"irredundant", d.irredundant}};
  return j;
}

int cmd_check_axioms(const Instance& inst, const std::string& require_class, bool tables,
                     const std::string& format) {
  const MultiplicativeLattice& M = inst.m();
  Json j;
  j["source"] = inst.source;
  j["class"] = std::string(to_string(M.axiom_class()));
  if (tables) j["lattice"] = mullat::lattice_to_json(M.lattice(), true);
  j["clauses"] = reports_to_json(M.class_reports(), &M.lattice());

  std::ostringstream table;
  table << "axiom class: " << to_string(M.axiom_class()) << "\n"
        << render_reports_table(M.class_reports(), &M.lattice());

  int rc = 0;
  if (!require_class.empty()) {
    const auto want = mullat::parse_axiom_class(require_class);
    if (!want)
      throw mullat::Error(mullat::ErrorCode::ParseError, "unknown class " + require_class);
    const bool reached = M.at_least(*want);
    j["required"] = require_class;
    j["required_reached"] = reached;
    table << "required: " << require_class << " -> " << (reached ? "reached" : "NOT reached")
          << "\n";
    if (!reached) rc = 2;
  }
  emit(j, format, table.str());
  return rc;
}

int cmd_analyze(const Instance& inst, bool with_clauses, const std::string& format) {
  const MultiplicativeLattice& M = inst.m();
  if (!inst.s)
    throw mullat::Error(mullat::ErrorCode::ParseError, "analyze needs --s");
  Json j;
  j["source"] = inst.source;
  j["class"] = std::string(to_string(M.axiom_class()));
  if (with_clauses) j["clauses"] = reports_to_json(M.class_reports(), &M.lattice());
  j["s"] = s_to_json(inst);
  j["elements"] = classification_table(M, *inst.s);

  std::ostringstream table;
  table << "class: " << to_string(M.axiom_class()) << "  S = " << j["s"].dump() << "\n";
  if (with_clauses) table << render_reports_table(M.class_reports(), &M.lattice());
  table << classification_table_text(j["elements"]);
  emit(j, format, table.str());
  return 0;
}

int cmd_decompose(const Instance& inst, const std::string& element, bool all,
                  int max_components, const std::string& format) {
  const MultiplicativeLattice& M = inst.m();
  if (!inst.s) throw mullat::Error(mullat::ErrorCode::ParseError, "decompose needs --s");
  const MClosedSet& S = *inst.s;
  const ElementId a = resolve_element(inst, element);

  Json j;
  j["source"] = inst.source;
  j["target"] = M.label(a);
  const auto elig = mullat::decomposition_eligibility(M, S, a);
  j["eligibility"] = {{"saturation_proper", elig.saturation_proper},
                      {"s_disjoint", elig.s_disjoint}};

  // SaturationIsTop propagates as an input error (exit 1).
  const auto found = mullat::find_minimal_decomposition(M, S, a);
  j["decomposition"] = found ? decomposition_to_json(M, *found) : Json(nullptr);

  if (all) {
    std::optional<std::size_t> cap;
    if (max_components > 0) cap = static_cast<std::size_t>(max_components);
    Json arr = Json::array();
    for (const auto& d : mullat::enumerate_minimal_decompositions(M, S, a, cap))
      arr.push_back(decomposition_to_json(M, d));
    j["all_minimal"] = std::move(arr);
  }

  Json P = Json::array();
  for (ElementId p : mullat::uniqueness_set_P(M, S, a)) P.push_back(M.label(p));
  j["P"] = std::move(P);
  const PropertyReport uniq = mullat::verify_first_uniqueness(M, S, a);
  j["uniqueness"] = mullat::report_to_json(uniq, &M.lattice());

  std::ostringstream table;
  table << "target: " << M.label(a) << "\n";
  if (found) {
    table << "  components:";
    for (ElementId c : found->components) table << " " << M.label(c);
    table << "\n  radicals:";
    for (ElementId r : found->radicals) table << " " << M.label(r);
    table << "\n  saturated radicals:";
    for (ElementId r : found->saturated_radicals) table << " " << M.label(r);
    table << "\n  minimal: " << (found->minimal ? "yes" : "no") << "\n";
  } else {
    table << "  no S-primary decomposition\n";
  }
  table << "  P = " << j["P"].dump() << "\n"
        << render_reports_table({uniq}, &M.lattice());
  emit(j, format, table.str());
  return uniq.passed() ? 0 : 2;
}

int cmd_verify_instance(const Instance& inst, const std::string& format) {
  const MultiplicativeLattice& M = inst.m();
  if (!inst.s) throw mullat::Error(mullat::ErrorCode::ParseError, "verify needs --s");
  const VerdictBundle bundle =
      mullat::verify_instance(M, *inst.s, inst.zn ? &*inst.zn : nullptr,
                              inst.zn ? &inst.s_ring : nullptr);
  Json j;
  j["source"] = inst.source;
  j["s"] = s_to_json(inst);
  j["reports"] = reports_to_json(bundle.reports, &M.lattice());
  j["overall"] = bundle.overall();
  j["counts"] = {{"pass", bundle.count(CheckStatus::Pass)},
                 {"fail", bundle.count(CheckStatus::Fail)},
                 {"skip", bundle.count(CheckStatus::Skip)}};

  std::ostringstream table;
  table << "verify " << inst.source << "  S = " << j["s"].dump() << "\n"
        << render_reports_table(bundle.reports, &M.lattice()) << "overall: "
        << (bundle.overall() ? "pass" : "FAIL") << "\n";
  emit(j, format, table.str());
  return bundle.overall() ? 0 : 2;
}

int cmd_verify_sweep(const std::string& range, int max_s, const std::string& format) {
  const auto dots = range.find("..");
  if (dots == std::string::npos)
    throw mullat::Error(mullat::ErrorCode::ParseError, "--sweep-zn wants A..B");
  mullat::SweepOptions opts;
  opts.n_lo = std::stoi(range.substr(0, dots));
  opts.n_hi = std::stoi(range.substr(dots + 2));
  opts.max_s_size = max_s;
  const mullat::SweepResult res = mullat::sweep_zn(opts);

  Json j;
  j["range"] = {{"lo", opts.n_lo}, {"hi", opts.n_hi}};
  j["max_s"] = max_s;
  j["instances"] = res.instances.size();
  j["failures"] = res.failures;
  Json checks;
  for (const auto& [name, c] : res.check_counts)
    checks[name] = {{"pass", c[0]}, {"fail", c[1]}, {"skip", c[2]}};
  j["checks"] = std::move(checks);
  Json failed = Json::array();
  for (const auto& inst : res.instances) {
    if (inst.overall) continue;
    Json f;
    f["n"] = inst.n;
    f["s"] = inst.s_ring;
    f["reports"] = reports_to_json(inst.failures, nullptr);
    failed.push_back(std::move(f));
  }
  j["failed_instances"] = std::move(failed);
  j["overall"] = res.overall();

  std::ostringstream table;
  table << "sweep zn " << opts.n_lo << ".." << opts.n_hi << " (max |S| = " << max_s
        << "): " << res.instances.size() << " instances, " << res.failures << " failures\n";
  for (const auto& [name, c] : res.check_counts)
    table << "  " << name << ": pass=" << c[0] << " fail=" << c[1] << " skip=" << c[2] << "\n";
  table << "overall: " << (res.overall() ? "pass" : "FAIL") << "\n";
  emit(j, format, table.str());
  return res.overall() ? 0 : 2;
}

int cmd_zn(int n, const std::string& s_spec, bool do_verify, bool tables,
           const std::string& format) {
  Instance inst = load_instance("", n, s_spec);
  const ZnLattice& zn = *inst.zn;
  Json j;
  j["n"] = n;
  j["lattice"] = mullat::lattice_to_json(zn.M.lattice(), tables);
  Json mult = Json::array();
  for (ElementId a = 0; a < zn.M.size(); ++a) {
    Json row = Json::array();
    for (ElementId b = 0; b < zn.M.size(); ++b) row.push_back(zn.M.mult(a, b));
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  j["class"] = std::string(to_string(zn.M.axiom_class()));

  std::ostringstream table;
  table << "Id(Z_" << n << "): " << zn.M.size() << " ideals, class "
        << to_string(zn.M.axiom_class()) << "\n";

  int rc = 0;
  if (inst.s) {
    j["s_ring"] = inst.s_ring;
    j["s_l"] = s_to_json(inst);
    j["lattice_side"] = classification_table(zn.M, *inst.s);

    const mullat::RingSideClassification ring = mullat::classify_ring_side(n, inst.s_ring);
    Json ringside = Json::array();
    for (std::size_t i = 0; i < ring.divisors.size(); ++i) {
      Json row;
      row["ideal"] = mullat::zn_ideal_label(ring.divisors[i], n);
      row["eligible"] = ring.eligible[i] != 0;
      row["s_prime"] = ring.s_prime[i] != 0;
      row["s_primary"] = ring.s_primary[i] != 0;
      row["s_irreducible"] = ring.s_irreducible[i] != 0;
      row["radical"] = mullat::zn_ideal_label(ring.radical_generator[i], n);
      ringside.push_back(std::move(row));
    }
    j["ring_side"] = std::move(ringside);

    table << "S_L = " << j["s_l"].dump() << "\n"
          << classification_table_text(j["lattice_side"]);

    if (do_verify) {
      const auto reports = mullat::verify_correspondence(zn, inst.s_ring);
      j["correspondence"] = reports_to_json(reports, &zn.M.lattice());
      bool ok = true;
      for (const auto& r : reports) ok = ok && !r.failed();
      j["correspondence_overall"] = ok;
      table << render_reports_table(reports, &zn.M.lattice());
      if (!ok) rc = 2;
    }
  }
  emit(j, format, table.str());
  return rc;
}

int cmd_product(int n1, int n2, const std::string& s1, const std::string& s2, bool do_verify,
                bool tables, const std::string& format) {
  const ZnLattice a = mullat::ideal_lattice_zn(n1);
  const ZnLattice b = mullat::ideal_lattice_zn(n2);
  const MultiplicativeLattice prod = mullat::product_mult_lattice(a.M, b.M);

  Json j;
  j["factors"] = {n1, n2};
  j["lattice"] = mullat::lattice_to_json(prod.lattice(), tables);
  Json mult = Json::array();
  for (ElementId x = 0; x < prod.size(); ++x) {
    Json row = Json::array();
    for (ElementId y = 0; y < prod.size(); ++y) row.push_back(prod.mult(x, y));
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  j["class"] = std::string(to_string(prod.axiom_class()));

  std::ostringstream table;
  table << "Id(Z_" << n1 << ") x Id(Z_" << n2 << "): " << prod.size() << " elements, class "
        << to_string(prod.axiom_class()) << "\n";

  int rc = 0;
  if (!s1.empty() || !s2.empty()) {
    const MClosedSet sa = mullat::lift_mult_set(a, s1.empty() ? std::vector<int>{1}
                                                              : parse_int_list(s1));
    const MClosedSet sb = mullat::lift_mult_set(b, s2.empty() ? std::vector<int>{1}
                                                              : parse_int_list(s2));
    std::vector<ElementId> members;
    for (ElementId i : sa.members())
      for (ElementId k : sb.members()) members.push_back(i * b.M.size() + k);
    const MClosedSet S = MClosedSet::validate(prod, members);
    Json slab = Json::array();
    for (ElementId e : S.members()) slab.push_back(prod.label(e));
    j["s"] = std::move(slab);
    if (do_verify) {
      const VerdictBundle bundle = mullat::verify_instance(prod, S);
      j["reports"] = reports_to_json(bundle.reports, &prod.lattice());
      j["overall"] = bundle.overall();
      table << render_reports_table(bundle.reports, &prod.lattice()) << "overall: "
            << (bundle.overall() ? "pass" : "FAIL") << "\n";
      if (!bundle.overall()) rc = 2;
    }
  }
  emit(j, format, table.str());
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite multiplicative-lattice engine and theorem verifier"};
  app.require_subcommand(1);

  std::string lattice_file, s_spec, element, format = "table", require_class, sweep_range;
  std::string s1, s2;
  int zn_n = 0, n_arg = 0, n1 = 0, n2 = 0, max_s = 6;
  bool all = false, do_verify = false, tables = false;
  std::string classify = "all";

  auto add_common = [&](CLI::App* cmd, bool with_s) {
    cmd->add_option("--lattice", lattice_file, "multiplicative lattice JSON file");
    cmd->add_option("--zn", zn_n, "use Id(Z_n) for this n");
    if (with_s) cmd->add_option("--s", s_spec, "multiplicative set: residues for --zn, labels for --lattice");
    cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* ca = app.add_subcommand("check-axioms", "classify the lattice against the axiom ladder");
  add_common(ca, false);
  ca->add_option("--require", require_class, "exit 2 unless this class is reached");
  ca->add_flag("--tables", tables, "echo the closed order relation with meet/join tables");

  CLI::App* an = app.add_subcommand("analyze", "per-element classification table");
  add_common(an, true);
  an->add_option("--classify", classify, "what to classify (all)");
  bool with_clauses = false;
  an->add_flag("--class", with_clauses, "also print the axiom class clause reports");

  CLI::App* de = app.add_subcommand("decompose", "minimal S-primary decomposition and P");
  add_common(de, true);
  de->add_option("--element", element, "target element (label, or residue with --zn)")->required();
  de->add_flag("--all", all, "enumerate every minimal decomposition");
  int max_components = 0;
  de->add_option("--max-components", max_components,
                 "bound on components when enumerating (default: distinct saturated radicals + 1)");

  CLI::App* ve = app.add_subcommand("verify", "run the theorem suite");
  add_common(ve, true);
  ve->add_option("--sweep-zn", sweep_range, "verify every Id(Z_n), n in A..B, over all S");
  ve->add_option("--max-s", max_s, "sweep bound on |S|");

  CLI::App* zn = app.add_subcommand("zn", "emit Id(Z_n) with both classification tables");
  zn->add_option("--n", n_arg, "modulus")->required();
  zn->add_option("--s", s_spec, "ring-side multiplicative set (residues)");
  zn->add_flag("--verify", do_verify, "check the ring/lattice correspondence");
  zn->add_flag("--tables", tables, "include meet/join tables in the lattice JSON");
  zn->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  CLI::App* pr = app.add_subcommand("product", "product of two Id(Z_n) lattices");
  pr->add_option("--n1", n1, "first modulus")->required();
  pr->add_option("--n2", n2, "second modulus")->required();
  pr->add_option("--s1", s1, "multiplicative set of the first factor");
  pr->add_option("--s2", s2, "multiplicative set of the second factor");
  pr->add_flag("--verify", do_verify, "run the theorem suite on the product");
  pr->add_flag("--tables", tables, "include meet/join tables in the lattice JSON");
  pr->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (ca->parsed()) return cmd_check_axioms(load_instance(lattice_file, zn_n, ""), require_class, tables, format);
    if (an->parsed()) return cmd_analyze(load_instance(lattice_file, zn_n, s_spec), with_clauses, format);
    if (de->parsed()) return cmd_decompose(load_instance(lattice_file, zn_n, s_spec), element, all, max_components, format);
    if (ve->parsed()) {
      if (!sweep_range.empty()) return cmd_verify_sweep(sweep_range, max_s, format);
      return cmd_verify_instance(load_instance(lattice_file, zn_n, s_spec), format);
    }
    if (zn->parsed()) return cmd_zn(n_arg, s_spec, do_verify, tables, format);
    if (pr->parsed()) return cmd_product(n1, n2, s1, s2, do_verify, tables, format);
  } catch (const mullat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
