#include "qlprop/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlprop/error.hpp"
#include "qlprop/hilbert.hpp"
#include "qlprop/lattice.hpp"
#include "qlprop/model.hpp"
#include "qlprop/pragmatic.hpp"
#include "qlprop/quantum.hpp"
#include "qlprop/semantics.hpp"
#include "qlprop/syntax.hpp"

namespace qlprop {

namespace {

using nlohmann::ordered_json;

struct Options {
  double tol = kDefaultTolerance;
  std::string format = "text";
  std::string model_path;
  std::string lang;
  std::string text;
  std::string state;
  std::string object;
  std::string interp;
  bool qtruth = false;
  // props
  bool physical = false, forall = false, testable = false;
  // check / lattice
  std::string suite;
  std::size_t depth = 0;
  bool assume_cmt = false;
  std::string which;
  std::string dot_path;
  // gen
  std::string fixture;
  std::string policy = "born";
  std::uint64_t seed = 0;
  std::size_t universe_size = 0;
  std::string out_path;
};

bool json_mode(const Options& o) { return o.format == "json"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content,
                std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("IoError", "cannot write '" + path + "'");
  f << content;
}

Model load(const Options& o) {
  if (o.model_path.empty()) throw Error("UsageError", "--model is required");
  return load_model(read_file(o.model_path), LoadOptions{o.tol});
}

ordered_json states_json(const Model& m, const Proposition& p) {
  ordered_json a = ordered_json::array();
  for (std::size_t s = p.find_first(); s != Proposition::npos;
       s = p.find_next(s)) {
    a.push_back(m.states()[s]);
  }
  return a;
}

Interpretation parse_interpretation(const Model& m, const std::string& text) {
  Interpretation rho{std::vector<std::size_t>(m.num_states())};
  std::vector<bool> given(m.num_states());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw SchemaError("interpretation entries look like S1=u1, got '" +
                        item + "'");
    }
    std::size_t s = m.state_index(item.substr(0, eq));
    rho.choice[s] = m.object_index(s, item.substr(eq + 1));
    given[s] = true;
  }
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (!given[s]) {
      throw SchemaError("interpretation chooses no object for state '" +
                        m.states()[s] + "'");
    }
  }
  return rho;
}

std::vector<std::size_t> selected_states(const Model& m, const Options& o) {
  if (!o.state.empty()) return {m.state_index(o.state)};
  std::vector<std::size_t> all(m.num_states());
  for (std::size_t s = 0; s < all.size(); ++s) all[s] = s;
  return all;
}

// ---------------------------------------------------------------------------
// parse

int cmd_parse(const Options& o, std::ostream& out) {
  std::string canonical;
  if (o.lang == "lx") {
    canonical = format_lx(parse_lx(o.text));
  } else if (o.lang == "ltq") {
    canonical = format_tq(parse_tq(o.text));
  } else {
    canonical = format_prag(parse_prag(o.text));
  }
  if (json_mode(o)) {
    out << ordered_json{{"lang", o.lang}, {"canonical", canonical}}.dump()
        << "\n";
  } else {
    out << canonical << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// eval

struct Record {
  std::string state;
  std::string object;  // empty when the value is per state
  std::string value;
};

int print_records(const Options& o, const std::vector<Record>& records,
                  std::ostream& out) {
  if (json_mode(o)) {
    ordered_json a = ordered_json::array();
    for (const Record& r : records) {
      ordered_json j{{"state", r.state}};
      if (!r.object.empty()) j["object"] = r.object;
      j["value"] = r.value;
      a.push_back(j);
    }
    out << ordered_json{{"records", a}}.dump() << "\n";
    return 0;
  }
  if (records.size() == 1 && !o.state.empty()) {
    out << records.front().value << "\n";
    return 0;
  }
  for (const Record& r : records) {
    out << r.state;
    if (!r.object.empty()) out << " " << r.object;
    out << " " << r.value << "\n";
  }
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Model m = load(o);
  const std::string lang =
      !o.lang.empty() ? o.lang : (o.qtruth ? "ltq" : "lx");
  std::vector<Record> records;
  const auto states = selected_states(m, o);
  if (!o.object.empty() && o.state.empty()) {
    throw Error("UsageError", "--object needs --state");
  }

  // Per-object truth from an extension function.
  auto per_object = [&](auto&& ext_of) {
    std::optional<Interpretation> rho;
    if (!o.interp.empty()) rho = parse_interpretation(m, o.interp);
    for (std::size_t s : states) {
      const IndexSet ext = ext_of(s);
      if (rho) {
        records.push_back({m.states()[s], "",
                           ext.test(rho->choice[s]) ? "T" : "F"});
        continue;
      }
      for (std::size_t obj = 0; obj < m.universe(s).size(); ++obj) {
        if (!o.object.empty() && m.universe(s)[obj] != o.object) continue;
        records.push_back(
            {m.states()[s], m.universe(s)[obj], ext.test(obj) ? "T" : "F"});
      }
      if (!o.object.empty()) m.object_index(s, o.object);
    }
  };

  if (lang == "lx") {
    const Formula f = parse_lx(o.text);
    if (o.qtruth) {
      for (std::size_t s : states) {
        auto v = q_truth_classical_lx(m, m.states()[s], f);
        records.push_back({m.states()[s], "", v ? to_string(*v) : "untestable"});
      }
    } else {
      per_object([&](std::size_t s) { return extension_of(m, s, f); });
    }
  } else if (lang == "ltq") {
    const TQFormula f = parse_tq(o.text);
    QuantumEvaluator ev(m);
    if (o.qtruth) {
      for (std::size_t s : states) {
        records.push_back({m.states()[s], "", to_string(ev.q_truth(s, f))});
      }
    } else {
      const std::size_t e = ev.chi_hat(f);
      per_object([&](std::size_t s) { return m.extension(s, e); });
    }
  } else {
    const AssertiveFormula af = parse_prag(o.text);
    QuantumEvaluator ev(m);
    for (std::size_t s : states) {
      records.push_back({m.states()[s], "", to_string(justified(ev, s, af))});
    }
  }
  return print_records(o, records, out);
}

// ---------------------------------------------------------------------------
// props

int cmd_props(const Options& o, std::ostream& out) {
  const Model m = load(o);
  const int modes = int(o.physical) + int(o.forall) + int(o.testable) +
                    int(!o.interp.empty());
  if (modes != 1) {
    throw Error("UsageError",
                "give exactly one of --physical, --individual, --forall, "
                "--testable");
  }
  std::string kind;
  ordered_json value;
  std::string text;
  if (o.lang == "ltq") {
    if (!o.physical) {
      throw Error("UsageError", "only --physical applies to --lang ltq");
    }
    Proposition p = tq_physical_proposition(m, parse_tq(o.text));
    kind = "physical";
    value = states_json(m, p);
    text = format_proposition(m, p);
  } else {
    const Formula f = parse_lx(o.text);
    if (o.testable) {
      kind = "testable";
      auto w = testable_witness(m, f);
      value = w ? ordered_json(*w) : ordered_json(nullptr);
      text = w ? *w : "none";
    } else {
      Proposition p;
      if (o.physical) {
        kind = "physical";
        p = physical_proposition(m, f);
      } else if (o.forall) {
        kind = "forall";
        p = forall_proposition(m, f);
      } else {
        kind = "individual";
        p = individual_proposition(m, parse_interpretation(m, o.interp), f);
      }
      value = states_json(m, p);
      text = format_proposition(m, p);
    }
  }
  if (json_mode(o)) {
    out << ordered_json{{"kind", kind}, {"value", value}}.dump() << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check

enum class Status { kPass, kFail, kExpectedFail, kInfo, kWarn };

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "PASS";
    case Status::kFail:
      return "FAIL";
    case Status::kExpectedFail:
      return "XFAIL";
    case Status::kInfo:
      return "INFO";
    case Status::kWarn:
      return "WARN";
  }
  return "?";
}

struct SuiteLine {
  Status status;
  std::string name;
  std::string detail;
};

class Suite {
 public:
  void pass(std::string name, std::string detail = "") {
    add(Status::kPass, std::move(name), std::move(detail));
  }
  void fail(std::string name, std::string detail) {
    add(Status::kFail, std::move(name), std::move(detail));
  }
  void check(bool ok, std::string name, const std::string& witness,
             std::string pass_detail = "") {
    if (ok) {
      pass(std::move(name), std::move(pass_detail));
    } else {
      fail(std::move(name), witness);
    }
  }
  void add(Status s, std::string name, std::string detail = "") {
    lines_.push_back({s, std::move(name), std::move(detail)});
  }
  bool passed() const {
    for (const SuiteLine& l : lines_) {
      if (l.status == Status::kFail) return false;
    }
    return true;
  }
  int print(const Options& o, std::ostream& out) const {
    if (json_mode(o)) {
      ordered_json a = ordered_json::array();
      for (const SuiteLine& l : lines_) {
        a.push_back({{"status", status_name(l.status)},
                     {"name", l.name},
                     {"detail", l.detail}});
      }
      out << ordered_json{{"suite", o.suite},
                          {"passed", passed()},
                          {"results", a}}
                 .dump()
          << "\n";
    } else {
      for (const SuiteLine& l : lines_) {
        out << status_name(l.status) << " " << l.name;
        if (!l.detail.empty()) out << ": " << l.detail;
        out << "\n";
      }
    }
    return passed() ? 0 : 1;
  }

 private:
  std::vector<SuiteLine> lines_;
};

void suite_sec3(const Model& m, std::size_t depth, Suite& suite) {
  const auto formulas = all_formulas(m.properties(), depth);
  std::vector<Proposition> props;
  for (const Formula& f : formulas) props.push_back(physical_proposition(m, f));

  std::string neg_fail, neg_strict;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    Proposition pn = physical_proposition(m, Formula::negation(formulas[i]));
    Proposition comp = ~props[i];
    if (!pn.is_subset_of(comp) && neg_fail.empty()) {
      neg_fail = format_lx(formulas[i]);
    }
    if (pn != comp && pn.is_subset_of(comp) && neg_strict.empty()) {
      neg_strict = "p(" + format_lx(Formula::negation(formulas[i])) + ") = " +
                   format_proposition(m, pn) + " strictly inside " +
                   format_proposition(m, comp);
    }
  }
  std::string and_fail, or_fail, or_strict, order_fail, equiv_fail, converse;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    for (std::size_t j = 0; j < formulas.size(); ++j) {
      const Formula& a = formulas[i];
      const Formula& b = formulas[j];
      Proposition pand = physical_proposition(m, Formula::conjunction(a, b));
      if (pand != (props[i] & props[j]) && and_fail.empty()) {
        and_fail = format_lx(a) + ", " + format_lx(b);
      }
      Proposition por = physical_proposition(m, Formula::disjunction(a, b));
      Proposition uni = props[i] | props[j];
      if (!uni.is_subset_of(por) && or_fail.empty()) {
        or_fail = format_lx(a) + ", " + format_lx(b);
      }
      if (por != uni && uni.is_subset_of(por) && or_strict.empty()) {
        or_strict = format_proposition(m, uni) + " strictly inside p(" +
                    format_lx(Formula::disjunction(a, b)) + ") = " +
                    format_proposition(m, por);
      }
      const bool lleq = logical_leq(m, a, b);
      const bool pleq = props[i].is_subset_of(props[j]);
      if (lleq && !pleq && order_fail.empty()) {
        order_fail = format_lx(a) + " <= " + format_lx(b);
      }
      if (logical_equiv(m, a, b) && props[i] != props[j] &&
          equiv_fail.empty()) {
        equiv_fail = format_lx(a) + " == " + format_lx(b);
      }
      if (pleq && !lleq && converse.empty()) {
        converse = format_lx(a) + " physically below " + format_lx(b) +
                   " but not logically";
      }
    }
  }
  const std::string n = std::to_string(formulas.size()) + " formulas";
  suite.check(neg_fail.empty(), "negation inside complement", neg_fail, n);
  suite.add(Status::kInfo, "negation strictness witness",
            neg_strict.empty() ? "none" : neg_strict);
  suite.check(and_fail.empty(), "conjunction is intersection", and_fail, n);
  suite.check(or_fail.empty(), "disjunction contains union", or_fail, n);
  suite.add(Status::kInfo, "disjunction strictness witness",
            or_strict.empty() ? "none" : or_strict);
  suite.check(order_fail.empty(), "logical order implies physical order",
              order_fail, n);
  suite.check(equiv_fail.empty(),
              "logical equivalence implies physical equivalence", equiv_fail,
              n);
  suite.add(Status::kInfo, "converse witness",
            converse.empty() ? "none" : converse);

  std::string brute_fail;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (intersection_over_interpretations(m, formulas[i]) != props[i]) {
      brute_fail = format_lx(formulas[i]);
      break;
    }
  }
  suite.check(brute_fail.empty(),
              "physical proposition equals intersection over interpretations",
              brute_fail, n);
}

void suite_cm(const Model& m, std::size_t depth, bool assume_cmt,
              Suite& suite) {
  const CmsResult cms = check_cms(m);
  suite.check(cms.holds, "CMS",
              cms.witness ? "(" + m.states()[cms.witness->first] + ", " +
                                m.properties()[cms.witness->second] +
                                ") is a proper extension"
                          : "");
  const auto formulas = all_formulas(m.properties(), std::min<std::size_t>(depth, 2));
  const auto rhos = enumerate_interpretations(m);
  std::string rho_fail;
  for (const Formula& f : formulas) {
    Proposition p = physical_proposition(m, f);
    for (const Interpretation& rho : rhos) {
      if (individual_proposition(m, rho, f) != p && rho_fail.empty()) {
        rho_fail = format_lx(f);
      }
    }
  }
  suite.check(rho_fail.empty(),
              "individual propositions equal the physical proposition",
              rho_fail,
              std::to_string(formulas.size()) + " formulas, " +
                  std::to_string(rhos.size()) + " interpretations");
  std::string order_fail;
  for (const Formula& a : formulas) {
    for (const Formula& b : formulas) {
      if (logical_leq(m, a, b) != physical_leq(m, a, b) && order_fail.empty()) {
        order_fail = format_lx(a) + ", " + format_lx(b);
      }
    }
  }
  suite.check(order_fail.empty(), "physical order agrees with logical order",
              order_fail);

  const LindenbaumTarski lt = lindenbaum_tarski(m, depth);
  try {
    const LawReport r = check_boolean(lt.poset);
    for (const LawResult& law : r.laws) {
      std::string w;
      if (!law.witnesses.empty()) {
        for (std::size_t k : law.witnesses.front()) {
          w += (w.empty() ? "" : ", ") + lt.poset.label(k);
        }
      }
      suite.check(law.passed, "quotient " + law.name, w,
                  std::to_string(lt.poset.size()) + " classes");
    }
  } catch (const MeetJoinMissing& e) {
    suite.fail("quotient is a lattice", e.what());
  }

  // Testable classes: those with an atomic representative's profile.
  std::size_t untestable = 0;
  std::string first_untestable;
  for (const FormulaClass& c : lt.classes) {
    if (!testable_witness(m, c.representative)) {
      if (assume_cmt) {
        throw CmtViolation("'" + format_lx(c.representative) +
                           "' is equivalent to no property");
      }
      if (untestable++ == 0) first_untestable = format_lx(c.representative);
    }
  }
  suite.add(Status::kInfo, "testable classes",
            std::to_string(lt.classes.size() - untestable) + " of " +
                std::to_string(lt.classes.size()) +
                (untestable ? ", first untestable " + first_untestable : ""));
}

std::string labels_of(const FinitePoset& p, const std::vector<std::size_t>& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    out += (k ? ", " : "") + p.label(t[k]);
  }
  return out + ")";
}

void suite_qm(const Model& m, std::size_t depth, Suite& suite) {
  QuantumEvaluator ev(m);
  const StateLattice& ls = ev.state_lattice();
  const FinitePoset& poset = ls.lattice.poset();
  suite.add(Status::kInfo, "L(S)",
            std::to_string(ls.elements.size()) + " elements");
  for (const auto& [a, b] : ls.theta_collisions) {
    suite.add(Status::kWarn, "ThetaNotInjective",
              m.properties()[a] + " and " + m.properties()[b] +
                  " have the same states");
  }
  for (const LawResult& law : check_ortho_modular(ls.lattice).laws) {
    std::string w =
        law.witnesses.empty() ? "" : labels_of(poset, law.witnesses.front());
    if (law.asserted) {
      suite.check(law.passed, law.name, w);
    } else {
      suite.add(Status::kInfo, law.name,
                law.passed ? "holds" : "fails at " + w);
    }
  }
  for (const LawResult& law : check_boolean(poset).laws) {
    if (law.name.rfind("distributive", 0) != 0) continue;
    if (law.passed) {
      suite.add(Status::kInfo, law.name, "holds");
    } else {
      suite.add(Status::kExpectedFail, law.name,
                labels_of(poset, law.witnesses.front()));
    }
  }
  suite.check(ls.meet_is_intersection, "meet is set intersection",
              "some induced meet differs from the intersection");
  try {
    const auto iso = order_isomorphic(poset, subspace_poset(m));
    if (ls.theta_collisions.empty()) {
      suite.check(iso.has_value(), "L(S) order-isomorphic to the subspaces",
                  "no isomorphism");
    } else {
      suite.add(Status::kInfo, "L(S) order-isomorphic to the subspaces",
                iso ? "yes" : "no (theta not injective)");
    }
  } catch (const SearchCapExceeded& e) {
    suite.add(Status::kInfo, "L(S) order-isomorphic to the subspaces",
              std::string("skipped: ") + e.what());
  }

  auto diagnostic = [&](const Diagnostic& d) {
    std::string first_asserted, first_reported;
    for (const Finding& f : d.findings) {
      std::string& slot = f.asserted ? first_asserted : first_reported;
      if (slot.empty()) slot = f.message;
    }
    suite.check(d.asserted_failures() == 0, d.name, first_asserted,
                std::to_string(d.checked) + " checks");
    if (d.reported() > 0) {
      suite.add(Status::kInfo, d.name + " (reported)",
                std::to_string(d.reported()) + " findings, first: " +
                    first_reported);
    }
  };
  diagnostic(quantum_equalities(ev, depth));
  diagnostic(conjunction_agreement(ev, std::min<std::size_t>(depth, 3)));
  diagnostic(approx_equiv_coincidence(ev, depth));

  std::string qt_fail, indeterminate;
  for (std::size_t p = 0; p < m.num_properties(); ++p) {
    const TQFormula a = TQFormula::atom(m.properties()[p]);
    const Formula c = Formula::atom(m.properties()[p]);
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      const QTruth v = ev.q_truth(s, a);
      if ((v == QTruth::kTrue) != certainly_true(m, s, c) && qt_fail.empty()) {
        qt_fail = m.properties()[p] + " at " + m.states()[s];
      }
      if (v == QTruth::kIndeterminate && indeterminate.empty()) {
        indeterminate = m.properties()[p] + " at " + m.states()[s];
      }
    }
  }
  suite.check(qt_fail.empty(), "Q-true iff certainly true", qt_fail);
  suite.add(Status::kInfo, "Q-indeterminate witness",
            indeterminate.empty() ? "none" : indeterminate);
}

void suite_prag(const Model& m, std::size_t depth, Suite& suite) {
  const PreservationReport r = check_preservation(m, depth);
  const std::string n = std::to_string(r.formulas) + " formulas, " +
                        std::to_string(r.pairs) + " pairs";
  auto line = [&](const std::vector<std::string>& ce, const std::string& name) {
    suite.check(ce.empty(), name,
                ce.empty() ? ""
                           : std::to_string(ce.size()) +
                                 " counterexamples, first " + ce.front(),
                n);
  };
  line(r.order_counterexamples, "translation preserves the order");
  line(r.equivalence_counterexamples, "translation preserves equivalence");
  line(r.truth_counterexamples, "Q-true iff justified");
  line(r.conjunction_counterexamples, "K is justified iff both parts are");
}

int cmd_check(const Options& o, std::ostream& out) {
  const Model m = load(o);
  Suite suite;
  if (o.suite == "sec3") {
    suite_sec3(m, o.depth ? o.depth : 2, suite);
  } else if (o.suite == "cm") {
    suite_cm(m, o.depth ? o.depth : 3, o.assume_cmt, suite);
  } else if (o.suite == "qm") {
    suite_qm(m, o.depth ? o.depth : 3, suite);
  } else {
    suite_prag(m, o.depth ? o.depth : 3, suite);
  }
  return suite.print(o, out);
}

// ---------------------------------------------------------------------------
// lattice

int cmd_lattice(const Options& o, std::ostream& out) {
  const Model m = load(o);
  std::optional<FinitePoset> poset;
  std::vector<std::string> reps;
  if (o.which == "testable") {
    PropositionPoset pp = testable_proposition_poset(m, o.depth ? o.depth : 1);
    for (const Formula& f : pp.representatives) reps.push_back(format_lx(f));
    poset = std::move(pp.poset);
  } else if (o.which == "lindenbaum") {
    LindenbaumTarski lt = lindenbaum_tarski(m, o.depth ? o.depth : 3);
    for (const FormulaClass& c : lt.classes) {
      std::string profile;
      for (std::size_t s = 0; s < m.num_states(); ++s) {
        profile += (s ? " " : "") + m.states()[s] + ":{";
        const IndexSet& e = c.profile[s];
        bool first = true;
        for (std::size_t k = e.find_first(); k != IndexSet::npos;
             k = e.find_next(k)) {
          profile += (first ? "" : ",") + m.universe(s)[k];
          first = false;
        }
        profile += "}";
      }
      reps.push_back(profile);
    }
    poset = std::move(lt.poset);
  } else {
    StateLattice ls = generate_ls(m);
    for (std::size_t p : ls.property_of) reps.push_back(m.properties()[p]);
    poset = ls.lattice.poset();
  }
  const auto edges = poset->hasse_edges();
  if (!o.dot_path.empty()) write_file(o.dot_path, export_dot(*poset), out);
  if (o.dot_path == "-") return 0;
  if (json_mode(o)) {
    ordered_json elems = ordered_json::array();
    for (std::size_t i = 0; i < poset->size(); ++i) {
      elems.push_back({{"label", poset->label(i)}, {"representative", reps[i]}});
    }
    ordered_json es = ordered_json::array();
    for (const auto& [lo, hi] : edges) es.push_back({lo, hi});
    out << ordered_json{{"which", o.which},
                        {"elements", elems},
                        {"edges", es}}
               .dump()
        << "\n";
    return 0;
  }
  out << "elements " << poset->size() << "\n";
  for (std::size_t i = 0; i < poset->size(); ++i) {
    out << "  " << i << "  " << poset->label(i) << "  " << reps[i] << "\n";
  }
  out << "edges " << edges.size() << "\n";
  for (const auto& [lo, hi] : edges) {
    out << "  " << poset->label(lo) << " -> " << poset->label(hi) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const Options& o, std::ostream& out) {
  std::optional<Model> m;
  if (o.fixture == "sr" || o.fixture == "cm") {
    m = o.fixture == "sr" ? make_sr_model() : make_cm_model();
  } else {
    QmModelSpec spec = o.fixture == "qbit" ? qbit_model_spec()
                                           : qutrit_model_spec();
    spec.policy = o.policy == "random" ? ExtensionPolicy::kSeededRandom
                                       : ExtensionPolicy::kBornFraction;
    spec.seed = o.seed;
    spec.tol = o.tol;
    if (o.universe_size) spec.universe_size = o.universe_size;
    m = build_qm_model(spec);
  }
  write_file(o.out_path.empty() ? "-" : o.out_path, save_model(*m), out);
  return 0;
}

void print_error(const Error& e, const Options& o, std::ostream& err) {
  const auto* se = dynamic_cast<const SyntaxError*>(&e);
  if (json_mode(o)) {
    ordered_json j{{"error", e.kind()}, {"message", e.what()}};
    if (se) j["position"] = se->position();
    err << j.dump() << "\n";
    return;
  }
  err << e.kind() << ": " << e.what() << "\n";
  if (se && !o.text.empty()) {
    err << "  " << o.text << "\n  "
        << std::string(std::min(se->position(), o.text.size()), ' ') << "^\n";
  }
}

double default_tolerance() {
  if (const char* env = std::getenv("QLPROP_TOL")) {
    try {
      std::size_t used = 0;
      double t = std::stod(env, &used);
      if (used == std::string(env).size() && t >= 0) return t;
    } catch (const std::exception&) {
    }
  }
  return kDefaultTolerance;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  o.tol = default_tolerance();

  CLI::App app{"Finite-model evaluator for classical, quantum and pragmatic "
               "proposition calculi."};
  app.name("qlprop");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", o.tol, "Subspace tolerance (default: $QLPROP_TOL or 1e-9)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto add_model = [&](CLI::App* c) {
    c->add_option("--model", o.model_path, "Model file (JSON)")->required();
  };
  auto add_text = [&](CLI::App* c) {
    c->add_option("formula", o.text, "Formula text")->required();
  };

  CLI::App* parse = app.add_subcommand("parse", "Print the canonical form");
  parse->add_option("--lang", o.lang, "Language")
      ->required()
      ->check(CLI::IsMember({"lx", "ltq", "prag"}));
  add_text(parse);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a formula");
  add_model(eval);
  eval->add_option("--lang", o.lang, "Language (default lx, or ltq with --qtruth)")
      ->check(CLI::IsMember({"lx", "ltq", "prag"}));
  eval->add_option("--state", o.state, "Restrict to one state");
  eval->add_option("--object", o.object, "Restrict to one object of --state");
  eval->add_option("--interp", o.interp, "Interpretation S1=u1,S2=v1");
  eval->add_flag("--qtruth", o.qtruth, "Report Q-truth values");
  add_text(eval);

  CLI::App* props = app.add_subcommand("props", "Compute a proposition");
  add_model(props);
  props->add_option("--lang", o.lang, "Language")
      ->check(CLI::IsMember({"lx", "ltq"}));
  props->add_flag("--physical", o.physical, "Physical proposition");
  props->add_flag("--forall", o.forall,
                  "Intersection over all interpretations, cross-checked");
  props->add_flag("--testable", o.testable, "Testable witness property");
  props->add_option("--individual", o.interp,
                    "Individual proposition of interpretation S1=u1,...");
  add_text(props);

  CLI::App* check = app.add_subcommand("check", "Run an invariant suite");
  add_model(check);
  check->add_option("--suite", o.suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"sec3", "cm", "qm", "prag"}));
  check->add_option("--depth", o.depth, "Formula depth")
      ->check(CLI::PositiveNumber);
  check->add_flag("--assume-cmt", o.assume_cmt,
                  "Fail if some formula has no equivalent property");

  CLI::App* lattice = app.add_subcommand("lattice", "List a poset");
  add_model(lattice);
  lattice->add_option("--which", o.which, "Structure")
      ->required()
      ->check(CLI::IsMember({"testable", "lindenbaum", "LS"}));
  lattice->add_option("--depth", o.depth, "Formula depth")
      ->check(CLI::PositiveNumber);
  lattice->add_option("--dot", o.dot_path, "Write the Hasse diagram (- for stdout)");

  CLI::App* gen = app.add_subcommand("gen", "Write a fixture model");
  gen->add_option("--fixture", o.fixture, "Fixture")
      ->required()
      ->check(CLI::IsMember({"sr", "cm", "qbit", "qutrit"}));
  gen->add_option("--policy", o.policy, "Extension policy")
      ->check(CLI::IsMember({"born", "random"}));
  gen->add_option("--seed", o.seed, "Seed for --policy random");
  gen->add_option("--universe-size", o.universe_size, "Objects per state")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out_path, "Output file (default stdout)");

  std::vector<std::string> argv_storage{"qlprop"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) return cmd_parse(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*props) return cmd_props(o, out);
    if (*check) return cmd_check(o, out);
    if (*lattice) return cmd_lattice(o, out);
    return cmd_gen(o, out);
  } catch (const Error& e) {
    print_error(e, o, err);
    return e.kind() == "UsageError" ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qlprop
