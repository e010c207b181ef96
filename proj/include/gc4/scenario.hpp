#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gc4/surgery.hpp"

namespace gc4 {

/// Parsed scenario script. Line-oriented grammar, '#' comments:
///
///   block NAME = KIND(args)
///   perturb NAME T5 T6 ...
///   surgery NAME T1 (p,q,r)
///   sum NAME = A.Ti ~ B.Tj {m=word, l=word}        (p1..p2g keys for genus g)
///   blowup NAME k
///   blowdown NAME
///   assert NAME sphere_square_zero
///   assert NAME homeo_claim "LABEL"
///   expect NAME key value
///
/// Block kinds: product_surfaces(2,2), product_surfaces(2,h),
/// product_surfaces(2,3,twelve), four_torus, t2_x_sigma(g), t2_x_s2,
/// external(...); all but external accept a trailing prefix=... argument.
/// Expect keys: pi1 e sigma b1 b2 loci spin twist homeo almost_complex.
struct ExternalTorusText {
  std::string id;
  std::vector<std::string> pushoffs;  // m, l for genus 1
  std::string meridian = "1";
  bool lagrangian = false;

  friend bool operator==(const ExternalTorusText&, const ExternalTorusText&) = default;
};

struct ExternalText {
  std::string name = "external";
  long long euler = 0;
  long long sigma = 0;
  std::vector<std::string> gens;
  std::vector<std::string> rels;
  std::vector<ExternalTorusText> tori;
  std::string structure = "symplectic";
  std::vector<std::string> trust;

  friend bool operator==(const ExternalText&, const ExternalText&) = default;
};

struct BlockDirective {
  std::string kind;
  std::vector<long long> params;
  std::string prefix;
  bool twelve = false;
  std::optional<ExternalText> external;

  friend bool operator==(const BlockDirective&, const BlockDirective&) = default;
};

struct SumDirective {
  std::string a_state, a_torus, b_state, b_torus;
  std::vector<std::pair<std::string, std::string>> ident;  // key -> word text

  friend bool operator==(const SumDirective&, const SumDirective&) = default;
};

struct Directive {
  enum class Kind { Block, Perturb, Surgery, Sum, BlowUp, BlowDown, Assert, Expect };

  Kind kind{};
  int line = 0;
  std::string name;  // the state bound or acted upon

  BlockDirective block;
  std::vector<std::string> perturb_ids;
  std::string torus;  // Surgery
  SurgeryParams surgery;
  SumDirective sum;
  long long blowup_k = 0;
  std::string assert_what;   // "sphere_square_zero" | "homeo_claim"
  std::string assert_value;  // label text for homeo_claim
  std::string expect_key;
  std::string expect_value;

  /// Line numbers are diagnostics, not content; equality ignores them.
  friend bool operator==(const Directive& a, const Directive& b) {
    return a.kind == b.kind && a.name == b.name && a.block == b.block &&
           a.perturb_ids == b.perturb_ids && a.torus == b.torus && a.surgery == b.surgery &&
           a.sum == b.sum && a.blowup_k == b.blowup_k && a.assert_what == b.assert_what &&
           a.assert_value == b.assert_value && a.expect_key == b.expect_key &&
           a.expect_value == b.expect_value;
  }
};

struct ScenarioScript {
  std::string name;
  std::vector<Directive> directives;

  long long count(Directive::Kind k) const;

  friend bool operator==(const ScenarioScript&, const ScenarioScript&) = default;
};

/// Parses a script; ParseError diagnostics carry 1-based line and column.
/// The empty script is valid and vacuous.
ScenarioScript parse_scenario(std::string_view text, const std::string& name = "scenario");

/// Canonical rendering; parse(print(parse(text))) == parse(text).
std::string print_scenario(const ScenarioScript& script);

struct ExpectationResult {
  enum class Verdict { Pass, Fail, Inconclusive };

  std::string state;
  std::string key;
  std::string expected;
  std::string actual;
  Verdict verdict = Verdict::Inconclusive;
};

std::string verdict_to_string(ExpectationResult::Verdict v);

struct StateReport {
  std::string name;
  FinalReport report;
  std::vector<ExpectationResult> expectations;
};

struct ScenarioResult {
  std::string scenario;
  Budgets budgets;
  std::vector<StateReport> states;

  bool any_fail() const;
};

/// Runs the directives in order and finalizes every surviving state (states
/// consumed by a fiber sum are not reported). Operation errors abort the
/// scenario, annotated with the directive index and line.
ScenarioResult execute_scenario(const ScenarioScript& script, const Budgets& budgets = {});

enum class ReportFormat { Human, Json };

/// Renders results. The JSON schema is stable with deterministic key order,
/// so identical runs serialize byte-identically.
std::string emit_report(const std::vector<ScenarioResult>& results, ReportFormat format);

}  // namespace gc4
