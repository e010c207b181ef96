#include "gc4/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gc4/error.hpp"

namespace gc4 {

using ojson = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kExpectKeys = {"pi1",  "e",    "sigma", "b1",    "b2",
                                              "loci", "spin", "twist", "homeo", "almost_complex"};
const std::set<std::string> kIntExpectKeys = {"e", "sigma", "b1", "b2", "loci"};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// Splits on `delim` at bracket depth zero, respecting (), [], {} and "".
std::vector<std::string> split_top(std::string_view s, char delim) {
  std::vector<std::string> parts;
  int depth = 0;
  bool quoted = false;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (quoted) {
      if (c == '"') quoted = false;
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == '(' || c == '[' || c == '{') {
      ++depth;
    } else if (c == ')' || c == ']' || c == '}') {
      --depth;
    } else if (c == delim && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  std::string last = trim(s.substr(start));
  if (!last.empty() || !parts.empty()) parts.push_back(last);
  return parts;
}

std::string strip_quotes(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

struct LineParser {
  std::string_view text;
  int line;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw ParseError(msg, line, static_cast<int>(at) + 1);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect_char(char c, const std::string& what) {
    if (peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    ++pos;
  }
  std::string ident(const std::string& what) {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    if (pos == start) fail("expected " + what);
    return std::string(text.substr(start, pos - start));
  }
  long long integer(const std::string& what) {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer for " + what, start);
    return std::stoll(std::string(text.substr(start, pos - start)));
  }
  std::string quoted(const std::string& what) {
    skip_ws();
    if (peek() != '"') fail("expected quoted " + what);
    size_t start = ++pos;
    while (pos < text.size() && text[pos] != '"') ++pos;
    if (pos >= text.size()) fail("unterminated string", start - 1);
    std::string out(text.substr(start, pos - start));
    ++pos;
    return out;
  }
  std::string rest() {
    skip_ws();
    return trim(text.substr(pos));
  }
  /// Balanced bracketed chunk starting at the current '(' / '[' / '{'.
  std::string bracketed(char open, char close) {
    expect_char(open, "");
    size_t start = pos;
    int depth = 1;
    bool quote = false;
    while (pos < text.size() && depth > 0) {
      char c = text[pos];
      if (quote) {
        if (c == '"') quote = false;
      } else if (c == '"') {
        quote = true;
      } else if (c == open) {
        ++depth;
      } else if (c == close) {
        --depth;
      }
      ++pos;
    }
    if (depth != 0) fail(std::string("unbalanced '") + open + "'", start - 1);
    return std::string(text.substr(start, pos - start - 1));
  }
};

ExternalTorusText parse_external_torus(const std::string& entry, LineParser& lp) {
  // "ID: m=..., l=..., mu=..., lagrangian" or "ID: pushoffs=[w1; w2; ...], mu=..."
  size_t colon = entry.find(':');
  if (colon == std::string::npos) lp.fail("external torus entry needs 'ID: fields'");
  ExternalTorusText t;
  t.id = trim(entry.substr(0, colon));
  std::string m_word, l_word;
  for (const std::string& field : split_top(entry.substr(colon + 1), ',')) {
    if (field == "lagrangian") {
      t.lagrangian = true;
      continue;
    }
    size_t eq = field.find('=');
    if (eq == std::string::npos) lp.fail("external torus field needs key=value: '" + field + "'");
    std::string key = trim(field.substr(0, eq));
    std::string value = trim(field.substr(eq + 1));
    if (key == "m")
      m_word = value;
    else if (key == "l")
      l_word = value;
    else if (key == "mu")
      t.meridian = value;
    else if (key == "pushoffs") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        lp.fail("pushoffs needs [w1; w2; ...]");
      for (const std::string& w : split_top(value.substr(1, value.size() - 2), ';'))
        t.pushoffs.push_back(w);
    } else
      lp.fail("unknown external torus field '" + key + "'");
  }
  if (!m_word.empty() || !l_word.empty()) {
    if (m_word.empty() || l_word.empty() || !t.pushoffs.empty())
      lp.fail("external torus " + t.id + ": give either m= and l=, or pushoffs=[...]");
    t.pushoffs = {m_word, l_word};
  }
  if (t.pushoffs.empty()) lp.fail("external torus " + t.id + ": no pushoffs");
  return t;
}

ExternalText parse_external_args(const std::string& args, LineParser& lp) {
  ExternalText ext;
  for (const std::string& arg : split_top(args, ',')) {
    if (arg.empty()) continue;
    size_t eq = arg.find('=');
    if (eq == std::string::npos) lp.fail("external argument needs key=value: '" + arg + "'");
    std::string key = trim(arg.substr(0, eq));
    std::string value = trim(arg.substr(eq + 1));
    if (key == "name") {
      ext.name = value;
    } else if (key == "e") {
      ext.euler = std::stoll(value);
    } else if (key == "sigma") {
      ext.sigma = std::stoll(value);
    } else if (key == "gens") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        lp.fail("gens needs [n1 n2 ...]");
      std::istringstream in(value.substr(1, value.size() - 2));
      std::string n;
      while (in >> n) ext.gens.push_back(n);
    } else if (key == "rels") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        lp.fail("rels needs [w1; w2; ...]");
      for (const std::string& w : split_top(value.substr(1, value.size() - 2), ';'))
        if (!w.empty()) ext.rels.push_back(w);
    } else if (key == "tori") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        lp.fail("tori needs [ID: fields; ...]");
      for (const std::string& entry : split_top(value.substr(1, value.size() - 2), ';'))
        if (!entry.empty()) ext.tori.push_back(parse_external_torus(entry, lp));
    } else if (key == "structure") {
      if (value != "symplectic" && value != "unknown")
        lp.fail("external structure must be symplectic or unknown");
      ext.structure = value;
    } else if (key == "trust") {
      ext.trust.push_back(strip_quotes(value));
    } else {
      lp.fail("unknown external argument '" + key + "'");
    }
  }
  return ext;
}

Directive parse_block(LineParser& lp) {
  Directive d;
  d.kind = Directive::Kind::Block;
  d.name = lp.ident("state name");
  lp.expect_char('=', "after state name");
  d.block.kind = lp.ident("block kind");
  std::string args;
  if (lp.peek() == '(') args = lp.bracketed('(', ')');
  if (!lp.at_end()) lp.fail("trailing characters after block directive");

  if (d.block.kind == "external") {
    d.block.external = parse_external_args(args, lp);
    return d;
  }
  for (const std::string& arg : split_top(args, ',')) {
    if (arg.empty()) continue;
    if (arg == "twelve") {
      d.block.twelve = true;
    } else if (arg.rfind("prefix=", 0) == 0) {
      d.block.prefix = trim(arg.substr(7));
    } else if (!arg.empty() &&
               (std::isdigit(static_cast<unsigned char>(arg[0])) || arg[0] == '-')) {
      d.block.params.push_back(std::stoll(arg));
    } else {
      lp.fail("unknown block argument '" + arg + "'");
    }
  }
  return d;
}

Directive parse_sum(LineParser& lp) {
  Directive d;
  d.kind = Directive::Kind::Sum;
  d.name = lp.ident("state name");
  lp.expect_char('=', "after state name");
  d.sum.a_state = lp.ident("left state");
  lp.expect_char('.', "between state and torus");
  d.sum.a_torus = lp.ident("left torus id");
  lp.expect_char('~', "between the two fibers");
  d.sum.b_state = lp.ident("right state");
  lp.expect_char('.', "between state and torus");
  d.sum.b_torus = lp.ident("right torus id");
  lp.skip_ws();
  if (lp.peek() == '{') {
    std::string body = lp.bracketed('{', '}');
    for (const std::string& pair : split_top(body, ',')) {
      if (pair.empty()) continue;
      size_t eq = pair.find('=');
      if (eq == std::string::npos) lp.fail("identification needs key=word: '" + pair + "'");
      d.sum.ident.emplace_back(trim(pair.substr(0, eq)), trim(pair.substr(eq + 1)));
    }
  }
  if (!lp.at_end()) lp.fail("trailing characters after sum directive");
  return d;
}

}  // namespace

long long ScenarioScript::count(Directive::Kind k) const {
  return std::count_if(directives.begin(), directives.end(),
                       [k](const Directive& d) { return d.kind == k; });
}

ScenarioScript parse_scenario(std::string_view text, const std::string& name) {
  ScenarioScript script;
  script.name = name;

  int line_no = 0;
  size_t offset = 0;
  while (offset <= text.size()) {
    size_t eol = text.find('\n', offset);
    std::string_view raw =
        text.substr(offset, eol == std::string_view::npos ? std::string_view::npos : eol - offset);
    offset = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    // Strip comments (a '#' outside quotes).
    std::string line;
    bool quoted = false;
    for (char c : raw) {
      if (c == '"') quoted = !quoted;
      if (c == '#' && !quoted) break;
      line += c;
    }
    if (trim(line).empty()) continue;

    LineParser lp{line, line_no};
    std::string verb = lp.ident("directive");
    Directive d;
    if (verb == "block") {
      d = parse_block(lp);
    } else if (verb == "sum") {
      d = parse_sum(lp);
    } else if (verb == "perturb") {
      d.kind = Directive::Kind::Perturb;
      d.name = lp.ident("state name");
      while (!lp.at_end()) d.perturb_ids.push_back(lp.ident("torus id"));
    } else if (verb == "surgery") {
      d.kind = Directive::Kind::Surgery;
      d.name = lp.ident("state name");
      d.torus = lp.ident("torus id");
      lp.skip_ws();
      size_t tuple_at = lp.pos;
      std::string tuple = lp.bracketed('(', ')');
      std::vector<std::string> coeffs = split_top(tuple, ',');
      if (coeffs.size() != 3) {
        lp.pos = tuple_at;
        lp.fail("surgery tuple needs (p,q,r), got " + std::to_string(coeffs.size()) +
                " coefficients");
      }
      try {
        d.surgery.p = std::stoll(coeffs[0]);
        d.surgery.q = std::stoll(coeffs[1]);
        d.surgery.r = std::stoll(coeffs[2]);
      } catch (const std::exception&) {
        lp.pos = tuple_at;
        lp.fail("surgery tuple needs integer coefficients");
      }
      if (!lp.at_end()) lp.fail("trailing characters after surgery directive");
    } else if (verb == "blowup") {
      d.kind = Directive::Kind::BlowUp;
      d.name = lp.ident("state name");
      d.blowup_k = lp.integer("blow-up count");
      if (!lp.at_end()) lp.fail("trailing characters after blowup directive");
    } else if (verb == "blowdown") {
      d.kind = Directive::Kind::BlowDown;
      d.name = lp.ident("state name");
      if (!lp.at_end()) lp.fail("trailing characters after blowdown directive");
    } else if (verb == "assert") {
      d.kind = Directive::Kind::Assert;
      d.name = lp.ident("state name");
      d.assert_what = lp.ident("assertion kind");
      if (d.assert_what == "sphere_square_zero") {
        // no payload
      } else if (d.assert_what == "homeo_claim") {
        d.assert_value = lp.quoted("label");
      } else {
        lp.fail("unknown assertion '" + d.assert_what + "'");
      }
      if (!lp.at_end()) lp.fail("trailing characters after assert directive");
    } else if (verb == "expect") {
      d.kind = Directive::Kind::Expect;
      d.name = lp.ident("state name");
      d.expect_key = lp.ident("expectation key");
      if (std::find(kExpectKeys.begin(), kExpectKeys.end(), d.expect_key) == kExpectKeys.end())
        lp.fail("unknown expectation key '" + d.expect_key + "'");
      d.expect_value = strip_quotes(lp.rest());
      if (d.expect_value.empty()) lp.fail("expectation needs a value");
      if (kIntExpectKeys.count(d.expect_key)) {
        try {
          (void)std::stoll(d.expect_value);
        } catch (const std::exception&) {
          lp.fail("expectation key '" + d.expect_key + "' needs an integer value");
        }
      }
    } else {
      LineParser err{line, line_no};
      err.fail("unknown directive '" + verb + "'");
    }
    d.line = line_no;
    script.directives.push_back(std::move(d));
  }
  return script;
}

std::string print_scenario(const ScenarioScript& script) {
  std::string out;
  auto quote_if_needed = [](const std::string& v) {
    if (v.empty() || v.find_first_of(" #") != std::string::npos) return "\"" + v + "\"";
    return v;
  };
  for (const Directive& d : script.directives) {
    switch (d.kind) {
      case Directive::Kind::Block: {
        out += "block " + d.name + " = " + d.block.kind;
        if (d.block.external) {
          const ExternalText& x = *d.block.external;
          out += "(name=" + x.name + ", e=" + std::to_string(x.euler) +
                 ", sigma=" + std::to_string(x.sigma);
          out += ", gens=[";
          for (size_t i = 0; i < x.gens.size(); ++i) out += (i ? " " : "") + x.gens[i];
          out += "], rels=[";
          for (size_t i = 0; i < x.rels.size(); ++i) out += (i ? "; " : "") + x.rels[i];
          out += "], tori=[";
          for (size_t i = 0; i < x.tori.size(); ++i) {
            const ExternalTorusText& t = x.tori[i];
            if (i) out += "; ";
            out += t.id + ": ";
            if (t.pushoffs.size() == 2) {
              out += "m=" + t.pushoffs[0] + ", l=" + t.pushoffs[1];
            } else {
              out += "pushoffs=[";
              for (size_t j = 0; j < t.pushoffs.size(); ++j)
                out += (j ? "; " : "") + t.pushoffs[j];
              out += "]";
            }
            out += ", mu=" + t.meridian;
            if (t.lagrangian) out += ", lagrangian";
          }
          out += "], structure=" + x.structure;
          for (const std::string& t : x.trust) out += ", trust=\"" + t + "\"";
          out += ")";
        } else {
          std::vector<std::string> args;
          for (long long p : d.block.params) args.push_back(std::to_string(p));
          if (d.block.twelve) args.push_back("twelve");
          if (!d.block.prefix.empty()) args.push_back("prefix=" + d.block.prefix);
          if (!args.empty()) {
            out += "(";
            for (size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i];
            out += ")";
          }
        }
        break;
      }
      case Directive::Kind::Perturb: {
        out += "perturb " + d.name;
        for (const std::string& id : d.perturb_ids) out += " " + id;
        break;
      }
      case Directive::Kind::Surgery:
        out += "surgery " + d.name + " " + d.torus + " " + d.surgery.to_string();
        break;
      case Directive::Kind::Sum: {
        out += "sum " + d.name + " = " + d.sum.a_state + "." + d.sum.a_torus + " ~ " +
               d.sum.b_state + "." + d.sum.b_torus;
        if (!d.sum.ident.empty()) {
          out += " {";
          for (size_t i = 0; i < d.sum.ident.size(); ++i) {
            if (i) out += ", ";
            out += d.sum.ident[i].first + "=" + d.sum.ident[i].second;
          }
          out += "}";
        }
        break;
      }
      case Directive::Kind::BlowUp:
        out += "blowup " + d.name + " " + std::to_string(d.blowup_k);
        break;
      case Directive::Kind::BlowDown:
        out += "blowdown " + d.name;
        break;
      case Directive::Kind::Assert:
        out += "assert " + d.name + " " + d.assert_what;
        if (d.assert_what == "homeo_claim") out += " \"" + d.assert_value + "\"";
        break;
      case Directive::Kind::Expect:
        out += "expect " + d.name + " " + d.expect_key + " " + quote_if_needed(d.expect_value);
        break;
    }
    out += "\n";
  }
  return out;
}

std::string verdict_to_string(ExpectationResult::Verdict v) {
  switch (v) {
    case ExpectationResult::Verdict::Pass:
      return "pass";
    case ExpectationResult::Verdict::Fail:
      return "fail";
    case ExpectationResult::Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

bool ScenarioResult::any_fail() const {
  for (const StateReport& s : states)
    for (const ExpectationResult& e : s.expectations)
      if (e.verdict == ExpectationResult::Verdict::Fail) return true;
  return false;
}

namespace {

ExpectationResult evaluate_expectation(const std::string& state, const std::string& key,
                                       const std::string& expected, const FinalReport& rep) {
  ExpectationResult r;
  r.state = state;
  r.key = key;
  r.expected = expected;

  auto decide = [&](const std::string& actual, bool conclusive) {
    r.actual = actual;
    if (!conclusive)
      r.verdict = ExpectationResult::Verdict::Inconclusive;
    else
      r.verdict = (actual == expected) ? ExpectationResult::Verdict::Pass
                                       : ExpectationResult::Verdict::Fail;
  };

  if (key == "pi1") {
    decide(rep.pi1.to_string(), rep.pi1.certified());
  } else if (key == "e") {
    decide(std::to_string(rep.record.euler), true);
  } else if (key == "sigma") {
    decide(std::to_string(rep.record.signature), true);
  } else if (key == "b1") {
    decide(std::to_string(rep.betti.b1), true);
  } else if (key == "b2") {
    decide(std::to_string(rep.betti.b2), true);
  } else if (key == "loci") {
    auto loci = rep.loci();
    decide(loci ? std::to_string(*loci) : "unknown", loci.has_value());
  } else if (key == "spin") {
    Tri s = rep.record.spin();
    decide(tri_to_string(s), s != Tri::Unknown);
  } else if (key == "twist") {
    decide(rep.twisted ? "twisted" : "untwisted", true);
  } else if (key == "homeo") {
    decide(rep.label.label, rep.label.classified());
  } else if (key == "almost_complex") {
    decide(tri_to_string(rep.almost_complex), rep.almost_complex != Tri::Unknown);
  } else {
    throw Error("unknown expectation key '" + key + "'");
  }
  return r;
}

ManifoldState instantiate_from_directive(const BlockDirective& b) {
  if (b.kind == "product_surfaces") {
    if (b.params.size() != 2) throw ModelError("product_surfaces needs two genus parameters");
    return make_product_surfaces(static_cast<int>(b.params[0]), static_cast<int>(b.params[1]),
                                 b.prefix, b.twelve);
  }
  if (b.kind == "four_torus") {
    if (!b.params.empty()) throw ModelError("four_torus takes no parameters");
    return make_four_torus(b.prefix);
  }
  if (b.kind == "t2_x_sigma") {
    if (b.params.size() != 1) throw ModelError("t2_x_sigma needs one genus parameter");
    return make_t2_x_sigma(static_cast<int>(b.params[0]), b.prefix);
  }
  if (b.kind == "t2_x_s2") {
    if (!b.params.empty()) throw ModelError("t2_x_s2 takes no parameters");
    return make_t2_x_s2(b.prefix);
  }
  if (b.kind == "external") {
    const ExternalText& x = *b.external;
    ExternalDecl decl;
    decl.name = x.name;
    decl.euler = x.euler;
    decl.sigma = x.sigma;
    decl.gens = x.gens;
    for (const std::string& w : x.rels) decl.relators.push_back(parse_word(w, decl.gens));
    for (const ExternalTorusText& t : x.tori) {
      ExternalTorusDecl td;
      td.id = t.id;
      for (const std::string& w : t.pushoffs) td.pushoffs.push_back(parse_word(w, decl.gens));
      td.meridian = parse_word(t.meridian, decl.gens);
      td.tag = t.lagrangian ? GeomTag::Lagrangian : GeomTag::Symplectic;
      decl.tori.push_back(std::move(td));
    }
    decl.structure =
        x.structure == "symplectic" ? StructureKind::Symplectic : StructureKind::Unknown;
    decl.trust = x.trust;
    return make_external(decl);
  }
  throw ModelError("unknown block kind '" + b.kind + "'");
}

}  // namespace

ScenarioResult execute_scenario(const ScenarioScript& script, const Budgets& budgets) {
  ScenarioResult result;
  result.scenario = script.name;
  result.budgets = budgets;

  std::map<std::string, ManifoldState> states;
  std::vector<std::string> order;
  std::set<std::string> consumed;
  std::map<std::string, ScenarioAssertions> assertions;
  std::vector<const Directive*> expects;

  auto live_state = [&](const std::string& name) -> ManifoldState& {
    auto it = states.find(name);
    if (it == states.end()) throw ModelError("unknown state '" + name + "'");
    if (consumed.count(name))
      throw ModelError("state '" + name + "' was consumed by a fiber sum");
    return it->second;
  };
  auto bind = [&](const std::string& name, ManifoldState s) {
    if (states.count(name)) throw ModelError("state '" + name + "' is already bound");
    states.emplace(name, std::move(s));
    order.push_back(name);
  };

  for (size_t i = 0; i < script.directives.size(); ++i) {
    const Directive& d = script.directives[i];
    try {
      switch (d.kind) {
        case Directive::Kind::Block:
          bind(d.name, instantiate_from_directive(d.block));
          break;
        case Directive::Kind::Perturb:
          live_state(d.name) = perturb_tori(live_state(d.name), d.perturb_ids);
          break;
        case Directive::Kind::Surgery:
          live_state(d.name) = torus_surgery(live_state(d.name), d.torus, d.surgery);
          break;
        case Directive::Kind::Sum: {
          ManifoldState& a = live_state(d.sum.a_state);
          ManifoldState& b = live_state(d.sum.b_state);
          const TorusDescriptor* ta = a.find_torus(d.sum.a_torus);
          if (!ta) throw ModelError("unknown torus " + d.sum.a_torus);
          // Identification keys: m,l for tori; p1..p2g for genus-g fibers.
          std::vector<std::string> slots;
          if (ta->pushoffs.size() == 2) {
            slots = {"m", "l"};
          } else {
            for (size_t k = 1; k <= ta->pushoffs.size(); ++k)
              slots.push_back("p" + std::to_string(k));
          }
          std::vector<FreeWord> ident(slots.size());
          std::vector<bool> seen(slots.size(), false);
          for (const auto& [key, word] : d.sum.ident) {
            auto it = std::find(slots.begin(), slots.end(), key);
            if (it == slots.end())
              throw ModelError("identification key '" + key + "' does not name a pushoff slot");
            size_t slot = static_cast<size_t>(it - slots.begin());
            if (seen[slot]) throw ModelError("identification key '" + key + "' given twice");
            seen[slot] = true;
            ident[slot] = parse_word(word, b.pres.names());
          }
          for (size_t k = 0; k < slots.size(); ++k)
            if (!seen[k]) throw ModelError("identification is missing key '" + slots[k] + "'");
          ManifoldState summed =
              symplectic_fiber_sum(a, d.sum.a_torus, b, d.sum.b_torus, ident);
          consumed.insert(d.sum.a_state);
          consumed.insert(d.sum.b_state);
          bind(d.name, std::move(summed));
          break;
        }
        case Directive::Kind::BlowUp:
          live_state(d.name) = blow_up(live_state(d.name), d.blowup_k);
          break;
        case Directive::Kind::BlowDown:
          live_state(d.name) = blow_down(live_state(d.name));
          break;
        case Directive::Kind::Assert: {
          live_state(d.name);  // must resolve
          if (d.assert_what == "sphere_square_zero") {
            assertions[d.name].sphere_square_nonneg = true;
          } else {
            (void)parse_label(d.assert_value);  // validate early
            assertions[d.name].homeo_claim = d.assert_value;
          }
          break;
        }
        case Directive::Kind::Expect:
          live_state(d.name);  // must resolve now; the state must also survive
          expects.push_back(&d);
          break;
      }
    } catch (const ParseError& e) {
      throw Error("directive " + std::to_string(i + 1) + " (line " + std::to_string(d.line) +
                  "): " + e.what());
    } catch (const ModelError& e) {
      throw Error("directive " + std::to_string(i + 1) + " (line " + std::to_string(d.line) +
                  "): " + e.what());
    }
  }

  for (const Directive* d : expects)
    if (consumed.count(d->name))
      throw Error("expect on line " + std::to_string(d->line) + ": state '" + d->name +
                  "' was consumed by a fiber sum");

  for (const std::string& name : order) {
    if (consumed.count(name)) continue;
    StateReport sr;
    sr.name = name;
    ScenarioAssertions sa;
    if (auto it = assertions.find(name); it != assertions.end()) sa = it->second;
    try {
      sr.report = finalize_report(states.at(name), sa, budgets);
    } catch (const ModelError& e) {
      throw Error("finalize of state '" + name + "': " + e.what());
    }
    for (const Directive* d : expects) {
      if (d->name != name) continue;
      sr.expectations.push_back(
          evaluate_expectation(name, d->expect_key, d->expect_value, sr.report));
    }
    result.states.push_back(std::move(sr));
  }
  return result;
}

namespace {

ojson report_to_json(const StateReport& sr) {
  const FinalReport& rep = sr.report;
  ojson j;
  j["name"] = sr.name;
  ojson pi1;
  pi1["tag"] = rep.pi1.to_string();
  pi1["evidence"] = rep.pi1.evidence;
  pi1["abelianization"] = rep.ab.to_string();
  j["pi1"] = pi1;
  j["e"] = rep.record.euler;
  j["sigma"] = rep.record.signature;
  j["b1"] = rep.betti.b1;
  j["b2"] = rep.betti.b2;
  j["b2plus"] = rep.betti.b2_plus;
  j["b2minus"] = rep.betti.b2_minus;
  j["spin"] = tri_to_string(rep.record.spin());
  j["structure"] = rep.structure.to_string();
  if (auto loci = rep.loci())
    j["loci"] = *loci;
  else
    j["loci"] = nullptr;
  j["twist"] = rep.twisted ? "twisted" : "untwisted";
  j["label"] = rep.label.label;
  j["label_basis"] = rep.label.basis;
  j["annotations"] = rep.annotations;
  ojson ex = ojson::array();
  for (const ExpectationResult& e : sr.expectations) {
    ojson je;
    je["key"] = e.key;
    je["expected"] = e.expected;
    je["actual"] = e.actual;
    je["verdict"] = verdict_to_string(e.verdict);
    ex.push_back(je);
  }
  j["expectations"] = ex;
  return j;
}

std::string human_report(const std::vector<ScenarioResult>& results) {
  std::ostringstream out;
  for (const ScenarioResult& res : results) {
    for (const StateReport& sr : res.states) {
      const FinalReport& rep = sr.report;
      out << "== " << res.scenario << " / " << sr.name << " ==\n";
      out << "  pi1          " << rep.pi1.to_string() << "\n";
      for (const std::string& ev : rep.pi1.evidence) out << "    . " << ev << "\n";
      out << "  H1           " << rep.ab.to_string() << "\n";
      out << "  e " << rep.record.euler << "   sigma " << rep.record.signature << "   b1 "
          << rep.betti.b1 << "   b2 " << rep.betti.b2 << " (b2+ " << rep.betti.b2_plus << ", b2- "
          << rep.betti.b2_minus << ")\n";
      out << "  spin " << tri_to_string(rep.record.spin()) << "   structure "
          << rep.structure.to_string();
      if (auto loci = rep.loci()) out << "   loci " << *loci;
      out << "   twist " << (rep.twisted ? "twisted" : "untwisted") << "\n";
      out << "  homeo        " << rep.label.label;
      if (rep.label.classified()) out << "   [" << rep.label.basis << "]";
      out << "\n";
      out << "  almost_cplx  " << tri_to_string(rep.almost_complex) << "\n";
      out << "  presentation " << rep.simplified.to_string() << "\n";
      for (const std::string& a : rep.annotations) out << "  note: " << a << "\n";
      for (const ExpectationResult& e : sr.expectations) {
        out << "  expect " << e.key << " = " << e.expected << "  ->  " << e.actual << "  ["
            << verdict_to_string(e.verdict) << "]\n";
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string emit_report(const std::vector<ScenarioResult>& results, ReportFormat format) {
  if (format == ReportFormat::Human) return human_report(results);
  ojson root = ojson::array();
  for (const ScenarioResult& res : results) {
    ojson js;
    js["scenario"] = res.scenario;
    ojson budgets;
    budgets["max_cosets"] = res.budgets.max_cosets;
    budgets["tietze_budget"] = res.budgets.tietze_budget;
    budgets["relator_cap"] = res.budgets.relator_cap;
    js["budgets"] = budgets;
    ojson states = ojson::array();
    for (const StateReport& sr : res.states) states.push_back(report_to_json(sr));
    js["states"] = states;
    root.push_back(js);
  }
  return root.dump(2) + "\n";
}

}  // namespace gc4
