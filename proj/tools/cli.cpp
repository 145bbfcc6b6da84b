#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qsym/io.hpp"
#include "qsym/verify.hpp"

namespace qsym::cli {
namespace {

struct Options {
  std::vector<std::string> elements;
  std::string to;
  std::string basis;
  std::string at;
  std::vector<int> nus;
  int max_grade = 6;
  bool check_oracle = false;
  std::string output = "text";
  std::uint64_t seed = 1;
  std::string config;
  int n = -1;
  int oracle_vars = 0;
  int random_cases = 200;
  std::vector<std::string> suites;
  std::string kind;
};

// Raised for anything that should end with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<int> first_nu(const Options& o) {
  if (o.nus.empty()) return std::nullopt;
  return o.nus.front();
}

Basis basis_arg(const std::string& name, const Options& o) {
  try {
    return basis_from_name(name, first_nu(o));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

QSymElement element_arg(const std::string& text, const Options& o) { return parse_element(text, first_nu(o)); }

struct Point {
  std::optional<Rat> q, t;
};

Point parse_point(const std::string& spec) {
  Point p;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--at expects q=<rat>,t=<rat>, got '" + part + "'");
    std::string key = part.substr(0, eq);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    Rat value = parse_rat(part.substr(eq + 1));
    if (key == "q")
      p.q = value;
    else if (key == "t")
      p.t = value;
    else
      throw UsageError("--at knows only q and t, got '" + key + "'");
  }
  return p;
}

QSymElement specialize(const QSymElement& x, const std::string& at) {
  if (at.empty()) return x;
  Point p = parse_point(at);
  RatFunc q = p.q ? RatFunc(*p.q) : RatFunc::q();
  RatFunc t = p.t ? RatFunc(*p.t) : RatFunc::t();
  QSymElement out(x.basis());
  for (const auto& [alpha, c] : x.terms()) {
    if (p.q && p.t)
      out.add(alpha, RatFunc(c.eval(*p.q, *p.t)));
    else
      out.add(alpha, c.substitute(q, t));
  }
  return out;
}

TensorElement specialize(const TensorElement& x, const std::string& at) {
  if (at.empty()) return x;
  Point p = parse_point(at);
  RatFunc q = p.q ? RatFunc(*p.q) : RatFunc::q();
  RatFunc t = p.t ? RatFunc(*p.t) : RatFunc::t();
  TensorElement out(x.left_basis(), x.right_basis());
  for (const auto& [key, c] : x.terms()) out.add(key.first, key.second, c.substitute(q, t));
  return out;
}

bool json_output(const Options& o) { return o.output == "json"; }

void print(std::ostream& out, const Options& o, const QSymElement& x) {
  if (json_output(o))
    out << to_json(x).dump(2) << '\n';
  else
    out << x.to_string() << '\n';
}

void print(std::ostream& out, const Options& o, const TensorElement& x) {
  if (json_output(o))
    out << to_json(x).dump(2) << '\n';
  else
    out << x.to_string() << '\n';
}

// Brings both operands into one basis: the --basis one, or their shared one.
Basis common_basis(const std::vector<QSymElement>& xs, const Options& o) {
  if (!o.basis.empty()) return basis_arg(o.basis, o);
  for (const auto& x : xs)
    if (x.basis() != xs.front().basis())
      throw UsageError("operands are in different bases (" + xs.front().basis().name() + " and " + x.basis().name() +
                       "); pass --basis to choose one");
  return xs.front().basis();
}

// ---------------------------------------------------------------- commands

int cmd_expand(const Options& o, std::ostream& out) {
  QSymElement x = element_arg(o.elements.at(0), o);
  Basis target = o.to.empty() ? x.basis() : basis_arg(o.to, o);
  print(out, o, specialize(convert(x, target), o.at));
  return kOk;
}

int cmd_mul(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<QSymElement> xs{element_arg(o.elements.at(0), o), element_arg(o.elements.at(1), o)};
  Basis b = common_basis(xs, o);
  QSymElement x = convert(xs[0], b), y = convert(xs[1], b);
  QSymElement result = mul(x, y);
  if (o.check_oracle) {
    json diffs = json::array();
    for (const auto& [alpha, ca] : x.terms())
      for (const auto& [beta, cb] : y.terms()) {
        if (alpha.size() + beta.size() > TruncPoly::kMaxVars)
          throw UsageError("product too large for the oracle (degree above " + std::to_string(TruncPoly::kMaxVars) + ")");
        std::optional<int> vars;
        if (o.oracle_vars > 0) vars = o.oracle_vars;
        ProductCheck pc = verify_product(b, alpha, beta, vars);
        for (const auto& d : pc.diffs) {
          json j = to_json(d);
          j["factors"] = {to_json(alpha), to_json(beta)};
          diffs.push_back(j);
        }
      }
    if (!diffs.empty()) {
      err << "oracle mismatch in " << diffs.size() << " coefficient(s)\n";
      out << diffs.dump(2) << '\n';
      return kVerifyFailed;
    }
  }
  print(out, o, specialize(result, o.at));
  return kOk;
}

int cmd_comul(const Options& o, std::ostream& out, std::ostream& err) {
  QSymElement x0 = element_arg(o.elements.at(0), o);
  QSymElement x = convert(x0, common_basis({x0}, o));
  TensorElement result = comul(x);
  if (o.check_oracle) {
    TensorElement check = comul_via_M(x);
    if (!(check == result)) {
      err << "coproduct rule disagrees with the coproduct computed in M\n";
      out << json{{"rule", to_json(result)}, {"via_M", to_json(check)}}.dump(2) << '\n';
      return kVerifyFailed;
    }
  }
  print(out, o, specialize(result, o.at));
  return kOk;
}

int cmd_antipode(const Options& o, std::ostream& out, std::ostream& err) {
  QSymElement x0 = element_arg(o.elements.at(0), o);
  QSymElement x = convert(x0, common_basis({x0}, o));
  QSymElement result = antipode(x);
  if (o.check_oracle) {
    // m(S ⊗ id)Δ = uε, computed in M.
    const Basis M(BasisKind::M);
    QSymElement xm = to_M(x), lhs(M);
    for (TensorElement d = comul(xm); const auto& [key, c] : d.terms())
      lhs += mul(antipode_M(QSymElement::single(M, key.first)), QSymElement::single(M, key.second)) * c;
    QSymElement rhs = QSymElement::unit(M) * counit(xm);
    if (!(lhs == rhs)) {
      err << "antipode identity fails: " << lhs.to_string() << '\n';
      return kVerifyFailed;
    }
  }
  print(out, o, specialize(result, o.at));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& s : o.suites) {
    if (s == "all") {
      names.insert(names.end(), suite_names().begin(), suite_names().end());
    } else if (is_suite(s)) {
      names.push_back(s);
    } else {
      std::string known;
      for (const auto& n : suite_names()) known += " " + n;
      throw UsageError("unknown suite '" + s + "'; known suites:" + known);
    }
  }
  VerifyConfig cfg;
  cfg.max_grade = o.max_grade;
  if (!o.nus.empty()) cfg.nus = o.nus;
  if (o.oracle_vars > 0) cfg.oracle_vars = o.oracle_vars;
  cfg.seed = o.seed;
  cfg.random_cases = o.random_cases;

  bool ok = true;
  json report = json::array();
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, cfg);
    ok = ok && r.ok();
    if (json_output(o)) {
      report.push_back(to_json(r));
      continue;
    }
    out << (r.ok() ? "PASS " : "FAIL ") << r.suite << "  cases=" << r.cases << " failed=" << r.failed << " time="
        << std::fixed << std::setprecision(2) << r.seconds << "s\n";
    for (const auto& f : r.failures) {
      out << "  - " << f.check;
      if (!f.detail.empty()) out << ": " << f.detail;
      out << '\n';
    }
  }
  if (json_output(o)) out << json{{"ok", ok}, {"suites", report}}.dump(2) << '\n';
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- tables

struct Table {
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  json rows_json = json::array();
};

Table transition_table(const std::vector<Subset>& sets, const std::function<QSymElement(const Composition&)>& row_of) {
  Table t;
  for (const auto& j : sets) t.columns.push_back(j.to_string());
  for (const auto& i : sets) {
    QSymElement row = row_of(comp_of(i));
    std::vector<std::string> cells;
    json values = json::array();
    for (const auto& j : sets) {
      std::string v = row.coefficient(comp_of(j)).to_string();
      cells.push_back(v);
      values.push_back(v);
    }
    t.rows.emplace_back(i.to_string(), cells);
    t.rows_json.push_back({{"set", i.elements()}, {"values", values}});
  }
  return t;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("table needs --n <grade> with n >= 1");
  if (o.n > 10) throw UsageError("table grades above 10 are not supported");
  const int n = o.n;
  const auto sets = all_subsets(n);
  auto need_nu = [&] {
    if (o.nus.empty()) throw UsageError("table " + o.kind + " needs --nu");
    return o.nus.front();
  };

  Table t;
  int nu = 0;
  if (o.kind == "wt") {
    for (int i = 1; i < n; ++i) t.columns.push_back(std::to_string(i));
    for (const auto& s : sets) {
      std::vector<std::string> cells;
      for (int w : weights(s)) cells.push_back(std::to_string(w));
      t.rows.emplace_back(s.to_string(), cells);
      t.rows_json.push_back({{"set", s.elements()}, {"values", weights(s)}});
    }
  } else if (o.kind == "G-to-L") {
    t = transition_table(sets, [](const Composition& a) { return g_in_L(a); });
  } else if (o.kind == "L-to-G") {
    t = transition_table(sets, [](const Composition& a) { return l_in_G(a); });
  } else if (o.kind == "L-to-K") {
    nu = need_nu();
    t = transition_table(sets, [nu](const Composition& a) { return l_in_K(a, nu); });
  } else if (o.kind == "K-to-L") {
    nu = need_nu();
    t = transition_table(sets, [nu](const Composition& a) { return k_in_L(a, nu); });
  } else if (o.kind == "D-to-M") {
    t = transition_table(sets, [](const Composition& a) { return expand_in_M(BasisKind::D, a); });
  } else {
    throw UsageError("unknown table '" + o.kind + "'; known: wt, L-to-K, K-to-L, G-to-L, L-to-G, D-to-M");
  }

  if (json_output(o)) {
    json j{{"kind", o.kind}, {"n", n}, {"columns", t.columns}, {"rows", t.rows_json}};
    if (nu) j["nu"] = nu;
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::size_t first = 0;
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& [label, cells] : t.rows) {
    first = std::max(first, label.size());
    for (std::size_t c = 0; c < cells.size(); ++c) width[c] = std::max(width[c], cells[c].size());
  }
  auto line = [&](const std::string& label, const std::vector<std::string>& cells) {
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(first)) << label;
    for (std::size_t c = 0; c < cells.size(); ++c) os << "  " << std::setw(static_cast<int>(width[c])) << cells[c];
    std::string s = os.str();
    s.erase(s.find_last_not_of(' ') + 1);
    out << s << '\n';
  };
  line("", t.columns);
  for (const auto& [label, cells] : t.rows) line(label, cells);
  return kOk;
}

// ---------------------------------------------------------------- config

void apply_config(Options& o, const CLI::App& sub) {
  std::string path = o.config;
  if (path.empty()) {
    if (const char* env = std::getenv("QSYM_CONFIG")) path = env;
  }
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto unset = [&](const char* flag) {
    try {
      return sub.get_option(flag)->count() == 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  try {
    if (j.contains("max_grade") && unset("--max-grade")) o.max_grade = j.at("max_grade").get<int>();
    if (j.contains("nus") && unset("--nu")) o.nus = j.at("nus").get<std::vector<int>>();
    if (j.contains("oracle_vars") && unset("--oracle-vars") && !j.at("oracle_vars").is_null())
      o.oracle_vars = j.at("oracle_vars").get<int>();
    if (j.contains("output") && unset("--output")) o.output = j.at("output").get<std::string>();
    if (j.contains("seed") && unset("--seed")) o.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("random_cases") && unset("--random-cases")) o.random_cases = j.at("random_cases").get<int>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
}

void validate(const Options& o) {
  if (o.output != "text" && o.output != "json") throw UsageError("--output must be text or json");
  if (o.max_grade < 0) throw UsageError("--max-grade must be nonnegative");
  for (int nu : o.nus)
    if (nu < 2) throw UsageError("every --nu must be at least 2");
}

void report_parse_error(std::ostream& err, const std::string& input, const ParseError& e) {
  err << "parse error: " << e.what() << '\n';
  if (e.position() <= input.size() && input.find('\n') == std::string::npos) {
    err << "  " << input << '\n';
    err << "  " << std::string(e.position(), ' ') << "^\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quasisymmetric function algebra over Q(q,t)", "qsym"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--nu", o.nus, "Parameter nu for K bases and class functions (repeatable)");
    sub->add_option("--output", o.output, "Output format: text or json");
    sub->add_option("--config", o.config, "JSON config file (default: $QSYM_CONFIG)");
  };
  auto algebra = [&](CLI::App* sub) {
    sub->add_option("--basis", o.basis, "Basis whose rule is used; operands are converted to it");
    sub->add_flag("--check-oracle", o.check_oracle, "Cross-check the result independently");
    sub->add_option("--at", o.at, "Specialize coefficients, e.g. q=0 or q=1/2,t=-1");
    sub->add_option("--oracle-vars", o.oracle_vars, "Number of oracle variables");
    common(sub);
  };

  auto* expand = app.add_subcommand("expand", "Rewrite an element in another basis");
  expand->add_option("element", o.elements, "Element, e.g. \"D[2,1]\" or JSON")->required()->expected(1);
  expand->add_option("--to", o.to, "Target basis");
  expand->add_option("--at", o.at, "Specialize coefficients, e.g. q=0 or q=1/2,t=-1");
  common(expand);

  auto* mulc = app.add_subcommand("mul", "Multiply two elements");
  mulc->add_option("elements", o.elements, "Two elements")->required()->expected(2);
  algebra(mulc);

  auto* comulc = app.add_subcommand("comul", "Coproduct of an element");
  comulc->add_option("element", o.elements, "Element")->required()->expected(1);
  algebra(comulc);

  auto* antic = app.add_subcommand("antipode", "Antipode of an element");
  antic->add_option("element", o.elements, "Element")->required()->expected(1);
  algebra(antic);

  auto* verifyc = app.add_subcommand("verify", "Run verification suites");
  verifyc->add_option("suite", o.suites, "Suite names, or all")->required();
  verifyc->add_option("--max-grade", o.max_grade, "Largest grade checked");
  verifyc->add_option("--seed", o.seed, "Seed for randomized cases");
  verifyc->add_option("--oracle-vars", o.oracle_vars, "Number of oracle variables");
  verifyc->add_option("--random-cases", o.random_cases, "Randomized cases per nu");
  common(verifyc);

  auto* tablec = app.add_subcommand("table", "Print a transition or weight table");
  tablec->add_option("kind", o.kind, "wt, L-to-K, K-to-L, G-to-L, L-to-G or D-to-M")->required();
  tablec->add_option("--n", o.n, "Grade");
  common(tablec);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string current_input;
  try {
    apply_config(o, *sub);
    validate(o);
    if (sub == expand) {
      current_input = o.elements.at(0);
      return cmd_expand(o, out);
    }
    if (sub == mulc) return cmd_mul(o, out, err);
    if (sub == comulc) return cmd_comul(o, out, err);
    if (sub == antic) return cmd_antipode(o, out, err);
    if (sub == verifyc) return cmd_verify(o, out);
    if (sub == tablec) return cmd_table(o, out);
  } catch (const ParseError& e) {
    if (current_input.empty() && o.elements.size() == 1) current_input = o.elements.front();
    report_parse_error(err, current_input, e);
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotQuasisymmetricError& e) {
    err << "oracle error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace qsym::cli
