// One pass/fail line per acceptance criterion; exits nonzero on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qsym/verify.hpp"

using namespace qsym;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  std::string note;
};

QSymElement el(const char* s) { return parse_element(s); }

Outcome fixtures() {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) bad.push_back(what);
  };
  const RatFunc q = RatFunc::q();

  expect(product_rule(BasisKind::D, {2, 1}, {2}) ==
             el("D[2,1,2] + (q+t)*D[2,3] + D[2,2,1] + (q+t)*D[4,1] + t*D[2,3] + (q+t)*t*D[5] + D[2,2,1] + t*D[4,1]"),
         "D product");

  QSymElement g(BasisKind::G);
  auto add = [&](std::initializer_list<int> k, RatFunc c) { g.add(comp_of(Subset(4, k)), c); };
  add({1}, 1);
  add({2}, 1 - q);
  add({3}, 1);
  add({1, 2}, 1);
  add({1, 3}, 1 - q + q * q);
  add({2, 3}, 1 + q * q - q.pow(3));
  expect(product_rule(BasisKind::G, comp_of(Subset(2)), comp_of(Subset(2, {1}))) == g, "G product");

  TensorElement dg(BasisKind::G, BasisKind::G);
  dg.add({}, {1, 2, 1}, 1);
  dg.add({1}, {2, 1}, 1);
  dg.add({1}, {1, 1, 1}, q * (1 - q));
  dg.add({1, 2}, {1}, 1);
  dg.add({1, 2, 1}, {}, 1);
  dg.add({1, 1}, {1, 1}, 1 - q * q);
  expect(coproduct_rule(BasisKind::G, {1, 2, 1}) == dg, "G coproduct");

  for (int nu : {2, 3, 5}) {
    ClassFunction got = m_A(chi_dot(Subset(4, {2, 3}), nu), chi_dot(Subset(3, {2}), nu), Subset(8, {1, 3, 4}));
    IndexedClassFunction atoms =
        from_atoms(nu, {{1, Atom::unit()}, {2, Atom::regular_bar()}, {3, Atom::unit()}, {4, Atom::unit()},
                        {5, Atom::unit()}, {6, Atom::unit()}});
    expect(got == atoms.to_class_function(7), "chi-dot product example");

    ClassTensor dk(nu);
    dk.add(Subset(0), Subset(6, {1, 4}), 1);
    dk.add(Subset(2, {1}), Subset(4, {2}), 1);
    dk.add(Subset(3, {1}), Subset(3, {1}), 1);
    dk.add(Subset(5, {1, 4}), Subset(1), 1);
    dk.add(Subset(6, {1, 4}), Subset(0), 1);
    expect(kappa_coproduct({1, 3, 2}, nu) == dk && coprod(kappa(Subset(6, {1, 4}), nu)) == dk, "kappa coproduct");
  }

  const std::vector<std::vector<int>> table1{{1, 1, 1}, {1, 2, 2}, {1, 1, 2}, {1, 1, 1},
                                             {1, 2, 3}, {1, 2, 2}, {1, 1, 2}, {1, 2, 3}};
  auto subsets = all_subsets(4);
  bool table_ok = subsets.size() == table1.size();
  for (std::size_t k = 0; table_ok && k < subsets.size(); ++k) table_ok = weights(subsets[k]) == table1[k];
  expect(table_ok, "Table 1");

  std::string note;
  for (const auto& b : bad) note += (note.empty() ? "mismatch: " : ", ") + b;
  return {bad.empty(), note};
}

Outcome suite(const std::string& name, int max_grade, std::vector<int> nus = {2, 3}) {
  VerifyConfig cfg;
  cfg.max_grade = max_grade;
  cfg.nus = std::move(nus);
  SuiteResult r = run_suite(name, cfg);
  std::string note = name + " cases=" + std::to_string(r.cases) + " failed=" + std::to_string(r.failed);
  if (!r.failures.empty()) note += " first: " + r.failures.front().check + " " + r.failures.front().detail;
  return {r.ok(), note};
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked examples match the fixed fixtures", 5, fixtures},
      {2, "product rules equal the polynomial oracle, |a|+|b| <= 6", 600, [] { return suite("oracle-products", 6); }},
      {3, "Hopf axioms in M, grade <= 4", 0, [] { return suite("hopf-axioms", 4); }},
      {4, "specializations, |a| <= 6", 0, [] { return suite("specializations", 6); }},
      {5, "categorification, m+n <= 6, nu in {2,3}", 0, [] { return suite("scf-morphism", 6); }},
      {6, "kappa product and coproduct rules, nu in {2,3,5}", 0, [] { return suite("kappa-rules", 6, {2, 3, 5}); }},
      {7, "D-kappa bridge and transition lemmas, n <= 6", 0, [] { return suite("transitions", 6); }},
      {8, "Psi/Phi bijection and multiset identities, |a|+|b| <= 7", 0, [] { return suite("psi-phi", 7); }},
      {9, "positivity of D structure constants, |a|+|b| <= 6", 0, [] { return suite("positivity", 6); }},
      {10, "G products independent of representatives, m+n <= 6", 0,
       [] { return suite("g-representative-independence", 6); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.ok = false;
      o.note += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << "  [" << time << "]";
    if (!o.note.empty()) std::cout << "  " << o.note;
    std::cout << std::endl;
    if (!o.ok) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (criteria.size() - failed) << "/" << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
