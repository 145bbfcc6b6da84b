#include "qsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qsym {
namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void check(bool ok, std::string_view what, const std::function<std::string()>& detail = {}) {
    ++r_.cases;
    if (ok) return;
    ++r_.failed;
    if (r_.failures.size() < SuiteResult::kMaxReported) {
      std::string d = detail ? detail() : std::string();
      if (d.size() > 600) d = d.substr(0, 600) + "...";
      r_.failures.push_back({std::string(what), std::move(d)});
    }
  }

  // Runs f, turning an exception into a failed case.
  template <class F>
  void guard(std::string_view what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(false, what, [&] { return std::string("exception: ") + e.what(); });
    }
  }

 private:
  SuiteResult& r_;
};

std::string both(const std::string& lhs, const std::string& rhs) { return "lhs: " + lhs + "\nrhs: " + rhs; }

std::string pair_name(const Basis& b, const Composition& x, const Composition& y) {
  return b.name() + x.to_string() + " * " + b.name() + y.to_string();
}

std::vector<Composition> nonempty_upto(int max_size) {
  std::vector<Composition> out;
  for (int n = 1; n <= max_size; ++n)
    for (auto& a : compositions_of(n)) out.push_back(a);
  return out;
}

template <class F>
void for_each_pair(int max_total, F&& f) {
  for (int s = 2; s <= max_total; ++s)
    for (int a = 1; a < s; ++a)
      for (const auto& x : compositions_of(a))
        for (const auto& y : compositions_of(s - a)) f(x, y);
}

std::vector<Basis> all_test_bases(const VerifyConfig& cfg) {
  std::vector<Basis> out = rule_bases();
  for (int nu : cfg.nus) out.push_back(Basis::K(nu));
  return out;
}

Composition random_composition(std::mt19937_64& rng, int size) {
  if (size == 0) return Composition();
  std::uint32_t bits = size > 1 ? static_cast<std::uint32_t>(rng() & ((1u << (size - 1)) - 1)) : 0;
  return comp_of(Subset::from_bits(size, bits));
}

// A few terms of one grade, with small integer coefficients.
QSymElement random_element(std::mt19937_64& rng, Basis b, int size) {
  QSymElement x(b);
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < terms; ++k) {
    long c = static_cast<long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    x.add(random_composition(rng, size), RatFunc(make_rat(c)));
  }
  return x;
}

ClassFunction random_class_function(std::mt19937_64& rng, int nu, int n) {
  ClassFunction phi(nu, n);
  for (std::uint32_t bits = 0; bits < phi.num_classes(); ++bits)
    phi[bits] = make_rat(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
  return phi;
}

// mu(x ⊗ y) = x * y
QSymElement multiply_out(const TensorElement& t) {
  QSymElement out(t.left_basis());
  for (const auto& [key, c] : t.terms())
    out += mul(QSymElement::single(t.left_basis(), key.first), QSymElement::single(t.right_basis(), key.second)) * c;
  return out;
}

using Triple = std::map<std::tuple<Composition, Composition, Composition>, RatFunc>;

void add_triple(Triple& t, const Composition& a, const Composition& b, const Composition& c, const RatFunc& x) {
  auto key = std::make_tuple(a, b, c);
  auto [it, inserted] = t.try_emplace(key, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero()) t.erase(it);
  }
}

bool triples_equal(const Triple& a, const Triple& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || !(it->second == v)) return false;
  }
  return true;
}

// Class functions as rows of values give kappa coordinates directly.
ClassTensor outer(const ClassFunction& phi, const ClassFunction& psi) {
  ClassTensor t(phi.nu());
  for (std::uint32_t a = 0; a < phi.num_classes(); ++a)
    for (std::uint32_t b = 0; b < psi.num_classes(); ++b)
      t.add(Subset::from_bits(phi.grade(), a), Subset::from_bits(psi.grade(), b), phi[a] * psi[b]);
  return t;
}

std::string values_string(const ClassFunction& phi) {
  std::ostringstream os;
  os << '[';
  for (std::uint32_t b = 0; b < phi.num_classes(); ++b) os << (b ? ", " : "") << phi[b].get_str();
  os << ']';
  return os.str();
}

Rat rpow(const Rat& x, int e) {
  Rat r = 1;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

// ---------------------------------------------------------------- hopf-axioms

void hopf_axioms(const VerifyConfig& cfg, Recorder& rec) {
  const int mg = cfg.max_grade;
  const Basis M(BasisKind::M);

  // Exhaustive checks in the monomial basis.
  for (int s = 0; s <= mg; ++s)
    for (int a = 0; a <= s; ++a)
      for (int b = 0; a + b <= s; ++b)
        for (const auto& x : compositions_of(a))
          for (const auto& y : compositions_of(b))
            for (const auto& z : compositions_of(s - a - b)) {
              rec.guard("M associativity", [&] {
                auto X = QSymElement::single(M, x), Y = QSymElement::single(M, y), Z = QSymElement::single(M, z);
                auto l = mul(mul(X, Y), Z), r = mul(X, mul(Y, Z));
                rec.check(l == r, "M associativity", [&] {
                  return x.to_string() + y.to_string() + z.to_string() + "\n" + both(l.to_string(), r.to_string());
                });
              });
            }

  for_each_pair(mg, [&](const Composition& x, const Composition& y) {
    rec.guard("M compatibility", [&] {
      auto X = QSymElement::single(M, x), Y = QSymElement::single(M, y);
      auto l = comul(mul(X, Y)), r = tensor_mul(comul(X), comul(Y));
      rec.check(l == r, "M compatibility", [&] { return pair_name(M, x, y) + "\n" + both(l.to_string(), r.to_string()); });
    });
  });

  for (int n = 0; n <= mg; ++n)
    for (const auto& g : compositions_of(n)) {
      rec.guard("M antipode", [&] {
        auto X = QSymElement::single(M, g);
        TensorElement d = comul(X);
        TensorElement left(M, M), right(M, M);
        for (const auto& [key, c] : d.terms()) {
          QSymElement sa = antipode_M(QSymElement::single(M, key.first));
          QSymElement sb = antipode_M(QSymElement::single(M, key.second));
          for (const auto& [a, ca] : sa.terms()) left.add(a, key.second, c * ca);
          for (const auto& [b, cb] : sb.terms()) right.add(key.first, b, c * cb);
        }
        QSymElement expect = QSymElement::unit(M) * counit(X);
        QSymElement l = multiply_out(left), r = multiply_out(right);
        rec.check(l == expect, "M antipode m(S⊗id)Δ = uε", [&] { return g.to_string() + ": " + l.to_string(); });
        rec.check(r == expect, "M antipode m(id⊗S)Δ = uε", [&] { return g.to_string() + ": " + r.to_string(); });
      });
    }

  // Every basis: coproduct rule against the monomial route, coassociativity
  // and the counit laws.
  const int cap = std::min(mg, 4);
  for (const auto& b : all_test_bases(cfg)) {
    for (int n = 0; n <= mg; ++n)
      for (const auto& g : compositions_of(n)) {
        rec.guard("coproduct rule", [&] {
          auto X = QSymElement::single(b, g);
          auto l = coproduct_rule(b, g), r = comul_via_M(X);
          rec.check(l == r, "coproduct rule = coproduct via M", [&] {
            return b.name() + g.to_string() + "\n" + both(l.to_string(), r.to_string());
          });
          if (n > cap) return;

          TensorElement d = comul(X);
          Triple left, right;
          for (const auto& [key, c] : d.terms()) {
            TensorElement dl = coproduct_rule(b, key.first);
            for (const auto& [k2, c2] : dl.terms()) add_triple(left, k2.first, k2.second, key.second, c * c2);
            TensorElement dr = coproduct_rule(b, key.second);
            for (const auto& [k2, c2] : dr.terms()) add_triple(right, key.first, k2.first, k2.second, c * c2);
          }
          rec.check(triples_equal(left, right), "coassociativity", [&] { return b.name() + g.to_string(); });

          QSymElement cl(b), cr(b);
          for (const auto& [key, c] : d.terms()) {
            if (key.first.empty()) cl.add(key.second, c);
            if (key.second.empty()) cr.add(key.first, c);
          }
          rec.check(cl == X, "counit (ε⊗id)Δ = id", [&] { return b.name() + g.to_string() + ": " + cl.to_string(); });
          rec.check(cr == X, "counit (id⊗ε)Δ = id", [&] { return b.name() + g.to_string() + ": " + cr.to_string(); });
        });
      }

    std::mt19937_64 rng(cfg.seed * 7919 + static_cast<std::uint64_t>(b.kind()) * 31 + b.nu());
    const int samples = std::max(1, cfg.random_cases / 10);
    for (int k = 0; k < samples; ++k) {
      int sx = static_cast<int>(rng() % (mg + 1));
      int sy = static_cast<int>(rng() % (mg - sx + 1));
      int sz = static_cast<int>(rng() % (mg - sx - sy + 1));
      auto x = random_element(rng, b, sx), y = random_element(rng, b, sy), z = random_element(rng, b, sz);
      rec.guard("random algebra laws", [&] {
        auto xy = mul(x, y), yx = mul(y, x);
        rec.check(xy == yx, "commutativity", [&] { return b.name() + ": " + x.to_string() + " | " + y.to_string(); });
        auto l = mul(xy, z), r = mul(x, mul(y, z));
        rec.check(l == r, "associativity", [&] {
          return b.name() + ": " + x.to_string() + " | " + y.to_string() + " | " + z.to_string();
        });
        rec.check(mul(QSymElement::unit(b), x) == x, "unit", [&] { return b.name() + ": " + x.to_string(); });
      });
    }
  }
}

// ---------------------------------------------------------------- specializations

void specializations(const VerifyConfig& cfg, Recorder& rec) {
  const RatFunc q = RatFunc::q();
  for (int n = 0; n <= cfg.max_grade; ++n)
    for (const auto& a : compositions_of(n)) {
      rec.guard("specializations", [&] {
        const QSymElement d = to_M(QSymElement::single(BasisKind::D, a));
        const QSymElement m = QSymElement::single(BasisKind::M, a);
        const QSymElement l = to_M(QSymElement::single(BasisKind::L, a));
        auto expect = [&](std::string_view what, const QSymElement& lhs, const QSymElement& rhs) {
          rec.check(lhs == rhs, what, [&] { return a.to_string() + "\n" + both(lhs.to_string(), rhs.to_string()); });
        };
        expect("D(1,0) = M", evaluate(d, 1, 0), m);
        expect("D(-1,1) = Λ*", evaluate(d, -1, 1), to_M(QSymElement::single(BasisKind::LambdaStar, a)));
        expect("D(1,-1) = E", evaluate(d, 1, -1), to_M(QSymElement::single(BasisKind::E, a)));
        expect("2^n D(2,-1) = η", evaluate(d, 2, -1) * RatFunc(rpow(2, n)),
               to_M(QSymElement::single(BasisKind::Eta, a)));
        expect("(q+1)^n D(q+1,-1) = η^(q)", substitute(d, q + 1, -1) * (q + 1).pow(n),
               to_M(QSymElement::single(BasisKind::EtaQ, a)));
        const QSymElement g = to_M(QSymElement::single(BasisKind::G, a));
        expect("G(0) = L", evaluate(g, 0, 0), l);
        expect("G(1) = M", evaluate(g, 1, 0), m);
        const QSymElement mq = to_M(QSymElement::single(BasisKind::Mq, a));
        expect("Mq(0) = L", evaluate(mq, 0, 0), l);
        expect("Mq(1) = M", evaluate(mq, 1, 0), m);
        // Round trip through every basis.
        for (const auto& b : all_test_bases(cfg)) {
          auto x = QSymElement::single(b, a);
          auto back = from_M(to_M(x), b);
          rec.check(back == x, "from_M(to_M(x)) = x", [&] { return b.name() + a.to_string() + ": " + back.to_string(); });
        }
      });
    }
}

// ---------------------------------------------------------------- oracle-products

void oracle_products(const VerifyConfig& cfg, Recorder& rec) {
  const int mg = cfg.max_grade;
  for (int n = 0; n <= mg; ++n)
    for (const auto& a : compositions_of(n)) {
      rec.guard("extract_M(expand_M)", [&] {
        int vars = std::max(n, 1);
        auto back = extract_M(expand_M(a, vars, n), n);
        rec.check(back == QSymElement::single(BasisKind::M, a), "extract_M(expand_M(α)) = M_α",
                  [&] { return a.to_string() + ": " + back.to_string(); });
      });
    }

  for (const auto& b : all_test_bases(cfg)) {
    for (const auto& a : nonempty_upto(mg)) {
      auto x = QSymElement::single(b, a);
      rec.check(product_rule(b, Composition(), a) == x && product_rule(b, a, Composition()) == x,
                "empty factor is the unit", [&] { return b.name() + a.to_string(); });
    }
    for_each_pair(mg, [&](const Composition& x, const Composition& y) {
      rec.guard("oracle product", [&] {
        ProductCheck pc = verify_product(b, x, y, cfg.oracle_vars);
        rec.check(pc.ok(), "rule = oracle", [&] {
          std::string s = pair_name(b, x, y);
          for (const auto& d : pc.diffs) s += "\n" + to_json(d).dump();
          return s;
        });
        if (b.kind() != BasisKind::Mq) return;
        QSymElement rule = to_M(pc.rule), oracle = to_M(pc.oracle);
        for (const Rat& q0 : {Rat(0), Rat(1), make_rat(2, 3), Rat(5)}) {
          rec.check(evaluate(rule, q0, 0) == evaluate(oracle, q0, 0), "Mq rule = oracle at a point",
                    [&] { return pair_name(b, x, y) + " at q=" + q0.get_str(); });
        }
        rec.check(evaluate(rule, 0, 0) == to_M(product_rule(BasisKind::L, x, y)), "Mq rule at q=0 is the L rule",
                  [&] { return pair_name(b, x, y); });
        rec.check(evaluate(rule, 1, 0) == product_rule(BasisKind::M, x, y), "Mq rule at q=1 is the M rule",
                  [&] { return pair_name(b, x, y); });
      });
    });
  }

  // The oracle itself: commutative and associative on explicit polynomials.
  std::mt19937_64 rng(cfg.seed * 104729 + 17);
  const int small = std::min(mg, 5);
  for (int k = 0; k < std::max(1, cfg.random_cases / 10) && small >= 3; ++k) {
    int s1 = 1 + static_cast<int>(rng() % (small - 2));
    int s2 = 1 + static_cast<int>(rng() % (small - s1 - 1));
    int s3 = std::max(1, small - s1 - s2);
    auto a = random_composition(rng, s1), b = random_composition(rng, s2), c = random_composition(rng, s3);
    int d = s1 + s2 + s3, vars = std::min(d, TruncPoly::kMaxVars);
    auto pa = expand_M(a, vars, d), pb = expand_M(b, vars, d), pc = expand_M(c, vars, d);
    rec.check(pa * pb == pb * pa, "oracle commutativity", [&] { return a.to_string() + b.to_string(); });
    rec.check((pa * pb) * pc == pa * (pb * pc), "oracle associativity",
              [&] { return a.to_string() + b.to_string() + c.to_string(); });
  }
}

// ---------------------------------------------------------------- scf-morphism

void scf_morphism(const VerifyConfig& cfg, Recorder& rec) {
  const int mg = cfg.max_grade;

  // Des(u ⧢_A v[m]) = I ⧢_A J over every pair of permutations.
  for (int s = 2; s <= std::min(mg, 7); ++s)
    for (int m = 1; m < s; ++m) {
      int n = s - m;
      Word u(m), v(n);
      for (int k = 0; k < m; ++k) u[k] = k + 1;
      do {
        for (int k = 0; k < n; ++k) v[k] = k + 1;
        do {
          Word vs = shift_word(v, m);
          for (const auto& a : subsets_of_size(s, n)) {
            Subset got = descents(shuffle_by(u, vs, a));
            Subset want = preshuffle(descents(u), descents(v), a).shuffle;
            rec.check(got == want, "Des(u ⧢_A v[m]) = I ⧢_A J",
                      [&] { return "A=" + a.to_string() + " got " + got.to_string() + " want " + want.to_string(); });
          }
        } while (std::next_permutation(v.begin(), v.end()));
      } while (std::next_permutation(u.begin(), u.end()));
    }

  for (int nu : cfg.nus) {
    for (int n = 0; n <= mg + 1; ++n) {
      Rat total = 0;
      for (const auto& j : all_subsets(n)) total += rpow(nu - 1, j.size());
      rec.check(total == rpow(nu, std::max(n - 1, 0)), "superclass sizes sum to the group order",
                [&] { return "nu=" + std::to_string(nu) + " n=" + std::to_string(n); });
    }

    for (int n = 1; n <= std::min(mg, 5); ++n) {
      auto subsets = all_subsets(n);
      for (const auto& i : subsets) {
        auto ci = chi(i, nu);
        auto ki = kappa(i, nu);
        rec.check(ci.value(Subset(n)) == rpow(nu - 1, i.complement().size()), "χ^I(0) = (ν-1)^{|I^c|}");
        for (const auto& j : subsets) {
          Rat cc = hall_inner(ci, chi(j, nu)), kk = hall_inner(ki, kappa(j, nu));
          Rat cexp = i == j ? rpow(nu - 1, i.complement().size()) : Rat(0);
          // The superclass of I has (nu-1)^|I| elements in a group of order nu^(n-1).
          Rat kexp = i == j ? rpow(nu - 1, i.size()) / rpow(nu, n - 1) : Rat(0);
          rec.check(cc == cexp, "<χ^I, χ^J>", [&] { return i.to_string() + " " + j.to_string(); });
          rec.check(kk == kexp, "<κ_I, κ_J>", [&] { return i.to_string() + " " + j.to_string(); });
        }
        rec.guard("class functions", [&] {
          auto g = to_M(ch(mk_G_classfn(i, nu)));
          auto gq = evaluate(to_M(QSymElement::single(BasisKind::G, comp_of(i))), nu, 0);
          rec.check(g == gq, "ch(𝔾_I) = G_I(ν)", [&] { return i.to_string() + "\n" + both(g.to_string(), gq.to_string()); });
          auto mm = to_M(ch(mk_M_classfn(i, nu)));
          auto mq = evaluate(to_M(QSymElement::single(BasisKind::Mq, comp_of(i))), nu, 0);
          rec.check(mm == mq, "ch(𝕄_I) = M_I(ν)", [&] { return i.to_string() + "\n" + both(mm.to_string(), mq.to_string()); });
          std::vector<Rat> f(i.universe());
          for (int k = 0; k < i.universe(); ++k) f[k] = make_rat(2 * k - 3, k + 2);
          for (bool zero : {false, true}) {
            if (zero) std::fill(f.begin(), f.end(), Rat(0));
            auto closed = expand_in_G(i, f, nu), via_ch = expand_in_G(mk_phi_If(i, f, nu));
            rec.check(closed == via_ch, "φ^{I,f} expansion in 𝔾", [&] { return i.to_string(); });
          }
          for (const auto& [j, c] : expand_in_G(i, std::vector<Rat>(i.universe()), nu))
            rec.check(c == rpow(nu, stat_g(i, j)), "φ^{I,0} coefficient is ν^g(I,J)");
        });
      }
    }

    // Lemma: m_A(χ̇^I, χ̇^J) = χ̇^{I ⧢_A J} and the k-th coproduct of χ̇^I.
    for (int s = 2; s <= mg; ++s)
      for (int m = 1; m < s; ++m) {
        int n = s - m;
        for (const auto& i : all_subsets(m))
          for (const auto& j : all_subsets(n)) {
            auto ci = chi_dot(i, nu), cj = chi_dot(j, nu);
            for (const auto& a : subsets_of_size(s, n)) {
              rec.guard("m_A", [&] {
                auto got = m_A(ci, cj, a);
                auto want = chi_dot(preshuffle(i, j, a).shuffle, nu);
                rec.check(got == want, "m_A(χ̇^I, χ̇^J) = χ̇^{I⧢_AJ}", [&] {
                  return "nu=" + std::to_string(nu) + " I=" + i.to_string() + " J=" + j.to_string() +
                         " A=" + a.to_string() + "\n" + both(values_string(got), values_string(want));
                });
              });
            }
          }
      }
    for (int n = 0; n <= mg; ++n)
      for (const auto& i : all_subsets(n)) {
        auto ci = chi_dot(i, nu);
        rec.check(m(one(nu, 0), ci) == ci && m(ci, one(nu, 0)) == ci, "m(𝟙_0, φ) = φ");
        for (int k = 0; k <= n; ++k) {
          rec.guard("coproduct of χ̇", [&] {
            ClassTensor want(nu);
            if (k == 0) {
              want = outer(one(nu, 0), ci);
            } else if (k == n) {
              want = outer(ci, one(nu, 0));
            } else {
              Subset left = (i & Subset::interval(n, 1, k - 1)).with_grade(k);
              Subset right = (i & Subset::interval(n, k + 1, n - 1)).shifted(-k, n - k);
              want = outer(chi_dot(left, nu), chi_dot(right, nu));
            }
            rec.check(coprod_k(ci, k) == want, "▲_k(χ̇^I)",
                      [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " I=" + i.to_string(); });
          });
        }
      }

    // ch is a morphism of Hopf algebras, on random class functions.
    std::mt19937_64 rng(cfg.seed * 65537 + nu);
    for (int k = 0; k < cfg.random_cases; ++k) {
      int a = static_cast<int>(rng() % (mg + 1));
      int b = static_cast<int>(rng() % (mg - a + 1));
      auto phi = random_class_function(rng, nu, a), psi = random_class_function(rng, nu, b);
      rec.guard("ch morphism", [&] {
        auto l = ch(m(phi, psi)), r = mul(ch(phi), ch(psi));
        rec.check(l == r, "ch(m(φ,ψ)) = ch(φ) ch(ψ)", [&] {
          return "nu=" + std::to_string(nu) + " " + values_string(phi) + " " + values_string(psi);
        });
        auto lc = ch(coprod(phi)), rc = comul(ch(phi));
        rec.check(lc == rc, "(ch⊗ch)▲φ = Δ ch(φ)", [&] { return "nu=" + std::to_string(nu) + " " + values_string(phi); });
      });
    }
  }
}

// ---------------------------------------------------------------- kappa-rules

void kappa_rules(const VerifyConfig& cfg, Recorder& rec) {
  const int mg = cfg.max_grade;
  for (int nu : cfg.nus) {
    for (int s = 0; s <= mg; ++s)
      for (int left = 0; left <= s; ++left) {
        for (const auto& i : all_subsets(left))
          for (const auto& j : all_subsets(s - left)) {
            rec.guard("κ product", [&] {
              auto got = kappa_product(i, j, nu), want = m(kappa(i, nu), kappa(j, nu));
              rec.check(got == want, "κ product formula = m(κ_I, κ_J)", [&] {
                return "nu=" + std::to_string(nu) + " I=" + i.to_string() + " J=" + j.to_string() + "\n" +
                       both(values_string(got), values_string(want));
              });
            });
          }
      }
    for (int n = 0; n <= mg; ++n)
      for (const auto& g : compositions_of(n)) {
        rec.guard("κ coproduct", [&] {
          auto ki = kappa(set_of(g), nu);
          rec.check(kappa_coproduct(g, nu) == coprod(ki), "κ coproduct formula = ▲κ",
                    [&] { return "nu=" + std::to_string(nu) + " γ=" + g.to_string(); });
          for (int k : set_of(g).elements())
            rec.check(coprod_k(ki, k).terms().empty(), "▲_k(κ_I) = 0 for k in I",
                      [&] { return "γ=" + g.to_string() + " k=" + std::to_string(k); });
        });
      }
  }
}

// ---------------------------------------------------------------- psi-phi

void psi_phi(const VerifyConfig& cfg, Recorder& rec) {
  for_each_pair(cfg.max_grade, [&](const Composition& alpha, const Composition& beta) {
    rec.guard("Ψ/Φ", [&] {
      const std::string name = alpha.to_string() + "," + beta.to_string();
      const Subset i = set_of(alpha), j = set_of(beta);
      const int l = alpha.length() + beta.length();
      Multiset<Composition> lhs_a, lhs_b;
      std::set<Subset> image;
      for (const auto& a : admissible_sets(alpha, beta)) {
        Subset d = psi(a, alpha, beta);
        image.insert(d);
        rec.check(phi(d, alpha, beta) == a, "Φ(Ψ(A)) = A", [&] { return name + " A=" + a.to_string(); });
        Preshuffle p = preshuffle(i, j, a);
        IntervalStats st = interval_stats(a);
        Subset top = p.sharp.inserted(*st.z);
        Composition c = comp_of(top);
        rec.check(c == shuffle_at(alpha, beta, d), "comp(I#_AJ ⊔ {z_A}) = α ⧢_Ψ(A) β",
                  [&] { return name + " A=" + a.to_string(); });
        lhs_a.insert(c);
        Subset base = p.sharp - st.all_ends;
        std::uint32_t free = top.bits() & ~base.bits();
        for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
          lhs_b.insert(comp_of(Subset::from_bits(top.grade(), base.bits() | sub)));
          if (sub == 0) break;
        }
      }
      auto all_d = subsets_of_size(l, beta.length());
      rec.check(image == std::set<Subset>(all_d.begin(), all_d.end()), "Ψ is a bijection onto shuffle positions",
                [&] { return name; });
      rec.check(lhs_a == comp_shuffles(alpha, beta), "multiset identity (a)", [&] { return name; });
      Multiset<Composition> rhs_b;
      for (const auto& w : two_way_shuffles(alpha, beta)) rhs_b.insert(w.plus());
      rec.check(lhs_b == rhs_b, "multiset identity (b)", [&] { return name; });
    });
  });
}

// ---------------------------------------------------------------- g-representative-independence

void g_representatives(const VerifyConfig& cfg, Recorder& rec) {
  const int mg = cfg.max_grade;
  // Permutations of [n] grouped by descent set, for random representatives.
  std::map<Subset, std::vector<Word>> by_descent;
  for (int n = 1; n <= std::min(mg - 1, 7); ++n) {
    Word w(n);
    for (int k = 0; k < n; ++k) w[k] = k + 1;
    do {
      by_descent[descents(w)].push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  std::mt19937_64 rng(cfg.seed * 2654435761u + 3);
  auto pick = [&](const Subset& s) {
    const auto& v = by_descent.at(s);
    return v[rng() % v.size()];
  };

  for (int s = 2; s <= mg; ++s)
    for (int m = 1; m < s; ++m)
      for (const auto& i : all_subsets(m))
        for (const auto& j : all_subsets(s - m)) {
          rec.guard("G representatives", [&] {
            const std::string name = "I=" + i.to_string() + " J=" + j.to_string();
            Word ub = descent_rep_blocks(i), vb = descent_rep_blocks(j);
            Word ur = descent_rep_runs(i), vr = descent_rep_runs(j);
            rec.check(descents(ub) == i && descents(ur) == i && descents(vb) == j && descents(vr) == j,
                      "representatives have the right descent sets", [&] { return name; });
            QSymElement blocks = g_product(ub, vb), runs = g_product(ur, vr);
            rec.check(blocks == runs, "blocks = runs",
                      [&] { return name + "\n" + both(blocks.to_string(), runs.to_string()); });
            rec.check(g_product(ub, vr) == blocks && g_product(ur, vb) == blocks, "mixed representatives",
                      [&] { return name; });
            for (int k = 0; k < 3; ++k) {
              Word u = pick(i), v = pick(j);
              rec.check(g_product(u, v) == blocks, "random representatives", [&] {
                std::string s = name + " u=";
                for (int x : u) s += std::to_string(x);
                s += " v=";
                for (int x : v) s += std::to_string(x);
                return s;
              });
            }
            rec.check(product_rule(BasisKind::G, comp_of(i), comp_of(j)) == blocks, "library rule uses a valid choice",
                      [&] { return name; });
          });
        }
}

// ---------------------------------------------------------------- positivity

bool nonnegative_integral_polynomial(const RatFunc& c) {
  if (!c.is_polynomial()) return false;
  Rat den = *RatFunc(c.den()).as_constant();
  for (const auto& [mono, coef] : c.num().terms()) {
    Rat v = coef / den;
    if (sgn(v) < 0 || v.get_den() != 1) return false;
  }
  return true;
}

void positivity(const VerifyConfig& cfg, Recorder& rec) {
  for_each_pair(cfg.max_grade, [&](const Composition& x, const Composition& y) {
    QSymElement p = product_rule(BasisKind::D, x, y);
    for (const auto& [g, c] : p.terms())
      rec.check(nonnegative_integral_polynomial(c), "D structure constant in N[q,t]",
                [&] { return pair_name(BasisKind::D, x, y) + " at " + g.to_string() + ": " + c.to_string(); });
  });
}

// ---------------------------------------------------------------- transitions

void transitions(const VerifyConfig& cfg, Recorder& rec) {
  const int mg = cfg.max_grade;
  const RatFunc q = RatFunc::q(), t = RatFunc::t();

  for (int nu : cfg.nus) {
    const Basis K = Basis::K(nu);
    for (int n = 0; n <= mg; ++n)
      for (const auto& a : compositions_of(n)) {
        rec.guard("κ transitions", [&] {
          const std::string name = "nu=" + std::to_string(nu) + " α=" + a.to_string();
          Subset s = set_of(a);
          ClassFunction kn = kappa(s, nu) * (Rat(1) / rpow(nu - 1, s.size()));
          QSymElement via_ch = ch(kn);
          QSymElement closed = to_M(QSymElement::single(K, a));
          rec.check(to_M(via_ch) == closed, "ch(κ/(ν-1)^|I|) = K_α(ν)",
                    [&] { return name + "\n" + both(to_M(via_ch).to_string(), closed.to_string()); });
          QSymElement bridge = evaluate(to_M(QSymElement::single(BasisKind::D, complement(a))), -nu, nu - 1);
          rec.check(bridge == to_M(via_ch), "D_{α^c}(-ν, ν-1) = K_α(ν)",
                    [&] { return name + "\n" + both(bridge.to_string(), to_M(via_ch).to_string()); });
          rec.check(k_in_L(a, nu) == via_ch, "K in L matches ch", [&] { return name; });

          // L -> K -> L and M -> K -> M.
          QSymElement back(BasisKind::L);
          QSymElement lk = l_in_K(a, nu);
          for (const auto& [b, c] : lk.terms()) back += k_in_L(b, nu) * c;
          rec.check(back == QSymElement::single(BasisKind::L, a), "L in K then K in L is the identity",
                    [&] { return name + ": " + back.to_string(); });
          QSymElement mk = m_in_K(a, nu);
          rec.check(to_M(mk) == QSymElement::single(BasisKind::M, a), "M in K expands back to M",
                    [&] { return name + ": " + to_M(mk).to_string(); });
        });
      }
  }

  for (int n = 0; n <= mg; ++n) {
    rec.guard("D-L rows", [&] {
      for (const auto& [a, x] : dl_transition(DLTransition::LtoD, n)) {
        rec.check(to_M(x) == to_M(QSymElement::single(BasisKind::L, a)), "L in D", [&] { return a.to_string(); });
        // q -> q+1, t -> -1 turns D into η^(q) / (q+1)^n.
        QSymElement y(BasisKind::EtaQ);
        for (const auto& [b, c] : x.terms()) y.add(b, c.substitute(q + 1, -1) / (q + 1).pow(n));
        rec.check(to_M(y) == to_M(QSymElement::single(BasisKind::L, a)), "L in η^(q) recovered",
                  [&] { return a.to_string(); });
      }
      for (const auto& [a, x] : dl_transition(DLTransition::DtoL, n))
        rec.check(to_M(x) == to_M(QSymElement::single(BasisKind::D, a)), "D in L", [&] { return a.to_string(); });
      for (const auto& [a, x] : dl_transition(DLTransition::MtoD, n)) {
        rec.check(to_M(x) == QSymElement::single(BasisKind::M, a), "M in D", [&] { return a.to_string(); });
        QSymElement y(BasisKind::EtaQ);
        for (const auto& [b, c] : x.terms()) y.add(b, c.substitute(q + 1, -1) / (q + 1).pow(n));
        rec.check(to_M(y) == QSymElement::single(BasisKind::M, a), "M in η^(q) recovered",
                  [&] { return a.to_string(); });
      }
    });
  }

  // D as a one-parameter family: D(q,t) = (-q-t)^{-|I^c|} D(-Q, Q-1), Q = q/(q+t).
  const std::vector<std::pair<Rat, Rat>> points{
      {Rat(1), Rat(1)}, {Rat(2), Rat(-1)}, {make_rat(3, 2), make_rat(1, 3)}, {Rat(-2), Rat(5)}, {make_rat(1, 2), make_rat(1, 7)}};
  for (int n = 1; n <= std::min(mg, 5); ++n)
    for (const auto& a : compositions_of(n)) {
      QSymElement d = to_M(QSymElement::single(BasisKind::D, a));
      const int ic = n - a.length();
      for (const auto& [q0, t0] : points) {
        rec.guard("D one variable", [&] {
          Rat big_q = q0 / (q0 + t0);
          QSymElement lhs = evaluate(d, q0, t0);
          QSymElement rhs = evaluate(d, -big_q, big_q - 1) * RatFunc(Rat(1) / rpow(-q0 - t0, ic));
          rec.check(lhs == rhs, "D one-variable identity",
                    [&] { return a.to_string() + " at (" + q0.get_str() + "," + t0.get_str() + ")"; });
        });
      }
    }

  for (int n = 0; n <= mg; ++n)
    for (const auto& a : compositions_of(n)) {
      QSymElement lg(BasisKind::L), lm(BasisKind::L);
      QSymElement g = l_in_G(a), mq = l_in_Mq(a);
      for (const auto& [b, c] : g.terms()) lg += g_in_L(b) * c;
      for (const auto& [b, c] : mq.terms()) lm += mq_in_L(b) * c;
      rec.check(lg == QSymElement::single(BasisKind::L, a), "L in G then G in L", [&] { return a.to_string(); });
      rec.check(lm == QSymElement::single(BasisKind::L, a), "L in Mq then Mq in L", [&] { return a.to_string(); });
    }

  for (int n = 1; n <= mg + 1; ++n)
    for (const auto& j : all_subsets(n))
      for (const auto& i : all_subsets(n)) {
        if (!i.is_subset_of(j)) continue;
        rec.check(stat_s(i, j) == stat_s_bre(i, j) && stat_g(i, j) == stat_g_bre(i, j), "s, g by weights and breakpoints",
                  [&] { return "I=" + i.to_string() + " J=" + j.to_string(); });
      }
}

using SuiteFn = void (*)(const VerifyConfig&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"hopf-axioms", hopf_axioms},
      {"specializations", specializations},
      {"oracle-products", oracle_products},
      {"scf-morphism", scf_morphism},
      {"kappa-rules", kappa_rules},
      {"psi-phi", psi_phi},
      {"g-representative-independence", g_representatives},
      {"positivity", positivity},
      {"transitions", transitions},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteResult run_suite(std::string_view name, const VerifyConfig& config) {
  if (config.max_grade < 0) throw std::invalid_argument("max_grade must be nonnegative");
  for (int nu : config.nus)
    if (nu < 2) throw std::invalid_argument("every nu must be at least 2");
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult r;
    r.suite = n;
    Recorder rec(r);
    auto start = std::chrono::steady_clock::now();
    fn(config, rec);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

json to_json(const SuiteResult& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"check", f.check}, {"detail", f.detail}});
  return {{"suite", r.suite},     {"ok", r.ok()},          {"cases", r.cases},
          {"failed", r.failed},   {"failures", failures},  {"seconds", r.seconds}};
}

}  // namespace qsym
