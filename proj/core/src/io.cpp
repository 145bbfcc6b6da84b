#include "qsym/io.hpp"

#include <cctype>

namespace qsym {

json to_json(const Composition& alpha) { return json(alpha.parts()); }

Composition composition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("composition must be a JSON array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("composition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Composition(std::move(parts));
}

json to_json(const Subset& s) { return {{"n", s.grade()}, {"elems", s.elements()}}; }

Subset subset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("elems"))
    throw std::invalid_argument("subset must look like {\"n\": int, \"elems\": [...]}");
  return Subset(j.at("n").get<int>(), j.at("elems").get<std::vector<int>>());
}

json to_json(const ClassFunction& phi) {
  json values = json::array();
  for (std::uint32_t bits = 0; bits < phi.num_classes(); ++bits)
    values.push_back({{"subset", Subset::from_bits(phi.grade(), bits).elements()}, {"value", to_string(phi[bits])}});
  return {{"nu", phi.nu()}, {"n", phi.grade()}, {"values", values}};
}

ClassFunction class_function_from_json(const json& j) {
  ClassFunction phi(j.at("nu").get<int>(), j.at("n").get<int>());
  for (const auto& entry : j.at("values")) {
    Subset s(phi.grade(), entry.at("subset").get<std::vector<int>>());
    const auto& v = entry.at("value");
    phi[s.bits()] = v.is_string() ? parse_rat(v.get<std::string>()) : Rat(v.get<long>());
  }
  return phi;
}

namespace {

json nu_json(const Basis& b) { return b.kind() == BasisKind::K ? json(b.nu()) : json(nullptr); }

Basis basis_from_json(const json& j) {
  std::optional<int> nu;
  if (j.contains("nu") && !j.at("nu").is_null()) nu = j.at("nu").get<int>();
  return basis_from_name(j.at("basis").get<std::string>(), nu);
}

RatFunc coeff_from_json(const json& c) {
  if (c.is_string()) return parse_ratfunc(c.get<std::string>());
  if (c.is_number_integer()) return RatFunc(Rat(c.get<long>()));
  throw std::invalid_argument("coefficient must be a string or an integer");
}

}  // namespace

json to_json(const QSymElement& x) {
  json terms = json::array();
  for (const auto& [alpha, c] : x.terms()) terms.push_back({{"comp", to_json(alpha)}, {"coeff", c.to_string()}});
  return {{"basis", x.basis().name()}, {"nu", nu_json(x.basis())}, {"terms", terms}};
}

QSymElement element_from_json(const json& j) {
  QSymElement x(basis_from_json(j));
  for (const auto& t : j.at("terms")) x.add(composition_from_json(t.at("comp")), coeff_from_json(t.at("coeff")));
  return x;
}

json to_json(const TensorElement& x) {
  json terms = json::array();
  for (const auto& [key, c] : x.terms())
    terms.push_back({{"comp", json::array({to_json(key.first), to_json(key.second)})}, {"coeff", c.to_string()}});
  json out = {{"basis", x.left_basis().name()}, {"nu", nu_json(x.left_basis())}, {"terms", terms}};
  if (x.right_basis() != x.left_basis())
    out["right_basis"] = {{"basis", x.right_basis().name()}, {"nu", nu_json(x.right_basis())}};
  return out;
}

TensorElement tensor_from_json(const json& j) {
  Basis left = basis_from_json(j);
  Basis right = j.contains("right_basis") ? basis_from_json(j.at("right_basis")) : left;
  TensorElement x(left, right);
  for (const auto& t : j.at("terms")) {
    const auto& pair = t.at("comp");
    x.add(composition_from_json(pair.at(0)), composition_from_json(pair.at(1)), coeff_from_json(t.at("coeff")));
  }
  return x;
}

json to_json(const DiffEntry& d) {
  return {{"comp", to_json(d.comp)}, {"rule", d.rule.to_string()}, {"oracle", d.oracle.to_string()}};
}

// ---------------------------------------------------------------- inline syntax

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, std::optional<int> default_nu) : text_(text), default_nu_(default_nu) {}

  QSymElement parse() {
    skip_space();
    if (at_end()) throw ParseError("empty element", pos_);
    std::optional<QSymElement> out;
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    while (true) {
      skip_space();
      std::size_t start = pos_;
      auto [coeff, basis, alpha] = term();
      if (negate) coeff = -coeff;
      if (!out) out.emplace(basis);
      if (out->basis() != basis) throw ParseError("terms in different bases", start);
      out->add(alpha, coeff);
      skip_space();
      if (at_end()) break;
      if (peek('+')) {
        negate = false;
      } else if (peek('-')) {
        negate = true;
      } else {
        throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
      }
      ++pos_;
    }
    return *out;
  }

 private:
  struct Term {
    RatFunc coeff;
    Basis basis;
    Composition alpha;
  };

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return !at_end() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Term term() {
    skip_space();
    const std::size_t start = pos_;
    const std::size_t name_at = find_basis_name();
    RatFunc coeff = 1;
    std::size_t end = name_at;
    while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    if (end > start) {
      if (text_[end - 1] != '*') throw ParseError("expected '*' before the basis name", end);
      coeff = coefficient(start, end - 1);
    }
    pos_ = name_at;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(name_at, pos_ - name_at));
    Composition alpha = parts();
    std::optional<int> nu = default_nu_;
    if (peek('(')) nu = nu_suffix();
    try {
      return {coeff, basis_from_name(name, nu), alpha};
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), name_at);
    }
  }

  // First letter run outside parentheses that is followed by '['.  A sign
  // outside parentheses before it means the coefficient is not a product.
  std::size_t find_basis_name() const {
    int depth = 0;
    for (std::size_t k = pos_; k < text_.size();) {
      char c = text_[k];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        --depth;
      } else if (depth == 0 && std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t e = k;
        while (e < text_.size() && std::isalpha(static_cast<unsigned char>(text_[e]))) ++e;
        std::size_t f = e;
        while (f < text_.size() && std::isspace(static_cast<unsigned char>(text_[f]))) ++f;
        if (f < text_.size() && text_[f] == '[') return k;
        if (f >= text_.size() || text_[f] == '+' || text_[f] == '-') throw ParseError("expected '['", f);
        k = e;
        continue;
      } else if (depth == 0 && (c == '+' || c == '-') && k > pos_ && text_[k - 1] != '^') {
        throw ParseError("expected a basis element", k);
      } else if (c == '[') {
        break;
      }
      ++k;
    }
    throw ParseError("expected a basis name", pos_);
  }

  RatFunc coefficient(std::size_t from, std::size_t to) const {
    try {
      return parse_ratfunc(text_.substr(from, to - from));
    } catch (const ParseError& e) {
      std::string what = e.what();
      throw ParseError(what.substr(0, what.rfind(" at position")), from + e.position());
    }
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    if (pos_ - start > 6) throw ParseError("integer too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Composition parts() {
    expect('[');
    std::vector<int> out;
    if (peek(']')) {
      ++pos_;
      return Composition();
    }
    while (true) {
      skip_space();
      std::size_t at = pos_;
      int p = integer();
      if (p < 1) throw ParseError("composition parts must be positive", at);
      out.push_back(p);
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return Composition(std::move(out));
    }
  }

  int nu_suffix() {
    expect('(');
    skip_space();
    if (text_.substr(pos_, 2) != "nu") throw ParseError("expected 'nu'", pos_);
    pos_ += 2;
    expect('=');
    skip_space();
    std::size_t at = pos_;
    int nu = integer();
    if (nu < 2) throw ParseError("nu must be at least 2", at);
    expect(')');
    return nu;
  }

  std::string_view text_;
  std::optional<int> default_nu_;
  std::size_t pos_ = 0;
};

}  // namespace

QSymElement parse_element(std::string_view text, std::optional<int> default_nu) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      return element_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid element JSON: ") + e.what(), first);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("invalid element JSON: ") + e.what(), first);
    }
  }
  return ElementParser(text, default_nu).parse();
}

Composition parse_composition(std::string_view text) {
  std::string s(text);
  std::size_t first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return Composition();
  if (s[first] != '[') s = "[" + s + "]";
  try {
    return composition_from_json(json::parse(s));
  } catch (const json::parse_error& e) {
    throw ParseError("invalid composition", e.byte > 0 ? e.byte - 1 : 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace qsym
