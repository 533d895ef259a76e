#include "pdtensor/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pdtensor {

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

PolyRing::PolyRing(Field field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), variables_(std::move(variables)), order_(order) {
  if (variables_.size() > kMaxVariables) throw AlgebraError("at most 8 variables are supported");
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (variables_[i] == variables_[j]) throw AlgebraError("duplicate variable " + variables_[i]);
    }
  }
}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

namespace {

void canonicalize(const MonomialOrder& order, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare_unchecked(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

}  // namespace

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.mono.nvars() != ring_->nvars()) throw AlgebraError("variable-count mismatch");
  }
  canonicalize(ring_->order(), terms_);
}

Polynomial Polynomial::constant(PolyRingPtr ring, const FieldScalar& c) {
  Monomial one(ring->nvars());
  return Polynomial(ring, {Term{one, c}});
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  Monomial m = Monomial::variable(ring->nvars(), index);
  FieldScalar one = ring->scalar(1);
  return Polynomial(ring, {Term{m, one}});
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, const FieldScalar& c) {
  return Polynomial(ring, {Term{m, c}});
}

HomogeneousDegree Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return {HomogeneousDegree::Kind::kAnyDegree, 0};
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return {HomogeneousDegree::Kind::kInhomogeneous, 0};
  }
  return {HomogeneousDegree::Kind::kDegree, d};
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_->nvars() != o.ring_->nvars()) throw AlgebraError("variable-count mismatch");
  if (!(ring_->field() == o.ring_->field())) throw AlgebraError("coefficient field mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  const auto& order = ring_->order();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = order.compare_unchecked(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldScalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const FieldScalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldScalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prods.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  }
  Polynomial r(ring_);
  r.terms_ = std::move(prods);
  canonicalize(ring_->order(), r.terms_);
  return r;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->variables();
  bool first = true;
  for (const auto& t : terms_) {
    FieldScalar c = t.coeff;
    bool neg = c.is_negative();
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += t.mono.to_string(names);
    } else {
      out += c.to_string() + "*" + t.mono.to_string(names);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (accept('+')) {
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      Polynomial r = Polynomial::constant(ring_, ring_->scalar(1));
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        den = std::string(text_.substr(ds, pos_ - ds));
      }
      mpz_class n(num), d(den);
      if (d == 0) fail("zero denominator");
      mpq_class q(n, d);
      q.canonicalize();
      return Polynomial::constant(ring_, FieldScalar::from_rational(ring_->field(), q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->variable_index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const PolyRingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

}  // namespace pdtensor
