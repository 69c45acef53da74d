#include "ttk/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ttk {

LaurentPoly LaurentPoly::constant(BigInt c) { return term(std::move(c), 0); }

LaurentPoly LaurentPoly::term(BigInt c, int e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int LaurentPoly::min_exp() const { return terms_.front().first; }
int LaurentPoly::max_exp() const { return terms_.back().first; }

BigInt LaurentPoly::coeff(int e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, int exp) { return t.first < exp; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin(), b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      BigInt c = a->second + b->second;
      if (c != 0) out.terms_.emplace_back(a->first, std::move(c));
      ++a, ++b;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  return *this + (-rhs);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  // Dense convolution over the exponent window; the factors are sparse but
  // products in this codebase quickly fill their window anyway.
  const int lo = min_exp() + rhs.min_exp();
  const int hi = max_exp() + rhs.max_exp();
  std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) acc[ea + eb - lo] += ca * cb;
  LaurentPoly out;
  for (int e = lo; e <= hi; ++e)
    if (acc[e - lo] != 0) out.terms_.emplace_back(e, std::move(acc[e - lo]));
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) e += k;
  return out;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.terms_.emplace_back(-it->first, it->second);
  return out;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt v = 0;
  for (const auto& [e, c] : terms_) v += c;
  return v;
}

BigInt LaurentPoly::eval_at_minus_one() const {
  BigInt v = 0;
  for (const auto& [e, c] : terms_) v += (e % 2 == 0) ? c : -c;
  return v;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (e == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str();
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

BigInt parse_digits(std::string_view s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw ParseError("expected digits in polynomial");
  return BigInt(std::string(s.substr(start, i - start)));
}

int parse_exponent(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  BigInt mag = parse_digits(s, i);
  if (mag > 1000000) throw ParseError("exponent out of range");
  int e = static_cast<int>(mag.convert_to<long>());
  return neg ? -e : e;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  skip_ws(text, i);
  if (i == text.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (i < text.size()) {
    skip_ws(text, i);
    if (i == text.size()) break;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
      neg = (text[i++] == '-');
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms");
    }
    skip_ws(text, i);
    BigInt coef = 1;
    bool saw_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = parse_digits(text, i);
      saw_coef = true;
      skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws(text, i);
      }
    }
    int e = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = parse_exponent(text, i);
      }
    } else if (!saw_coef) {
      throw ParseError("expected term in polynomial");
    }
    terms.emplace_back(e, neg ? BigInt(-coef) : coef);
    first = false;
  }
  return from_terms(std::move(terms));
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw DivisionError("division by zero polynomial");
  if (f.is_zero()) return {};
  // Shift both operands to ordinary polynomials and do schoolbook long
  // division from the top.  Every leading-coefficient division must be
  // exact over the integers, and the remainder must vanish.
  const int shift = f.min_exp() - g.min_exp();
  std::vector<BigInt> F(static_cast<std::size_t>(f.breadth() + 1));
  for (const auto& [e, c] : f.terms()) F[e - f.min_exp()] = c;
  std::vector<BigInt> G(static_cast<std::size_t>(g.breadth() + 1));
  for (const auto& [e, c] : g.terms()) G[e - g.min_exp()] = c;

  const int df = static_cast<int>(F.size()) - 1;
  const int dg = static_cast<int>(G.size()) - 1;
  if (df < dg) throw DivisionError("quotient does not exist: " + f.str() +
                                   " / " + g.str());
  std::vector<BigInt> Q(static_cast<std::size_t>(df - dg + 1));
  for (int k = df - dg; k >= 0; --k) {
    BigInt lead = F[k + dg];
    if (lead == 0) continue;
    if (lead % G[dg] != 0)
      throw DivisionError("inexact division: " + f.str() + " / " + g.str());
    BigInt q = lead / G[dg];
    Q[k] = q;
    for (int j = 0; j <= dg; ++j) F[k + j] -= q * G[j];
  }
  for (const BigInt& c : F)
    if (c != 0)
      throw DivisionError("nonzero remainder: " + f.str() + " / " + g.str());

  std::vector<LaurentPoly::Term> out;
  for (int k = 0; k < static_cast<int>(Q.size()); ++k)
    if (Q[k] != 0) out.emplace_back(k + shift, std::move(Q[k]));
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly normalize_alexander(const LaurentPoly& f) {
  if (f.is_zero())
    throw DivisionError("cannot normalize the zero polynomial");
  const int c = f.min_exp() + f.max_exp();
  if (c % 2 != 0)
    throw DivisionError("no symmetric unit multiple: " + f.str());
  LaurentPoly g = f.shifted(-c / 2);
  if (g != g.inverted_variable())
    throw DivisionError("not symmetric up to units: " + f.str());
  BigInt v = g.eval_at_one();
  if (v == 1) return g;
  if (v == -1) return -g;
  throw DivisionError("value at 1 is not a unit: " + f.str());
}

}  // namespace ttk
