// Exact integer-coefficient Laurent polynomials in one variable.
//
// This is the value type of every invariant in the project: Alexander and
// Jones polynomials live here, as does the Kauffman bracket (whose variable
// is conventionally called A instead of t; the type does not care).  The
// representation is a sparse term list sorted by exponent, with no zero
// coefficients stored; the zero polynomial is the empty list.  Coefficients
// are arbitrary precision so overflow is impossible by construction.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttk/bigint.hpp"
#include "ttk/error.hpp"

namespace ttk {

class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;  // (exponent, coefficient)

  LaurentPoly() = default;  // zero

  static LaurentPoly constant(BigInt c);
  static LaurentPoly term(BigInt c, int e);
  static LaurentPoly variable() { return term(1, 1); }  // t
  static LaurentPoly one() { return constant(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  // Exponent range.  Calling these on the zero polynomial is a bug.
  int min_exp() const;
  int max_exp() const;
  // max_exp - min_exp; 0 for constants and for the zero polynomial.
  int breadth() const { return terms_.empty() ? 0 : max_exp() - min_exp(); }

  BigInt coeff(int e) const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  LaurentPoly shifted(int k) const;  // multiply by t^k
  LaurentPoly inverted_variable() const;  // substitute t -> t^-1

  BigInt eval_at_one() const;
  BigInt eval_at_minus_one() const;

  // Rendering: terms in ascending exponent order, e.g. "t^-1 - 1 + t".
  std::string str() const;
  // Parses the same format (also accepts an optional '*' between a
  // coefficient and 't').  Throws ParseError.
  static LaurentPoly parse(std::string_view text);

  // Construct from a raw term list (any order, duplicates allowed).
  static LaurentPoly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

// f / g in the Laurent ring; throws DivisionError unless g divides f
// exactly over the integers.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

// Substitution t -> t^-1 as a free function (operation name of the spec).
inline LaurentPoly invert_variable(const LaurentPoly& f) {
  return f.inverted_variable();
}

inline BigInt eval_at_minus_one(const LaurentPoly& f) {
  return f.eval_at_minus_one();
}

// The unique representative g = (+/-) t^k * f with g(t) = g(1/t) and
// g(1) = 1.  Defined exactly for polynomials that are a unit multiple of a
// knot Alexander polynomial; anything else throws DivisionError.
LaurentPoly normalize_alexander(const LaurentPoly& f);

}  // namespace ttk
