#pragma once

#include <gmpxx.h>

#include <string>

namespace treespec {

// Exact arbitrary-precision scalars. mpq_class values stay canonical
// (lowest terms, positive denominator, zero is 0/1) as long as they are
// constructed through canonicalizing paths; make_rational and
// parse_rational are the only entry points that accept raw
// numerator/denominator pairs.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Throws std::invalid_argument when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts an integer literal or "p/q". Throws std::invalid_argument.
BigRational parse_rational(const std::string& text);

std::string to_string(const BigInt& z);
std::string to_string(const BigRational& q);  // "p" or "p/q"

inline int sign_of(const BigInt& z) { return sgn(z); }
inline int sign_of(const BigRational& q) { return sgn(q); }

}  // namespace treespec
