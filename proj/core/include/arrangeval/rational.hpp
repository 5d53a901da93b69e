#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arrangeval {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;
using IntVec = std::vector<Integer>;

// Accepts "p/q", "p" and optional leading sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// p/q in lowest terms.
Rational ratio(const Integer& p, const Integer& q);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const Vec& v);
std::string to_string(const IntVec& v);

Integer floor_of(const Rational& q);
Rational frac_of(const Rational& q);
bool is_integer(const Rational& q);
int sign_of(const Rational& q);
int sign_of(const Integer& z);

Rational dot(const Vec& a, const Vec& b);
Rational dot(const IntVec& a, const Vec& b);
Integer dot(const IntVec& a, const IntVec& b);

Integer gcd_of(const IntVec& v);
Integer lcm_of_denominators(const Vec& v);

Vec to_rational(const IntVec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
bool is_zero(const Vec& v);
bool is_zero(const IntVec& v);

// Divides by the gcd; first nonzero entry made positive when normalize_sign is set.
IntVec primitive(const IntVec& v, bool normalize_sign = false);
// Smallest positive multiple of a rational vector that is integral and primitive.
IntVec primitive_integer(const Vec& v);

}  // namespace arrangeval
