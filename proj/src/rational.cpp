#include "margchoice/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "margchoice/error.hpp"

namespace margchoice {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidUniverse: return "InvalidUniverse";
    case ErrorCode::EmptyMenu: return "EmptyMenu";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::UnknownAlternative: return "UnknownAlternative";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::TooManyOrders: return "TooManyOrders";
    case ErrorCode::NotInCore: return "NotInCore";
    case ErrorCode::NotRationalizable: return "NotRationalizable";
    case ErrorCode::PairSupportMissing: return "PairSupportMissing";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::PairCoverageMissing: return "PairCoverageMissing";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SameAlternative: return "SameAlternative";
    case ErrorCode::SingletonSupportMissing: return "SingletonSupportMissing";
    case ErrorCode::SupportOutsideCollection: return "SupportOutsideCollection";
    case ErrorCode::NotPotentiallyRationalizable: return "NotPotentiallyRationalizable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TieEncountered: return "TieEncountered";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::Parse, "not a rational number: \"" + std::string(text) + "\"");
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad(original);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad(original);
  if (!int_part.empty() && !all_digits(int_part)) bad(original);
  if (!frac_part.empty() && !all_digits(frac_part)) bad(original);

  mpz_class numerator(std::string(int_part) + std::string(frac_part), 10);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(numerator * scale) : Rational(numerator, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed.empty()) bad(text);

  if (auto slash = trimmed.find('/'); slash != std::string_view::npos) {
    std::string_view num = trimmed.substr(0, slash);
    std::string_view den = trimmed.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad(text);
    Rational q(mpz_class(std::string(num), 10), d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return parse_decimal(trimmed, text);
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

Rational nearest_rational(double x, long max_den) {
  // Convergents of the continued fraction; stop before the denominator bound.
  long double rem = x;
  mpz_class p_prev = 1, q_prev = 0;
  mpz_class p = static_cast<long>(std::floor(rem)), q = 1;
  rem -= std::floor(rem);
  for (int iter = 0; iter < 64 && rem > 1e-18L; ++iter) {
    rem = 1.0L / rem;
    long a = static_cast<long>(std::floor(rem));
    rem -= a;
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    if (q_next > max_den) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace margchoice
