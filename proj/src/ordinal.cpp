#include "enl/ordinal.hpp"

#include <charconv>
#include <ostream>

#include "enl/errors.hpp"

namespace enl {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("ordinal coefficient overflow");
  return out;
}

std::uint64_t parse_natural(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad ordinal literal '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  return {checked_add(a.omega_coeff(), b.omega_coeff()),
          checked_add(a.finite_part(), b.finite_part())};
}

Comparison compare(const Ordinal& a, const Ordinal& b) {
  if (a < b) return Comparison::Less;
  if (b < a) return Comparison::Greater;
  return Comparison::Equal;
}

std::string Ordinal::to_string() const {
  if (omega_ == 0) return std::to_string(finite_);
  std::string out = "w*" + std::to_string(omega_);
  if (finite_ != 0) out += "+" + std::to_string(finite_);
  return out;
}

Ordinal Ordinal::parse(std::string_view text) {
  if (text.size() >= 1 && text[0] == 'w') {
    std::string_view rest = text.substr(1);
    std::uint64_t coeff = 1;
    if (!rest.empty() && rest[0] == '*') {
      rest.remove_prefix(1);
      auto plus = rest.find('+');
      coeff = parse_natural(rest.substr(0, plus), text);
      rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus);
    }
    std::uint64_t fin = 0;
    if (!rest.empty()) {
      if (rest[0] != '+') throw ParseError("bad ordinal literal '" + std::string(text) + "'");
      fin = parse_natural(rest.substr(1), text);
    }
    return {coeff, fin};
  }
  return Ordinal::finite(parse_natural(text, text));
}

std::ostream& operator<<(std::ostream& os, const Ordinal& o) { return os << o.to_string(); }

std::ostream& operator<<(std::ostream& os, Comparison c) {
  switch (c) {
    case Comparison::Less: return os << "Less";
    case Comparison::Equal: return os << "Equal";
    case Comparison::Greater: return os << "Greater";
  }
  return os;
}

}  // namespace enl
