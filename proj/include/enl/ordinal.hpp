#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace enl {

/// An ordinal strictly below w^2, held in the canonical form w*omega_coeff + finite_part.
///
/// Walk lengths in a 1-graph count tip traversals in the omega coefficient and
/// branch traversals in the finite part, so every length and every walk-based
/// distance fits this form.
class Ordinal {
 public:
  constexpr Ordinal() = default;
  constexpr Ordinal(std::uint64_t omega_coeff, std::uint64_t finite_part)
      : omega_(omega_coeff), finite_(finite_part) {}

  static constexpr Ordinal finite(std::uint64_t n) { return {0, n}; }
  static constexpr Ordinal omega_multiple(std::uint64_t k) { return {k, 0}; }

  constexpr std::uint64_t omega_coeff() const { return omega_; }
  constexpr std::uint64_t finite_part() const { return finite_; }
  constexpr bool is_zero() const { return omega_ == 0 && finite_ == 0; }
  constexpr bool is_finite() const { return omega_ == 0; }

  // Lexicographic on (omega_coeff, finite_part).
  constexpr auto operator<=>(const Ordinal&) const = default;

  std::string to_string() const;

  /// Accepts "w*A+B", "w*A", "B" and "w" (whitespace-free). Throws ParseError.
  static Ordinal parse(std::string_view text);

 private:
  std::uint64_t omega_ = 0;
  std::uint64_t finite_ = 0;
};

/// Commutative (Hessenberg) sum; throws OverflowError when a coefficient overflows.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

inline Ordinal from_finite(std::uint64_t n) { return Ordinal::finite(n); }
inline Ordinal from_omega_multiple(std::uint64_t k) { return Ordinal::omega_multiple(k); }

enum class Comparison { Less, Equal, Greater };

Comparison compare(const Ordinal& a, const Ordinal& b);

std::ostream& operator<<(std::ostream& os, const Ordinal& o);
std::ostream& operator<<(std::ostream& os, Comparison c);

}  // namespace enl
