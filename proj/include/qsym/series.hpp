#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qsym {

/// X and Y are the plain alphabets (x_0 only appears in type B expansions).
/// U/V carry the negative/nonnegative letters of signed expansions; UY/VY
/// are the second signed pair used on the Y side of bipartite checks.
enum class Alphabet : std::uint8_t { X, Y, U, V, UY, VY };

const char* letter(Alphabet alphabet);

/// Which copy of the alphabets an expansion lands in: First is X (or U/V),
/// Second is Y (or UY/VY).
enum class Side { First, Second };

inline Alphabet plain_alphabet(Side side) { return side == Side::First ? Alphabet::X : Alphabet::Y; }
inline Alphabet negative_alphabet(Side side) { return side == Side::First ? Alphabet::U : Alphabet::UY; }
inline Alphabet positive_alphabet(Side side) { return side == Side::First ? Alphabet::V : Alphabet::VY; }

struct Variable {
  Alphabet alphabet = Alphabet::X;
  int index = 0;

  Variable() = default;
  Variable(Alphabet a, int i);

  std::string to_string() const;

  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;
};

/// Commutative monomial with positive exponents, stored sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::vector<Variable>& factors);
  explicit Monomial(std::vector<std::pair<Variable, int>> powers);

  const std::vector<std::pair<Variable, int>>& powers() const { return powers_; }
  int total_degree() const;
  bool uses(Alphabet alphabet) const;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<Variable, int>> powers_;
};

/// Exact polynomial with int64 coefficients over truncated alphabets.
///
/// Each alphabet in use carries its truncation bound N as metadata.
/// Combining two series that declare different bounds for the same
/// alphabet throws std::domain_error; all coefficient arithmetic throws
/// std::overflow_error instead of wrapping.
class Series {
 public:
  using Bounds = std::map<Alphabet, int>;

  Series() = default;
  explicit Series(Bounds bounds) : bounds_(std::move(bounds)) {}

  static Series constant(std::int64_t c);

  /// Adds c * m. Indices must respect the declared bound of their alphabet.
  void add_term(const Monomial& m, std::int64_t c);

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  const Bounds& bounds() const { return bounds_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const Monomial& m) const;
  /// Sum of all coefficients (evaluation at all variables = 1).
  std::int64_t coefficient_sum() const;

  std::string to_string() const;
  nlohmann::json to_json() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(std::int64_t c, const Series& a);
  Series& operator+=(const Series& other);
  friend bool operator==(const Series& a, const Series& b);

 private:
  std::map<Monomial, std::int64_t> terms_;
  Bounds bounds_;
};

Series add(const Series& a, const Series& b);
Series multiply(const Series& a, const Series& b);
bool equals(const Series& a, const Series& b);

/// Replaces every u_i by v_i (and uy_i by vy_i). Throws on X/Y variables.
Series substitute_u_equals_v(const Series& a);

/// Moves every variable of alphabet `from` to alphabet `to`, keeping indices.
Series rename_alphabet(const Series& a, Alphabet from, Alphabet to);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace qsym
