#include "qsym/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsym {

namespace {

Series::Bounds merge_bounds(const Series::Bounds& a, const Series::Bounds& b) {
  Series::Bounds out = a;
  for (const auto& [alphabet, bound] : b) {
    auto [it, inserted] = out.emplace(alphabet, bound);
    if (!inserted && it->second != bound) {
      throw std::domain_error(std::string("truncation bound mismatch on alphabet ") + letter(alphabet) + ": " +
                              std::to_string(it->second) + " vs " + std::to_string(bound));
    }
  }
  return out;
}

int min_index(Alphabet alphabet) { return alphabet == Alphabet::U || alphabet == Alphabet::UY ? 1 : 0; }

}  // namespace

const char* letter(Alphabet alphabet) {
  switch (alphabet) {
    case Alphabet::X: return "x";
    case Alphabet::Y: return "y";
    case Alphabet::U: return "u";
    case Alphabet::V: return "v";
    case Alphabet::UY: return "uy";
    case Alphabet::VY: return "vy";
  }
  return "?";
}

Variable::Variable(Alphabet a, int i) : alphabet(a), index(i) {
  if (i < min_index(a)) {
    throw std::invalid_argument(std::string("variable index out of range: ") + letter(a) + std::to_string(i));
  }
}

std::string Variable::to_string() const { return letter(alphabet) + std::to_string(index); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

Monomial::Monomial(const std::vector<Variable>& factors) {
  std::vector<Variable> sorted = factors;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& v : sorted) {
    if (!powers_.empty() && powers_.back().first == v) {
      ++powers_.back().second;
    } else {
      powers_.emplace_back(v, 1);
    }
  }
}

Monomial::Monomial(std::vector<std::pair<Variable, int>> powers) {
  std::sort(powers.begin(), powers.end());
  for (const auto& [v, e] : powers) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == v) {
      powers_.back().second += e;
    } else {
      powers_.emplace_back(v, e);
    }
  }
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : powers_) d += e;
  return d;
}

bool Monomial::uses(Alphabet alphabet) const {
  return std::any_of(powers_.begin(), powers_.end(), [&](const auto& p) { return p.first.alphabet == alphabet; });
}

std::string Monomial::to_string() const {
  if (powers_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : powers_) {
    if (!out.empty()) out += '*';
    out += v.to_string();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<Variable, int>> merged;
  merged.reserve(a.powers_.size() + b.powers_.size());
  std::merge(a.powers_.begin(), a.powers_.end(), b.powers_.begin(), b.powers_.end(), std::back_inserter(merged));
  Monomial out;
  for (const auto& [v, e] : merged) {
    if (!out.powers_.empty() && out.powers_.back().first == v) {
      out.powers_.back().second += e;
    } else {
      out.powers_.emplace_back(v, e);
    }
  }
  return out;
}

Series Series::constant(std::int64_t c) {
  Series s;
  s.add_term(Monomial{}, c);
  return s;
}

void Series::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  for (const auto& [v, e] : m.powers()) {
    auto it = bounds_.find(v.alphabet);
    if (it != bounds_.end() && v.index > it->second) {
      throw std::domain_error("variable " + v.to_string() + " exceeds truncation bound " + std::to_string(it->second));
    }
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Series::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Series::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& [m, c] : terms_) s = checked_add(s, c);
  return s;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t magnitude = c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) magnitude = -c;
    const bool is_constant = m.powers().empty();
    if (magnitude != 1 || is_constant) {
      out += std::to_string(magnitude);
      if (!is_constant) out += '*';
    }
    if (!is_constant) out += m.to_string();
    first = false;
  }
  return out;
}

nlohmann::json Series::to_json() const {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [v, e] : m.powers()) mono[v.to_string()] = e;
    records.push_back({{"monomial", mono}, {"coeff", c}});
  }
  return records;
}

Series& Series::operator+=(const Series& other) {
  bounds_ = merge_bounds(bounds_, other.bounds_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Series operator+(const Series& a, const Series& b) {
  Series out = a;
  out += b;
  return out;
}

Series operator-(const Series& a, const Series& b) { return a + (-1 * b); }

Series operator*(std::int64_t c, const Series& a) {
  Series out(a.bounds_);
  for (const auto& [m, coeff] : a.terms_) out.add_term(m, checked_mul(c, coeff));
  return out;
}

Series operator*(const Series& a, const Series& b) {
  Series out(merge_bounds(a.bounds_, b.bounds_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, checked_mul(ca, cb));
  }
  return out;
}

bool operator==(const Series& a, const Series& b) {
  merge_bounds(a.bounds_, b.bounds_);
  return a.terms_ == b.terms_;
}

Series add(const Series& a, const Series& b) { return a + b; }
Series multiply(const Series& a, const Series& b) { return a * b; }
bool equals(const Series& a, const Series& b) { return a == b; }

Series rename_alphabet(const Series& a, Alphabet from, Alphabet to) {
  Series::Bounds bounds;
  for (const auto& [alphabet, bound] : a.bounds()) {
    const Alphabet target = alphabet == from ? to : alphabet;
    auto [it, inserted] = bounds.emplace(target, bound);
    if (!inserted && it->second != bound) throw std::domain_error("rename_alphabet: conflicting truncation bounds");
  }
  Series out(bounds);
  for (const auto& [m, c] : a.terms()) {
    std::vector<std::pair<Variable, int>> powers;
    for (const auto& [v, e] : m.powers()) powers.emplace_back(Variable(v.alphabet == from ? to : v.alphabet, v.index), e);
    out.add_term(Monomial(std::move(powers)), c);
  }
  return out;
}

Series substitute_u_equals_v(const Series& a) {
  for (const auto& [alphabet, bound] : a.bounds()) {
    if (alphabet == Alphabet::X || alphabet == Alphabet::Y) {
      throw std::invalid_argument("substitute_u_equals_v: series uses the X/Y alphabets");
    }
  }
  for (const auto& [m, c] : a.terms()) {
    if (m.uses(Alphabet::X) || m.uses(Alphabet::Y)) {
      throw std::invalid_argument("substitute_u_equals_v: series uses the X/Y alphabets");
    }
  }
  return rename_alphabet(rename_alphabet(a, Alphabet::U, Alphabet::V), Alphabet::UY, Alphabet::VY);
}

}  // namespace qsym
