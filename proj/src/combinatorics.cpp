#include "qsym/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace qsym {

namespace {

// Bitmask subset enumeration below caps the degree.
constexpr int kMaxEnumerationDegree = 24;

std::string join(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

void check_degree(int n) {
  if (n <= 0) throw std::invalid_argument("degree must be >= 1, got " + std::to_string(n));
  if (n > kMaxEnumerationDegree) throw std::invalid_argument("degree " + std::to_string(n) + " too large to enumerate");
}

std::set<int> partial_sums(const std::vector<int>& parts, int n) {
  std::set<int> out;
  int sum = 0;
  for (int p : parts) {
    sum += std::abs(p);
    if (sum != n) out.insert(sum);
  }
  return out;
}

// Parts from cut positions; cuts is a sorted subset of {0..n-1}.
std::vector<int> parts_from_cuts(const std::set<int>& cuts, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  parts.push_back(n - prev);
  return parts;
}

std::vector<int> sign_word(const SignedComposition& alpha) {
  std::vector<int> signs;
  signs.reserve(alpha.degree());
  for (int p : alpha.parts()) signs.insert(signs.end(), std::abs(p), p < 0 ? -1 : 1);
  return signs;
}

SignedComposition signed_from_cuts(const std::set<int>& cuts, const std::vector<int>& signs) {
  const int n = static_cast<int>(signs.size());
  std::vector<int> parts = parts_from_cuts(cuts, n);
  int start = 0;
  for (int& p : parts) {
    const int len = p;
    p *= signs[start];
    start += len;
  }
  return SignedComposition(std::move(parts));
}

// All supersets of base within base ∪ free, in no particular order.
std::vector<std::set<int>> supersets(const std::set<int>& base, const std::vector<int>& free) {
  std::vector<std::set<int>> out;
  const std::size_t count = std::size_t{1} << free.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::set<int> s = base;
    for (std::size_t b = 0; b < free.size(); ++b) {
      if (mask >> b & 1U) s.insert(free[b]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  auto trim = [](std::string_view t) {
    const auto b = t.find_first_not_of(" \t");
    if (b == std::string_view::npos) return std::string_view{};
    return t.substr(b, t.find_last_not_of(" \t") - b + 1);
  };
  const std::string original(text);
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) throw std::invalid_argument("empty integer list");
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw std::invalid_argument("malformed integer '" + std::string(field) + "' in '" + original + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}


std::string to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::A: return "A";
    case Flavor::B: return "B";
    case Flavor::S: return "S";
  }
  return "?";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "A" || text == "a") return Flavor::A;
  if (text == "B" || text == "b") return Flavor::B;
  if (text == "S" || text == "s") return Flavor::S;
  throw std::invalid_argument("unknown flavor '" + std::string(text) + "' (expected A, B or S)");
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be >= 1: " + join(parts_));
    degree_ += p;
  }
}

Composition Composition::parse(std::string_view text) { return Composition(parse_int_list(text)); }

std::string Composition::to_string() const { return join(parts_); }

PseudoComposition::PseudoComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("pseudo-composition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < (i == 0 ? 0 : 1)) {
      throw std::invalid_argument("invalid pseudo-composition: " + join(parts_));
    }
    degree_ += parts_[i];
  }
  if (degree_ == 0) throw std::invalid_argument("pseudo-composition of degree 0");
}

PseudoComposition PseudoComposition::parse(std::string_view text) {
  return PseudoComposition(parse_int_list(text));
}

std::string PseudoComposition::to_string() const { return join(parts_); }

SignedComposition::SignedComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("signed composition must have at least one part");
  for (int p : parts_) {
    if (p == 0) throw std::invalid_argument("signed composition parts must be nonzero: " + join(parts_));
    degree_ += std::abs(p);
  }
}

SignedComposition SignedComposition::parse(std::string_view text) {
  return SignedComposition(parse_int_list(text));
}

std::string SignedComposition::to_string() const { return join(parts_); }

DescentData comp_to_descents(const Composition& alpha) {
  return {alpha.degree(), Flavor::A, partial_sums(alpha.parts(), alpha.degree())};
}

Composition descents_to_comp(const std::set<int>& positions, int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  for (int d : positions) {
    if (d < 1 || d > n - 1) {
      throw std::invalid_argument("descent position " + std::to_string(d) + " outside {1.." + std::to_string(n - 1) + "}");
    }
  }
  return Composition(parts_from_cuts(positions, n));
}

DescentData pseudo_to_descents(const PseudoComposition& alpha) {
  // A leading zero part contributes the running total 0, i.e. position 0.
  return {alpha.degree(), Flavor::B, partial_sums(alpha.parts(), alpha.degree())};
}

PseudoComposition descents_to_pseudo(const std::set<int>& positions, int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  for (int d : positions) {
    if (d < 0 || d > n - 1) {
      throw std::invalid_argument("descent position " + std::to_string(d) + " outside {0.." + std::to_string(n - 1) + "}");
    }
  }
  // Position 0 yields the leading zero part.
  return PseudoComposition(parts_from_cuts(positions, n));
}

bool refines(const Composition& beta, const Composition& alpha) {
  if (beta.degree() != alpha.degree()) throw std::invalid_argument("refines: degree mismatch");
  const auto db = comp_to_descents(beta).positions;
  const auto da = comp_to_descents(alpha).positions;
  return std::includes(db.begin(), db.end(), da.begin(), da.end());
}

bool refines(const PseudoComposition& beta, const PseudoComposition& alpha) {
  if (beta.degree() != alpha.degree()) throw std::invalid_argument("refines: degree mismatch");
  const auto db = pseudo_to_descents(beta).positions;
  const auto da = pseudo_to_descents(alpha).positions;
  return std::includes(db.begin(), db.end(), da.begin(), da.end());
}

bool signed_refines(const SignedComposition& beta, const SignedComposition& alpha) {
  if (beta.degree() != alpha.degree()) throw std::invalid_argument("signed_refines: degree mismatch");
  if (sign_word(beta) != sign_word(alpha)) return false;
  const auto cb = partial_sums(beta.parts(), beta.degree());
  const auto ca = partial_sums(alpha.parts(), alpha.degree());
  return std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
}

bool refines(const SignedComposition& beta, const SignedComposition& alpha) { return signed_refines(beta, alpha); }

std::vector<Composition> refinements_of(const Composition& alpha) {
  const int n = alpha.degree();
  const auto des = comp_to_descents(alpha).positions;
  std::vector<int> free;
  for (int i = 1; i < n; ++i) {
    if (!des.contains(i)) free.push_back(i);
  }
  std::vector<Composition> out;
  for (const auto& s : supersets(des, free)) out.push_back(descents_to_comp(s, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PseudoComposition> refinements_of(const PseudoComposition& alpha) {
  const int n = alpha.degree();
  const auto des = pseudo_to_descents(alpha).positions;
  std::vector<int> free;
  for (int i = 0; i < n; ++i) {
    if (!des.contains(i)) free.push_back(i);
  }
  std::vector<PseudoComposition> out;
  for (const auto& s : supersets(des, free)) out.push_back(descents_to_pseudo(s, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedComposition> refinements_of(const SignedComposition& alpha) {
  const int n = alpha.degree();
  const auto signs = sign_word(alpha);
  const auto cuts = partial_sums(alpha.parts(), n);
  std::vector<int> free;
  for (int i = 1; i < n; ++i) {
    if (!cuts.contains(i)) free.push_back(i);
  }
  std::vector<SignedComposition> out;
  for (const auto& s : supersets(cuts, free)) out.push_back(signed_from_cuts(s, signs));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  check_degree(n);
  std::vector<int> positions;
  for (int i = 1; i < n; ++i) positions.push_back(i);
  std::vector<Composition> out;
  for (const auto& s : supersets({}, positions)) out.push_back(descents_to_comp(s, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PseudoComposition> enumerate_pseudo(int n) {
  check_degree(n);
  std::vector<int> positions;
  for (int i = 0; i < n; ++i) positions.push_back(i);
  std::vector<PseudoComposition> out;
  for (const auto& s : supersets({}, positions)) out.push_back(descents_to_pseudo(s, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedComposition> enumerate_signed(int n) {
  check_degree(n);
  std::vector<SignedComposition> out;
  for (const auto& c : enumerate_compositions(n)) {
    const auto& parts = c.parts();
    const std::size_t count = std::size_t{1} << parts.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<int> signed_parts = parts;
      for (std::size_t b = 0; b < parts.size(); ++b) {
        if (mask >> b & 1U) signed_parts[b] = -signed_parts[b];
      }
      out.emplace_back(std::move(signed_parts));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedCompData signed_comp_data(const SignedComposition& alpha) {
  SignedCompData data;
  data.signs = sign_word(alpha);
  const auto& parts = alpha.parts();
  if (parts.front() < 0) data.descents.insert(0);
  int sum = 0;
  for (std::size_t r = 0; r + 1 < parts.size(); ++r) {
    sum += std::abs(parts[r]);
    // Only a negative block followed by a positive one can be an ascent.
    if (parts[r] > 0 || parts[r + 1] < 0) data.descents.insert(sum);
  }
  return data;
}

PseudoComposition merge_to_pseudo(const SignedComposition& alpha) {
  return descents_to_pseudo(signed_comp_data(alpha).descents, alpha.degree());
}

}  // namespace qsym
