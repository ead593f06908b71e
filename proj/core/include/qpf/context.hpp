#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qpf {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position` is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Order of a cyclic factor. Zero encodes the infinite cyclic group.
inline constexpr std::int64_t kInfinite = 0;

struct FactorSpec {
  std::int64_t order = kInfinite;

  bool finite() const noexcept { return order != kInfinite; }
  bool operator==(const FactorSpec&) const = default;
};

/// Free product of cyclic groups, each with a printable generator name.
class FreeProductContext {
 public:
  FreeProductContext(std::vector<FactorSpec> factors, std::vector<std::string> names);

  std::size_t size() const noexcept { return factors_.size(); }
  const FactorSpec& factor(std::size_t i) const { return factors_.at(i); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<FactorSpec>& factors() const noexcept { return factors_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Index of the factor named `name`, or size() if absent.
  std::size_t find(std::string_view name) const noexcept;

  bool torsion_free() const noexcept;

  /// Canonical exponent of g^e in factor i: 1..n-1 for Z_n (0 for identity), e itself for Z.
  std::int64_t canonical_exponent(std::size_t i, std::int64_t e) const;

  /// Order of g^e in factor i (kInfinite for Z, n / gcd(n, e) for Z_n).
  std::int64_t element_order(std::size_t i, std::int64_t e) const;

  /// Round-trippable config string, e.g. "a=Z,b=Z3".
  std::string to_string() const;

  bool operator==(const FreeProductContext&) const = default;

 private:
  std::vector<FactorSpec> factors_;
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const FreeProductContext>;

/// Parses "Z,Z", "Z3,Z5" or "a=Z3,b=Z". Unnamed factors get a, b, c, ... in order.
ContextPtr parse_context(std::string_view text);

ContextPtr make_context(std::vector<FactorSpec> factors, std::vector<std::string> names = {});

/// Two contexts are compatible when they are the same object or structurally equal.
bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept;

/// Default generator name for factor i: a..z, then g26, g27, ...
std::string default_factor_name(std::size_t i);

/// g^e with g the generator of a cyclic factor. Exponent 0 is the identity of that factor.
struct FactorElement {
  std::uint32_t factor = 0;
  std::int64_t exponent = 0;

  bool is_identity() const noexcept { return exponent == 0; }
  bool operator==(const FactorElement&) const = default;
  auto operator<=>(const FactorElement&) const = default;
};

/// A nonidentity factor element in canonical exponent form.
using Letter = FactorElement;

}  // namespace qpf
