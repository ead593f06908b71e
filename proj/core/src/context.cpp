#include "qpf/context.hpp"

#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace qpf {

FreeProductContext::FreeProductContext(std::vector<FactorSpec> factors,
                                       std::vector<std::string> names)
    : factors_(std::move(factors)), names_(std::move(names)) {
  if (factors_.size() < 2) {
    throw Error("a free product needs at least 2 factors");
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < factors_.size(); ++i) names_.push_back(default_factor_name(i));
  }
  if (names_.size() != factors_.size()) {
    throw Error("factor name count does not match factor count");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty factor name");
    if (!seen.insert(n).second) throw Error("duplicate factor name '" + n + "'");
  }
  for (const auto& f : factors_) {
    if (f.order < 0 || f.order == 1) {
      throw Error("finite factor order must be >= 2, got " + std::to_string(f.order));
    }
  }
}

std::size_t FreeProductContext::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return names_.size();
}

bool FreeProductContext::torsion_free() const noexcept {
  for (const auto& f : factors_) {
    if (f.finite()) return false;
  }
  return true;
}

std::int64_t FreeProductContext::canonical_exponent(std::size_t i, std::int64_t e) const {
  const auto n = factor(i).order;
  if (n == kInfinite) return e;
  auto r = e % n;
  if (r < 0) r += n;
  return r;
}

std::int64_t FreeProductContext::element_order(std::size_t i, std::int64_t e) const {
  const auto n = factor(i).order;
  if (n == kInfinite) return e == 0 ? 1 : kInfinite;
  const auto c = canonical_exponent(i, e);
  if (c == 0) return 1;
  return n / std::gcd(n, c);
}

std::string FreeProductContext::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << ',';
    out << names_[i] << '=';
    if (factors_[i].finite()) {
      out << 'Z' << factors_[i].order;
    } else {
      out << 'Z';
    }
  }
  return out.str();
}

std::string default_factor_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "g" + std::to_string(i);
}

ContextPtr make_context(std::vector<FactorSpec> factors, std::vector<std::string> names) {
  return std::make_shared<const FreeProductContext>(std::move(factors), std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

ContextPtr parse_context(std::string_view text) {
  std::vector<FactorSpec> factors;
  std::vector<std::string> names;
  bool any_named = false;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto item_end = comma == std::string_view::npos ? text.size() : comma;
    auto item = text.substr(pos, item_end - pos);
    std::size_t offset = pos;
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
      item.remove_prefix(1);
      ++offset;
    }
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
      item.remove_suffix(1);
    }
    if (item.empty()) throw ParseError("empty factor in context", offset);

    std::string name;
    auto eq = item.find('=');
    if (eq != std::string_view::npos) {
      name = std::string(item.substr(0, eq));
      for (char c : name) {
        if (!is_name_char(c)) throw ParseError("invalid factor name '" + name + "'", offset);
      }
      item.remove_prefix(eq + 1);
      offset += eq + 1;
      any_named = true;
    }
    if (item.empty() || item.front() != 'Z') {
      throw ParseError("factor must be Z or Z<n>", offset);
    }
    FactorSpec spec;
    if (item.size() > 1) {
      std::int64_t n = 0;
      for (std::size_t i = 1; i < item.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(item[i]))) {
          throw ParseError("bad factor order", offset + i);
        }
        n = n * 10 + (item[i] - '0');
        if (n > (std::int64_t{1} << 40)) throw ParseError("factor order too large", offset);
      }
      if (n < 2) throw ParseError("finite factor order must be >= 2", offset);
      spec.order = n;
    }
    factors.push_back(spec);
    names.push_back(name);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      if (any_named) throw ParseError("either name every factor or none", 0);
      names[i] = default_factor_name(i);
    }
  }
  if (factors.size() < 2) throw ParseError("a free product needs at least 2 factors", 0);
  try {
    return make_context(std::move(factors), std::move(names));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace qpf
