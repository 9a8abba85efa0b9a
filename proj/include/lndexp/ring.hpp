#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lndexp/errors.hpp"

namespace lndexp {

/// An ordered list of variable names, fixed at construction. The declared
/// order is the canonical index order for monomials and for printing.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidArgument("ring needs at least one variable");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw InvalidArgument("duplicate variable name '" + names_[i] + "'");
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const Ring& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

inline RingPtr make_ring(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return make_ring(std::move(v));
}

/// Cross-object operations require identical rings; identity of the
/// shared pointer is the fast path, name-list equality the slow one.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("values live in different rings");
}

}  // namespace lndexp
