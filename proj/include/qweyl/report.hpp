#pragma once

#include <string>
#include <vector>

#include "qweyl/presentation.hpp"

namespace qweyl {

/// Outcome of a verification: one entry per checked identity.
struct Report {
  std::string title;
  std::vector<IdentityCheck> entries;
  std::vector<std::string> notes;

  void add(std::string identity, bool ok, std::string witness = {}) {
    entries.push_back({std::move(identity), ok, std::move(witness)});
  }
  void append(const std::vector<IdentityCheck>& more) { entries.insert(entries.end(), more.begin(), more.end()); }
  bool ok() const {
    for (const auto& e : entries) {
      if (!e.ok) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& e : entries) f += e.ok ? 0 : 1;
    return f;
  }
};

}  // namespace qweyl
