#pragma once

#include <string>
#include <vector>

namespace lie5 {

// One verified claim: computed vs expected under exact comparison.
struct Claim {
  std::string description;
  std::string computed;
  std::string expected;
  std::string provenance;
  bool pass = false;
};

struct Report {
  std::vector<Claim> claims;

  void add(std::string description, std::string computed, std::string expected,
           std::string provenance) {
    bool pass = computed == expected;
    claims.push_back({std::move(description), std::move(computed),
                      std::move(expected), std::move(provenance), pass});
  }

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : claims) n += c.pass;
    return n;
  }
  std::size_t failed() const { return claims.size() - passed(); }
  bool all_pass() const { return failed() == 0; }

  void merge(const Report& other) {
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  }
};

}  // namespace lie5
