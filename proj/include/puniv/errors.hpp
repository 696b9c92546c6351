#ifndef PUNIV_ERRORS_HPP
#define PUNIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace puniv {

/// Malformed or inconsistent input (bad documents, incompatible rings,
/// out-of-range indices, non-prime moduli, ...).  CLI exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed the configured search-space guard.
/// CLI exit code 3.
class guard_error : public std::runtime_error {
public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// A substitution that was required to be an algebra map is not one; carries
/// the index of the first violated relation.
class substitution_error : public std::runtime_error {
public:
  substitution_error(const std::string& what, std::size_t relation_index)
      : std::runtime_error(what), relation(relation_index) {}
  std::size_t relation;
};

}  // namespace puniv

#endif
