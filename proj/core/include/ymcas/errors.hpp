#ifndef YMCAS_ERRORS_HPP
#define YMCAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ymcas {

/// Thrown when an internal invariant fails: a division that had to be exact
/// was not, a basis that had to be independent was not, a verification pass
/// over freshly computed data found a contradiction. These are never
/// recoverable; the message names the invariant that broke.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace ymcas

#endif
