#ifndef DFSTAB_ERRORS_HPP
#define DFSTAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfstab {

// Raised when a computation would need algebraic numbers outside the
// rationals and the factor-wise workaround cannot complete (e.g. a
// factorization block turns out to be reducible past the refinement cap).
class UnsupportedFieldError : public std::runtime_error {
public:
    explicit UnsupportedFieldError(const std::string& what)
        : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace dfstab

#endif
