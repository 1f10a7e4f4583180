#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace burnside {

  enum class ErrorCode {
    invalid_word,
    empty_input,
    not_phi_image,
    not_r1_reduced,
    not_uniform,
    bound_too_large,
    bad_expression,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  // Thrown when an operation's precondition on its input word is violated.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace burnside
