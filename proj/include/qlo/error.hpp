#ifndef QLO_ERROR_HPP_
#define QLO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qlo {

  // Raised for precondition violations: malformed input, non-positive
  // arguments where positives are required, alphabet mismatches, caps.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised by the element/preset grammars. The CLI maps it to exit code 64.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace qlo

#endif  // QLO_ERROR_HPP_
