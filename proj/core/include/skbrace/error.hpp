#ifndef SKBRACE_ERROR_HPP_
#define SKBRACE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace skb {

  //! Raised when an input violates the documented precondition of an
  //! operation (malformed table, map that is not a homomorphism, subgroup
  //! that fails a required condition, exceeded work limits, ...).
  class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Raised when a result that must hold for mathematical reasons fails to
  //! hold, e.g. a constructed brace violating the brace relation or the two
  //! routes of the ideal classification disagreeing.  Always a bug or a
  //! counterexample; never a user error.
  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  namespace detail {
    // Runs fn, converting precondition failures raised by nested checks into
    // internal errors.  Used where the caller has already established every
    // precondition, so a nested failure contradicts the theory.
    template <typename F>
    auto internal_guard(char const* what, F&& fn) -> decltype(fn()) {
      try {
        return fn();
      } catch (PreconditionError const& e) {
        throw InternalError(std::string(what) + ": " + e.what());
      }
    }
  }  // namespace detail

}  // namespace skb

#endif  // SKBRACE_ERROR_HPP_
