#ifndef SKBRACE_PROVENANCE_HPP_
#define SKBRACE_PROVENANCE_HPP_

#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

namespace skb {

  //! Names the construction that produced a table-backed object and the
  //! inputs it was given, for serialization and diagnostics.
  struct Provenance {
    std::string                                      construction;
    std::vector<std::pair<std::string, std::string>> inputs;

    Provenance& with(std::string key, std::string value) {
      inputs.emplace_back(std::move(key), std::move(value));
      return *this;
    }
  };

}  // namespace skb

#endif  // SKBRACE_PROVENANCE_HPP_
