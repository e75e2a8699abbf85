#pragma once

#include <stdexcept>
#include <string>

namespace genknot {

// A crossing, edge, vertex or arc name that does not exist in the object it
// was looked up in.
class UnknownIdError : public std::out_of_range {
 public:
  UnknownIdError(const std::string& what_kind, const std::string& id)
      : std::out_of_range("unknown " + what_kind + " " + id), id_(id) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

}  // namespace genknot
