#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hallkit/group.hpp"

namespace hallkit {

/// Malformed group file. line is 1-based; generator is the 0-based index of
/// the offending generator when one is to blame.
class GroupParseError : public std::runtime_error {
 public:
  GroupParseError(const std::string& msg, std::size_t line, std::optional<std::size_t> generator);
  std::size_t line() const { return line_; }
  std::optional<std::size_t> generator() const { return generator_; }

 private:
  std::size_t line_;
  std::optional<std::size_t> generator_;
};

struct GroupFile {
  std::string name;
  PermGroup group;
};

/// { "name": string, "degree": n, "generators": [[image lists]] }, 0-based.
GroupFile parse_group_json(const std::string& text);
GroupFile read_group_file(const std::string& path);
std::string group_to_json(const std::string& name, const PermGroup& g);

}  // namespace hallkit
