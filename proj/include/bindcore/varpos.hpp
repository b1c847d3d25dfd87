#ifndef BINDCORE_VARPOS_HPP
#define BINDCORE_VARPOS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bindcore {

using VarKey = std::uint64_t;

/// Map from variable key to environment slot, consulted only while the first
/// phase of a closure runs.
///
/// Each entry also carries the name the variable renders as in the scope
/// being built, which is what binder renaming avoids.
class VarPosMap {
 public:
  struct Entry {
    VarKey key;
    std::size_t slot;
    std::string name;
  };

  VarPosMap() = default;

  /// Entries must be appended in strictly ascending key order.
  void push_back(VarKey key, std::size_t slot, std::string name);

  /// Copy of this map with `key` mapped to `slot`, replacing any entry
  /// already present for it.
  VarPosMap with(VarKey key, std::size_t slot, std::string name) const;

  std::size_t slot(VarKey key) const { return find(key).slot; }
  const std::string& name(VarKey key) const { return find(key).name; }
  bool contains(VarKey key) const;

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  const Entry& find(VarKey key) const;

  std::vector<Entry> entries_;
};

class VarPosError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bindcore

#endif  // BINDCORE_VARPOS_HPP
