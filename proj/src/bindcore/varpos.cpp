#include "bindcore/varpos.hpp"

#include <algorithm>

#include "bindcore/debug.hpp"

namespace bindcore {

namespace {

bool key_less(const VarPosMap::Entry& e, VarKey k) { return e.key < k; }

}  // namespace

void VarPosMap::push_back(VarKey key, std::size_t slot, std::string name) {
  if (!entries_.empty() && entries_.back().key >= key) {
    throw VarPosError("VarPosMap::push_back: keys must be strictly ascending");
  }
  entries_.push_back(Entry{key, slot, std::move(name)});
}

VarPosMap VarPosMap::with(VarKey key, std::size_t slot, std::string name) const {
  VarPosMap out;
  out.entries_.reserve(entries_.size() + 1);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, key_less);
  out.entries_.insert(out.entries_.end(), entries_.begin(), it);
  out.entries_.push_back(Entry{key, slot, std::move(name)});
  // An inner binding of the same variable shadows the outer one.
  if (it != entries_.end() && it->key == key) ++it;
  out.entries_.insert(out.entries_.end(), it, entries_.end());
  return out;
}

bool VarPosMap::contains(VarKey key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, key_less);
  return it != entries_.end() && it->key == key;
}

const VarPosMap::Entry& VarPosMap::find(VarKey key) const {
  debug::count_lookup();
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, key_less);
  if (it == entries_.end() || it->key != key) {
    throw VarPosError("VarPosMap: no slot for variable key " + std::to_string(key));
  }
  return *it;
}

}  // namespace bindcore
