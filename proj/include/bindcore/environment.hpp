#ifndef BINDCORE_ENVIRONMENT_HPP
#define BINDCORE_ENVIRONMENT_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <typeinfo>
#include <vector>

#include "bindcore/debug.hpp"

namespace bindcore {

/// Raised in debug mode when a slot is read at a type other than the one it
/// was written at, or outside the environment bounds.
class EnvironmentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One opaque environment slot. The type tag is always recorded and only
/// checked when instrumentation is enabled.
struct Cell {
  std::shared_ptr<const void> value;
  const std::type_info* type = nullptr;

  template <class T>
  static Cell of(T v) {
    return Cell{std::make_shared<const T>(std::move(v)), &typeid(T)};
  }
};

/// Fixed-size store of heterogeneous values indexed by slot.
///
/// Copies share storage. Slots are written while an environment is being
/// prepared and only read afterwards, so sharing is safe once a closure has
/// started evaluating against it.
class Environment {
 public:
  explicit Environment(std::size_t size)
      : cells_(std::make_shared<std::vector<Cell>>(size)) {}

  std::size_t size() const { return cells_->size(); }

  template <class T>
  const T& get(std::size_t slot) const {
    if (debug::enabled()) check(slot, typeid(T));
    return *static_cast<const T*>((*cells_)[slot].value.get());
  }

  template <class T>
  void set(std::size_t slot, T value) {
    set_cell(slot, Cell::of<T>(std::move(value)));
  }

  void set_cell(std::size_t slot, Cell cell) {
    if (debug::enabled() && slot >= cells_->size()) {
      throw EnvironmentError("environment write out of bounds at slot " + std::to_string(slot));
    }
    (*cells_)[slot] = std::move(cell);
  }

  /// Deep copy of the slot table (values themselves stay shared).
  Environment copy() const {
    Environment e(0);
    e.cells_ = std::make_shared<std::vector<Cell>>(*cells_);
    return e;
  }

 private:
  void check(std::size_t slot, const std::type_info& wanted) const {
    if (slot >= cells_->size()) {
      throw EnvironmentError("environment read out of bounds at slot " + std::to_string(slot));
    }
    const Cell& c = (*cells_)[slot];
    if (c.type == nullptr) {
      throw EnvironmentError("environment read of unset slot " + std::to_string(slot));
    }
    if (*c.type != wanted) {
      throw EnvironmentError("environment slot " + std::to_string(slot) + " written as " +
                             c.type->name() + " but read as " + wanted.name());
    }
  }

  std::shared_ptr<std::vector<Cell>> cells_;
};

}  // namespace bindcore

#endif  // BINDCORE_ENVIRONMENT_HPP
