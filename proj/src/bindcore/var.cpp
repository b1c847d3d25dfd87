#include "bindcore/var.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace bindcore {

AnyVarInfo::AnyVarInfo(VarKey key, std::string prefix, std::optional<unsigned> suffix)
    : key_(key),
      prefix_(std::move(prefix)),
      suffix_(suffix),
      name_(detail::render_name(prefix_, suffix_)) {}

namespace detail {

namespace {

std::atomic<VarKey> g_next_key{0};

// Keeps suffixes well inside the range of unsigned.
constexpr std::size_t kMaxSuffixDigits = 9;

}  // namespace

VarKey fresh_key() { return g_next_key.fetch_add(1, std::memory_order_relaxed); }

SplitName split_name(std::string_view name) {
  std::size_t start = name.size();
  while (start > 0 && std::isdigit(static_cast<unsigned char>(name[start - 1]))) --start;
  if (name.size() - start > kMaxSuffixDigits) start = name.size() - kMaxSuffixDigits;
  while (start + 1 < name.size() && name[start] == '0') ++start;
  if (start == name.size()) return SplitName{std::string(name), std::nullopt};
  unsigned value = 0;
  for (std::size_t i = start; i < name.size(); ++i) value = value * 10 + unsigned(name[i] - '0');
  return SplitName{std::string(name.substr(0, start)), value};
}

std::string render_name(const std::string& prefix, std::optional<unsigned> suffix) {
  if (!suffix) return prefix;
  return prefix + std::to_string(*suffix);
}

std::string choose_binder_name(const std::string& prefix, const std::vector<std::string>& taken) {
  auto free = [&](const std::string& s) {
    return !s.empty() && std::find(taken.begin(), taken.end(), s) == taken.end();
  };
  if (free(prefix)) return prefix;
  for (unsigned i = 0;; ++i) {
    std::string candidate = prefix + std::to_string(i);
    if (free(candidate)) return candidate;
  }
}

std::vector<AnyVar> merge_vars(const std::vector<AnyVar>& a, const std::vector<AnyVar>& b) {
  std::vector<AnyVar> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i]->key() < b[j]->key()) {
      out.push_back(a[i++]);
    } else if (b[j]->key() < a[i]->key()) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i++]);
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + std::ptrdiff_t(i), a.end());
  out.insert(out.end(), b.begin() + std::ptrdiff_t(j), b.end());
  return out;
}

}  // namespace detail

}  // namespace bindcore
