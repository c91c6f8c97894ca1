#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace mdirichlet::detail {

/// Per-call-site cache keyed by Key. Concurrent readers share the lock;
/// the first writer for a key inserts while later racers discard their
/// duplicate build. Values live until process exit, so returned references
/// stay valid.
template <class Key, class Value, class Builder>
const Value& memoized(const Key& key, Builder&& build) {
  static std::shared_mutex mu;
  static std::map<Key, std::unique_ptr<const Value>> cache;
  {
    std::shared_lock<std::shared_mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const Value>(build());
  std::unique_lock<std::shared_mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(built));
  return *it->second;
}

}  // namespace mdirichlet::detail
