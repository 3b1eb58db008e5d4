#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace splitsum {

// Memoized post-order evaluation over an implicit DAG, driven by an explicit
// stack so that deep game forms never exhaust the call stack.
//
//   resolve(key)            -> std::optional<Value>: memo hit or base case.
//   expand(key, children&)  -> appends the keys the value depends on.
//   combine(key, values)    -> computes (and normally memoizes) the value from
//                              the children's values, in expansion order.
//
// The graph must be acyclic; combine is called exactly once per unresolved key
// reached from the root, as long as combine stores its result where resolve
// can find it.
template <class Key, class Value, class Resolve, class Expand, class Combine>
Value evaluate_postorder(const Key& root, Resolve&& resolve, Expand&& expand,
                         Combine&& combine) {
  if (std::optional<Value> hit = resolve(root)) return *std::move(hit);

  struct Frame {
    Key key;
    std::vector<Key> children;
    std::vector<Value> values;
    std::size_t next = 0;
  };

  std::vector<Frame> stack;
  auto push = [&](const Key& key) {
    Frame frame{key, {}, {}, 0};
    expand(frame.key, frame.children);
    frame.values.reserve(frame.children.size());
    stack.push_back(std::move(frame));
  };
  push(root);

  while (true) {
    Frame& top = stack.back();
    if (top.next < top.children.size()) {
      const Key& child = top.children[top.next];
      if (std::optional<Value> hit = resolve(child)) {
        top.values.push_back(*std::move(hit));
        ++top.next;
      } else {
        Key copy = child;  // push may reallocate the stack
        push(copy);
      }
      continue;
    }

    Value result = combine(top.key, std::span<const Value>(top.values));
    stack.pop_back();
    if (stack.empty()) return result;
    stack.back().values.push_back(std::move(result));
    ++stack.back().next;
  }
}

}  // namespace splitsum
