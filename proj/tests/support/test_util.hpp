#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include "racg/io.hpp"
#include "racg/word.hpp"

namespace racg::test {

inline Word w(const PresentationGraph& g, std::string_view text) { return parse_word(g, text); }

inline NormalForm nf(const PresentationGraph& g, std::string_view text) { return normal_form(g, w(g, text)); }

inline VertexSet set(const PresentationGraph& g, std::initializer_list<std::string_view> names) {
  VertexSet out;
  for (std::string_view n : names) out.insert(g.index_of(n));
  return out;
}

/// Triangular prism: join-irreducible, one-ended, no product separator and no
/// VFS, with induced squares.
inline PresentationGraph prism() {
  return parse_graph(
      "vertices v0 v1 v2 v3 v4 v5\n"
      "edge v0 v3\nedge v0 v4\nedge v0 v5\nedge v1 v2\nedge v1 v4\n"
      "edge v1 v5\nedge v2 v3\nedge v2 v5\nedge v3 v4\n");
}

}  // namespace racg::test
