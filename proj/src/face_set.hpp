#pragma once

#include <cstddef>
#include <unordered_map>
#include <unordered_set>

#include "gconj/complex.hpp"

namespace gconj {

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : f) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using FaceSet = std::unordered_set<Face, FaceHash>;

template <typename T>
using FaceMap = std::unordered_map<Face, T, FaceHash>;

}  // namespace gconj
