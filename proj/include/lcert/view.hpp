#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcert/certificate.hpp"
#include "lcert/graph.hpp"

namespace lcert {

/// Everything a verifier may read: the induced radius-r ball around a centre
/// vertex. Local index 0 is the centre; the rest follow in BFS order.
/// Global vertex indices are deliberately absent.
struct View {
  std::vector<std::vector<std::uint32_t>> adjacency;  // local indices, sorted
  std::vector<std::uint32_t> distance;                 // from the centre
  std::vector<std::uint8_t> selected;
  std::optional<std::vector<Identifier>> ids;
  std::vector<Certificate> certs;

  std::size_t size() const { return adjacency.size(); }
  std::span<const std::uint32_t> neighbors(std::uint32_t local) const { return adjacency[local]; }
  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    const auto& list = adjacency[a];
    return std::binary_search(list.begin(), list.end(), b);
  }
  bool is_selected(std::uint32_t local) const { return selected[local] != 0; }
};

/// A view plus the global vertex behind each local index.
struct Ball {
  View view;
  std::vector<Vertex> members;
};

/// Builds the ball without certificates (view.certs left empty).
Ball extract_ball(const Instance& inst, Vertex center, std::size_t radius);
/// The ball with the certificates restricted to its vertices.
View ball(const Instance& inst, Vertex center, std::size_t radius, const Assignment& certs);

/// Centre-preserving isomorphism of two views that also matches labels,
/// certificates and identifiers (when both carry them).
bool views_isomorphic(const View& a, const View& b);

}  // namespace lcert
