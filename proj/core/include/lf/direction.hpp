#pragma once

#include <optional>
#include <vector>

#include "lf/embedding.hpp"

namespace lf {

struct DirectionCertificate {
  Vec3 l;
  VertexId non_descendant = 0;
  // witness[v] = neighbour w with l.(w - v) < 0; 0 for the non-descendant.
  std::vector<VertexId> witness;
};

/// Vertices with some G-vector of negative dot with l. Throws NotGeneric.
std::vector<VertexId> descendant_set(const LinearEmbedding& e, const Vec3& l);

/// Certificate iff exactly one vertex is not a descendant. Throws NotGeneric,
/// or AssertionViolated if the vertex minimising l.q were a descendant.
std::optional<DirectionCertificate> is_descending(const LinearEmbedding& e, const Vec3& l);

/// Replays the witnesses; true iff they show exactly one non-descendant.
bool verify_certificate(const LinearEmbedding& e, const DirectionCertificate& cert);

/// One generic direction per reachable cell of the arrangement of planes
/// orthogonal to the G-vectors, deduplicated by sign vector, in a fixed order.
std::vector<Vec3> direction_candidates(const LinearEmbedding& e);

/// First candidate that is a descending direction, if any.
std::optional<DirectionCertificate> find_descending_direction(const LinearEmbedding& e);

/// x with u_i.x = -1 for all i. Throws DependentVectors.
Vec3 solve_three_inequalities(const Vec3& u1, const Vec3& u2, const Vec3& u3);

/// Positive multiple of v with coprime integer components.
Vec3 primitive(const Vec3& v);

}  // namespace lf
