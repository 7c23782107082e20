#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lf/diagram.hpp"
#include "lf/embedding.hpp"

namespace lf {

using Fixture = std::variant<LinearEmbedding, Diagram>;

/// Names: tetrahedron, fig3:<n>, fig4, fig5, theta, trefoil.
/// Throws Error(UnknownFixture).
Fixture fixture(std::string_view name);
std::vector<std::string> fixture_names();

LinearEmbedding tetrahedron_fixture();
/// K_n near one corner of a knotted hexagon, sharing that corner; the other
/// five hexagon corners lie across a plane from the K_n part.
LinearEmbedding fig3_fixture(int n);
/// K_4 on 1..4 with a knotted arc 3-5-6-7-8-1 inside the tetrahedron.
LinearEmbedding fig4_fixture();
/// Cubic graph on 8 vertices whose hexagon 1-2-3-4-5-6 is knotted.
LinearEmbedding fig5_fixture();
/// Two-loop bouquet whose loops are pairwise unknotted and unlinked.
Diagram theta_fixture();
/// Trefoil as a loop at one vertex, three crossings.
Diagram trefoil_fixture();

extern const char* const kThetaSpec;
extern const char* const kTrefoilSpec;

/// The knotted hexagon used by the fig3, fig4 and fig5 fixtures.
std::vector<Vec3> knotted_hexagon();

}  // namespace lf
