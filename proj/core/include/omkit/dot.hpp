#pragma once

#include <string>
#include <string_view>

#include "omkit/poset.hpp"

namespace omkit {

// Graphviz digraph of the Hasse diagram: one edge a -> b per covering pair,
// drawn bottom-up and sorted by index. With `show_involution`, adds a dashed
// undirected edge x -- x' for each pair with x < x' (by index).
std::string export_dot(const BoundedInvolutivePoset& p, std::string_view name,
                       bool show_involution = false);

}  // namespace omkit
