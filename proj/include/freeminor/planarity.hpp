#pragma once

#include <optional>

#include "freeminor/graph.hpp"
#include "freeminor/minor.hpp"

namespace fm {

/// Planarity as exclusion of K5 and K3,3 minors.
bool is_planar_minor(const Graph& g);

/// Planarity by path addition over bridges (Demoucron, Malgrange and
/// Pertuiset) run on each 2-connected block, after the m <= 3n - 6 filter.
bool is_planar_fast(const Graph& g);

/// Absent iff g is planar; otherwise a verified K5 or K3,3 model.
std::optional<MinorModel> kuratowski_certificate(const Graph& g);

/// Outerplanarity as exclusion of K4 and K2,3 minors.
bool is_outerplanar(const Graph& g);

}  // namespace fm
