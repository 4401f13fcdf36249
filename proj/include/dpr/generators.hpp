#pragma once

#include "dpr/linkage.hpp"

#include <random>

namespace dpr {

/// An instance with a source and a target linkage.
struct GeneratedInstance {
    Instance instance;
    Linkage P;
    Linkage Q;
};

/**
 * @brief Cylindrical grid: @p rows concentric cycles of @p cols vertices
 * joined by radial spokes. Ring 0 bounds S, ring rows-1 bounds T; s_i and
 * t_i sit on column floor(i*cols/k). A linkage of winding w turns every
 * path w times around the annulus as a staircase, so that
 * mu(P, Q) = winding_Q - winding_P.
 * @throws Error TooFewColumns when cols < 2k; InvalidInput when a winding
 *         does not fit.
 */
GeneratedInstance gen_cylinder(int rows, int cols, int k, int winding_P, int winding_Q);

/// Staircase linkage of the given winding on a cylinder made by gen_cylinder.
Linkage cylinder_linkage(const Instance& cyl, int rows, int cols, int winding);

/// Name of the cylinder vertex on ring r, column c.
std::string cylinder_name(int r, int c);

/**
 * @brief Two nested diamonds: hubs a and b both adjacent to s1, t1, s2, t2.
 * The only linkages are (s1 a t1, s2 b t2) and (s1 b t1, s2 a t2); they are
 * not adjacent although every crossing is a touch.
 */
GeneratedInstance gen_nested_diamonds();

/**
 * @brief Random connected plane graph on @p n vertices built by inserting
 * vertices into faces and adding chords; every step is re-validated.
 */
PlaneGraph random_plane_graph(std::mt19937_64& rng, int n, int extra_chords);

/// Random one-face instance with k pairs on a common face and two random
/// linkages; nullopt when the draw has no linkage.
std::optional<GeneratedInstance> random_one_face(std::mt19937_64& rng, int n, int k);

/// Random planar s-t instance with two random s-t linkages of size k.
std::optional<GeneratedInstance> random_st(std::mt19937_64& rng, int n, int k);

/// Random s-t instance: a cylinder, optionally thinned, with s joined to
/// k or k+1 vertices of the inner ring and t to k or k+1 of the outer ring.
std::optional<GeneratedInstance> random_st_cylinder(std::mt19937_64& rng, int rows, int cols, int k, bool thin);

/// Random two-face instance: a cylinder, optionally thinned by deleting
/// spokes and inner vertices, with two random linkages.
std::optional<GeneratedInstance> random_two_face(std::mt19937_64& rng, int rows, int cols, int k, bool thin);

} // namespace dpr
