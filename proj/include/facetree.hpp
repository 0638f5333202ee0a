#pragma once

// Umbrella header.
#include "facetree/error.hpp"
#include "facetree/multigraph.hpp"
#include "facetree/plane_graph.hpp"
#include "facetree/constructions.hpp"
#include "facetree/colorings.hpp"
#include "facetree/hamiltonian.hpp"
#include "facetree/atrail.hpp"
#include "facetree/face_tree.hpp"
#include "facetree/parity.hpp"
#include "facetree/equivalences.hpp"
#include "facetree/reductions.hpp"
#include "facetree/io.hpp"
#include "facetree/pipelines.hpp"
#include "facetree/fixtures.hpp"
