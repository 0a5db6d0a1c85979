#ifndef HARMPOLY_HARMPOLY_HPP
#define HARMPOLY_HARMPOLY_HPP

#include "numeric.hpp"
#include "graph.hpp"
#include "canonical.hpp"
#include "polynomial.hpp"
#include "indices.hpp"
#include "families.hpp"
#include "graph6.hpp"
#include "edge_list.hpp"
#include "enumerate.hpp"
#include "verifier.hpp"
#include "report_json.hpp"

#endif
