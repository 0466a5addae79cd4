#ifndef QCDHOPF_QCDHOPF_HPP
#define QCDHOPF_QCDHOPF_HPP

#include "rational.hpp"
#include "graph.hpp"
#include "graph_json.hpp"
#include "canonical.hpp"
#include "enumerate.hpp"
#include "subgraph.hpp"
#include "hopf.hpp"
#include "green.hpp"
#include "polynomial.hpp"
#include "laurent.hpp"
#include "renorm.hpp"
#include "coupling.hpp"
#include "quadratic.hpp"
#include "brst.hpp"

#endif  // QCDHOPF_QCDHOPF_HPP
