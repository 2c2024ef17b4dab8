// Umbrella header.
#pragma once

#include "elimpoly/canonical.hpp"
#include "elimpoly/families.hpp"
#include "elimpoly/genfunc.hpp"
#include "elimpoly/graph_io.hpp"
#include "elimpoly/multigraph.hpp"
#include "elimpoly/poly.hpp"
#include "elimpoly/poly_json.hpp"
#include "elimpoly/series.hpp"
#include "elimpoly/specializations.hpp"
#include "elimpoly/xi_engine.hpp"
