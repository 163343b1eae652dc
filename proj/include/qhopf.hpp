#pragma once

#include "qhopf/cyclo.hpp"
#include "qhopf/cyclotomic.hpp"
#include "qhopf/error.hpp"
#include "qhopf/haar.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/ideal.hpp"
#include "qhopf/interval.hpp"
#include "qhopf/io.hpp"
#include "qhopf/matrix.hpp"
#include "qhopf/nc_poly.hpp"
#include "qhopf/quad_ring.hpp"
#include "qhopf/rational.hpp"
#include "qhopf/report.hpp"
