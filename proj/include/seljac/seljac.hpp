#pragma once

#include "seljac/curve.hpp"
#include "seljac/field.hpp"
#include "seljac/json_io.hpp"
#include "seljac/linalg.hpp"
#include "seljac/moebius.hpp"
#include "seljac/numtheory.hpp"
#include "seljac/picard.hpp"
#include "seljac/poly.hpp"
#include "seljac/rr_oracle.hpp"
#include "seljac/series.hpp"
#include "seljac/torsion.hpp"
#include "seljac/zeta.hpp"
