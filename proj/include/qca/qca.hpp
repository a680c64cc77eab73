#pragma once

#include "qca/errors.hpp"
#include "qca/examples.hpp"
#include "qca/exgraph.hpp"
#include "qca/matrices.hpp"
#include "qca/ncalg.hpp"
#include "qca/qscalar.hpp"
#include "qca/seed.hpp"
#include "qca/seed_io.hpp"
#include "qca/torus.hpp"
