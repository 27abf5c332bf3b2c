#pragma once

#include "ogplab/box_probability.hpp"
#include "ogplab/covariance.hpp"
#include "ogplab/discrepancy.hpp"
#include "ogplab/errors.hpp"
#include "ogplab/experiment.hpp"
#include "ogplab/instance.hpp"
#include "ogplab/instance_io.hpp"
#include "ogplab/landscape.hpp"
#include "ogplab/online.hpp"
#include "ogplab/report.hpp"
#include "ogplab/rng.hpp"
#include "ogplab/sign_vector.hpp"
#include "ogplab/special.hpp"
#include "ogplab/theory.hpp"
