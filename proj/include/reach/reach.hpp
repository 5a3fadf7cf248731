#pragma once

#include "reach/certificate.hpp"
#include "reach/determinant.hpp"
#include "reach/error.hpp"
#include "reach/linalg.hpp"
#include "reach/matrix.hpp"
#include "reach/polynomial.hpp"
#include "reach/rational.hpp"
#include "reach/recurrence.hpp"
#include "reach/random_spec.hpp"
#include "reach/spec_io.hpp"
#include "reach/verify.hpp"
