#pragma once

#include "affgebra/error.hpp"
#include "affgebra/rational.hpp"
#include "affgebra/gaussian.hpp"
#include "affgebra/prime_field.hpp"
#include "affgebra/surd.hpp"
#include "affgebra/field.hpp"
#include "affgebra/matrix.hpp"
#include "affgebra/linear_system.hpp"
#include "affgebra/json_io.hpp"
#include "affgebra/random.hpp"
#include "affgebra/affine.hpp"
#include "affgebra/matrix_classes.hpp"
#include "affgebra/transforms.hpp"
#include "affgebra/identities.hpp"
#include "affgebra/verifier.hpp"
