#pragma once

#include "hardlef/algebra_file.hpp"
#include "hardlef/catalog.hpp"
#include "hardlef/cohomology.hpp"
#include "hardlef/contact.hpp"
#include "hardlef/dossier.hpp"
#include "hardlef/errors.hpp"
#include "hardlef/form.hpp"
#include "hardlef/lefschetz.hpp"
#include "hardlef/lie_algebra.hpp"
#include "hardlef/matrix.hpp"
#include "hardlef/polyform.hpp"
#include "hardlef/polynomial.hpp"
#include "hardlef/rational.hpp"
#include "hardlef/subspace.hpp"
