#pragma once

// Umbrella header.

#include "ordrep/errors.hpp"
#include "ordrep/exact.hpp"
#include "ordrep/group.hpp"
#include "ordrep/gspace.hpp"
#include "ordrep/imprimitivity.hpp"
#include "ordrep/induction.hpp"
#include "ordrep/perm.hpp"
#include "ordrep/posaut.hpp"
#include "ordrep/posrep.hpp"
#include "ordrep/rational.hpp"
#include "ordrep/specfile.hpp"
#include "ordrep/structure.hpp"
#include "ordrep/verify.hpp"
