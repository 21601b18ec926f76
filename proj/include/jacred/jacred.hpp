#ifndef JACRED_JACRED_HPP
#define JACRED_JACRED_HPP

#include "jacred/polyring.hpp"
#include "jacred/linsolve.hpp"
#include "jacred/groebner.hpp"
#include "jacred/intersection.hpp"
#include "jacred/pair.hpp"
#include "jacred/reduction.hpp"
#include "jacred/membership.hpp"
#include "jacred/structure.hpp"
#include "jacred/textio.hpp"
#include "jacred/json_io.hpp"

#endif  // JACRED_JACRED_HPP
