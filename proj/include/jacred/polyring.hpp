#ifndef JACRED_POLYRING_HPP
#define JACRED_POLYRING_HPP

#include "jacred/monomial.hpp"
#include "jacred/mpoly.hpp"
#include "jacred/polyops.hpp"
#include "jacred/rational.hpp"
#include "jacred/upoly.hpp"

#endif  // JACRED_POLYRING_HPP
