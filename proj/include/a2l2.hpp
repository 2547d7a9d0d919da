#pragma once

#include "a2l2/scalar.hpp"
#include "a2l2/linalg.hpp"
#include "a2l2/liealg.hpp"
#include "a2l2/pbw.hpp"
#include "a2l2/cartan_poly.hpp"
#include "a2l2/envelope.hpp"
#include "a2l2/vacuum.hpp"
#include "a2l2/twzhu.hpp"
#include "a2l2/affroots.hpp"
#include "a2l2/classify.hpp"
