#ifndef MDO_MDO_HPP
#define MDO_MDO_HPP

#include "error.hpp"
#include "rational.hpp"
#include "ratpoly.hpp"
#include "forcing.hpp"
#include "parse.hpp"
#include "matrix.hpp"
#include "pinv.hpp"
#include "opspace.hpp"
#include "solver.hpp"
#include "render.hpp"
#include "cli.hpp"

#endif
