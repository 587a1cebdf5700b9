#ifndef TOLREP_TOLREP_HPP_
#define TOLREP_TOLREP_HPP_

#include "algebra.hpp"
#include "binrel.hpp"
#include "corpus.hpp"
#include "decide.hpp"
#include "errors.hpp"
#include "relterms.hpp"

#endif  // TOLREP_TOLREP_HPP_
