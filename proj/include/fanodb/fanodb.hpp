/*
   Copyright 2026 The fanodb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FANODB_FANODB_HPP
#define FANODB_FANODB_HPP

#include "fanodb/arith.hpp"
#include "fanodb/bounds.hpp"
#include "fanodb/database.hpp"
#include "fanodb/errors.hpp"
#include "fanodb/fixtures.hpp"
#include "fanodb/hilbert.hpp"
#include "fanodb/oracle.hpp"
#include "fanodb/parallel.hpp"
#include "fanodb/polynomial.hpp"
#include "fanodb/power_series.hpp"
#include "fanodb/rational_function.hpp"
#include "fanodb/singularity.hpp"
#include "fanodb/verify.hpp"
#include "fanodb/weights.hpp"

#endif  // FANODB_FANODB_HPP
