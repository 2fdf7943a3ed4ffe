/*
   Copyright 2026 The ellsurf Authors

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

#ifndef ELLSURF_ELLSURF_HPP
#define ELLSURF_ELLSURF_HPP

#include "bad_primes.hpp"
#include "charpoly.hpp"
#include "counting.hpp"
#include "cover.hpp"
#include "descriptor.hpp"
#include "errors.hpp"
#include "finite_field.hpp"
#include "integer.hpp"
#include "irreducibility.hpp"
#include "modular.hpp"
#include "number_theory.hpp"
#include "parse.hpp"
#include "pipeline.hpp"
#include "polynomial.hpp"
#include "polynomial_algorithms.hpp"
#include "registry.hpp"
#include "report.hpp"
#include "surface.hpp"

#endif
