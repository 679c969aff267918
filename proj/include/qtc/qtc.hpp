// Copyright 2026 The qtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qtc/correlation.hpp"
#include "qtc/gamma.hpp"
#include "qtc/io.hpp"
#include "qtc/operators.hpp"
#include "qtc/pauli_parse.hpp"
#include "qtc/random.hpp"
#include "qtc/simulate.hpp"
#include "qtc/subspace.hpp"
#include "qtc/tolerances.hpp"
