// Copyright 2026 The netbell Authors
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

#include "netbell/assembly.hpp"
#include "netbell/audit.hpp"
#include "netbell/bounds.hpp"
#include "netbell/errors.hpp"
#include "netbell/functionals.hpp"
#include "netbell/linalg.hpp"
#include "netbell/network.hpp"
#include "netbell/noise.hpp"
#include "netbell/observable_io.hpp"
#include "netbell/scenario.hpp"
#include "netbell/schemes.hpp"
#include "netbell/serialize.hpp"
#include "netbell/sos.hpp"
