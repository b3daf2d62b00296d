/* Copyright 2026 The pmkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include "pmkit/errors.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/point.hpp"
#include "pmkit/space.hpp"
#include "pmkit/core.hpp"
#include "pmkit/sequence.hpp"
#include "pmkit/analysis.hpp"
#include "pmkit/topology.hpp"
#include "pmkit/map.hpp"
#include "pmkit/fixedpoint.hpp"
#include "pmkit/random.hpp"
#include "pmkit/catalog.hpp"
#include "pmkit/facts.hpp"
#include "pmkit/properties.hpp"
#include "pmkit/json_io.hpp"
