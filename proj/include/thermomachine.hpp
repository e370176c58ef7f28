// Copyright 2026 The thermomachine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include "thermomachine/physics.hpp"
#include "thermomachine/dynamics.hpp"
#include "thermomachine/numerics.hpp"
#include "thermomachine/metrology.hpp"
#include "thermomachine/estimation.hpp"
#include "thermomachine/heat.hpp"
#include "thermomachine/table.hpp"
#include "thermomachine/verify.hpp"
#include "thermomachine/experiments.hpp"
