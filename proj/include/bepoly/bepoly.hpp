/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "bepoly/rational.hpp"
#include "bepoly/unipoly.hpp"
#include "bepoly/bipoly.hpp"
#include "bepoly/difference.hpp"
#include "bepoly/sequences.hpp"
#include "bepoly/identities.hpp"
#include "bepoly/serialize.hpp"
